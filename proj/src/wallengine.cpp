#include "fanoku/wallengine.hpp"

#include "fanoku/error.hpp"

#include <algorithm>
#include <thread>

namespace fanoku {

namespace {

bool lex_less(const TruncQ& x, const TruncQ& y) {
    for (int k = 0; k < 3; ++k) {
        if (x(k) != y(k)) return x(k) < y(k);
    }
    return false;
}

/// Smallest rational r with r >= sqrt(x), x >= 0 (not necessarily tight).
Rational sqrt_upper(const Rational& x) {
    if (auto r = exact_sqrt(x)) return *r;
    const Integer n = numerator(x);
    const Integer d = denominator(x);
    return Rational(Integer(mp::sqrt(Integer(n * d))) + 1, d);
}

struct Frame {
    TruncQ v;   // presentation with ch1^beta0 > 0
    TruncQ V;   // twisted
    Rational delta;
};

Frame make_frame(const FanoQ& X, const TruncQ& v, const Rational& beta0) {
    if (!lattice_check(X, v)) throw InvalidInput("class is not in the lattice");
    Frame f{v, twist(v, beta0), discriminant(v)};
    if (f.V(1) == 0) throw InvalidInput("ch1^beta0(v) = 0: v has no slope on the line beta = beta0");
    if (f.V(1) < 0) {
        f.v = -f.v;
        f.V = -f.V;
    }
    return f;
}

/// Values of ch1^beta0(w) over the lattice: multiples of g in [0, V1].
std::vector<Rational> strata_values(const FanoQ& X, const Rational& beta0, const Rational& V1) {
    const auto& den = X.lattice_denominators();
    const Rational g = rational_gcd(Rational(1) / den[1], Rational(beta0 / den[0]));
    std::vector<Rational> out;
    const Integer top = floor(Rational(V1 / g));
    for (Integer k = 0; k <= top; ++k) out.emplace_back(Rational(k) * g);
    return out;
}

Rational c_grid(const FanoQ& X, const Rational& beta0) {
    const auto& den = X.lattice_denominators();
    Rational g = rational_gcd(Rational(1) / den[2], Rational(beta0 / den[1]));
    return rational_gcd(g, Rational(beta0 * beta0 / (Rational(2) * den[0])));
}

std::optional<Rational> crossing_alpha2(const TruncQ& V, const TruncQ& W) {
    const Rational p = (V(0) * W(1) - W(0) * V(1)) / Rational(2);
    const Rational q = V(2) * W(1) - W(2) * V(1);
    if (p == 0) return std::nullopt;
    return q / p;
}

class StratumSearch {
public:
    StratumSearch(const FanoQ& X, const Frame& f, const Rational& beta0, const Rational& alpha2_max)
        : X_(X), f_(f), beta0_(beta0), M_(alpha2_max), gc_(c_grid(X, beta0)) {}

    void run(const Rational& b, std::vector<TruncQ>& found) const {
        const TruncQ& V = f_.V;
        const Rational lambda = b / V(1);
        const Rational L = lambda * (Rational(1) - lambda) * f_.delta;
        if (L < 0) return;
        // w = lambda V + kappa (1, 0, t/2), gamma = c - lambda V2 = kappa t / 2.
        // Delta sandwich: kappa^2 t <= lambda (1 - lambda) Delta(v) = L, hence
        // 2 |kappa gamma| <= L; with t <= M also |kappa| >= 2 |gamma| / M.
        const Rational centre = lambda * V(2);
        const Rational gmax = sqrt_upper(M_ * L / Rational(4));
        const Integer k_lo = ceil(Rational((centre - gmax) / gc_));
        const Integer k_hi = floor(Rational((centre + gmax) / gc_));
        for (Integer k = k_lo; k <= k_hi; ++k) {
            const Rational c = Rational(k) * gc_;
            const Rational gamma = c - centre;
            if (gamma == 0) {
                scan_a(b, c, lambda * V(0), lambda * V(0), found);  // proportional class
                boundary_family(b, c, lambda, found);
                continue;
            }
            if (gamma * gamma * Rational(4) > M_ * L) continue;
            const Rational ag = mp::abs(gamma);
            const Rational kmin = Rational(2) * ag / M_;
            const Rational kmax = L / (Rational(2) * ag);
            if (kmin > kmax) continue;
            if (gamma > 0) scan_a(b, c, lambda * V(0) + kmin, lambda * V(0) + kmax, found);
            else scan_a(b, c, lambda * V(0) - kmax, lambda * V(0) - kmin, found);
        }
    }

private:
    /// alpha^2 = 0 solutions: c = lambda V2 and kappa bounded by the two
    /// Delta sandwiches. Interior strata with V2 != 0 only.
    void boundary_family(const Rational& b, const Rational& c, const Rational& lambda,
                         std::vector<TruncQ>& found) const {
        const TruncQ& V = f_.V;
        if (!(b > 0 && b < V(1)) || V(2) == 0) return;
        const Rational D = f_.delta;
        const Rational mu = Rational(1) - lambda;
        // lambda^2 D - 2 lambda V2 kappa in [0, D]; mu^2 D + 2 mu V2 kappa in [0, D].
        Rational lo1 = (lambda * lambda * D) / (Rational(2) * lambda * V(2));
        Rational hi1 = (lambda * lambda * D - D) / (Rational(2) * lambda * V(2));
        Rational lo2 = (-mu * mu * D) / (Rational(2) * mu * V(2));
        Rational hi2 = (D - mu * mu * D) / (Rational(2) * mu * V(2));
        if (lo1 > hi1) std::swap(lo1, hi1);
        if (lo2 > hi2) std::swap(lo2, hi2);
        const Rational lo = std::max(lo1, lo2);
        const Rational hi = std::min(hi1, hi2);
        if (lo > hi) return;
        scan_a(b, c, lambda * V(0) + lo, lambda * V(0) + hi, found);
    }

    void scan_a(const Rational& b, const Rational& c, const Rational& a_lo, const Rational& a_hi,
                std::vector<TruncQ>& found) const {
        const Rational den0 = X_.lattice_denominators()[0];
        const Integer k_lo = ceil(Rational(a_lo * den0));
        const Integer k_hi = floor(Rational(a_hi * den0));
        for (Integer k = k_lo; k <= k_hi; ++k) {
            const TruncQ W = make_trunc<Rational>(Rational(k) / den0, b, c);
            const TruncQ w = twist(W, Rational(-beta0_));
            if (check_candidate(X_, f_.v, w, beta0_, M_)) found.push_back(w);
        }
    }

    const FanoQ& X_;
    const Frame& f_;
    Rational beta0_;
    Rational M_;
    Rational gc_;
};

}  // namespace

std::string to_string(WallKind kind) {
    switch (kind) {
        case WallKind::semicircle: return "semicircle";
        case WallKind::vertical: return "vertical";
        case WallKind::everywhere: return "everywhere";
    }
    return "?";
}

std::optional<Wall> numerical_wall(const FanoQ&, const TruncQ& v, const TruncQ& w) {
    // Re Z(v) Im Z(w) - Re Z(w) Im Z(v) = d^2 (A/2 (alpha^2 + beta^2) + B beta + C).
    const Rational A = v(0) * w(1) - v(1) * w(0);
    const Rational B = v(2) * w(0) - v(0) * w(2);
    const Rational C = v(1) * w(2) - v(2) * w(1);
    Wall wall;
    wall.v = v;
    wall.w = w;
    if (A != 0) {
        wall.kind = WallKind::semicircle;
        wall.center_beta = -B / A;
        wall.radius2 = (B * B - Rational(2) * A * C) / (A * A);
        if (wall.radius2 < 0) return std::nullopt;
        return wall;
    }
    if (B != 0) {
        wall.kind = WallKind::vertical;
        wall.center_beta = -C / B;
        return wall;
    }
    if (C != 0) return std::nullopt;
    wall.kind = WallKind::everywhere;
    return wall;
}

Wall semicircle_C(const FanoQ& X) {
    const Rational d = X.d();
    Wall wall;
    wall.kind = WallKind::semicircle;
    wall.center_beta = -(d + 2) / (Rational(2) * d);
    const Rational r = (d - 2) / (Rational(2) * d);
    wall.radius2 = r * r;
    wall.v = make_trunc<Rational>(Rational(-1), Rational(0), Rational(1) / d);  // I_l[1]
    wall.w = truncate(chern_line_bundle(X, -1));                                 // O(-H)[2]
    return wall;
}

TiltQ wall_apex(const Wall& wall) {
    if (wall.kind != WallKind::semicircle) throw InvalidInput("only semicircles have an apex");
    return {wall.radius2, wall.center_beta};
}

bool check_candidate(const FanoQ& X, const TruncQ& v, const TruncQ& w, const Rational& beta0,
                     const Rational& alpha2_max) {
    const TruncQ V = twist(v, beta0);
    const TruncQ W = twist(w, beta0);
    if (!(V(1) > 0)) return false;
    if (w.isZero() || w == v) return false;
    if (!lattice_check(X, w)) return false;
    const Rational& b = W(1);
    if (b < 0 || b > V(1)) return false;
    const Rational dv = discriminant(v);
    const Rational dw = discriminant(w);
    const Rational dr = discriminant(TruncQ(v - w));
    if (dw < 0 || dw > dv || dr < 0 || dr > dv) return false;
    // cross(Z_t(v), Z_t(w)) = p t - q
    const Rational p = (V(0) * b - W(0) * V(1)) / Rational(2);
    const Rational q = V(2) * b - W(2) * V(1);
    if (p == 0) return q == 0;
    const Rational t = q / p;
    if (t > 0) return t <= alpha2_max;
    return t == 0 && b > 0 && b < V(1) && V(2) != 0;
}

std::vector<Candidate> enumerate_candidates(const FanoQ& X, const TruncQ& v, const Rational& beta0,
                                            const Rational& alpha2_max, const EnumerationOptions& opts) {
    if (!(alpha2_max > 0)) throw InvalidInput("alpha2_max must be positive");
    const Frame f = make_frame(X, v, beta0);
    const std::vector<Rational> strata = strata_values(X, beta0, f.V(1));
    const StratumSearch search(X, f, beta0, alpha2_max);

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(strata.size()));
    std::vector<std::vector<TruncQ>> partial(std::max(1u, threads));
    if (threads <= 1) {
        for (const Rational& b : strata) search.run(b, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < strata.size(); i += threads) search.run(strata[i], partial[t]);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<TruncQ> reps;
    for (const auto& part : partial) {
        for (const TruncQ& w : part) {
            const TruncQ rest = f.v - w;
            reps.push_back(lex_less(rest, w) ? rest : w);
        }
    }
    std::sort(reps.begin(), reps.end(), lex_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    std::vector<Candidate> out;
    out.reserve(reps.size());
    for (const TruncQ& w : reps) {
        Candidate c;
        c.w = w;
        auto wall = numerical_wall(X, f.v, w);
        if (!wall) throw std::logic_error("candidate without a numerical wall");
        c.wall = *wall;
        c.delta_w = discriminant(w);
        c.delta_rest = discriminant(TruncQ(f.v - w));
        const Rational b = twist(w, beta0)(1);
        c.im_ok = b > 0 && b < f.V(1);
        c.alpha2 = crossing_alpha2(f.V, twist(w, beta0));
        c.alpha_pos = !c.alpha2 || *c.alpha2 > 0;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Wall> walls_in_region(const FanoQ& X, const TruncQ& v, const Rational& beta_lo, const Rational& beta_hi,
                                  const Rational& alpha2_max, const Rational& step) {
    if (!(step > 0)) throw InvalidInput("step must be positive");
    if (beta_hi < beta_lo) throw InvalidInput("empty beta interval");
    std::vector<Wall> walls;
    for (Rational beta0 = beta_lo; beta0 <= beta_hi; beta0 += step) {
        if (v(1) - beta0 * v(0) == 0) continue;
        for (const Candidate& c : enumerate_candidates(X, v, beta0, alpha2_max)) {
            if (!c.alpha_pos || c.wall.kind == WallKind::everywhere || c.wall.degenerate()) continue;
            const bool seen = std::any_of(walls.begin(), walls.end(), [&](const Wall& w) { return w.same_locus(c.wall); });
            if (!seen) {
                Wall w = c.wall;
                w.v = v;
                walls.push_back(std::move(w));
            }
        }
    }
    std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
        if (a.center_beta != b.center_beta) return a.center_beta < b.center_beta;
        if (a.radius2 != b.radius2) return a.radius2 < b.radius2;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    return walls;
}

bool nesting_check(const std::vector<Wall>& walls) {
    for (std::size_t i = 0; i < walls.size(); ++i) {
        for (std::size_t j = i + 1; j < walls.size(); ++j) {
            const TruncQ& a = walls[i].v;
            const TruncQ& b = walls[j].v;
            if (!a.cross(b).isZero()) throw InvalidInput("nesting_check needs walls of a common class");
        }
    }
    for (std::size_t i = 0; i < walls.size(); ++i) {
        for (std::size_t j = i + 1; j < walls.size(); ++j) {
            const Wall& x = walls[i];
            const Wall& y = walls[j];
            if (x.kind == WallKind::everywhere || y.kind == WallKind::everywhere) continue;
            if (x.kind == WallKind::vertical && y.kind == WallKind::vertical) continue;
            if (x.kind == WallKind::vertical || y.kind == WallKind::vertical) {
                const Wall& line = x.kind == WallKind::vertical ? x : y;
                const Wall& circ = x.kind == WallKind::vertical ? y : x;
                const Rational off = line.center_beta - circ.center_beta;
                if (off * off < circ.radius2) return false;
                continue;
            }
            // circles cross iff |r1 - r2| < delta < r1 + r2
            const Rational delta = x.center_beta - y.center_beta;
            const Rational s = delta * delta - x.radius2 - y.radius2;
            if (s * s < Rational(4) * x.radius2 * y.radius2) return false;
        }
    }
    return true;
}

DecompositionReport verify_decomposition(const FanoQ& X, const TruncQ& v, const std::vector<TruncQ>& parts,
                                         const TiltQ& pt) {
    TruncQ sum = TruncQ::Zero();
    for (const TruncQ& p : parts) sum += p;
    if (sum != v) throw InvalidInput("parts do not sum to v");
    DecompositionReport rep;
    const Rational dv = discriminant(v);
    std::vector<ExactComplex<Rational>> charges{charge(X, pt, v)};
    rep.lattice_ok = true;
    rep.delta_ok = true;
    for (const TruncQ& p : parts) {
        PartCheck c;
        c.w = p;
        c.charge = charge(X, pt, p);
        c.lattice = lattice_check(X, p);
        c.delta = discriminant(p);
        c.delta_ok = c.delta >= 0 && c.delta <= dv;
        rep.lattice_ok = rep.lattice_ok && c.lattice;
        rep.delta_ok = rep.delta_ok && c.delta_ok;
        charges.push_back(c.charge);
        rep.parts.push_back(std::move(c));
    }
    rep.slopes_equal = true;
    for (std::size_t i = 0; i < charges.size(); ++i)
        for (std::size_t j = i + 1; j < charges.size(); ++j)
            if (cross(charges[i], charges[j]) != 0) rep.slopes_equal = false;
    rep.consistent = rep.slopes_equal && rep.lattice_ok && rep.delta_ok;
    return rep;
}

}  // namespace fanoku
