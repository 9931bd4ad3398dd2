#pragma once

// Reference implementations used only by tests. They avoid the library's
// internal helpers and compute from first principles.

#include "fanoku/lattice.hpp"
#include "fanoku/tiltplane.hpp"
#include "fanoku/wallengine.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

namespace oracle {

using fanoku::Rational;
using Q4 = std::array<Rational, 4>;

/// chi(O_X(t)) on an index-two Fano threefold of degree d.
inline Rational chi_line(int d, long t) {
    return Rational(t + 1) * (Rational(d * t * (t + 2), 6) + 1);
}

/// chi(E, F) expanded by hand: d times the H^3 coefficient of ch(E)^v ch(F) td.
inline Rational chi(int d, const Q4& e, const Q4& f) {
    const Q4 ev{e[0], -e[1], e[2], -e[3]};
    const Q4 td{Rational(1), Rational(1), Rational(1, 3) + Rational(1, d), Rational(1, d)};
    Rational top = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) top += ev[i] * f[j] * td[3 - i - j];
    return Rational(d) * top;
}

inline Q4 to_q4(const fanoku::ChernCharacter<Rational>& c) { return {c(0), c(1), c(2), c(3)}; }

/// Random class on the lattice Z + Z H + (1/2d) Z H^2 + (1/6d) Z H^3.
inline fanoku::ChernCharacter<Rational> random_lattice_class(std::mt19937_64& rng, int d, int span = 6) {
    std::uniform_int_distribution<int> u(-span, span);
    std::uniform_int_distribution<int> u2(-6 * span, 6 * span);
    return fanoku::make_chern<Rational>(Rational(u(rng)), Rational(u(rng)), Rational(u2(rng), 2 * d),
                                        Rational(u2(rng), 6 * d));
}

inline bool lex_less(const fanoku::TruncQ& x, const fanoku::TruncQ& y) {
    for (int k = 0; k < 3; ++k)
        if (x(k) != y(k)) return x(k) < y(k);
    return false;
}

inline Rational disc(const fanoku::TruncQ& w) { return w(1) * w(1) - 2 * w(0) * w(2); }

/// Brute-force wall scan along beta = beta0 for v with ch1^beta0(v) > 0 and
/// rank(v) != 0. Ranks run over [-rank_box, rank_box]; for each (c0, c1) the
/// discriminant bounds on w and v - w pin c2 to a finite interval, which is
/// scanned on (1/c2_den) Z. Slope equality is solved from the charge at
/// alpha^2 = 0 and alpha^2 = 1. Returns canonical representatives, sorted.
struct ScanResult {
    std::vector<fanoku::TruncQ> classes;
    long max_abs_rank = 0;
};

inline ScanResult brute_force_walls(const fanoku::FanoQ& X, const fanoku::TruncQ& v, const Rational& beta0,
                                    const Rational& alpha2_max, long rank_box, long c2_den) {
    using fanoku::TruncQ;
    const Rational V1 = v(1) - beta0 * v(0);
    const Rational dv = disc(v);
    ScanResult out;
    if (dv < 0) return out;
    // interval of c2 with 0 <= c1^2 - 2 r c2 <= dv, r != 0
    const auto c2_window = [&](const Rational& r, const Rational& c1, Rational& lo, Rational& hi) {
        Rational a = (c1 * c1 - dv) / (2 * r);
        Rational b = (c1 * c1) / (2 * r);
        if (a > b) std::swap(a, b);
        lo = std::max(lo, a);
        hi = std::min(hi, b);
    };
    for (long c0 = -rank_box; c0 <= rank_box; ++c0) {
        const Rational r(c0);
        const Rational rr = v(0) - r;
        // 0 <= c1 - beta0 c0 <= V1
        const auto c1_lo = fanoku::ceil(Rational(beta0 * r));
        const auto c1_hi = fanoku::floor(Rational(V1 + beta0 * r));
        for (auto c1i = c1_lo; c1i <= c1_hi; ++c1i) {
            const Rational c1(c1i);
            Rational lo = -Rational(1000000), hi = Rational(1000000);
            if (c0 != 0) c2_window(r, c1, lo, hi);
            if (rr != 0) {
                // window for the c2 of v - w, mapped back to w
                Rational rlo = -Rational(1000000), rhi = Rational(1000000);
                c2_window(rr, v(1) - c1, rlo, rhi);
                lo = std::max(lo, Rational(v(2) - rhi));
                hi = std::min(hi, Rational(v(2) - rlo));
            }
            if (c0 == 0 && rr == 0) continue;
            const auto k_lo = fanoku::ceil(Rational(lo * c2_den));
            const auto k_hi = fanoku::floor(Rational(hi * c2_den));
            for (auto k = k_lo; k <= k_hi; ++k) {
                const TruncQ w = fanoku::make_trunc<Rational>(r, c1, Rational(k) / c2_den);
                if (w.isZero() || w == v) continue;
                if (!fanoku::lattice_check(X, w)) continue;
                const Rational dw = disc(w), dr = disc(TruncQ(v - w));
                if (dw < 0 || dw > dv || dr < 0 || dr > dv) continue;
                const auto f = [&](const Rational& a2) {
                    const fanoku::TiltQ pt{a2, beta0};
                    return fanoku::cross(fanoku::charge(X, pt, v), fanoku::charge(X, pt, w));
                };
                const Rational f0 = f(Rational(0));
                const Rational m = f(Rational(1)) - f0;
                bool ok;
                if (m == 0) {
                    ok = f0 == 0;
                } else {
                    const Rational t = -f0 / m;
                    ok = t > 0 && t <= alpha2_max;
                }
                if (!ok) continue;
                const TruncQ rest = v - w;
                out.classes.push_back(lex_less(rest, w) ? rest : w);
                out.max_abs_rank = std::max<long>(out.max_abs_rank, std::abs(c0));
            }
        }
    }
    std::sort(out.classes.begin(), out.classes.end(), lex_less);
    out.classes.erase(std::unique(out.classes.begin(), out.classes.end()), out.classes.end());
    return out;
}

/// Engine output restricted to walls met at some alpha^2 in (0, alpha2_max].
inline std::vector<fanoku::TruncQ> engine_classes(const std::vector<fanoku::Candidate>& cands) {
    std::vector<fanoku::TruncQ> out;
    for (const auto& c : cands)
        if (c.alpha_pos) out.push_back(c.w);
    return out;
}

/// Random small lattice class v with rank != 0, ch1^beta0(v) > 0, Delta(v) >= 0.
inline fanoku::TruncQ random_wall_class(std::mt19937_64& rng, int d, const Rational& beta0) {
    std::uniform_int_distribution<int> r(1, 3), c1(-3, 3), c2(-6 * d, 3 * d);
    for (;;) {
        fanoku::TruncQ v = fanoku::make_trunc<Rational>(Rational(r(rng)), Rational(c1(rng)), Rational(c2(rng), 2 * d));
        if (std::uniform_int_distribution<int>(0, 1)(rng)) v = -v;
        const Rational V1 = v(1) - beta0 * v(0);
        if (V1 == 0 || disc(v) < 0) continue;
        if (V1 < 0) v = -v;
        return v;
    }
}

}  // namespace oracle
