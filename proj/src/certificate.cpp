#include "fanoku/error.hpp"
#include "fanoku/wallengine.hpp"

namespace fanoku {

bool Interval::empty() const {
    if (!lo || !hi) return false;
    if (*lo < *hi) return false;
    if (*lo > *hi) return true;
    return lo_open || hi_open;
}

Interval Interval::intersect(const Interval& other) const {
    Interval out = *this;
    if (other.lo && (!out.lo || *other.lo > *out.lo || (*other.lo == *out.lo && other.lo_open))) {
        out.lo = other.lo;
        out.lo_open = other.lo_open;
    }
    if (other.hi && (!out.hi || *other.hi < *out.hi || (*other.hi == *out.hi && other.hi_open))) {
        out.hi = other.hi;
        out.hi_open = other.hi_open;
    }
    return out;
}

std::string Interval::str() const {
    std::string s = lo ? (lo_open ? "(" : "[") + to_string(*lo) : "(-inf";
    s += ", ";
    s += hi ? to_string(*hi) + (hi_open ? ")" : "]") : "inf)";
    return s;
}

std::string to_string(Verdict verdict) { return verdict == Verdict::no_wall ? "no-wall" : "inconclusive"; }

namespace {

std::string fmt(const TruncQ& v) {
    return "(" + to_string(v(0)) + ", " + to_string(v(1)) + ", " + to_string(v(2)) + ")";
}

/// End stratum where the factor X (= w or v - w) has ch1^beta0(X) = 0.
/// Writing ch^beta0(X) = (a, 0, c), slope equality with v at (alpha^2, beta0)
/// reads c = alpha^2 a / 2.
void end_stratum_cases(const std::string& name, const Rational& delta_v, Certificate& cert) {
    {
        CertificateCase k;
        k.parameters = "ch1^beta0(" + name + ") = 0, a != 0";
        const Interval slope_eq = Interval::above(Rational(0), true);      // a c = alpha^2 a^2 / 2 > 0
        const Interval bg_lower = Interval::below(Rational(0), false);     // Delta = -2 a c >= 0
        const Interval bg_upper = Interval::above(-delta_v / 2, false);    // -2 a c <= Delta(v)
        const Interval meet = slope_eq.intersect(bg_lower).intersect(bg_upper);
        k.constraints = {
            "slope equality: c = alpha^2 a / 2, so a*c in " + slope_eq.str(),
            "Delta(" + name + ") = -2 a c >= 0, so a*c in " + bg_lower.str(),
            "Delta(" + name + ") <= Delta(v) = " + to_string(delta_v) + ", so a*c in " + bg_upper.str(),
        };
        k.infeasible = meet.empty();
        k.contradiction = "a*c in " + meet.str() + (k.infeasible ? ": empty" : ": nonempty");
        cert.cases.push_back(std::move(k));
    }
    {
        CertificateCase k;
        k.parameters = "ch1^beta0(" + name + ") = 0, a = 0";
        const Rational a(0);
        const Rational c = Rational(1) / Rational(2) * a;  // alpha^2 a / 2 for every alpha^2
        const TruncQ cls = make_trunc<Rational>(a, Rational(0), c);
        k.constraints = {"slope equality: c = alpha^2 a / 2 = " + to_string(c)};
        k.infeasible = cls.isZero();
        k.contradiction = "ch^beta0(" + name + ") = " + fmt(cls) + ": a trivial factor, not a destabilizing sequence";
        cert.cases.push_back(std::move(k));
    }
}

}  // namespace

Certificate certify_no_walls(const FanoQ& X, const TruncQ& v, const Rational& beta0, std::string label) {
    if (!lattice_check(X, v)) throw InvalidInput("class is not in the lattice");
    TruncQ V = twist(v, beta0);
    if (V(1) == 0) throw InvalidInput("ch1^beta0(v) = 0");
    if (V(1) < 0) V = -V;

    Certificate cert;
    cert.which = std::move(label);
    cert.d = X.degree();
    cert.v_twisted = V;
    cert.beta0 = beta0;
    const Rational delta_v = discriminant(V);

    const auto& den = X.lattice_denominators();
    const Rational g = rational_gcd(Rational(1) / den[1], Rational(beta0 / den[0]));
    for (Integer k = 0; k <= floor(Rational(V(1) / g)); ++k) cert.strata.emplace_back(Rational(k) * g);

    bool interior = false;
    for (const Rational& b : cert.strata) {
        if (b == 0) {
            end_stratum_cases("w", delta_v, cert);
        } else if (b == V(1)) {
            end_stratum_cases("v - w", delta_v, cert);
        } else {
            interior = true;
            CertificateCase k;
            k.parameters = "ch1^beta0(w) = " + to_string(b);
            k.constraints = {"interior stratum"};
            k.contradiction = "not refuted symbolically";
            cert.cases.push_back(std::move(k));
        }
    }
    bool all = !interior;
    for (const auto& k : cert.cases) all = all && k.infeasible;
    cert.verdict = all ? Verdict::no_wall : Verdict::inconclusive;
    return cert;
}

Certificate no_wall_certificate(const FanoQ& X, CertifiedClass which) {
    const Rational beta0(-1, 2);
    if (which == CertifiedClass::ideal_line) return certify_no_walls(X, truncate(chern_ideal_line(X)), beta0, "ideal_line");
    return certify_no_walls(X, truncate(chern_J(X)), beta0, "J_line");
}

}  // namespace fanoku
