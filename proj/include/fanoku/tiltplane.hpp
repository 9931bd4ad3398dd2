#pragma once

// Weak stability parameters. Tilt points carry alpha^2 (never alpha) so the
// whole pipeline stays over the scalar field; charges are in absolute units
// (every H^3 integral contributes a factor d).

#include "fanoku/error.hpp"
#include "fanoku/lattice.hpp"
#include "fanoku/surd.hpp"

#include <cmath>
#include <compare>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace fanoku {

template <typename Scalar>
struct TiltPoint {
    Scalar alpha2;
    Scalar beta;

    /// alpha2 > 0, or alpha2 == 0 when the boundary is explicitly allowed.
    bool valid(bool allow_boundary = false) const { return alpha2 > 0 || (allow_boundary && alpha2 == 0); }
};

/// (s, q) chart: sigma_{alpha,beta} = sigma'_{(beta^2 + alpha^2)/2, beta}.
template <typename Scalar>
struct LiZhaoPoint {
    Scalar s;
    Scalar q;

    /// q - s^2/2; positive above the parabola, zero on it.
    Scalar height() const { return q - s * s / Scalar(2); }
    bool above_parabola() const { return height() > 0; }

    friend bool operator==(const LiZhaoPoint& a, const LiZhaoPoint& b) { return a.s == b.s && a.q == b.q; }
};

enum class SlopeKind { finite, plus_infinity, minus_infinity, indeterminate };

/// Extended slope value: +inf sits above every finite value. Indeterminate
/// slopes (0/0) refuse to compare.
template <typename Value>
struct Slope {
    SlopeKind kind = SlopeKind::finite;
    Value value{};

    static Slope finite(Value v) { return {SlopeKind::finite, std::move(v)}; }
    static Slope plus_infinity() { return {SlopeKind::plus_infinity, Value{}}; }
    static Slope minus_infinity() { return {SlopeKind::minus_infinity, Value{}}; }
    static Slope indeterminate() { return {SlopeKind::indeterminate, Value{}}; }

    bool is_finite() const { return kind == SlopeKind::finite; }

    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.kind != b.kind) return false;
        return a.kind != SlopeKind::finite || a.value == b.value;
    }

    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
        if (a.kind == SlopeKind::indeterminate || b.kind == SlopeKind::indeterminate)
            throw InvalidInput("comparison with an indeterminate slope");
        const auto rank = [](SlopeKind k) { return k == SlopeKind::minus_infinity ? 0 : (k == SlopeKind::finite ? 1 : 2); };
        if (rank(a.kind) != rank(b.kind)) return rank(a.kind) <=> rank(b.kind);
        if (a.kind != SlopeKind::finite) return std::strong_ordering::equal;
        if (a.value == b.value) return std::strong_ordering::equal;
        return a.value < b.value ? std::strong_ordering::less : std::strong_ordering::greater;
    }
};

/// num/den, +inf when den == 0 (num != 0), indeterminate for 0/0.
template <typename Scalar>
Slope<Scalar> ratio_slope(const Scalar& num, const Scalar& den) {
    if (den == 0) return num == 0 ? Slope<Scalar>::indeterminate() : Slope<Scalar>::plus_infinity();
    return Slope<Scalar>::finite(num / den);
}

/// Z_{alpha,beta} = d (alpha^2/2 ch0^beta - ch2^beta) + i d ch1^beta.
template <typename Scalar, typename Derived>
ExactComplex<Scalar> charge(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt,
                            const Eigen::MatrixBase<Derived>& ch) {
    const TruncChar<Scalar> t = twist(TruncChar<Scalar>(ch.template head<3>()), pt.beta);
    const Scalar d = X.d();
    return {d * (pt.alpha2 * t(0) / Scalar(2) - t(2)), d * t(1)};
}

/// -Re/Im; +inf whenever Im == 0.
template <typename Scalar>
Slope<Scalar> slope_of(const ExactComplex<Scalar>& Z) {
    if (Z.im == 0) return Slope<Scalar>::plus_infinity();
    return Slope<Scalar>::finite(-Z.re / Z.im);
}

template <typename Scalar, typename Derived>
Slope<Scalar> slope(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt, const Eigen::MatrixBase<Derived>& ch) {
    return slope_of(charge(X, pt, ch));
}

/// Z^0 = -i Z.
template <typename Scalar, typename Derived>
ExactComplex<Scalar> rotated_charge(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt,
                                    const Eigen::MatrixBase<Derived>& ch) {
    const ExactComplex<Scalar> Z = charge(X, pt, ch);
    return {Z.im, -Z.re};
}

template <typename Scalar, typename Derived>
Slope<Scalar> rotated_slope(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt,
                            const Eigen::MatrixBase<Derived>& ch) {
    return slope_of(rotated_charge(X, pt, ch));
}

/// sqrt(1 + mu^2) * Z/u, where u is the unit vector of the upper half plane
/// with mu = -Re u / Im u. The positive factor keeps the result exact and does
/// not move phases; for mu = 0 this is exactly -i Z.
template <typename Scalar>
ExactComplex<Scalar> second_tilt_charge(const ExactComplex<Scalar>& Z, const Scalar& mu) {
    return {Z.im - mu * Z.re, -Z.re - mu * Z.im};
}

/// V = {-1/2 <= beta < 0, alpha < -beta} u {-1 < beta < -1/2, alpha <= 1 + beta}.
template <typename Scalar>
bool in_region_V(const TiltPoint<Scalar>& pt) {
    if (!(pt.alpha2 > 0)) return false;
    const Scalar half = frac<Scalar>(1, 2);
    const Scalar& b = pt.beta;
    if (b >= -half && b < 0) return pt.alpha2 < b * b;
    if (b > Scalar(-1) && b < -half) return pt.alpha2 <= (Scalar(1) + b) * (Scalar(1) + b);
    return false;
}

template <typename Scalar>
LiZhaoPoint<Scalar> to_lizhao(const TiltPoint<Scalar>& pt) {
    return {pt.beta, (pt.beta * pt.beta + pt.alpha2) / Scalar(2)};
}

template <typename Scalar>
TiltPoint<Scalar> from_lizhao(const LiZhaoPoint<Scalar>& P) {
    if (!P.above_parabola()) throw InvalidInput("(s, q) must lie strictly above q = s^2/2");
    return {Scalar(2) * P.q - P.s * P.s, P.s};
}

/// (s, q) = (c1/c0, c2/c0).
template <typename Scalar, typename Derived>
LiZhaoPoint<Scalar> char_point(const FanoThreefold<Scalar>&, const Eigen::MatrixBase<Derived>& ch) {
    if (ch(0) == 0) throw InvalidInput("rank-zero class has no point in the (s, q) chart");
    return {ch(1) / ch(0), ch(2) / ch(0)};
}

/// Z'_{q,s} = -d (c2 - q c0) + i d (c1 - s c0).
template <typename Scalar, typename Derived>
ExactComplex<Scalar> lizhao_charge(const FanoThreefold<Scalar>& X, const LiZhaoPoint<Scalar>& P,
                                   const Eigen::MatrixBase<Derived>& ch) {
    return {-X.d() * (ch(2) - P.q * ch(0)), X.d() * (ch(1) - P.s * ch(0))};
}

/// mu' = (c2 - q c0)/(c1 - s c0): the slope of the line from P to the point of ch.
template <typename Scalar, typename Derived>
Slope<Scalar> lizhao_slope(const FanoThreefold<Scalar>&, const LiZhaoPoint<Scalar>& P,
                           const Eigen::MatrixBase<Derived>& ch) {
    return ratio_slope<Scalar>(ch(2) - P.q * ch(0), ch(1) - P.s * ch(0));
}

/// Point of E (x) O(H): s + 1 on the same parabola q - s^2/2 = const.
template <typename Scalar>
LiZhaoPoint<Scalar> phi_translate(const LiZhaoPoint<Scalar>& P) {
    return {P.s + Scalar(1), P.q + P.s + frac<Scalar>(1, 2)};
}

template <typename Scalar>
struct SurdPoint {
    QuadSurd<Scalar> s;
    QuadSurd<Scalar> q;
};

/// Intersections of the line through P1, P2 with q = s^2/2, sorted by s.
/// Empty optional when the line misses the parabola.
template <typename Scalar>
std::optional<std::vector<SurdPoint<Scalar>>> parabola_chord(const LiZhaoPoint<Scalar>& P1,
                                                             const LiZhaoPoint<Scalar>& P2) {
    if (P1 == P2) throw InvalidInput("parabola_chord needs two distinct points");
    const Scalar half = frac<Scalar>(1, 2);
    if (P1.s == P2.s) {
        const QuadSurd<Scalar> s(P1.s);
        return std::vector<SurdPoint<Scalar>>{{s, QuadSurd<Scalar>(P1.s * P1.s * half)}};
    }
    // q = q1 + m (s - s1) meets q = s^2/2 at s = m +- sqrt(m^2 - 2 m s1 + 2 q1).
    const Scalar m = (P2.q - P1.q) / (P2.s - P1.s);
    const Scalar disc = m * m - Scalar(2) * m * P1.s + Scalar(2) * P1.q;
    if (disc < 0) return std::nullopt;
    std::vector<SurdPoint<Scalar>> out;
    const auto point = [&](int sign_) {
        QuadSurd<Scalar> s(m, Scalar(sign_), disc);
        QuadSurd<Scalar> q = s * s * QuadSurd<Scalar>(half);
        return SurdPoint<Scalar>{s, q};
    };
    out.push_back(point(-1));
    if (disc != 0) out.push_back(point(+1));
    return out;
}

/// Slope from R of a point on the parabola, read as a rank-one class.
template <typename Scalar>
Slope<QuadSurd<Scalar>> lizhao_slope_at(const LiZhaoPoint<Scalar>& R, const SurdPoint<Scalar>& E) {
    const QuadSurd<Scalar> num = E.q - QuadSurd<Scalar>(R.q);
    const QuadSurd<Scalar> den = E.s - QuadSurd<Scalar>(R.s);
    if (den.sign() == 0) {
        return num.sign() == 0 ? Slope<QuadSurd<Scalar>>::indeterminate() : Slope<QuadSurd<Scalar>>::plus_infinity();
    }
    return Slope<QuadSurd<Scalar>>::finite(num / den);
}

template <typename Scalar>
struct SlopeBounds {
    std::vector<SurdPoint<Scalar>> chord;  // E^-, E^+ sorted by s
    Slope<QuadSurd<Scalar>> lower;
    Slope<QuadSurd<Scalar>> upper;
};

/// Slope window at R cut out by the chord through the stability point Q and
/// the point of ch. With Q == R the window collapses to mu_R(ch).
template <typename Scalar, typename Derived>
SlopeBounds<Scalar> factor_slope_bounds(const FanoThreefold<Scalar>& X, const LiZhaoPoint<Scalar>& Q,
                                        const LiZhaoPoint<Scalar>& R, const Eigen::MatrixBase<Derived>& ch) {
    if (!Q.above_parabola() || !R.above_parabola())
        throw InvalidInput("stability points must lie above the parabola");
    const LiZhaoPoint<Scalar> E = char_point(X, ch);
    if (E == Q) throw InvalidInput("character point coincides with the stability point");
    auto chord = parabola_chord(Q, E);
    // A line through a point strictly above the parabola always meets it.
    SlopeBounds<Scalar> out{std::move(*chord), {}, {}};
    if (out.chord.size() == 1) {
        // vertical chord: the second end is the point at infinity of the parabola
        out.lower = lizhao_slope_at(R, out.chord.front());
        out.upper = Slope<QuadSurd<Scalar>>::plus_infinity();
    } else {
        auto a = lizhao_slope_at(R, out.chord[0]);
        auto b = lizhao_slope_at(R, out.chord[1]);
        if (b < a) std::swap(a, b);
        out.lower = a;
        out.upper = b;
    }
    return out;
}

template <typename Scalar, typename Derived>
SlopeBounds<Scalar> factor_slope_bounds(const FanoThreefold<Scalar>& X, const LiZhaoPoint<Scalar>& R,
                                        const Eigen::MatrixBase<Derived>& ch) {
    return factor_slope_bounds(X, R, R, ch);
}

/// ch1^beta / ch0, the large-volume limit slope.
template <typename Scalar, typename Derived>
Slope<Scalar> lv_slope(const Eigen::MatrixBase<Derived>& ch, const Scalar& beta) {
    const Scalar c1b = ch(1) - beta * ch(0);
    if (ch(0) == 0) {
        if (c1b == 0) return Slope<Scalar>::indeterminate();
        return c1b > 0 ? Slope<Scalar>::plus_infinity() : Slope<Scalar>::minus_infinity();
    }
    return Slope<Scalar>::finite(c1b / ch(0));
}

/// Shift placing a mu_H-stable sheaf of class ch into Coh^beta: 0 if mu_H > beta, else 1.
template <typename Scalar, typename Derived>
int heart_placement(const FanoThreefold<Scalar>&, const Eigen::MatrixBase<Derived>& ch, const Scalar& beta) {
    if (ch(0) < 0) throw InvalidInput("heart_placement expects the class of a sheaf (rank >= 0)");
    if (ch(0) == 0) return 0;  // torsion sheaves lie in Coh^beta
    return ch(1) / ch(0) > beta ? 0 : 1;
}

/// Principal phase in (-1, 1]; (0, 1] on the upper half plane with the
/// negative real axis at 1. The exact (-Re, Im) pair is kept for comparisons.
template <typename Scalar>
struct Phase {
    double value;
    Scalar neg_re;
    Scalar im;
};

template <typename Scalar>
Phase<Scalar> phase_of(const ExactComplex<Scalar>& Z) {
    if (Z.is_zero()) throw InvalidInput("zero charge has no phase at class level");
    const double v = std::atan2(to_double(Z.im), to_double(Z.re)) / std::numbers::pi;
    return {v, -Z.re, Z.im};
}

/// Exact comparison of principal phases in (-1, 1].
template <typename Scalar>
std::strong_ordering phase_compare(const ExactComplex<Scalar>& a, const ExactComplex<Scalar>& b) {
    if (a.is_zero() || b.is_zero()) throw InvalidInput("zero charge has no phase at class level");
    const auto upper = [](const ExactComplex<Scalar>& z) { return z.im > 0 || (z.im == 0 && z.re < 0); };
    const bool ua = upper(a);
    const bool ub = upper(b);
    if (ua != ub) return ua ? std::strong_ordering::greater : std::strong_ordering::less;
    const Scalar c = cross(a, b);  // > 0: b is counter-clockwise of a
    if (c == 0) return std::strong_ordering::equal;
    return c > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// True iff lifts of the phases satisfy phi(later) - 1 < phi(earlier) < phi(later),
/// i.e. `earlier` is strictly clockwise of `later` by an angle in (0, pi).
template <typename Scalar>
bool phases_interleave(const ExactComplex<Scalar>& later, const ExactComplex<Scalar>& earlier) {
    return cross(later, earlier) < 0;
}

}  // namespace fanoku
