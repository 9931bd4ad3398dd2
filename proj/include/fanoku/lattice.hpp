#pragma once

// Chern-character arithmetic on a Fano threefold X of Picard rank one and
// index two with H^3 = d. A character is stored by its coefficients
// (c0, c1, c2, c3) in the basis (1, H, H^2, H^3) of Q[H]/(H^4); every degree-3
// integral picks up the factor d.

#include "fanoku/error.hpp"
#include "fanoku/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <string>

namespace fanoku {

template <typename Scalar>
using ChernCharacter = Eigen::Matrix<Scalar, 4, 1>;

/// Image in Lambda_H^2: (c0, c1, c2).
template <typename Scalar>
using TruncChar = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
inline Scalar frac(long p, long q) {
    return Scalar(p) / Scalar(q);
}

/// Exact complex number over the scalar field; carries central-charge values.
template <typename Scalar>
struct ExactComplex {
    Scalar re{0};
    Scalar im{0};

    ExactComplex() = default;
    ExactComplex(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactComplex operator*(const Scalar& s, const ExactComplex& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    ExactComplex conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
};

/// Im(conj(a) * b): positive iff b is counter-clockwise from a by an angle in (0, pi).
template <typename Scalar>
Scalar cross(const ExactComplex<Scalar>& a, const ExactComplex<Scalar>& b) {
    return a.re * b.im - a.im * b.re;
}

template <typename Scalar>
class FanoThreefold {
public:
    explicit FanoThreefold(int degree) : FanoThreefold(degree, default_denominators(degree)) {}

    FanoThreefold(int degree, std::array<Scalar, 4> lattice_denominators)
        : degree_(degree), lat_den_(std::move(lattice_denominators)) {
        if (degree < 1 || degree > 5)
            throw InvalidInput("degree must be in {1,...,5}, got " + std::to_string(degree));
        for (const auto& den : lat_den_) {
            if (!(den > 0)) throw InvalidInput("lattice denominators must be positive");
        }
        todd_ << Scalar(1), Scalar(1), frac<Scalar>(1, 3) + frac<Scalar>(1, degree), frac<Scalar>(1, degree);
    }

    int degree() const { return degree_; }
    Scalar d() const { return Scalar(degree_); }

    /// td(X) = (1, H, (1/3 + 1/d) H^2, (1/d) H^3).
    const ChernCharacter<Scalar>& todd() const { return todd_; }

    /// c_k * lat_den[k] must be integral for a lattice class.
    const std::array<Scalar, 4>& lattice_denominators() const { return lat_den_; }

    static std::array<Scalar, 4> default_denominators(int degree) {
        return {Scalar(1), Scalar(1), Scalar(2 * degree), Scalar(6 * degree)};
    }

private:
    int degree_;
    std::array<Scalar, 4> lat_den_;
    ChernCharacter<Scalar> todd_;
};

template <typename Scalar>
ChernCharacter<Scalar> make_chern(Scalar c0, Scalar c1, Scalar c2, Scalar c3) {
    ChernCharacter<Scalar> ch;
    ch << c0, c1, c2, c3;
    return ch;
}

template <typename Scalar>
TruncChar<Scalar> make_trunc(Scalar c0, Scalar c1, Scalar c2) {
    TruncChar<Scalar> v;
    v << c0, c1, c2;
    return v;
}

template <typename Derived>
TruncChar<typename Derived::Scalar> truncate(const Eigen::MatrixBase<Derived>& ch) {
    return ch.template head<3>();
}

/// Product in Q[H]/(H^4).
template <typename DerivedA, typename DerivedB>
ChernCharacter<typename DerivedA::Scalar> ring_product(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    ChernCharacter<Scalar> out = ChernCharacter<Scalar>::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; i + j < 4; ++j) out(i + j) += a(i) * b(j);
    }
    return out;
}

/// exp(x H) truncated at H^3.
template <typename Scalar>
ChernCharacter<Scalar> exp_class(const Scalar& x) {
    return make_chern<Scalar>(Scalar(1), x, x * x / Scalar(2), x * x * x / Scalar(6));
}

/// ch^beta = e^{-beta H} ch. Works on full and truncated characters.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1> twist(
    const Eigen::MatrixBase<Derived>& ch, const typename Derived::Scalar& beta) {
    using Scalar = typename Derived::Scalar;
    constexpr int n = Derived::RowsAtCompileTime;
    static_assert(n == 3 || n == 4, "twist expects a TruncChar or a ChernCharacter");
    const ChernCharacter<Scalar> e = exp_class<Scalar>(-beta);
    Eigen::Matrix<Scalar, n, 1> out = Eigen::Matrix<Scalar, n, 1>::Zero();
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j <= k; ++j) out(k) += ch(j) * e(k - j);
    }
    return out;
}

/// ch(E^v): (c0, -c1, c2, -c3).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1> dual(
    const Eigen::MatrixBase<Derived>& ch) {
    Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1> out = ch;
    for (int k = 1; k < out.size(); k += 2) out(k) = -out(k);
    return out;
}

/// ch(E (x) O_X(kH)).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1> tensor_line(
    const Eigen::MatrixBase<Derived>& ch, long k) {
    return twist(ch, typename Derived::Scalar(-k));
}

template <typename Scalar>
ChernCharacter<Scalar> chern_line_bundle(const FanoThreefold<Scalar>&, long k) {
    return exp_class<Scalar>(Scalar(k));
}

/// ch(I_l) = (1, 0, -1/d, 0) for a line l.
template <typename Scalar>
ChernCharacter<Scalar> chern_ideal_line(const FanoThreefold<Scalar>& X) {
    return make_chern<Scalar>(Scalar(1), Scalar(0), -Scalar(1) / X.d(), Scalar(0));
}

/// ch(J_l) = (-1, 1, (2-d)/(2d), (d-6)/(6d)).
template <typename Scalar>
ChernCharacter<Scalar> chern_J(const FanoThreefold<Scalar>& X) {
    const Scalar d = X.d();
    return make_chern<Scalar>(Scalar(-1), Scalar(1), (Scalar(2) - d) / (Scalar(2) * d),
                              (d - Scalar(6)) / (Scalar(6) * d));
}

/// Class of a skyscraper sheaf: H^3 / d.
template <typename Scalar>
ChernCharacter<Scalar> chern_point(const FanoThreefold<Scalar>& X) {
    return make_chern<Scalar>(Scalar(0), Scalar(0), Scalar(0), Scalar(1) / X.d());
}

/// chi(E, F) = d * [H^3] (ch(E^v) ch(F) td(X)).
template <typename Scalar, typename DerivedE, typename DerivedF>
Scalar euler_pairing(const FanoThreefold<Scalar>& X, const Eigen::MatrixBase<DerivedE>& E,
                     const Eigen::MatrixBase<DerivedF>& F) {
    static_assert(DerivedE::RowsAtCompileTime == 4 && DerivedF::RowsAtCompileTime == 4,
                  "euler_pairing needs full characters");
    const ChernCharacter<Scalar> p = ring_product(ring_product(dual(E), F), X.todd());
    return X.d() * p(3);
}

/// ch(O_l(m)). The H^2 part is 1/d (a degree-one curve); the H^3 part is
/// solved from chi(O_X, O_l(m)) = m + 1 rather than entered by hand.
template <typename Scalar>
ChernCharacter<Scalar> chern_O_line(const FanoThreefold<Scalar>& X, long m) {
    const ChernCharacter<Scalar> O = chern_line_bundle(X, 0);
    const ChernCharacter<Scalar> base = make_chern<Scalar>(Scalar(0), Scalar(0), Scalar(1) / X.d(), Scalar(0));
    const ChernCharacter<Scalar> top = make_chern<Scalar>(Scalar(0), Scalar(0), Scalar(0), Scalar(1));
    const Scalar chi0 = euler_pairing(X, O, base);
    const Scalar slope = euler_pairing(X, O, top);
    ChernCharacter<Scalar> out = base;
    out(3) = (Scalar(m + 1) - chi0) / slope;
    return out;
}

/// Delta_H / (H^3)^2 = c1^2 - 2 c0 c2. Invariant under twist and dual.
template <typename Derived>
typename Derived::Scalar discriminant(const Eigen::MatrixBase<Derived>& ch) {
    return ch(1) * ch(1) - typename Derived::Scalar(2) * ch(0) * ch(2);
}

template <typename Scalar, typename Derived>
Scalar discriminant(const FanoThreefold<Scalar>&, const Eigen::MatrixBase<Derived>& ch) {
    return discriminant(ch);
}

/// c_k * lat_den[k] integral for every stored k.
template <typename Scalar, typename Derived>
bool lattice_check(const FanoThreefold<Scalar>& X, const Eigen::MatrixBase<Derived>& ch) {
    const auto& den = X.lattice_denominators();
    for (int k = 0; k < ch.size(); ++k) {
        if (!is_integer(Scalar(ch(k) * den[k]))) return false;
    }
    return true;
}

}  // namespace fanoku
