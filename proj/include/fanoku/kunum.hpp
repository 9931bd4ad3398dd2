#pragma once

// Numerical Grothendieck group of Ku(X) in the basis
//   kappa1 = [I_l] = 1 - H^2/d,   kappa2 = H - H^2/2 + (d-6)/(6d) H^3.
// Bilinear convention: chi(sum a_i kappa_i, sum b_j kappa_j) = a^T E b.

#include "fanoku/error.hpp"
#include "fanoku/lattice.hpp"
#include "fanoku/linsolve.hpp"
#include "fanoku/tiltplane.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fanoku {

template <typename Scalar>
using KuClass = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar>
KuClass<Scalar> make_ku(Scalar x, Scalar y) {
    KuClass<Scalar> k;
    k << x, y;
    return k;
}

template <typename Scalar>
std::pair<ChernCharacter<Scalar>, ChernCharacter<Scalar>> kappa_basis(const FanoThreefold<Scalar>& X) {
    const Scalar d = X.d();
    return {make_chern<Scalar>(Scalar(1), Scalar(0), -Scalar(1) / d, Scalar(0)),
            make_chern<Scalar>(Scalar(0), Scalar(1), frac<Scalar>(-1, 2), (d - Scalar(6)) / (Scalar(6) * d))};
}

/// x kappa1 + y kappa2 as a Chern character.
template <typename Scalar, typename Derived>
ChernCharacter<Scalar> chern_of(const FanoThreefold<Scalar>& X, const Eigen::MatrixBase<Derived>& k) {
    const auto [k1, k2] = kappa_basis(X);
    return k(0) * k1 + k(1) * k2;
}

/// Throws NotInKuComponent unless chi(O_X, ch) = chi(O_X(H), ch) = 0.
template <typename Scalar, typename Derived>
KuClass<Scalar> project_to_ku(const FanoThreefold<Scalar>& X, const Eigen::MatrixBase<Derived>& ch) {
    const ChernCharacter<Scalar> c = ch;
    for (long k = 0; k <= 1; ++k) {
        const Scalar chi = euler_pairing(X, chern_line_bundle(X, k), c);
        if (chi != 0) {
            const std::string label = k == 0 ? "chi(O_X, ch)" : "chi(O_X(H), ch)";
            throw NotInKuComponent("class is not orthogonal to <O_X, O_X(H)>: " + label + " = " + to_string(chi),
                                   label + " = " + to_string(chi));
        }
    }
    const KuClass<Scalar> out = make_ku<Scalar>(c(0), c(1));
    const ChernCharacter<Scalar> residual = c - chern_of(X, out);
    if (!residual.isZero()) throw NotInKuComponent("nonzero residual after projection", "residual");
    return out;
}

/// E_ij = chi(kappa_i, kappa_j).
template <typename Scalar>
Matrix2<Scalar> ku_euler_matrix(const FanoThreefold<Scalar>& X) {
    const auto [k1, k2] = kappa_basis(X);
    const std::array<ChernCharacter<Scalar>, 2> k{k1, k2};
    Matrix2<Scalar> E;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) E(i, j) = euler_pairing(X, k[i], k[j]);
    return E;
}

/// Columns (Re, Im) of Z^0 = -i Z_{alpha,beta} on kappa1, kappa2, absolute units.
template <typename Scalar>
Matrix2<Scalar> charge_matrix(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt) {
    const auto [k1, k2] = kappa_basis(X);
    const ExactComplex<Scalar> z1 = rotated_charge(X, pt, k1);
    const ExactComplex<Scalar> z2 = rotated_charge(X, pt, k2);
    Matrix2<Scalar> M;
    M << z1.re, z2.re, z1.im, z2.im;
    return M;
}

/// charge_matrix / d: [[-beta, 1], [beta^2/2 - 1/d - alpha^2/2, -beta - 1/2]].
template <typename Scalar>
Matrix2<Scalar> normalized_charge_matrix(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt) {
    return charge_matrix(X, pt) / X.d();
}

template <typename Scalar>
Scalar orientation_det(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt) {
    return normalized_charge_matrix(X, pt).determinant();
}

/// 1/2 (beta + 1/2)^2 - 1/8 + 1/d + alpha^2/2.
template <typename Scalar>
Scalar orientation_det_closed_form(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt) {
    const Scalar h = pt.beta + frac<Scalar>(1, 2);
    return h * h / Scalar(2) - frac<Scalar>(1, 8) + Scalar(1) / X.d() + pt.alpha2 / Scalar(2);
}

/// Coefficients c(i, j) of beta^i (alpha^2)^j in orientation_det, recovered by
/// exact interpolation on a 5 x 3 grid. Each matrix entry has degree <= 2 in
/// beta and <= 1 in alpha^2, so the determinant lies in that monomial space
/// and the interpolant is the polynomial itself.
template <typename Scalar>
struct OrientationCertificate {
    Eigen::Matrix<Scalar, 5, 3> coefficients;
    Eigen::Matrix<Scalar, 5, 3> expected;  // closed form, expanded
    bool matches_closed_form = false;
    Scalar square_offset;  // 1/d - 1/8
    bool positive = false;  // matches and square_offset > 0
};

template <typename Scalar>
OrientationCertificate<Scalar> orientation_certificate(const FanoThreefold<Scalar>& X) {
    constexpr int nb = 5;
    constexpr int na = 3;
    DynMatrix<Scalar> V(nb * na, nb * na);
    DynVector<Scalar> rhs(nb * na);
    int row = 0;
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < na; ++j, ++row) {
            const Scalar beta(i - 2);
            const Scalar a2(j);
            rhs(row) = orientation_det(X, TiltPoint<Scalar>{a2, beta});
            for (int p = 0; p < nb; ++p) {
                for (int q = 0; q < na; ++q) {
                    Scalar mono(1);
                    for (int t = 0; t < p; ++t) mono *= beta;
                    for (int t = 0; t < q; ++t) mono *= a2;
                    V(row, p * na + q) = mono;
                }
            }
        }
    }
    const auto sol = solve_exact(V, rhs);
    if (!sol || !sol->unique()) throw std::logic_error("interpolation grid is singular");
    OrientationCertificate<Scalar> out;
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < na; ++q) out.coefficients(p, q) = sol->particular(p * na + q);
    out.expected.setZero();
    out.expected(0, 0) = Scalar(1) / X.d();  // 1/8 - 1/8 + 1/d
    out.expected(1, 0) = frac<Scalar>(1, 2);
    out.expected(2, 0) = frac<Scalar>(1, 2);
    out.expected(0, 1) = frac<Scalar>(1, 2);
    out.matches_closed_form = out.coefficients == out.expected;
    out.square_offset = Scalar(1) / X.d() - frac<Scalar>(1, 8);
    out.positive = out.matches_closed_form && out.square_offset > 0;
    return out;
}

/// Both injective with the same orientation.
template <typename DerivedA, typename DerivedB>
bool same_gl_orbit(const Eigen::MatrixBase<DerivedA>& M1, const Eigen::MatrixBase<DerivedB>& M2) {
    using Scalar = typename DerivedA::Scalar;
    const Scalar p = M1.determinant() * M2.determinant();
    return p > 0;
}

/// ch of L_{O_X}(E (x) O(H)): tensor, then subtract chi(O_X, -) copies of O_X.
template <typename Scalar, typename Derived>
ChernCharacter<Scalar> mutate(const FanoThreefold<Scalar>& X, const Eigen::MatrixBase<Derived>& ch) {
    const ChernCharacter<Scalar> t = tensor_line(ChernCharacter<Scalar>(ch), 1);
    const ChernCharacter<Scalar> O = chern_line_bundle(X, 0);
    return t - euler_pairing(X, O, t) * O;
}

/// Action of L_{O_X} o (- (x) O(H)) on (kappa1, kappa2) coordinates.
template <typename Scalar>
Matrix2<Scalar> mutation_action(const FanoThreefold<Scalar>& X) {
    const auto [k1, k2] = kappa_basis(X);
    Matrix2<Scalar> A;
    A.col(0) = project_to_ku(X, mutate(X, k1));
    A.col(1) = project_to_ku(X, mutate(X, k2));
    return A;
}

/// S_num = -(A^2)^{-1}: S^{-1} = (L o Phi)^2 [-3], and the odd shift acts by -1.
template <typename Scalar>
Matrix2<Scalar> serre_action(const FanoThreefold<Scalar>& X) {
    const Matrix2<Scalar> A = mutation_action(X);
    const auto inv = inverse_exact(Matrix2<Scalar>(A * A));
    if (!inv) throw std::logic_error("mutation action is singular");
    const Matrix2<Scalar> S = -Matrix2<Scalar>(*inv);
    if (X.degree() == 2 && S != Matrix2<Scalar>::Identity())
        throw std::logic_error("d = 2: Serre action must be trivial on characters");
    return S;
}

/// Classes F with chi(O,F) = chi(O(H),F) = 0 and chi(I_l,F) = chi(F,I_l) = -1.
/// A one-dimensional solution set is cut down by chi(F,F) = -1 (rational roots only).
template <typename Scalar>
std::vector<ChernCharacter<Scalar>> hrr_solve_class(const FanoThreefold<Scalar>& X) {
    const ChernCharacter<Scalar> O = chern_line_bundle(X, 0);
    const ChernCharacter<Scalar> OH = chern_line_bundle(X, 1);
    const ChernCharacter<Scalar> I = chern_ideal_line(X);
    Eigen::Matrix<Scalar, 4, 4> M;
    Eigen::Matrix<Scalar, 4, 1> rhs;
    rhs << Scalar(0), Scalar(0), Scalar(-1), Scalar(-1);
    for (int k = 0; k < 4; ++k) {
        ChernCharacter<Scalar> e = ChernCharacter<Scalar>::Zero();
        e(k) = Scalar(1);
        M(0, k) = euler_pairing(X, O, e);
        M(1, k) = euler_pairing(X, OH, e);
        M(2, k) = euler_pairing(X, I, e);
        M(3, k) = euler_pairing(X, e, I);
    }
    const auto sol = solve_exact(M, rhs);
    if (!sol) return {};
    const ChernCharacter<Scalar> p = sol->particular;
    if (sol->unique()) return {p};
    if (sol->nullspace.cols() != 1) throw std::logic_error("HRR system has a solution set of dimension > 1");
    const ChernCharacter<Scalar> n = sol->nullspace.col(0);
    // chi(p + t n, p + t n) + 1 = a t^2 + b t + c
    const Scalar a = euler_pairing(X, n, n);
    const Scalar b = euler_pairing(X, p, n) + euler_pairing(X, n, p);
    const Scalar c = euler_pairing(X, p, p) + Scalar(1);
    std::vector<Scalar> roots;
    if (a == 0) {
        if (b != 0) roots.push_back(-c / b);
        else if (c == 0) throw std::logic_error("chi(F,F) = -1 holds on the whole solution line");
    } else {
        const Scalar disc = b * b - Scalar(4) * a * c;
        if (auto r = exact_sqrt(disc)) {
            roots.push_back((-b - *r) / (Scalar(2) * a));
            if (*r != 0) roots.push_back((-b + *r) / (Scalar(2) * a));
        }
    }
    std::vector<ChernCharacter<Scalar>> out;
    for (const Scalar& t : roots) out.push_back(p + t * n);
    return out;
}

/// alpha^2 d^2 Delta + 4 (d ch2^beta)^2 - 6 (d ch1^beta)(d ch3^beta).
/// At alpha = 0, beta = -1/2 and ch = (1, 0, -1/d, m/d) this is
/// 4 + d/2 - 3 d m.
template <typename Scalar, typename Derived>
Scalar bms_inequality(const FanoThreefold<Scalar>& X, const Eigen::MatrixBase<Derived>& ch,
                      const TiltPoint<Scalar>& pt) {
    if (pt.alpha2 < 0) throw InvalidInput("bms_inequality needs alpha^2 >= 0");
    const ChernCharacter<Scalar> t = twist(ChernCharacter<Scalar>(ch), pt.beta);
    const Scalar d = X.d();
    const Scalar c2 = d * t(2);
    return pt.alpha2 * d * d * discriminant(t) + Scalar(4) * c2 * c2 - Scalar(6) * (d * t(1)) * (d * t(3));
}

/// Largest integer m with bms_inequality((1, 0, -1/d, m/d), pt) >= 0;
/// nullopt when the bound does not cut off m from above.
template <typename Scalar>
std::optional<Integer> bms_max_m(const FanoThreefold<Scalar>& X, const TiltPoint<Scalar>& pt) {
    const auto lhs = [&](long m) {
        return bms_inequality(X, make_chern<Scalar>(Scalar(1), Scalar(0), -Scalar(1) / X.d(), Scalar(m) / X.d()), pt);
    };
    const Scalar l0 = lhs(0);
    const Scalar rate = lhs(1) - l0;
    if (!(rate < 0)) return std::nullopt;
    return floor(Scalar(-l0 / rate));
}

}  // namespace fanoku
