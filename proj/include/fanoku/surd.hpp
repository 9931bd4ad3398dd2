#pragma once

#include "fanoku/error.hpp"
#include "fanoku/rational.hpp"

#include <cmath>
#include <compare>
#include <string>

namespace fanoku {

/// Element r + c*sqrt(rad) of Q(sqrt(rad)), rad >= 0.
/// Binary operations require a common radicand unless one side is rational (c == 0).
template <typename Scalar>
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(Scalar rational) : r_(std::move(rational)) {}  // NOLINT(google-explicit-constructor)
    QuadSurd(Scalar r, Scalar c, Scalar rad) : r_(std::move(r)), c_(std::move(c)), rad_(std::move(rad)) {
        if (rad_ < 0) throw InvalidInput("negative radicand");
        if (c_ == 0 || rad_ == 0) {
            c_ = 0;
            rad_ = 0;
        } else if (auto root = exact_sqrt(rad_)) {
            r_ += c_ * *root;
            c_ = 0;
            rad_ = 0;
        }
    }

    const Scalar& rational_part() const { return r_; }
    const Scalar& surd_coefficient() const { return c_; }
    const Scalar& radicand() const { return rad_; }
    bool is_rational() const { return c_ == 0; }

    int sign() const {
        const int sr = fanoku::sign(r_);
        const int sc = fanoku::sign(c_);
        if (sc == 0) return sr;
        if (sr == 0 || sr == sc) return sc;
        // opposite signs: compare r^2 with c^2 rad
        const Scalar lhs = r_ * r_;
        const Scalar rhs = c_ * c_ * rad_;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sr : sc;
    }

    double approx() const { return to_double(r_) + to_double(c_) * std::sqrt(to_double(rad_)); }

    friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
        const Scalar rad = common_radicand(a, b);
        return QuadSurd(a.r_ + b.r_, a.c_ + b.c_, rad);
    }
    friend QuadSurd operator-(const QuadSurd& a) { return QuadSurd(-a.r_, -a.c_, a.rad_); }
    friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) { return a + (-b); }
    friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
        const Scalar rad = common_radicand(a, b);
        return QuadSurd(a.r_ * b.r_ + a.c_ * b.c_ * rad, a.r_ * b.c_ + a.c_ * b.r_, rad);
    }
    friend QuadSurd operator/(const QuadSurd& a, const QuadSurd& b) {
        const Scalar rad = common_radicand(a, b);
        const Scalar norm = b.r_ * b.r_ - b.c_ * b.c_ * rad;
        if (norm == 0) throw InvalidInput("division by zero surd");
        const QuadSurd conj(b.r_ / norm, -b.c_ / norm, rad);
        return a * conj;
    }
    friend bool operator==(const QuadSurd& a, const QuadSurd& b) { return (a - b).sign() == 0; }
    friend std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b) {
        const int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    static Scalar common_radicand(const QuadSurd& a, const QuadSurd& b) {
        if (a.c_ == 0) return b.rad_;
        if (b.c_ == 0) return a.rad_;
        if (a.rad_ != b.rad_) throw InvalidInput("surds with different radicands");
        return a.rad_;
    }

    Scalar r_{0};
    Scalar c_{0};
    Scalar rad_{0};
};

inline std::string to_string(const QuadSurd<Rational>& x) {
    if (x.is_rational()) return to_string(x.rational_part());
    const Rational& c = x.surd_coefficient();
    std::string s = to_string(x.rational_part());
    s += c < 0 ? " - " : " + ";
    s += to_string(mp::abs(c)) + "*sqrt(" + to_string(x.radicand()) + ")";
    return s;
}

}  // namespace fanoku
