#pragma once

// Numerical walls in the (alpha^2, beta) half-plane, enumeration of
// candidate destabilizing classes along a vertical line beta = beta0, and
// symbolic no-wall certificates. Lattice arithmetic (floors, gcds) makes this
// module specific to the exact Rational scalar.

#include "fanoku/lattice.hpp"
#include "fanoku/rational.hpp"
#include "fanoku/tiltplane.hpp"

#include <Eigen/Geometry>

#include <optional>
#include <string>
#include <vector>

namespace fanoku {

using TruncQ = TruncChar<Rational>;
using ChernQ = ChernCharacter<Rational>;
using FanoQ = FanoThreefold<Rational>;
using TiltQ = TiltPoint<Rational>;

enum class WallKind { semicircle, vertical, everywhere };

std::string to_string(WallKind kind);

/// semicircle: alpha^2 + (beta - center_beta)^2 = radius2.
/// vertical:   beta = center_beta (radius2 unused, stored as 0).
/// everywhere: v and w proportional.
struct Wall {
    WallKind kind = WallKind::semicircle;
    Rational center_beta{0};
    Rational radius2{0};
    TruncQ v = TruncQ::Zero();
    TruncQ w = TruncQ::Zero();

    /// A semicircle of radius zero (touches alpha = 0 only).
    bool degenerate() const { return kind == WallKind::semicircle && radius2 == 0; }

    /// Same locus (ignores v, w).
    bool same_locus(const Wall& other) const {
        return kind == other.kind && center_beta == other.center_beta && radius2 == other.radius2;
    }
};

/// Locus of mu(v) = mu(w), or nullopt when it misses alpha^2 >= 0.
std::optional<Wall> numerical_wall(const FanoQ& X, const TruncQ& v, const TruncQ& w);

/// Center -(d+2)/(2d), radius^2 ((d-2)/(2d))^2; degenerate at d = 2.
Wall semicircle_C(const FanoQ& X);

/// Apex (alpha^2, beta) = (radius2, center_beta) of a semicircle.
TiltQ wall_apex(const Wall& wall);

struct Candidate {
    TruncQ w = TruncQ::Zero();  // canonical half: lexicographically smaller of w, v - w
    Wall wall;
    Rational delta_w{0};
    Rational delta_rest{0};
    bool im_ok = false;     // 0 < ch1^beta0(w) < ch1^beta0(v)
    bool alpha_pos = false; // slope equality at some alpha^2 > 0 on beta = beta0
    std::optional<Rational> alpha2;  // crossing point on beta = beta0; none for proportional classes
};

/// Recomputes every recorded condition of a candidate from (v, w, beta0).
/// v is the presentation actually used (ch1^beta0(v) > 0).
bool check_candidate(const FanoQ& X, const TruncQ& v, const TruncQ& w, const Rational& beta0,
                     const Rational& alpha2_max);

struct EnumerationOptions {
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Lattice classes w with 0 <= ch1^beta0(w) <= ch1^beta0(v), mu(w) = mu(v) at
/// some (alpha^2, beta0) with 0 < alpha^2 <= alpha2_max (or at alpha^2 = 0,
/// reported with alpha_pos = false), and Delta(w), Delta(v - w) in [0, Delta(v)].
/// v with ch1^beta0(v) < 0 is replaced by -v, the class of the shift.
/// Throws InvalidInput when ch1^beta0(v) = 0 or v is off the lattice.
std::vector<Candidate> enumerate_candidates(const FanoQ& X, const TruncQ& v, const Rational& beta0,
                                            const Rational& alpha2_max, const EnumerationOptions& opts = {});

/// Closed or open end of a rational interval; nullopt bounds are infinite.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_open = false;
    bool hi_open = false;

    static Interval all() { return {}; }
    static Interval above(Rational x, bool open) { return {std::move(x), std::nullopt, open, false}; }
    static Interval below(Rational x, bool open) { return {std::nullopt, std::move(x), false, open}; }

    bool empty() const;
    Interval intersect(const Interval& other) const;
    std::string str() const;
};

struct CertificateCase {
    std::string parameters;
    std::vector<std::string> constraints;
    std::string contradiction;
    bool infeasible = false;  // set only by an exact check
};

enum class Verdict { no_wall, inconclusive };

std::string to_string(Verdict verdict);

struct Certificate {
    std::string which;
    int d = 0;
    TruncQ v_twisted = TruncQ::Zero();
    Rational beta0{0};
    std::vector<Rational> strata;  // admissible ch1^beta0(w) values
    std::vector<CertificateCase> cases;
    Verdict verdict = Verdict::inconclusive;
};

enum class CertifiedClass { ideal_line, J_line };

/// Case split on ch1^beta0(w) valid for every alpha > 0. Returns no_wall only
/// if every admissible stratum is an end stratum (0 or ch1^beta0(v)) and each
/// case is refuted by an empty interval intersection.
Certificate certify_no_walls(const FanoQ& X, const TruncQ& v, const Rational& beta0, std::string label = "class");

/// The two classes of interest at beta0 = -1/2.
Certificate no_wall_certificate(const FanoQ& X, CertifiedClass which);

/// Distinct walls met by enumerations on beta0 = lo, lo + step, ..., <= hi.
/// Grid points with ch1^beta0(v) = 0 are skipped. Degenerate and "everywhere"
/// loci are not walls and are dropped. Sorted by (center, radius2).
std::vector<Wall> walls_in_region(const FanoQ& X, const TruncQ& v, const Rational& beta_lo, const Rational& beta_hi,
                                  const Rational& alpha2_max, const Rational& step = Rational(1, 24));

/// True iff no two walls cross (pairs are nested or disjoint).
/// Throws InvalidInput when the walls belong to non-proportional classes.
bool nesting_check(const std::vector<Wall>& walls);

struct PartCheck {
    TruncQ w = TruncQ::Zero();
    ExactComplex<Rational> charge;
    bool lattice = false;
    Rational delta{0};
    bool delta_ok = false;  // 0 <= Delta(w) <= Delta(v)
};

struct DecompositionReport {
    std::vector<PartCheck> parts;
    bool slopes_equal = false;  // all charges on one real line through 0
    bool lattice_ok = false;
    bool delta_ok = false;
    bool consistent = false;
};

/// Throws InvalidInput unless the parts sum to v.
DecompositionReport verify_decomposition(const FanoQ& X, const TruncQ& v, const std::vector<TruncQ>& parts,
                                         const TiltQ& pt);

}  // namespace fanoku
