#include "fanoku/wallengine.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fanoku;
using R = Rational;

namespace {

TruncQ tr(long a, long b, R c) { return make_trunc<R>(R(a), R(b), std::move(c)); }

}  // namespace

TEST_CASE("numerical walls: shapes and invariances") {
    const FanoQ X(3);
    const TruncQ v = tr(1, 0, R(-1, 3));
    const TruncQ w = tr(1, -1, R(1, 2));
    const auto W = numerical_wall(X, v, w);
    REQUIRE(W);
    CHECK(W->kind == WallKind::semicircle);
    // symmetric in the two classes, invariant under w -> v - w and scaling
    for (const TruncQ& w2 : {TruncQ(v - w), TruncQ(R(3) * w), TruncQ(-w), TruncQ(w + R(2) * v)}) {
        const auto W2 = numerical_wall(X, v, w2);
        REQUIRE(W2);
        CHECK(W2->same_locus(*W));
    }
    CHECK(numerical_wall(X, w, v)->same_locus(*W));
    // equal slopes at every rational point of the semicircle
    for (int k = -4; k <= 4; ++k) {
        const R beta = W->center_beta + R(k, 10);
        const R a2 = W->radius2 - (beta - W->center_beta) * (beta - W->center_beta);
        if (!(a2 > 0)) continue;
        const TiltQ pt{a2, beta};
        CHECK(cross(charge(X, pt, v), charge(X, pt, w)) == 0);
    }
    const auto V = numerical_wall(X, tr(1, 0, R(0)), tr(1, 0, R(1)));
    REQUIRE(V);
    CHECK(V->kind == WallKind::vertical);
    const auto E = numerical_wall(X, v, TruncQ(R(2) * v));
    REQUIRE(E);
    CHECK(E->kind == WallKind::everywhere);
    CHECK_FALSE(numerical_wall(X, tr(1, 0, R(-1)), tr(0, 1, R(0))));
    CHECK_FALSE(numerical_wall(X, tr(0, 1, R(0)), tr(0, 1, R(1))));
}

TEST_CASE("semicircle C") {
    for (int d = 2; d <= 5; ++d) {
        CAPTURE(d);
        const FanoQ X(d);
        const Wall C = semicircle_C(X);
        CHECK(C.center_beta == R(-(d + 2), 2 * d));
        CHECK(C.radius2 == R(d - 2, 2 * d) * R(d - 2, 2 * d));
        CHECK(C.degenerate() == (d == 2));
        const TruncQ G = tr(-1, 0, R(1, d));
        const auto W = numerical_wall(X, G, truncate(chern_line_bundle(X, -1)));
        REQUIRE(W);
        CHECK(W->same_locus(C));
        if (d > 2) {
            const TiltQ apex = wall_apex(C);
            CHECK(2 - d * apex.beta * apex.beta + d * apex.alpha2 == 0);
        }
    }
    CHECK_THROWS_AS(wall_apex(Wall{WallKind::vertical}), InvalidInput);
}

TEST_CASE("no walls for I_l and J_l on beta = -1/2") {
    for (int d = 1; d <= 5; ++d) {
        CAPTURE(d);
        const FanoQ X(d);
        const TruncQ I = truncate(chern_ideal_line(X));
        const TruncQ J = truncate(chern_J(X));
        CHECK(twist(I, R(-1, 2)) == make_trunc<R>(R(1), R(1, 2), R(d - 8, 8 * d)));
        CHECK(enumerate_candidates(X, I, R(-1, 2), R(4)).empty());
        CHECK(enumerate_candidates(X, J, R(-1, 2), R(4)).empty());
        const auto ci = no_wall_certificate(X, CertifiedClass::ideal_line);
        const auto cj = no_wall_certificate(X, CertifiedClass::J_line);
        CHECK(ci.verdict == Verdict::no_wall);
        CHECK(cj.verdict == Verdict::no_wall);
        CHECK(ci.cases.size() == 4);
        for (const auto& c : ci.cases) CHECK(c.infeasible);
        CHECK(ci.strata == std::vector<R>{R(0), R(1, 2)});
    }
    // d = 2: nothing meets beta = -1 for the class of I_l[1]
    CHECK(enumerate_candidates(FanoQ(2), tr(-1, 0, R(1, 2)), R(-1), R(4)).empty());
}

TEST_CASE("certificate is inconclusive when interior strata exist") {
    const FanoQ X(3);
    const auto c = certify_no_walls(X, tr(1, 0, R(-4, 3)), R(-3, 2));
    CHECK(c.verdict == Verdict::inconclusive);
}

TEST_CASE("enumeration errors") {
    const FanoQ X(3);
    CHECK_THROWS_AS(enumerate_candidates(X, tr(1, 0, R(-1, 3)), R(0), R(4)), InvalidInput);
    CHECK_THROWS_AS(enumerate_candidates(X, tr(1, 0, R(1, 7)), R(-1, 2), R(4)), InvalidInput);
    CHECK_THROWS_AS(enumerate_candidates(X, tr(1, 0, R(-1, 3)), R(-1, 2), R(0)), InvalidInput);
}

TEST_CASE("enumeration: recorded conditions hold and shifts are handled") {
    const FanoQ X(3);
    const TruncQ v = tr(1, 0, R(-2));
    const R beta0(-3, 2);
    const auto cands = enumerate_candidates(X, v, beta0, R(4));
    REQUIRE_FALSE(cands.empty());
    const auto flipped = enumerate_candidates(X, TruncQ(-v), beta0, R(4));
    REQUIRE(flipped.size() == cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        CHECK(check_candidate(X, v, cands[i].w, beta0, R(4)));
        CHECK(cands[i].w == flipped[i].w);
        CHECK(cands[i].delta_w == discriminant(cands[i].w));
        CHECK(cands[i].delta_w >= 0);
        CHECK(cands[i].delta_rest >= 0);
        CHECK(cands[i].delta_w <= discriminant(v));
    }
    // single-threaded run gives the same list
    const auto serial = enumerate_candidates(X, v, beta0, R(4), EnumerationOptions{1});
    REQUIRE(serial.size() == cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) CHECK(serial[i].w == cands[i].w);
}

TEST_CASE("enumeration agrees with the brute-force scan") {
    std::mt19937_64 rng(101);
    for (int d : {2, 3, 4}) {
        const FanoQ X(d);
        for (const R beta0 : {R(-1, 2), R(-1, 3)}) {
            for (int n = 0; n < 4; ++n) {
                const TruncQ v = oracle::random_wall_class(rng, d, beta0);
                CAPTURE(d);
                CAPTURE(to_string(beta0));
                CAPTURE(to_string(v(0)) + "," + to_string(v(1)) + "," + to_string(v(2)));
                const auto brute = oracle::brute_force_walls(X, v, beta0, R(1), 120, 2 * d);
                CHECK(brute.max_abs_rank < 60);
                CHECK(oracle::engine_classes(enumerate_candidates(X, v, beta0, R(1))) == brute.classes);
            }
        }
    }
}

TEST_CASE("walls in a region and nesting") {
    const FanoQ X(3);
    const TruncQ G = tr(-1, 0, R(1, 3));
    const auto walls = walls_in_region(X, G, R(-1), R(0), R(4));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].same_locus(semicircle_C(X)));
    CHECK(nesting_check(walls));
    Wall a{WallKind::semicircle, R(0), R(1)};
    Wall b{WallKind::semicircle, R(1), R(1)};
    Wall c{WallKind::semicircle, R(0), R(4)};
    a.v = b.v = c.v = G;
    CHECK_FALSE(nesting_check({a, b}));
    CHECK(nesting_check({a, c}));
    Wall line{WallKind::vertical, R(0)};
    line.v = G;
    CHECK_FALSE(nesting_check({a, line}));
    Wall other = a;
    other.v = tr(1, 1, R(0));
    CHECK_THROWS_AS(nesting_check({a, other}), InvalidInput);
}

TEST_CASE("decomposition check") {
    for (int d = 3; d <= 5; ++d) {
        const FanoQ X(d);
        const TruncQ G = tr(-1, 0, R(1, d));
        const TruncQ P = tr(1, -1, R(1, 2));
        const TruncQ Q = tr(-2, 1, R(2 - d, 2 * d));
        const auto rep = verify_decomposition(X, G, {P, Q}, wall_apex(semicircle_C(X)));
        CHECK(rep.slopes_equal);
        CHECK(rep.consistent == (d != 5));
        CHECK(discriminant(Q) == R(4 - d, d));
    }
    CHECK_THROWS_AS(verify_decomposition(FanoQ(3), tr(1, 0, R(0)), {tr(1, 1, R(0))}, TiltQ{R(1), R(0)}), InvalidInput);
}

TEST_CASE("intervals") {
    const auto a = Interval::above(R(0), true).intersect(Interval::below(R(0), false));
    CHECK(a.empty());
    const auto b = Interval::above(R(-1), false).intersect(Interval::below(R(0), false));
    CHECK_FALSE(b.empty());
    CHECK(b.str() == "[-1, 0]");
    CHECK(Interval::all().str() == "(-inf, inf)");
}
