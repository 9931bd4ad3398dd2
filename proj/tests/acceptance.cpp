// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include "fanoku/io.hpp"
#include "fanoku/kunum.hpp"
#include "fanoku/scenarios.hpp"
#include "fanoku/wallengine.hpp"
#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace fanoku;
using R = Rational;
using M2 = Matrix2<R>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = what;
            pass = false;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

M2 mat(long a, long b, long c, long d) {
    M2 m;
    m << R(a), R(b), R(c), R(d);
    return m;
}

R rnd(std::mt19937_64& rng, long lo, long hi, long den) {
    return R(std::uniform_int_distribution<long>(lo, hi)(rng), den);
}

/// Random rational point of V: beta in (-1, 0), alpha^2 strictly inside.
TiltQ random_V_point(std::mt19937_64& rng) {
    for (;;) {
        const R beta = rnd(rng, -99, -1, 100);
        const R bound = beta >= R(-1, 2) ? beta * beta : (1 + beta) * (1 + beta);
        const TiltQ pt{bound * rnd(rng, 1, 99, 100), beta};
        if (in_region_V(pt)) return pt;
    }
}

Outcome criterion1() {
    Outcome o;
    std::mt19937_64 rng(1001);
    for (int d = 1; d <= 5; ++d) {
        const FanoQ X(d);
        const std::string tag = "d=" + std::to_string(d) + ": ";
        o.require(X.todd() == make_chern<R>(R(1), R(1), R(1, 3) + R(1, d), R(1, d)), tag + "Todd class");
        o.require(euler_pairing(X, chern_line_bundle(X, 0), chern_line_bundle(X, 0)) == 1, tag + "chi(O,O)");
        o.require(euler_pairing(X, chern_ideal_line(X), chern_ideal_line(X)) == -1, tag + "chi(I,I)");
        for (int n = 0; n < 1000; ++n) {
            const auto e = oracle::random_lattice_class(rng, d);
            const auto f = oracle::random_lattice_class(rng, d);
            const R lhs = euler_pairing(X, e, f);
            o.require(lhs == -euler_pairing(X, f, tensor_line(e, -2)), tag + "Serre duality");
            o.require(lhs == oracle::chi(d, oracle::to_q4(e), oracle::to_q4(f)), tag + "HRR oracle");
        }
    }
    if (o.pass) o.detail = "Todd class, chi(O,O)=1, chi(I,I)=-1, Serre duality on 1000 random classes per degree";
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::ostringstream times;
    for (int d = 1; d <= 5; ++d) {
        const auto t0 = Clock::now();
        const FanoQ X(d);
        const std::string tag = "d=" + std::to_string(d) + ": ";
        const TruncQ I = truncate(chern_ideal_line(X));
        const TruncQ J = truncate(chern_J(X));
        o.require(twist(I, R(-1, 2)) == make_trunc<R>(R(1), R(1, 2), R(d - 8, 8 * d)), tag + "ch^{-1/2}(I)");
        o.require(enumerate_candidates(X, I, R(-1, 2), R(4)).empty(), tag + "candidates for I");
        o.require(enumerate_candidates(X, J, R(-1, 2), R(4)).empty(), tag + "candidates for J");
        o.require(no_wall_certificate(X, CertifiedClass::ideal_line).verdict == Verdict::no_wall, tag + "certificate I");
        o.require(no_wall_certificate(X, CertifiedClass::J_line).verdict == Verdict::no_wall, tag + "certificate J");
        const double s = seconds_since(t0);
        o.require(s < 5.0, tag + "took " + std::to_string(s) + " s");
        times << (d > 1 ? ", " : "") << "d" << d << " " << s << "s";
    }
    if (o.pass) o.detail = "no candidates, verdict no-wall for I and J, all d (" + times.str() + ")";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (int d = 1; d <= 5; ++d) {
        const FanoQ X(d);
        const std::string tag = "d=" + std::to_string(d) + ": ";
        const auto sols = hrr_solve_class(X);
        o.require(sols.size() == 1, tag + "HRR solution count");
        if (sols.size() == 1) {
            o.require(sols[0] == make_chern<R>(R(1), R(0), R(-1, d), R(0)), tag + "HRR solution");
            o.require(sols[0] == chern_ideal_line(X), tag + "HRR solution is ch(I)");
        }
        if (d >= 3) {
            const TruncQ G = make_trunc<R>(R(-1), R(0), R(1, d));
            const auto W = numerical_wall(X, G, truncate(chern_line_bundle(X, -1)));  // O(-1)[2]
            o.require(W && W->kind == WallKind::semicircle && W->center_beta == R(-(d + 2), 2 * d) &&
                          W->radius2 == R(d - 2, 2 * d) * R(d - 2, 2 * d),
                      tag + "wall C");
            const TruncQ P = make_trunc<R>(R(1), R(-1), R(1, 2));
            const TruncQ Q = make_trunc<R>(R(-2), R(1), R(2 - d, 2 * d));
            const auto rep = verify_decomposition(X, G, {P, Q}, wall_apex(semicircle_C(X)));
            o.require(rep.consistent == (d != 5), tag + "decomposition (P, Q)");
        }
        const auto m = bms_max_m(X, TiltQ{R(0), R(-1, 2)});
        o.require(m.has_value(), tag + "BMS bound missing");
        if (m) o.require(d == 1 ? *m >= 1 : *m == 0, tag + "m_max = " + m->str());
    }
    if (o.pass) o.detail = "HRR class, wall C for d=3,4,5, (P,Q) consistent iff d in {3,4}, m_max as stated";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (int d = 1; d <= 5; ++d) {
        const FanoQ X(d);
        const std::string tag = "d=" + std::to_string(d) + ": ";
        const auto cert = orientation_certificate(X);
        o.require(cert.matches_closed_form && cert.positive, tag + "symbolic certificate");
        for (int i = 0; i < 100; ++i) {
            for (int j = 1; j <= 100; ++j) {
                const TiltQ pt{R(j, 25), R(-3, 2) + R(2 * i, 100)};
                const R det = orientation_det(X, pt);
                const R h = pt.beta + R(1, 2);
                o.require(det == h * h / 2 - R(1, 8) + R(1, d) + pt.alpha2 / 2, tag + "closed form on grid");
                o.require(det > 0, tag + "positivity on grid");
            }
        }
    }
    if (o.pass) o.detail = "interpolated polynomial equals the closed form; 10^4 grid points per degree";
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (int d = 1; d <= 5; ++d) {
        const FanoQ X(d);
        const std::string tag = "d=" + std::to_string(d) + ": ";
        const M2 A = mutation_action(X);
        const M2 E = ku_euler_matrix(X);
        const M2 S = serre_action(X);
        o.require(A.determinant() == 1, tag + "det A");
        o.require(A.inverse() * make_ku(R(1), R(0)) == -project_to_ku(X, chern_J(X)), tag + "A^-1[I] = -[J]");
        o.require(A.transpose() * E * A == E, tag + "Euler form invariance");
        o.require(E == S.transpose() * E.transpose(), tag + "E = S^T E^T");
        o.require(euler_pairing(X, chern_line_bundle(X, 0), tensor_line(chern_ideal_line(X), 1)) == d,
                  tag + "chi(O, I(H))");
    }
    const FanoQ X3(3);
    const M2 A3 = mutation_action(X3);
    o.require(A3 == mat(-2, -3, 1, 1), "A at d=3");
    o.require(A3 * A3 * A3 == M2::Identity(), "A^3 = id at d=3");
    const M2 S3 = serre_action(X3);
    o.require(S3 * S3 * S3 == -M2::Identity(), "S^3 = -id at d=3");
    const FanoQ X2(2);
    o.require(serre_action(X2) == M2::Identity(), "S = id at d=2");
    o.require(ku_euler_matrix(X2) == ku_euler_matrix(X2).transpose(), "E symmetric at d=2");
    if (o.pass) o.detail = "A(3) = [[-2,-3],[1,1]], chi(O, I(H)) = d, S^3 = -id (d=3), S = id (d=2), E = S^T E^T";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6006);
    std::size_t grid_points = 0;
    for (int d = 1; d <= 5; ++d) {
        const FanoQ X(d);
        const std::string tag = "d=" + std::to_string(d) + ": ";
        for (int k = 0; k < 100; ++k) {
            const TiltQ a = random_V_point(rng), b = random_V_point(rng);
            o.require(same_gl_orbit(charge_matrix(X, a), charge_matrix(X, b)), tag + "GL+ orbit");
        }
        for (const TiltQ& pt : region_V_grid()) {
            ++grid_points;
            const auto zi = rotated_charge(X, pt, chern_ideal_line(X));
            const auto zj = rotated_charge(X, pt, chern_J(X));
            o.require(phases_interleave(zj, zi), tag + "phase ordering");
        }
    }
    if (o.pass)
        o.detail = "100 random pairs per degree share an orbit; phi_J - 1 < phi_I < phi_J at " +
                   std::to_string(grid_points) + " grid points";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(7007);
    const FanoQ X(3);
    const QuadSurd<R> half(R(1, 2));
    int chords = 0;
    for (int n = 0; n < 1000; ++n) {
        const R s = rnd(rng, -64, 64, 16);
        const LiZhaoPoint<R> P{s, s * s / 2 + rnd(rng, -64, 64, 32)};
        o.require(phi_translate(P).height() == P.height(), "phi_translate height");

        const LiZhaoPoint<R> A{rnd(rng, -40, 40, 8), rnd(rng, -20, 60, 8)};
        const LiZhaoPoint<R> B{rnd(rng, -40, 40, 8), rnd(rng, -20, 60, 8)};
        if (!(A == B)) {
            if (const auto ch = parabola_chord(A, B)) {
                for (const auto& E : *ch) {
                    ++chords;
                    o.require((E.q - E.s * E.s * half).sign() == 0, "chord resubstitution");
                }
            }
        }

        const R rs = rnd(rng, -40, 40, 16);
        const LiZhaoPoint<R> Rp{rs, rs * rs / 2 + rnd(rng, 1, 64, 32)};
        auto c = oracle::random_lattice_class(rng, 3);
        if (c(0) == 0) c(0) = 1;
        if (char_point(X, c) == Rp) continue;
        const auto mu = lizhao_slope(X, Rp, c);
        if (!mu.is_finite()) continue;
        const auto b = factor_slope_bounds(X, Rp, c);
        const auto m = Slope<QuadSurd<R>>::finite(QuadSurd<R>(mu.value));
        o.require(b.lower <= m && m <= b.upper, "factor_slope_bounds bracket");
    }
    if (o.pass)
        o.detail = "1000 configurations; " + std::to_string(chords) + " chord points resubstitute to zero";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const auto t0 = Clock::now();
    const FanoQ X(3);
    const R beta0(-1, 2);
    std::mt19937_64 rng(8008);
    std::size_t total = 0;
    for (int n = 0; n < 20; ++n) {
        const TruncQ v = oracle::random_wall_class(rng, 3, beta0);
        const auto brute = oracle::brute_force_walls(X, v, beta0, R(1), 120, 6);
        const auto engine = oracle::engine_classes(enumerate_candidates(X, v, beta0, R(1)));
        o.require(brute.max_abs_rank < 60, "brute-force box too small for " + format_character(v));
        o.require(engine == brute.classes, "mismatch for v = " + format_character(v));
        total += engine.size();
    }
    const double s = seconds_since(t0);
    o.require(s < 60.0, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "20 classes, " + std::to_string(total) + " candidates, identical sets (" + std::to_string(s) + " s)";
    return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string(FANOKU_CLI) + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    return {pclose(p), out};
}

Outcome criterion9() {
    Outcome o;
    const std::vector<std::string> commands{
        "verify all --d 3 --format json",
        "plot --d 3 --class -1,0,1/3",
        "plot --d 3 --plane sq --char \"O(-H)[2]=O(-1)[2]\" --char I=I --chord \"-1,1/2;0,-1/3\"",
        "plot --plane sq --no-region",
        "plot --d 2 --plane alphabeta --point \"A=-3/4,1/16\"",
    };
    for (const auto& c : commands) {
        const auto [s1, out1] = run_cli(c);
        const auto [s2, out2] = run_cli(c);
        o.require(s1 == 0 && s2 == 0, "exit status of '" + c + "'");
        o.require(!out1.empty() && out1 == out2, "output differs for '" + c + "'");
    }
    if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical across two runs";
    return o;
}

}  // namespace

int main() {
    const std::array<std::function<Outcome()>, 9> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                           criterion6, criterion7, criterion8, criterion9};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
