// fanoku: command-line front end.
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 invalid input.

#include "fanoku/error.hpp"
#include "fanoku/io.hpp"
#include "fanoku/kunum.hpp"
#include "fanoku/plot.hpp"
#include "fanoku/report.hpp"
#include "fanoku/scenarios.hpp"
#include "fanoku/wallengine.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace fanoku;

namespace {

struct Globals {
    int d = 3;
    std::string format = "json";
    std::string out;
};

struct PointArgs {
    std::string alpha2;
    std::string beta;
    std::string sq;

    void add(CLI::App* cmd) {
        cmd->add_option("--alpha2", alpha2, "alpha^2 as p/q");
        cmd->add_option("--beta", beta, "beta as p/q");
        cmd->add_option("--sq", sq, "Li-Zhao point s,q");
    }

    bool given() const { return !alpha2.empty() || !beta.empty() || !sq.empty(); }

    TiltQ get(const TiltQ& fallback) const {
        if (!sq.empty()) {
            if (!alpha2.empty() || !beta.empty()) throw InvalidInput("give either --sq or --alpha2/--beta");
            return from_lizhao(parse_sq(sq));
        }
        if (alpha2.empty() && beta.empty()) return fallback;
        if (alpha2.empty() || beta.empty()) throw InvalidInput("--alpha2 and --beta go together");
        TiltQ pt{parse_rational(alpha2), parse_rational(beta)};
        if (!pt.valid()) throw InvalidInput("alpha^2 must be positive");
        return pt;
    }
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw InvalidInput("cannot open output file '" + g.out + "'");
    f << text;
}

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string q = "\"";
    for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array() && !j.empty()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
    } else {
        rows.emplace_back(prefix, scalar_text(j));
    }
}

std::string render(const Globals& g, const json& j) {
    if (g.format == "json") return j.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::ostringstream s;
    if (g.format == "csv") {
        s << "key,value\n";
        for (const auto& [k, v] : rows) s << k << "," << csv_field(v) << "\n";
    } else {
        s << "| key | value |\n|---|---|\n";
        for (const auto& [k, v] : rows) s << "| " << k << " | " << v << " |\n";
    }
    return s.str();
}

json wall_json(const Wall& w) {
    json j{{"kind", to_string(w.kind)}};
    if (w.kind != WallKind::everywhere) {
        j["center"] = to_string(w.center_beta);
        if (w.kind == WallKind::semicircle) j["radius2"] = to_string(w.radius2);
    }
    if (w.degenerate()) j["degenerate"] = true;
    return j;
}

json certificate_json(const Certificate& c) {
    json cases = json::array();
    for (const auto& k : c.cases) {
        cases.push_back(json{{"parameters", k.parameters},
                             {"constraints", k.constraints},
                             {"contradiction", k.contradiction},
                             {"infeasible", k.infeasible}});
    }
    json strata = json::array();
    for (const auto& b : c.strata) strata.push_back(to_string(b));
    return json{{"which", c.which},      {"d", c.d},           {"beta0", to_string(c.beta0)},
                {"v_twisted", character_json(c.v_twisted)}, {"strata", strata}, {"cases", cases},
                {"verdict", to_string(c.verdict)}};
}

std::string certificate_text(const Certificate& c) {
    std::ostringstream s;
    s << "certificate " << c.which << " (d = " << c.d << ", beta0 = " << to_string(c.beta0) << ")\n";
    s << "ch^beta0(v) = " << format_character(c.v_twisted) << "\n";
    s << "strata ch1^beta0(w):";
    for (const auto& b : c.strata) s << " " << to_string(b);
    s << "\n";
    for (const auto& k : c.cases) {
        s << "case " << k.parameters << "\n";
        for (const auto& line : k.constraints) s << "  - " << line << "\n";
        s << "  => " << k.contradiction << (k.infeasible ? " [infeasible]" : " [open]") << "\n";
    }
    s << "verdict: " << to_string(c.verdict) << "\n";
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tilt-stability and Kuznetsov-component numerics on index-two Fano threefolds"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--d", g.d, "degree H^3 in {1,...,5}")->check(CLI::Range(1, 5));
    app.add_option("--format", g.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--out", g.out, "write output to this file");

    // chern
    auto* chern = app.add_subcommand("chern", "character data and Ku projection of a class");
    std::string cls;
    std::string beta_s;
    chern->add_option("--class", cls, "c0,c1,c2,c3 or O, O(k), I, J, Oline(m), pt, with optional [n]")->required();
    chern->add_option("--beta", beta_s, "also print ch^beta");

    // chi
    auto* chi = app.add_subcommand("chi", "Euler pairing chi(E, F)");
    std::string cls_e, cls_f;
    chi->add_option("--E", cls_e)->required();
    chi->add_option("--F", cls_f)->required();

    // twist
    auto* tw = app.add_subcommand("twist", "twisted character ch^beta");
    tw->add_option("--class", cls)->required();
    tw->add_option("--beta", beta_s)->required();

    // slope
    auto* sl = app.add_subcommand("slope", "charges and slopes at a tilt point");
    PointArgs sl_pt;
    sl->add_option("--class", cls)->required();
    sl_pt.add(sl);

    // walls
    auto* wa = app.add_subcommand("walls", "candidate walls along beta = beta0 or over a beta range");
    std::string a2max = "4";
    std::string range;
    std::string step = "1/24";
    unsigned threads = 0;
    wa->add_option("--class", cls, "c0,c1,c2")->required();
    wa->add_option("--beta", beta_s, "beta0");
    wa->add_option("--beta-range", range, "lo,hi: sweep beta0 and list distinct walls");
    wa->add_option("--step", step, "sweep step for --beta-range");
    wa->add_option("--alpha2-max", a2max);
    wa->add_option("--threads", threads);

    // certificate
    auto* ce = app.add_subcommand("certificate", "symbolic no-wall certificate");
    std::string which;
    ce->add_option("--which", which, "ideal_line or J_line")->check(CLI::IsMember({"ideal_line", "J_line"}));
    ce->add_option("--class", cls, "any lattice class (with --beta)");
    ce->add_option("--beta", beta_s);

    // ku-matrix
    auto* km = app.add_subcommand("ku-matrix", "Euler, charge, mutation and Serre matrices on N(Ku)");
    PointArgs km_pt;
    km_pt.add(km);

    // verify
    auto* ve = app.add_subcommand("verify", "run verification scenarios");
    std::string scenario = "all";
    PointArgs ve_pt;
    ve->add_option("scenario", scenario, "thmU, lines, jcomplex, numclass, mutation, orbit or all");
    ve_pt.add(ve);

    // plot
    auto* pl = app.add_subcommand("plot", "SVG of the (beta, alpha) plane or the (s, q) chart");
    std::string plane = "alphabeta";
    std::vector<std::string> points, chars, chords;
    std::string viewport, title;
    bool no_region = false;
    pl->add_option("--plane", plane)->check(CLI::IsMember({"alphabeta", "sq"}));
    pl->add_option("--class", cls, "draw the walls of this class");
    pl->add_option("--point", points, "label=x,y in plane coordinates (beta,alpha^2 or s,q)");
    pl->add_option("--char", chars, "label=CLASS, drawn at its (s, q) point");
    pl->add_option("--chord", chords, "s1,q1;s2,q2");
    pl->add_option("--viewport", viewport, "xmin,xmax,ymin,ymax");
    pl->add_option("--title", title);
    pl->add_flag("--no-region", no_region, "do not shade V");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const FanoQ X(g.d);
        const TiltQ default_pt{Rational(1, 16), Rational(-1, 2)};

        if (*chern) {
            const ChernQ ch = parse_character(X, cls);
            json j{{"d", g.d}, {"class", cls}, {"ch", character_json(ch)}};
            if (!beta_s.empty()) j["twisted"] = character_json(twist(ch, parse_rational(beta_s)));
            j["discriminant"] = to_string(discriminant(ch));
            j["lattice"] = lattice_check(X, ch);
            j["chi_O"] = to_string(euler_pairing(X, chern_line_bundle(X, 0), ch));
            j["chi_OH"] = to_string(euler_pairing(X, chern_line_bundle(X, 1), ch));
            try {
                const auto k = project_to_ku(X, ch);
                j["ku"] = json{{"x", to_string(k(0))}, {"y", to_string(k(1))}};
            } catch (const NotInKuComponent& e) {
                j["ku"] = json{{"error", "not in Ku"}, {"offending", e.offending_chi()}};
            }
            emit(g, render(g, j));
            return 0;
        }
        if (*chi) {
            const ChernQ E = parse_character(X, cls_e);
            const ChernQ F = parse_character(X, cls_f);
            emit(g, render(g, json{{"d", g.d}, {"E", character_json(E)}, {"F", character_json(F)},
                                   {"chi", to_string(euler_pairing(X, E, F))}}));
            return 0;
        }
        if (*tw) {
            const ChernQ ch = parse_character(X, cls);
            const Rational b = parse_rational(beta_s);
            emit(g, render(g, json{{"d", g.d}, {"beta", to_string(b)}, {"ch", character_json(ch)},
                                   {"twisted", character_json(twist(ch, b))}}));
            return 0;
        }
        if (*sl) {
            const ChernQ ch = parse_character(X, cls);
            const TiltQ pt = sl_pt.get(default_pt);
            const auto P = to_lizhao(pt);
            json j{{"d", g.d}, {"alpha2", to_string(pt.alpha2)}, {"beta", to_string(pt.beta)}, {"ch", character_json(ch)}};
            j["charge"] = complex_json(charge(X, pt, ch));
            j["slope"] = slope_json(slope(X, pt, ch));
            j["rotated_charge"] = complex_json(rotated_charge(X, pt, ch));
            j["rotated_slope"] = slope_json(rotated_slope(X, pt, ch));
            j["sq"] = json{{"s", to_string(P.s)}, {"q", to_string(P.q)}};
            j["lizhao_slope"] = slope_json(lizhao_slope(X, P, ch));
            j["in_region_V"] = in_region_V(pt);
            emit(g, render(g, j));
            return 0;
        }
        if (*wa) {
            const TruncQ v = parse_trunc(X, cls);
            const Rational M = parse_rational(a2max);
            if (!range.empty()) {
                const auto lh = parse_rational_list(range, 2);
                const auto walls = walls_in_region(X, v, lh[0], lh[1], M, parse_rational(step));
                if (g.format == "csv") {
                    std::string s = "kind,center,radius2\n";
                    for (const auto& w : walls)
                        s += to_string(w.kind) + "," + to_string(w.center_beta) + "," + to_string(w.radius2) + "\n";
                    emit(g, s);
                    return 0;
                }
                json arr = json::array();
                for (const auto& w : walls) arr.push_back(wall_json(w));
                emit(g, render(g, json{{"d", g.d}, {"v", character_json(v)}, {"beta_range", range},
                                       {"alpha2_max", to_string(M)}, {"walls", arr},
                                       {"nested", nesting_check(walls)}}));
                return 0;
            }
            if (beta_s.empty()) throw InvalidInput("walls needs --beta or --beta-range");
            const Rational b0 = parse_rational(beta_s);
            const auto cands = enumerate_candidates(X, v, b0, M, EnumerationOptions{threads});
            if (g.format == "csv") {
                std::string s = "c0,c1,c2,center,radius2,delta_w,delta_rest\n";
                for (const auto& c : cands) {
                    const bool circ = c.wall.kind == WallKind::semicircle;
                    s += format_character(c.w) + "," +
                         (c.wall.kind == WallKind::everywhere ? std::string("everywhere") : to_string(c.wall.center_beta)) +
                         "," + (circ ? to_string(c.wall.radius2) : std::string()) + "," + to_string(c.delta_w) + "," +
                         to_string(c.delta_rest) + "\n";
                }
                emit(g, s);
                return 0;
            }
            json arr = json::array();
            for (const auto& c : cands) {
                arr.push_back(json{{"w", character_json(c.w)},
                                   {"wall", wall_json(c.wall)},
                                   {"delta_w", to_string(c.delta_w)},
                                   {"delta_rest", to_string(c.delta_rest)},
                                   {"im_ok", c.im_ok},
                                   {"alpha_pos", c.alpha_pos},
                                   {"alpha2", c.alpha2 ? json(to_string(*c.alpha2)) : json(nullptr)}});
            }
            emit(g, render(g, json{{"d", g.d}, {"v", character_json(v)}, {"beta0", to_string(b0)},
                                   {"alpha2_max", to_string(M)}, {"candidates", arr}}));
            return 0;
        }
        if (*ce) {
            Certificate c;
            if (!which.empty()) {
                c = no_wall_certificate(X, which == "ideal_line" ? CertifiedClass::ideal_line : CertifiedClass::J_line);
            } else {
                if (cls.empty() || beta_s.empty()) throw InvalidInput("certificate needs --which or --class with --beta");
                c = certify_no_walls(X, parse_trunc(X, cls), parse_rational(beta_s), cls);
            }
            emit(g, g.format == "md" ? certificate_text(c) : render(g, certificate_json(c)));
            return 0;
        }
        if (*km) {
            json j{{"d", g.d}};
            j["euler"] = matrix_json(ku_euler_matrix(X));
            j["mutation"] = matrix_json(mutation_action(X));
            j["serre"] = matrix_json(serre_action(X));
            if (km_pt.given()) {
                const TiltQ pt = km_pt.get(default_pt);
                j["alpha2"] = to_string(pt.alpha2);
                j["beta"] = to_string(pt.beta);
                j["charge"] = matrix_json(charge_matrix(X, pt));
                j["charge_normalized"] = matrix_json(normalized_charge_matrix(X, pt));
                j["orientation_det"] = to_string(orientation_det(X, pt));
            }
            emit(g, render(g, j));
            return 0;
        }
        if (*ve) {
            const auto reports = run_scenarios(X, scenario, ve_pt.get(default_pt));
            bool pass = true;
            for (const auto& r : reports) pass = pass && r.verdict();
            if (g.format == "json") {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                json j{{"schema_version", Report::schema_version}, {"d", g.d}, {"scenario", scenario},
                       {"reports", arr}, {"verdict", pass ? "pass" : "fail"}};
                emit(g, j.dump(2) + "\n");
            } else {
                emit(g, g.format == "csv" ? to_csv(reports) : to_markdown(reports));
            }
            return pass ? 0 : 1;
        }
        if (*pl) {
            PlotSpec spec = PlotSpec::defaults(plane == "sq" ? Plane::sq : Plane::alphabeta);
            spec.region_V = !no_region;
            spec.title = title;
            if (!viewport.empty()) {
                const auto v = parse_rational_list(viewport, 4);
                spec.xmin = v[0];
                spec.xmax = v[1];
                spec.ymin = v[2];
                spec.ymax = v[3];
            }
            if (!cls.empty()) {
                const Rational ymax = spec.plane == Plane::alphabeta ? spec.ymax * spec.ymax : Rational(4);
                spec.walls = walls_in_region(X, parse_trunc(X, cls), spec.xmin, spec.xmax, ymax);
            }
            const auto split = [](const std::string& s) {
                const auto eq = s.find('=');
                if (eq == std::string::npos) throw InvalidInput("expected label=value, got '" + s + "'");
                return std::pair{s.substr(0, eq), s.substr(eq + 1)};
            };
            for (const auto& p : points) {
                const auto [label, val] = split(p);
                const auto xy = parse_rational_list(val, 2);
                spec.points.push_back({label, xy[0], xy[1]});
            }
            for (const auto& p : chars) {
                if (spec.plane != Plane::sq) throw InvalidInput("--char needs --plane sq");
                const auto [label, val] = split(p);
                const auto P = char_point(X, parse_character(X, val));
                spec.points.push_back({label, P.s, P.q});
            }
            for (const auto& c : chords) {
                if (spec.plane != Plane::sq) throw InvalidInput("--chord needs --plane sq");
                const auto semi = c.find(';');
                if (semi == std::string::npos) throw InvalidInput("chord needs 's1,q1;s2,q2'");
                spec.chords.emplace_back(parse_sq(c.substr(0, semi)), parse_sq(c.substr(semi + 1)));
            }
            emit(g, render_svg(spec));
            return 0;
        }
    } catch (const InvalidInput& e) {
        std::cerr << "fanoku: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const NotInKuComponent& e) {
        std::cerr << "fanoku: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fanoku: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
