#pragma once

#include <mindeg/json_io.hpp>
#include <mindeg/paper_check.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mindeg::cli {

namespace detail {

inline std::pair<long, long> parse_pair(const std::string& s) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected 'a,b', got '" + s + "'");
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

inline RuledSurface parse_surface(const std::string& s) {
    if (s == "P1xP1") return RuledSurface::P1xP1();
    if (s.size() >= 2 && s[0] == 'F') return RuledSurface::Fe(std::stoi(s.substr(1)));
    throw std::invalid_argument("unknown base surface '" + s + "' (use F<e> or P1xP1)");
}

inline DivisorClass parse_class(const RuledSurface& base, const std::string& s) {
    const auto [a, b] = parse_pair(s);
    return {base, a, b};
}

struct OracleRow {
    std::string kind;
    int genus;
    SplitBundle trace_zero;
    GeneratorProfile profile;
};

inline OracleRow oracle_row(const CurveFixture& fixture, int max_degree) {
    return std::visit(
        [&](const auto& curve) {
            OracleRow row{"", curve.genus(), oracle_pushforward_split(curve),
                          canonical_profile_bruteforce(curve, max_degree)};
            row.kind = std::is_same_v<std::decay_t<decltype(curve)>, HyperellipticCurve>
                           ? "hyperelliptic"
                           : "trigonal";
            return row;
        },
        fixture);
}

}  // namespace detail

// Dispatches one command line. Exit codes: 0 success, 1 domain error (or a
// failing check run), 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact canonical-ring computations for covers of minimal-degree varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    int n = 0, r = 0, s = 0, t = 0, g = 0;
    int max_level = 8, max_degree = 6, parity_m = 2, star_override = -1;
    bool surface_closed_form = false;
    std::string fixtures_path, base_str, l1_str, l2_str, hyperplane_str, report_path;

    CLI::App* split_cmd = app.add_subcommand("split-type", "trace-zero splitting type");
    split_cmd->add_option("--n", n, "cover degree")->required();
    split_cmd->add_option("--r", r, "target degree")->required();

    CLI::App* beta_cmd = app.add_subcommand("beta", "codimension of one multiplication map");
    beta_cmd->add_option("--n", n)->required();
    beta_cmd->add_option("--r", r)->required();
    beta_cmd->add_option("--s", s)->required();
    beta_cmd->add_option("--t", t)->required();

    CLI::App* grid_cmd = app.add_subcommand("beta-grid", "codimension grid over (s, t)");
    grid_cmd->add_option("--n", n)->required();
    grid_cmd->add_option("--r", r)->required();
    grid_cmd->add_option("--max-level", max_level, "largest s + t");

    CLI::App* gens_cmd = app.add_subcommand("gens", "generator profile of the section ring");
    gens_cmd->add_option("--n", n)->required();
    gens_cmd->add_option("--r", r)->required();
    gens_cmd->add_flag("--surface", surface_closed_form,
                       "closed-form surface profile (cross-checked)");

    CLI::App* hyp_cmd = app.add_subcommand("hyperelliptic", "hyperelliptic canonical ring");
    hyp_cmd->add_option("--g", g, "genus")->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "run explicit curve fixtures");
    oracle_cmd->add_option("--fixtures", fixtures_path, "JSON fixture file");
    oracle_cmd->add_option("--max-degree", max_degree, "profile search depth");

    CLI::App* surface_cmd = app.add_subcommand("surface", "validate a double-cover tower");
    surface_cmd->add_option("--base", base_str, "F<e> or P1xP1")->required();
    surface_cmd->add_option("--l1", l1_str, "first branch class a,b")->required();
    surface_cmd->add_option("--l2", l2_str, "second branch class a,b")->required();
    surface_cmd->add_option("--hyperplane", hyperplane_str, "hyperplane class a,b")->required();

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "surfaces of minimal degree");
    catalog_cmd->add_option("--r", r, "degree")->required();

    CLI::App* parity_cmd = app.add_subcommand("parity", "odd-degree scroll obstruction");
    parity_cmd->add_option("--n", n, "cover degree")->required();
    parity_cmd->add_option("--m", parity_m, "hyperplane coefficient");

    CLI::App* cy3_cmd = app.add_subcommand("cy3", "threefold normal-generation record");
    cy3_cmd->add_option("--n", n, "cover degree")->required();
    cy3_cmd->add_option("--star-override", star_override, "force the trace-square condition")
        ->check(CLI::IsMember({0, 1}));

    CLI::App* check_cmd = app.add_subcommand("paper-check", "run the full acceptance suite");
    check_cmd->add_option("--report", report_path, "write a JSON summary");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*split_cmd) {
            const SplitBundle b = theta_splitting(n, r);
            out << (format == "json" ? to_json(b).dump() : b.str()) << '\n';
        } else if (*beta_cmd) {
            const long codim = beta_codim(n, r, s, t);
            if (format == "json")
                out << json{{"n", n}, {"r", r}, {"s", s}, {"t", t}, {"codim", codim}}.dump()
                    << '\n';
            else
                out << "codim " << codim << '\n';
        } else if (*grid_cmd) {
            const CoverModel model = CoverModel::theta_cover(n, r);
            json rows = json::array();
            for (int a = 1; a < max_level; ++a)
                for (int b = 1; a + b <= max_level; ++b) {
                    const long codim = model.beta_codim(a, b);
                    if (format == "json")
                        rows.push_back({{"s", a}, {"t", b}, {"codim", codim}});
                    else
                        out << "s=" << a << " t=" << b << " codim " << codim << '\n';
                }
            if (format == "json") out << rows.dump() << '\n';
        } else if (*gens_cmd) {
            const GeneratorProfile p =
                surface_closed_form ? surface_canonical_profile(n, r) : generator_profile(n, r);
            out << (format == "json" ? to_json(p).dump() : p.str()) << '\n';
        } else if (*hyp_cmd) {
            const GeneratorProfile p = hyperelliptic_profile(g);
            out << (format == "json" ? to_json(p).dump() : p.str()) << '\n';
        } else if (*oracle_cmd) {
            std::vector<CurveFixture> fixtures;
            if (fixtures_path.empty()) {
                fixtures.emplace_back(HyperellipticCurve(standard_fixture_poly(6)));
                fixtures.emplace_back(HyperellipticCurve(standard_fixture_poly(8)));
                fixtures.emplace_back(CyclicTrigonalCurve(standard_fixture_poly(6)));
                fixtures.emplace_back(CyclicTrigonalCurve(standard_fixture_poly(9)));
            } else {
                std::ifstream in(fixtures_path);
                if (!in) throw std::runtime_error("cannot read " + fixtures_path);
                fixtures = curve_fixtures_from_json(json::parse(in));
            }
            json rows = json::array();
            for (const CurveFixture& fixture : fixtures) {
                const detail::OracleRow row = detail::oracle_row(fixture, max_degree);
                if (format == "json")
                    rows.push_back({{"kind", row.kind},
                                    {"genus", row.genus},
                                    {"trace_zero", to_json(row.trace_zero)},
                                    {"canonical_profile", to_json(row.profile)}});
                else
                    out << row.kind << " genus " << row.genus << "  trace-zero "
                        << row.trace_zero.str() << "  generators " << row.profile.str() << '\n';
            }
            if (format == "json") out << rows.dump() << '\n';
        } else if (*surface_cmd) {
            const RuledSurface base = detail::parse_surface(base_str);
            const DoubleCoverTower tower(base, detail::parse_class(base, l1_str),
                                         detail::parse_class(base, l2_str));
            const CoverReport rep =
                validate_canonical_cover(tower, detail::parse_class(base, hyperplane_str));
            if (format == "json") {
                out << to_json(rep).dump() << '\n';
            } else {
                out << "k_class_ok " << (rep.k_class_ok ? "yes" : "no") << '\n'
                    << "regular " << (rep.regular ? "yes" : "no") << '\n'
                    << "h0K " << rep.h0K << " vs hyperplane " << rep.h0_hyperplane << '\n'
                    << "cover degree " << rep.cover_degree << ", image degree "
                    << rep.target_degree << '\n'
                    << "predicted generators " << rep.predicted_profile.str() << '\n'
                    << "branch systems base-point-free " << (rep.branch_bpf_ok ? "yes" : "no")
                    << '\n'
                    << "image is a cone " << (rep.image_is_cone ? "yes" : "no") << '\n'
                    << (rep.pass() ? "PASS" : "FAIL") << '\n';
            }
        } else if (*catalog_cmd) {
            const auto entries = minimal_degree_catalog(r);
            if (format == "json") {
                json rows = json::array();
                for (const auto& e : entries) rows.push_back(e.str());
                out << rows.dump() << '\n';
            } else {
                for (const auto& e : entries) out << e.str() << '\n';
            }
        } else if (*parity_cmd) {
            const RuledSurface f0 = RuledSurface::Fe(0);
            const bool obstructed =
                parity_obstruction(DivisorClass{f0, 1, parity_m}, n);
            if (format == "json")
                out << json{{"n", n}, {"obstructed", obstructed}}.dump() << '\n';
            else
                out << (obstructed ? "obstructed" : "allowed") << '\n';
        } else if (*cy3_cmd) {
            std::optional<bool> override_star;
            if (star_override >= 0) override_star = star_override == 1;
            const N0Record rec = n0_equivalences(CYCover(n, override_star));
            if (format == "json") {
                out << to_json(rec).dump() << '\n';
            } else {
                out << "n " << rec.n << ", sectional genus " << rec.sectional_genus << '\n'
                    << "N0(B^2) " << (rec.N0_B2 ? "yes" : "no") << ", N0(B^3) "
                    << (rec.N0_B3 ? "yes" : "no") << ", genus > 3 "
                    << (rec.sectional_genus_gt_3 ? "yes" : "no") << ", section non-hyperelliptic "
                    << (rec.C_nonhyperelliptic ? "yes" : "no") << '\n';
            }
        } else if (*check_cmd) {
            const std::vector<CriterionResult> results = run_paper_check();
            bool all = true;
            if (format == "json") {
                json rows = json::array();
                for (const CriterionResult& res : results) {
                    rows.push_back({{"id", res.id},
                                    {"name", res.name},
                                    {"pass", res.pass},
                                    {"expected", res.expected},
                                    {"actual", res.actual},
                                    {"seconds", res.seconds}});
                    all = all && res.pass;
                }
                out << rows.dump(2) << '\n';
            } else {
                for (const CriterionResult& res : results) {
                    out << (res.pass ? "PASS" : "FAIL") << "  " << res.id << "  " << res.name
                        << "  (" << std::fixed << std::setprecision(2) << res.seconds << "s)  "
                        << res.actual << '\n';
                    all = all && res.pass;
                }
                out << (all ? "all criteria passed" : "criteria failed") << '\n';
            }
            if (!report_path.empty()) write_report(results, report_path);
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace mindeg::cli
