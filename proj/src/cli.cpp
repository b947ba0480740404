#include "sasaki/cli.hpp"

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sasaki/errors.hpp"
#include "sasaki/futaki.hpp"
#include "sasaki/json_io.hpp"
#include "sasaki/scan.hpp"
#include "sasaki/solver.hpp"

namespace sasaki {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitNotExists = 3;
constexpr int kExitUndetermined = 4;

void emit_error(const std::string& msg) {
    std::cerr << json{{"error", msg}}.dump() << "\n";
}

Rational parse_rational_arg(const std::string& text, const char* flag) {
    try {
        return Rational::from_string(text);
    } catch (const Error& e) {
        throw ValidationError(std::string(flag) + ": " + e.what());
    }
}

AffineFn parse_affine(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ValidationError("--ellz expects 'slope,intercept' rationals");
    return {parse_rational_arg(text.substr(0, comma), "--ellz"),
            parse_rational_arg(text.substr(comma + 1), "--ellz")};
}

struct Options {
    std::string config_path;
    std::string ellz = "1,0";
    std::string b_str = "1";
    std::string t_str = "1/100";
    std::string lo_str, hi_str;
    std::string svg_path, csv_path;
    unsigned grid = 21;
    unsigned precision = 0; // 0: library default cap
};

int cmd_solve(const Options& opt) {
    const Config cfg = load_config_file(opt.config_path);
    const ExtremalSolution sol = solve_extremal(cfg.data, cfg.weight, cfg.extended);
    const ExistenceReport rep = existence_verdict(sol);
    std::cout << solution_json(sol, rep).dump() << "\n";
    return kExitOk;
}

int cmd_exists(const Options& opt) {
    const Config cfg = load_config_file(opt.config_path);
    const ExtremalSolution sol = solve_extremal(cfg.data, cfg.weight, cfg.extended);
    const ExistenceReport rep = existence_verdict(sol);
    std::cout << existence_json(rep).dump() << "\n";
    return rep.exists ? kExitOk : kExitNotExists;
}

int cmd_futaki(const Options& opt) {
    const Config cfg = load_config_file(opt.config_path);
    const AffineFn ell_z = parse_affine(opt.ellz);
    const ExtremalSolution sol = solve_extremal(cfg.data, cfg.weight);
    const FutakiValue ck = c_K(cfg.data, cfg.weight, {sol.A, sol.B}, opt.precision);
    const FutakiValue fut = futaki(cfg.data, cfg.weight, ell_z, opt.precision);
    json out = {
        {"A", sol.A.to_string()},
        {"B", sol.B.to_string()},
        {"cK", futaki_value_json(ck)},
        {"futaki",
         {{"sign", to_string(fut.sign)}, {"float", fut.value}, {"err", fut.error}}},
        {"csc_type", is_scalar_flat_cone(ck, cfg.data.m()) ? "scalar-flat-cone" : "generic"},
    };
    if (cfg.z0) out["df_indicator"] = df_indicator(cfg.data, cfg.weight, *cfg.z0).to_string();
    std::cout << out.dump() << "\n";
    return fut.sign == Sign::Undetermined ? kExitUndetermined : kExitOk;
}

int cmd_csc(const Options& opt) {
    const Config cfg = load_config_file(opt.config_path);
    const Rational b = parse_rational_arg(opt.b_str, "--b");
    const Rational margin = b / Rational(64);
    const Rational lo = opt.lo_str.empty() ? -b + margin : parse_rational_arg(opt.lo_str, "--lo");
    const Rational hi = opt.hi_str.empty() ? b - margin : parse_rational_arg(opt.hi_str, "--hi");
    std::cout << csc_json(find_csc(cfg.data, b, lo, hi)).dump() << "\n";
    return kExitOk;
}

int cmd_scan(const Options& opt) {
    const Config cfg = load_config_file(opt.config_path);
    const Rational b = parse_rational_arg(opt.b_str, "--b");
    const auto rows = run_scan(cfg.data, b, opt.grid);
    if (!opt.csv_path.empty()) emit_scan_csv(rows, opt.csv_path);
    if (!opt.svg_path.empty()) emit_scan_svg(rows, opt.svg_path);
    if (opt.csv_path.empty() && opt.svg_path.empty()) emit_scan_csv(rows, std::cout);
    return kExitOk;
}

int cmd_perturb(const Options& opt) {
    const Config cfg = load_config_file(opt.config_path);
    const Rational t = parse_rational_arg(opt.t_str, "--t");
    const WeightedSolution sol = solve_weighted(cfg.data, cfg.v, cfg.w);
    const auto [theta_t, w_t] = perturbation_pair(cfg.data, cfg.v, cfg.w, sol, t);
    json out = {
        {"A", sol.A.to_string()},
        {"B", sol.B.to_string()},
        {"t", t.to_string()},
        {"theta_t", theta_t.to_string()},
        {"w_t", w_t.to_string()},
        {"identity_holds", true}, // perturbation_pair verifies the identity exactly
    };
    std::cout << out.dump() << "\n";
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"existence of extremal momentum profiles on admissible P^1-bundles"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--precision", opt.precision, "cap (bits) for certified-sign refinement");

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("config", opt.config_path, "JSON configuration file")->required();
    };
    CLI::App* solve = app.add_subcommand("solve", "solve the profile equation, print the solution");
    add_config(solve);
    CLI::App* exists = app.add_subcommand("exists", "positivity verdict for the profile");
    add_config(exists);
    CLI::App* fut = app.add_subcommand("futaki", "Futaki obstruction and cone classification");
    add_config(fut);
    fut->add_option("--ellz", opt.ellz, "test element 'slope,intercept'");
    CLI::App* csc = app.add_subcommand("csc", "CSC rays over a slope interval");
    add_config(csc);
    csc->add_option("--b", opt.b_str, "weight line intercept b");
    csc->add_option("--lo", opt.lo_str, "search lower bound (default -b + b/64)");
    csc->add_option("--hi", opt.hi_str, "search upper bound (default b - b/64)");
    CLI::App* scan = app.add_subcommand("scan", "sweep the slope and tabulate verdicts");
    add_config(scan);
    scan->add_option("--b", opt.b_str, "weight line intercept b");
    scan->add_option("--grid", opt.grid, "number of interior grid slopes");
    scan->add_option("--csv", opt.csv_path, "CSV output path");
    scan->add_option("--svg", opt.svg_path, "SVG output path");
    CLI::App* perturb = app.add_subcommand("perturb", "profile/weight perturbation pair");
    add_config(perturb);
    perturb->add_option("--t", opt.t_str, "perturbation parameter t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(std::string("argument error: ") + e.what());
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (exists->parsed()) return cmd_exists(opt);
        if (fut->parsed()) return cmd_futaki(opt);
        if (csc->parsed()) return cmd_csc(opt);
        if (scan->parsed()) return cmd_scan(opt);
        if (perturb->parsed()) return cmd_perturb(opt);
        emit_error("no subcommand");
        return kExitUsage;
    } catch (const ValidationError& e) {
        emit_error(e.what());
        return kExitUsage;
    } catch (const Error& e) {
        emit_error(e.what());
        return kExitSolver;
    } catch (const std::exception& e) {
        emit_error(std::string("internal error: ") + e.what());
        return kExitSolver;
    }
}

} // namespace sasaki
