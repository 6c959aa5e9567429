#include "sitnikov/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sitnikov/config.hpp"
#include "sitnikov/config_io.hpp"
#include "sitnikov/dynamics.hpp"
#include "sitnikov/period.hpp"
#include "sitnikov/sync.hpp"

namespace sitnikov::cli {

namespace {

/// Input that could not be read or parsed (exit 64, distinct from domain errors).
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PlanarConfiguration load(const std::string& path, std::optional<double> tol) {
    try {
        return load_config(path, tol);
    } catch (const std::runtime_error& e) {
        throw ParseFailure(e.what());
    }
}

/// Write to `path`, or to `fallback` when no path was given.
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseFailure("cannot write output file: " + path);
    out << text;
}

struct CheckArgs {
    std::string config_path;
    std::string json_path;
};

int cmd_check(const CheckArgs& args, std::optional<double> tol, std::ostream& out) {
    const PlanarConfiguration config = load(args.config_path, tol);
    const CCReport cc = cc_residual(config);
    const BalanceReport balance = is_balanced(config);
    const RadiusGroups groups = radius_groups(config);

    const int code = !cc.is_central ? kNotCentral
                     : !balance.balanced ? kCentralUnbalanced
                                         : kOk;

    std::ostringstream text;
    text << "bodies: " << config.size() << "\n"
         << "lambda: " << g17(cc.lambda) << "\n"
         << "max_residual_norm: " << g17(cc.max_residual_norm) << " (scale "
         << g17(cc.scale) << ")\n"
         << "is_central: " << (cc.is_central ? "true" : "false") << "\n"
         << "is_balanced: " << (balance.balanced ? "true" : "false") << "\n"
         << "radius_groups:\n";
    for (std::size_t g = 0; g < groups.groups.size(); ++g) {
        text << "  r=" << g17(groups.groups[g].radius) << " indices=[";
        for (std::size_t k = 0; k < groups.groups[g].indices.size(); ++k)
            text << (k ? "," : "") << groups.groups[g].indices[k];
        text << "] weighted_norm=" << g17(balance.group_weighted_norms[g]) << "\n";
    }
    out << text.str();

    if (!args.json_path.empty()) {
        nlohmann::json j;
        j["n"] = config.size();
        j["lambda"] = cc.lambda;
        j["max_residual_norm"] = cc.max_residual_norm;
        j["scale"] = cc.scale;
        j["is_central"] = cc.is_central;
        j["is_balanced"] = balance.balanced;
        auto jgroups = nlohmann::json::array();
        for (std::size_t g = 0; g < groups.groups.size(); ++g)
            jgroups.push_back({{"radius", groups.groups[g].radius},
                               {"indices", groups.groups[g].indices},
                               {"weighted_norm", balance.group_weighted_norms[g]}});
        j["radius_groups"] = jgroups;
        j["exit_code"] = code;
        emit(args.json_path, out, j.dump(2) + "\n");
    }
    return code;
}

struct PeriodArgs {
    std::string config_path;
    std::optional<double> E;
    std::optional<double> z_E;
    std::optional<double> T;
    int sweep = 0;
    int nodes = 128;
    std::string out_path;
};

int cmd_period(const PeriodArgs& args, std::optional<double> tol, std::ostream& out) {
    const PlanarConfiguration config = load(args.config_path, tol);
    std::vector<PeriodResult> rows;

    if (args.sweep > 0) {
        const double e_min = energy_min(config);
        const int n = args.sweep;
        // log-spaced |E|/|E_min| fractions from 0.999 down to 1e-4, ascending E
        for (int k = 0; k < n; ++k) {
            const double t = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
            const double frac =
                std::exp(std::log(0.999) * (1.0 - t) + std::log(1e-4) * t);
            rows.push_back(period_of_energy(config, e_min * frac, args.nodes));
        }
    } else if (args.E) {
        rows.push_back(period_of_energy(config, *args.E, args.nodes));
    } else if (args.z_E) {
        if (!(*args.z_E > 0.0))
            throw std::domain_error("period: --zE must be positive");
        const double E = axial_potential(config, *args.z_E);
        rows.push_back(period_of_energy(config, E, args.nodes));
    } else if (args.T) {
        const double E = energy_of_period(config, *args.T);
        rows.push_back(period_of_energy(config, E, args.nodes));
    } else {
        throw std::domain_error("period: one of --E, --zE, --T, --sweep is required");
    }

    std::ostringstream csv;
    write_period_rows_csv(csv, rows);
    emit(args.out_path, out, csv.str());
    return kOk;
}

struct PhaseArgs {
    std::string config_path;
    std::vector<double> energies;
    int samples = 256;
    double z_max = 0.0;  // 0: use 5 * max radius
    std::string out_path;
};

int cmd_phase_portrait(const PhaseArgs& args, std::optional<double> tol,
                       std::ostream& out) {
    const PlanarConfiguration config = load(args.config_path, tol);
    const double e_min = energy_min(config);
    const double default_span = 5.0 * config.max_radius();
    const double span = args.z_max > 0.0 ? args.z_max : default_span;
    if (args.samples < 2) throw std::domain_error("phase-portrait: --samples >= 2");

    std::ostringstream csv;
    csv << "E,z,v\n";
    for (double E : args.energies) {
        if (E < e_min - config.tol() * std::abs(e_min))
            throw std::domain_error("phase-portrait: energy below E_min");
        if (std::abs(E - e_min) <= 1e-12 * std::abs(e_min)) {
            csv << g17(E) << ",0,0\n";  // the level set degenerates to the equilibrium
            continue;
        }
        const double half_width = E < 0.0 ? turning_point(config, E) : span;
        for (int branch = 0; branch < 2; ++branch) {
            for (int k = 0; k < args.samples; ++k) {
                const double z =
                    -half_width + 2.0 * half_width * k / (args.samples - 1);
                const double v2 = 2.0 * (E - axial_potential(config, z));
                const double v = std::sqrt(std::max(0.0, v2));
                csv << g17(E) << ',' << g17(z) << ',' << g17(branch == 0 ? v : -v)
                    << '\n';
            }
        }
    }
    emit(args.out_path, out, csv.str());
    return kOk;
}

struct SimulateArgs {
    std::string config_path;
    std::optional<double> E;
    double z0 = 0.0;
    double v0 = 0.0;
    double t_end = 0.0;
    double rtol = 1e-10;
    double atol = 1e-12;
    double sample_dt = 0.0;
    bool full = false;
    std::string out_path;
};

int cmd_simulate(const SimulateArgs& args, std::optional<double> tol,
                 std::ostream& out) {
    const PlanarConfiguration config = load(args.config_path, tol);
    if (!(args.t_end > 0.0)) throw std::domain_error("simulate: --t-end must be positive");

    double z0 = args.z0;
    double v0 = args.v0;
    if (args.E) {
        const double e_min = energy_min(config);
        if (*args.E < e_min)
            throw std::domain_error("simulate: energy below E_min is unreachable");
        z0 = 0.0;
        v0 = std::sqrt(2.0 * (*args.E - e_min));
    }

    IntegrateOptions opts;
    opts.rtol = args.rtol;
    opts.atol = args.atol;
    opts.sample_dt = args.sample_dt > 0.0 ? args.sample_dt : args.t_end / 1000.0;

    std::ostringstream csv;
    if (args.full) {
        const State3 initial{{0.0, 0.0, z0}, {0.0, 0.0, v0}, 0.0};
        write_trajectory3_csv(csv, integrate_full(config, initial, args.t_end, opts));
    } else {
        write_trajectory_csv(csv, config,
                             integrate_axial(config, {z0, v0, 0.0}, args.t_end, opts));
    }
    emit(args.out_path, out, csv.str());
    return kOk;
}

struct SyncArgs {
    std::string config_path;
    std::string json_path;
};

int cmd_sync(const SyncArgs& args, std::optional<double> tol, std::ostream& out) {
    const PlanarConfiguration config = load(args.config_path, tol);
    const SyncReport report = sync_check(config);

    std::ostringstream text;
    text << "lhs (U): " << g17(report.lhs) << "\n"
         << "rhs ((sum m/s^3)(sum m s^2)): " << g17(report.rhs) << "\n"
         << "lambda: " << g17(report.lambda) << "\n"
         << "lambda_bound (sum m/s^3): " << g17(report.lambda_bound) << "\n"
         << "primary period T: " << g17(2.0 * M_PI / std::sqrt(report.lambda)) << "\n"
         << "synchronous solution exists: " << (report.holds ? "true" : "false")
         << "\n";
    if (report.c) text << "pyramid height c: " << g17(*report.c) << "\n";
    out << text.str();

    if (!args.json_path.empty()) {
        nlohmann::json j;
        j["lhs"] = report.lhs;
        j["rhs"] = report.rhs;
        j["holds"] = report.holds;
        j["lambda"] = report.lambda;
        j["lambda_bound"] = report.lambda_bound;
        if (report.c) j["c"] = *report.c;
        emit(args.json_path, out, j.dump(2) + "\n");
    }
    return report.holds ? kOk : kNegativeVerdict;
}

struct PolygonScanArgs {
    int n_max = 1000;
    std::string out_path;
};

int cmd_polygon_scan(const PolygonScanArgs& args, std::ostream& out) {
    if (args.n_max < 2) throw std::domain_error("polygon-scan: --n-max >= 2");
    const PolygonScanResult scan = polygon_scan(args.n_max);
    if (!args.out_path.empty()) {
        std::ostringstream csv;
        write_polygon_scan_csv(csv, scan);
        emit(args.out_path, out, csv.str());
    }
    out << scan.boundary << "\n";
    return kOk;
}

int cmd_euler_example(const std::string& out_path, std::ostream& out) {
    const EulerEquilibrium eq = euler_equilibrium();
    out << "mu*: " << g17(eq.mu) << "\n"
        << "r(mu*): " << g17(eq.r) << "\n"
        << "C(mu*): " << g17(eq.center) << "\n"
        << "|f(C)|: " << g17(eq.field_residual) << "\n";
    const PlanarConfiguration config = make_euler_collinear(eq.mu);
    save_config(out_path, config, Vec2{0.0, 0.0});
    out << "wrote " << out_path << "\n";
    return kOk;
}

std::optional<double> tol_from_env() {
    const char* raw = std::getenv("SITNIKOV_TOL");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(value >= 0.0))
        throw ParseFailure("SITNIKOV_TOL is not a valid nonnegative number");
    return value;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Restricted n+1-body Sitnikov problem toolkit"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand(
        "check", "Validate a configuration: central, balanced, radius groups");
    check->add_option("config", check_args.config_path, "configuration JSON")
        ->required();
    check->add_option("--json", check_args.json_path, "write a JSON report here");

    PeriodArgs period_args;
    auto* period = app.add_subcommand("period", "Axial period from E, z_E or T");
    period->add_option("config", period_args.config_path, "configuration JSON")
        ->required();
    double e_value = 0.0, ze_value = 0.0, t_value = 0.0;
    auto* opt_e = period->add_option("--E", e_value, "energy in (E_min, 0)");
    auto* opt_ze = period->add_option("--zE", ze_value, "turning point > 0");
    auto* opt_t = period->add_option("--T", t_value, "target period > T_min");
    auto* opt_sweep =
        period->add_option("--sweep", period_args.sweep, "emit N log-spaced energies");
    opt_e->excludes(opt_ze)->excludes(opt_t)->excludes(opt_sweep);
    opt_ze->excludes(opt_t)->excludes(opt_sweep);
    opt_t->excludes(opt_sweep);
    period->add_option("--nodes", period_args.nodes, "Chebyshev nodes (default 128)");
    period->add_option("--out", period_args.out_path, "CSV output path");

    PhaseArgs phase_args;
    auto* phase =
        app.add_subcommand("phase-portrait", "Sample energy level curves in (z,v)");
    phase->add_option("config", phase_args.config_path, "configuration JSON")
        ->required();
    phase->add_option("--E", phase_args.energies, "energy list")
        ->required()
        ->delimiter(',');
    phase->add_option("--samples", phase_args.samples, "samples per branch");
    phase->add_option("--z-max", phase_args.z_max, "half-width for open branches");
    phase->add_option("--out", phase_args.out_path, "CSV output path");

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Integrate the particle motion");
    simulate->add_option("config", sim_args.config_path, "configuration JSON")
        ->required();
    double sim_e = 0.0;
    auto* sim_opt_e =
        simulate->add_option("--E", sim_e, "start at z=0 with energy E");
    simulate->add_option("--z0", sim_args.z0, "initial height");
    simulate->add_option("--v0", sim_args.v0, "initial velocity");
    simulate->add_option("--t-end", sim_args.t_end, "integration horizon")->required();
    simulate->add_option("--rtol", sim_args.rtol, "relative tolerance");
    simulate->add_option("--atol", sim_args.atol, "absolute tolerance");
    simulate->add_option("--dt", sim_args.sample_dt, "sampling stride");
    simulate->add_flag("--full", sim_args.full, "integrate the full 3D field");
    simulate->add_option("--out", sim_args.out_path, "CSV output path");

    SyncArgs sync_args;
    auto* sync = app.add_subcommand("sync", "Synchronous-solution existence check");
    sync->add_option("config", sync_args.config_path, "configuration JSON")
        ->required();
    sync->add_option("--json", sync_args.json_path, "write a JSON report here");

    PolygonScanArgs scan_args;
    auto* scan = app.add_subcommand("polygon-scan",
                                    "Regular-polygon synchronous boundary scan");
    scan->add_option("--n-max", scan_args.n_max, "largest n to test (default 1000)");
    scan->add_option("--out", scan_args.out_path, "CSV output path");

    std::string euler_out = "euler_cc.json";
    auto* euler = app.add_subcommand(
        "euler-example", "Collinear 3-body equilibrium-at-center example");
    euler->add_option("--out", euler_out, "configuration JSON to write");

    auto* gen = app.add_subcommand("gen", "Write builder configurations");
    gen->require_subcommand(1);
    int gen_n = 0;
    double gen_mass = 1.0, gen_radius = 1.0, gen_m1 = 0.0, gen_m2 = 0.0, gen_mu = 0.0;
    std::string gen_out;
    auto* gen_polygon = gen->add_subcommand("polygon", "regular n-gon of equal masses");
    gen_polygon->add_option("--n", gen_n, "vertex count")->required();
    gen_polygon->add_option("--mass", gen_mass, "per-body mass");
    gen_polygon->add_option("--radius", gen_radius, "circumradius");
    gen_polygon->add_option("--out", gen_out, "output path")->required();
    auto* gen_rhombus = gen->add_subcommand("rhombus", "CCr rhombus family");
    gen_rhombus->add_option("--m1", gen_m1, "axis-pair mass (larger)")->required();
    gen_rhombus->add_option("--m2", gen_m2, "axis-pair mass (smaller)")->required();
    gen_rhombus->add_option("--out", gen_out, "output path")->required();
    auto* gen_collinear = gen->add_subcommand("collinear", "CCcl collinear family");
    gen_collinear->add_option("--mu", gen_mu, "mass parameter in (0,1)")->required();
    gen_collinear->add_option("--out", gen_out, "output path")->required();

    try {
        app.parse(argc, argv);

        const std::optional<double> tol = tol_from_env();

        if (*check) return cmd_check(check_args, tol, out);
        if (*period) {
            if (*opt_e) period_args.E = e_value;
            if (*opt_ze) period_args.z_E = ze_value;
            if (*opt_t) period_args.T = t_value;
            return cmd_period(period_args, tol, out);
        }
        if (*phase) return cmd_phase_portrait(phase_args, tol, out);
        if (*simulate) {
            if (*sim_opt_e) sim_args.E = sim_e;
            return cmd_simulate(sim_args, tol, out);
        }
        if (*sync) return cmd_sync(sync_args, tol, out);
        if (*scan) return cmd_polygon_scan(scan_args, out);
        if (*euler) return cmd_euler_example(euler_out, out);
        if (*gen) {
            PlanarConfiguration config =
                *gen_polygon ? make_polygon(gen_n, gen_mass, gen_radius)
                : *gen_rhombus ? make_rhombus_cc(gen_m1, gen_m2)
                               : make_collinear_cc(gen_mu);
            if (tol) config = PlanarConfiguration(config.masses(), config.positions(), *tol);
            save_config(gen_out, config);
            out << "wrote " << gen_out << "\n";
            return kOk;
        }
        err << "no subcommand selected\n";
        return kParseError;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return kParseError;
    } catch (const ParseFailure& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::invalid_argument& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace sitnikov::cli
