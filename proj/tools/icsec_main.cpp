// Command-line front end.
//
// Subcommands: det-bounds, sym-capacity, audit, sweep, gauss. Every command
// prints a human-readable report by default and a JSON document with --json.
// Flags may also be supplied through --config FILE, a JSON object whose keys
// mirror the long flag names; explicit flags win over config values.
//
// Exit codes: 0 success / audit passed, 1 audit failed, 2 usage error,
// 3 output I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icsec/capacity_bounds.hpp"
#include "icsec/det_schemes.hpp"
#include "icsec/json_io.hpp"
#include "icsec/secrecy_audit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr double kLeakageTolerance = 1e-9;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

// Flag value with config fallback: explicit flags override the config file,
// and a value must come from one of the two.
template <typename T>
T resolve(std::optional<T>& cli_value, const nlohmann::json& cfg, const std::string& name) {
    if (cli_value) return *cli_value;
    if (cfg.contains(name)) {
        try {
            return cfg.at(name).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw UsageError("config value '" + name + "' has the wrong type");
        }
    }
    throw UsageError("missing required value --" + name);
}

int require_nonnegative_int(std::optional<int>& cli_value, const nlohmann::json& cfg,
                            const std::string& name) {
    const int v = resolve(cli_value, cfg, name);
    if (v < 0) throw UsageError("--" + name + " must be a nonnegative integer");
    return v;
}

void emit(const nlohmann::json& j, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string fmt(double v) { return icsec::format_double(v); }

// ---------------------------------------------------------------------------

struct DetBoundsArgs {
    std::optional<int> m11, m12, m21, m22;
    std::string config;
    bool json = false;
};

int run_det_bounds(const DetBoundsArgs& args) {
    const nlohmann::json cfg = load_config(args.config);
    auto a = args;
    const icsec::DetChannelParams p(require_nonnegative_int(a.m11, cfg, "m11"),
                                    require_nonnegative_int(a.m12, cfg, "m12"),
                                    require_nonnegative_int(a.m21, cfg, "m21"),
                                    require_nonnegative_int(a.m22, cfg, "m22"));
    const icsec::DetRegion region = icsec::det_outer_region(p);
    const double sum_upper = icsec::det_sum_upper(p);
    const auto [r1, r2] = icsec::wocj_rates(p);
    const icsec::OptimalityVerdict verdict = icsec::wocj_optimality(p);

    nlohmann::json j{{"params", icsec::to_json(p)},
                     {"bounds", icsec::to_json(region)},
                     {"sum_upper", sum_upper},
                     {"wocj", {{"R1", r1}, {"R2", r2}, {"sum", r1 + r2}}},
                     {"verdict", icsec::to_json(verdict)}};

    std::string human;
    human += "deterministic channel m11=" + std::to_string(p.m11) + " m12=" + std::to_string(p.m12) +
             " m21=" + std::to_string(p.m21) + " m22=" + std::to_string(p.m22) +
             " (q=" + std::to_string(p.q) + ")\n";
    human += "  R1        <= " + std::to_string(region.b_r1) + "\n";
    human += "  R2        <= " + std::to_string(region.b_r2) + "\n";
    human += "  R1 + R2   <= " + std::to_string(region.b_sum) + "\n";
    human += "  2R1 + R2  <= " + std::to_string(region.b_2r1_r2) + "\n";
    human += "  2R2 + R1  <= " + std::to_string(region.b_2r2_r1) + "\n";
    human += "  sum upper  = " + fmt(sum_upper) + "\n";
    human += "  wocj rates = (" + std::to_string(r1) + ", " + std::to_string(r2) + "), sum " +
             std::to_string(r1 + r2) + "\n";
    human += "  verdict    = " + icsec::verdict_string(verdict.kind);
    if (verdict.kind == icsec::OptimalityKind::OptimalPositive)
        human += " (C_sum = " + fmt(verdict.c_sum) + ")";
    human += "\n";
    emit(j, args.json, human);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SymCapacityArgs {
    std::optional<double> md, mc;
    std::string config;
    bool json = false;
};

int run_sym_capacity(const SymCapacityArgs& args) {
    const nlohmann::json cfg = load_config(args.config);
    auto a = args;
    const double md = resolve(a.md, cfg, "md");
    const double mc = resolve(a.mc, cfg, "mc");
    if (!(md > 0.0)) throw UsageError("--md must be positive");
    if (mc < 0.0) throw UsageError("--mc must be nonnegative");

    const double alpha = mc / md;
    const double secure = icsec::sym_secure_sum(md, mc);
    const double nonsecure = icsec::sym_nonsecure_sum(md, mc);
    const double wocj = 2.0 * std::max(0.0, md - mc);

    nlohmann::json j{{"md", md},
                     {"mc", mc},
                     {"alpha", alpha},
                     {"secure_sum", secure},
                     {"nonsecure_sum", nonsecure},
                     {"wocj_sum", wocj},
                     {"secure_sum_norm", secure / md},
                     {"nonsecure_sum_norm", nonsecure / md},
                     {"wocj_sum_norm", wocj / md}};

    std::string human;
    human += "symmetric channel md=" + fmt(md) + " mc=" + fmt(mc) + " (alpha=" + fmt(alpha) + ")\n";
    human += "  secure sum capacity    = " + fmt(secure) + "  (normalized " + fmt(secure / md) + ")\n";
    human += "  sum capacity, no secrecy = " + fmt(nonsecure) + "  (normalized " +
             fmt(nonsecure / md) + ")\n";
    human += "  wocj sum rate          = " + fmt(wocj) + "  (normalized " + fmt(wocj / md) + ")\n";
    emit(j, args.json, human);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct AuditArgs {
    std::string scheme;
    std::optional<int> m11, m12, m21, m22, md, mc;
    std::string config;
    bool json = false;
};

int run_audit(const AuditArgs& args) {
    const nlohmann::json cfg = load_config(args.config);
    auto a = args;
    std::string scheme_name = a.scheme;
    if (scheme_name.empty() && cfg.contains("scheme"))
        scheme_name = cfg.at("scheme").get<std::string>();

    icsec::OneShotScheme scheme = [&] {
        if (scheme_name == "wocj") {
            return icsec::wocj_scheme(
                icsec::DetChannelParams(require_nonnegative_int(a.m11, cfg, "m11"),
                                        require_nonnegative_int(a.m12, cfg, "m12"),
                                        require_nonnegative_int(a.m21, cfg, "m21"),
                                        require_nonnegative_int(a.m22, cfg, "m22")));
        }
        if (scheme_name == "cj") {
            return icsec::cj_scheme(require_nonnegative_int(a.md, cfg, "md"),
                                    require_nonnegative_int(a.mc, cfg, "mc"));
        }
        throw UsageError("--scheme must be 'wocj' or 'cj'");
    }();

    const icsec::AuditReport report = icsec::audit_scheme(scheme);
    const bool pass = report.secure(kLeakageTolerance);

    nlohmann::json j{{"scheme", icsec::to_json(scheme)},
                     {"report", icsec::to_json(report)},
                     {"pass", pass}};

    auto layout_str = [](const std::vector<icsec::BitRole>& layout) {
        std::string s = "[";
        for (std::size_t i = 0; i < layout.size(); ++i) {
            if (i) s += ",";
            s += icsec::role_string(layout[i]);
        }
        return s + "]";
    };
    std::string human;
    human += scheme_name + " scheme on m11=" + std::to_string(scheme.params.m11) +
             " m12=" + std::to_string(scheme.params.m12) +
             " m21=" + std::to_string(scheme.params.m21) +
             " m22=" + std::to_string(scheme.params.m22) + " (q=" + std::to_string(scheme.params.q) +
             ")\n";
    human += "  layout1 = " + layout_str(scheme.layout1) + "\n";
    human += "  layout2 = " + layout_str(scheme.layout2) + "\n";
    human += "  rate_1 = " + std::to_string(report.rate_1) +
             " bits/use, rate_2 = " + std::to_string(report.rate_2) + " bits/use, sum " +
             std::to_string(report.rate_1 + report.rate_2) + "\n";
    human += "  leakage_1to2 = " + fmt(report.leakage_1to2) +
             " bits, leakage_2to1 = " + fmt(report.leakage_2to1) + " bits\n";
    human += "  error_1 = " + std::to_string(report.error_1.numerator) + "/" +
             std::to_string(report.error_1.denominator) + ", error_2 = " +
             std::to_string(report.error_2.numerator) + "/" +
             std::to_string(report.error_2.denominator) + "\n";
    human += std::string("  audit: ") + (pass ? "PASS" : "FAIL") + "\n";
    emit(j, args.json, human);
    return pass ? kExitOk : kExitAuditFailure;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
    std::optional<double> alpha_min, alpha_max;
    std::optional<int> steps;
    std::string out;
    std::string config;
};

int run_sweep(const SweepArgs& args) {
    const nlohmann::json cfg = load_config(args.config);
    auto a = args;
    const double alpha_min = resolve(a.alpha_min, cfg, "alpha-min");
    const double alpha_max = resolve(a.alpha_max, cfg, "alpha-max");
    const int steps = resolve(a.steps, cfg, "steps");
    std::string out = a.out;
    if (out.empty() && cfg.contains("out")) out = cfg.at("out").get<std::string>();
    if (out.empty()) throw UsageError("missing required value --out");
    if (!(alpha_min >= 0.0) || !(alpha_min < alpha_max))
        throw UsageError("need 0 <= alpha-min < alpha-max");
    if (steps < 2) throw UsageError("--steps must be at least 2");

    std::ofstream file(out);
    if (!file) throw IoError("cannot open output file '" + out + "'");
    file << "alpha,secure_sum_norm,nonsecure_sum_norm,wocj_sum_norm\n";
    for (int i = 0; i < steps; ++i) {
        const double alpha =
            alpha_min + (alpha_max - alpha_min) * (static_cast<double>(i) / (steps - 1));
        const double secure = icsec::sym_secure_sum(1.0, alpha);
        const double nonsecure = icsec::sym_nonsecure_sum(1.0, alpha);
        const double wocj = 2.0 * std::max(0.0, 1.0 - alpha);
        file << fmt(alpha) << "," << fmt(secure) << "," << fmt(nonsecure) << "," << fmt(wocj)
             << "\n";
    }
    file.flush();
    if (!file) throw IoError("failed while writing '" + out + "'");
    std::cout << "wrote " << steps << " rows to " << out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct GaussArgs {
    std::optional<double> a11, a12, a21, a22, P;
    std::string config;
    bool json = false;
};

int run_gauss(const GaussArgs& args) {
    const nlohmann::json cfg = load_config(args.config);
    auto a = args;
    const double a11 = resolve(a.a11, cfg, "a11");
    const double a12 = resolve(a.a12, cfg, "a12");
    const double a21 = resolve(a.a21, cfg, "a21");
    const double a22 = resolve(a.a22, cfg, "a22");
    const double P = resolve(a.P, cfg, "P");

    const icsec::GaussianParams g = [&] {
        try {
            return icsec::GaussianParams(a11, a12, a21, a22, P);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();

    const bool conditions = icsec::gaussian_conditions(g);
    const auto [r1, r2] = icsec::gwc_tin_rates(g);
    const double upper = icsec::gaussian_sum_upper(g);
    const double upper_refined = icsec::gaussian_sum_upper_refined(g);
    const icsec::GdofSum gdof = icsec::gdof_sum(g);

    nlohmann::json j{{"a11", a11},
                     {"a12", a12},
                     {"a21", a21},
                     {"a22", a22},
                     {"P", P},
                     {"conditions", conditions},
                     {"R1", r1},
                     {"R2", r2},
                     {"sum", r1 + r2},
                     {"sum_upper", upper},
                     {"sum_upper_refined", upper_refined},
                     {"gap", nullptr},
                     {"gdof_sum", gdof.value},
                     {"gdof_optimal", gdof.optimal}};

    std::string human;
    human += "gaussian channel a11=" + fmt(a11) + " a12=" + fmt(a12) + " a21=" + fmt(a21) +
             " a22=" + fmt(a22) + " P=" + fmt(P) + "\n";
    human += std::string("  strength conditions hold = ") + (conditions ? "true" : "false") + "\n";
    human += "  R1 = " + fmt(r1) + ", R2 = " + fmt(r2) + ", sum = " + fmt(r1 + r2) + "\n";
    human += "  sum upper (general) = " + fmt(upper) + "\n";
    human += "  sum upper (refined) = " + fmt(upper_refined) + "\n";
    if (conditions) {
        const double gap = icsec::gaussian_gap(g);
        j["gap"] = gap;
        human += "  gap to capacity <= " + fmt(gap) + "\n";
    } else {
        human += "  gap to capacity: n/a (conditions not satisfied)\n";
    }
    human += "  gdof_sum = " + fmt(gdof.value) + (gdof.optimal ? " (optimal)" : " (achievable)") +
             "\n";
    emit(j, args.json, human);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secure-communication toolkit for the two-user interference channel"};
    app.require_subcommand(1);

    DetBoundsArgs det_args;
    CLI::App* det = app.add_subcommand(
        "det-bounds", "secure capacity bounds of the deterministic channel");
    det->add_option("--m11", det_args.m11, "bits on the link tx1 -> rx1");
    det->add_option("--m12", det_args.m12, "bits on the link tx2 -> rx1");
    det->add_option("--m21", det_args.m21, "bits on the link tx1 -> rx2");
    det->add_option("--m22", det_args.m22, "bits on the link tx2 -> rx2");
    det->add_option("--config", det_args.config, "JSON file with flag values");
    det->add_flag("--json", det_args.json, "emit JSON");

    SymCapacityArgs sym_args;
    CLI::App* sym = app.add_subcommand(
        "sym-capacity", "secure sum capacity of the symmetric deterministic channel");
    sym->add_option("--md", sym_args.md, "direct link strength");
    sym->add_option("--mc", sym_args.mc, "cross link strength");
    sym->add_option("--config", sym_args.config, "JSON file with flag values");
    sym->add_flag("--json", sym_args.json, "emit JSON");

    AuditArgs audit_args;
    CLI::App* audit = app.add_subcommand("audit", "exact leakage and error audit of a scheme");
    audit->add_option("--scheme", audit_args.scheme, "wocj or cj");
    audit->add_option("--m11", audit_args.m11, "wocj: bits on tx1 -> rx1");
    audit->add_option("--m12", audit_args.m12, "wocj: bits on tx2 -> rx1");
    audit->add_option("--m21", audit_args.m21, "wocj: bits on tx1 -> rx2");
    audit->add_option("--m22", audit_args.m22, "wocj: bits on tx2 -> rx2");
    audit->add_option("--md", audit_args.md, "cj: symmetric direct strength");
    audit->add_option("--mc", audit_args.mc, "cj: symmetric cross strength");
    audit->add_option("--config", audit_args.config, "JSON file with flag values");
    audit->add_flag("--json", audit_args.json, "emit JSON");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "CSV sweep of normalized sum capacities over alpha");
    sweep->add_option("--alpha-min", sweep_args.alpha_min, "start of the alpha range");
    sweep->add_option("--alpha-max", sweep_args.alpha_max, "end of the alpha range");
    sweep->add_option("--steps", sweep_args.steps, "number of grid points (>= 2)");
    sweep->add_option("--out", sweep_args.out, "output CSV path");
    sweep->add_option("--config", sweep_args.config, "JSON file with flag values");

    GaussArgs gauss_args;
    CLI::App* gauss = app.add_subcommand(
        "gauss", "rates, bounds, gap and GDoF for the Gaussian channel");
    gauss->add_option("--a11", gauss_args.a11, "strength exponent tx1 -> rx1");
    gauss->add_option("--a12", gauss_args.a12, "strength exponent tx2 -> rx1");
    gauss->add_option("--a21", gauss_args.a21, "strength exponent tx1 -> rx2");
    gauss->add_option("--a22", gauss_args.a22, "strength exponent tx2 -> rx2");
    gauss->add_option("--P", gauss_args.P, "nominal power, >= 1");
    gauss->add_option("--config", gauss_args.config, "JSON file with flag values");
    gauss->add_flag("--json", gauss_args.json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (det->parsed()) return run_det_bounds(det_args);
        if (sym->parsed()) return run_sym_capacity(sym_args);
        if (audit->parsed()) return run_audit(audit_args);
        if (sweep->parsed()) return run_sweep(sweep_args);
        if (gauss->parsed()) return run_gauss(gauss_args);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const icsec::UnsupportedParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const icsec::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
