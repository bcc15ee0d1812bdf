// numrad: evaluate numerical-radius bounds, sweep profiles, run certification.
//
// Exit codes: 0 success, 1 usage / I/O / parse error, 2 an inequality failed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numrad/bounds.hpp"
#include "numrad/errors.hpp"
#include "numrad/harness.hpp"
#include "numrad/io.hpp"
#include "numrad/numerical_radius.hpp"

namespace {

namespace nb = numrad::bounds;
namespace nh = numrad::harness;
namespace nio = numrad::io;
using numrad::CMatrix;
using nio::fmt12;
using nio::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
    std::string matrix;
    std::string second;
    std::vector<std::string> bounds;
    double r = 1.0;
    double alpha = 0.5;
    bool json = false;
};

struct Evaluated {
    nb::BoundReport report;
    double target = 0.0;
    double slack = 0.0;
    bool pass = true;
};

const std::vector<std::string>& known_bound_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (auto id : {nb::ids::kHalfNorm, nb::ids::kNorm, nb::ids::kKittanehLower, nb::ids::kKittanehUpper,
                        nb::ids::kKittanehSquare, nb::ids::kYamazaki, nb::ids::kCartesianMix,
                        nb::ids::kRealImagGap, nb::ids::kCartesianMixSq, nb::ids::kRealImagGapSq,
                        nb::ids::kAluthgePolar, nb::ids::kHeinzBuzano, nb::ids::kHeinzBuzanoMin,
                        nb::ids::kDragomir, nb::ids::kDragomirSq, nb::ids::kHeydarbeygi,
                        nb::ids::kCartesianProduct, nb::ids::kAnticommutatorProduct,
                        nb::ids::kGeneralizedCommutator, nb::ids::kCommutator, nb::ids::kFongHolbrook,
                        nb::ids::kHirzallahKittaneh, nb::ids::kFongXaAx}) {
            v.emplace_back(id);
        }
        return v;
    }();
    return ids;
}

double slack_of(const nb::BoundReport& rep, double target) {
    const double scale = 1.0 + std::max(std::abs(rep.value), std::abs(target));
    const double gap = rep.side == nb::Side::upper ? rep.value - target : target - rep.value;
    return gap / scale;
}

int cmd_eval(const EvalArgs& args) {
    const CMatrix a = nio::read_matrix_file(args.matrix);
    const CMatrix b = args.second.empty() ? a : nio::read_matrix_file(args.second);
    if (b.rows() != a.rows()) throw UsageError("--second must have the same size as --matrix");
    if (!(args.r >= 1.0)) throw UsageError("--r must be >= 1");
    if (!(args.alpha >= 0.0 && args.alpha <= 1.0)) throw UsageError("--alpha must lie in [0, 1]");

    std::vector<std::string> selected = args.bounds.empty() ? known_bound_ids() : args.bounds;
    for (const auto& id : selected) {
        if (std::find(known_bound_ids().begin(), known_bound_ids().end(), id) == known_bound_ids().end()) {
            throw UsageError("unknown bound id '" + id + "'");
        }
    }
    auto wanted = [&](std::string_view id) {
        return std::find(selected.begin(), selected.end(), id) != selected.end();
    };

    const numrad::NumRadOptions opts = numrad::default_numrad_options();
    const CMatrix id = CMatrix::Identity(a.rows(), a.cols());
    const double w = numrad::numrad_value(a, opts);
    const double w_prod = numrad::numrad_value(b.adjoint() * a, opts);
    const double w_prod_r = std::pow(w_prod, args.r);

    std::vector<Evaluated> out;
    auto add = [&](nb::BoundReport rep, double target) {
        if (!wanted(rep.id)) return;
        Evaluated e{std::move(rep), target, 0.0, true};
        e.slack = slack_of(e.report, target);
        e.pass = e.slack >= -nh::kBoundTau;
        out.push_back(std::move(e));
    };

    add(nb::half_norm_lower(a), w);
    add(nb::norm_upper(a), w);
    auto [kit_lo, kit_hi] = nb::kittaneh_pair(a);
    add(kit_lo, w * w);
    add(kit_hi, w * w);
    add(nb::kittaneh_square_root_upper(a), w);
    if (wanted(nb::ids::kYamazaki)) add(nb::yamazaki_upper(a, opts), w);
    add(nb::cartesian_mix_lower(a), w);
    add(nb::real_imag_gap_lower(a), w);
    add(nb::cartesian_mix_lower_sq(a), w * w);
    add(nb::real_imag_gap_lower_sq(a), w * w);
    if (wanted(nb::ids::kAluthgePolar)) add(nb::aluthge_polar_upper(a, opts), w);
    if (wanted(nb::ids::kHeinzBuzano)) add(nb::heinz_buzano_upper_sq(a, args.alpha, opts), w * w);
    if (wanted(nb::ids::kHeinzBuzanoMin)) add(nb::heinz_buzano_min_alpha(a, 257, 1e-10, opts).report(), w * w);

    const nb::DragomirReports drag = nb::dragomir_product_upper(a, b, args.r);
    add(drag.raw, w_prod_r);
    add(drag.squared, w_prod_r * w_prod_r);
    if (wanted(nb::ids::kHeydarbeygi)) add(nb::heydarbeygi_product_upper(a, b, args.r, opts), w_prod_r * w_prod_r);
    if (wanted(nb::ids::kCartesianProduct)) add(nb::cartesian_product_upper(a, b, args.r, opts), w_prod_r * w_prod_r);
    add(nb::anticommutator_product_upper(a, b, args.r), w_prod_r * w_prod_r);

    const bool any_commutator = wanted(nb::ids::kGeneralizedCommutator) || wanted(nb::ids::kCommutator) ||
                                wanted(nb::ids::kFongHolbrook) || wanted(nb::ids::kHirzallahKittaneh);
    if (any_commutator) {
        for (int sign : {+1, -1}) {
            const double wc = numrad::numrad_value(nb::commutator_expression(a, b, id, id, sign), opts);
            if (wanted(nb::ids::kGeneralizedCommutator))
                add(nb::generalized_commutator_upper(a, b, id, id, sign, opts), wc);
            if (wanted(nb::ids::kCommutator)) add(nb::commutator_upper(a, b, sign, opts), wc);
            if (wanted(nb::ids::kHirzallahKittaneh))
                add(nb::hirzallah_kittaneh_commutator_upper(a, b, sign, opts), wc);
            if (sign > 0 && wanted(nb::ids::kFongHolbrook))
                add(nb::fong_holbrook_commutator_upper(a, b, opts), wc);
        }
    }
    if (wanted(nb::ids::kFongXaAx)) {
        add(nb::fong_holbrook_xa_ax_upper(a, b, opts), numrad::numrad_value(a.adjoint() * b + b * a, opts));
    }

    const bool ok = std::all_of(out.begin(), out.end(), [](const Evaluated& e) { return e.pass; });

    if (args.json) {
        Json reports = Json::array();
        for (const auto& e : out) {
            Json row = nio::to_json(e.report);
            row["target_value"] = e.target;
            row["slack"] = e.slack;
            row["pass"] = e.pass;
            reports.push_back(std::move(row));
        }
        Json doc{{"n", a.rows()},
                 {"r", args.r},
                 {"alpha", args.alpha},
                 {"w", w},
                 {"w_squared", w * w},
                 {"w_product", w_prod},
                 {"w_product_power_2r", w_prod_r * w_prod_r},
                 {"reports", std::move(reports)},
                 {"passed", ok}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::printf("n = %lld   r = %s   alpha = %s\n", static_cast<long long>(a.rows()), fmt12(args.r).c_str(),
                    fmt12(args.alpha).c_str());
        std::printf("w(A)      = %s\n", fmt12(w).c_str());
        std::printf("w(A)^2    = %s\n", fmt12(w * w).c_str());
        std::printf("w(B*A)^2r = %s\n\n", fmt12(w_prod_r * w_prod_r).c_str());
        std::printf("%-22s %-6s %-16s %-19s %-19s %-19s %s\n", "id", "side", "target", "value", "target_value",
                    "slack", "sign");
        for (const auto& e : out) {
            const std::string sign = e.report.params.sign ? (*e.report.params.sign > 0 ? "+" : "-") : "";
            std::printf("%-22s %-6s %-16s %-19s %-19s %-19s %s%s\n", e.report.id.c_str(),
                        std::string(nb::to_string(e.report.side)).c_str(),
                        std::string(nb::to_string(e.report.target)).c_str(), fmt12(e.report.value).c_str(),
                        fmt12(e.target).c_str(), fmt12(e.slack).c_str(), sign.c_str(),
                        e.pass ? "" : "   VIOLATED");
            if (e.report.id == nb::ids::kHeinzBuzanoMin && e.report.params.alpha) {
                std::printf("%-22s alpha* = %s   min_value = %s\n", "", fmt12(*e.report.params.alpha).c_str(),
                            fmt12(e.report.value).c_str());
            }
        }
    }
    if (!ok) {
        std::cerr << "numrad: at least one inequality is violated beyond tolerance\n";
        return kExitViolation;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
    std::string matrix;
    std::string mode = "alpha";
    int grid = 257;
    std::string out;
};

int cmd_sweep(const SweepArgs& args) {
    const CMatrix a = nio::read_matrix_file(args.matrix);
    std::ostringstream csv;
    if (args.mode == "alpha") {
        if (args.grid < 2) throw UsageError("--grid must be >= 2 for the alpha sweep");
        const numrad::NumRadOptions opts = numrad::default_numrad_options();
        csv << "alpha,value\n";
        for (int k = 0; k < args.grid; ++k) {
            const double alpha = static_cast<double>(k) / (args.grid - 1);
            csv << fmt12(alpha) << ',' << fmt12(nb::heinz_buzano_upper_sq(a, alpha, opts).value) << '\n';
        }
    } else if (args.mode == "theta") {
        if (args.grid < 4) throw UsageError("--grid must be >= 4 for the theta sweep");
        csv << "theta,lambda_max\n";
        for (const auto& s : numrad::nr_profile(a, args.grid)) {
            csv << fmt12(s.theta) << ',' << fmt12(s.lambda_max) << '\n';
        }
    } else {
        throw UsageError("--mode must be 'alpha' or 'theta'");
    }

    if (args.out.empty() || args.out == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream file(args.out);
        if (!file) throw nio::FormatError("cannot open '" + args.out + "' for writing");
        file << csv.str();
        if (!file) throw nio::FormatError("write to '" + args.out + "' failed");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyArgs {
    std::vector<std::string> families;
    std::vector<int> sizes = {2, 3, 4, 5, 6};
    int count = 5;
    std::uint64_t seed = 1;
    std::vector<double> r = {1.0, 1.5, 2.0, 3.0};
    int alpha_grid = 33;
    int lemma_trials = 4;
    bool self_test_fail = false;
    bool summary_only = false;
    std::string out;
    std::string summary_csv;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw nio::FormatError("cannot open '" + path + "' for writing");
    file << text;
    if (!file) throw nio::FormatError("write to '" + path + "' failed");
}

int cmd_certify(const CertifyArgs& args) {
    nh::CertConfig config;
    if (!args.families.empty()) {
        config.families.clear();
        for (const auto& name : args.families) config.families.push_back(nh::parse_family(name));
    }
    config.sizes = args.sizes;
    config.count = args.count;
    config.seed = args.seed;
    config.r_values = args.r;
    config.alpha_grid = args.alpha_grid;
    config.lemma_trials = args.lemma_trials;
    config.self_test_fail = args.self_test_fail;
    config.numrad = numrad::default_numrad_options();

    const nh::CertReport report = nh::run_certification(config);
    const std::string json = nio::to_json(report, !args.summary_only).dump(2) + "\n";
    if (args.out.empty() || args.out == "-") {
        std::cout << json;
    } else {
        write_text(args.out, json);
    }
    if (!args.summary_csv.empty()) write_text(args.summary_csv, nio::summary_csv(report));

    std::cerr << "numrad certify: " << report.matrices << " matrices, " << report.records.size()
              << " checks, " << report.failures() << " failures\n";
    return report.passed() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// paper-example

int cmd_paper_example() {
    CMatrix a = CMatrix::Zero(3, 3);
    a(0, 1) = 1.0;
    a(1, 2) = 2.0;
    const numrad::NumRadOptions opts = numrad::default_numrad_options();
    const double w = numrad::numrad_value(a, opts);
    const double at_half = nb::heinz_buzano_upper_sq(a, 0.5, opts).value;
    const nb::AlphaCurve curve = nb::heinz_buzano_min_alpha(a, 257, 1e-10, opts);
    const double r0 = std::log((1.0 + std::sqrt(65.0)) / 2.0) / std::log(16.0);

    auto row = [](const char* label, double value) { std::printf("%-36s %s\n", label, fmt12(value).c_str()); };
    std::printf("A = [[0,1,0],[0,0,2],[0,0,0]]\n\n");
    row("w(A)", w);
    row("w(A)^2", w * w);
    row("||A||", numrad::op_norm(a));
    row("ub_thm25(A, alpha=1/2)", at_half);
    row("ub_cor28(A) min_value", curve.min_value);
    row("alpha*", curve.argmin);
    row("r0 = log_16((1+sqrt 65)/2)", r0);
    row("ub_cor28 improvement over alpha=1/2", at_half - curve.min_value);
    std::printf("%-36s %s\n", "strict improvement", curve.min_value < at_half ? "yes" : "no");
    std::printf("\n%-8s %s\n", "alpha", "ub_thm25(A, alpha)");
    for (double alpha : {0.0, 0.25, 0.5, r0, 0.75, 1.0}) {
        std::printf("%-8s %s\n", fmt12(alpha).c_str(), fmt12(nb::heinz_buzano_upper_sq(a, alpha, opts).value).c_str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical radius bounds: evaluation, sweeps and certification"};
    app.require_subcommand(1);

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate bounds on a matrix file");
    eval_cmd->add_option("--matrix", eval.matrix, "Matrix JSON file (A)")->required();
    eval_cmd->add_option("--second", eval.second, "Second matrix JSON file (B for products, X for fong_xa_ax; default A)");
    eval_cmd->add_option("--bounds", eval.bounds, "Comma-separated bound ids (default all)")->delimiter(',');
    eval_cmd->add_option("--r", eval.r, "Exponent r >= 1 for product bounds")->capture_default_str();
    eval_cmd->add_option("--alpha", eval.alpha, "alpha in [0,1] for ub_thm25")->capture_default_str();
    eval_cmd->add_flag("--json", eval.json, "Machine-readable output");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Write an alpha or theta profile as CSV");
    sweep_cmd->add_option("--matrix", sweep.matrix, "Matrix JSON file")->required();
    sweep_cmd->add_option("--mode", sweep.mode, "alpha | theta")->capture_default_str();
    sweep_cmd->add_option("--grid", sweep.grid, "Number of grid points")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "Output CSV path (default stdout)");

    CertifyArgs cert;
    auto* cert_cmd = app.add_subcommand("certify", "Run the inequality certification suite");
    cert_cmd->add_option("--families", cert.families, "Comma-separated families (default all)")->delimiter(',');
    cert_cmd->add_option("--sizes", cert.sizes, "Comma-separated sizes")->delimiter(',')->capture_default_str();
    cert_cmd->add_option("--count", cert.count, "Matrices per (family, size)")->capture_default_str();
    cert_cmd->add_option("--seed", cert.seed, "Corpus seed")->capture_default_str();
    cert_cmd->add_option("--r", cert.r, "Comma-separated r values")->delimiter(',')->capture_default_str();
    cert_cmd->add_option("--alpha-grid", cert.alpha_grid, "alpha grid size")->capture_default_str();
    cert_cmd->add_option("--lemma-trials", cert.lemma_trials, "Random vectors per matrix per lemma")
        ->capture_default_str();
    cert_cmd->add_flag("--self-test-fail", cert.self_test_fail, "Perturb one bound by -1 (exit 2 expected)");
    cert_cmd->add_flag("--summary-only", cert.summary_only, "Omit per-record rows from the JSON");
    cert_cmd->add_option("--out", cert.out, "Report JSON path (default stdout)");
    cert_cmd->add_option("--summary-csv", cert.summary_csv, "Also write the per-check summary as CSV");

    auto* paper_cmd = app.add_subcommand("paper-example", "Reproduce the worked 3x3 example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval_cmd) return cmd_eval(eval);
        if (*sweep_cmd) return cmd_sweep(sweep);
        if (*cert_cmd) return cmd_certify(cert);
        if (*paper_cmd) return cmd_paper_example();
    } catch (const UsageError& e) {
        std::cerr << "numrad: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const nio::FormatError& e) {
        std::cerr << "numrad: " << e.what() << '\n';
        return kExitUsage;
    } catch (const numrad::DomainError& e) {
        std::cerr << "numrad: " << e.what() << '\n';
        return kExitUsage;
    } catch (const numrad::ConsistencyError& e) {
        std::cerr << "numrad: internal consistency failure: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "numrad: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
