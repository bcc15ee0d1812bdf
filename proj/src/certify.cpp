#include <algorithm>
#include <cstdio>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <tuple>

#include "numrad/bounds.hpp"
#include "numrad/errors.hpp"
#include "numrad/harness.hpp"
#include "numrad/numerical_radius.hpp"
#include "numrad/random.hpp"
#include "numrad/transforms.hpp"

namespace numrad::harness {

namespace {

namespace nb = numrad::bounds;

constexpr double kSharpTau = 1e-9;

std::string describe(const MatrixDescriptor& d, const CMatrix& a) {
    std::string out = std::string(to_string(d.family)) + " n=" + std::to_string(d.n) +
                      " index=" + std::to_string(d.index) + " seed=" + std::to_string(d.seed) + " A=[";
    char buf[64];
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g]", (i || j) ? "," : "", a(i, j).real(),
                          a(i, j).imag());
            out += buf;
        }
    }
    return out + "]";
}

/// Collects lhs <= rhs records for one instance.
class Recorder {
public:
    Recorder(const MatrixDescriptor& desc, std::vector<CheckRecord>& out) : desc_(desc), out_(out) {}

    /// Relative check: slack = (rhs - lhs) / (1 + max(|lhs|, |rhs|)).
    void leq(std::string check, double lhs, double rhs, double tau,
             std::optional<double> param = std::nullopt) {
        const double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
        push(std::move(check), lhs, rhs, scale, tau, param);
    }

    /// Residual check |residual| <= tau * scale.
    void residual(std::string check, double value, double scale, double tau,
                  std::optional<double> param = std::nullopt) {
        push(std::move(check), value, 0.0, scale, tau, param);
    }

    /// Report-vs-target check; the side decides the direction.
    void bound(const nb::BoundReport& report, double target, double tau,
               std::optional<double> param = std::nullopt) {
        std::string check = "bound." + report.id;
        if (report.params.sign) check += report.params.sign > 0 ? "+" : "-";
        if (report.side == nb::Side::upper) {
            leq(std::move(check), target, report.value, tau, param);
        } else {
            leq(std::move(check), report.value, target, tau, param);
        }
    }

private:
    void push(std::string check, double lhs, double rhs, double scale, double tau,
              std::optional<double> param) {
        CheckRecord rec;
        rec.check = std::move(check);
        rec.matrix = desc_;
        rec.lhs = lhs;
        rec.rhs = rhs;
        rec.slack = (rhs - lhs) / scale;
        rec.tau = tau;
        rec.pass = std::isfinite(rec.slack) && rec.slack >= -tau;
        rec.param = param;
        out_.push_back(std::move(rec));
    }

    MatrixDescriptor desc_;
    std::vector<CheckRecord>& out_;
};

void lemma_checks(Recorder& rec, const CMatrix& a, const CMatrix& b, Rng& rng,
                  const CertConfig& config) {
    const auto n = a.rows();
    const double norm_a = op_norm(a);
    const CMatrix mod_a = modulus_power(a, 1.0);
    const CMatrix mod_b = modulus_power(b, 1.0);
    for (int t = 0; t < config.lemma_trials; ++t) {
        const CVector x = rng.unit_vector(n);
        const CVector y = rng.unit_vector(n);
        rec.residual("lemma.polarization", verify_polarization(a, x, y), 1.0 + norm_a,
                     kPolarizationTau);

        const double alpha = rng.uniform();
        const double heinz_scale = 1.0 + norm_a * norm_a;
        rec.residual("lemma.heinz", -verify_heinz(a, x, y, alpha), heinz_scale, kIdentityTau, alpha);

        const CVector u = a * x;
        const CVector v = b * y;
        const CVector e = rng.unit_vector(n);
        rec.residual("lemma.buzano", -verify_buzano(u, v, e), 1.0 + u.norm() * v.norm(),
                     kIdentityTau);

        const double re = rng.normal();
        const double im = rng.normal();
        rec.residual("lemma.scalar", -verify_scalar_lemma(re, im), 1.0 + std::abs(re) + std::abs(im),
                     kIdentityTau);

        for (double r : config.r_values) {
            const double scale = 1.0 + std::pow(norm_a, r);
            rec.residual("lemma.power", -verify_power_lemma(mod_a, x, r), scale, kIdentityTau, r);
        }
    }
    for (double r : config.r_values) {
        const double scale = 1.0 + std::pow(std::max(norm_a, op_norm(b)), r);
        rec.residual("lemma.convex_norm", -verify_convex_norm_lemma(mod_a, mod_b, r), scale,
                     kIdentityTau, r);
    }
}

void sharpness_checks(Recorder& rec, const MatrixDescriptor& desc, const CMatrix& a, double w,
                      double norm) {
    const CartesianParts parts = cartesian(a);
    const double sum = op_norm(parts.re + parts.im);
    const double diff = op_norm(parts.re - parts.im);
    const double scale = 1.0 + norm;

    if (desc.family == Family::nilpotent_square_zero) {
        rec.residual("structure.square_zero", (a * a).cwiseAbs().maxCoeff(), 1.0, 0.0);
        rec.residual("sharp.square_zero_half_norm", std::abs(w - 0.5 * norm), scale, kSharpTau);
    }
    if (desc.family == Family::normal) {
        const double comm = max_abs_diff(a.adjoint() * a, a * a.adjoint());
        rec.residual("structure.normal", comm, 1.0 + norm * norm, 1e-12);
        rec.residual("sharp.normal_norm", std::abs(w - norm), scale, kSharpTau);
    }

    // Equality in the half-norm bound forces ||Re A + Im A|| = ||Re A - Im A||.
    if (std::abs(w - 0.5 * norm) <= kBoundTau * scale) {
        rec.residual("sharp.half_norm_forces_balance", std::abs(sum - diff), scale,
                     2.0 * std::numbers::sqrt2 * kBoundTau);
    }
    // Equality in the quarter-gram bound forces the same balance, squared.
    const double gram = op_norm(a.adjoint() * a + a * a.adjoint());
    if (std::abs(w * w - 0.25 * gram) <= kBoundTau * (1.0 + w * w)) {
        rec.residual("sharp.quarter_gram_forces_balance", std::abs(sum * sum - diff * diff),
                     1.0 + norm * norm, 4.0 * kBoundTau);
    }
}

} // namespace

std::vector<CheckRecord> certify_instance(const MatrixDescriptor& desc, const CMatrix& a,
                                          const CMatrix& b, const CMatrix& x, const CMatrix& y,
                                          const CertConfig& config) {
    std::vector<CheckRecord> out;
    Recorder rec(desc, out);
    const NumRadOptions& opts = config.numrad;
    const double tau = kBoundTau;

    const double w = numrad_value(a, opts);
    const double w2 = w * w;
    const double norm = op_norm(a);

    nb::BoundReport norm_report = nb::norm_upper(a);
    if (config.self_test_fail) norm_report.value -= 1.0;
    rec.bound(nb::half_norm_lower(a), w, tau);
    rec.bound(norm_report, w, tau);
    const auto [kit_lo, kit_hi] = nb::kittaneh_pair(a);
    rec.bound(kit_lo, w2, tau);
    rec.bound(kit_hi, w2, tau);
    const nb::BoundReport kit_sq = nb::kittaneh_square_root_upper(a);
    const nb::BoundReport yam = nb::yamazaki_upper(a, opts);
    const nb::BoundReport mix = nb::cartesian_mix_lower(a);
    const nb::BoundReport gap = nb::real_imag_gap_lower(a);
    const nb::BoundReport mix_sq = nb::cartesian_mix_lower_sq(a);
    const nb::BoundReport gap_sq = nb::real_imag_gap_lower_sq(a);
    const nb::BoundReport polar_ub = nb::aluthge_polar_upper(a, opts);
    rec.bound(kit_sq, w, tau);
    rec.bound(yam, w, tau);
    rec.bound(mix, w, tau);
    rec.bound(gap, w, tau);
    rec.bound(mix_sq, w2, tau);
    rec.bound(gap_sq, w2, tau);
    rec.bound(polar_ub, w, tau);

    double at_half = 0.0;
    for (int k = 0; k < config.alpha_grid; ++k) {
        const double alpha = static_cast<double>(k) / (config.alpha_grid - 1);
        const nb::BoundReport hb = nb::heinz_buzano_upper_sq(a, alpha, opts);
        rec.bound(hb, w2, tau, alpha);
        if (2 * k == config.alpha_grid - 1) at_half = hb.value;
    }
    if (config.alpha_grid % 2 == 0) {
        at_half = nb::heinz_buzano_upper_sq(a, 0.5, opts).value;
    }
    const nb::AlphaCurve curve = nb::heinz_buzano_min_alpha(a, config.alpha_grid, 1e-10, opts);
    rec.bound(curve.report(), w2, tau, curve.argmin);

    // Ordering chains.
    rec.leq("chain.a1_thm24_le_yamazaki", polar_ub.value, yam.value, tau);
    rec.leq("chain.a2_yamazaki_le_kittaneh_sq", yam.value, kit_sq.value, tau);
    rec.leq("chain.b_cor28_le_thm25_half", curve.min_value, at_half, tau);
    rec.leq("chain.f1_thm21_ge_half_norm", 0.5 * norm, mix.value, tau);
    rec.leq("chain.f2_thm22_ge_kittaneh_lower", kit_lo.value, mix_sq.value, tau);

    // Aluthge contraction.
    const CMatrix transform = aluthge(a);
    rec.leq("transform.aluthge_norm", op_norm(transform), norm, tau);
    rec.leq("transform.aluthge_w", numrad_value(transform, opts), w, tau);

    // Products B^*A.
    const double w_ba = numrad_value(b.adjoint() * a, opts);
    for (double r : config.r_values) {
        const double target_r = std::pow(w_ba, r);
        const double target_2r = target_r * target_r;
        const nb::DragomirReports drag = nb::dragomir_product_upper(a, b, r);
        const nb::DragomirReports drag_2r = nb::dragomir_product_upper(a, b, 2.0 * r);
        const nb::BoundReport hey = nb::heydarbeygi_product_upper(a, b, r, opts);
        const nb::BoundReport cart = nb::cartesian_product_upper(a, b, r, opts);
        const nb::BoundReport anti = nb::anticommutator_product_upper(a, b, r);
        rec.bound(drag.raw, target_r, tau, r);
        rec.bound(drag.squared, target_2r, tau, r);
        rec.bound(hey, target_2r, tau, r);
        rec.bound(cart, target_2r, tau, r);
        rec.bound(anti, target_2r, tau, r);
        rec.leq("chain.c_thm35_le_heydarbeygi", anti.value, hey.value, tau, r);
        rec.leq("chain.d_thm33_le_dragomir_2r", cart.value, drag_2r.raw.value, tau, r);
    }

    // Commutators.
    const nb::BoundReport fong = nb::fong_holbrook_commutator_upper(a, b, opts);
    const CMatrix id = CMatrix::Identity(a.rows(), a.cols());
    for (int sign : {+1, -1}) {
        const double w_gen = numrad_value(nb::commutator_expression(a, b, x, y, sign), opts);
        const double w_comm = numrad_value(nb::commutator_expression(a, b, id, id, sign), opts);
        rec.bound(nb::generalized_commutator_upper(a, b, x, y, sign, opts), w_gen, tau);
        const nb::BoundReport comm = nb::commutator_upper(a, b, sign, opts);
        rec.bound(comm, w_comm, tau);
        rec.bound(nb::hirzallah_kittaneh_commutator_upper(a, b, sign, opts), w_comm, tau);
        if (sign > 0) {
            rec.bound(fong, w_comm, tau);
            rec.leq("chain.e_cor38_le_fong", comm.value, fong.value, tau);
        }
    }
    rec.bound(nb::fong_holbrook_xa_ax_upper(a, x, opts),
              numrad_value(a.adjoint() * x + x * a, opts), tau);

    sharpness_checks(rec, desc, a, w, norm);

    Rng lemma_rng(mix_seed(desc.seed ^ 0x6c656d6d61ULL));
    lemma_checks(rec, a, b, lemma_rng, config);
    return out;
}

bool CertReport::passed() const { return failures() == 0; }

int CertReport::failures() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(),
                                          [](const CheckRecord& r) { return !r.pass; }));
}

namespace {

void validate(const CertConfig& config) {
    if (config.count < 0) throw DomainError("certification: count must be >= 0");
    if (config.alpha_grid < 16) throw DomainError("certification: alpha grid must be >= 16");
    if (config.lemma_trials < 0) throw DomainError("certification: lemma trials must be >= 0");
    for (int n : config.sizes) {
        if (n < 1) throw DomainError("certification: sizes must be >= 1");
    }
    for (double r : config.r_values) {
        if (!(r >= 1.0)) throw DomainError("certification: r values must be >= 1");
    }
}

} // namespace

std::vector<Instance> certification_corpus(const CertConfig& config) {
    validate(config);
    std::vector<Instance> out;
    if (config.count == 0) return out;
    for (Family family : config.families) {
        for (int n : config.sizes) {
            const std::uint64_t base = mix_seed(config.seed) ^
                                       mix_seed((static_cast<std::uint64_t>(family) << 32) |
                                                static_cast<std::uint64_t>(n));
            auto corpus = generate({family, n, base, config.count});
            auto partners = generate({Family::ginibre, n, base ^ 0xb0b0ULL, 3 * config.count});
            for (int k = 0; k < config.count; ++k) {
                out.push_back({MatrixDescriptor{family, n, k, mix_seed(base + static_cast<std::uint64_t>(k))},
                               std::move(corpus[k]), std::move(partners[3 * k]),
                               std::move(partners[3 * k + 1]), std::move(partners[3 * k + 2])});
            }
        }
    }
    return out;
}

CertReport run_certification(const CertConfig& config) {
    CertReport report;
    report.config = config;
    bool perturb_pending = config.self_test_fail;

    for (const Instance& inst : certification_corpus(config)) {
        CertConfig local = config;
        local.self_test_fail = perturb_pending;
        perturb_pending = false;
        std::vector<CheckRecord> recs;
        try {
            recs = certify_instance(inst.desc, inst.a, inst.b, inst.x, inst.y, local);
        } catch (const ConsistencyError& e) {
            throw ConsistencyError(std::string(e.what()) + " on " + describe(inst.desc, inst.a));
        }
        for (const auto& r : recs) {
            if (!r.pass && std::none_of(report.counterexamples.begin(), report.counterexamples.end(),
                                        [&](const Counterexample& c) { return c.check == r.check; })) {
                report.counterexamples.push_back({r.check, inst.desc, inst.a, inst.b});
            }
        }
        report.records.insert(report.records.end(), std::make_move_iterator(recs.begin()),
                              std::make_move_iterator(recs.end()));
        ++report.matrices;
    }

    auto key = [](const CheckRecord& r) {
        return std::make_tuple(std::cref(r.check), static_cast<int>(r.matrix.family), r.matrix.n,
                               r.matrix.index);
    };
    std::stable_sort(report.records.begin(), report.records.end(),
                     [&](const CheckRecord& x, const CheckRecord& y) { return key(x) < key(y); });
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample& x, const Counterexample& y) { return x.check < y.check; });

    std::map<std::string, CheckSummary> summary;
    for (const auto& r : report.records) {
        auto [it, fresh] = summary.try_emplace(r.check);
        CheckSummary& s = it->second;
        if (fresh) {
            s.check = r.check;
            s.worst_slack = r.slack;
            s.tau = r.tau;
        }
        ++s.evaluated;
        if (!r.pass) ++s.failed;
        s.worst_slack = std::min(s.worst_slack, r.slack);
    }
    for (auto& [id, s] : summary) report.summary.push_back(s);
    return report;
}

} // namespace numrad::harness
