#include "numrad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "numrad/errors.hpp"
#include "numrad/transforms.hpp"

namespace numrad::bounds {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kRadicandTol = 1e-8;
constexpr double kInvPhi = 0.6180339887498948482;

BoundReport make(std::string_view id, Side side, Target target, double value, std::string anchor,
                 BoundParams params = {}) {
    return BoundReport{std::string(id), side, target, value, params, std::move(anchor)};
}

void require_r(double r) {
    if (!(r >= 1.0) || !std::isfinite(r)) {
        throw DomainError("product bound: r must be finite and >= 1");
    }
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw DomainError("commutator bound: sign must be +1 or -1");
    }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
    require_square_finite(a, what);
    require_square_finite(b, what);
    if (a.rows() != b.rows()) {
        throw DimensionError(std::string(what) + ": operand dimensions differ");
    }
}

/// Norms of Re A, Im A, Re A + Im A and Re A - Im A.
struct CartesianNorms {
    double re;
    double im;
    double sum;
    double diff;
};

CartesianNorms cartesian_norms(const CMatrix& a) {
    const CartesianParts parts = cartesian(a);
    return CartesianNorms{op_norm(parts.re), op_norm(parts.im), op_norm(parts.re + parts.im),
                          op_norm(parts.re - parts.im)};
}

/// || A^*A + AA^* ||
double gram_sum_norm(const CMatrix& a) { return op_norm(a.adjoint() * a + a * a.adjoint()); }

double heinz_buzano_value(const ModulusPowers& powers, double alpha, const NumRadOptions& opts) {
    const double beta = 1.0 - alpha;
    const CMatrix sum = powers.modulus(4.0 * alpha) + powers.adjoint_modulus(4.0 * beta);
    const CMatrix mixed = powers.adjoint_modulus(2.0 * beta) * powers.modulus(2.0 * alpha);
    return 0.25 * op_norm(sum) + 0.5 * numrad_value(mixed, opts);
}

void require_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("heinz_buzano_upper_sq: alpha must lie in [0, 1]");
    }
}

} // namespace

std::string_view to_string(Side side) { return side == Side::lower ? "lower" : "upper"; }

std::string_view to_string(Target target) {
    switch (target) {
    case Target::w:
        return "w";
    case Target::w_squared:
        return "w_squared";
    case Target::w_power_r:
        return "w_power_r";
    case Target::w_power_2r:
        return "w_power_2r";
    case Target::w_of_expression:
        return "w_of_expression";
    }
    return "unknown";
}

double clamp_radicand(double value, double tau, std::string_view where) {
    if (value >= 0.0) return value;
    if (value >= -tau) return 0.0;
    throw ConsistencyError(std::string(where) + ": radicand " + std::to_string(value) +
                           " is negative beyond tolerance " + std::to_string(tau));
}

BoundReport AlphaCurve::report() const {
    return make(ids::kHeinzBuzanoMin, Side::upper, Target::w_squared, min_value,
                "w^2(A) <= min_a { || |A|^{4a} + |A*|^{4(1-a)} ||/4 + w(|A*|^{2(1-a)}|A|^{2a})/2 }",
                BoundParams{argmin, std::nullopt, std::nullopt});
}

BoundReport half_norm_lower(const CMatrix& a) {
    return make(ids::kHalfNorm, Side::lower, Target::w, 0.5 * op_norm(a), "w(A) >= ||A||/2");
}

BoundReport norm_upper(const CMatrix& a) {
    return make(ids::kNorm, Side::upper, Target::w, op_norm(a), "w(A) <= ||A||");
}

std::pair<BoundReport, BoundReport> kittaneh_pair(const CMatrix& a) {
    require_square_finite(a, "kittaneh_pair input");
    const double g = gram_sum_norm(a);
    return {make(ids::kKittanehLower, Side::lower, Target::w_squared, 0.25 * g,
                 "w^2(A) >= ||A*A + AA*||/4"),
            make(ids::kKittanehUpper, Side::upper, Target::w_squared, 0.5 * g,
                 "w^2(A) <= ||A*A + AA*||/2")};
}

BoundReport kittaneh_square_root_upper(const CMatrix& a) {
    require_square_finite(a, "ub_kittaneh_sq input");
    const double value = 0.5 * (op_norm(a) + std::sqrt(op_norm(a * a)));
    return make(ids::kKittanehSquare, Side::upper, Target::w, value,
                "w(A) <= (||A|| + ||A^2||^{1/2})/2");
}

BoundReport yamazaki_upper(const CMatrix& a, const NumRadOptions& opts) {
    const double value = 0.5 * (op_norm(a) + numrad_value(aluthge(a), opts));
    return make(ids::kYamazaki, Side::upper, Target::w, value,
                "w(A) <= (||A|| + w(Aluthge(A)))/2");
}

BoundReport cartesian_mix_lower(const CMatrix& a) {
    const CartesianNorms c = cartesian_norms(a);
    const double value = 0.5 * op_norm(a) + std::abs(c.sum - c.diff) / (2.0 * kSqrt2);
    return make(ids::kCartesianMix, Side::lower, Target::w, value,
                "w(A) >= ||A||/2 + | ||Re A + Im A|| - ||Re A - Im A|| |/(2 sqrt 2)");
}

BoundReport real_imag_gap_lower(const CMatrix& a) {
    const CartesianNorms c = cartesian_norms(a);
    const double value = 0.5 * op_norm(a) + 0.5 * std::abs(c.re - c.im);
    return make(ids::kRealImagGap, Side::lower, Target::w, value,
                "w(A) >= ||A||/2 + | ||Re A|| - ||Im A|| |/2");
}

BoundReport cartesian_mix_lower_sq(const CMatrix& a) {
    const CartesianNorms c = cartesian_norms(a);
    const double value = 0.25 * gram_sum_norm(a) + 0.25 * std::abs(c.sum * c.sum - c.diff * c.diff);
    return make(ids::kCartesianMixSq, Side::lower, Target::w_squared, value,
                "w^2(A) >= ||A*A + AA*||/4 + | ||Re A + Im A||^2 - ||Re A - Im A||^2 |/4");
}

BoundReport real_imag_gap_lower_sq(const CMatrix& a) {
    const CartesianNorms c = cartesian_norms(a);
    const double value = 0.25 * gram_sum_norm(a) + 0.5 * std::abs(c.re * c.re - c.im * c.im);
    return make(ids::kRealImagGapSq, Side::lower, Target::w_squared, value,
                "w^2(A) >= ||A*A + AA*||/4 + | ||Re A||^2 - ||Im A||^2 |/2");
}

BoundReport aluthge_polar_upper(const CMatrix& a, const NumRadOptions& opts) {
    const PolarParts parts = polar(a);
    const CMatrix transform = aluthge(a);
    const double norm = op_norm(a);
    const double wt = numrad_value(transform, opts);
    const double wmix = numrad_value(parts.modulus * transform + transform * parts.modulus, opts);
    const double value = 0.5 * std::sqrt(norm * norm + wt * wt + wmix);
    return make(ids::kAluthgePolar, Side::upper, Target::w, value,
                "w(A) <= (||A||^2 + w^2(T) + w(|A|T + T|A|))^{1/2}/2, T = Aluthge(A)");
}

BoundReport heinz_buzano_upper_sq(const CMatrix& a, double alpha, const NumRadOptions& opts) {
    require_alpha(alpha);
    const ModulusPowers powers(a);
    return make(ids::kHeinzBuzano, Side::upper, Target::w_squared,
                heinz_buzano_value(powers, alpha, opts),
                "w^2(A) <= || |A|^{4a} + |A*|^{4(1-a)} ||/4 + w(|A*|^{2(1-a)}|A|^{2a})/2",
                BoundParams{alpha, std::nullopt, std::nullopt});
}

AlphaCurve heinz_buzano_min_alpha(const CMatrix& a, int grid, double width,
                                  const NumRadOptions& opts) {
    if (grid < 16) {
        throw DomainError("heinz_buzano_min_alpha: grid must have at least 16 points");
    }
    if (!(width > 0.0)) {
        throw DomainError("heinz_buzano_min_alpha: refinement width must be positive");
    }
    const ModulusPowers powers(a);
    auto f = [&](double alpha) { return heinz_buzano_value(powers, alpha, opts); };

    AlphaCurve curve;
    curve.samples.reserve(grid);
    for (int k = 0; k < grid; ++k) {
        const double alpha = static_cast<double>(k) / (grid - 1);
        curve.samples.push_back({alpha, f(alpha)});
    }
    const auto best = std::min_element(curve.samples.begin(), curve.samples.end(),
                                       [](const auto& x, const auto& y) { return x.value < y.value; });
    const int k = static_cast<int>(best - curve.samples.begin());
    curve.argmin = best->alpha;
    curve.min_value = best->value;

    double lo = curve.samples[std::max(k - 1, 0)].alpha;
    double hi = curve.samples[std::min(k + 1, grid - 1)].alpha;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    auto consider = [&](double x, double v) {
        if (v < curve.min_value) {
            curve.min_value = v;
            curve.argmin = x;
        }
    };
    consider(x1, f1);
    consider(x2, f2);
    while (hi - lo > width) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
            consider(x1, f1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
            consider(x2, f2);
        }
    }
    return curve;
}

DragomirReports dragomir_product_upper(const CMatrix& a, const CMatrix& b, double r) {
    require_r(r);
    require_same_shape(a, b, "prod_ub_dragomir");
    const double value =
        0.5 * op_norm(modulus_power(a, 2.0 * r) + modulus_power(b, 2.0 * r));
    const BoundParams params{std::nullopt, r, std::nullopt};
    return {make(ids::kDragomir, Side::upper, Target::w_power_r, value,
                 "w^r(B*A) <= || |A|^{2r} + |B|^{2r} ||/2", params),
            make(ids::kDragomirSq, Side::upper, Target::w_power_2r, value * value,
                 "w^{2r}(B*A) <= (|| |A|^{2r} + |B|^{2r} ||/2)^2", params)};
}

BoundReport heydarbeygi_product_upper(const CMatrix& a, const CMatrix& b, double r,
                                      const NumRadOptions& opts) {
    require_r(r);
    require_same_shape(a, b, "prod_ub_heydarbeygi");
    const ModulusPowers pa(a);
    const ModulusPowers pb(b);
    const double wprod = numrad_value(pb.modulus(2.0) * pa.modulus(2.0), opts);
    const double value = 0.5 * std::pow(wprod, r) +
                         0.25 * op_norm(pb.modulus(4.0 * r) + pa.modulus(4.0 * r));
    return make(ids::kHeydarbeygi, Side::upper, Target::w_power_2r, value,
                "w^{2r}(B*A) <= w^r(|B|^2|A|^2)/2 + || |B|^{4r} + |A|^{4r} ||/4",
                BoundParams{std::nullopt, r, std::nullopt});
}

BoundReport cartesian_product_upper(const CMatrix& a, const CMatrix& b, double r,
                                    const NumRadOptions& opts) {
    require_r(r);
    require_same_shape(a, b, "prod_ub_thm33");
    const CMatrix combined = modulus_power(a, 2.0 * r) + Complex(0.0, 1.0) * modulus_power(b, 2.0 * r);
    const double wc = numrad_value(combined, opts);
    return make(ids::kCartesianProduct, Side::upper, Target::w_power_2r, 0.5 * wc * wc,
                "w^{2r}(B*A) <= w^2(|A|^{2r} + i|B|^{2r})/2",
                BoundParams{std::nullopt, r, std::nullopt});
}

BoundReport anticommutator_product_upper(const CMatrix& a, const CMatrix& b, double r) {
    require_r(r);
    require_same_shape(a, b, "prod_ub_thm35");
    const ModulusPowers pa(a);
    const ModulusPowers pb(b);
    const CMatrix a2 = pa.modulus(2.0);
    const CMatrix b2 = pb.modulus(2.0);
    const double anti = 0.5 * op_norm(b2 * a2 + a2 * b2);
    const double value =
        0.5 * std::pow(anti, r) + 0.25 * op_norm(pb.modulus(4.0 * r) + pa.modulus(4.0 * r));
    return make(ids::kAnticommutatorProduct, Side::upper, Target::w_power_2r, value,
                "w^{2r}(B*A) <= (|| |B|^2|A|^2 + |A|^2|B|^2 ||/2)^r/2 + || |B|^{4r} + |A|^{4r} ||/4",
                BoundParams{std::nullopt, r, std::nullopt});
}

BoundReport generalized_commutator_upper(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                                         const CMatrix& y, int sign, const NumRadOptions& opts) {
    require_sign(sign);
    require_same_shape(a, b, "comm_ub_thm37");
    require_same_shape(a, x, "comm_ub_thm37");
    require_same_shape(a, y, "comm_ub_thm37");
    const double wa = numrad_value(a, opts);
    const CartesianNorms c = cartesian_norms(a);
    const double w2 = wa * wa;
    const double radicand = clamp_radicand(
        w2 - 0.25 * std::abs(c.sum * c.sum - c.diff * c.diff), kRadicandTol * (1.0 + w2),
        "comm_ub_thm37");
    const double value =
        2.0 * kSqrt2 * op_norm(b) * std::max(op_norm(x), op_norm(y)) * std::sqrt(radicand);
    return make(ids::kGeneralizedCommutator, Side::upper, Target::w_of_expression, value,
                "w(AXB +- BYA) <= 2 sqrt2 ||B|| max(||X||,||Y||) "
                "(w^2(A) - | ||Re A + Im A||^2 - ||Re A - Im A||^2 |/4)^{1/2}",
                BoundParams{std::nullopt, std::nullopt, sign});
}

BoundReport commutator_upper(const CMatrix& a, const CMatrix& b, int sign,
                             const NumRadOptions& opts) {
    const CMatrix id = CMatrix::Identity(a.rows(), a.cols());
    BoundReport out = generalized_commutator_upper(a, b, id, id, sign, opts);
    out.id = std::string(ids::kCommutator);
    out.anchor = "w(AB +- BA) <= 2 sqrt2 ||B|| "
                 "(w^2(A) - | ||Re A + Im A||^2 - ||Re A - Im A||^2 |/4)^{1/2}";
    return out;
}

BoundReport fong_holbrook_commutator_upper(const CMatrix& a, const CMatrix& b,
                                           const NumRadOptions& opts) {
    require_same_shape(a, b, "comm_ub_fong");
    const double value = 2.0 * kSqrt2 * op_norm(b) * numrad_value(a, opts);
    return make(ids::kFongHolbrook, Side::upper, Target::w_of_expression, value,
                "w(AB + BA) <= 2 sqrt2 ||B|| w(A)", BoundParams{std::nullopt, std::nullopt, +1});
}

BoundReport hirzallah_kittaneh_commutator_upper(const CMatrix& a, const CMatrix& b, int sign,
                                                const NumRadOptions& opts) {
    require_sign(sign);
    require_same_shape(a, b, "comm_ub_hirzallah");
    const double wa = numrad_value(a, opts);
    const CartesianNorms c = cartesian_norms(a);
    const double w2 = wa * wa;
    const double radicand =
        clamp_radicand(w2 - 0.5 * std::abs(c.re * c.re - c.im * c.im), kRadicandTol * (1.0 + w2),
                       "comm_ub_hirzallah");
    const double value = 2.0 * kSqrt2 * op_norm(b) * std::sqrt(radicand);
    return make(ids::kHirzallahKittaneh, Side::upper, Target::w_of_expression, value,
                "w(AB +- BA) <= 2 sqrt2 ||B|| (w^2(A) - | ||Re A||^2 - ||Im A||^2 |/2)^{1/2}",
                BoundParams{std::nullopt, std::nullopt, sign});
}

BoundReport fong_holbrook_xa_ax_upper(const CMatrix& a, const CMatrix& x, const NumRadOptions& opts) {
    require_same_shape(a, x, "fong_xa_ax");
    const double value = 2.0 * op_norm(a) * numrad_value(x, opts);
    return make(ids::kFongXaAx, Side::upper, Target::w_of_expression, value,
                "w(A*X + XA) <= 2 ||A|| w(X)");
}

CMatrix commutator_expression(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                              const CMatrix& y, int sign) {
    require_sign(sign);
    return a * x * b + static_cast<double>(sign) * (b * y * a);
}

} // namespace numrad::bounds
