#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numrad/matcore.hpp"
#include "numrad/numerical_radius.hpp"

namespace numrad::bounds {

/// Stable report identifiers. These strings are part of the JSON/CSV output.
namespace ids {
inline constexpr std::string_view kHalfNorm = "lb_half_norm";
inline constexpr std::string_view kNorm = "ub_norm";
inline constexpr std::string_view kKittanehLower = "kittaneh_pair_lower";
inline constexpr std::string_view kKittanehUpper = "kittaneh_pair_upper";
inline constexpr std::string_view kKittanehSquare = "ub_kittaneh_sq";
inline constexpr std::string_view kYamazaki = "ub_yamazaki";
inline constexpr std::string_view kCartesianMix = "lb_thm21";
inline constexpr std::string_view kRealImagGap = "lb_pk1";
inline constexpr std::string_view kCartesianMixSq = "lb_thm22_sq";
inline constexpr std::string_view kRealImagGapSq = "lb_pk2_sq";
inline constexpr std::string_view kAluthgePolar = "ub_thm24";
inline constexpr std::string_view kHeinzBuzano = "ub_thm25";
inline constexpr std::string_view kHeinzBuzanoMin = "ub_cor28";
inline constexpr std::string_view kDragomir = "prod_ub_dragomir";
inline constexpr std::string_view kDragomirSq = "prod_ub_dragomir_sq";
inline constexpr std::string_view kHeydarbeygi = "prod_ub_heydarbeygi";
inline constexpr std::string_view kCartesianProduct = "prod_ub_thm33";
inline constexpr std::string_view kAnticommutatorProduct = "prod_ub_thm35";
inline constexpr std::string_view kGeneralizedCommutator = "comm_ub_thm37";
inline constexpr std::string_view kCommutator = "comm_ub_cor38";
inline constexpr std::string_view kFongHolbrook = "comm_ub_fong";
inline constexpr std::string_view kHirzallahKittaneh = "comm_ub_hirzallah";
inline constexpr std::string_view kFongXaAx = "fong_xa_ax";
} // namespace ids

enum class Side { lower, upper };

/// Quantity a bound estimates.
enum class Target {
    w,               ///< w(A)
    w_squared,       ///< w(A)^2
    w_power_r,       ///< w(B^*A)^r
    w_power_2r,      ///< w(B^*A)^{2r}
    w_of_expression, ///< w of a composite expression (commutators, A^*X + XA)
};

std::string_view to_string(Side side);
std::string_view to_string(Target target);

struct BoundParams {
    std::optional<double> alpha;
    std::optional<double> r;
    std::optional<int> sign; ///< +1 or -1
};

struct BoundReport {
    std::string id;
    Side side = Side::upper;
    Target target = Target::w;
    double value = 0.0;
    BoundParams params;
    std::string anchor; ///< the inequality this report evaluates, in words
};

struct AlphaSample {
    double alpha;
    double value;
};

/// Samples of alpha -> heinz_buzano_upper_sq(A, alpha) and their certified minimum.
struct AlphaCurve {
    std::vector<AlphaSample> samples;
    double argmin = 0.0;
    double min_value = 0.0;

    BoundReport report() const;
};

// ---------------------------------------------------------------------------
// Classical single-operator bounds on w(A) and w(A)^2

/// ||A|| / 2 <= w(A)
BoundReport half_norm_lower(const CMatrix& a);
/// w(A) <= ||A||
BoundReport norm_upper(const CMatrix& a);
/// 1/4 ||A^*A + AA^*|| <= w^2(A) <= 1/2 ||A^*A + AA^*||
std::pair<BoundReport, BoundReport> kittaneh_pair(const CMatrix& a);
/// w(A) <= (||A|| + ||A^2||^{1/2}) / 2
BoundReport kittaneh_square_root_upper(const CMatrix& a);
/// w(A) <= (||A|| + w(Aluthge(A))) / 2
BoundReport yamazaki_upper(const CMatrix& a, const NumRadOptions& opts = {});

// ---------------------------------------------------------------------------
// Lower bounds from the Cartesian decomposition

/// w(A) >= ||A||/2 + | ||Re A + Im A|| - ||Re A - Im A|| | / (2 sqrt 2)
BoundReport cartesian_mix_lower(const CMatrix& a);
/// w(A) >= ||A||/2 + | ||Re A|| - ||Im A|| | / 2
BoundReport real_imag_gap_lower(const CMatrix& a);
/// w^2(A) >= ||A^*A + AA^*||/4 + | ||Re A + Im A||^2 - ||Re A - Im A||^2 | / 4
BoundReport cartesian_mix_lower_sq(const CMatrix& a);
/// w^2(A) >= ||A^*A + AA^*||/4 + | ||Re A||^2 - ||Im A||^2 | / 2
BoundReport real_imag_gap_lower_sq(const CMatrix& a);

// ---------------------------------------------------------------------------
// Upper bounds through the polar decomposition

/// w(A) <= (||A||^2 + w^2(T) + w(|A| T + T |A|))^{1/2} / 2, T the Aluthge transform.
BoundReport aluthge_polar_upper(const CMatrix& a, const NumRadOptions& opts = {});

/// w^2(A) <= || |A|^{4a} + |A^*|^{4(1-a)} || / 4 + w(|A^*|^{2(1-a)} |A|^{2a}) / 2,
/// for a in [0, 1]; powers use 0^0 := 0.
BoundReport heinz_buzano_upper_sq(const CMatrix& a, double alpha, const NumRadOptions& opts = {});

/// Minimum over alpha of heinz_buzano_upper_sq: uniform grid of `grid` points on
/// [0, 1], then golden-section refinement inside the best bracket to width
/// `width`. The objective is only piecewise smooth, so the search is
/// derivative-free.
AlphaCurve heinz_buzano_min_alpha(const CMatrix& a, int grid = 257, double width = 1e-10,
                                  const NumRadOptions& opts = {});

// ---------------------------------------------------------------------------
// Products B^*A (r >= 1)

struct DragomirReports {
    BoundReport raw;     ///< bound on w^r(B^*A)
    BoundReport squared; ///< its square, a bound on w^{2r}(B^*A)
};

/// w^r(B^*A) <= || |A|^{2r} + |B|^{2r} || / 2
DragomirReports dragomir_product_upper(const CMatrix& a, const CMatrix& b, double r);
/// w^{2r}(B^*A) <= w^r(|B|^2 |A|^2) / 2 + || |B|^{4r} + |A|^{4r} || / 4
BoundReport heydarbeygi_product_upper(const CMatrix& a, const CMatrix& b, double r,
                                      const NumRadOptions& opts = {});
/// w^{2r}(B^*A) <= w^2(|A|^{2r} + i |B|^{2r}) / 2
BoundReport cartesian_product_upper(const CMatrix& a, const CMatrix& b, double r,
                                    const NumRadOptions& opts = {});
/// w^{2r}(B^*A) <= (|| |B|^2|A|^2 + |A|^2|B|^2 || / 2)^r / 2 + || |B|^{4r} + |A|^{4r} || / 4
BoundReport anticommutator_product_upper(const CMatrix& a, const CMatrix& b, double r);

// ---------------------------------------------------------------------------
// Commutators

/// w(AXB +- BYA) <= 2 sqrt2 ||B|| max(||X||, ||Y||)
///                  * sqrt(w^2(A) - | ||Re A + Im A||^2 - ||Re A - Im A||^2 | / 4)
BoundReport generalized_commutator_upper(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                                         const CMatrix& y, int sign,
                                         const NumRadOptions& opts = {});
/// generalized_commutator_upper with X = Y = I, bounding w(AB +- BA).
BoundReport commutator_upper(const CMatrix& a, const CMatrix& b, int sign = +1,
                             const NumRadOptions& opts = {});
/// w(AB + BA) <= 2 sqrt2 ||B|| w(A)
BoundReport fong_holbrook_commutator_upper(const CMatrix& a, const CMatrix& b,
                                           const NumRadOptions& opts = {});
/// w(AB +- BA) <= 2 sqrt2 ||B|| sqrt(w^2(A) - | ||Re A||^2 - ||Im A||^2 | / 2)
BoundReport hirzallah_kittaneh_commutator_upper(const CMatrix& a, const CMatrix& b, int sign = +1,
                                                const NumRadOptions& opts = {});
/// w(A^*X + XA) <= 2 ||A|| w(X)
BoundReport fong_holbrook_xa_ax_upper(const CMatrix& a, const CMatrix& x,
                                      const NumRadOptions& opts = {});

// ---------------------------------------------------------------------------
// Target quantities, for comparing reports against the truth

/// Matrix whose numerical radius a w_of_expression report bounds.
CMatrix commutator_expression(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                              const CMatrix& y, int sign);

/// Radicand clamp: values in [-tau, 0) become 0, below -tau raise ConsistencyError.
double clamp_radicand(double value, double tau, std::string_view where);

} // namespace numrad::bounds
