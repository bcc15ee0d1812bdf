#pragma once

#include <cstdint>
#include <vector>

#include "numrad/matcore.hpp"

namespace numrad {

/// Default absolute accuracy of the solver, scaled by (1 + ||A||).
inline constexpr double kDefaultNumradTol = 1e-10;
/// Default number of coarse grid points over [0, 2pi).
inline constexpr int kDefaultThetaGrid = 1024;

struct NumRadOptions {
    double tol = kDefaultNumradTol;
    int grid = kDefaultThetaGrid;
    bool keep_profile = false;
};

struct ProfileSample {
    double theta;
    double lambda_max;
};

struct NumRadResult {
    double value = 0.0;      ///< w(A)
    double theta_star = 0.0; ///< maximizer of lambda_max(Re(e^{i theta} A)), in [0, 2pi)
    CVector witness;         ///< unit x with |<Ax, x>| = value
    std::vector<ProfileSample> profile; ///< coarse grid samples, when requested
};

/// Numerical radius w(A) = max_theta lambda_max(Re(e^{i theta} A)).
///
/// The objective is sampled on a uniform grid, then every grid local maximum
/// that can still hold the global maximum is refined by golden-section search
/// down to a bracket width of 1e-12. Pruning uses the curvature bound
/// lambda_max'' >= -||A||, which holds through eigenvalue crossings.
/// Hermitian inputs bypass the sweep: w = max(|lambda_max|, |lambda_min|).
NumRadResult numerical_radius(const CMatrix& a, const NumRadOptions& options = {});

/// Value-only shorthand for numerical_radius(a, options).value.
double numrad_value(const CMatrix& a, const NumRadOptions& options = {});

/// lambda_max(Re(e^{i theta} A)) at grid_size equally spaced angles 2 pi k / grid_size.
std::vector<ProfileSample> nr_profile(const CMatrix& a, int grid_size);

/// Monte-Carlo lower estimate: max |<Ax, x>| over `trials` seeded random unit x.
double nr_lower_random(const CMatrix& a, int trials, std::uint64_t seed);

/// Process-wide default options. NUMRAD_TOL in the environment overrides tol.
NumRadOptions default_numrad_options();

} // namespace numrad
