#include "numrad/numerical_radius.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "numrad/errors.hpp"
#include "numrad/random.hpp"
#include "numrad/transforms.hpp"

namespace numrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBracketWidth = 1e-12;
constexpr double kInvPhi = 0.6180339887498948482;

/// theta -> lambda_max(cos(theta) Re(A) - sin(theta) Im(A)).
class Objective {
public:
    explicit Objective(const CMatrix& a)
        : parts_(cartesian(a)), work_(a.rows(), a.cols()), solver_(a.rows()) {}

    double operator()(double theta) {
        assemble(theta);
        solver_.compute(work_, Eigen::EigenvaluesOnly);
        if (solver_.info() != Eigen::Success) {
            throw ConvergenceError("numerical_radius: eigensolver did not converge");
        }
        return solver_.eigenvalues()(work_.rows() - 1);
    }

    /// Top eigenpair at theta.
    std::pair<double, CVector> top(double theta) {
        assemble(theta);
        solver_.compute(work_, Eigen::ComputeEigenvectors);
        if (solver_.info() != Eigen::Success) {
            throw ConvergenceError("numerical_radius: eigensolver did not converge");
        }
        const auto last = work_.rows() - 1;
        return {solver_.eigenvalues()(last), solver_.eigenvectors().col(last)};
    }

private:
    void assemble(double theta) {
        work_ = std::cos(theta) * parts_.re - std::sin(theta) * parts_.im;
    }

    CartesianParts parts_;
    CMatrix work_;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver_;
};

struct Peak {
    double theta;
    double value;
};

Peak golden_max(Objective& f, double lo, double hi) {
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    Peak best = f1 >= f2 ? Peak{x1, f1} : Peak{x2, f2};
    while (hi - lo > kBracketWidth) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
            if (f1 > best.value) best = {x1, f1};
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
            if (f2 > best.value) best = {x2, f2};
        }
    }
    return best;
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

bool is_hermitian_exactly(const CMatrix& a) {
    const double scale = a.cwiseAbs().maxCoeff();
    return max_abs_diff(a, a.adjoint()) <= 1e-14 * (1.0 + scale);
}

NumRadResult hermitian_radius(const CMatrix& a) {
    const HermEig eig = herm_eig(a);
    NumRadResult out;
    if (eig.max() >= -eig.min()) {
        out.value = std::max(eig.max(), 0.0);
        out.theta_star = 0.0;
        out.witness = eig.vectors.col(0);
    } else {
        out.value = -eig.min();
        out.theta_star = std::numbers::pi;
        out.witness = eig.vectors.col(eig.vectors.cols() - 1);
    }
    return out;
}

} // namespace

NumRadResult numerical_radius(const CMatrix& a, const NumRadOptions& options) {
    require_square_finite(a, "numerical_radius input");
    if (options.grid < 4) {
        throw DomainError("numerical_radius: grid must have at least 4 points");
    }
    const double norm = op_norm(a);
    const auto n = a.rows();
    if (norm == 0.0) {
        NumRadResult out;
        out.witness = CVector::Unit(n, 0);
        if (options.keep_profile) out.profile = nr_profile(a, options.grid);
        return out;
    }
    if (is_hermitian_exactly(a) && !options.keep_profile) {
        return hermitian_radius(a);
    }

    Objective f(a);
    const int grid = options.grid;
    const double step = kTwoPi / grid;
    std::vector<double> values(grid);
    for (int k = 0; k < grid; ++k) {
        values[k] = f(step * k);
    }
    const int arg = static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
    Peak best{step * arg, values[arg]};

    // A peak of value p inside [theta_k - h, theta_k + h] forces
    // values[k] >= p - ||A|| h^2 / 2, because lambda_max'' >= -||A||.
    const double slack = 0.5 * norm * step * step;
    const double noise = 1e-13 * (1.0 + norm);
    auto at = [&](int k) { return values[(k % grid + grid) % grid]; };

    std::vector<char> candidate(grid, 0);
    for (int k = 0; k < grid; ++k) {
        candidate[k] = at(k) >= at(k - 1) - noise && at(k) >= at(k + 1) - noise &&
                       at(k) >= best.value - slack;
    }

    // One representative per run of adjacent candidates (plateaus and flat profiles).
    std::vector<int> reps;
    const auto gap = std::find(candidate.begin(), candidate.end(), 0);
    if (gap == candidate.end()) {
        reps.push_back(arg);
    } else {
        const int start = static_cast<int>(gap - candidate.begin());
        int pick = -1;
        for (int i = 1; i <= grid; ++i) {
            const int k = (start + i) % grid;
            if (candidate[k]) {
                if (pick < 0 || values[k] > values[pick]) pick = k;
            } else if (pick >= 0) {
                reps.push_back(pick);
                pick = -1;
            }
        }
    }
    std::sort(reps.begin(), reps.end(), [&](int x, int y) { return values[x] > values[y]; });

    for (int k : reps) {
        if (values[k] + slack <= best.value + options.tol * (1.0 + norm)) {
            break;
        }
        const double centre = step * k;
        const Peak peak = golden_max(f, centre - step, centre + step);
        if (peak.value > best.value) {
            best = peak;
        }
    }

    NumRadResult out;
    out.theta_star = wrap_angle(best.theta);
    auto [lambda, vec] = f.top(out.theta_star);
    out.value = std::max(lambda, best.value);
    out.witness = vec.normalized();
    if (options.keep_profile) {
        out.profile.reserve(grid);
        for (int k = 0; k < grid; ++k) {
            out.profile.push_back({step * k, values[k]});
        }
    }
    return out;
}

double numrad_value(const CMatrix& a, const NumRadOptions& options) {
    return numerical_radius(a, options).value;
}

std::vector<ProfileSample> nr_profile(const CMatrix& a, int grid_size) {
    require_square_finite(a, "nr_profile input");
    if (grid_size < 4) {
        throw DomainError("nr_profile: grid_size must be >= 4");
    }
    Objective f(a);
    std::vector<ProfileSample> out;
    out.reserve(grid_size);
    for (int k = 0; k < grid_size; ++k) {
        const double theta = kTwoPi * k / grid_size;
        out.push_back({theta, f(theta)});
    }
    return out;
}

double nr_lower_random(const CMatrix& a, int trials, std::uint64_t seed) {
    require_square_finite(a, "nr_lower_random input");
    if (trials < 1) {
        throw DomainError("nr_lower_random: trials must be >= 1");
    }
    Rng rng(seed);
    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        const CVector x = rng.unit_vector(a.rows());
        best = std::max(best, std::abs(x.dot(a * x)));
    }
    return best;
}

NumRadOptions default_numrad_options() {
    NumRadOptions options;
    if (const char* env = std::getenv("NUMRAD_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end == env || !(tol > 0.0) || !std::isfinite(tol)) {
            throw DomainError(std::string("NUMRAD_TOL is not a positive number: ") + env);
        }
        options.tol = tol;
    }
    return options;
}

} // namespace numrad
