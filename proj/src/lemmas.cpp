#include <cmath>
#include <algorithm>
#include <complex>
#include <numbers>
#include <string>

#include "numrad/errors.hpp"
#include "numrad/harness.hpp"
#include "numrad/transforms.hpp"

namespace numrad::harness {

namespace {

constexpr double kUnitTol = 1e-12;

void require_vector(const CMatrix& a, const CVector& v, const char* what) {
    if (v.size() != a.rows()) {
        throw DimensionError(std::string(what) + ": vector length does not match the matrix");
    }
}

void require_unit(const CVector& v, const char* what) {
    if (std::abs(v.norm() - 1.0) > kUnitTol) {
        throw DomainError(std::string(what) + ": vector must have unit norm");
    }
}

/// <Mu, u>
Complex form(const CMatrix& m, const CVector& u) { return u.dot(m * u); }

} // namespace

double verify_polarization(const CMatrix& a, const CVector& x, const CVector& y) {
    require_square_finite(a, "verify_polarization");
    require_vector(a, x, "verify_polarization");
    require_vector(a, y, "verify_polarization");
    const Complex i(0.0, 1.0);
    const CVector iy = i * y;
    const Complex expansion = (form(a, x + y) - form(a, x - y)) / 4.0 +
                              i * (form(a, x + iy) - form(a, x - iy)) / 4.0;
    const Complex direct = y.dot(a * x); // <Ax, y>
    return std::abs(direct - expansion);
}

double verify_heinz(const CMatrix& a, const CVector& x, const CVector& y, double alpha) {
    require_square_finite(a, "verify_heinz");
    require_vector(a, x, "verify_heinz");
    require_vector(a, y, "verify_heinz");
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("verify_heinz: alpha must lie in [0, 1]");
    }
    const ModulusPowers powers(a);
    const double left = form(powers.modulus(2.0 * alpha), x).real();
    const double right = form(powers.adjoint_modulus(2.0 * (1.0 - alpha)), y).real();
    return left * right - std::norm(y.dot(a * x));
}

double verify_buzano(const CVector& a, const CVector& b, const CVector& e) {
    if (a.size() != b.size() || a.size() != e.size()) {
        throw DimensionError("verify_buzano: vector lengths differ");
    }
    require_unit(e, "verify_buzano");
    const double lhs = std::abs(e.dot(a) * b.dot(e)); // <a,e><e,b>
    return 0.5 * (std::abs(b.dot(a)) + a.norm() * b.norm()) - lhs;
}

double verify_power_lemma(const CMatrix& a, const CVector& x, double r) {
    require_square_finite(a, "verify_power_lemma");
    require_vector(a, x, "verify_power_lemma");
    require_unit(x, "verify_power_lemma");
    if (!(r >= 1.0)) throw DomainError("verify_power_lemma: r must be >= 1");
    const CMatrix base = psd_power(a, 1.0); // validates PSD, clamps rounding
    const double mean = std::max(form(base, x).real(), 0.0);
    return form(psd_power(a, r), x).real() - std::pow(mean, r);
}

double verify_scalar_lemma(double a, double b) {
    return std::numbers::sqrt2 * std::abs(Complex(a, b)) - std::abs(a + b);
}

double verify_convex_norm_lemma(const CMatrix& a, const CMatrix& b, double r) {
    require_square_finite(a, "verify_convex_norm_lemma");
    require_square_finite(b, "verify_convex_norm_lemma");
    if (a.rows() != b.rows()) throw DimensionError("verify_convex_norm_lemma: dimensions differ");
    if (!(r >= 1.0)) throw DomainError("verify_convex_norm_lemma: r must be >= 1");
    const double rhs = op_norm(0.5 * (psd_power(a, r) + psd_power(b, r)));
    const double lhs = op_norm(psd_power(0.5 * (a + b), r));
    return rhs - lhs;
}

} // namespace numrad::harness
