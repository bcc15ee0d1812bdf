#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/matcore.hpp"
#include "numrad/numerical_radius.hpp"

namespace numrad::harness {

// ---------------------------------------------------------------------------
// Corpus generation

enum class Family {
    ginibre,
    normal,
    hermitian,
    nilpotent_square_zero,
    rank_deficient,
    unitary,
};

std::string_view to_string(Family family);
/// Throws DomainError on an unknown name.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

struct GenSpec {
    Family family = Family::ginibre;
    int n = 2;
    std::uint64_t seed = 0;
    int count = 1;
};

/// Deterministic in (family, n, seed, count).
///
/// - ginibre: independent standard complex normal entries.
/// - normal: Q diag(z) Q^* with Q Haar unitary and z complex normal.
/// - hermitian: (G + G^*)/2.
/// - nilpotent_square_zero: [[0, M], [0, 0]] with an n/2 x (n - n/2) block M,
///   so A^2 = 0 exactly.
/// - rank_deficient: G1 G2 with inner dimension drawn from [1, n-1] (zero for n = 1).
/// - unitary: Haar unitary from QR of a Ginibre matrix with phase-fixed R.
std::vector<CMatrix> generate(const GenSpec& spec);

// ---------------------------------------------------------------------------
// Vector-level lemma verifiers

/// |<Ax,x> - polarization expansion in x +- y and x +- iy|.
double verify_polarization(const CMatrix& a, const CVector& x, const CVector& y);

/// <|A|^{2a}x,x> <|A^*|^{2(1-a)}y,y> - |<Ax,y>|^2
double verify_heinz(const CMatrix& a, const CVector& x, const CVector& y, double alpha);

/// (|<a,b>| + ||a|| ||b||)/2 - |<a,e><e,b>|, for unit e.
double verify_buzano(const CVector& a, const CVector& b, const CVector& e);

/// <A^r x,x> - <Ax,x>^r for PSD A and unit x.
double verify_power_lemma(const CMatrix& a, const CVector& x, double r);

/// sqrt2 |a + ib| - |a + b|
double verify_scalar_lemma(double a, double b);

/// ||(A^r + B^r)/2|| - ||((A+B)/2)^r|| for PSD A, B.
double verify_convex_norm_lemma(const CMatrix& a, const CMatrix& b, double r);

// ---------------------------------------------------------------------------
// Certification driver

inline constexpr double kBoundTau = 1e-8;
inline constexpr double kIdentityTau = 1e-10;
inline constexpr double kPolarizationTau = 1e-12;

struct CertConfig {
    std::vector<Family> families = all_families();
    std::vector<int> sizes = {2, 3, 4, 5, 6};
    int count = 5; ///< matrices per (family, size)
    std::uint64_t seed = 1;
    std::vector<double> r_values = {1.0, 1.5, 2.0, 3.0};
    int alpha_grid = 33;
    int lemma_trials = 4; ///< random vector instances per matrix for every lemma
    bool self_test_fail = false; ///< perturb one bound by -1 to exercise the failure path
    NumRadOptions numrad;        ///< solver settings for every w evaluation
};

struct MatrixDescriptor {
    Family family = Family::ginibre;
    int n = 0;
    int index = 0;
    std::uint64_t seed = 0;
};

/// One inequality lhs <= rhs evaluated on one instance.
struct CheckRecord {
    std::string check;
    MatrixDescriptor matrix;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; ///< (rhs - lhs) / scale
    double tau = 0.0;
    bool pass = true;
    std::optional<double> param; ///< alpha or r when the check is parameterized
};

struct CheckSummary {
    std::string check;
    int evaluated = 0;
    int failed = 0;
    double worst_slack = 0.0;
    double tau = 0.0;
};

/// Operands of a failed record, embedded in the report.
struct Counterexample {
    std::string check;
    MatrixDescriptor matrix;
    CMatrix a;
    CMatrix b;
};

struct CertReport {
    std::string suite = "numrad-certification";
    CertConfig config;
    std::vector<CheckRecord> records;   ///< sorted by (check, family, n, index)
    std::vector<CheckSummary> summary;  ///< sorted by check
    std::vector<Counterexample> counterexamples;
    int matrices = 0;

    bool passed() const;
    int failures() const;
};

/// One certification instance: the matrix under test plus the partner
/// operands used by the product and commutator checks.
struct Instance {
    MatrixDescriptor desc;
    CMatrix a;
    CMatrix b;
    CMatrix x;
    CMatrix y;
};

/// The corpus run_certification iterates over, in report order.
std::vector<Instance> certification_corpus(const CertConfig& config);

/// Runs every bound check, ordering chain, sharpness implication and lemma
/// verifier over the configured corpus. Deterministic in the config.
CertReport run_certification(const CertConfig& config);

/// Per-(check, family, n, index) records for one instance. Exposed for tests.
std::vector<CheckRecord> certify_instance(const MatrixDescriptor& desc, const CMatrix& a,
                                          const CMatrix& b, const CMatrix& x, const CMatrix& y,
                                          const CertConfig& config);

} // namespace numrad::harness
