#pragma once

#include <cstdint>
#include <random>

#include "numrad/matcore.hpp"

namespace numrad {

/// Seeded generator for every random corpus in the project.
///
/// Algorithm: std::mt19937_64 (fully specified by the standard) yields 64-bit
/// words; a uniform double in [0, 1) is (word >> 11) * 2^-53; standard normals
/// come from the Box-Muller transform on pairs of such uniforms, using both
/// outputs. Complex entries take independent real and imaginary parts.
/// The uniform stream is identical on every conforming implementation; the
/// normals additionally depend only on the host libm's log/sin/cos.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double normal();
    Complex complex_normal();

    /// n x n matrix of independent complex_normal() entries, column-major fill.
    CMatrix ginibre(Eigen::Index n);
    /// Complex normal vector scaled to unit length.
    CVector unit_vector(Eigen::Index n);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// SplitMix64 finalizer, used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

} // namespace numrad
