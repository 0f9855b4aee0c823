#pragma once

#include <cstdint>

#include "detrep/msdr.hpp"
#include "detrep/poly.hpp"

namespace detrep {

struct RandomInstance {
  Polynomial polynomial;
  MSDR representation;
};

/// Minimum gap between consecutive eigenvalues of the sampled D1.
inline constexpr double kRandomEigenGap = 1e-3;

/// Symmetric matrices with entries uniform in [-1, 1], the first one
/// diagonalized (resampled until its eigenvalues are kRandomEigenGap apart),
/// and f = det(I + x1 D1 + x2 A12 + ... + xn A1n). Deterministic in `seed`.
RandomInstance random_instance(int d, int n, std::uint64_t seed);

}  // namespace detrep
