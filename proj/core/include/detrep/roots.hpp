#pragma once

#include <vector>

#include "detrep/poly.hpp"

namespace detrep {

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
};

/// Outcome of real_roots. When all_real is false, `roots` holds only the
/// real roots the Sturm count certified (each with multiplicity 1) and
/// real_count their number.
struct RealRoots {
  std::vector<RealRoot> roots;  // descending
  bool all_real = false;
  int real_count = 0;           // distinct real roots

  explicit operator bool() const { return all_real; }
  int total_multiplicity() const;
};

/// Roots closer than tol_cluster * (1 + |root|) are merged.
inline constexpr double kRootClusterTol = 1e-7;

/// Real roots of a nonconstant polynomial via a Sturm sequence, bisection and
/// Newton polishing. all_real holds iff the Sturm count shows that every
/// complex root is real; multiplicities then sum to the degree.
RealRoots real_roots(const UnivariatePolynomial& p, double tol_cluster = kRootClusterTol);

/// Number of distinct real roots in (a, b] by the Sturm sequence.
int sturm_count(const UnivariatePolynomial& p, double a, double b);

class ZeroRoot : public std::runtime_error {
 public:
  ZeroRoot() : std::runtime_error("polynomial has a root at zero") {}
};

/// Eigenvalues {-1/rho} of a coefficient matrix recovered from the roots rho
/// of its axis restriction, padded with zeros to length d, descending.
struct ReciprocalEigs {
  std::vector<double> values;
  bool all_real = false;
  int real_count = 0;

  explicit operator bool() const { return all_real; }
};

/// Requires deg(p) <= d and |p(0) - 1| <= 1e-9 (std::invalid_argument
/// otherwise). Throws ZeroRoot if a root is numerically zero.
ReciprocalEigs negative_reciprocal_eigs(const UnivariatePolynomial& p, int d);

}  // namespace detrep
