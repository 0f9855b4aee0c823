#pragma once

#include <vector>

#include "detrep/linalg.hpp"
#include "detrep/msdr.hpp"

namespace detrep {

/// diag(s1, ..., sd) with every si = +1 or -1.
struct SignatureMatrix {
  std::vector<int> signs;

  int order() const { return static_cast<int>(signs.size()); }
  Matrix dense() const;

  /// All 2^d signatures, the bits of the index giving the minus signs.
  static std::vector<SignatureMatrix> all(int d);
  /// The 2^(d-1) signatures with s1 = +1.
  static std::vector<SignatureMatrix> with_positive_first(int d);
};

/// S A S: the diagonal is kept, entry (i, j) is multiplied by si sj.
SymmetricMatrix conjugate(const SymmetricMatrix& a, const SignatureMatrix& s);
/// Conjugates every A of the representation; D1 is unchanged.
MSDR conjugate(const MSDR& rep, const SignatureMatrix& s);

/// Distinct matrices S A S over all signatures (exact comparison).
std::vector<SymmetricMatrix> orbit(const SymmetricMatrix& a);
/// Distinct transition matrices S V over all signatures.
std::vector<Matrix> transition_orbit(const Matrix& v);

/// Orbit member whose flattened A (then the next A, ...) is
/// lexicographically greatest, entries within 1e-8 counting as equal.
MSDR canonicalize(const MSDR& rep);

/// Largest entrywise distance between two representations minimized over
/// the signature orbit of the second.
double orbit_distance(const MSDR& a, const MSDR& b);

/// Groups representations whose orbits meet within `tol` entrywise, in
/// order of first appearance.
std::vector<std::vector<MSDR>> classes(const std::vector<MSDR>& reps, double tol = 1e-6);

/// One canonical representative per class (the member with the smallest
/// residual, canonicalized), sorted by flattened entries, descending.
std::vector<MSDR> class_representatives(const std::vector<MSDR>& reps, double tol = 1e-6);

struct Transition {
  DiagonalMatrix D;  // eigenvalues, descending
  Matrix V;          // A = V D V^T
};

Transition recover_transition(const SymmetricMatrix& a);

/// ||W D W^T - D||_F.
double diagonal_defect(const Matrix& w, const DiagonalMatrix& d);

struct NearestSignature {
  SignatureMatrix s;
  double distance = 0.0;  // max entrywise |W - S|
};

/// Exhaustive search over the 2^d signatures.
NearestSignature nearest_signature(const Matrix& w);

}  // namespace detrep
