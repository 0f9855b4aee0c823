#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "detrep/linalg.hpp"
#include "detrep/poly.hpp"

namespace detrep {

class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch() : std::invalid_argument("matrices have different orders") {}
};

class KOutOfRange : public std::out_of_range {
 public:
  KOutOfRange(int k, int d);
};

/// Square matrix over a coefficient ring: double for numeric work, Polynomial
/// (in a fixed list of named unknowns) for symbolic work.
template <class T>
class GenericMatrix {
 public:
  GenericMatrix(int order, T fill) : order_(order), entries_(static_cast<std::size_t>(order * order), fill) {}

  int order() const { return order_; }
  T& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * order_ + j)]; }
  const T& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * order_ + j)]; }

 private:
  int order_;
  std::vector<T> entries_;
};

using SymbolicMatrix = GenericMatrix<Polynomial>;

template <class M>
struct GmdSlot {
  M matrix;
  int multiplicity = 1;
};

using NumericTuple = std::vector<GmdSlot<Matrix>>;
using SymbolicTuple = std::vector<GmdSlot<SymbolicMatrix>>;

/// Generalized mixed discriminant: the sum over increasing row subsets alpha
/// of size k = sum of multiplicities and over the distinct arrangements sigma
/// of the multiset of matrices, of the k x k determinant whose i-th row is row
/// alpha_i of matrix sigma(i), restricted to the columns alpha.
double gmd(const NumericTuple& t);
/// Symbolic variant; `nunknowns` is the variable count of every entry.
Polynomial gmd(const SymbolicTuple& t, int nunknowns);

/// det(I + x1 A1 + ... + xn An) as a polynomial in n variables; the
/// coefficient of x^k is the gmd of (A1 with multiplicity k1, ...).
Polynomial expand_det(const std::vector<Matrix>& a);
Polynomial expand_det(const std::vector<SymmetricMatrix>& a);
Polynomial expand_det(const DiagonalMatrix& d1, const std::vector<SymmetricMatrix>& a);

/// One coefficient of det(I + sum x_i A_i).
double coefficient_of(const std::vector<Matrix>& a, const Exponents& e);
Polynomial coefficient_of(const std::vector<SymbolicMatrix>& a, const Exponents& e, int nunknowns);

/// Sum of the k x k principal minors of a, by direct enumeration.
double principal_minor_sum(const Matrix& a, int k);

/// Symmetric matrix whose entries are numbers or named unknowns.
class MatrixTemplate {
 public:
  using Entry = std::variant<double, std::string>;

  explicit MatrixTemplate(int order);
  static MatrixTemplate from(const SymmetricMatrix& m);
  static MatrixTemplate from(const DiagonalMatrix& m);

  int order() const { return order_; }
  /// Sets (i, j) and (j, i).
  void set(int i, int j, Entry e);
  const Entry& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * order_ + j)]; }

 private:
  int order_;
  std::vector<Entry> entries_;
};

class UnknownCollision : public std::invalid_argument {
 public:
  explicit UnknownCollision(const std::string& name);
};

/// Polynomials in `unknowns` (variable i+1 is unknowns[i]); generators[m] is
/// the coefficient of monomials[m] in the symbolic expansion minus the target
/// coefficient.
struct PolynomialSystem {
  std::vector<std::string> unknowns;
  std::vector<Exponents> monomials;
  std::vector<Polynomial> generators;
};

/// Builds the generators for det(I + x1 D1 + x2 T2 + ... + xn Tn) = target
/// over the given monomials. Unknowns are numbered by first appearance,
/// scanning the templates in order and each upper triangle row by row.
PolynomialSystem coefficient_system(const DiagonalMatrix& d1, const std::vector<MatrixTemplate>& templates,
                                    const Polynomial& target, const std::vector<Exponents>& monomials);

}  // namespace detrep
