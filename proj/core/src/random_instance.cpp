#include "detrep/random_instance.hpp"

#include <random>
#include <stdexcept>

#include "detrep/gmd.hpp"

namespace detrep {

namespace {

Matrix random_symmetric(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) m(i, j) = m(j, i) = uni(rng);
  return m;
}

}  // namespace

RandomInstance random_instance(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw std::invalid_argument("random instance needs d >= 1 and n >= 1");
  std::mt19937_64 rng(seed);

  EigenDecomposition e;
  while (true) {
    e = sym_eigen(SymmetricMatrix::from_dense(random_symmetric(d, rng)));
    bool separated = true;
    for (int i = 0; i + 1 < d; ++i)
      if (e.values[static_cast<std::size_t>(i)] - e.values[static_cast<std::size_t>(i + 1)] < kRandomEigenGap)
        separated = false;
    if (separated) break;
  }

  DiagonalMatrix d1{e.values};
  std::vector<SymmetricMatrix> a;
  for (int k = 1; k < n; ++k) {
    const Matrix b = e.vectors.transpose() * random_symmetric(d, rng) * e.vectors;
    a.push_back(SymmetricMatrix::from_dense(b, 1e-9));
  }
  Polynomial f = expand_det(d1, a);
  MSDR rep = make_verified(f, std::move(d1), std::move(a), 1e-8);
  return {std::move(f), std::move(rep)};
}

}  // namespace detrep
