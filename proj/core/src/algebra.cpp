#include "mha/algebra.hpp"

namespace mha {

Vec FinDimAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec r(dim_, Scalar(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sc(i, j, k) != 0) r[k] += c * sc(i, j, k);
    }
  }
  return r;
}

Matrix FinDimAlgebra::left_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = multiply(x, basis_vector(j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix FinDimAlgebra::right_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = multiply(basis_vector(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

Vec FinDimAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim_, Scalar(0));
  v[i] = 1;
  return v;
}

std::optional<Vec> find_unit(std::size_t dim, const std::vector<Scalar>& sc) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return sc[(i * dim + j) * dim + k];
  };
  // Rows: u*b_i = b_i and b_i*u = b_i, expanded per output coordinate k.
  Matrix m(2 * dim * dim, dim);
  Vec rhs(2 * dim * dim, Scalar(0));
  std::size_t row = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k, ++row) {
      for (std::size_t p = 0; p < dim; ++p) m(row, p) = at(p, i, k);
      rhs[row] = (i == k) ? 1 : 0;
    }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k, ++row) {
      for (std::size_t p = 0; p < dim; ++p) m(row, p) = at(i, p, k);
      rhs[row] = (i == k) ? 1 : 0;
    }
  Solution s = solve(m, rhs);
  if (!s.consistent) return std::nullopt;
  return s.value;
}

std::optional<Vec> find_unit(const FinDimAlgebra& alg) {
  return alg.unit();
}

NondegeneracyResult product_nondegenerate(const FinDimAlgebra& alg) {
  const std::size_t dim = alg.dim();
  // x is a left annihilator iff x*b_j = 0 for all j.
  Matrix left(dim * dim, dim);
  Matrix right(dim * dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t p = 0; p < dim; ++p) {
        left(j * dim + k, p) = alg.sc(p, j, k);
        right(j * dim + k, p) = alg.sc(j, p, k);
      }
  auto lk = kernel(left);
  if (!lk.empty()) return {false, lk.front(), true};
  auto rk = kernel(right);
  if (!rk.empty()) return {false, rk.front(), false};
  return {true, {}, false};
}

FinDimAlgebra FinDimAlgebra::validate(std::vector<std::string> labels,
                                      std::vector<Scalar> structure_constants,
                                      std::optional<Vec> declared_unit) {
  const std::size_t dim = labels.size();
  if (dim == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (dim > kMaxDim) throw std::invalid_argument("algebra dimension exceeds the supported cap");
  if (structure_constants.size() != dim * dim * dim)
    throw std::invalid_argument("structure constant cube has wrong size");
  if (declared_unit && declared_unit->size() != dim)
    throw BadUnitError("declared unit has wrong length");

  FinDimAlgebra alg(dim, std::move(labels), std::move(structure_constants), std::nullopt);

  // Associativity on all basis triples.
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec ij = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
      for (std::size_t k = 0; k < dim; ++k) {
        Vec jk = alg.multiply(alg.basis_vector(j), alg.basis_vector(k));
        Vec lhs = alg.multiply(ij, alg.basis_vector(k));
        Vec rhs = alg.multiply(alg.basis_vector(i), jk);
        if (lhs != rhs)
          throw NonAssociativeError(i, j, k,
                                    "associativity fails at basis triple (" + alg.labels()[i] +
                                        ", " + alg.labels()[j] + ", " + alg.labels()[k] + ")");
      }
    }

  std::optional<Vec> unit = find_unit(dim, alg.sc_);
  if (declared_unit) {
    if (!unit || *unit != *declared_unit)
      throw BadUnitError("declared unit is not a two-sided unit of the algebra");
  }
  alg.unit_ = unit;

  NondegeneracyResult nd = product_nondegenerate(alg);
  if (!nd.nondegenerate)
    throw DegenerateProductError(nd.witness, "product is degenerate: nonzero annihilator exists");

  return alg;
}

}  // namespace mha
