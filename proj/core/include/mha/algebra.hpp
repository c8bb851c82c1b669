#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mha/matrix.hpp"

namespace mha {

class NonAssociativeError : public std::runtime_error {
 public:
  NonAssociativeError(std::size_t i, std::size_t j, std::size_t k, const std::string& msg)
      : std::runtime_error(msg), i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class DegenerateProductError : public std::runtime_error {
 public:
  DegenerateProductError(Vec witness, const std::string& msg)
      : std::runtime_error(msg), witness(std::move(witness)) {}
  Vec witness;
};

class BadUnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Element {
  Vec coords;
};

struct NondegeneracyResult {
  bool nondegenerate = false;
  Vec witness;        // nonzero annihilator when degenerate
  bool left_annihilator = false;
};

/// Finite-dimensional algebra presented by structure constants
/// sc(i,j,k) = coefficient of basis k in (basis i)*(basis j).
/// Construction goes through validate(), which checks associativity on all
/// basis triples, non-degeneracy of the product, and the declared unit.
class FinDimAlgebra {
 public:
  static constexpr std::size_t kMaxDim = 64;

  static FinDimAlgebra validate(std::vector<std::string> labels,
                                std::vector<Scalar> structure_constants,
                                std::optional<Vec> declared_unit = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }

  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x*y.
  Matrix left_mult(const Vec& x) const;
  /// Matrix of y -> y*x.
  Matrix right_mult(const Vec& x) const;
  Vec basis_vector(std::size_t i) const;

  const std::optional<Vec>& unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }

 private:
  FinDimAlgebra(std::size_t dim, std::vector<std::string> labels, std::vector<Scalar> sc,
                std::optional<Vec> unit)
      : dim_(dim), labels_(std::move(labels)), sc_(std::move(sc)), unit_(std::move(unit)) {}

  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> sc_;
  std::optional<Vec> unit_;
};

/// Solves u*b_i = b_i and b_i*u = b_i for all basis i; a unit is unique
/// when it exists.
std::optional<Vec> find_unit(std::size_t dim, const std::vector<Scalar>& structure_constants);
std::optional<Vec> find_unit(const FinDimAlgebra& alg);

NondegeneracyResult product_nondegenerate(const FinDimAlgebra& alg);

}  // namespace mha
