#pragma once

#include <memory>

#include "mha/algebra.hpp"

namespace mha {

/// The four slice maps on A (x) A:
///   T1:  a(x)b -> Delta(a)(1(x)b)      T1': a(x)b -> Delta(a)(b(x)1)
///   T2:  a(x)b -> (a(x)1)Delta(b)      T2': a(x)b -> (1(x)a)Delta(b)
enum class GaloisKind { T1, T2, T1Prime, T2Prime };

enum class Side { Left, Right };

class NotCoassociativeError : public std::runtime_error {
 public:
  NotCoassociativeError(std::size_t a, std::size_t b, std::size_t c, const std::string& msg)
      : std::runtime_error(msg), a(a), b(b), c(c) {}
  std::size_t a, b, c;
};

class NotHomomorphismError : public std::runtime_error {
 public:
  NotHomomorphismError(std::size_t x, std::size_t y, const std::string& msg)
      : std::runtime_error(msg), x(x), y(y) {}
  std::size_t x, y;
};

/// Elements of A (x) A are dim x dim matrices, first leg on the rows; the
/// vectorized index is (i,j) -> i*dim + j everywhere.
Matrix simple_tensor(const Vec& a, const Vec& b);
Matrix tensor_multiply(const FinDimAlgebra& alg, const Matrix& s, const Matrix& t);
Vec tensor_to_vec(const Matrix& t);
Matrix vec_to_tensor(const Vec& v, std::size_t dim);

/// The comultiplication as an exact linear map A -> A (x) A.
/// delta has shape dim^2 x dim; column i holds the coordinates of
/// Delta(b_i) in the b_p (x) b_q basis.
class ComultMatrix {
 public:
  static ComultMatrix validate(const FinDimAlgebra& alg, Matrix delta,
                               bool require_homomorphism = true);

  const FinDimAlgebra& algebra() const { return *alg_; }
  const Matrix& delta() const { return delta_; }
  std::size_t dim() const { return alg_->dim(); }

  /// Delta(x) as a dim x dim tensor.
  Matrix delta_tensor(const Vec& x) const;
  /// Exact dim^2 x dim^2 matrix of the chosen slice map.
  Matrix galois(GaloisKind kind) const;
  /// sigma . Delta; revalidated, never assumed correct.
  ComultMatrix opposite() const;

 private:
  // Owns a copy of the algebra so the value can be moved and returned
  // freely; copies share it.
  ComultMatrix(const FinDimAlgebra& alg, Matrix delta, bool require_hom)
      : alg_(std::make_shared<FinDimAlgebra>(alg)),
        delta_(std::move(delta)),
        require_hom_(require_hom) {}
  std::shared_ptr<const FinDimAlgebra> alg_;
  Matrix delta_;
  bool require_hom_;
};

/// Leg of Delta(x), as a row-reduced basis (rows span the leg).
Matrix element_leg(const ComultMatrix& cm, Side side, const Vec& x);
/// Same leg computed from products on the other side (the regular-case
/// equality is a checked property, not an assumption).
Matrix element_leg_variant(const ComultMatrix& cm, Side side, const Vec& x);
/// Leg of the whole comultiplication.
Matrix comult_leg(const ComultMatrix& cm, Side side);
bool is_full(const ComultMatrix& cm);
std::string regularity_note(const ComultMatrix& cm);

}  // namespace mha
