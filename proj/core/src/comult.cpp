#include "mha/comult.hpp"

namespace mha {

Matrix simple_tensor(const Vec& a, const Vec& b) {
  Matrix t(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) t(i, j) = a[i] * b[j];
  }
  return t;
}

Matrix tensor_multiply(const FinDimAlgebra& alg, const Matrix& s, const Matrix& t) {
  const std::size_t d = alg.dim();
  Matrix r(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      if (s(p, q) == 0) continue;
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
          if (t(u, v) == 0) continue;
          Scalar c = s(p, q) * t(u, v);
          for (std::size_t m = 0; m < d; ++m) {
            if (alg.sc(p, u, m) == 0) continue;
            for (std::size_t n = 0; n < d; ++n)
              if (alg.sc(q, v, n) != 0) r(m, n) += c * alg.sc(p, u, m) * alg.sc(q, v, n);
          }
        }
    }
  return r;
}

Vec tensor_to_vec(const Matrix& t) {
  Vec v(t.rows() * t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) v[i * t.cols() + j] = t(i, j);
  return v;
}

Matrix vec_to_tensor(const Vec& v, std::size_t dim) {
  Matrix t(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) t(i, j) = v[i * dim + j];
  return t;
}

Matrix ComultMatrix::delta_tensor(const Vec& x) const {
  const std::size_t d = dim();
  Matrix t(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        if (delta_(p * d + q, i) != 0) t(p, q) += x[i] * delta_(p * d + q, i);
  }
  return t;
}

namespace {

using Cube = std::vector<Scalar>;  // A (x) A (x) A, index (p*d + q)*d + r

Cube make_cube(std::size_t d) { return Cube(d * d * d, Scalar(0)); }

}  // namespace

ComultMatrix ComultMatrix::validate(const FinDimAlgebra& alg, Matrix delta,
                                    bool require_homomorphism) {
  const std::size_t d = alg.dim();
  if (delta.rows() != d * d || delta.cols() != d)
    throw std::invalid_argument("comultiplication matrix must have shape dim^2 x dim");
  ComultMatrix cm(alg, std::move(delta), require_homomorphism);
  const Matrix& D = cm.delta_;

  // Coassociativity, checked exhaustively on basis triples (a,b,c):
  //   (a(x)1(x)1)(Delta(x)id)(Delta(b)(1(x)c)) ==
  //   (id(x)Delta)((a(x)1)Delta(b))(1(x)1(x)c)
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t c = 0; c < d; ++c) {
      // t = Delta(b)(1(x)c)
      Matrix t(d, d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t u = 0; u < d; ++u)
            if (D(p * d + u, b) != 0 && alg.sc(u, c, q) != 0)
              t(p, q) += D(p * d + u, b) * alg.sc(u, c, q);
      // lhs3 = (Delta(x)id) t
      Cube lhs3 = make_cube(d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t r = 0; r < d; ++r) {
          if (t(p, r) == 0) continue;
          for (std::size_t pp = 0; pp < d; ++pp)
            for (std::size_t qq = 0; qq < d; ++qq)
              if (D(pp * d + qq, p) != 0)
                lhs3[(pp * d + qq) * d + r] += t(p, r) * D(pp * d + qq, p);
        }
      for (std::size_t a = 0; a < d; ++a) {
        // lhs = (a(x)1(x)1) lhs3
        Cube lhs = make_cube(d);
        for (std::size_t pp = 0; pp < d; ++pp)
          for (std::size_t qq = 0; qq < d; ++qq)
            for (std::size_t r = 0; r < d; ++r) {
              const Scalar& v = lhs3[(pp * d + qq) * d + r];
              if (v == 0) continue;
              for (std::size_t m = 0; m < d; ++m)
                if (alg.sc(a, pp, m) != 0) lhs[(m * d + qq) * d + r] += alg.sc(a, pp, m) * v;
            }
        // s = (a(x)1)Delta(b)
        Matrix s(d, d);
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q)
            for (std::size_t m = 0; m < d; ++m)
              if (alg.sc(a, p, m) != 0 && D(p * d + q, b) != 0)
                s(m, q) += alg.sc(a, p, m) * D(p * d + q, b);
        // rhs = (id(x)Delta) s, then multiply third leg by c
        Cube rhs = make_cube(d);
        for (std::size_t m = 0; m < d; ++m)
          for (std::size_t q = 0; q < d; ++q) {
            if (s(m, q) == 0) continue;
            for (std::size_t u = 0; u < d; ++u)
              for (std::size_t v = 0; v < d; ++v) {
                if (D(u * d + v, q) == 0) continue;
                Scalar c2 = s(m, q) * D(u * d + v, q);
                for (std::size_t r = 0; r < d; ++r)
                  if (alg.sc(v, c, r) != 0) rhs[(m * d + u) * d + r] += c2 * alg.sc(v, c, r);
              }
          }
        if (lhs != rhs)
          throw NotCoassociativeError(a, b, c,
                                      "coassociativity fails at basis triple (" +
                                          alg.labels()[a] + ", " + alg.labels()[b] + ", " +
                                          alg.labels()[c] + ")");
      }
    }
  }

  if (require_homomorphism) {
    // Delta(xy) = Delta(x)Delta(y) on basis pairs; bilinearity covers the rest.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec prod = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
        Matrix lhs = cm.delta_tensor(prod);
        Matrix rhs = tensor_multiply(alg, cm.delta_tensor(alg.basis_vector(i)),
                                     cm.delta_tensor(alg.basis_vector(j)));
        if (!(lhs == rhs))
          throw NotHomomorphismError(
              i, j,
              "comultiplication is not an algebra homomorphism at basis pair (" +
                  alg.labels()[i] + ", " + alg.labels()[j] + ")");
      }
    if (alg.is_unital()) {
      Matrix du = cm.delta_tensor(*alg.unit());
      if (!(du == simple_tensor(*alg.unit(), *alg.unit())))
        throw NotHomomorphismError(0, 0, "comultiplication does not map the unit to unit(x)unit");
    }
  }
  return cm;
}

Matrix ComultMatrix::galois(GaloisKind kind) const {
  const std::size_t d = dim();
  const Matrix& D = delta_;
  const FinDimAlgebra& alg = *alg_;
  Matrix g(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t col = i * d + j;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t m = 0; m < d; ++m) {
            switch (kind) {
              case GaloisKind::T1:  // Delta(b_i)(1 (x) b_j)
                if (D(p * d + q, i) != 0 && alg.sc(q, j, m) != 0)
                  g(p * d + m, col) += D(p * d + q, i) * alg.sc(q, j, m);
                break;
              case GaloisKind::T2:  // (b_i (x) 1)Delta(b_j)
                if (alg.sc(i, p, m) != 0 && D(p * d + q, j) != 0)
                  g(m * d + q, col) += alg.sc(i, p, m) * D(p * d + q, j);
                break;
              case GaloisKind::T1Prime:  // Delta(b_i)(b_j (x) 1)
                if (D(p * d + q, i) != 0 && alg.sc(p, j, m) != 0)
                  g(m * d + q, col) += D(p * d + q, i) * alg.sc(p, j, m);
                break;
              case GaloisKind::T2Prime:  // (1 (x) b_i)Delta(b_j)
                if (D(p * d + q, j) != 0 && alg.sc(i, q, m) != 0)
                  g(p * d + m, col) += D(p * d + q, j) * alg.sc(i, q, m);
                break;
            }
          }
    }
  return g;
}

ComultMatrix ComultMatrix::opposite() const {
  const std::size_t d = dim();
  Matrix flipped(d * d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t i = 0; i < d; ++i) flipped(p * d + q, i) = delta_(q * d + p, i);
  return validate(*alg_, std::move(flipped), require_hom_);
}

namespace {

// Collects slice vectors of the given tensor into rows.
void collect_slices(const Matrix& t, Side side, std::vector<Vec>& rows) {
  const std::size_t d = t.rows();
  for (std::size_t k = 0; k < d; ++k) {
    Vec v(d);
    for (std::size_t p = 0; p < d; ++p) v[p] = side == Side::Left ? t(p, k) : t(k, p);
    if (!is_zero(v)) rows.push_back(std::move(v));
  }
}

Matrix leg_from(const ComultMatrix& cm, Side side, const Vec& x, bool variant) {
  const FinDimAlgebra& alg = cm.algebra();
  const std::size_t d = alg.dim();
  Matrix dx = cm.delta_tensor(x);
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < d; ++j) {
    Matrix t(d, d);
    if (side == Side::Left && !variant) {
      // Delta(x)(1 (x) b_j), slices on the second leg
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t m = 0; m < d; ++m)
            if (dx(p, q) != 0 && alg.sc(q, j, m) != 0) t(p, m) += dx(p, q) * alg.sc(q, j, m);
    } else if (side == Side::Left && variant) {
      // (1 (x) b_j)Delta(x)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t m = 0; m < d; ++m)
            if (dx(p, q) != 0 && alg.sc(j, q, m) != 0) t(p, m) += dx(p, q) * alg.sc(j, q, m);
    } else if (side == Side::Right && !variant) {
      // (b_j (x) 1)Delta(x), slices on the first leg
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t m = 0; m < d; ++m)
            if (dx(p, q) != 0 && alg.sc(j, p, m) != 0) t(m, q) += dx(p, q) * alg.sc(j, p, m);
    } else {
      // Delta(x)(b_j (x) 1)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t m = 0; m < d; ++m)
            if (dx(p, q) != 0 && alg.sc(p, j, m) != 0) t(m, q) += dx(p, q) * alg.sc(p, j, m);
    }
    collect_slices(t, side, rows);
  }
  if (rows.empty()) return Matrix(0, d);
  return row_space_basis(Matrix::from_rows(rows, d));
}

}  // namespace

Matrix element_leg(const ComultMatrix& cm, Side side, const Vec& x) {
  return leg_from(cm, side, x, false);
}

Matrix element_leg_variant(const ComultMatrix& cm, Side side, const Vec& x) {
  return leg_from(cm, side, x, true);
}

Matrix comult_leg(const ComultMatrix& cm, Side side) {
  const std::size_t d = cm.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix b = element_leg(cm, side, cm.algebra().basis_vector(i));
    for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
  }
  if (rows.empty()) return Matrix(0, d);
  return row_space_basis(Matrix::from_rows(rows, d));
}

bool is_full(const ComultMatrix& cm) {
  return comult_leg(cm, Side::Left).rows() == cm.dim() &&
         comult_leg(cm, Side::Right).rows() == cm.dim();
}

std::string regularity_note(const ComultMatrix& cm) {
  if (cm.algebra().is_unital()) return "regular: automatic (unital algebra)";
  return "regular: not established (non-unital input)";
}

}  // namespace mha
