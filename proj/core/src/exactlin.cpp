#include "mha/matrix.hpp"

#include <cctype>
#include <stdexcept>

namespace mha {

std::string to_string(const Scalar& s) {
  return s.get_str();
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  Scalar r{mpz_class(std::string(num)), mpz_class(std::string(den))};
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix apply dimension mismatch");
  Vec r(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * x[j];
  return r;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

namespace {

// Row reduction over the first `limit` columns of `m`, normalizing pivots
// to 1 and clearing above and below.
std::vector<std::size_t> reduce(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < limit && pr < m.rows(); ++c) {
    std::size_t sel = m.rows();
    for (std::size_t r = pr; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(sel, j));
    Scalar inv = 1 / m(pr, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(pr, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr || m(r, c) == 0) continue;
      Scalar f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

}  // namespace

Echelon echelon(Matrix m) {
  auto pivots = reduce(m, m.cols());
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  return echelon(m).pivot_cols.size();
}

std::vector<Vec> kernel(const Matrix& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix row_space_basis(const Matrix& m) {
  Echelon e = echelon(m);
  Matrix b(e.pivot_cols.size(), m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) b(r, j) = e.reduced(r, j);
  return b;
}

Solution solve(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  // Augment with rhs and the identity so every row carries the combination
  // of original rows it came from.
  Matrix aug(m.rows(), m.cols() + 1 + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
    aug(i, m.cols() + 1 + i) = 1;
  }
  auto pivots = reduce(aug, m.cols());
  Solution sol;
  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (aug(r, m.cols()) != 0) {
      sol.consistent = false;
      sol.witness.resize(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) sol.witness[i] = aug(r, m.cols() + 1 + i);
      return sol;
    }
  }
  sol.consistent = true;
  sol.value.assign(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.value[pivots[r]] = aug(r, m.cols());
  sol.unique = pivots.size() == m.cols();
  return sol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

}  // namespace mha
