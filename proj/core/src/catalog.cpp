#include "mha/catalog.hpp"

#include <array>

namespace mha::catalog {

namespace {

std::size_t inverse_in(const std::vector<std::vector<std::size_t>>& t, std::size_t g,
                       std::size_t e) {
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t[g][j] == e) return j;
  throw std::invalid_argument("Cayley table element has no inverse");
}

std::size_t identity_of(const std::vector<std::vector<std::size_t>>& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[e][i] != i || t[i][e] != i) ok = false;
    if (ok) return e;
  }
  throw std::invalid_argument("Cayley table has no identity element");
}

}  // namespace

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<std::size_t>> s3_table() {
  // Permutations of {0,1,2}: e, (01), (02), (12), (012), (021).
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                    {1, 0, 2},
                                                    {2, 1, 0},
                                                    {0, 2, 1},
                                                    {1, 2, 0},
                                                    {2, 0, 1}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (std::size_t k = 0; k < 6; ++k)
      if (perms[k] == p) return k;
    throw std::logic_error("not a permutation of {0,1,2}");
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      // (p . q)(k) = p(q(k))
      std::array<int, 3> comp{};
      for (int k = 0; k < 3; ++k) comp[k] = perms[i][perms[j][k]];
      t[i][j] = index_of(comp);
    }
  return t;
}

CatalogEntry build_group_algebra(const std::string& name,
                                 const std::vector<std::vector<std::size_t>>& cayley,
                                 const std::vector<std::string>& labels) {
  const std::size_t n = cayley.size();
  if (labels.size() != n) throw std::invalid_argument("label count does not match table size");
  const std::size_t e = identity_of(cayley);
  std::vector<Scalar> sc(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sc[(i * n + j) * n + cayley[i][j]] = 1;
  FinDimAlgebra alg = FinDimAlgebra::validate(labels, std::move(sc));

  Matrix delta(n * n, n);
  for (std::size_t i = 0; i < n; ++i) delta(i * n + i, i) = 1;
  ComultMatrix cm = ComultMatrix::validate(alg, std::move(delta));

  ExpectedData exp;
  exp.verdict = Verdict::Kind::Hopf;
  exp.counit = Vec(n, Scalar(1));
  Matrix s(n, n);
  for (std::size_t g = 0; g < n; ++g) s(inverse_in(cayley, g, e), g) = 1;
  exp.antipode = s;
  Vec dual_e(n, Scalar(0));
  dual_e[e] = 1;
  exp.left_integral = dual_e;
  exp.right_integral = dual_e;
  Vec sum_all(n, Scalar(1));
  exp.left_cointegral = sum_all;
  exp.right_cointegral = sum_all;
  return CatalogEntry{name, std::move(alg), std::move(cm), std::move(exp)};
}

CatalogEntry build_function_algebra(const std::string& name,
                                    const std::vector<std::vector<std::size_t>>& cayley,
                                    const std::vector<std::string>& labels) {
  const std::size_t n = cayley.size();
  if (labels.size() != n) throw std::invalid_argument("label count does not match table size");
  const std::size_t e = identity_of(cayley);
  std::vector<Scalar> sc(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) sc[(i * n + i) * n + i] = 1;
  FinDimAlgebra alg = FinDimAlgebra::validate(labels, std::move(sc));

  // Delta(d_g) = sum over h.k = g of d_h (x) d_k.
  Matrix delta(n * n, n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) delta(h * n + k, cayley[h][k]) = 1;
  ComultMatrix cm = ComultMatrix::validate(alg, std::move(delta));

  ExpectedData exp;
  exp.verdict = Verdict::Kind::Hopf;
  Vec eval_e(n, Scalar(0));
  eval_e[e] = 1;
  exp.counit = eval_e;
  Matrix s(n, n);
  for (std::size_t g = 0; g < n; ++g) s(inverse_in(cayley, g, e), g) = 1;
  exp.antipode = s;
  Vec counting(n, Scalar(1));
  exp.left_integral = counting;
  exp.right_integral = counting;
  exp.left_cointegral = eval_e;
  exp.right_cointegral = eval_e;
  return CatalogEntry{name, std::move(alg), std::move(cm), std::move(exp)};
}

CatalogEntry build_sweedler_h4() {
  // Basis (1, g, x, gx); g^2 = 1, x^2 = 0, xg = -gx.
  const std::size_t n = 4;
  std::vector<Scalar> sc(n * n * n, Scalar(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    sc[(i * n + j) * n + k] = v;
  };
  for (std::size_t j = 0; j < n; ++j) set(0, j, j, 1);  // 1 * b_j
  set(1, 0, 1, 1);  // g*1 = g
  set(1, 1, 0, 1);  // g*g = 1
  set(1, 2, 3, 1);  // g*x = gx
  set(1, 3, 2, 1);  // g*gx = x
  set(2, 0, 2, 1);  // x*1 = x
  set(2, 1, 3, -1); // x*g = -gx
  set(3, 0, 3, 1);  // gx*1 = gx
  set(3, 1, 2, -1); // gx*g = -x
  FinDimAlgebra alg = FinDimAlgebra::validate({"1", "g", "x", "gx"}, std::move(sc));

  Matrix delta(n * n, n);
  delta(0 * n + 0, 0) = 1;  // Delta(1) = 1 (x) 1
  delta(1 * n + 1, 1) = 1;  // Delta(g) = g (x) g
  delta(2 * n + 0, 2) = 1;  // Delta(x) = x (x) 1 + g (x) x
  delta(1 * n + 2, 2) = 1;
  delta(3 * n + 1, 3) = 1;  // Delta(gx) = gx (x) g + 1 (x) gx
  delta(0 * n + 3, 3) = 1;
  ComultMatrix cm = ComultMatrix::validate(alg, std::move(delta));

  ExpectedData exp;
  exp.verdict = Verdict::Kind::Hopf;
  exp.counit = Vec{1, 1, 0, 0};
  Matrix s(n, n);
  s(0, 0) = 1;
  s(1, 1) = 1;
  s(3, 2) = -1;  // S(x) = -gx
  s(2, 3) = 1;   // S(gx) = x
  exp.antipode = s;
  exp.left_integral = Vec{0, 0, 0, 1};   // dual of gx
  exp.right_integral = Vec{0, 0, 1, 0};  // dual of x
  exp.left_cointegral = Vec{0, 0, 1, 1};   // x + gx
  exp.right_cointegral = Vec{0, 0, 1, -1}; // x - gx
  return CatalogEntry{"H4", std::move(alg), std::move(cm), std::move(exp)};
}

CatalogEntry build_monoid_bialgebra() {
  const std::size_t n = 2;
  std::vector<Scalar> sc(n * n * n, Scalar(0));
  sc[(0 * n + 0) * n + 0] = 1;  // 1*1 = 1
  sc[(0 * n + 1) * n + 1] = 1;  // 1*s = s
  sc[(1 * n + 0) * n + 1] = 1;  // s*1 = s
  sc[(1 * n + 1) * n + 1] = 1;  // s*s = s
  FinDimAlgebra alg = FinDimAlgebra::validate({"1", "s"}, std::move(sc));
  Matrix delta(n * n, n);
  delta(0, 0) = 1;          // Delta(1) = 1 (x) 1
  delta(1 * n + 1, 1) = 1;  // Delta(s) = s (x) s
  ComultMatrix cm = ComultMatrix::validate(alg, std::move(delta));
  ExpectedData exp;
  exp.verdict = Verdict::Kind::NotHopf;
  exp.left_integral = Vec{1, 0};    // dual of 1, not faithful
  exp.left_cointegral = Vec{0, 1};  // s, not faithful
  return CatalogEntry{"monoid", std::move(alg), std::move(cm), std::move(exp)};
}

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  out.push_back(build_group_algebra("QC2", cyclic_table(2), {"e", "s"}));
  out.push_back(build_group_algebra("QC3", cyclic_table(3), {"e", "c", "c2"}));
  out.push_back(build_group_algebra(
      "QS3", s3_table(), {"e", "t01", "t02", "t12", "c012", "c021"}));
  out.push_back(build_function_algebra("FC2", cyclic_table(2), {"de", "ds"}));
  out.push_back(build_function_algebra(
      "FS3", s3_table(), {"de", "dt01", "dt02", "dt12", "dc012", "dc021"}));
  out.push_back(build_sweedler_h4());
  out.push_back(build_monoid_bialgebra());
  return out;
}

}  // namespace mha::catalog
