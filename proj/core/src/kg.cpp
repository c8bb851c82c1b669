#include "mha/kg.hpp"

namespace mha::kg {

namespace {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

GroupElem IntegerGroup::sample(std::mt19937_64& rng) const { return {draw(rng, -5, 5)}; }

GroupElem IntegerPairGroup::sample(std::mt19937_64& rng) const {
  return {draw(rng, -5, 5), draw(rng, -5, 5)};
}

GroupElem InfiniteDihedralGroup::sample(std::mt19937_64& rng) const {
  return {draw(rng, -5, 5), draw(rng, 0, 1)};
}

CayleyGroup::CayleyGroup(std::vector<std::vector<std::size_t>> table, std::string name)
    : table_(std::move(table)), identity_(0), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("Cayley table is not square");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("Cayley table entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (table_[e][i] != i || table_[i][e] != i) ok = false;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("Cayley table has no identity element");
}

GroupElem CayleyGroup::op(const GroupElem& x, const GroupElem& y) const {
  return {static_cast<long long>(table_[x[0]][y[0]])};
}

GroupElem CayleyGroup::inv(const GroupElem& x) const {
  for (std::size_t j = 0; j < table_.size(); ++j)
    if (table_[x[0]][j] == identity_) return {static_cast<long long>(j)};
  throw std::invalid_argument("Cayley table element has no inverse");
}

GroupElem CayleyGroup::sample(std::mt19937_64& rng) const {
  return {draw(rng, 0, static_cast<long long>(table_.size()) - 1)};
}

void SparseFunction::set(const GroupElem& g, const Scalar& v) {
  if (v == 0)
    values.erase(g);
  else
    values[g] = v;
}

Scalar SparseFunction::at(const GroupElem& g) const {
  auto it = values.find(g);
  return it == values.end() ? Scalar(0) : it->second;
}

SparseFunction delta_at(const GroupElem& g) {
  SparseFunction f;
  f.values[g] = 1;
  return f;
}

SparseFunction pointwise(const SparseFunction& a, const SparseFunction& b) {
  SparseFunction r;
  for (const auto& [g, v] : a.values) {
    Scalar w = b.at(g);
    if (w != 0) r.values[g] = v * w;
  }
  return r;
}

SparseFunction scale(const SparseFunction& f, const Scalar& c) {
  SparseFunction r;
  if (c == 0) return r;
  for (const auto& [g, v] : f.values) r.values[g] = v * c;
  return r;
}

SparseTensor slice(const Group& grp, GaloisKind kind, const SparseFunction& a,
                   const SparseFunction& b) {
  SparseTensor t;
  auto add = [&t](GroupElem g, GroupElem h, Scalar v) {
    if (v == 0) return;
    auto key = std::make_pair(std::move(g), std::move(h));
    auto it = t.find(key);
    if (it == t.end())
      t.emplace(std::move(key), std::move(v));
    else {
      it->second += v;
      if (it->second == 0) t.erase(it);
    }
  };
  switch (kind) {
    case GaloisKind::T1:  // a(g.h) b(h): g = s.h^-1 for s in supp(a)
      for (const auto& [h, bv] : b.values)
        for (const auto& [s, av] : a.values) add(grp.op(s, grp.inv(h)), h, av * bv);
      break;
    case GaloisKind::T2:  // a(g) b(g.h): h = g^-1.t for t in supp(b)
      for (const auto& [g, av] : a.values)
        for (const auto& [t2, bv] : b.values) add(g, grp.op(grp.inv(g), t2), av * bv);
      break;
    case GaloisKind::T1Prime:  // a(g.h) b(g): h = g^-1.s
      for (const auto& [g, bv] : b.values)
        for (const auto& [s, av] : a.values) add(g, grp.op(grp.inv(g), s), av * bv);
      break;
    case GaloisKind::T2Prime:  // a(h) b(g.h): g = t.h^-1
      for (const auto& [h, av] : a.values)
        for (const auto& [t2, bv] : b.values) add(grp.op(t2, grp.inv(h)), h, av * bv);
      break;
  }
  return t;
}

Scalar integral(const SparseFunction& f) {
  Scalar s = 0;
  for (const auto& [g, v] : f.values) s += v;
  return s;
}

Scalar counit(const Group& grp, const SparseFunction& f) {
  return f.at(grp.identity());
}

SparseFunction antipode(const Group& grp, const SparseFunction& f) {
  SparseFunction r;
  for (const auto& [g, v] : f.values) r.values[grp.inv(g)] = v;
  return r;
}

SparseFunction contract_second(const SparseTensor& t) {
  SparseFunction r;
  for (const auto& [key, v] : t) {
    auto it = r.values.find(key.first);
    if (it == r.values.end())
      r.values[key.first] = v;
    else {
      it->second += v;
      if (it->second == 0) r.values.erase(it);
    }
  }
  return r;
}

SparseFunction contract_first(const SparseTensor& t) {
  SparseFunction r;
  for (const auto& [key, v] : t) {
    auto it = r.values.find(key.second);
    if (it == r.values.end())
      r.values[key.second] = v;
    else {
      it->second += v;
      if (it->second == 0) r.values.erase(it);
    }
  }
  return r;
}

CrosscheckReport engine_crosscheck(const Group& grp, const SparseFunction& a,
                                   const SparseFunction& b) {
  CrosscheckReport rep;
  SparseFunction x = contract_second(slice(grp, GaloisKind::T1, a, b));
  rep.counit_ok = counit(grp, x) == integral(pointwise(a, b));
  SparseFunction lhs = antipode(grp, x);
  SparseFunction rhs = contract_second(slice(grp, GaloisKind::T2Prime, a, b));
  rep.antipode_ok = lhs == rhs;
  return rep;
}

namespace {

SparseFunction random_function(const Group& grp, std::mt19937_64& rng) {
  SparseFunction f;
  int support = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < support; ++i) {
    long long num = draw(rng, -9, 9);
    if (num == 0) num = 1;
    long long den = draw(rng, 1, 4);
    Scalar v(static_cast<long>(num), static_cast<long>(den));
    v.canonicalize();
    f.set(grp.sample(rng), v);  // duplicates overwrite
  }
  if (f.values.empty()) f = delta_at(grp.identity());
  return f;
}

}  // namespace

SuiteReport run_suite(const Group& grp, std::uint64_t seed, int samples) {
  SuiteReport rep;
  rep.group = grp.name();
  rep.seed = seed;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  auto fail = [&rep](int i, const std::string& what) {
    ++rep.failures;
    rep.failed_checks.push_back("sample " + std::to_string(i) + ": " + what);
  };
  for (int i = 0; i < samples; ++i) {
    SparseFunction a = random_function(grp, rng);
    SparseFunction b = random_function(grp, rng);

    // All four slices are finitely supported by construction; verify the
    // tensor values against the defining formulas pointwise.
    for (GaloisKind kind : {GaloisKind::T1, GaloisKind::T2, GaloisKind::T1Prime,
                            GaloisKind::T2Prime}) {
      SparseTensor t = slice(grp, kind, a, b);
      bool ok = true;
      for (const auto& [key, v] : t) {
        const GroupElem& g = key.first;
        const GroupElem& h = key.second;
        GroupElem gh = grp.op(g, h);
        Scalar expect;
        switch (kind) {
          case GaloisKind::T1: expect = a.at(gh) * b.at(h); break;
          case GaloisKind::T2: expect = a.at(g) * b.at(gh); break;
          case GaloisKind::T1Prime: expect = a.at(gh) * b.at(g); break;
          case GaloisKind::T2Prime: expect = a.at(h) * b.at(gh); break;
        }
        if (v != expect) ok = false;
      }
      if (!ok) fail(i, "slice values disagree with the closed form");
    }

    // Invariance of the counting functional.
    if (contract_second(slice(grp, GaloisKind::T2, b, a)) != scale(b, integral(a)))
      fail(i, "left invariance of the counting functional");
    if (contract_first(slice(grp, GaloisKind::T1, a, b)) != scale(b, integral(a)))
      fail(i, "right invariance of the counting functional");

    // Counit and antipode algebra laws.
    if (counit(grp, pointwise(a, b)) != counit(grp, a) * counit(grp, b))
      fail(i, "counit multiplicativity");
    if (antipode(grp, antipode(grp, a)) != a) fail(i, "antipode involution");
    if (antipode(grp, pointwise(a, b)) != pointwise(antipode(grp, b), antipode(grp, a)))
      fail(i, "antipode antimultiplicativity");

    // Convolution identities in sliced form:
    //   m(id (x) S)(Delta(a)(b (x) 1)) = eps(a) b
    //   m(S (x) id)((1 (x) b)Delta(a)) = eps(a) b
    {
      SparseTensor t = slice(grp, GaloisKind::T1Prime, a, b);
      SparseFunction lhs;
      for (const auto& [key, v] : t)
        if (key.second == grp.inv(key.first)) lhs.set(key.first, lhs.at(key.first) + v);
      if (lhs != scale(b, counit(grp, a))) fail(i, "m(id (x) S) convolution identity");
    }
    {
      SparseTensor t = slice(grp, GaloisKind::T2Prime, b, a);
      SparseFunction lhs;
      for (const auto& [key, v] : t)
        if (key.first == grp.inv(key.second)) lhs.set(key.second, lhs.at(key.second) + v);
      if (lhs != scale(b, counit(grp, a))) fail(i, "m(S (x) id) convolution identity");
    }

    CrosscheckReport cc = engine_crosscheck(grp, a, b);
    if (!cc.counit_ok) fail(i, "counit defining formula on slices");
    if (!cc.antipode_ok) fail(i, "antipode defining formula on slices");
  }
  return rep;
}

}  // namespace mha::kg
