#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <memory>
#include <utility>

#include "mha/comult.hpp"

namespace mha::kg {

/// Group elements are small integer tuples; the encoding doubles as the
/// canonical ordering for deterministic iteration.
using GroupElem = std::vector<long long>;

class Group {
 public:
  virtual ~Group() = default;
  virtual std::string name() const = 0;
  virtual GroupElem identity() const = 0;
  virtual GroupElem op(const GroupElem& x, const GroupElem& y) const = 0;
  virtual GroupElem inv(const GroupElem& x) const = 0;
  /// Draws an element from a small deterministic window, for sampled checks.
  virtual GroupElem sample(std::mt19937_64& rng) const = 0;
};

/// The integers under addition.
class IntegerGroup final : public Group {
 public:
  std::string name() const override { return "z"; }
  GroupElem identity() const override { return {0}; }
  GroupElem op(const GroupElem& x, const GroupElem& y) const override { return {x[0] + y[0]}; }
  GroupElem inv(const GroupElem& x) const override { return {-x[0]}; }
  GroupElem sample(std::mt19937_64& rng) const override;
};

class IntegerPairGroup final : public Group {
 public:
  std::string name() const override { return "z2"; }
  GroupElem identity() const override { return {0, 0}; }
  GroupElem op(const GroupElem& x, const GroupElem& y) const override {
    return {x[0] + y[0], x[1] + y[1]};
  }
  GroupElem inv(const GroupElem& x) const override { return {-x[0], -x[1]}; }
  GroupElem sample(std::mt19937_64& rng) const override;
};

/// Infinite dihedral group: elements (t, s) with s in {0, 1},
/// (t1,s1)(t2,s2) = (t1 + (-1)^s1 t2, s1 xor s2).
class InfiniteDihedralGroup final : public Group {
 public:
  std::string name() const override { return "dihedral"; }
  GroupElem identity() const override { return {0, 0}; }
  GroupElem op(const GroupElem& x, const GroupElem& y) const override {
    return {x[0] + (x[1] ? -y[0] : y[0]), (x[1] + y[1]) % 2};
  }
  GroupElem inv(const GroupElem& x) const override {
    return {x[1] ? x[0] : -x[0], x[1]};
  }
  GroupElem sample(std::mt19937_64& rng) const override;
};

/// Finite group given by a Cayley table; bridges to the finite-dimensional
/// path.
class CayleyGroup final : public Group {
 public:
  explicit CayleyGroup(std::vector<std::vector<std::size_t>> table, std::string name = "cayley");
  std::string name() const override { return name_; }
  GroupElem identity() const override { return {static_cast<long long>(identity_)}; }
  GroupElem op(const GroupElem& x, const GroupElem& y) const override;
  GroupElem inv(const GroupElem& x) const override;
  GroupElem sample(std::mt19937_64& rng) const override;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::string name_;
};

/// Finitely supported scalar-valued function on the group; no zero values
/// are ever stored.
struct SparseFunction {
  std::map<GroupElem, Scalar> values;

  void set(const GroupElem& g, const Scalar& v);
  Scalar at(const GroupElem& g) const;
  bool operator==(const SparseFunction& other) const { return values == other.values; }
};

SparseFunction delta_at(const GroupElem& g);
/// Pointwise product (the algebra structure of the function algebra).
SparseFunction pointwise(const SparseFunction& a, const SparseFunction& b);
SparseFunction scale(const SparseFunction& f, const Scalar& c);

using SparseTensor = std::map<std::pair<GroupElem, GroupElem>, Scalar>;

/// The four slice products, all landing in finitely supported tensors:
///   T1 : value a(g.h) b(h) at (g,h)      T1': value a(g.h) b(g)
///   T2 : value a(g) b(g.h)               T2': value a(h) b(g.h)
SparseTensor slice(const Group& grp, GaloisKind kind, const SparseFunction& a,
                   const SparseFunction& b);

/// The counting functional, left and right invariant on this family.
Scalar integral(const SparseFunction& f);
Scalar counit(const Group& grp, const SparseFunction& f);
SparseFunction antipode(const Group& grp, const SparseFunction& f);

/// (id (x) integral) applied to a finite tensor: g -> sum_h t(g, h).
SparseFunction contract_second(const SparseTensor& t);
SparseFunction contract_first(const SparseTensor& t);

struct CrosscheckReport {
  bool counit_ok = false;
  bool antipode_ok = false;
};

/// Checks the defining formulas of the counit and antipode verbatim on the
/// slices: eps(x) = integral(a*b) and S(x) = (id (x) integral) of the T2'
/// slice, where x = (id (x) integral) of the T1 slice.
CrosscheckReport engine_crosscheck(const Group& grp, const SparseFunction& a,
                                   const SparseFunction& b);

struct SuiteReport {
  std::string group;
  std::uint64_t seed = 0;
  int samples = 0;
  int failures = 0;
  std::vector<std::string> failed_checks;
  bool all_ok() const { return failures == 0; }
};

/// Deterministic sampled verification: finite slice supports, invariance
/// of the counting functional, counit/antipode algebra laws in sliced
/// form, and the engine crosscheck, all with exactly zero residual.
SuiteReport run_suite(const Group& grp, std::uint64_t seed, int samples);

}  // namespace mha::kg
