#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/subset.hpp"

namespace ringlab {

/// Element index into a ring's tables.
using Elem = int;

/// Resource limits for constructions and enumerations.
struct Caps {
  int max_order = 512;
  long max_ideals = 20000;
  long max_subrings = 50000;
};

inline constexpr int kDefaultOrderCap = 512;
inline constexpr long kDefaultIdealCap = 20000;
inline constexpr long kDefaultSubringCap = 50000;

/// Bad input: malformed tables, violated preconditions, unparsable specs.
class ring_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring axiom failed; carries the axiom name and a witness element tuple.
class validation_error : public ring_error {
 public:
  validation_error(std::string axiom, std::vector<int> witness, const std::string& msg)
      : ring_error(msg), axiom_(std::move(axiom)), witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<int> witness_;
};

/// An operation would exceed a configured resource cap.
class cap_error : public std::runtime_error {
 public:
  cap_error(std::string resource, long needed, long limit)
      : std::runtime_error(resource + " cap " + std::to_string(limit) + " exceeded" +
                           (needed >= 0 ? " (needs " + std::to_string(needed) + ")" : "")),
        resource_(std::move(resource)),
        needed_(needed),
        limit_(limit) {}
  const std::string& resource() const { return resource_; }
  long needed() const { return needed_; }
  long limit() const { return limit_; }

 private:
  std::string resource_;
  long needed_;
  long limit_;
};

/// A finite unital ring given by explicit operation tables over element
/// indices 0..n-1. Immutable after construction; all queries are pure.
class FiniteRing {
 public:
  FiniteRing() = default;

  /// Wraps tables that are already known to satisfy the ring axioms.
  /// All builders in this library go through here; externally supplied
  /// tables must go through validate_tables instead.
  static FiniteRing unchecked(int order, std::vector<std::uint16_t> add,
                              std::vector<std::uint16_t> mul, Elem zero, Elem one,
                              std::string label) {
    FiniteRing r;
    r.order_ = order;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.one_ = one;
    r.label_ = std::move(label);
    r.neg_.resize(static_cast<size_t>(order));
    for (Elem a = 0; a < order; ++a) {
      for (Elem b = 0; b < order; ++b) {
        if (r.add(a, b) == zero) {
          r.neg_[static_cast<size_t>(a)] = static_cast<std::uint16_t>(b);
          break;
        }
      }
    }
    return r;
  }

  int order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  Elem add(Elem a, Elem b) const {
    return add_[static_cast<size_t>(a) * static_cast<size_t>(order_) + static_cast<size_t>(b)];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_[static_cast<size_t>(a) * static_cast<size_t>(order_) + static_cast<size_t>(b)];
  }
  Elem neg(Elem a) const { return neg_[static_cast<size_t>(a)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  const std::vector<std::uint16_t>& add_table() const { return add_; }
  const std::vector<std::uint16_t>& mul_table() const { return mul_; }

  /// FNV-1a over order, identity and both tables; used as a cache key.
  std::uint64_t table_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(order_));
    mix(static_cast<std::uint64_t>(one_));
    for (auto v : add_) mix(v);
    for (auto v : mul_) mix(v);
    return h;
  }

 private:
  int order_ = 0;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::string label_;
};

/// Additive order of an element.
inline int additive_order(const FiniteRing& r, Elem a) {
  int k = 1;
  Elem x = a;
  while (x != r.zero()) {
    x = r.add(x, a);
    ++k;
  }
  return k;
}

/// Additive order of 1, i.e. char(R).
inline int characteristic(const FiniteRing& r) { return additive_order(r, r.one()); }

/// k·1 for any integer k (negative and large k reduced mod char).
inline Elem int_embed(const FiniteRing& r, long k) {
  long c = characteristic(r);
  long m = ((k % c) + c) % c;
  Elem x = r.zero();
  for (long i = 0; i < m; ++i) x = r.add(x, r.one());
  return x;
}

inline bool is_commutative(const FiniteRing& r) {
  int n = r.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

/// Elements commuting with everything; always a commutative unital subring.
inline Subset center(const FiniteRing& r) {
  int n = r.order();
  Subset c(n, SubsetRole::subring);
  for (Elem a = 0; a < n; ++a) {
    bool central = true;
    for (Elem b = 0; b < n && central; ++b)
      if (r.mul(a, b) != r.mul(b, a)) central = false;
    if (central) c.set(a);
  }
  return c;
}

/// Elements with x^k = 0 for some k.
inline Subset nilpotents(const FiniteRing& r) {
  int n = r.order();
  Subset out(n, SubsetRole::raw);
  for (Elem a = 0; a < n; ++a) {
    Elem p = a;
    for (int k = 0; k < n; ++k) {
      if (p == r.zero()) {
        out.set(a);
        break;
      }
      p = r.mul(p, a);
    }
  }
  return out;
}

/// Elements with a two-sided multiplicative inverse.
inline Subset units(const FiniteRing& r) {
  int n = r.order();
  Subset out(n, SubsetRole::raw);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        out.set(a);
        break;
      }
  return out;
}

inline bool is_field(const FiniteRing& r) {
  return is_commutative(r) && units(r).count() == r.order() - 1;
}

/// Builds a ring from raw tables, checking every axiom exhaustively.
/// The additive identity is located by scanning (loaded tables may place it
/// anywhere); each violated axiom is reported with a witness tuple.
inline FiniteRing validate_tables(int order, const std::vector<std::vector<int>>& add,
                                  const std::vector<std::vector<int>>& mul, int one,
                                  const std::string& label = "loaded") {
  if (order < 2)
    throw validation_error("order", {order},
                           "ring order must be at least 2 (identity must differ from zero)");
  auto check_shape = [&](const std::vector<std::vector<int>>& t, const char* name) {
    if (static_cast<int>(t.size()) != order)
      throw validation_error("table-shape", {static_cast<int>(t.size())},
                             std::string(name) + " table must have " + std::to_string(order) +
                                 " rows");
    for (int i = 0; i < order; ++i) {
      if (static_cast<int>(t[static_cast<size_t>(i)].size()) != order)
        throw validation_error("table-shape", {i},
                               std::string(name) + " table row " + std::to_string(i) +
                                   " has wrong length");
      for (int j = 0; j < order; ++j) {
        int v = t[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (v < 0 || v >= order)
          throw validation_error("entry-range", {i, j, v},
                                 std::string(name) + "[" + std::to_string(i) + "][" +
                                     std::to_string(j) + "] = " + std::to_string(v) +
                                     " out of range");
      }
    }
  };
  check_shape(add, "add");
  check_shape(mul, "mul");
  if (one < 0 || one >= order)
    throw validation_error("entry-range", {one}, "identity index out of range");

  auto A = [&](int a, int b) { return add[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
  auto M = [&](int a, int b) { return mul[static_cast<size_t>(a)][static_cast<size_t>(b)]; };

  int zero = -1;
  for (int z = 0; z < order && zero < 0; ++z) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      if (A(z, x) != x || A(x, z) != x) ok = false;
    if (ok) zero = z;
  }
  if (zero < 0)
    throw validation_error("add-identity", {}, "addition table has no identity element");
  if (one == zero)
    throw validation_error("identity-distinct", {one},
                           "multiplicative identity equals zero");

  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (A(a, b) != A(b, a))
        throw validation_error("add-commutative", {a, b},
                               "addition not commutative at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
  for (int a = 0; a < order; ++a) {
    bool has_inv = false;
    for (int b = 0; b < order && !has_inv; ++b)
      if (A(a, b) == zero) has_inv = true;
    if (!has_inv)
      throw validation_error("add-inverse", {a},
                             "element " + std::to_string(a) + " has no additive inverse");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (A(A(a, b), c) != A(a, A(b, c)))
          throw validation_error("add-associative", {a, b, c},
                                 "addition not associative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < order; ++a)
    if (M(one, a) != a || M(a, one) != a)
      throw validation_error("mul-identity", {a},
                             "identity fails on element " + std::to_string(a));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c) {
        if (M(M(a, b), c) != M(a, M(b, c)))
          throw validation_error("mul-associative", {a, b, c},
                                 "multiplication not associative at (" + std::to_string(a) +
                                     "," + std::to_string(b) + "," + std::to_string(c) + ")");
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          throw validation_error("left-distributive", {a, b, c},
                                 "left distributivity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
        if (M(A(a, b), c) != A(M(a, c), M(b, c)))
          throw validation_error("right-distributive", {a, b, c},
                                 "right distributivity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
      }

  std::vector<std::uint16_t> fa(static_cast<size_t>(order) * static_cast<size_t>(order));
  std::vector<std::uint16_t> fm(fa.size());
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      fa[static_cast<size_t>(a) * static_cast<size_t>(order) + static_cast<size_t>(b)] =
          static_cast<std::uint16_t>(A(a, b));
      fm[static_cast<size_t>(a) * static_cast<size_t>(order) + static_cast<size_t>(b)] =
          static_cast<std::uint16_t>(M(a, b));
    }
  return FiniteRing::unchecked(order, std::move(fa), std::move(fm), zero, one, label);
}

}  // namespace ringlab
