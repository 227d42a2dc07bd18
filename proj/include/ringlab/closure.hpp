#pragma once

#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

enum class Side { left, right, two_sided };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

inline SubsetRole ideal_role(Side s) {
  switch (s) {
    case Side::left: return SubsetRole::left_ideal;
    case Side::right: return SubsetRole::right_ideal;
    case Side::two_sided: return SubsetRole::two_sided_ideal;
  }
  return SubsetRole::raw;
}

/// An additive subgroup kept both as a bit vector and as an element list,
/// so closure loops can walk newly added elements without rescanning.
struct SpanSet {
  Subset bits;
  std::vector<Elem> elems;

  static SpanSet zero(const FiniteRing& r) {
    SpanSet s;
    s.bits = Subset(r.order());
    s.bits.set(r.zero());
    s.elems.push_back(r.zero());
    return s;
  }
  static SpanSet from(const FiniteRing& r, const Subset& group) {
    SpanSet s;
    s.bits = group;
    s.elems = group.elements();
    (void)r;
    return s;
  }
};

/// Extends an additive subgroup to the subgroup generated together with x.
/// The extension is the union of cosets H, H+x, H+2x, ... which stops as
/// soon as a multiple of x lands in an earlier coset.
inline void additive_extend(const FiniteRing& r, SpanSet& s, Elem x) {
  if (s.bits.test(x)) return;
  size_t base_count = s.elems.size();
  Elem m = x;
  while (!s.bits.test(m)) {
    s.bits.set(m);
    s.elems.push_back(m);
    for (size_t i = 0; i < base_count; ++i) {
      Elem e = r.add(s.elems[i], m);
      if (!s.bits.test(e)) {
        s.bits.set(e);
        s.elems.push_back(e);
      }
    }
    m = r.add(m, x);
  }
}

/// Smallest ideal of the given side containing gens.
inline Subset ideal_closure(const FiniteRing& r, const Subset& gens, Side side) {
  int n = r.order();
  SpanSet s = SpanSet::zero(r);
  gens.for_each([&](int g) { additive_extend(r, s, g); });
  for (size_t qi = 0; qi < s.elems.size(); ++qi) {
    Elem a = s.elems[qi];
    if (side != Side::right)
      for (Elem t = 0; t < n; ++t) {
        Elem p = r.mul(t, a);
        if (!s.bits.test(p)) additive_extend(r, s, p);
      }
    if (side != Side::left)
      for (Elem t = 0; t < n; ++t) {
        Elem p = r.mul(a, t);
        if (!s.bits.test(p)) additive_extend(r, s, p);
      }
  }
  Subset out = s.bits;
  out.set_role(ideal_role(side));
  return out;
}

inline Subset ideal_closure(const FiniteRing& r, std::initializer_list<int> gens, Side side) {
  Subset g(r.order());
  for (int e : gens) g.set(e);
  return ideal_closure(r, g, side);
}

/// Closure of I ∪ {x} where I is already an ideal of the given side (as a
/// SpanSet). Only elements added on top of I are processed.
inline Subset ideal_extend(const FiniteRing& r, const SpanSet& base, Elem x, Side side) {
  SpanSet s = base;
  size_t old = s.elems.size();
  additive_extend(r, s, x);
  int n = r.order();
  for (size_t qi = old; qi < s.elems.size(); ++qi) {
    Elem a = s.elems[qi];
    if (side != Side::right)
      for (Elem t = 0; t < n; ++t) {
        Elem p = r.mul(t, a);
        if (!s.bits.test(p)) additive_extend(r, s, p);
      }
    if (side != Side::left)
      for (Elem t = 0; t < n; ++t) {
        Elem p = r.mul(a, t);
        if (!s.bits.test(p)) additive_extend(r, s, p);
      }
  }
  Subset out = s.bits;
  out.set_role(ideal_role(side));
  return out;
}

/// Sum I + J of two ideals of the same side (the additive span of the union;
/// no multiplicative pass is needed since a sum of ideals is an ideal).
inline Subset ideal_sum(const FiniteRing& r, const Subset& i, const Subset& j) {
  SpanSet s = SpanSet::from(r, i);
  j.for_each([&](int e) { additive_extend(r, s, e); });
  Subset out = s.bits;
  out.set_role(i.role());
  return out;
}

namespace detail {

/// Multiplicative closure pass shared by subring closures: processes element
/// pairs starting from `first_new`, additively extending with any product
/// that escapes. Assumes s is an additive subgroup closed under products of
/// elements before `first_new`.
inline void close_products(const FiniteRing& r, SpanSet& s, size_t first_new) {
  for (size_t qi = first_new; qi < s.elems.size(); ++qi) {
    Elem a = s.elems[qi];
    for (size_t bj = 0; bj < s.elems.size(); ++bj) {
      Elem b = s.elems[bj];
      Elem p = r.mul(a, b);
      if (!s.bits.test(p)) additive_extend(r, s, p);
      p = r.mul(b, a);
      if (!s.bits.test(p)) additive_extend(r, s, p);
    }
  }
}

}  // namespace detail

/// Smallest unital subring containing gens (always contains 1).
inline Subset subring_closure(const FiniteRing& r, const Subset& gens) {
  SpanSet s = SpanSet::zero(r);
  additive_extend(r, s, r.one());
  gens.for_each([&](int g) { additive_extend(r, s, g); });
  detail::close_products(r, s, 0);
  Subset out = s.bits;
  out.set_role(SubsetRole::subring);
  return out;
}

inline Subset subring_closure(const FiniteRing& r, std::initializer_list<int> gens) {
  Subset g(r.order());
  for (int e : gens) g.set(e);
  return subring_closure(r, g);
}

/// Closure of S ∪ {x} where S is already a subring (given as a SpanSet).
/// Only pairs involving new elements are processed.
inline Subset subring_extend(const FiniteRing& r, const SpanSet& s, Elem x) {
  SpanSet t = s;
  size_t old = t.elems.size();
  additive_extend(r, t, x);
  detail::close_products(r, t, old);
  Subset out = t.bits;
  out.set_role(SubsetRole::subring);
  return out;
}

// ---- role predicates -------------------------------------------------------

/// In a finite group a nonempty subset closed under the operation is a
/// subgroup, so no separate inverse check is needed.
inline bool is_additive_subgroup(const FiniteRing& r, const Subset& s) {
  if (!s.test(r.zero())) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!ok) return;
    s.for_each([&](int b) {
      if (ok && !s.test(r.add(a, b))) ok = false;
    });
  });
  return ok;
}

inline bool is_ideal(const FiniteRing& r, const Subset& s, Side side) {
  if (!is_additive_subgroup(r, s)) return false;
  int n = r.order();
  bool ok = true;
  s.for_each([&](int a) {
    if (!ok) return;
    for (Elem t = 0; t < n && ok; ++t) {
      if (side != Side::right && !s.test(r.mul(t, a))) ok = false;
      if (side != Side::left && !s.test(r.mul(a, t))) ok = false;
    }
  });
  return ok;
}

inline bool is_left_ideal(const FiniteRing& r, const Subset& s) {
  return is_ideal(r, s, Side::left);
}
inline bool is_right_ideal(const FiniteRing& r, const Subset& s) {
  return is_ideal(r, s, Side::right);
}
inline bool is_two_sided_ideal(const FiniteRing& r, const Subset& s) {
  return is_ideal(r, s, Side::two_sided);
}

/// Unital subring test: additive subgroup containing 1, closed under products.
inline bool is_subring(const FiniteRing& r, const Subset& s) {
  if (!s.test(r.one())) return false;
  if (!is_additive_subgroup(r, s)) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!ok) return;
    s.for_each([&](int b) {
      if (ok && !s.test(r.mul(a, b))) ok = false;
    });
  });
  return ok;
}

/// Checks that the subset satisfies whatever its role claims.
inline bool matches_role(const FiniteRing& r, const Subset& s) {
  switch (s.role()) {
    case SubsetRole::raw: return true;
    case SubsetRole::subring: return is_subring(r, s);
    case SubsetRole::left_ideal: return is_left_ideal(r, s);
    case SubsetRole::right_ideal: return is_right_ideal(r, s);
    case SubsetRole::two_sided_ideal: return is_two_sided_ideal(r, s);
  }
  return false;
}

/// Every nonzero element generates the whole ring as a two-sided ideal.
inline bool is_simple(const FiniteRing& r) {
  int n = r.order();
  for (Elem x = 0; x < n; ++x) {
    if (x == r.zero()) continue;
    Subset single(n);
    single.set(x);
    if (!ideal_closure(r, single, Side::two_sided).is_full()) return false;
  }
  return true;
}

}  // namespace ringlab
