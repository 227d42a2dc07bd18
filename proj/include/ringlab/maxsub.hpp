#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringlab/closure.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/ideal_lab.hpp"
#include "ringlab/isomorphism.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

/// All subrings of a ring (including the ring itself), with the maximal
/// proper ones marked. `truncated` means the cap was hit and the listing
/// is partial; downstream users must treat that as a resource failure.
struct SubringLattice {
  std::vector<Subset> subrings;
  std::vector<int> maximal;
  bool truncated = false;
};

namespace detail {

/// Breadth-first closure walk over the over-ring poset of `start`.
/// Every subring is extended by one representative of each additive coset
/// (elements in the same coset of S generate the same closure), which both
/// finds all over-rings and decides maximality: S is maximal iff every
/// extension closes to the whole ring.
inline bool subring_bfs(const FiniteRing& r, const Subset& start, long cap,
                        std::map<Subset, bool>& info) {
  std::vector<Subset> work;
  info.emplace(start, false);
  work.push_back(start);
  while (!work.empty()) {
    Subset s = std::move(work.back());
    work.pop_back();
    SpanSet sp = SpanSet::from(r, s);
    Subset covered = s;
    bool all_full = true;
    for (Elem x = 0; x < r.order(); ++x) {
      if (covered.test(x)) continue;
      Subset t = subring_extend(r, sp, x);
      if (!t.is_full()) all_full = false;
      if (info.emplace(t, false).second) {
        if (static_cast<long>(info.size()) > cap) return false;
        work.push_back(std::move(t));
      }
      for (Elem e : sp.elems) covered.set(r.add(e, x));
    }
    info[s] = all_full && !s.is_full();
  }
  return true;
}

inline SubringLattice lattice_from_info(const std::map<Subset, bool>& info, bool truncated) {
  SubringLattice out;
  out.truncated = truncated;
  out.subrings.reserve(info.size());
  for (const auto& [s, maximal] : info) {
    if (maximal) out.maximal.push_back(static_cast<int>(out.subrings.size()));
    Subset copy = s;
    copy.set_role(SubsetRole::subring);
    out.subrings.push_back(std::move(copy));
  }
  if (truncated) out.maximal.clear();  // unreliable on a partial walk
  return out;
}

}  // namespace detail

/// Every unital subring, grown breadth-first from the prime subring.
inline SubringLattice enumerate_subrings(const FiniteRing& r, long cap = kDefaultSubringCap) {
  std::map<Subset, bool> info;
  bool complete = detail::subring_bfs(r, subring_closure(r, Subset(r.order())), cap, info);
  return detail::lattice_from_info(info, !complete);
}

/// All subrings containing the given subring (over-ring poset walk).
inline SubringLattice subrings_containing(const FiniteRing& r, const Subset& base,
                                          long cap = kDefaultSubringCap) {
  if (!is_subring(r, base))
    throw ring_error("subrings_containing: base is not a unital subring");
  std::map<Subset, bool> info;
  bool complete = detail::subring_bfs(r, base, cap, info);
  return detail::lattice_from_info(info, !complete);
}

/// Maximal subrings only; a truncated walk aborts with a resource error
/// rather than returning a possibly-wrong answer.
inline std::vector<Subset> maximal_subrings(const FiniteRing& r, long cap = kDefaultSubringCap) {
  SubringLattice lat = enumerate_subrings(r, cap);
  if (lat.truncated) throw cap_error("subring count", -1, cap);
  std::vector<Subset> out;
  out.reserve(lat.maximal.size());
  for (int i : lat.maximal) out.push_back(lat.subrings[static_cast<size_t>(i)]);
  return out;
}

/// The quantified closure test: S proper and S[x] = R for every outside x.
inline bool is_maximal_subring(const FiniteRing& r, const Subset& s) {
  if (!is_subring(r, s)) throw ring_error("is_maximal_subring: not a unital subring");
  if (s.is_full()) throw ring_error("is_maximal_subring: subring must be proper");
  SpanSet sp = SpanSet::from(r, s);
  Subset covered = s;
  for (Elem x = 0; x < r.order(); ++x) {
    if (covered.test(x)) continue;
    if (!subring_extend(r, sp, x).is_full()) return false;
    for (Elem e : sp.elems) covered.set(r.add(e, x));
  }
  return true;
}

/// Δ(I) = Δ + I x I inside base x base, for a two-sided ideal I of base.
/// `product` must be build_product(base, base).
inline Subset delta_subring(const FiniteRing& product, const FiniteRing& base, const Subset& i) {
  if (product.order() != base.order() * base.order())
    throw ring_error("delta_subring: product ring does not match base x base");
  if (!is_two_sided_ideal(base, i))
    throw ring_error("delta_subring: subset is not a two-sided ideal of the base");
  Subset out(product.order(), SubsetRole::subring);
  auto elems = i.elements();
  for (Elem a = 0; a < base.order(); ++a)
    for (Elem x : elems)
      for (Elem y : elems)
        out.set(pair_index(base.order(), base.add(a, x), base.add(a, y)));
  if (!is_subring(product, out)) throw std::logic_error("delta_subring: result is not a subring");
  return out;
}

/// {(s1(x), s2(x)) : x in base} for automorphisms s1, s2 of the base.
inline Subset twisted_diagonal(const FiniteRing& product, const FiniteRing& base,
                               const RingMap& s1, const RingMap& s2) {
  if (product.order() != base.order() * base.order())
    throw ring_error("twisted_diagonal: product ring does not match base x base");
  for (const RingMap* m : {&s1, &s2})
    if (!map_respects_ops(base, base, m->image) || !map_is_bijective(base, base, m->image))
      throw ring_error("twisted_diagonal: maps must be automorphisms of the base");
  Subset out(product.order(), SubsetRole::subring);
  for (Elem x = 0; x < base.order(); ++x)
    out.set(pair_index(base.order(), s1(x), s2(x)));
  return out;
}

/// The full catalog of maximal subrings of R x R for simple R: the split
/// subrings A x R and R x A over maximal subrings A of R, plus every twisted
/// diagonal. Splits and diagonals are deduplicated before returning.
inline std::vector<Subset> catalog_maxsub_product_simple(const FiniteRing& product,
                                                         const FiniteRing& base,
                                                         long subring_cap = kDefaultSubringCap) {
  if (!is_simple(base)) throw ring_error("catalog_maxsub_product_simple: base must be simple");
  if (product.order() != base.order() * base.order())
    throw ring_error("catalog_maxsub_product_simple: product ring does not match base x base");
  int nb = base.order();
  std::set<Subset> out;
  for (const Subset& a : maximal_subrings(base, subring_cap)) {
    Subset left(product.order(), SubsetRole::subring);
    Subset right(product.order(), SubsetRole::subring);
    a.for_each([&](int x) {
      for (Elem y = 0; y < nb; ++y) {
        left.set(pair_index(nb, x, y));
        right.set(pair_index(nb, y, x));
      }
    });
    out.insert(std::move(left));
    out.insert(std::move(right));
  }
  AutomorphismSet auts = automorphisms(base);
  for (const RingMap& s1 : auts.maps)
    for (const RingMap& s2 : auts.maps)
      out.insert(twisted_diagonal(product, base, s1, s2));
  return {out.begin(), out.end()};
}

/// No proper quotient of A is isomorphic to a proper quotient of B.
inline bool homomorphically_non_isomorphic(const FiniteRing& a, const FiniteRing& b,
                                           long ideal_cap = kDefaultIdealCap) {
  auto ia = enumerate_ideals(a, Side::two_sided, ideal_cap);
  auto ib = enumerate_ideals(b, Side::two_sided, ideal_cap);
  for (const Subset& i : ia) {
    if (i.is_full()) continue;
    FiniteRing qa = quotient(a, i).first;
    for (const Subset& j : ib) {
      if (j.is_full()) continue;
      FiniteRing qb = quotient(b, j).first;
      if (find_isomorphism(qa, qb)) return false;
    }
  }
  return true;
}

/// Split catalog A_1 x B and A x B_1 of maximal subrings of A x B; only
/// valid when A and B are homomorphically non-isomorphic.
inline std::vector<Subset> split_maxsub(const FiniteRing& product, const FiniteRing& a,
                                        const FiniteRing& b, const Caps& caps = {}) {
  if (product.order() != a.order() * b.order())
    throw ring_error("split_maxsub: product ring does not match A x B");
  if (!homomorphically_non_isomorphic(a, b, caps.max_ideals))
    throw ring_error("split_maxsub: factors are not homomorphically non-isomorphic");
  std::set<Subset> out;
  for (const Subset& a1 : maximal_subrings(a, caps.max_subrings)) {
    Subset s(product.order(), SubsetRole::subring);
    a1.for_each([&](int x) {
      for (Elem y = 0; y < b.order(); ++y) s.set(pair_index(b.order(), x, y));
    });
    out.insert(std::move(s));
  }
  for (const Subset& b1 : maximal_subrings(b, caps.max_subrings)) {
    Subset s(product.order(), SubsetRole::subring);
    for (Elem x = 0; x < a.order(); ++x)
      b1.for_each([&](int y) { s.set(pair_index(b.order(), x, y)); });
    out.insert(std::move(s));
  }
  return {out.begin(), out.end()};
}

/// Recognizes a finite simple ring as M_n(GF(q)): finds (n, q) with
/// |R| = q^(n²) and a witness isomorphism, trying n in increasing order.
inline std::optional<std::pair<int, int>> identify_simple_ring(const FiniteRing& r) {
  if (!is_simple(r)) throw ring_error("identify_simple_ring: ring must be simple");
  long n = r.order();
  auto ipow_within = [](long b, int e, long limit) -> long {
    long p = 1;
    for (int i = 0; i < e; ++i) {
      p *= b;
      if (p > limit) return -1;
    }
    return p;
  };
  for (int k = 1; ipow_within(2, k * k, n) != -1; ++k) {
    for (long q = 2; ; ++q) {
      long p = ipow_within(q, k * k, n);
      if (p == -1) break;
      if (p == n && prime_power_decompose(q)) {
        FiniteRing cand = build_matrix(k, build_field(q), static_cast<int>(n));
        if (find_isomorphism(r, cand)) return std::make_pair(k, static_cast<int>(q));
      }
    }
  }
  return std::nullopt;
}

}  // namespace ringlab
