#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/closure.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

/// All ideals of the given side: principal closures from every singleton,
/// then breadth-first pairwise sums until no new ideal appears. Sorted
/// lexicographically; throws cap_error past `cap` distinct ideals.
inline std::vector<Subset> enumerate_ideals(const FiniteRing& r, Side side,
                                            long cap = kDefaultIdealCap) {
  int n = r.order();
  std::set<Subset> principals;
  for (Elem x = 0; x < n; ++x) {
    Subset g(n);
    g.set(x);
    principals.insert(ideal_closure(r, g, side));
  }
  std::set<Subset> all = principals;
  std::vector<Subset> work(all.begin(), all.end());
  if (static_cast<long>(all.size()) > cap) throw cap_error("ideal count", -1, cap);
  while (!work.empty()) {
    Subset i = std::move(work.back());
    work.pop_back();
    for (const Subset& p : principals) {
      if (i.contains(p)) continue;
      Subset j = ideal_sum(r, i, p);
      if (all.insert(j).second) {
        if (static_cast<long>(all.size()) > cap) throw cap_error("ideal count", -1, cap);
        work.push_back(std::move(j));
      }
    }
  }
  std::vector<Subset> out(all.begin(), all.end());
  for (auto& s : out) s.set_role(ideal_role(side));
  return out;
}

/// Proper sets maximal under inclusion among the proper members of a list.
inline std::vector<Subset> maximal_among(const std::vector<Subset>& all) {
  std::vector<Subset> proper;
  for (const auto& s : all)
    if (!s.is_full()) proper.push_back(s);
  std::vector<Subset> out;
  for (const auto& s : proper) {
    bool maximal = true;
    for (const auto& t : proper)
      if (t != s && t.contains(s)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

/// Proper ideals maximal under inclusion among proper ideals of the side.
inline std::vector<Subset> maximal_ideals(const FiniteRing& r, Side side,
                                          long cap = kDefaultIdealCap) {
  return maximal_among(enumerate_ideals(r, side, cap));
}

/// Direct maximality test for a proper one-sided ideal: adjoining any outside
/// element generates the whole ring. Elements in the same additive coset of I
/// generate the same extension, so one representative per coset is closed.
inline bool is_maximal_one_sided_ideal(const FiniteRing& r, const Subset& ideal, Side side) {
  if (ideal.is_full() || !is_ideal(r, ideal, side)) return false;
  int n = r.order();
  SpanSet base = SpanSet::from(r, ideal);
  Subset covered = ideal;
  for (Elem x = 0; x < n; ++x) {
    if (covered.test(x)) continue;
    if (!ideal_extend(r, base, x, side).is_full()) return false;
    for (Elem e : base.elems) covered.set(r.add(e, x));
  }
  return true;
}

/// Colon ideal: {x : xa in I} for left ideals, {x : ax in I} for right.
inline Subset colon(const FiniteRing& r, const Subset& ideal, Elem a, Side side) {
  int n = r.order();
  Subset out(n, ideal_role(side));
  for (Elem x = 0; x < n; ++x) {
    Elem p = (side == Side::right) ? r.mul(a, x) : r.mul(x, a);
    if (ideal.test(p)) out.set(x);
  }
  return out;
}

inline Subset colon(const FiniteRing& r, const Subset& ideal, Elem a) {
  Side side = ideal.role() == SubsetRole::right_ideal ? Side::right : Side::left;
  return colon(r, ideal, a, side);
}

/// Largest subring in which the one-sided ideal A is two-sided:
/// {t : At ⊆ A} for left ideals, {t : tA ⊆ A} for right ideals.
inline Subset idealizer(const FiniteRing& r, const Subset& a) {
  Side side;
  switch (a.role()) {
    case SubsetRole::left_ideal: side = Side::left; break;
    case SubsetRole::right_ideal: side = Side::right; break;
    case SubsetRole::two_sided_ideal: side = Side::two_sided; break;
    default:
      throw ring_error("idealizer: subset is not tagged as an ideal");
  }
  if (!is_ideal(r, a, side == Side::two_sided ? Side::two_sided : side))
    throw ring_error("idealizer: subset is not a " + std::string(side_name(side)) + " ideal");
  int n = r.order();
  Subset out(n, SubsetRole::subring);
  if (side == Side::two_sided) return Subset::full(n, SubsetRole::subring);
  auto elems = a.elements();
  for (Elem t = 0; t < n; ++t) {
    bool ok = true;
    for (Elem e : elems) {
      Elem p = (side == Side::left) ? r.mul(e, t) : r.mul(t, e);
      if (!a.test(p)) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(t);
  }
  return out;
}

/// Eigenring I(A)/A of a proper one-sided ideal.
inline FiniteRing eigenring(const FiniteRing& r, const Subset& a) {
  if (a.is_full()) throw ring_error("eigenring: ideal must be proper");
  Subset ize = idealizer(r, a);
  auto [sub, embed] = subring_as_ring(r, ize);
  // translate A into the dense indexing of the idealizer subring
  std::vector<Elem> back(static_cast<size_t>(r.order()), -1);
  for (size_t i = 0; i < embed.image.size(); ++i)
    back[static_cast<size_t>(embed.image[i])] = static_cast<Elem>(i);
  Subset a_in_sub(sub.order(), SubsetRole::two_sided_ideal);
  a.for_each([&](int e) { a_in_sub.set(back[static_cast<size_t>(e)]); });
  auto [eig, proj] = quotient(sub, a_in_sub);
  eig.set_label("eig(" + r.label() + "," + std::to_string(a.count()) + ")");
  return std::move(eig);
}

namespace detail {

/// Similarity witness search without re-validating the inputs: smallest
/// c outside m with (m:c) = n_ideal.
inline std::optional<Elem> similarity_witness(const FiniteRing& r, const Subset& m,
                                              const Subset& n_ideal, Side side) {
  for (Elem c = 0; c < r.order(); ++c) {
    if (m.test(c)) continue;
    if (colon(r, m, c, side) == n_ideal) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// Similarity of maximal one-sided ideals via the colon criterion; returns
/// the smallest-index witness c with N = (M:c), or nullopt.
inline std::optional<Elem> is_similar(const FiniteRing& r, const Subset& m, const Subset& n_ideal) {
  Side side = m.role() == SubsetRole::right_ideal ? Side::right : Side::left;
  if (!is_maximal_one_sided_ideal(r, m, side) || !is_maximal_one_sided_ideal(r, n_ideal, side))
    throw ring_error("is_similar: inputs must be maximal one-sided ideals of the same side");
  return detail::similarity_witness(r, m, n_ideal, side);
}

/// One similarity class of maximal one-sided ideals.
struct SimilarityClass {
  Side side = Side::left;
  Subset representative;
  std::vector<Subset> members;
  int eigenring_order = 0;
};

/// Partition of the given maximal ideals into similarity classes.
/// Classes and members are sorted; the representative is the
/// lexicographically smallest member.
inline std::vector<SimilarityClass> similarity_classes_of(const FiniteRing& r, Side side,
                                                          std::vector<Subset> maxima) {
  std::sort(maxima.begin(), maxima.end());
  std::vector<bool> assigned(maxima.size(), false);
  std::vector<SimilarityClass> classes;
  for (size_t i = 0; i < maxima.size(); ++i) {
    if (assigned[i]) continue;
    SimilarityClass cls;
    cls.side = side;
    cls.members.push_back(maxima[i]);
    assigned[i] = true;
    for (size_t j = i + 1; j < maxima.size(); ++j) {
      if (assigned[j]) continue;
      if (detail::similarity_witness(r, maxima[i], maxima[j], side)) {
        cls.members.push_back(maxima[j]);
        assigned[j] = true;
      }
    }
    cls.representative = cls.members.front();
    int n_ize = idealizer(r, cls.representative).count();
    cls.eigenring_order = n_ize / cls.representative.count();
    for (const auto& m : cls.members) {
      int e = idealizer(r, m).count() / m.count();
      if (e != cls.eigenring_order)
        throw std::logic_error("eigenring order is not constant on a similarity class");
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline std::vector<SimilarityClass> similarity_classes(const FiniteRing& r, Side side,
                                                       long cap = kDefaultIdealCap) {
  return similarity_classes_of(r, side, maximal_ideals(r, side, cap));
}

/// D(M,u) = {X : Xu ∈ M^k} inside the k x k matrix ring over `base`.
/// `mat` must be build_matrix(k, base). The result is verified maximal.
inline Subset d_ideal(const FiniteRing& mat, const FiniteRing& base, int k, const Subset& m,
                      const std::vector<Elem>& u) {
  if (static_cast<int>(u.size()) != k) throw ring_error("d_ideal: vector length must equal k");
  if (!is_maximal_one_sided_ideal(base, m, Side::left))
    throw ring_error("d_ideal: M must be a maximal left ideal of the base ring");
  bool outside = false;
  for (Elem c : u) {
    if (c < 0 || c >= base.order()) throw ring_error("d_ideal: vector entry out of range");
    if (!m.test(c)) outside = true;
  }
  if (!outside) throw ring_error("d_ideal: u must have a coordinate outside M");
  int n = mat.order();
  Subset d(n, SubsetRole::left_ideal);
  for (Elem x = 0; x < n; ++x) {
    auto e = matrix_entries(base.order(), k, x);
    bool in = true;
    for (int i = 0; i < k && in; ++i) {
      Elem acc = base.zero();
      for (int j = 0; j < k; ++j)
        acc = base.add(acc, base.mul(e[static_cast<size_t>(i * k + j)], u[static_cast<size_t>(j)]));
      if (!m.test(acc)) in = false;
    }
    if (in) d.set(x);
  }
  if (!is_maximal_one_sided_ideal(mat, d, Side::left))
    throw std::logic_error("d_ideal: constructed set failed the maximality check");
  return d;
}

/// True iff {D(M,u)} over all maximal left ideals M of the base and all
/// u outside M^k is exactly the set of maximal left ideals of M_k(base).
inline bool dmu_coverage_check(const FiniteRing& base, int k, const Caps& caps = {}) {
  FiniteRing mat = build_matrix(k, base, caps.max_order);
  auto base_max = maximal_ideals(base, Side::left, caps.max_ideals);
  long total = 1;
  for (int i = 0; i < k; ++i) total *= base.order();
  std::set<Subset> built;
  for (const auto& m : base_max) {
    for (long uu = 0; uu < total; ++uu) {
      std::vector<Elem> u(static_cast<size_t>(k));
      long v = uu;
      bool outside = false;
      for (int i = k; i-- > 0;) {
        u[static_cast<size_t>(i)] = static_cast<Elem>(v % base.order());
        v /= base.order();
        if (!m.test(u[static_cast<size_t>(i)])) outside = true;
      }
      if (!outside) continue;
      built.insert(d_ideal(mat, base, k, m, u));
    }
  }
  auto mat_max = maximal_ideals(mat, Side::left, caps.max_ideals);
  std::set<Subset> expect(mat_max.begin(), mat_max.end());
  return built == expect;
}

/// Entry-wise transpose of a subset of M_k(base); needs a commutative base
/// (transposition is only an anti-automorphism there). Swaps ideal sides.
inline Subset transpose_ideal(const FiniteRing& base, int k, const Subset& m) {
  if (!is_commutative(base))
    throw ring_error("transpose_ideal: base ring must be commutative");
  SubsetRole role = m.role();
  if (role == SubsetRole::left_ideal)
    role = SubsetRole::right_ideal;
  else if (role == SubsetRole::right_ideal)
    role = SubsetRole::left_ideal;
  Subset out(m.universe_size(), role);
  int r = base.order();
  m.for_each([&](int x) {
    auto e = matrix_entries(r, k, x);
    std::vector<Elem> t(e.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t[static_cast<size_t>(j * k + i)] = e[static_cast<size_t>(i * k + j)];
    out.set(matrix_index(r, k, t));
  });
  return out;
}

/// Intersection of all maximal left ideals, cross-checked against the
/// right-handed intersection (they must agree; a mismatch is a bug).
inline Subset radical_from(const FiniteRing& r, const std::vector<Subset>& maxl,
                           const std::vector<Subset>& maxr) {
  Subset j = Subset::full(r.order(), SubsetRole::two_sided_ideal);
  for (const auto& m : maxl) j &= m;
  Subset jr = Subset::full(r.order(), SubsetRole::two_sided_ideal);
  for (const auto& m : maxr) jr &= m;
  if (!(j == jr))
    throw std::logic_error("left and right radical intersections disagree");
  j.set_role(SubsetRole::two_sided_ideal);
  return j;
}

inline Subset jacobson_radical(const FiniteRing& r, long cap = kDefaultIdealCap) {
  return radical_from(r, maximal_ideals(r, Side::left, cap),
                      maximal_ideals(r, Side::right, cap));
}

/// Left (right) primitive ideals: annihilators of T/M over maximal left
/// (right) ideals M, i.e. the largest two-sided ideal inside M.
inline std::vector<Subset> primitive_ideals_from(const FiniteRing& r, Side side,
                                                 const std::vector<Subset>& maxima) {
  if (side == Side::two_sided) throw ring_error("primitive_ideals: side must be left or right");
  int n = r.order();
  std::set<Subset> out;
  for (const auto& m : maxima) {
    Subset ann(n, SubsetRole::two_sided_ideal);
    for (Elem t = 0; t < n; ++t) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        Elem p = (side == Side::left) ? r.mul(t, x) : r.mul(x, t);
        if (!m.test(p)) ok = false;
      }
      if (ok) ann.set(t);
    }
    out.insert(ann);
  }
  return {out.begin(), out.end()};
}

inline std::vector<Subset> primitive_ideals(const FiniteRing& r, Side side,
                                            long cap = kDefaultIdealCap) {
  return primitive_ideals_from(r, side, maximal_ideals(r, side, cap));
}

inline bool is_quasi_duo(const FiniteRing& r, Side side, long cap = kDefaultIdealCap) {
  for (const auto& m : maximal_ideals(r, side, cap))
    if (!is_two_sided_ideal(r, m)) return false;
  return true;
}

/// The Maxl/Maxr/Max partition with the derived difference and intersection
/// sets, both radicals, and the primitive ideal lists.
struct MaxPartitionReport {
  std::vector<Subset> maxl, maxr, max_two;
  std::vector<Subset> maxl_not_two, maxr_not_two, max_not_left, max_lr;
  std::vector<Subset> prml, prmr;
  Subset jacobson;
  Subset j_prime;  // intersection over Max_lr; whole ring when Max_lr is empty
};

inline MaxPartitionReport max_partition_report_from(const FiniteRing& r, std::vector<Subset> maxl,
                                                    std::vector<Subset> maxr,
                                                    std::vector<Subset> max_two) {
  MaxPartitionReport rep;
  rep.maxl = std::move(maxl);
  rep.maxr = std::move(maxr);
  rep.max_two = std::move(max_two);
  std::sort(rep.maxl.begin(), rep.maxl.end());
  std::sort(rep.maxr.begin(), rep.maxr.end());
  std::sort(rep.max_two.begin(), rep.max_two.end());
  auto member = [](const std::vector<Subset>& v, const Subset& s) {
    return std::binary_search(v.begin(), v.end(), s);
  };
  for (const auto& m : rep.maxl)
    if (!member(rep.max_two, m))
      rep.maxl_not_two.push_back(m);
    else
      rep.max_lr.push_back(m);
  for (const auto& m : rep.maxr)
    if (!member(rep.max_two, m)) rep.maxr_not_two.push_back(m);
  for (const auto& m : rep.max_two)
    if (!member(rep.maxl, m)) rep.max_not_left.push_back(m);
  rep.prml = primitive_ideals_from(r, Side::left, rep.maxl);
  rep.prmr = primitive_ideals_from(r, Side::right, rep.maxr);
  rep.jacobson = radical_from(r, rep.maxl, rep.maxr);
  rep.j_prime = Subset::full(r.order(), SubsetRole::two_sided_ideal);
  for (const auto& m : rep.max_lr) rep.j_prime &= m;
  rep.j_prime.set_role(SubsetRole::two_sided_ideal);
  return rep;
}

inline MaxPartitionReport max_partition_report(const FiniteRing& r, long cap = kDefaultIdealCap) {
  return max_partition_report_from(r, maximal_ideals(r, Side::left, cap),
                                   maximal_ideals(r, Side::right, cap),
                                   maximal_ideals(r, Side::two_sided, cap));
}

}  // namespace ringlab
