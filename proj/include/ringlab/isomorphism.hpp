#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ringlab/closure.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/ring_map.hpp"

namespace ringlab {

namespace detail {

/// Per-element isomorphism invariants packed into one comparable word:
/// additive order, unit/nilpotent/idempotent/central flags, and the
/// multiplicative order for units.
inline std::vector<std::uint64_t> element_signatures(const FiniteRing& r) {
  int n = r.order();
  Subset u = units(r);
  Subset nil = nilpotents(r);
  Subset cen = center(r);
  std::vector<std::uint64_t> sig(static_cast<size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    std::uint64_t s = static_cast<std::uint64_t>(additive_order(r, a));
    s = (s << 1) | (u.test(a) ? 1 : 0);
    s = (s << 1) | (nil.test(a) ? 1 : 0);
    s = (s << 1) | (r.mul(a, a) == a ? 1 : 0);
    s = (s << 1) | (cen.test(a) ? 1 : 0);
    int mord = 0;
    if (u.test(a)) {
      mord = 1;
      Elem p = a;
      while (p != r.one()) {
        p = r.mul(p, a);
        ++mord;
      }
    }
    s = (s << 16) | static_cast<std::uint64_t>(mord);
    sig[static_cast<size_t>(a)] = s;
  }
  return sig;
}

/// Greedy generating sequence: repeatedly adjoin the smallest element
/// outside the subring generated so far, starting from the prime subring.
inline std::vector<Elem> generating_sequence(const FiniteRing& r) {
  std::vector<Elem> gens;
  Subset cl = subring_closure(r, Subset(r.order()));
  while (!cl.is_full()) {
    Elem g = cl.first_missing();
    gens.push_back(g);
    Subset withg = cl;
    withg.set(g);
    cl = subring_closure(r, withg);
  }
  return gens;
}

struct IsoSearcher {
  const FiniteRing& src;
  const FiniteRing& dst;
  const std::vector<std::uint64_t>& sig_src;
  const std::vector<std::uint64_t>& sig_dst;
  std::vector<Elem> img;
  std::vector<char> used;
  std::vector<Elem> trail;

  IsoSearcher(const FiniteRing& s, const FiniteRing& d, const std::vector<std::uint64_t>& ss,
              const std::vector<std::uint64_t>& sd)
      : src(s), dst(d), sig_src(ss), sig_dst(sd),
        img(static_cast<size_t>(s.order()), -1),
        used(static_cast<size_t>(d.order()), 0) {}

  bool define(Elem a, Elem h) {
    Elem cur = img[static_cast<size_t>(a)];
    if (cur >= 0) return cur == h;
    if (used[static_cast<size_t>(h)]) return false;
    if (sig_src[static_cast<size_t>(a)] != sig_dst[static_cast<size_t>(h)]) return false;
    img[static_cast<size_t>(a)] = h;
    used[static_cast<size_t>(h)] = 1;
    trail.push_back(a);
    return true;
  }

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      Elem a = trail.back();
      trail.pop_back();
      used[static_cast<size_t>(img[static_cast<size_t>(a)])] = 0;
      img[static_cast<size_t>(a)] = -1;
    }
  }

  // Closes the partial map under add and mul starting from trail position
  // `from`; fails on any conflict with already-defined images.
  bool propagate(size_t from) {
    for (size_t qi = from; qi < trail.size(); ++qi) {
      Elem a = trail[qi];
      for (size_t bj = 0; bj < trail.size(); ++bj) {
        Elem b = trail[bj];
        Elem ia = img[static_cast<size_t>(a)], ib = img[static_cast<size_t>(b)];
        if (!define(src.add(a, b), dst.add(ia, ib))) return false;
        if (!define(src.mul(a, b), dst.mul(ia, ib))) return false;
        if (!define(src.mul(b, a), dst.mul(ib, ia))) return false;
      }
    }
    return true;
  }

  bool assign(Elem a, Elem h) {
    size_t mark = trail.size();
    if (define(a, h) && propagate(mark)) return true;
    rollback(mark);
    return false;
  }

  // Tries all signature-compatible images of gens[gi..); calls sink on every
  // completed bijective homomorphism. sink returns true to stop the search.
  template <typename Sink>
  bool search(const std::vector<Elem>& gens, size_t gi, Sink&& sink) {
    while (gi < gens.size() && img[static_cast<size_t>(gens[gi])] >= 0) ++gi;
    if (gi == gens.size()) {
      if (static_cast<int>(trail.size()) != src.order()) return false;  // not total: no
      return sink(img);
    }
    Elem g = gens[gi];
    for (Elem h = 0; h < dst.order(); ++h) {
      if (used[static_cast<size_t>(h)]) continue;
      if (sig_src[static_cast<size_t>(g)] != sig_dst[static_cast<size_t>(h)]) continue;
      size_t mark = trail.size();
      if (define(g, h) && propagate(mark)) {
        if (search(gens, gi + 1, sink)) return true;
      }
      rollback(mark);
    }
    return false;
  }
};

inline bool profiles_match(const FiniteRing& a, const FiniteRing& b,
                           const std::vector<std::uint64_t>& sa,
                           const std::vector<std::uint64_t>& sb) {
  if (a.order() != b.order()) return false;
  if (characteristic(a) != characteristic(b)) return false;
  if (is_commutative(a) != is_commutative(b)) return false;
  std::vector<std::uint64_t> pa = sa, pb = sb;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;  // covers additive-order profile, unit and nilpotent counts
}

}  // namespace detail

/// Backtracking search for a ring isomorphism, pruned by cheap invariants.
/// Deterministic: generators are chosen greedily by smallest index and
/// candidate images are tried in index order.
inline std::optional<RingMap> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  auto sa = detail::element_signatures(a);
  auto sb = detail::element_signatures(b);
  if (!detail::profiles_match(a, b, sa, sb)) return std::nullopt;
  detail::IsoSearcher searcher(a, b, sa, sb);
  if (!searcher.assign(a.zero(), b.zero()) || !searcher.assign(a.one(), b.one()))
    return std::nullopt;
  auto gens = detail::generating_sequence(a);
  std::optional<RingMap> found;
  searcher.search(gens, 0, [&](const std::vector<Elem>& image) {
    if (!map_respects_ops(a, b, image) || !map_is_bijective(a, b, image))
      throw std::logic_error("isomorphism search produced an invalid witness");
    RingMap m;
    m.image = image;
    m.is_homomorphism = true;
    m.is_isomorphism = true;
    found = std::move(m);
    return true;
  });
  return found;
}

/// All ring automorphisms, with the group laws verified on the result.
struct AutomorphismSet {
  std::vector<RingMap> maps;
  int group_order = 0;
};

inline AutomorphismSet automorphisms(const FiniteRing& r) {
  auto sig = detail::element_signatures(r);
  detail::IsoSearcher searcher(r, r, sig, sig);
  if (!searcher.assign(r.zero(), r.zero()) || !searcher.assign(r.one(), r.one()))
    throw std::logic_error("identity is not a partial automorphism");
  auto gens = detail::generating_sequence(r);
  std::vector<RingMap> maps;
  searcher.search(gens, 0, [&](const std::vector<Elem>& image) {
    if (!map_respects_ops(r, r, image) || !map_is_bijective(r, r, image))
      throw std::logic_error("automorphism search produced an invalid witness");
    RingMap m;
    m.image = image;
    m.is_homomorphism = true;
    m.is_isomorphism = true;
    maps.push_back(std::move(m));
    return false;  // keep enumerating
  });
  std::sort(maps.begin(), maps.end());
  // sanity: closed under composition and inverse, contains the identity
  auto member = [&maps](const RingMap& m) {
    return std::binary_search(maps.begin(), maps.end(), m);
  };
  if (!member(identity_map(r))) throw std::logic_error("automorphism set lacks identity");
  for (const auto& f : maps) {
    if (!member(inverse_of(f))) throw std::logic_error("automorphism set not inverse-closed");
    for (const auto& g : maps)
      if (!member(compose(f, g)))
        throw std::logic_error("automorphism set not closed under composition");
  }
  AutomorphismSet out;
  out.group_order = static_cast<int>(maps.size());
  out.maps = std::move(maps);
  return out;
}

}  // namespace ringlab
