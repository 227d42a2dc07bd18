#pragma once

#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// A function between two rings as an index array over the source.
/// Flags record what the map has been verified to be.
struct RingMap {
  std::vector<Elem> image;
  bool is_homomorphism = false;
  bool is_isomorphism = false;

  Elem operator()(Elem a) const { return image[static_cast<size_t>(a)]; }
  bool operator==(const RingMap& o) const { return image == o.image; }
  bool operator<(const RingMap& o) const { return image < o.image; }
};

/// Full check that `image` is a unital ring homomorphism src -> dst.
inline bool map_respects_ops(const FiniteRing& src, const FiniteRing& dst,
                             const std::vector<Elem>& image) {
  int n = src.order();
  if (static_cast<int>(image.size()) != n) return false;
  for (Elem a = 0; a < n; ++a) {
    Elem v = image[static_cast<size_t>(a)];
    if (v < 0 || v >= dst.order()) return false;
  }
  if (image[static_cast<size_t>(src.one())] != dst.one()) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (image[static_cast<size_t>(src.add(a, b))] !=
          dst.add(image[static_cast<size_t>(a)], image[static_cast<size_t>(b)]))
        return false;
      if (image[static_cast<size_t>(src.mul(a, b))] !=
          dst.mul(image[static_cast<size_t>(a)], image[static_cast<size_t>(b)]))
        return false;
    }
  return true;
}

inline bool map_is_bijective(const FiniteRing& src, const FiniteRing& dst,
                             const std::vector<Elem>& image) {
  if (src.order() != dst.order()) return false;
  std::vector<char> seen(static_cast<size_t>(dst.order()), 0);
  for (Elem v : image) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

/// Builds a RingMap with flags set from actual verification.
inline RingMap make_verified_map(const FiniteRing& src, const FiniteRing& dst,
                                 std::vector<Elem> image) {
  RingMap m;
  m.image = std::move(image);
  m.is_homomorphism = map_respects_ops(src, dst, m.image);
  m.is_isomorphism = m.is_homomorphism && map_is_bijective(src, dst, m.image);
  return m;
}

inline RingMap identity_map(const FiniteRing& r) {
  RingMap m;
  m.image.resize(static_cast<size_t>(r.order()));
  for (Elem a = 0; a < r.order(); ++a) m.image[static_cast<size_t>(a)] = a;
  m.is_homomorphism = true;
  m.is_isomorphism = true;
  return m;
}

/// g ∘ f, i.e. apply f then g.
inline RingMap compose(const RingMap& f, const RingMap& g) {
  RingMap m;
  m.image.resize(f.image.size());
  for (size_t a = 0; a < f.image.size(); ++a)
    m.image[a] = g.image[static_cast<size_t>(f.image[a])];
  m.is_homomorphism = f.is_homomorphism && g.is_homomorphism;
  m.is_isomorphism = f.is_isomorphism && g.is_isomorphism;
  return m;
}

inline RingMap inverse_of(const RingMap& f) {
  RingMap m;
  m.image.resize(f.image.size());
  for (size_t a = 0; a < f.image.size(); ++a)
    m.image[static_cast<size_t>(f.image[a])] = static_cast<Elem>(a);
  m.is_homomorphism = f.is_homomorphism;
  m.is_isomorphism = f.is_isomorphism;
  return m;
}

}  // namespace ringlab
