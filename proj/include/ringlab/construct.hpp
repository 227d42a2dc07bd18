#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/closure.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/ring_map.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

// ---- index encodings -------------------------------------------------------
// Tuple-like elements (matrix entries, product components) are encoded
// big-endian: the first entry is the most significant digit. The zero tuple is
// always index 0 and constructed rings keep zero at index 0.

inline long product_index(const std::vector<int>& orders, const std::vector<Elem>& comps) {
  long idx = 0;
  for (size_t i = 0; i < orders.size(); ++i)
    idx = idx * orders[i] + comps[i];
  return idx;
}

inline std::vector<Elem> product_components(const std::vector<int>& orders, long index) {
  std::vector<Elem> out(orders.size());
  for (size_t i = orders.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(index % orders[i]);
    index /= orders[i];
  }
  return out;
}

inline Elem matrix_index(int base_order, int k, const std::vector<Elem>& entries) {
  long idx = 0;
  for (int pos = 0; pos < k * k; ++pos) idx = idx * base_order + entries[static_cast<size_t>(pos)];
  return static_cast<Elem>(idx);
}

inline std::vector<Elem> matrix_entries(int base_order, int k, Elem index) {
  std::vector<Elem> out(static_cast<size_t>(k) * static_cast<size_t>(k));
  long idx = index;
  for (int pos = k * k; pos-- > 0;) {
    out[static_cast<size_t>(pos)] = static_cast<Elem>(idx % base_order);
    idx /= base_order;
  }
  return out;
}

/// Index of (a, b) in a two-factor product ring whose second factor has
/// order b_order.
inline Elem pair_index(int b_order, Elem a, Elem b) { return a * b_order + b; }

// ---- basic constructions ---------------------------------------------------

/// Z_n with tables mod n.
inline FiniteRing build_cyclic(int n) {
  if (n < 2) throw ring_error("Z(n) requires n >= 2, got " + std::to_string(n));
  std::vector<std::uint16_t> a(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<std::uint16_t> m(a.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>((x + y) % n);
      m[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>((static_cast<long>(x) * y) % n);
    }
  return FiniteRing::unchecked(n, std::move(a), std::move(m), 0, 1 % n,
                               "Z(" + std::to_string(n) + ")");
}

inline std::optional<std::pair<int, int>> prime_power_decompose(long q) {
  if (q < 2) return std::nullopt;
  long p = 0, rest = q;
  for (long d = 2; d * d <= rest; ++d)
    if (rest % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = rest;
  int k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), k);
}

namespace detail {

// Dense polynomials over Z_p, constant term first.
using Poly = std::vector<int>;

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

// Remainder of a modulo the monic polynomial f.
inline Poly poly_mod(Poly a, const Poly& f, int p) {
  int deg_f = static_cast<int>(f.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= deg_f; --d) {
    int c = a[static_cast<size_t>(d)];
    if (c == 0) continue;
    for (int i = 0; i <= deg_f; ++i) {
      size_t pos = static_cast<size_t>(d - deg_f + i);
      a[pos] = ((a[pos] - c * f[static_cast<size_t>(i)]) % p + p) % p;
    }
  }
  a.resize(static_cast<size_t>(deg_f));
  return a;
}

inline bool poly_is_zero(const Poly& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly g(static_cast<size_t>(d) + 1, 0);
      long v = idx;
      for (int i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = static_cast<int>(v % p);
        v /= p;
      }
      g[static_cast<size_t>(d)] = 1;
      Poly rem = poly_mod(f, g, p);
      if (poly_is_zero(rem)) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree k over Z_p,
// comparing coefficient tuples constant term first.
inline Poly smallest_irreducible(int p, int k) {
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long m = 0; m < count; ++m) {
    Poly f(static_cast<size_t>(k) + 1, 0);
    long v = m;
    for (int i = k - 1; i >= 0; --i) {
      f[static_cast<size_t>(i)] = static_cast<int>(v % p);
      v /= p;
    }
    f[static_cast<size_t>(k)] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw ring_error("no irreducible polynomial found");  // unreachable for k >= 1
}

}  // namespace detail

/// GF(q) as Z_p[x]/(f) with f the lexicographically smallest monic
/// irreducible of degree k (coefficients compared constant term first).
/// Element i encodes the polynomial with digits of i base p, constant
/// term least significant.
inline FiniteRing build_field(long q) {
  auto pk = prime_power_decompose(q);
  if (!pk) throw ring_error("GF(" + std::to_string(q) + "): not a prime power");
  auto [p, k] = *pk;
  detail::Poly f = detail::smallest_irreducible(p, k);
  int n = static_cast<int>(q);
  auto to_poly = [&](Elem e) {
    detail::Poly a(static_cast<size_t>(k), 0);
    long v = e;
    for (int i = 0; i < k; ++i) {
      a[static_cast<size_t>(i)] = static_cast<int>(v % p);
      v /= p;
    }
    return a;
  };
  auto from_poly = [&](const detail::Poly& a) {
    long idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + a[static_cast<size_t>(i)];
    return static_cast<Elem>(idx);
  };
  std::vector<std::uint16_t> at(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<std::uint16_t> mt(at.size());
  for (Elem x = 0; x < n; ++x) {
    detail::Poly px = to_poly(x);
    for (Elem y = 0; y < n; ++y) {
      detail::Poly py = to_poly(y);
      detail::Poly s(static_cast<size_t>(k), 0);
      for (int i = 0; i < k; ++i)
        s[static_cast<size_t>(i)] = (px[static_cast<size_t>(i)] + py[static_cast<size_t>(i)]) % p;
      at[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(from_poly(s));
      detail::Poly m = detail::poly_mod(detail::poly_mul(px, py, p), f, p);
      mt[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(from_poly(m));
    }
  }
  return FiniteRing::unchecked(n, std::move(at), std::move(mt), 0, 1,
                               "GF(" + std::to_string(q) + ")");
}

/// M_k(R) with row-major big-endian element encoding.
inline FiniteRing build_matrix(int k, const FiniteRing& base, int order_cap = kDefaultOrderCap) {
  if (k < 1) throw ring_error("M(k,R) requires k >= 1");
  long n = 1;
  for (int i = 0; i < k * k; ++i) {
    n *= base.order();
    if (n > order_cap) throw cap_error("order", -1, order_cap);
  }
  int r = base.order();
  std::vector<std::vector<Elem>> dec(static_cast<size_t>(n));
  for (Elem e = 0; e < n; ++e) dec[static_cast<size_t>(e)] = matrix_entries(r, k, e);
  std::vector<std::uint16_t> at(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<std::uint16_t> mt(at.size());
  std::vector<Elem> tmp(static_cast<size_t>(k) * static_cast<size_t>(k));
  for (Elem x = 0; x < n; ++x) {
    const auto& ex = dec[static_cast<size_t>(x)];
    for (Elem y = 0; y < n; ++y) {
      const auto& ey = dec[static_cast<size_t>(y)];
      for (int pos = 0; pos < k * k; ++pos)
        tmp[static_cast<size_t>(pos)] =
            base.add(ex[static_cast<size_t>(pos)], ey[static_cast<size_t>(pos)]);
      at[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(matrix_index(r, k, tmp));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Elem acc = base.zero();
          for (int l = 0; l < k; ++l)
            acc = base.add(acc, base.mul(ex[static_cast<size_t>(i * k + l)],
                                         ey[static_cast<size_t>(l * k + j)]));
          tmp[static_cast<size_t>(i * k + j)] = acc;
        }
      mt[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(matrix_index(r, k, tmp));
    }
  }
  std::vector<Elem> id(static_cast<size_t>(k) * static_cast<size_t>(k), base.zero());
  for (int i = 0; i < k; ++i) id[static_cast<size_t>(i * k + i)] = base.one();
  return FiniteRing::unchecked(static_cast<int>(n), std::move(at), std::move(mt), 0,
                               matrix_index(r, k, id),
                               "M(" + std::to_string(k) + "," + base.label() + ")");
}

/// Direct product with componentwise tables and mixed-radix encoding.
inline FiniteRing build_product(const std::vector<const FiniteRing*>& parts,
                                int order_cap = kDefaultOrderCap) {
  if (parts.size() < 2) throw ring_error("prod(...) requires at least 2 factors");
  std::vector<int> orders;
  long n = 1;
  std::string label = "prod(";
  for (size_t i = 0; i < parts.size(); ++i) {
    orders.push_back(parts[i]->order());
    n *= parts[i]->order();
    if (n > order_cap) throw cap_error("order", -1, order_cap);
    label += (i ? "," : "") + parts[i]->label();
  }
  label += ")";
  std::vector<std::vector<Elem>> dec(static_cast<size_t>(n));
  for (Elem e = 0; e < n; ++e) dec[static_cast<size_t>(e)] = product_components(orders, e);
  std::vector<std::uint16_t> at(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<std::uint16_t> mt(at.size());
  std::vector<Elem> tmp(parts.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const auto& ex = dec[static_cast<size_t>(x)];
      const auto& ey = dec[static_cast<size_t>(y)];
      for (size_t i = 0; i < parts.size(); ++i) tmp[i] = parts[i]->add(ex[i], ey[i]);
      at[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(product_index(orders, tmp));
      for (size_t i = 0; i < parts.size(); ++i) tmp[i] = parts[i]->mul(ex[i], ey[i]);
      mt[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(product_index(orders, tmp));
    }
  std::vector<Elem> ones(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) ones[i] = parts[i]->one();
  return FiniteRing::unchecked(static_cast<int>(n), std::move(at), std::move(mt), 0,
                               static_cast<Elem>(product_index(orders, ones)), label);
}

inline FiniteRing build_product(const FiniteRing& a, const FiniteRing& b,
                                int order_cap = kDefaultOrderCap) {
  return build_product(std::vector<const FiniteRing*>{&a, &b}, order_cap);
}

/// Upper-triangular k x k matrices over R, indexed densely by the
/// k(k+1)/2 on-or-above-diagonal entries in row-major order.
inline FiniteRing build_upper_triangular(int k, const FiniteRing& base,
                                         int order_cap = kDefaultOrderCap) {
  if (k < 2) throw ring_error("UT(k,R) requires k >= 2");
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pos.emplace_back(i, j);
  int m = static_cast<int>(pos.size());
  long n = 1;
  for (int i = 0; i < m; ++i) {
    n *= base.order();
    if (n > order_cap) throw cap_error("order", -1, order_cap);
  }
  int r = base.order();
  std::vector<int> slot(static_cast<size_t>(k) * static_cast<size_t>(k), -1);
  for (int s = 0; s < m; ++s) slot[static_cast<size_t>(pos[static_cast<size_t>(s)].first * k +
                                                       pos[static_cast<size_t>(s)].second)] = s;
  auto decode = [&](Elem e) {
    std::vector<Elem> d(static_cast<size_t>(m));
    long v = e;
    for (int s = m; s-- > 0;) {
      d[static_cast<size_t>(s)] = static_cast<Elem>(v % r);
      v /= r;
    }
    return d;
  };
  auto encode = [&](const std::vector<Elem>& d) {
    long v = 0;
    for (int s = 0; s < m; ++s) v = v * r + d[static_cast<size_t>(s)];
    return static_cast<Elem>(v);
  };
  std::vector<std::vector<Elem>> dec(static_cast<size_t>(n));
  for (Elem e = 0; e < n; ++e) dec[static_cast<size_t>(e)] = decode(e);
  std::vector<std::uint16_t> at(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<std::uint16_t> mt(at.size());
  std::vector<Elem> tmp(static_cast<size_t>(m));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const auto& ex = dec[static_cast<size_t>(x)];
      const auto& ey = dec[static_cast<size_t>(y)];
      for (int s = 0; s < m; ++s)
        tmp[static_cast<size_t>(s)] =
            base.add(ex[static_cast<size_t>(s)], ey[static_cast<size_t>(s)]);
      at[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(encode(tmp));
      for (int s = 0; s < m; ++s) {
        auto [i, j] = pos[static_cast<size_t>(s)];
        Elem acc = base.zero();
        for (int l = i; l <= j; ++l)
          acc = base.add(acc, base.mul(ex[static_cast<size_t>(slot[static_cast<size_t>(i * k + l)])],
                                       ey[static_cast<size_t>(slot[static_cast<size_t>(l * k + j)])]));
        tmp[static_cast<size_t>(s)] = acc;
      }
      mt[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
          static_cast<std::uint16_t>(encode(tmp));
    }
  std::vector<Elem> id(static_cast<size_t>(m), base.zero());
  for (int i = 0; i < k; ++i) id[static_cast<size_t>(slot[static_cast<size_t>(i * k + i)])] = base.one();
  return FiniteRing::unchecked(static_cast<int>(n), std::move(at), std::move(mt), 0, encode(id),
                               "UT(" + std::to_string(k) + "," + base.label() + ")");
}

/// Same addition, multiplication reversed.
inline FiniteRing build_opposite(const FiniteRing& r) {
  int n = r.order();
  std::vector<std::uint16_t> mt(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      mt[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
          static_cast<std::uint16_t>(r.mul(b, a));
  return FiniteRing::unchecked(n, r.add_table(), std::move(mt), r.zero(), r.one(),
                               "op(" + r.label() + ")");
}

/// R/I for a proper two-sided ideal, with the canonical projection.
/// Coset representatives are the smallest element index in each coset and
/// quotient elements are numbered in representative order, so zero stays 0.
inline std::pair<FiniteRing, RingMap> quotient(const FiniteRing& r, const Subset& ideal) {
  if (!is_two_sided_ideal(r, ideal))
    throw ring_error("quotient: subset is not a two-sided ideal of " + r.label());
  if (ideal.is_full()) throw ring_error("quotient: ideal is the whole ring");
  int n = r.order();
  std::vector<Elem> class_of(static_cast<size_t>(n), -1);
  std::vector<Elem> rep;
  auto ideal_elems = ideal.elements();
  for (Elem x = 0; x < n; ++x) {
    if (class_of[static_cast<size_t>(x)] >= 0) continue;
    Elem c = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (Elem i : ideal_elems) class_of[static_cast<size_t>(r.add(x, i))] = c;
  }
  int m = static_cast<int>(rep.size());
  std::vector<std::uint16_t> at(static_cast<size_t>(m) * static_cast<size_t>(m));
  std::vector<std::uint16_t> mt(at.size());
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      at[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] =
          static_cast<std::uint16_t>(class_of[static_cast<size_t>(r.add(rep[static_cast<size_t>(a)], rep[static_cast<size_t>(b)]))]);
      mt[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] =
          static_cast<std::uint16_t>(class_of[static_cast<size_t>(r.mul(rep[static_cast<size_t>(a)], rep[static_cast<size_t>(b)]))]);
    }
  FiniteRing q = FiniteRing::unchecked(
      m, std::move(at), std::move(mt), class_of[static_cast<size_t>(r.zero())],
      class_of[static_cast<size_t>(r.one())],
      r.label() + "/I" + std::to_string(ideal.count()));
  RingMap proj;
  proj.image = std::move(class_of);
  proj.is_homomorphism = true;
  proj.is_isomorphism = (ideal.count() == 1);
  return {std::move(q), std::move(proj)};
}

/// A unital subring as a ring of its own, with the embedding map
/// (new index -> parent index, dense in increasing parent order).
inline std::pair<FiniteRing, RingMap> subring_as_ring(const FiniteRing& r, const Subset& s) {
  if (!is_subring(r, s))
    throw ring_error("subring_as_ring: subset is not a unital subring of " + r.label());
  auto elems = s.elements();
  int m = static_cast<int>(elems.size());
  std::vector<Elem> idx(static_cast<size_t>(r.order()), -1);
  for (int i = 0; i < m; ++i) idx[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;
  std::vector<std::uint16_t> at(static_cast<size_t>(m) * static_cast<size_t>(m));
  std::vector<std::uint16_t> mt(at.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      at[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] =
          static_cast<std::uint16_t>(idx[static_cast<size_t>(r.add(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]))]);
      mt[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] =
          static_cast<std::uint16_t>(idx[static_cast<size_t>(r.mul(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]))]);
    }
  FiniteRing sub = FiniteRing::unchecked(m, std::move(at), std::move(mt),
                                         idx[static_cast<size_t>(r.zero())],
                                         idx[static_cast<size_t>(r.one())],
                                         "sub(" + r.label() + "," + std::to_string(m) + ")");
  RingMap embed;
  embed.image = std::move(elems);
  embed.is_homomorphism = true;
  embed.is_isomorphism = (m == r.order());
  return {std::move(sub), std::move(embed)};
}

}  // namespace ringlab
