#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/ideal_lab.hpp"
#include "ringlab/isomorphism.hpp"
#include "ringlab/json_io.hpp"
#include "ringlab/maxsub.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

enum class CheckStatus { pass, fail, skipped_cap, not_applicable };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_cap: return "skipped-cap";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

/// One executed check. A fail always carries a witness in `detail`; a
/// skipped-cap names the exceeded resource there.
struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string spec_text;
  std::string label;
  int order = 0;
  std::vector<CheckResult> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

/// Memo for expensive per-ring computations, keyed by table content so the
/// same ring reached through different constructions shares results.
/// Not thread-safe; use one instance per worker.
class AnalysisCache {
 public:
  const std::vector<Subset>& ideals_for(const FiniteRing& r, Side side, long cap) {
    Entry& e = entry(r);
    auto& slot = e.ideals[static_cast<int>(side)];
    if (!slot) slot = enumerate_ideals(r, side, cap);
    return *slot;
  }

  const SubringLattice& lattice_for(const FiniteRing& r, long cap) {
    Entry& e = entry(r);
    if (!e.lattice || (e.lattice->truncated && e.lattice_cap < cap)) {
      e.lattice = enumerate_subrings(r, cap);
      e.lattice_cap = cap;
    }
    if (e.lattice->truncated) throw cap_error("subring count", -1, cap);
    return *e.lattice;
  }

  std::vector<Subset> maximal_subrings_for(const FiniteRing& r, long cap) {
    const SubringLattice& lat = lattice_for(r, cap);
    std::vector<Subset> out;
    out.reserve(lat.maximal.size());
    for (int i : lat.maximal) out.push_back(lat.subrings[static_cast<size_t>(i)]);
    return out;
  }

 private:
  struct Entry {
    std::optional<std::vector<Subset>> ideals[3];
    std::optional<SubringLattice> lattice;
    long lattice_cap = 0;
  };
  std::map<std::tuple<std::uint64_t, std::string, int>, Entry> entries_;

  Entry& entry(const FiniteRing& r) {
    return entries_[{r.table_hash(), r.label(), r.order()}];
  }
};

/// Lazily computed views of one ring, shared by all checks that run on it.
class RingStudy {
 public:
  RingStudy(const FiniteRing& r, const Caps& caps, AnalysisCache& cache,
            const RingSpec* spec = nullptr)
      : ring_(r), caps_(caps), cache_(cache), spec_(spec) {}

  const FiniteRing& ring() const { return ring_; }
  const Caps& caps() const { return caps_; }
  AnalysisCache& cache() { return cache_; }
  const RingSpec* spec() const { return spec_; }

  const std::vector<Subset>& maximal(Side side) {
    auto& slot = maximal_[static_cast<int>(side)];
    if (!slot) {
      auto m = maximal_among(cache_.ideals_for(ring_, side, caps_.max_ideals));
      for (auto& s : m) s.set_role(ideal_role(side));
      std::sort(m.begin(), m.end());
      slot = std::move(m);
    }
    return *slot;
  }

  const std::vector<SimilarityClass>& classes(Side side) {
    auto& slot = classes_[side == Side::left ? 0 : 1];
    if (!slot) slot = similarity_classes_of(ring_, side, maximal(side));
    return *slot;
  }

  const MaxPartitionReport& partition() {
    if (!partition_)
      partition_ = max_partition_report_from(ring_, maximal(Side::left), maximal(Side::right),
                                             maximal(Side::two_sided));
    return *partition_;
  }

 private:
  const FiniteRing& ring_;
  Caps caps_;
  AnalysisCache& cache_;
  const RingSpec* spec_;
  std::optional<std::vector<Subset>> maximal_[3];
  std::optional<std::vector<SimilarityClass>> classes_[2];
  std::optional<MaxPartitionReport> partition_;
};

namespace detail {

/// Collects assertions for one check; the first failed assertion becomes
/// the witness. Zero executed assertions means the check did not apply.
struct CheckBody {
  int assertions = 0;
  std::optional<std::string> failure;
  std::string na_reason;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++assertions;
    if (!ok && !failure) failure = witness();
  }
  void expect(bool ok, const std::string& witness) {
    ++assertions;
    if (!ok && !failure) failure = witness;
  }
};

inline std::string subset_str(const Subset& s) { return s.to_string(); }

inline std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline bool same_sets(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  return sorted(a) == sorted(b);
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// ---- individual checks -----------------------------------------------------

/// Similarity classes of non-two-sided maximal one-sided ideals have at
/// least eigenring-order + 1 members, witnessed by the injection
/// c + M -> (M : x + c) for a fixed x outside the idealizer.
inline void check_similarity_bound(RingStudy& st, CheckBody& body) {
  body.na_reason = "every maximal one-sided ideal is two-sided";
  const FiniteRing& r = st.ring();
  for (Side side : {Side::left, Side::right}) {
    for (const SimilarityClass& cls : st.classes(side)) {
      if (is_two_sided_ideal(r, cls.representative)) continue;
      body.expect(static_cast<int>(cls.members.size()) >= cls.eigenring_order + 1, [&] {
        return "class of " + subset_str(cls.representative) + " has " +
               std::to_string(cls.members.size()) + " members but eigenring order is " +
               std::to_string(cls.eigenring_order);
      });
      const Subset& m = cls.representative;
      Subset ize = idealizer(r, m);
      Elem x = -1;
      for (Elem e = 0; e < r.order(); ++e)
        if (!ize.test(e)) {
          x = e;
          break;
        }
      body.expect(x >= 0, "idealizer is the whole ring for a non-two-sided ideal");
      if (x < 0) continue;
      // one representative per coset of M inside its idealizer, the zero
      // coset included (c = 0 contributes (M:x) itself)
      std::vector<Elem> reps;
      Subset covered(r.order());
      auto m_elems = m.elements();
      ize.for_each([&](int e) {
        if (covered.test(e)) return;
        reps.push_back(e);
        for (Elem me : m_elems) covered.set(r.add(e, me));
      });
      body.expect(static_cast<int>(reps.size()) == cls.eigenring_order,
                  "idealizer/ideal coset count disagrees with eigenring order");
      std::set<Subset> images;
      auto members = sorted(cls.members);
      for (Elem c : reps) {
        Subset n_ideal = colon(r, m, r.add(x, c), side);
        body.expect(n_ideal != m, [&] {
          return "colon at x+c=" + std::to_string(r.add(x, c)) + " collapsed to M";
        });
        body.expect(std::binary_search(members.begin(), members.end(), n_ideal), [&] {
          return "colon image " + subset_str(n_ideal) + " is not in the similarity class";
        });
        images.insert(n_ideal);
      }
      body.expect(images.size() == reps.size(), "colon injection collided on coset reps");
    }
  }
}

/// Idealizers of non-two-sided maximal one-sided ideals are maximal
/// subrings, and conversely every maximal subring containing such an ideal
/// is the idealizer.
inline void check_idealizer_maximal(RingStudy& st, CheckBody& body) {
  body.na_reason = "every maximal one-sided ideal is two-sided";
  const FiniteRing& r = st.ring();
  for (Side side : {Side::left, Side::right}) {
    for (const Subset& m : st.maximal(side)) {
      if (is_two_sided_ideal(r, m)) continue;
      Subset a = idealizer(r, m);
      body.expect(a.contains(m), "idealizer does not contain the ideal");
      body.expect(!a.is_full(), "idealizer of a non-two-sided ideal is the whole ring");
      body.expect(is_maximal_subring(r, a), [&] {
        return "idealizer " + subset_str(a) + " of " + subset_str(m) +
               " is not a maximal subring";
      });
      SubringLattice over = subrings_containing(r, subring_closure(r, m), st.caps().max_subrings);
      if (over.truncated) throw cap_error("subring count", -1, st.caps().max_subrings);
      body.expect(!over.maximal.empty(), "no maximal subring contains the ideal");
      for (int idx : over.maximal) {
        const Subset& s = over.subrings[static_cast<size_t>(idx)];
        body.expect(s == a, [&] {
          return "maximal subring " + subset_str(s) + " contains " + subset_str(m) +
                 " but is not its idealizer";
        });
      }
    }
  }
}

/// Every ring either has a maximal subring or is quasi-duo.
inline void check_maxsub_or_quasi_duo(RingStudy& st, CheckBody& body) {
  const FiniteRing& r = st.ring();
  const Subset* witness = nullptr;
  for (Side side : {Side::left, Side::right}) {
    for (const Subset& m : st.maximal(side))
      if (!is_two_sided_ideal(r, m)) {
        witness = &m;
        break;
      }
    if (witness) break;
  }
  if (!witness) {
    bool qd = is_quasi_duo(r, Side::left, st.caps().max_ideals) &&
              is_quasi_duo(r, Side::right, st.caps().max_ideals);
    body.expect(qd, "no non-two-sided maximal one-sided ideal, yet not quasi-duo");
    body.note = "quasi-duo";
  } else {
    Subset a = idealizer(r, *witness);
    body.expect(is_maximal_subring(r, a),
                "idealizer of a non-two-sided maximal one-sided ideal is not maximal");
    body.note = "maximal subring exists";
  }
}

/// For simple R, the maximal subrings of R x R are exactly the splits
/// A x R / R x A plus the twisted diagonals, and each is maximal.
inline void check_simple_square_catalog(RingStudy& st, CheckBody& body) {
  const FiniteRing& r = st.ring();
  if (!is_simple(r)) {
    body.na_reason = "ring is not simple";
    return;
  }
  FiniteRing square = build_product(r, r, st.caps().max_order);
  auto catalog = catalog_maxsub_product_simple(square, r, st.caps().max_subrings);
  auto enumerated = st.cache().maximal_subrings_for(square, st.caps().max_subrings);
  body.expect(same_sets(catalog, enumerated), [&] {
    return "catalog size " + std::to_string(catalog.size()) + " vs enumerated " +
           std::to_string(enumerated.size());
  });
  for (const Subset& s : catalog)
    body.expect(is_maximal_subring(square, s),
                [&] { return "catalog member " + subset_str(s) + " is not maximal"; });
  AutomorphismSet auts = automorphisms(r);
  for (const RingMap& sg : auts.maps) {
    Subset d = twisted_diagonal(square, r, identity_map(r), sg);
    FiniteRing as_ring = subring_as_ring(square, d).first;
    body.expect(find_isomorphism(as_ring, r).has_value(),
                "twisted diagonal is not isomorphic to the base ring");
  }
  body.note = std::to_string(enumerated.size()) + " maximal subrings";
}

/// Eigenrings of maximal one-sided ideals are finite fields.
inline void check_eigenring_field(RingStudy& st, CheckBody& body) {
  const FiniteRing& r = st.ring();
  for (Side side : {Side::left, Side::right})
    for (const Subset& m : st.maximal(side)) {
      FiniteRing e = eigenring(r, m);
      body.expect(is_field(e), [&] {
        return "eigenring of " + subset_str(m) + " (order " + std::to_string(e.order()) +
               ") is not a field";
      });
    }
}

/// Quotients by maximal ideals that are not maximal left ideals are simple,
/// noncommutative, and recognized as full matrix rings M_n(GF(q)), n > 1.
inline void check_matrix_quotient_form(RingStudy& st, CheckBody& body) {
  body.na_reason = "every maximal ideal is also a maximal left ideal";
  const FiniteRing& r = st.ring();
  for (const Subset& n_ideal : st.partition().max_not_left) {
    FiniteRing q = quotient(r, n_ideal).first;
    body.expect(!is_commutative(q), "quotient is commutative");
    body.expect(is_simple(q), "quotient is not simple");
    auto id = identify_simple_ring(q);
    body.expect(id.has_value() && id->first > 1, [&] {
      return "quotient by " + subset_str(n_ideal) + " not recognized as M_n(GF(q)) with n>1";
    });
    if (id) body.note = "matrix quotient M_" + std::to_string(id->first) + "(GF(" +
                        std::to_string(id->second) + "))";
  }
}

/// Primitive ideals coincide with maximal ideals on both sides.
inline void check_primitive_maximal(RingStudy& st, CheckBody& body) {
  const auto& p = st.partition();
  body.expect(same_sets(p.prml, p.max_two), "left primitive ideals differ from maximal ideals");
  body.expect(same_sets(p.prmr, p.max_two), "right primitive ideals differ from maximal ideals");
}

/// J(T) equals the intersection of the maximal two-sided ideals.
inline void check_radical_intersection(RingStudy& st, CheckBody& body) {
  const auto& p = st.partition();
  Subset meet = Subset::full(st.ring().order(), SubsetRole::two_sided_ideal);
  for (const auto& m : p.max_two) meet &= m;
  body.expect(p.jacobson == meet.with_role(SubsetRole::two_sided_ideal), [&] {
    return "J = " + subset_str(p.jacobson) + " but the maximal-ideal intersection is " +
           subset_str(meet);
  });
}

/// The Maxl/Maxr/Max intersection identities and the difference identity
/// Max \ Maxl = Max \ Maxr, plus J ⊆ J'.
inline void check_set_identities(RingStudy& st, CheckBody& body) {
  const auto& p = st.partition();
  auto inter = [](const std::vector<Subset>& a, const std::vector<Subset>& b) {
    auto sa = sorted(a), sb = sorted(b);
    std::vector<Subset> out;
    for (const auto& s : sa)
      if (std::binary_search(sb.begin(), sb.end(), s)) out.push_back(s);
    return out;
  };
  auto diff = [](const std::vector<Subset>& a, const std::vector<Subset>& b) {
    auto sa = sorted(a), sb = sorted(b);
    std::vector<Subset> out;
    for (const auto& s : sa)
      if (!std::binary_search(sb.begin(), sb.end(), s)) out.push_back(s);
    return out;
  };
  auto strip = [](std::vector<Subset> v) {
    for (auto& s : v) s.set_role(SubsetRole::raw);
    return v;
  };
  auto maxl = strip(p.maxl), maxr = strip(p.maxr), max2 = strip(p.max_two);
  auto prml = strip(p.prml), prmr = strip(p.prmr);
  auto reference = inter(maxl, max2);
  body.expect(same_sets(reference, inter(maxr, max2)), "Maxl∩Max != Maxr∩Max");
  body.expect(same_sets(reference, inter(maxl, maxr)), "Maxl∩Max != Maxl∩Maxr");
  body.expect(same_sets(reference, inter(prml, maxl)), "Maxl∩Max != Prml∩Maxl");
  body.expect(same_sets(reference, inter(prmr, maxr)), "Maxl∩Max != Prmr∩Maxr");
  body.expect(same_sets(reference, inter(prml, maxr)), "Maxl∩Max != Prml∩Maxr");
  body.expect(same_sets(reference, inter(prmr, maxl)), "Maxl∩Max != Prmr∩Maxl");
  body.expect(same_sets(diff(max2, maxl), diff(max2, maxr)), "Max\\Maxl != Max\\Maxr");
  body.expect(p.j_prime.contains(p.jacobson), "J is not contained in J'");
  body.expect(same_sets(strip(p.max_lr), reference), "Max_lr field disagrees with Maxl∩Max");
}

/// Every maximal one-sided-or-two-sided ideal outside the common core
/// absorbs p·1 for some prime p.
inline void check_prime_absorption(RingStudy& st, CheckBody& body) {
  body.na_reason = "Maxl', Maxr' and Max' are all empty";
  const FiniteRing& r = st.ring();
  const auto& p = st.partition();
  std::set<Subset> targets;
  for (const auto& m : p.maxl_not_two) targets.insert(m.with_role(SubsetRole::raw));
  for (const auto& m : p.maxr_not_two) targets.insert(m.with_role(SubsetRole::raw));
  for (const auto& m : p.max_not_left) targets.insert(m.with_role(SubsetRole::raw));
  auto primes = prime_divisors(characteristic(r));
  for (const Subset& m : targets) {
    bool absorbed = false;
    for (long q : primes)
      if (m.test(int_embed(r, q))) {
        absorbed = true;
        break;
      }
    body.expect(absorbed,
                [&] { return "no prime multiple of 1 lies in " + subset_str(m); });
  }
}

/// For products of fields with matrix rings over fields, every maximal
/// subring splits along the field-part/matrix-part boundary.
inline void check_semisimple_split(RingStudy& st, CheckBody& body) {
  body.na_reason = "ring is not a product of fields and matrix rings over fields "
                   "with both kinds present";
  const RingSpec* spec = st.spec();
  if (!spec || spec->kind != RingSpec::Kind::product) return;
  std::vector<size_t> field_pos, matrix_pos;
  for (size_t i = 0; i < spec->children.size(); ++i) {
    const RingSpec& c = spec->children[i];
    if (c.kind == RingSpec::Kind::field ||
        (c.kind == RingSpec::Kind::matrix && c.arg == 1 &&
         c.children[0].kind == RingSpec::Kind::field))
      field_pos.push_back(i);
    else if (c.kind == RingSpec::Kind::matrix && c.arg >= 2 &&
             c.children[0].kind == RingSpec::Kind::field)
      matrix_pos.push_back(i);
    else
      return;
  }
  if (field_pos.empty() || matrix_pos.empty()) return;

  const FiniteRing& t = st.ring();
  std::vector<FiniteRing> children;
  std::vector<int> orders;
  for (const auto& c : spec->children) {
    children.push_back(build_spec(c, st.caps()));
    orders.push_back(children.back().order());
  }
  auto block_ring = [&](const std::vector<size_t>& pos) {
    if (pos.size() == 1) return children[pos[0]];
    std::vector<const FiniteRing*> parts;
    for (size_t i : pos) parts.push_back(&children[i]);
    return build_product(parts, st.caps().max_order);
  };
  FiniteRing a_ring = block_ring(field_pos);
  FiniteRing b_ring = block_ring(matrix_pos);
  auto block_orders = [&](const std::vector<size_t>& pos) {
    std::vector<int> o;
    for (size_t i : pos) o.push_back(orders[i]);
    return o;
  };
  auto a_orders = block_orders(field_pos), b_orders = block_orders(matrix_pos);
  auto project = [&](Elem e, const std::vector<size_t>& pos, const std::vector<int>& block_ord) {
    auto comps = product_components(orders, e);
    std::vector<Elem> sel;
    for (size_t i : pos) sel.push_back(comps[i]);
    return static_cast<Elem>(product_index(block_ord, sel));
  };
  auto others_zero = [&](Elem e, const std::vector<size_t>& pos) {
    auto comps = product_components(orders, e);
    Subset mark(static_cast<int>(orders.size()));
    for (size_t i : pos) mark.set(static_cast<int>(i));
    for (size_t i = 0; i < comps.size(); ++i)
      if (!mark.test(static_cast<int>(i)) && comps[i] != children[i].zero()) return false;
    return true;
  };

  auto maxsubs = st.cache().maximal_subrings_for(t, st.caps().max_subrings);
  body.expect(!maxsubs.empty(), "product of a field part and a matrix part has no maximal subring");
  for (const Subset& s : maxsubs) {
    Subset pa(a_ring.order(), SubsetRole::raw);
    Subset pb(b_ring.order(), SubsetRole::raw);
    s.for_each([&](int e) {
      if (others_zero(e, field_pos)) pa.set(project(e, field_pos, a_orders));
      if (others_zero(e, matrix_pos)) pb.set(project(e, matrix_pos, b_orders));
    });
    // s must be exactly pa x pb with one side full and the other maximal
    Subset rebuilt(t.order(), SubsetRole::raw);
    pa.for_each([&](int ae) {
      auto acomps = product_components(a_orders, ae);
      pb.for_each([&](int be) {
        auto bcomps = product_components(b_orders, be);
        std::vector<Elem> comps(orders.size(), 0);
        for (size_t i = 0; i < field_pos.size(); ++i) comps[field_pos[i]] = acomps[i];
        for (size_t i = 0; i < matrix_pos.size(); ++i) comps[matrix_pos[i]] = bcomps[i];
        rebuilt.set(static_cast<int>(product_index(orders, comps)));
      });
    });
    body.expect(rebuilt == s, [&] {
      return "maximal subring " + subset_str(s) + " does not split along the field/matrix parts";
    });
    bool a_full = pa.count() == a_ring.order();
    bool b_full = pb.count() == b_ring.order();
    body.expect(a_full != b_full, "split has the wrong shape (both or neither side full)");
    if (a_full && !b_full)
      body.expect(is_maximal_subring(b_ring, pb.with_role(SubsetRole::subring)),
                  "matrix-part factor of the split is not a maximal subring");
    if (b_full && !a_full)
      body.expect(is_maximal_subring(a_ring, pa.with_role(SubsetRole::subring)),
                  "field-part factor of the split is not a maximal subring");
  }
}

/// For M_k(base) specs: the maximal left ideals are exactly the D(M,u), and
/// over a field base D(0,u) = D(0,v) precisely for right-parallel vectors.
inline void check_matrix_maxl_coverage(RingStudy& st, CheckBody& body) {
  body.na_reason = "ring is not built as a matrix ring M(k,...) with k >= 2";
  const RingSpec* spec = st.spec();
  if (!spec || spec->kind != RingSpec::Kind::matrix || spec->arg < 2) return;
  int k = static_cast<int>(spec->arg);
  FiniteRing base = build_spec(spec->children[0], st.caps());
  body.expect(dmu_coverage_check(base, k, st.caps()),
              "D(M,u) family does not cover the maximal left ideals");
  if (!is_field(base)) return;
  FiniteRing mat = build_matrix(k, base, st.caps().max_order);
  Subset zero_ideal(base.order(), SubsetRole::left_ideal);
  zero_ideal.set(base.zero());
  long total = 1;
  for (int i = 0; i < k; ++i) total *= base.order();
  std::vector<std::vector<Elem>> vecs;
  std::vector<Subset> dsets;
  for (long uu = 1; uu < total; ++uu) {
    std::vector<Elem> u(static_cast<size_t>(k));
    long v = uu;
    for (int i = k; i-- > 0;) {
      u[static_cast<size_t>(i)] = static_cast<Elem>(v % base.order());
      v /= base.order();
    }
    vecs.push_back(u);
    dsets.push_back(d_ideal(mat, base, k, zero_ideal, u));
  }
  auto parallel = [&](const std::vector<Elem>& u, const std::vector<Elem>& v) {
    for (Elem c = 0; c < base.order(); ++c) {
      if (c == base.zero()) continue;
      bool eq = true;
      for (int i = 0; i < k && eq; ++i)
        if (base.mul(u[static_cast<size_t>(i)], c) != v[static_cast<size_t>(i)]) eq = false;
      if (eq) return true;
    }
    return false;
  };
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = i + 1; j < vecs.size(); ++j)
      body.expect((dsets[i] == dsets[j]) == parallel(vecs[i], vecs[j]),
                  "D(0,u) equality disagrees with right-parallelism of u, v");
}

/// Simple rings are recognized as M_n(GF(q)).
inline void check_simple_matrix_form(RingStudy& st, CheckBody& body) {
  body.na_reason = "ring is not simple";
  const FiniteRing& r = st.ring();
  if (!is_simple(r)) return;
  auto id = identify_simple_ring(r);
  body.expect(id.has_value(), "simple ring not isomorphic to any M_n(GF(q))");
  if (id)
    body.note = "M_" + std::to_string(id->first) + "(GF(" + std::to_string(id->second) + "))";
}

/// Center-closure statements about quotient division rings have no content
/// at finite order: finite division rings are commutative.
inline void check_quotient_center_closure(RingStudy& st, CheckBody& body) {
  (void)st;
  body.na_reason = "finite division rings are fields, so the statement is vacuous";
}

}  // namespace detail

using CheckFn = void (*)(RingStudy&, detail::CheckBody&);

/// Fixed, ordered catalog of per-ring checks.
inline const std::vector<std::pair<std::string, CheckFn>>& check_catalog() {
  static const std::vector<std::pair<std::string, CheckFn>> catalog = {
      {"similarity-class-bound", detail::check_similarity_bound},
      {"idealizer-maximal-subring", detail::check_idealizer_maximal},
      {"maxsub-or-quasi-duo", detail::check_maxsub_or_quasi_duo},
      {"simple-square-catalog", detail::check_simple_square_catalog},
      {"eigenring-field", detail::check_eigenring_field},
      {"matrix-quotient-form", detail::check_matrix_quotient_form},
      {"primitive-maximal-match", detail::check_primitive_maximal},
      {"radical-max-intersection", detail::check_radical_intersection},
      {"max-set-identities", detail::check_set_identities},
      {"prime-absorption", detail::check_prime_absorption},
      {"semisimple-product-split", detail::check_semisimple_split},
      {"matrix-maxl-coverage", detail::check_matrix_maxl_coverage},
      {"simple-matrix-form", detail::check_simple_matrix_form},
      {"quotient-center-closure", detail::check_quotient_center_closure},
  };
  return catalog;
}

inline CheckResult run_one_check(const std::string& name, CheckFn fn, RingStudy& study) {
  CheckResult res;
  res.check = name;
  auto start = std::chrono::steady_clock::now();
  detail::CheckBody body;
  try {
    fn(study, body);
    if (body.failure) {
      res.status = CheckStatus::fail;
      res.detail = *body.failure;
    } else if (body.assertions == 0) {
      res.status = CheckStatus::not_applicable;
      res.detail = body.na_reason.empty() ? "no applicable instances" : body.na_reason;
    } else {
      res.status = CheckStatus::pass;
      res.detail = body.note.empty() ? std::to_string(body.assertions) + " assertions"
                                     : body.note;
    }
  } catch (const cap_error& e) {
    res.status = CheckStatus::skipped_cap;
    res.detail = e.what();
  } catch (const std::exception& e) {
    res.status = CheckStatus::fail;
    res.detail = std::string("error: ") + e.what();
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return res;
}

/// Parses, builds, and checks one ring. A build failure is itself reported
/// as the "build" check and the remaining checks are skipped.
inline VerificationReport verify_ring(const std::string& spec_text, const Caps& caps,
                                      AnalysisCache& cache,
                                      const std::vector<std::string>* selected = nullptr) {
  VerificationReport rep;
  rep.spec_text = spec_text;
  CheckResult build;
  build.check = "build";
  auto start = std::chrono::steady_clock::now();
  std::optional<RingSpec> spec;
  std::optional<FiniteRing> ring;
  try {
    spec = parse_spec(spec_text);
    ring = build_spec(*spec, caps);
    build.status = CheckStatus::pass;
    build.detail = "order " + std::to_string(ring->order());
  } catch (const cap_error& e) {
    build.status = CheckStatus::skipped_cap;
    build.detail = e.what();
  } catch (const std::exception& e) {
    build.status = CheckStatus::fail;
    build.detail = e.what();
  }
  build.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.checks.push_back(build);
  if (!ring) return rep;
  rep.label = ring->label();
  rep.order = ring->order();

  RingStudy study(*ring, caps, cache, &*spec);
  for (const auto& [name, fn] : check_catalog()) {
    if (selected &&
        std::find(selected->begin(), selected->end(), name) == selected->end())
      continue;
    rep.checks.push_back(run_one_check(name, fn, study));
  }
  return rep;
}

/// The curated ring zoo: every check's applicability class is hit at least
/// once, and everything stays within the default caps except the square of
/// the 81-element matrix ring (reported as skipped-cap by design).
inline std::vector<std::string> default_zoo_specs() {
  return {
      "Z(2)", "Z(3)", "Z(4)", "Z(6)", "Z(8)", "Z(9)", "Z(12)",
      "GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)",
      "M(2,GF(2))", "M(2,GF(3))", "M(2,Z(4))",
      "UT(2,GF(2))", "UT(2,GF(3))",
      "prod(Z(2),Z(2))", "prod(Z(3),Z(3))", "prod(GF(4),GF(4))", "prod(Z(4),Z(9))",
      "prod(GF(4),M(2,GF(2)))", "prod(M(2,GF(2)),M(2,GF(2)))",
  };
}

struct ZooConfig {
  std::vector<std::string> rings = default_zoo_specs();
  Caps caps;
};

/// Runs every check over every zoo ring, in config order.
inline std::vector<VerificationReport> run_zoo(const ZooConfig& config,
                                               AnalysisCache* cache = nullptr) {
  AnalysisCache local;
  AnalysisCache& c = cache ? *cache : local;
  std::vector<VerificationReport> out;
  out.reserve(config.rings.size());
  for (const auto& spec_text : config.rings)
    out.push_back(verify_ring(spec_text, config.caps, c));
  return out;
}

inline json report_to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"check", c.check},
                          {"status", status_name(c.status)},
                          {"detail", c.detail},
                          {"elapsed_ms", c.elapsed_ms}});
  return json{{"ring", rep.spec_text},
              {"label", rep.label},
              {"order", rep.order},
              {"checks", std::move(checks)}};
}

inline json reports_to_json(const std::vector<VerificationReport>& reps) {
  json arr = json::array();
  for (const auto& r : reps) arr.push_back(report_to_json(r));
  return arr;
}

}  // namespace ringlab
