#include <algorithm>
#include <catch_amalgamated.hpp>
#include <set>

#include "oracles.hpp"
#include "ringlab/ringlab.hpp"

using namespace ringlab;

TEST_CASE("subring closure") {
  FiniteRing z12 = build_cyclic(12);
  REQUIRE(subring_closure(z12, Subset(12)).is_full());  // 1 generates Z_n

  FiniteRing m2 = build_matrix(2, build_field(2));
  Subset prime = subring_closure(m2, Subset(16));
  REQUIRE(prime == Subset::of(16, {0, 9}, SubsetRole::subring));

  FiniteRing f4 = build_field(4);
  REQUIRE(subring_closure(f4, {2}).is_full());

  SECTION("diagonal plus (1,0) generates the whole product") {
    FiniteRing p = build_product(f4, f4);
    Subset diag(16, SubsetRole::subring);
    for (Elem a = 0; a < 4; ++a) diag.set(pair_index(4, a, a));
    Subset gens = diag;
    gens.set(pair_index(4, 1, 0));
    REQUIRE_FALSE(subring_closure(p, diag).is_full());
    REQUIRE(subring_closure(p, gens).is_full());
  }
}

TEST_CASE("subring enumeration against the exhaustive oracle") {
  for (const auto& text :
       {"Z(12)", "GF(4)", "GF(8)", "prod(Z(2),Z(2))", "M(2,GF(2))", "prod(GF(4),GF(4))",
        "UT(2,GF(2))", "Z(8)"}) {
    FiniteRing r = build_spec(parse_spec(text));
    SubringLattice lat = enumerate_subrings(r);
    REQUIRE_FALSE(lat.truncated);
    auto expect = oracles::naive_subrings(r);
    INFO(text);
    REQUIRE(lat.subrings == expect);
    std::vector<Subset> maximal;
    for (int i : lat.maximal) maximal.push_back(lat.subrings[static_cast<size_t>(i)]);
    REQUIRE(maximal == oracles::naive_maximal(expect, r.order()));
  }
}

TEST_CASE("subring lattice basics") {
  SECTION("the diagonal is the only proper subring of Zp x Zp") {
    for (int p : {2, 3}) {
      FiniteRing zp = build_cyclic(p);
      FiniteRing prod = build_product(zp, zp);
      SubringLattice lat = enumerate_subrings(prod);
      REQUIRE(lat.subrings.size() == 2);
      REQUIRE(lat.maximal.size() == 1);
      Subset diag(prod.order(), SubsetRole::subring);
      for (Elem a = 0; a < p; ++a) diag.set(pair_index(p, a, a));
      REQUIRE(lat.subrings[static_cast<size_t>(lat.maximal[0])] == diag);
    }
  }

  SECTION("GF(4) has one proper subring, GF(8) only the prime field") {
    SubringLattice f4 = enumerate_subrings(build_field(4));
    REQUIRE(f4.subrings.size() == 2);
    REQUIRE(f4.maximal.size() == 1);
    auto m8 = maximal_subrings(build_field(8));
    REQUIRE(m8.size() == 1);
    REQUIRE(m8[0] == Subset::of(8, {0, 1}, SubsetRole::subring));
  }

  SECTION("every subring contains one and the prime subring") {
    FiniteRing r = build_matrix(2, build_cyclic(4));
    Subset prime = subring_closure(r, Subset(r.order()));
    SubringLattice lat = enumerate_subrings(r);
    for (const auto& s : lat.subrings) {
      REQUIRE(s.test(r.one()));
      REQUIRE(s.contains(prime));
    }
  }

  SECTION("maximal flags agree with the direct test") {
    FiniteRing r = build_product(build_field(4), build_matrix(2, build_field(2)));
    SubringLattice lat = enumerate_subrings(r);
    std::set<int> maximal(lat.maximal.begin(), lat.maximal.end());
    for (size_t i = 0; i < lat.subrings.size(); ++i) {
      if (lat.subrings[i].is_full()) continue;
      REQUIRE(is_maximal_subring(r, lat.subrings[i]) == (maximal.count(static_cast<int>(i)) > 0));
    }
  }

  SECTION("cap truncation") {
    FiniteRing r = build_matrix(2, build_field(3));
    SubringLattice lat = enumerate_subrings(r, 5);
    REQUIRE(lat.truncated);
    REQUIRE(lat.maximal.empty());
    REQUIRE_THROWS_AS(maximal_subrings(r, 5), cap_error);
  }
}

TEST_CASE("maximal subrings of M2(GF(2))") {
  FiniteRing m2 = build_matrix(2, build_field(2));
  auto maxsubs = maximal_subrings(m2);
  std::set<Subset> max_set(maxsubs.begin(), maxsubs.end());

  // idealizers of the three maximal left ideals and of the three maximal
  // right ideals give the triangular-type subrings, coinciding pairwise
  std::set<Subset> idealizers;
  for (Side side : {Side::left, Side::right})
    for (const auto& m : maximal_ideals(m2, side)) {
      Subset ize = idealizer(m2, m);
      REQUIRE(max_set.count(ize) == 1);
      idealizers.insert(ize);
    }
  REQUIRE(idealizers.size() == 3);

  // the rest are field copies of order 4
  int field_copies = 0;
  for (const auto& s : maxsubs)
    if (!idealizers.count(s)) {
      REQUIRE(s.count() == 4);
      auto [sub, embed] = subring_as_ring(m2, s);
      REQUIRE(is_field(sub));
      ++field_copies;
    }
  REQUIRE(field_copies >= 1);
}

TEST_CASE("is_maximal_subring") {
  FiniteRing p = build_product(build_cyclic(2), build_cyclic(2));
  REQUIRE(is_maximal_subring(p, Subset::of(4, {0, 3}, SubsetRole::subring)));
  FiniteRing f8 = build_field(8);
  REQUIRE(is_maximal_subring(f8, Subset::of(8, {0, 1}, SubsetRole::subring)));
  FiniteRing z8 = build_cyclic(8);
  REQUIRE_THROWS_AS(is_maximal_subring(z8, Subset::full(8, SubsetRole::subring)), ring_error);
  REQUIRE_THROWS_AS(is_maximal_subring(p, Subset::of(4, {0, 1})), ring_error);
}

TEST_CASE("idealizers are the maximal subrings containing their ideal") {
  FiniteRing m2 = build_matrix(2, build_field(2));
  for (Side side : {Side::left, Side::right})
    for (const auto& m : maximal_ideals(m2, side)) {
      if (is_two_sided_ideal(m2, m)) continue;
      Subset ize = idealizer(m2, m);
      REQUIRE(is_maximal_subring(m2, ize));
      SubringLattice over = subrings_containing(m2, subring_closure(m2, m));
      REQUIRE(over.maximal.size() == 1);
      REQUIRE(over.subrings[static_cast<size_t>(over.maximal[0])] == ize);
    }
}

TEST_CASE("delta subrings") {
  FiniteRing z12 = build_cyclic(12);
  FiniteRing prod = build_product(z12, z12);
  Subset diag(prod.order(), SubsetRole::subring);
  for (Elem a = 0; a < 12; ++a) diag.set(pair_index(12, a, a));

  Subset zero_ideal(12, SubsetRole::two_sided_ideal);
  zero_ideal.set(0);
  REQUIRE(delta_subring(prod, z12, zero_ideal) == diag);
  REQUIRE(delta_subring(prod, z12, Subset::full(12, SubsetRole::two_sided_ideal)).is_full());

  SECTION("the subrings containing the diagonal are exactly the delta subrings") {
    auto ideals = enumerate_ideals(z12, Side::two_sided);
    REQUIRE(ideals.size() == 6);
    std::set<Subset> deltas;
    for (const auto& i : ideals) deltas.insert(delta_subring(prod, z12, i));
    REQUIRE(deltas.size() == 6);

    SubringLattice over = subrings_containing(prod, diag);
    std::set<Subset> over_set(over.subrings.begin(), over.subrings.end());
    REQUIRE(over_set == deltas);

    // maximal deltas correspond to the two maximal ideals of Z12
    int maximal_count = 0;
    for (const auto& s : deltas)
      if (!s.is_full() && is_maximal_subring(prod, s)) ++maximal_count;
    REQUIRE(maximal_count == 2);
  }

  SECTION("non-ideal input is rejected") {
    REQUIRE_THROWS_AS(delta_subring(prod, z12, Subset::of(12, {0, 1}, SubsetRole::two_sided_ideal)),
                      ring_error);
  }
}

TEST_CASE("twisted diagonals") {
  FiniteRing f4 = build_field(4);
  FiniteRing prod = build_product(f4, f4);
  AutomorphismSet auts = automorphisms(f4);
  REQUIRE(auts.group_order == 2);
  RingMap id = identity_map(f4);
  const RingMap& frob = auts.maps[0] == id ? auts.maps[1] : auts.maps[0];

  Subset diag = twisted_diagonal(prod, f4, id, id);
  Subset twisted = twisted_diagonal(prod, f4, id, frob);
  REQUIRE(diag != twisted);
  REQUIRE(twisted.count() == 4);
  REQUIRE(is_subring(prod, twisted));

  SECTION("twisted(s1,s2) equals twisted(id, s2 s1^{-1})") {
    for (const RingMap& s1 : auts.maps)
      for (const RingMap& s2 : auts.maps) {
        RingMap rel = compose(inverse_of(s1), s2);
        REQUIRE(twisted_diagonal(prod, f4, s1, s2) == twisted_diagonal(prod, f4, id, rel));
      }
  }

  SECTION("non-automorphism input is rejected") {
    RingMap bad;
    bad.image = std::vector<Elem>(4, 0);
    REQUIRE_THROWS_AS(twisted_diagonal(prod, f4, id, bad), ring_error);
  }
}

TEST_CASE("catalog for squares of simple rings") {
  auto catalog_matches = [](const std::string& text, int expected) {
    FiniteRing r = build_spec(parse_spec(text));
    FiniteRing prod = build_product(r, r);
    auto catalog = catalog_maxsub_product_simple(prod, r);
    auto enumerated = maximal_subrings(prod);
    std::sort(enumerated.begin(), enumerated.end());
    INFO(text);
    REQUIRE(catalog == enumerated);
    if (expected >= 0) REQUIRE(static_cast<int>(catalog.size()) == expected);
  };
  catalog_matches("GF(4)", 4);   // 2 splits + 2 diagonals
  catalog_matches("Z(5)", 1);    // the diagonal alone
  catalog_matches("Z(7)", 1);
  catalog_matches("GF(8)", 5);   // 2 splits + 3 diagonals
  catalog_matches("GF(9)", 4);

  REQUIRE_THROWS_AS(
      catalog_maxsub_product_simple(build_product(build_cyclic(4), build_cyclic(4)),
                                    build_cyclic(4)),
      ring_error);
}

TEST_CASE("homomorphically non-isomorphic rings") {
  FiniteRing m2 = build_matrix(2, build_field(2));
  REQUIRE(homomorphically_non_isomorphic(m2, build_field(4)));
  REQUIRE(homomorphically_non_isomorphic(build_cyclic(4), build_cyclic(9)));
  REQUIRE_FALSE(homomorphically_non_isomorphic(build_cyclic(4), build_cyclic(4)));
  REQUIRE_FALSE(homomorphically_non_isomorphic(build_cyclic(4), build_cyclic(8)));
}

TEST_CASE("split catalogs") {
  SECTION("GF(4) x M2(GF(2))") {
    FiniteRing a = build_field(4);
    FiniteRing b = build_matrix(2, build_field(2));
    FiniteRing prod = build_product(a, b);
    auto splits = split_maxsub(prod, a, b);
    REQUIRE(splits.size() == 5);  // 1 from GF(4), 4 from M2(GF(2))
    auto enumerated = maximal_subrings(prod);
    std::sort(enumerated.begin(), enumerated.end());
    REQUIRE(splits == enumerated);
  }

  SECTION("Z4 x Z9 has no maximal subrings at all") {
    FiniteRing a = build_cyclic(4);
    FiniteRing b = build_cyclic(9);
    FiniteRing prod = build_product(a, b);
    auto splits = split_maxsub(prod, a, b);
    REQUIRE(splits.empty());
    REQUIRE(maximal_subrings(prod).empty());
  }

  SECTION("Z2 x Z3: no factor has a maximal subring") {
    FiniteRing a = build_cyclic(2);
    FiniteRing b = build_cyclic(3);
    FiniteRing prod = build_product(a, b);
    REQUIRE(split_maxsub(prod, a, b).empty());
    REQUIRE(maximal_subrings(prod).empty());
  }

  SECTION("hypothesis failure is rejected") {
    FiniteRing z4 = build_cyclic(4);
    FiniteRing prod = build_product(z4, z4);
    REQUIRE_THROWS_AS(split_maxsub(prod, z4, z4), ring_error);
  }
}

TEST_CASE("identifying simple rings") {
  auto id1 = identify_simple_ring(build_matrix(2, build_field(2)));
  REQUIRE(id1 == std::make_pair(2, 2));
  auto id2 = identify_simple_ring(build_field(9));
  REQUIRE(id2 == std::make_pair(1, 9));
  auto id3 = identify_simple_ring(build_matrix(2, build_field(3)));
  REQUIRE(id3 == std::make_pair(2, 3));
  REQUIRE_THROWS_AS(identify_simple_ring(build_cyclic(4)), ring_error);
}

TEST_CASE("matrix rings in the zoo all have maximal subrings") {
  for (const auto& text : {"M(2,GF(2))", "M(2,GF(3))", "M(2,Z(4))"}) {
    FiniteRing r = build_spec(parse_spec(text));
    INFO(text);
    REQUIRE_FALSE(maximal_subrings(r).empty());
  }
}

TEST_CASE("non-quasi-duo rings have at least three non-two-sided maximal left ideals") {
  for (const auto& text :
       {"M(2,GF(2))", "M(2,GF(3))", "M(2,Z(4))", "prod(GF(4),M(2,GF(2)))",
        "prod(M(2,GF(2)),M(2,GF(2)))"}) {
    FiniteRing r = build_spec(parse_spec(text));
    int non_two_sided = 0;
    for (const auto& m : maximal_ideals(r, Side::left))
      if (!is_two_sided_ideal(r, m)) ++non_two_sided;
    INFO(text);
    REQUIRE(non_two_sided >= 3);
  }
}
