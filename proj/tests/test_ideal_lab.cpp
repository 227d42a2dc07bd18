#include <algorithm>
#include <catch_amalgamated.hpp>
#include <set>

#include "oracles.hpp"
#include "ringlab/ringlab.hpp"

using namespace ringlab;

TEST_CASE("ideal closure") {
  FiniteRing z12 = build_cyclic(12);
  REQUIRE(ideal_closure(z12, {0}, Side::left).count() == 1);
  REQUIRE(ideal_closure(z12, {1}, Side::two_sided).is_full());

  FiniteRing m2 = build_matrix(2, build_field(2));
  // E11 has index 8; it generates the zero-second-column ideal on the left
  Subset col = ideal_closure(m2, {8}, Side::left);
  REQUIRE(col == Subset::of(16, {0, 2, 8, 10}, SubsetRole::left_ideal));
  REQUIRE(ideal_closure(m2, {8}, Side::two_sided).is_full());
}

TEST_CASE("ideal enumeration against the exhaustive oracle") {
  for (const auto& text : {"Z(12)", "M(2,GF(2))", "UT(2,GF(2))", "prod(GF(4),GF(4))", "Z(8)"}) {
    FiniteRing r = build_spec(parse_spec(text));
    for (Side side : {Side::left, Side::right, Side::two_sided}) {
      auto got = enumerate_ideals(r, side);
      auto expect = oracles::naive_ideals(r, side);
      INFO(text << " side " << side_name(side));
      REQUIRE(got == expect);
      auto maxima = maximal_ideals(r, side);
      std::sort(maxima.begin(), maxima.end());
      REQUIRE(maxima == oracles::naive_maximal(expect, r.order()));
    }
  }
}

TEST_CASE("ideal counts") {
  REQUIRE(enumerate_ideals(build_cyclic(12), Side::two_sided).size() == 6);
  FiniteRing m2 = build_matrix(2, build_field(2));
  REQUIRE(enumerate_ideals(m2, Side::two_sided).size() == 2);
  REQUIRE(enumerate_ideals(m2, Side::left).size() == 5);
  REQUIRE(maximal_ideals(m2, Side::left).size() == 3);
  REQUIRE(maximal_ideals(build_matrix(2, build_field(3)), Side::left).size() == 4);
  auto max12 = maximal_ideals(build_cyclic(12), Side::two_sided);
  std::set<int> sizes;
  for (const auto& m : max12) sizes.insert(m.count());
  REQUIRE(sizes == std::set<int>{4, 6});

  SECTION("cap is enforced") {
    REQUIRE_THROWS_AS(enumerate_ideals(build_cyclic(12), Side::two_sided, 3), cap_error);
  }
}

TEST_CASE("colon ideals") {
  FiniteRing z12 = build_cyclic(12);
  auto ideals = enumerate_ideals(z12, Side::left);
  for (const auto& i : ideals)
    for (Elem a = 0; a < 12; ++a) {
      Subset c = colon(z12, i, a);
      REQUIRE(is_left_ideal(z12, c));
      REQUIRE(c.is_full() == i.test(a));
    }

  for (const auto& text : {"M(2,GF(2))", "UT(2,GF(2))", "Z(12)", "prod(GF(4),GF(4))",
                           "M(2,GF(3))"}) {
    FiniteRing r = build_spec(parse_spec(text));
    INFO(text);
    for (const auto& m : maximal_ideals(r, Side::left)) {
      Subset ize = idealizer(r, m);
      for (Elem c = 0; c < r.order(); ++c) {
        Subset mc = colon(r, m, c);
        if (m.test(c)) {
          REQUIRE(mc.is_full());
        } else {
          // (M:c) is again a maximal left ideal, equal to M exactly on the idealizer
          REQUIRE(is_maximal_one_sided_ideal(r, mc, Side::left));
          REQUIRE((mc == m) == ize.test(c));
        }
      }
    }
  }
}

TEST_CASE("idealizers") {
  FiniteRing m2 = build_matrix(2, build_field(2));
  auto maxl = maximal_ideals(m2, Side::left);
  REQUIRE(maxl.size() == 3);
  FiniteRing ut = build_upper_triangular(2, build_field(2));
  for (const auto& m : maxl) {
    Subset ize = idealizer(m2, m);
    REQUIRE(ize.count() == 8);
    REQUIRE(ize.contains(m));
    REQUIRE(is_subring(m2, ize));
    auto [izer, embed] = subring_as_ring(m2, ize);
    REQUIRE(find_isomorphism(izer, ut).has_value());
  }

  SECTION("two-sided ideals idealize to the whole ring") {
    FiniteRing z12 = build_cyclic(12);
    for (const auto& i : enumerate_ideals(z12, Side::two_sided))
      REQUIRE(idealizer(z12, i).is_full());
    Subset zero(16, SubsetRole::left_ideal);
    zero.set(0);
    REQUIRE(idealizer(m2, zero).is_full());
  }

  SECTION("non-ideal input is rejected") {
    REQUIRE_THROWS_AS(idealizer(m2, Subset::of(16, {0, 3}, SubsetRole::left_ideal)), ring_error);
    REQUIRE_THROWS_AS(idealizer(m2, Subset::of(16, {0, 3})), ring_error);
  }
}

TEST_CASE("eigenrings") {
  FiniteRing m2 = build_matrix(2, build_field(2));
  for (const auto& m : maximal_ideals(m2, Side::left)) {
    FiniteRing e = eigenring(m2, m);
    REQUIRE(e.order() == 2);
    REQUIRE(is_field(e));
  }
  FiniteRing z12 = build_cyclic(12);
  Subset m2z = ideal_closure(z12, {2}, Side::two_sided);
  FiniteRing e12 = eigenring(z12, m2z.with_role(SubsetRole::left_ideal));
  REQUIRE(find_isomorphism(e12, build_cyclic(2)).has_value());
  for (const auto& m : maximal_ideals(build_matrix(2, build_field(3)), Side::left))
    REQUIRE(eigenring(build_matrix(2, build_field(3)), m).order() == 3);

  REQUIRE_THROWS_AS(eigenring(z12, Subset::full(12, SubsetRole::left_ideal)), ring_error);
}

TEST_CASE("similarity") {
  FiniteRing z6 = build_cyclic(6);
  Subset two = ideal_closure(z6, {2}, Side::left);
  Subset three = ideal_closure(z6, {3}, Side::left);
  REQUIRE(is_similar(z6, two, two).value() == 1);
  REQUIRE_FALSE(is_similar(z6, two, three).has_value());
  REQUIRE_FALSE(is_similar(z6, three, two).has_value());

  FiniteRing m2 = build_matrix(2, build_field(2));
  auto maxl = maximal_ideals(m2, Side::left);
  for (const auto& a : maxl)
    for (const auto& b : maxl) {
      auto w = is_similar(m2, a, b);
      REQUIRE(w.has_value());
      REQUIRE(colon(m2, a, *w) == b);
    }

  SECTION("non-maximal input is rejected") {
    Subset zero(6, SubsetRole::left_ideal);
    zero.set(0);
    REQUIRE_THROWS_AS(is_similar(z6, zero, two), ring_error);
  }
}

TEST_CASE("similarity classes") {
  SECTION("one class of three in M2(GF(2))") {
    FiniteRing m2 = build_matrix(2, build_field(2));
    auto classes = similarity_classes(m2, Side::left);
    REQUIRE(classes.size() == 1);
    REQUIRE(classes[0].members.size() == 3);
    REQUIRE(classes[0].eigenring_order == 2);
    REQUIRE(classes[0].representative == classes[0].members.front());
    // lexicographically smallest member is {0,3,12,15}
    REQUIRE(classes[0].representative == Subset::of(16, {0, 3, 12, 15}, SubsetRole::left_ideal));
  }
  SECTION("two singletons in Z6") {
    auto classes = similarity_classes(build_cyclic(6), Side::left);
    REQUIRE(classes.size() == 2);
    for (const auto& c : classes) REQUIRE(c.members.size() == 1);
  }
  SECTION("two singleton two-sided classes in GF(4) x GF(4)") {
    FiniteRing ff = build_product(build_field(4), build_field(4));
    auto classes = similarity_classes(ff, Side::left);
    REQUIRE(classes.size() == 2);
    for (const auto& c : classes) {
      REQUIRE(c.members.size() == 1);
      REQUIRE(is_two_sided_ideal(ff, c.representative));
    }
  }
  SECTION("a class is a singleton exactly when its ideal is two-sided") {
    for (const auto& text : {"M(2,GF(3))", "UT(2,GF(2))", "Z(12)", "M(2,Z(4))"}) {
      FiniteRing r = build_spec(parse_spec(text));
      for (Side side : {Side::left, Side::right})
        for (const auto& c : similarity_classes(r, side))
          REQUIRE((c.members.size() == 1) == is_two_sided_ideal(r, c.representative));
    }
  }
}

TEST_CASE("D(M,u) ideals") {
  FiniteRing f2 = build_field(2);
  FiniteRing m2 = build_matrix(2, f2);
  Subset zero(2, SubsetRole::left_ideal);
  zero.set(0);
  Subset d = d_ideal(m2, f2, 2, zero, {1, 0});
  REQUIRE(d == Subset::of(16, {0, 1, 4, 5}, SubsetRole::left_ideal));

  SECTION("u and uc agree for units c") {
    FiniteRing f4 = build_field(4);
    FiniteRing m2f4 = build_matrix(2, f4);
    Subset z4ideal(4, SubsetRole::left_ideal);
    z4ideal.set(0);
    std::vector<Elem> u{1, 2};
    for (Elem c = 1; c < 4; ++c) {
      std::vector<Elem> uc{f4.mul(1, c), f4.mul(2, c)};
      REQUIRE(d_ideal(m2f4, f4, 2, z4ideal, u) == d_ideal(m2f4, f4, 2, z4ideal, uc));
    }
  }

  SECTION("u inside M^n is rejected") {
    FiniteRing z4 = build_cyclic(4);
    FiniteRing m2z4 = build_matrix(2, z4);
    Subset m = ideal_closure(z4, {2}, Side::left);
    REQUIRE_THROWS_AS(d_ideal(m2z4, z4, 2, m, std::vector<Elem>{2, 0}), ring_error);
    // T/D(M,u) is (Z4/2Z4)^2 of order 4, so D has order 256/4
    REQUIRE(d_ideal(m2z4, z4, 2, m, std::vector<Elem>{1, 0}).count() == 64);
  }

  SECTION("coverage") {
    REQUIRE(dmu_coverage_check(build_field(2), 2));
    REQUIRE(dmu_coverage_check(build_field(3), 2));
    REQUIRE(dmu_coverage_check(build_cyclic(4), 2));
  }
}

TEST_CASE("transpose bijection") {
  FiniteRing f2 = build_field(2);
  FiniteRing m2 = build_matrix(2, f2);
  auto maxl = maximal_ideals(m2, Side::left);
  auto maxr = maximal_ideals(m2, Side::right);
  std::set<Subset> image;
  for (const auto& m : maxl) {
    Subset t = transpose_ideal(f2, 2, m);
    REQUIRE(t.role() == SubsetRole::right_ideal);
    REQUIRE(transpose_ideal(f2, 2, t) == m);
    image.insert(t);
  }
  REQUIRE(image == std::set<Subset>(maxr.begin(), maxr.end()));

  Subset zero(16, SubsetRole::left_ideal);
  zero.set(0);
  REQUIRE(transpose_ideal(f2, 2, zero) == zero);

  REQUIRE_THROWS_AS(transpose_ideal(build_matrix(2, f2), 2, zero), ring_error);
}

TEST_CASE("jacobson radical") {
  REQUIRE(jacobson_radical(build_matrix(2, build_field(2))).count() == 1);
  Subset jut = jacobson_radical(build_upper_triangular(2, build_field(2)));
  REQUIRE(jut == Subset::of(8, {0, 2}, SubsetRole::two_sided_ideal));
  Subset j12 = jacobson_radical(build_cyclic(12));
  REQUIRE(j12 == Subset::of(12, {0, 6}, SubsetRole::two_sided_ideal));
}

TEST_CASE("primitive ideals") {
  FiniteRing m2 = build_matrix(2, build_field(2));
  auto prml = primitive_ideals(m2, Side::left);
  REQUIRE(prml.size() == 1);
  REQUIRE(prml[0].count() == 1);

  FiniteRing z6 = build_cyclic(6);
  auto p6 = primitive_ideals(z6, Side::left);
  REQUIRE(p6.size() == 2);
  auto max6 = maximal_ideals(z6, Side::two_sided);
  std::sort(max6.begin(), max6.end());
  REQUIRE(p6 == max6);

  FiniteRing ut = build_upper_triangular(2, build_field(2));
  auto put = primitive_ideals(ut, Side::left);
  auto maxut = maximal_ideals(ut, Side::two_sided);
  std::sort(maxut.begin(), maxut.end());
  REQUIRE(put == maxut);
}

TEST_CASE("quasi-duo flags and the partition report") {
  REQUIRE(is_quasi_duo(build_cyclic(12), Side::left));
  REQUIRE(is_quasi_duo(build_cyclic(12), Side::right));
  FiniteRing m2 = build_matrix(2, build_field(2));
  REQUIRE_FALSE(is_quasi_duo(m2, Side::left));
  FiniteRing ut = build_upper_triangular(2, build_field(2));
  REQUIRE(is_quasi_duo(ut, Side::left));
  REQUIRE(is_quasi_duo(ut, Side::right));

  MaxPartitionReport rep = max_partition_report(m2);
  REQUIRE(rep.maxl_not_two.size() == 3);
  REQUIRE(rep.maxr_not_two.size() == 3);
  REQUIRE(rep.max_lr.empty());
  REQUIRE(rep.j_prime.is_full());
  REQUIRE(rep.j_prime.contains(rep.jacobson));

  MaxPartitionReport rut = max_partition_report(ut);
  REQUIRE(rut.maxl_not_two.empty());
  REQUIRE(rut.max_lr.size() == 2);
  REQUIRE(rut.j_prime == rut.jacobson.with_role(SubsetRole::two_sided_ideal));

  SECTION("M2(Z4) has one maximal ideal, not maximal-left") {
    MaxPartitionReport r4 = max_partition_report(build_matrix(2, build_cyclic(4)));
    REQUIRE(r4.max_two.size() == 1);
    REQUIRE(r4.max_not_left.size() == 1);
    REQUIRE(r4.maxl.size() == 3);
    REQUIRE(r4.maxl_not_two.size() == 3);
  }
}
