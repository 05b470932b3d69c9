#include <gtest/gtest.h>

#include "elat/catalog.hpp"
#include "elat/group.hpp"
#include "oracles.hpp"

using namespace elat;

TEST(Perm, ComposesLeftToRight) {
  const auto a = Perm::from_cycles(3, {{0, 1}});
  const auto b = Perm::from_cycles(3, {{1, 2}});
  // apply a, then b: 0 -> 1 -> 2
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_EQ((a * b).to_cycles(), "(0 2 1)");
  EXPECT_EQ(Perm::identity(4).to_cycles(), "()");
  EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), PreconditionError);
  EXPECT_THROW(Perm::from_cycles(3, {{0, 5}}), PreconditionError);
}

TEST(Group, ClosureBuildsS3) {
  auto g = group_from_generators({Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.validate(), "");
  EXPECT_FALSE(g.is_abelian());
  EXPECT_TRUE(g.element(0).is_identity());
}

TEST(Group, CayleyTableMatchesPermutations) {
  for (const char* name : {"S3", "D4", "Q8", "A4", "Dih10", "Q12"}) {
    auto g = catalog_group(name);
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem b = 0; b < g->order(); ++b) ASSERT_EQ(g->mul(a, b), oracle::mul(*g, a, b)) << name;
  }
}

TEST(Group, ClosureBoundSignalsTooLarge) {
  auto s5 = std::vector<Perm>{Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})};
  EXPECT_THROW(group_from_generators(s5, "S5", 100), BoundError);
  try {
    group_from_generators(s5, "S5", 100);
  } catch (const BoundError& e) {
    EXPECT_NE(std::string(e.what()).find("group too large"), std::string::npos);
  }
}

TEST(Group, ElementOrdersAndConjugation) {
  auto g = catalog_group("S3");
  std::map<std::size_t, std::size_t> census{{1, 1}, {2, 3}, {3, 2}};
  EXPECT_EQ(g->order_census(), census);
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem a = 0; a < g->order(); ++a) {
      const Perm expect = g->element(a).inverse() * g->element(x) * g->element(a);
      EXPECT_EQ(g->element(g->conj(x, a)), expect);
    }
}

TEST(Parse, CatalogNamesAndProducts) {
  EXPECT_EQ(parse_group("S3").order(), 6u);
  EXPECT_EQ(parse_group("D4").order(), 8u);
  EXPECT_EQ(parse_group("Dih8").order(), 8u);
  EXPECT_EQ(parse_group("Q8").order(), 8u);
  EXPECT_EQ(parse_group("V4").order(), 4u);
  EXPECT_EQ(parse_group("C12").order(), 12u);
  EXPECT_EQ(parse_group("Z3xZ3").order(), 9u);
  EXPECT_EQ(parse_group("A4").order(), 12u);
  EXPECT_EQ(parse_group("S3xC4").order(), 24u);
  EXPECT_EQ(parse_group("perm:(0 1),(0 1 2)").order(), 6u);
  EXPECT_EQ(parse_group("perm:(0 1 2 3), (0 2)").order(), 8u);
}

TEST(Parse, ErrorsCarryPosition) {
  auto position = [](const std::string& s) {
    try {
      parse_group(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(position(""), 0);
  EXPECT_EQ(position("X3"), 0);
  EXPECT_EQ(position("S3yC2"), 2);
  EXPECT_EQ(position("S3x"), 3);
  EXPECT_EQ(position("Dih7"), 0);
  EXPECT_EQ(position("C0"), 0);
  EXPECT_EQ(position("perm:(0 1"), 9);
  EXPECT_EQ(position("perm:(0 1 0)"), 10);
  EXPECT_EQ(position("perm:(0 1)(1 2)"), 11);
  EXPECT_EQ(position("perm:0 1"), 5);
}

TEST(Parse, OrderBound) {
  Limits small;
  small.max_closure_order = 50;
  EXPECT_THROW(parse_group("C60", small), BoundError);
  EXPECT_THROW(parse_group("perm:(0 1),(0 1 2 3 4)", small), BoundError);
}

TEST(Catalog, OneNamePerIsomorphismType) {
  const auto names = catalog_up_to(24);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      auto a = catalog_group(names[i]), b = catalog_group(names[j]);
      if (a->order() != b->order()) continue;
      EXPECT_FALSE(find_isomorphism(a, b).has_value()) << names[i] << " ~ " << names[j];
    }
}

TEST(Catalog, AtLeastTwentyFiveGroupsUpTo48) { EXPECT_GE(catalog_up_to(48).size(), 25u); }

TEST(Catalog, Identify) {
  EXPECT_EQ(identify(share(parse_group("perm:(0 1),(0 1 2)"))), "S3");
  EXPECT_EQ(identify(share(parse_group("Dih8"))), "D4");
  EXPECT_EQ(identify(share(parse_group("C2xC2"))), "V4");
  EXPECT_EQ(identify(share(parse_group("C3xC2"))), "C6");
  EXPECT_EQ(identify(share(parse_group("Dih6"))), "S3");
}

TEST(Automorphisms, CountsMatchBruteForce) {
  for (const char* name : {"S3", "D4", "Q8", "C6", "V4", "C5"}) {
    auto g = catalog_group(name);
    EXPECT_EQ(automorphism_group(g).size(), oracle::automorphism_count(*g)) << name;
  }
}

TEST(Automorphisms, KnownOrders) {
  EXPECT_EQ(automorphism_group(catalog_group("S4")).size(), 24u);
  EXPECT_EQ(automorphism_group(catalog_group("Z2xZ2xZ2")).size(), 168u);
  EXPECT_EQ(automorphism_group(catalog_group("A4")).size(), 24u);
  EXPECT_EQ(automorphism_group(catalog_group("Q8")).size(), 24u);
  for (const auto& phi : automorphism_group(catalog_group("D4"))) {
    EXPECT_TRUE(phi.is_homomorphism());
    EXPECT_TRUE(phi.is_bijective());
  }
}

TEST(Automorphisms, BoundIsEnforced) {
  Limits l;
  l.max_analysis_order = 10;
  EXPECT_THROW(automorphism_group(catalog_group("S4"), l), BoundError);
}

TEST(Isomorphism, FindsAndRejects) {
  auto iso = find_isomorphism(share(parse_group("Dih8")), catalog_group("D4"));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_homomorphism());
  EXPECT_TRUE(iso->is_bijective());
  EXPECT_FALSE(find_isomorphism(catalog_group("Q8"), catalog_group("D4")).has_value());
  EXPECT_FALSE(find_isomorphism(catalog_group("C4xC2"), catalog_group("Z2xZ2xZ2")).has_value());
}

TEST(Quotient, CosetCountMatches) {
  auto g = catalog_group("D4");
  for (const auto& h : oracle::subgroups_by_subsets(*g)) {
    if (!oracle::is_normal(*g, h)) continue;
    ElementSet members(g->order());
    for (Elem x : h) members.set(x);
    auto [q, coset_of] = quotient_by_set(*g, members);
    EXPECT_EQ(q.order(), oracle::coset_count(*g, h));
    EXPECT_EQ(q.validate(), "");
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem b = 0; b < g->order(); ++b) EXPECT_EQ(coset_of[g->mul(a, b)], q.mul(coset_of[a], coset_of[b]));
  }
}
