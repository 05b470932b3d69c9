#include <gtest/gtest.h>

#include "elat/catalog.hpp"
#include "elat/subgroups.hpp"
#include "oracles.hpp"

using namespace elat;

namespace {

oracle::Set as_set(const Subgroup& s) { return {s.elements.begin(), s.elements.end()}; }

}  // namespace

TEST(Subgroups, CountsMatchSubsetOracle) {
  for (const auto& name : catalog_up_to(12)) {
    auto g = catalog_group(name);
    auto lat = all_subgroups(g);
    auto expect = oracle::subgroups_by_subsets(*g);
    ASSERT_EQ(lat.size(), expect.size()) << name;
    std::set<oracle::Set> got;
    for (const auto& s : lat.subgroups()) got.insert(as_set(s));
    EXPECT_EQ(got, std::set<oracle::Set>(expect.begin(), expect.end())) << name;
  }
}

TEST(Subgroups, KnownCounts) {
  const std::map<std::string, std::size_t> counts{{"S3", 6},   {"D4", 10},    {"Q8", 6},     {"A4", 10},
                                                  {"S4", 30},  {"Dih12", 16}, {"Z3xZ3", 6},  {"Z2xZ2xZ2", 16},
                                                  {"C12", 6},  {"S3xS3", 60}, {"S4xC2", 98}, {"Q8xC2", 19}};
  for (const auto& [name, n] : counts) EXPECT_EQ(all_subgroups(catalog_group(name)).size(), n) << name;
}

TEST(Subgroups, OrderedByOrderAndEndpoints) {
  auto lat = all_subgroups(catalog_group("D4"));
  EXPECT_EQ(lat[lat.trivial()].order(), 1u);
  EXPECT_EQ(lat[lat.whole()].order(), 8u);
  for (SubId i = 1; i < lat.size(); ++i) EXPECT_LE(lat[i - 1].order(), lat[i].order());
}

TEST(Subgroups, CoreIsIntersectionOfConjugates) {
  for (const char* name : {"S3", "D4", "A4", "S4", "Dih10", "Q12", "S3xC3"}) {
    auto g = catalog_group(name);
    auto lat = all_subgroups(g);
    for (SubId h = 0; h < lat.size(); ++h) {
      const auto c = lat[lat.core_id(h)];
      EXPECT_EQ(as_set(c), oracle::core(*g, as_set(lat[h]))) << name << " H" << h;
      EXPECT_TRUE(lat.is_normal(c.id));
      // the largest normal subgroup below h
      for (SubId n : lat.normal_ids())
        if (lat.leq(n, h)) {
          EXPECT_TRUE(lat.leq(n, c.id));
        }
    }
  }
}

TEST(Subgroups, NormalityMatchesOracle) {
  for (const char* name : {"S3", "D4", "Q8", "A4", "Dih12"}) {
    auto g = catalog_group(name);
    auto lat = all_subgroups(g);
    for (SubId h = 0; h < lat.size(); ++h) EXPECT_EQ(lat.is_normal(h), oracle::is_normal(*g, as_set(lat[h])));
  }
}

TEST(Subgroups, MeetJoinOfNormalsIsSetProduct) {
  auto g = catalog_group("D4");
  auto lat = all_subgroups(g);
  for (SubId a : lat.normal_ids())
    for (SubId b : lat.normal_ids()) {
      auto [m, j] = meet_join(lat, lat[a], lat[b]);
      EXPECT_EQ(m.id, lat.meet_id(a, b));
      EXPECT_EQ(j.id, lat.join_id(a, b));
      EXPECT_EQ(j.id, normal_product_id(lat, a, b));
    }
}

TEST(Subgroups, FrattiniAndDerivedMatchOracle) {
  for (const auto& name : catalog_up_to(12)) {
    auto g = catalog_group(name);
    auto lat = all_subgroups(g);
    auto fd = frattini_derived(lat);
    EXPECT_EQ(as_set(lat[fd.frattini]), oracle::frattini(*g, oracle::subgroups_by_subsets(*g))) << name;
    EXPECT_EQ(as_set(lat[fd.derived]), oracle::derived(*g)) << name;
  }
}

TEST(Subgroups, D4FrattiniAndDerivedAreTheCentre) {
  auto lat = all_subgroups(catalog_group("D4"));
  auto fd = frattini_derived(lat);
  EXPECT_EQ(fd.maximal.size(), 3u);
  EXPECT_EQ(lat[fd.frattini].order(), 2u);
  EXPECT_EQ(fd.frattini, fd.derived);
}

TEST(Subgroups, Predicates) {
  auto p = [](const char* n) { return group_predicates(all_subgroups(catalog_group(n))); };
  EXPECT_TRUE(p("Q8").dedekind);
  EXPECT_TRUE(p("Q8").hamiltonian);
  EXPECT_FALSE(p("Q8").abelian);
  EXPECT_TRUE(p("C7").simple);
  EXPECT_FALSE(p("S3").simple);
  EXPECT_TRUE(p("D4").primary);
  EXPECT_TRUE(p("D4").nilpotent);
  EXPECT_FALSE(p("S3").nilpotent);
  EXPECT_FALSE(p("A4").nilpotent);
  EXPECT_TRUE(p("S3").satisfies_star);
  EXPECT_TRUE(p("Q8xC2").satisfies_star);
  // Q8 x C3 is a hamiltonian group of order 24
  EXPECT_TRUE(p("Q8xC3").hamiltonian);
  EXPECT_FALSE(p("Q8xC3").satisfies_star);
}

TEST(Subgroups, NilpotencyTestsAgreeUpTo48) {
  for (const auto& name : catalog_up_to(48)) {
    auto lat = all_subgroups(catalog_group(name));
    EXPECT_EQ(group_predicates(lat).nilpotent, nilpotent_by_sylow(lat)) << name;
  }
}

TEST(Subgroups, MinimalGeneratorCount) {
  auto d = [](const char* n) { return min_generator_count(all_subgroups(catalog_group(n))); };
  EXPECT_EQ(d("C1"), 0u);
  EXPECT_EQ(d("C12"), 1u);
  EXPECT_EQ(d("V4"), 2u);
  EXPECT_EQ(d("Z2xZ2xZ2"), 3u);
  EXPECT_EQ(d("S4"), 2u);
  EXPECT_EQ(d("Q8xC2"), 3u);
}

TEST(Subgroups, QuotientGroups) {
  auto g = catalog_group("D4");
  auto lat = all_subgroups(g);
  auto fd = frattini_derived(lat);
  auto q = quotient_group(lat, fd.frattini);
  EXPECT_EQ(q.group->order(), 4u);
  EXPECT_EQ(identify(q.group), "V4");
  EXPECT_TRUE(q.projection.is_homomorphism());
  SubId h = 0;
  while (lat.is_normal(h)) ++h;
  EXPECT_THROW(quotient_group(lat, h), PreconditionError);
}

TEST(Subgroups, BoundIsEnforced) {
  Limits l;
  l.max_analysis_order = 20;
  EXPECT_THROW(all_subgroups(catalog_group("S4"), l), BoundError);
}
