#include <gtest/gtest.h>

#include <random>

#include "elat/catalog.hpp"
#include "elat/elattice.hpp"
#include "elat/elattice_io.hpp"
#include "oracles.hpp"

using namespace elat;

TEST(ELattice, SubgroupELatticesAreCanonicalUpTo48) {
  const auto names = catalog_up_to(48);
  ASSERT_GE(names.size(), 25u);
  for (const auto& name : names) {
    auto s = make_subgroup_elattice(catalog_group(name));
    auto r = verify_axioms(s.elattice);
    EXPECT_TRUE(r.ok) << name << ": " << r.failure;
    EXPECT_TRUE(r.canonical) << name;
    EXPECT_TRUE(fix_lattice(s.elattice).is_lattice()) << name;
  }
}

TEST(ELattice, FixedPointsAreTheNormalSubgroups) {
  for (const char* name : {"S3", "D4", "A4", "S4", "Q12"}) {
    auto s = make_subgroup_elattice(catalog_group(name));
    std::vector<Index> normal(s.lattice.normal_ids().begin(), s.lattice.normal_ids().end());
    EXPECT_EQ(s.elattice.fixed_points(), normal) << name;
  }
}

TEST(ELattice, ClassSizes) {
  auto sizes = [](const char* n) {
    auto s = make_subgroup_elattice(catalog_group(n));
    auto v = class_sizes(s.elattice, fix_lattice(s.elattice));
    std::sort(v.rbegin(), v.rend());
    return v;
  };
  EXPECT_EQ(sizes("S3"), (std::vector<std::size_t>{4, 1, 1}));
  EXPECT_EQ(sizes("D4"), (std::vector<std::size_t>{5, 1, 1, 1, 1, 1}));
  EXPECT_EQ(sizes("Q8"), (std::vector<std::size_t>(6, 1)));
  EXPECT_EQ(sizes("S4"), (std::vector<std::size_t>{24, 4, 1, 1}));
}

TEST(ELattice, SingletonLattice) {
  ELattice one(1, {0}, {0}, {0});
  auto r = verify_axioms(one);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.canonical);
}

TEST(ELattice, CorruptedJoinTableFails) {
  auto s = make_subgroup_elattice(catalog_group("S3"));
  auto join = s.elattice.join_table();
  join[1 * 6 + 2] = 5;
  ELattice bad(6, s.elattice.eps_table(), s.elattice.meet_table(), join);
  auto r = verify_axioms(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.witness.empty());
  EXPECT_FALSE(r.failure.empty());
}

TEST(ELattice, NonCanonicalExample) {
  // a two-element chain whose top class also holds element 2
  ELattice l(3, {0, 1, 1}, {0, 0, 0, 0, 1, 1, 0, 1, 1}, {0, 1, 1, 1, 1, 1, 1, 1, 1});
  EXPECT_TRUE(verify_axioms(l).ok);
  EXPECT_TRUE(verify_axioms(l).canonical);
  ELattice nc(3, {0, 1, 1}, {0, 0, 0, 0, 1, 2, 0, 2, 1}, {0, 1, 2, 1, 1, 2, 2, 2, 1});
  EXPECT_FALSE(nc.is_canonical());
}

TEST(ELattice, MalformedTablesAreRejected) {
  EXPECT_THROW(ELattice(2, {0, 1}, {0, 0, 0}, {0, 1, 1, 1}), PreconditionError);
  EXPECT_THROW(ELattice(2, {0, 2}, {0, 0, 0, 1}, {0, 1, 1, 1}), PreconditionError);
  EXPECT_THROW(ELattice(0, {}, {}, {}), PreconditionError);
}

TEST(Inflate, ProducesCanonicalELattices) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t atoms = rng() % 4;
    Lattice base = trial % 2 ? Lattice::diamond(atoms) : Lattice::chain(atoms + 1);
    std::vector<std::size_t> sizes(base.size);
    for (auto& s : sizes) s = 1 + rng() % 3;
    auto l = inflate(base, sizes);
    auto r = verify_axioms(l);
    EXPECT_TRUE(r.ok) << r.failure;
    EXPECT_TRUE(r.canonical);
    auto fix = fix_lattice(l);
    EXPECT_EQ(fix.size(), base.size);
    EXPECT_EQ(class_sizes(l, fix), sizes);
  }
}

TEST(Lattice, FromOrderRejectsNonLattices) {
  // two minimal elements with no meet
  auto leq = [](std::size_t a, std::size_t b) { return a == b || b == 2; };
  EXPECT_THROW(Lattice::from_order(3, leq), PreconditionError);
}

TEST(QuotientMod, KernelQuotientIsFixLattice) {
  auto s = make_subgroup_elattice(catalog_group("D4"));
  auto q = quotient_mod(s.elattice, kernel_labels(s.elattice));
  auto fix = fix_lattice(s.elattice);
  ASSERT_EQ(q.size(), fix.size());
  for (std::size_t c = 0; c < q.size(); ++c)
    for (std::size_t d = 0; d < q.size(); ++d) {
      const auto pc = fix.position(q.to_fix[c]), pd = fix.position(q.to_fix[d]);
      EXPECT_EQ(q.to_fix[q.meet[c * q.size() + d]], fix.elements[fix.meet0[pc * fix.size() + pd]]);
      EXPECT_EQ(q.to_fix[q.join[c * q.size() + d]], fix.elements[fix.join0[pc * fix.size() + pd]]);
    }
}

TEST(QuotientMod, RejectsRelationsOutsideKernelOrFiner) {
  auto s = make_subgroup_elattice(catalog_group("S3"));
  std::vector<std::size_t> coarse(6, 0);
  EXPECT_THROW(quotient_mod(s.elattice, coarse), PreconditionError);
  std::vector<std::size_t> finer{0, 1, 2, 3, 4, 5};
  EXPECT_THROW(quotient_mod(s.elattice, finer), PreconditionError);
}

TEST(ELatticeIO, RoundTrip) {
  for (const char* name : {"S3", "D4", "C1"}) {
    auto s = make_subgroup_elattice(catalog_group(name));
    EXPECT_EQ(read_elattice(write_elattice(s.elattice)), s.elattice) << name;
  }
  ELattice one(1, {0}, {0}, {0});
  EXPECT_EQ(read_elattice(write_elattice(one)), one);
}

TEST(ELatticeIO, DiagnosticsNameLineAndField) {
  auto s = make_subgroup_elattice(catalog_group("S3"));
  std::string text = write_elattice(s.elattice);
  auto at = text.find("[4,4,4,4,4,5]");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 13, "[4,4,4,\"x\",4,5]");
  try {
    read_elattice(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "join[4][3]");
    EXPECT_EQ(e.position(), 17u);
  }
  try {
    read_elattice("{\"size\": 2, \"eps\": [0, 1]}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "meet");
  }
  try {
    read_elattice("{\n\"size\": 1,\n\"eps\": [0,\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "");
    EXPECT_GE(e.position(), 3u);
  }
  try {
    read_elattice("{\"size\": 1, \"eps\": [3], \"meet\": [[0]], \"join\": [[0]]}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "eps[0]");
  }
}
