#include "doctest.h"
#include "oracle.hpp"

using namespace fingpd;

namespace {

Elem el(const GroupPtr& g, const std::string& name) {
  auto const e = g->find(name);
  REQUIRE(e);
  return *e;
}

std::vector<std::string> names(const GroupPtr& g, const Subgroup& h) {
  std::vector<std::string> out;
  for (auto e : h.members()) {
    out.push_back(g->name(e));
  }
  return out;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("fixture groups satisfy the axioms") {
    for (auto const* n : {"Z2", "Z3", "S3", "Z2xZ2", "S3xZ2"}) {
      CAPTURE(n);
      CHECK(validate_group(*oracle::group(n)).ok());
    }
  }

  TEST_CASE("a table with s*s = s has no inverse") {
    FiniteGroup bad({"e", "s"}, {0, 1, 1, 1}, 0, {0, 0});
    auto const  r = validate_group(bad);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failed == "inverse");
    CHECK_THROWS_AS(r.raise_if_failed(), AxiomViolation);
  }

  TEST_CASE("stabilizers") {
    auto const s3 = oracle::action("S3-on-M3");
    CHECK(names(s3.group, stabilizer(s3, 0)) == std::vector<std::string>{"[1,2,3]", "[1,3,2]"});
    auto const sw = oracle::action("Z2-on-M2-swap");
    CHECK(stabilizer(sw, 0).size() == 1);
    auto const triv = oracle::action("Z3-on-M3-trivial");
    CHECK(stabilizer(triv, 2).size() == 3);
  }

  TEST_CASE("normal core agrees with the intersection of conjugates") {
    auto const s3 = oracle::group("S3");
    Elem const t = el(s3, "[1,3,2]");
    auto const h = Subgroup::generated(*s3, std::span<const Elem>(&t, 1));
    CHECK(normal_core(*s3, h).size() == 1);
    CHECK(normal_core(*s3, Subgroup::whole(*s3)).size() == 6);

    auto const v = oracle::group("Z2xZ2");
    Elem const x = el(v, "(0,1)");
    auto const hv = Subgroup::generated(*v, std::span<const Elem>(&x, 1));
    CHECK(normal_core(*v, hv) == hv);

    // Every subgroup of S3 x Z2 generated by one element.
    auto const g = oracle::group("S3xZ2");
    for (Elem a = 0; a < g->size(); ++a) {
      auto const h2 = Subgroup::generated(*g, std::span<const Elem>(&a, 1));
      auto const c = normal_core(*g, h2);
      CHECK(c.members() == oracle::core(*g, h2));
      CHECK(is_normal(*g, c));
      CHECK(c.subset_of(h2));
      CHECK((c == h2) == is_normal(*g, h2));
    }
  }

  TEST_CASE("cosets") {
    auto const s3 = oracle::action("S3-on-M3");
    CHECK(coset_space(s3.group, stabilizer(s3, 0)).size() == 3);
    CHECK(coset_space(s3.group, Subgroup::trivial(*s3.group)).size() == 6);
    CHECK(coset_space(s3.group, Subgroup::whole(*s3.group)).size() == 1);
  }

  TEST_CASE("transitivity") {
    CHECK(check_transitivity(oracle::action("S3-on-M3"), 3));
    CHECK_FALSE(check_transitivity(oracle::action("Z2-on-M2-trivial"), 1));
    // The orbit of (1,2) under the swap is {(1,2),(2,1)}: all distinct pairs.
    CHECK(check_transitivity(oracle::action("Z2-on-M2-swap"), 2));
    CHECK_FALSE(check_transitivity(oracle::action("Z3-on-M3"), 2));
    CHECK_FALSE(check_transitivity(oracle::action("Z2-on-M2-swap"), 3));
  }

  TEST_CASE("curry and uncurry") {
    for (auto const* n : {"Z2-on-M2-swap", "S3-on-M3", "Z3-on-M3-trivial", "S3xZ2-on-M3"}) {
      CAPTURE(n);
      auto const a = oracle::action(n);
      auto const sym = symmetric_group(a.base);
      auto const f = curry_action(a, sym);
      CHECK(validate_hom(f).ok());
      auto const back = uncurry_action(f, sym, a.base);
      CHECK(back.table == a.table);
      // Injective iff the kernel is trivial iff the action is faithful.
      bool faithful = true;
      for (Elem k = 1; k < a.group->size() && faithful; ++k) {
        faithful = k == a.group->identity() || a.permutation(k) != a.permutation(a.group->identity());
      }
      CHECK(f.is_injective() == faithful);
    }
    CHECK(curry_action(oracle::action("S3-on-M3")).is_bijective());
    CHECK(curry_action(oracle::action("Z2-on-M2-swap")).is_bijective());
    auto const triv = curry_action(oracle::action("Z3-on-M3-trivial"));
    CHECK(triv.kernel().size() == 3);
  }

  TEST_CASE("homomorphism enumeration agrees with brute force") {
    std::vector<const char*> const gs = {"Z2", "Z3", "S3", "Z2xZ2"};
    for (auto const* a : gs) {
      for (auto const* b : gs) {
        CAPTURE(a);
        CAPTURE(b);
        auto const homs = enumerate_group_homs(oracle::group(a), oracle::group(b));
        CHECK(homs.size() == oracle::group_hom_count(*oracle::group(a), *oracle::group(b)));
        for (auto const& h : homs) {
          CHECK(validate_hom(h).ok());
        }
      }
    }
    // Frozen: |Hom(S3, S3)| = 10, |Hom(Z2xZ2, S3)| = 10.
    CHECK(enumerate_group_homs(oracle::group("S3"), oracle::group("S3")).size() == 10);
    CHECK(enumerate_group_homs(oracle::group("Z2xZ2"), oracle::group("S3")).size() == 10);
  }

  TEST_CASE("quotient of a stabilizer") {
    auto const s3 = oracle::action("S3-on-M3");
    auto const st = stabilizer(s3, 0);
    auto const q = quotient_group(*s3.group, st, Subgroup::trivial(*s3.group));
    CHECK(q.group->size() == 2);
    auto const q1 = quotient_group(*s3.group, st, st);
    CHECK(q1.group->size() == 1);
    CHECK_THROWS_AS(Subgroup::from_members(*s3.group, {0, 3}), NotASubgroup);
  }
}
