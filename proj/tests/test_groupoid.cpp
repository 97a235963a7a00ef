#include "doctest.h"
#include "oracle.hpp"

using namespace fingpd;

namespace {

Arrow ar(const GroupoidPtr& g, const std::string& name) {
  auto const a = g->find(name);
  REQUIRE(a);
  return *a;
}

}  // namespace

TEST_SUITE("groupoid") {
  TEST_CASE("fixture groupoids are valid") {
    for (auto const& n : fixture_names()) {
      auto const x = generate_fixture(n);
      if (x.kind == InstanceKind::groupoid) {
        CAPTURE(n);
        CHECK(validate_groupoid(*x.groupoid).ok());
      }
    }
  }

  TEST_CASE("standard groupoids") {
    auto const m3 = Base::numbered(3);
    CHECK(pair_groupoid(m3)->size() == 9);
    CHECK(unit_groupoid(m3)->size() == 3);
    auto const z2 = group_over_point(*cyclic_group(2));
    CHECK(z2->size() == 2);
    CHECK(vertex_group(*z2, 0)->size() == 2);
    CHECK(vertex_group(*pair_groupoid(m3), 1)->size() == 1);
  }

  TEST_CASE("composition is h then g") {
    auto const p3 = oracle::groupoid("P3");
    // (a,b) goes from b to a.
    auto const g = ar(p3, "(3,2)");
    auto const h = ar(p3, "(2,1)");
    CHECK(p3->compose(g, h) == ar(p3, "(3,1)"));
    CHECK(p3->compose(h, g) == kNone);
    CHECK(p3->src(h) == 0);
    CHECK(p3->tgt(h) == 1);
  }

  TEST_CASE("a redefined composite breaks src/tgt") {
    auto const p3 = oracle::groupoid("P3");
    auto       comp = p3->comp_table();
    auto const n = p3->size();
    // (1,2).(2,3) should be (1,3); redefine it as (2,2).
    comp[ar(p3, "(1,2)") * n + ar(p3, "(2,3)")] = ar(p3, "(2,2)");
    std::vector<std::string> names;
    for (Arrow a = 0; a < n; ++a) {
      names.push_back(p3->name(a));
    }
    FiniteGroupoid bad(p3->base(), names, p3->src_table(), p3->tgt_table(), comp,
                       p3->unit_table(), p3->inv_table());
    auto const r = validate_groupoid(bad);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failed == "src/tgt");
  }

  TEST_CASE("local triviality") {
    CHECK(is_locally_trivial(*oracle::groupoid("P3")));
    CHECK_FALSE(is_locally_trivial(*oracle::groupoid("U3")));
    CHECK(is_locally_trivial(*oracle::groupoid("Z2-ltimes-M2")));
    CHECK(is_locally_trivial(*oracle::groupoid("S3-ltimes-M3")));
    CHECK(is_locally_trivial(*oracle::groupoid("P3-split")));
  }

  TEST_CASE("morphism enumeration agrees with brute force") {
    std::vector<const char*> const small = {"P2", "U2", "Z2-ltimes-M2", "Z2-bundle-M2"};
    for (auto const* a : small) {
      for (auto const* b : small) {
        CAPTURE(a);
        CAPTURE(b);
        auto const ga = oracle::groupoid(a);
        auto const gb = oracle::groupoid(b);
        auto const homs = enumerate_morphisms(ga, gb);
        CHECK(homs.size() == oracle::groupoid_hom_count(*ga, *gb));
        for (auto const& h : homs) {
          CHECK(validate_morphism(h).ok());
        }
      }
    }
    CHECK(enumerate_morphisms(oracle::groupoid("Z2-ltimes-M2"), oracle::groupoid("P2")).size() == 1);
    CHECK(enumerate_morphisms(oracle::groupoid("U3"), oracle::groupoid("P3")).size() == 1);
    CHECK(enumerate_morphisms(oracle::groupoid("Z2-over-point"), oracle::groupoid("Z2-over-point"))
              .size()
          == 2);
  }

  TEST_CASE("identity and composite morphisms") {
    auto const p3 = oracle::groupoid("P3");
    auto const id = identity_morphism(p3);
    CHECK(validate_morphism(id).ok());
    CHECK(compose(id, id).map == id.map);
    CHECK(id.is_isomorphism());
    CHECK(id.inverse().map == id.map);
  }

  TEST_CASE("wide subgroupoids must be closed") {
    auto const         p3 = oracle::groupoid("P3");
    std::vector<Arrow> arrows(p3->unit_table().begin(), p3->unit_table().end());
    arrows.push_back(ar(p3, "(2,1)"));
    CHECK_THROWS_AS(wide_subgroupoid(p3, arrows), ValidationError);
    arrows.push_back(ar(p3, "(1,2)"));
    auto const inc = wide_subgroupoid(p3, arrows);
    CHECK(inc.source->size() == 5);
    CHECK(validate_morphism(inc).ok());
    CHECK(inc.is_injective());
  }

  TEST_CASE("congruences and quotients") {
    auto const p3 = oracle::groupoid("P3");
    auto const id = ArrowCongruence::identity(p3);
    CHECK(check_congruence(id).ok());
    auto const q = quotient_groupoid(id);
    CHECK(q.groupoid->size() == 9);
    CHECK(check_effective_quotient(id, q.projection));

    // Merging arrows with different endpoints is rejected.
    std::pair<Arrow, Arrow> const bad[] = {{ar(p3, "(1,1)"), ar(p3, "(2,1)")}};
    auto const                    r = ArrowCongruence::from_pairs(p3, bad);
    CHECK_FALSE(check_congruence(r).ok());
    CHECK_THROWS_AS(quotient_groupoid(r), NotACongruence);
  }

  TEST_CASE("the loops of Z2 x M2 collapse to the unit groupoid") {
    auto const g = oracle::groupoid("Z2-bundle-M2");
    std::vector<std::pair<Arrow, Arrow>> pairs;
    for (Arrow a = 0; a < g->size(); ++a) {
      pairs.emplace_back(a, g->unit(g->src(a)));
    }
    auto const r = ArrowCongruence::from_pairs(g, pairs);
    REQUIRE(check_congruence(r).ok());
    auto const q = quotient_groupoid(r);
    CHECK(q.groupoid->size() == 2);
    auto const to_unit = enumerate_morphisms(g, oracle::groupoid("U2"));
    REQUIRE(to_unit.size() == 1);
    auto const h = factor_through_quotient(q, r, to_unit.front());
    REQUIRE(h);
    CHECK(h->is_isomorphism());
    // The identity of g does not coequalize r.
    CHECK_FALSE(factor_through_quotient(q, r, identity_morphism(g)));
  }

  TEST_CASE("effectiveness fails for a projection coarser than the relation") {
    auto const g = oracle::groupoid("Z2-bundle-M2");
    auto const id = ArrowCongruence::identity(g);
    auto const to_unit = enumerate_morphisms(g, oracle::groupoid("U2"));
    REQUIRE(to_unit.size() == 1);
    CHECK_FALSE(check_effective_quotient(id, to_unit.front()));
  }
}
