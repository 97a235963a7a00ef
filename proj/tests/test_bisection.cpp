#include "doctest.h"
#include "oracle.hpp"

using namespace fingpd;

TEST_SUITE("bisection") {
  TEST_CASE("enumeration agrees with the brute-force oracle on every fixture") {
    for (auto const& n : fixture_names()) {
      auto const x = generate_fixture(n);
      if (x.kind != InstanceKind::groupoid) {
        continue;
      }
      CAPTURE(n);
      auto const bis = enumerate_bisections(x.groupoid);
      auto const expected = oracle::bisections(*x.groupoid);
      REQUIRE(bis->size() == expected.size());
      for (std::size_t s = 0; s < expected.size(); ++s) {
        auto const sec = bis->section(static_cast<Elem>(s));
        CHECK(std::vector<Arrow>(sec.begin(), sec.end()) == expected[s]);
      }
      CHECK(validate_group(*bis->group()).ok());
    }
  }

  TEST_CASE("frozen orders") {
    auto order = [](const char* n) { return enumerate_bisections(oracle::groupoid(n))->size(); };
    CHECK(order("P3") == 6);
    CHECK(order("U3") == 1);
    CHECK(order("Z2-ltimes-M2") == 2);
    CHECK(order("S3-ltimes-M3") == 48);
    CHECK(order("gauge-S3-He") == 48);
    CHECK(order("Z3-bundle-M3") == 27);
    CHECK(order("P3-split") == 2);
  }

  TEST_CASE("trivial actions give |K|^|M| bisections") {
    for (auto const* n : {"Z2-on-M2-trivial", "Z3-on-M3-trivial"}) {
      CAPTURE(n);
      auto const a = oracle::action(n);
      auto const lt = ltimes(a);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < a.base.size(); ++i) {
        expected *= a.group->size();
      }
      CHECK(enumerate_bisections(lt.groupoid)->size() == expected);
    }
  }

  TEST_CASE("beta_star of P3 is an isomorphism onto Sym(3)") {
    auto const bis = enumerate_bisections(oracle::groupoid("P3"));
    auto const sym = symmetric_group(Base::numbered(3));
    auto const f = curry_action(beta_star(*bis), sym);
    CHECK(validate_hom(f).ok());
    CHECK(f.is_bijective());
  }

  TEST_CASE("beta_star of Z2 x| M2 hits the identity and the swap") {
    auto const bis = enumerate_bisections(oracle::groupoid("Z2-ltimes-M2"));
    auto const f = curry_action(beta_star(*bis));
    CHECK(f.is_bijective());
  }

  TEST_CASE("beta_star of a group over a point is trivial") {
    auto const bis = enumerate_bisections(oracle::groupoid("S3-over-point"));
    CHECK(bis->size() == 6);
    CHECK(curry_action(beta_star(*bis)).kernel().size() == 6);
  }

  TEST_CASE("star and inverse on explicit sections") {
    auto const g = oracle::groupoid("P3");
    auto const bis = enumerate_bisections(g);
    for (Elem s = 0; s < bis->size(); ++s) {
      auto const e = bis->element(s);
      auto const u = unit_bisection(g);
      CHECK(star(e, u).section == e.section);
      CHECK(star(e, invert(e)).section == u.section);
      CHECK(is_bisection(*g, invert(e).section));
    }
    auto const other = unit_bisection(oracle::groupoid("P3"));
    CHECK_THROWS_AS(star(bis->element(0), other), MixedGroupoids);
  }

  TEST_CASE("Bis on morphisms") {
    auto const a = oracle::groupoid("U3");
    auto const b = oracle::groupoid("P3");
    auto const ba = enumerate_bisections(a);
    auto const bb = enumerate_bisections(b);
    auto const inc = enumerate_morphisms(a, b).front();
    auto const f = bis_on_morphism(inc, *ba, *bb);
    CHECK(validate_hom(f).ok());
    CHECK(bis_on_morphism(identity_morphism(b), *bb, *bb).map == identity_hom(bb->group()).map);
  }

  TEST_CASE("Bis(ev) for P3 is surjective") {
    auto const bo = b_object(oracle::groupoid("P3"));
    auto const bb = enumerate_bisections(bo.b.groupoid);
    CHECK(bb->size() == 48);
    auto const f = bis_on_morphism(ev_counit(bo), *bb, *bo.bis);
    CHECK(f.is_surjective());
    CHECK(validate_hom(f).ok());
  }

  TEST_CASE("stabilizer subgroups") {
    {
      auto const bis = enumerate_bisections(oracle::groupoid("P3"));
      auto const st = stabilizer_subgroups(*bis, 0);
      CHECK(st.loop.size() == 2);
      CHECK(st.bis.size() == 2);
    }
    {
      auto const bis = enumerate_bisections(oracle::groupoid("Z2-over-point"));
      auto const st = stabilizer_subgroups(*bis, 0);
      CHECK(st.loop.size() == 2);
      CHECK(st.bis.size() == 1);
    }
    {
      auto const bis = enumerate_bisections(oracle::groupoid("gauge-S3-He"));
      auto const st = stabilizer_subgroups(*bis, 0);
      CHECK(st.loop.size() / st.bis.size() == 2);
    }
    auto const bis = enumerate_bisections(oracle::groupoid("P3"));
    CHECK_THROWS_AS(stabilizer_subgroups(*bis, 7), PointNotInBase);
  }

  TEST_CASE("arrows covered by bisections") {
    CHECK(has_bisection_through_each_arrow(*enumerate_bisections(oracle::groupoid("P3"))));
    auto const split = enumerate_bisections(oracle::groupoid("P3-split"));
    CHECK_FALSE(has_bisection_through_each_arrow(*split));
    auto const covered = covered_arrows(*split);
    CHECK(std::count(covered.begin(), covered.end(), true) == 5);
  }

  TEST_CASE("the search cap is enforced") {
    auto const bo = b_object(oracle::groupoid("P3"));
    CHECK_THROWS_AS(enumerate_bisections(bo.b.groupoid, 10), CapExceeded);
  }

  TEST_CASE("large bisection groups are computed, not tabulated") {
    auto const bo = b_object(oracle::groupoid("P3"));
    auto const bb = b_object(bo.b.groupoid);
    auto const bbb = enumerate_bisections(bb.b.groupoid);
    CHECK(bbb->size() == 24576);
    CHECK_FALSE(bbb->group()->tabulated());
    // Product formula for transitive groupoids: |M|! |hom-set|^|M|.
    CHECK(bbb->size() == 6 * 16 * 16 * 16);
  }
}
