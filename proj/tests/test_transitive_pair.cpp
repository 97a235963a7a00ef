#include "doctest.h"
#include "oracle.hpp"

using namespace fingpd;

TEST_SUITE("transitive_pair") {
  TEST_CASE("pair validation") {
    for (auto const* n :
         {"Z2-pair-He", "S3-pair-He", "S3-pair-Stab", "augmented-B=Z2", "Z3-pair-He",
          "S3-regular-pair"}) {
      CAPTURE(n);
      CHECK(validate_pair(oracle::pair(n)).ok());
    }
    auto const triv = oracle::action("Z2-on-M2-trivial");
    TransitivePair const p{triv, 0, Subgroup::trivial(*triv.group)};
    auto const           r = validate_pair(p);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failed == "P1");

    auto const s3 = oracle::action("S3-on-M3");
    // [2,1,3] moves the basepoint.
    Elem const           t = *s3.group->find("[2,1,3]");
    TransitivePair const q{s3, 0, Subgroup::generated(*s3.group, std::span<const Elem>(&t, 1))};
    CHECK(validate_pair(q).failed == "P2");
  }

  TEST_CASE("kernels") {
    CHECK(pair_kernel(oracle::pair("S3-pair-He")).size() == 1);
    CHECK(pair_kernel(oracle::pair("S3-pair-Stab")).size() == 1);
    CHECK(pair_kernel(oracle::pair("Z3-pair-He")).size() == 1);
    auto const aug = oracle::pair("augmented-B=Z2");
    auto const k = pair_kernel(aug);
    CHECK(k.size() == 2);
    CHECK(k.members() == oracle::core(*aug.group(), aug.h));
    for (auto e : k.members()) {
      // The kernel is the B factor.
      CHECK(aug.group()->name(e).rfind("([1,2,3],", 0) == 0);
    }
  }

  TEST_CASE("pair morphisms") {
    auto const he = oracle::pair("S3-pair-He");
    auto const st = oracle::pair("S3-pair-Stab");
    auto const id = validate_pair_morphism(identity_pair_morphism(he));
    CHECK(id.ok());
    CHECK(id.is_isomorphism);
    PairMorphism const inc{he, st, identity_hom(he.group())};
    auto const         r = validate_pair_morphism(inc);
    CHECK(r.ok());
    CHECK_FALSE(r.is_isomorphism);
    PairMorphism const back{st, he, identity_hom(he.group())};
    CHECK(validate_pair_morphism(back).report.failed == "subgroup");
    CHECK_THROWS_AS(validate_pair_morphism(back).raise_if_failed(), ConditionViolated);
    // A homomorphism that forgets the action is not over Sym(M).
    PairMorphism const flat{he, he, GroupHom{he.group(), he.group(), std::vector<Elem>(6, 0)}};
    CHECK(validate_pair_morphism(flat).report.failed == "slice");
  }

  TEST_CASE("gauge groupoids") {
    struct Row {
      const char* pair;
      std::size_t cosets, lambda, arrows;
    };
    for (auto const& row : {Row{"Z2-pair-He", 2, 1, 4}, Row{"S3-pair-He", 6, 2, 18},
                            Row{"S3-pair-Stab", 3, 1, 9}, Row{"augmented-B=Z2", 3, 1, 9},
                            Row{"Z3-pair-He", 3, 1, 9}, Row{"S3-regular-pair", 6, 1, 36}}) {
      CAPTURE(row.pair);
      auto const p = oracle::pair(row.pair);
      auto const r = gauge_groupoid(p);
      CHECK(r.bundle.size() == row.cosets);
      CHECK(r.bundle.lambda_order() == row.lambda);
      CHECK(r.groupoid->size() == row.arrows);
      auto const m = p.base().size();
      CHECK(r.groupoid->size() == m * m * row.lambda);
      CHECK(validate_groupoid(*r.groupoid).ok());
      CHECK(is_locally_trivial(*r.groupoid));
      CHECK(vertex_group(*r.groupoid, p.basepoint)->size() == row.lambda);
    }
  }

  TEST_CASE("R of a stabilizer pair is the pair groupoid") {
    auto const r = gauge_groupoid(oracle::pair("S3-pair-Stab"));
    auto const homs = enumerate_morphisms(r.groupoid, oracle::groupoid("P3"));
    REQUIRE(homs.size() == 1);
    CHECK(homs.front().is_isomorphism());
  }

  TEST_CASE("R collapses the He pair onto the Stab pair") {
    auto const he = oracle::pair("S3-pair-He");
    auto const st = oracle::pair("S3-pair-Stab");
    auto const f =
        gauge_on_morphism(PairMorphism{he, st, identity_hom(he.group())}, gauge_groupoid(he),
                          gauge_groupoid(st));
    CHECK(validate_morphism(f).ok());
    std::map<Arrow, int> fibre;
    for (auto a : f.map) {
      ++fibre[a];
    }
    CHECK(fibre.size() == 9);
    for (auto const& [a, n] : fibre) {
      CHECK(n == 2);
    }
  }

  TEST_CASE("the canonical morphism a") {
    for (auto const* n :
         {"Z2-pair-He", "S3-pair-He", "S3-pair-Stab", "augmented-B=Z2", "Z3-pair-He"}) {
      CAPTURE(n);
      auto const p = oracle::pair(n);
      auto const r = gauge_groupoid(p);
      auto const bis = enumerate_bisections(r.groupoid);
      auto const a = a_canonical(r, *bis);
      CHECK(validate_hom(a).ok());
      CHECK(a.kernel() == pair_kernel(p));
      CHECK(a_canonical(r, *bis, alternative_section(r.bundle)).map == a.map);
      for (Elem k = 0; k < p.group()->size(); ++k) {
        CHECK(bis->beta_action().permutation(a(k)) == p.action.permutation(k));
      }
    }
    // For the stabilizer pair, a is the curry of the natural action.
    auto const st = oracle::pair("S3-pair-Stab");
    auto const r = gauge_groupoid(st);
    auto const a = a_canonical(r, *enumerate_bisections(r.groupoid));
    CHECK(a.is_bijective());
  }

  TEST_CASE("Bisbar") {
    auto const p3 = enumerate_bisections(oracle::groupoid("P3"));
    auto const bp = bisbar(*p3, 0);
    CHECK(validate_pair(bp).ok());
    CHECK(bp.h == stabilizer(bp.action, 0));

    auto const z2 = enumerate_bisections(oracle::groupoid("Z2-over-point"));
    auto const bz = bisbar(*z2, 0);
    CHECK(bz.group()->size() == 2);
    CHECK(bz.h.size() == 1);

    CHECK_THROWS_AS(bisbar(*enumerate_bisections(oracle::groupoid("U3")), 0), HypothesisNotMet);
    CHECK_THROWS_AS(bisbar(*enumerate_bisections(oracle::groupoid("P3-split")), 0),
                    HypothesisNotMet);
  }

  TEST_CASE("chi is an isomorphism on the bisbar domain") {
    for (auto const* n : {"P3", "Z2-over-point", "Z2-ltimes-M2", "gauge-S3-He", "S3-ltimes-M3"}) {
      CAPTURE(n);
      auto const g = oracle::groupoid(n);
      auto const bis = enumerate_bisections(g);
      auto const rbar = gauge_groupoid(bisbar(*bis, 0));
      auto const chi = chi_canonical(*bis, rbar);
      CHECK(validate_morphism(chi).ok());
      CHECK(chi.is_isomorphism());
      CHECK(rbar.groupoid->size() == g->size());
    }
  }

  TEST_CASE("bundle automorphisms match bisections") {
    for (auto const* n : {"Z2-pair-He", "S3-pair-Stab", "S3-pair-He"}) {
      CAPTURE(n);
      auto const r = gauge_groupoid(oracle::pair(n));
      auto const bis = enumerate_bisections(r.groupoid);
      auto const auts = bundle_automorphisms(r.bundle, kDefaultSearchCap);
      CHECK(auts.size() == bis->size());
      std::set<Elem> images;
      for (auto const& f : auts) {
        auto const s = bis->index_of(automorphism_to_bisection(f, r).section);
        REQUIRE(s);
        images.insert(*s);
      }
      CHECK(images.size() == auts.size());
    }
  }

  TEST_CASE("coreflection") {
    auto const p3 = enumerate_bisections(oracle::groupoid("P3"));
    auto const e = coreflector(*p3, 0);
    CHECK(e.via_gauge);
    CHECK(e.counit.is_isomorphism());

    auto const split = oracle::groupoid("P3-split");
    auto const c = coreflector(*enumerate_bisections(split), 0);
    CHECK_FALSE(c.via_gauge);
    CHECK(c.groupoid->base() == split->base());
    CHECK(c.groupoid->size() < split->size());
    CHECK(c.counit.is_injective());
    CHECK(validate_morphism(c.counit).ok());
  }
}
