#include "doctest.h"
#include "oracle.hpp"

using namespace fingpd;

TEST_SUITE("action_groupoid") {
  TEST_CASE("action groupoids") {
    auto const sw = ltimes(oracle::action("Z2-on-M2-swap"));
    CHECK(sw.groupoid->size() == 4);
    CHECK(validate_groupoid(*sw.groupoid).ok());
    CHECK(is_locally_trivial(*sw.groupoid));
    auto const s3 = ltimes(oracle::action("S3-on-M3"));
    CHECK(s3.groupoid->size() == 18);
    CHECK(validate_groupoid(*s3.groupoid).ok());
    CHECK(is_locally_trivial(*s3.groupoid));
    // Arrow (k, m) goes from m to k.m.
    for (Arrow a = 0; a < s3.groupoid->size(); ++a) {
      CHECK(s3.groupoid->src(a) == s3.point_part(a));
      CHECK(s3.groupoid->tgt(a) == s3.action.act(s3.group_part(a), s3.point_part(a)));
    }
  }

  TEST_CASE("slice morphisms") {
    auto const z3 = oracle::action("Z3-on-M3");
    auto const s3 = oracle::action("S3-on-M3");
    auto const homs = enumerate_slice_morphisms(z3, s3);
    REQUIRE(homs.size() == 1);
    CHECK(validate_slice_morphism(homs.front()).ok());
    auto const f = ltimes_on_morphism(homs.front(), ltimes(z3), ltimes(s3));
    CHECK(validate_morphism(f).ok());
    CHECK(f.is_injective());

    // Collapsing S3 onto the trivial group of the trivial action is not
    // over Sym(M).
    auto const triv = trivial_action(trivial_group(), s3.base);
    SliceMorphism const bad{s3, triv, GroupHom{s3.group, triv.group, std::vector<Elem>(6, 0)}};
    CHECK_FALSE(validate_slice_morphism(bad).ok());
    CHECK_THROWS_AS(ltimes_on_morphism(bad, ltimes(s3), ltimes(triv)), NotSliceMorphism);
  }

  TEST_CASE("curry and uncurry are inverse") {
    auto const a = oracle::action("Z2-on-M2-swap");
    auto const lt = ltimes(a);
    auto const p2 = oracle::groupoid("P2");
    auto const bis = enumerate_bisections(p2);
    auto const homs = enumerate_morphisms(lt.groupoid, p2);
    REQUIRE(homs.size() == 1);
    auto const c = curry_hom(homs.front(), lt, *bis);
    CHECK(c.hom.is_bijective());
    CHECK(uncurry_hom(c, lt, *bis).map == homs.front().map);
  }

  TEST_CASE("the adjoint of the identity of Bis(G) is ev") {
    auto const bo = b_object(oracle::groupoid("P3"));
    auto const id = SliceMorphism{bo.bis->beta_action(), bo.bis->beta_action(),
                                  identity_hom(bo.bis->group())};
    CHECK(uncurry_hom(id, bo.b, *bo.bis).map == ev_counit(bo).map);
  }

  TEST_CASE("B(P3) and the comultiplication") {
    auto const bo = b_object(oracle::groupoid("P3"));
    CHECK(bo.b.groupoid->size() == 18);
    auto const bb = b_object(bo.b.groupoid);
    CHECK(bb.bis->size() == 48);
    auto const d = comultiplication(bo, bb);
    CHECK(validate_morphism(d).ok());
    CHECK(d.is_injective());
    auto const back = compose(ev_counit(bb), d);
    CHECK(back.map == identity_morphism(bo.b.groupoid).map);
  }

  TEST_CASE("the comultiplication of a group over a point hits constant sections") {
    auto const bo = b_object(oracle::groupoid("Z2-over-point"));
    auto const bb = b_object(bo.b.groupoid);
    auto const d = comultiplication(bo, bb);
    CHECK(d.is_injective());
  }

  TEST_CASE("quotient reconstruction of P3") {
    auto const bo = b_object(oracle::groupoid("P3"));
    auto const r = reconstruction_relation(bo);
    CHECK(check_congruence(r).ok());
    auto const q = quotient_groupoid(r);
    CHECK(q.groupoid->size() == 9);
    std::map<Arrow, std::size_t> fibre;
    for (auto a : ev_counit(bo).map) {
      ++fibre[a];
    }
    CHECK(fibre.size() == 9);
    for (auto const& [a, n] : fibre) {
      CHECK(n == 2);
    }
    CHECK(check_quotient_reconstruction(bo).status == CheckOutcome::Status::pass);
  }

  TEST_CASE("quotient reconstruction is skipped without full coverage") {
    auto const bo = b_object(oracle::groupoid("P3-split"));
    CHECK(check_quotient_reconstruction(bo).status == CheckOutcome::Status::skipped);
  }

  TEST_CASE("kernels and fibre products") {
    auto const g = oracle::groupoid("Z2-bundle-M2");
    auto const to_unit = enumerate_morphisms(g, oracle::groupoid("U2")).front();
    auto const k = groupoid_kernel(to_unit);
    CHECK(k.source->size() == 4);
    CHECK(check_bis_preserves_kernel(to_unit).status == CheckOutcome::Status::pass);

    auto const s3 = oracle::groupoid("S3-ltimes-M3");
    auto const p3 = oracle::groupoid("P3");
    auto const f = enumerate_morphisms(s3, p3).front();
    auto const fp = fibre_product(f, f);
    CHECK(validate_groupoid(*fp.groupoid).ok());
    // Over P3 every hom-set of S3 x| M3 has two arrows: 2 * 2 per pair.
    CHECK(fp.groupoid->size() == 36);
    CHECK(check_bis_preserves_pullback(f, f).status == CheckOutcome::Status::pass);
  }
}
