#pragma once

// Action groupoids K |x M, the adjunction between |x and Bis, the comonad
// B = |x . Bis with counit ev and comultiplication delta, and the
// reconstruction of a groupoid as a quotient of B(G).
//
// Arrow (k, m) of K |x M has index k * |M| + m, source m and target k.m.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fingpd/bisection.hpp"

namespace fingpd {

struct ActionGroupoid {
  GroupoidPtr    groupoid;
  SlicedGroupHom action;

  Arrow arrow(Elem k, Point m) const {
    return k * static_cast<Arrow>(action.base.size()) + m;
  }
  Elem  group_part(Arrow a) const { return a / action.base.size(); }
  Point point_part(Arrow a) const { return a % action.base.size(); }
};

ActionGroupoid ltimes(const SlicedGroupHom& s);

// A morphism psi: K -> K' in the slice over Sym(M): act'(psi(k), x) = act(k, x).
struct SliceMorphism {
  SlicedGroupHom source;
  SlicedGroupHom target;
  GroupHom       hom;
};

ValidationReport validate_slice_morphism(const SliceMorphism& psi);
SliceMorphism    identity_slice(const SlicedGroupHom& s);
// g after f.
SliceMorphism compose(const SliceMorphism& g, const SliceMorphism& f);

// All slice morphisms source -> target in lexicographic order.
std::vector<SliceMorphism> enumerate_slice_morphisms(const SlicedGroupHom& source,
                                                     const SlicedGroupHom& target,
                                                     std::uint64_t cap = kDefaultSearchCap);

// (k, m) -> (psi(k), m). Throws NotSliceMorphism with a witness k.
GroupoidMorphism ltimes_on_morphism(const SliceMorphism&  psi,
                                    const ActionGroupoid& source,
                                    const ActionGroupoid& target);

// Bis applied to a groupoid morphism, viewed in the slice.
SliceMorphism bis_slice(const GroupoidMorphism& phi,
                        const BisectionGroup&   source,
                        const BisectionGroup&   target);

// f^(k) = (m -> f(k, m)). Throws InternalLawViolation if some f^(k) is not
// a bisection.
SliceMorphism curry_hom(const GroupoidMorphism& f,
                        const ActionGroupoid&   source,
                        const BisectionGroup&   target);

// psi^(k, m) = psi(k)(m).
GroupoidMorphism uncurry_hom(const SliceMorphism&  psi,
                             const ActionGroupoid& source,
                             const BisectionGroup& target);

// B(G) = Bis(G) |x M together with Bis(G).
struct BObject {
  GroupoidPtr    base_groupoid;
  BisPtr         bis;
  ActionGroupoid b;
};

BObject b_object(const GroupoidPtr& g, std::uint64_t cap = kDefaultSearchCap);

// ev: B(G) -> G, (s, m) -> s(m).
GroupoidMorphism ev_counit(const BObject& g);

// const: K -> Bis(K |x M), k -> (m -> (k, m)).
SliceMorphism const_unit(const ActionGroupoid& a, const BisectionGroup& bis);

// delta: B(G) -> B(B(G)), (s, m) -> (x -> (s, x), m). bb must be
// b_object(g.b.groupoid).
GroupoidMorphism comultiplication(const BObject& g, const BObject& bb);

// B(phi) = |x(Bis(phi)).
GroupoidMorphism b_on_morphism(const GroupoidMorphism& phi,
                               const BObject&          source,
                               const BObject&          target);

struct CheckOutcome {
  enum class Status { pass, fail, skipped };
  Status      status = Status::pass;
  std::string detail;

  static CheckOutcome passed(std::string d = {}) { return {Status::pass, std::move(d)}; }
  static CheckOutcome failed(std::string d) { return {Status::fail, std::move(d)}; }
  static CheckOutcome skipped(std::string d) { return {Status::skipped, std::move(d)}; }
  bool ok() const noexcept { return status != Status::fail; }
};

// The congruence R on B(G): (s, m) ~ (t, m) iff s(m) = t(m).
ArrowCongruence reconstruction_relation(const BObject& g);

// R is a congruence, the ev fibres are the R-classes, the quotient is
// effective and B(G)/R is isomorphic to G through the factorization of ev.
// Skipped when G has an arrow on no bisection.
CheckOutcome check_quotient_reconstruction(const BObject& g);

// Kernel of a morphism over id_M: the wide subgroupoid of arrows sent to
// units.
GroupoidMorphism groupoid_kernel(const GroupoidMorphism& phi);

// Bis(ker phi) and ker Bis(phi) coincide as sets of sections.
CheckOutcome check_bis_preserves_kernel(const GroupoidMorphism& phi,
                                        std::uint64_t cap = kDefaultSearchCap);

// For phi: A -> C and psi: B -> C, the fibre product P = A x_C B has
// Bis(P) = Bis(A) x_{Bis(C)} Bis(B) via the two projections.
CheckOutcome check_bis_preserves_pullback(const GroupoidMorphism& phi,
                                          const GroupoidMorphism& psi,
                                          std::uint64_t cap = kDefaultSearchCap);

// Fibre product A x_C B over id_M with its two projections.
struct FibreProduct {
  GroupoidPtr      groupoid;
  GroupoidMorphism to_a;
  GroupoidMorphism to_b;
};

FibreProduct fibre_product(const GroupoidMorphism& phi, const GroupoidMorphism& psi);

}  // namespace fingpd
