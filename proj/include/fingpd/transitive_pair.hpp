#pragma once

// Transitive pairs (theta, H): a transitive action of K on M and a subgroup
// H normal in the stabilizer of a basepoint. The gauge construction R, the
// augmented bisection functor Bisbar, the canonical morphisms a and chi, and
// the coreflection onto groupoids with a bisection through every arrow.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fingpd/action_groupoid.hpp"

namespace fingpd {

struct TransitivePair {
  GroupAction action;
  Point       basepoint = 0;
  Subgroup    h;

  const GroupPtr& group() const noexcept { return action.group; }
  const Base&     base() const noexcept { return action.base; }
};

// "P1": transitivity, witness an unreached point. "P2": H inside Stab_m and
// normal there, witness a conjugation. Regularity and co-Banach conditions
// have no finite content and always hold.
ValidationReport validate_pair(const TransitivePair& p);

// Largest subgroup of H normal in K.
Subgroup pair_kernel(const TransitivePair& p);

struct PairMorphism {
  TransitivePair source;
  TransitivePair target;
  GroupHom       hom;
};

struct PairMorphismReport {
  ValidationReport report;  // failed is "hom", "basepoint", "subgroup" or "slice"
  bool             is_isomorphism = false;

  bool ok() const noexcept { return report.ok(); }
  // Throws ConditionViolated.
  void raise_if_failed() const;
};

PairMorphismReport validate_pair_morphism(const PairMorphism& f);
PairMorphism       identity_pair_morphism(const TransitivePair& p);
// g after f.
PairMorphism compose(const PairMorphism& g, const PairMorphism& f);

std::vector<PairMorphism> enumerate_pair_morphisms(const TransitivePair& source,
                                                   const TransitivePair& target,
                                                   std::uint64_t cap = kDefaultSearchCap);

// pi: K/H -> M with the free right action of Lambda = Stab_m / H.
struct PrincipalBundle {
  TransitivePair             pair;
  CosetSpace                 total;
  Subgroup                   stab;
  QuotientGroup              lambda;
  std::vector<Point>         projection;  // coset -> point
  std::vector<std::uint32_t> right;       // right[p * |Lambda| + l] = p.l
  std::vector<Elem>          delta;       // delta[p * N + q] = l with p.l = q, else kNone
  std::vector<std::vector<std::uint32_t>> fibre;  // ascending cosets over each point

  std::size_t   size() const noexcept { return total.size(); }
  std::size_t   lambda_order() const noexcept { return lambda.group->size(); }
  std::uint32_t act_right(std::uint32_t p, Elem l) const { return right[p * lambda_order() + l]; }
  Elem          delta_of(std::uint32_t p, std::uint32_t q) const { return delta[p * size() + q]; }
  // k . (gH) = (kg)H.
  std::uint32_t act_left(Elem k, std::uint32_t p) const;
  // Minimal coset over x.
  std::uint32_t section(Point x) const { return fibre[x].front(); }
  std::string   coset_name(std::uint32_t p) const;
};

// Throws AxiomViolation for invalid pairs and InternalLawViolation if the
// bundle axioms fail.
PrincipalBundle build_bundle(const TransitivePair& p);

// Arrows are diagonal Lambda-orbits <p, q> keyed by their lexicographically
// least representative; <p, q> goes from pi(q) to pi(p).
struct GaugeGroupoid {
  PrincipalBundle                                      bundle;
  GroupoidPtr                                          groupoid;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps;
  std::vector<Arrow>                                   orbit_of;  // [p * N + q]

  Arrow arrow(std::uint32_t p, std::uint32_t q) const {
    return orbit_of[p * bundle.size() + q];
  }
};

GaugeGroupoid gauge_groupoid(const TransitivePair& p);

// <kH, gH> -> <f(k)H', f(g)H'>. Throws InternalLawViolation if the value
// depends on representatives.
GroupoidMorphism gauge_on_morphism(const PairMorphism&  f,
                                   const GaugeGroupoid& source,
                                   const GaugeGroupoid& target);

// a(k) = (x -> <k.s(x), s(x)>) for a section s of pi (canonical section when
// omitted).
GroupHom a_canonical(const GaugeGroupoid&                     r,
                     const BisectionGroup&                    bis,
                     std::optional<std::vector<std::uint32_t>> section = std::nullopt);

// Largest coset over each point, a section distinct from the canonical one
// whenever Lambda or H is nontrivial.
std::vector<std::uint32_t> alternative_section(const PrincipalBundle& b);

// Bisbar(G) = (beta . ev action of Bis(G) on M, Bis_m(G)). Throws
// HypothesisNotMet unless G is locally trivial with every arrow on a
// bisection.
TransitivePair bisbar(const BisectionGroup& bis, Point m);
bool           in_bisbar_domain(const BisectionGroup& bis);

// Bisbar applied to psi: G -> G'.
PairMorphism bisbar_on_morphism(const GroupoidMorphism& psi,
                                const BisectionGroup&   source,
                                const BisectionGroup&   target,
                                Point                   m);

// a_p viewed as a pair morphism p -> Bisbar(R(p)).
PairMorphism a_pair_morphism(const TransitivePair& p,
                             const GaugeGroupoid&  r,
                             const BisectionGroup& bis);

// chi: R(Bisbar(G)) -> G, <s Bis_m, t Bis_m> -> s(m) . t(m)^{-1}.
// rbar must be gauge_groupoid(bisbar(bis, m)).
GroupoidMorphism chi_canonical(const BisectionGroup& bis, const GaugeGroupoid& rbar);

// Lambda-equivariant bijections of K/H covering an admissible bijection of
// M, found by scanning every permutation of K/H. Each is listed as its
// coset table.
std::vector<std::vector<std::uint32_t>> bundle_automorphisms(const PrincipalBundle& b,
                                                             std::uint64_t          cap);

// f -> (x -> <f(s(x)), s(x)>).
Bisection automorphism_to_bisection(const std::vector<std::uint32_t>& f,
                                    const GaugeGroupoid&              r);

// E(G) with its counit into G. When Bisbar(G) is a transitive pair, E(G) is
// R(Bisbar(G)) and the counit is chi. Otherwise E(G) is the wide subgroupoid
// of arrows lying on bisections and the counit is its inclusion.
struct Coreflection {
  GroupoidPtr      groupoid;
  GroupoidMorphism counit;
  bool             via_gauge = false;
};

Coreflection coreflector(const BisectionGroup& bis, Point m);

}  // namespace fingpd
