#include "fingpd/action_groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fingpd {

ActionGroupoid ltimes(const SlicedGroupHom& s) {
  auto const         m = static_cast<Arrow>(s.base.size());
  auto const         k = static_cast<Arrow>(s.group->size());
  std::vector<Point> src(k * m), tgt(k * m);
  std::vector<Arrow> inv(k * m), unit(m);
  for (Elem g = 0; g < k; ++g) {
    for (Point x = 0; x < m; ++x) {
      Arrow const a = g * m + x;
      src[a] = x;
      tgt[a] = s.act(g, x);
      inv[a] = s.group->inv(g) * m + s.act(g, x);
    }
  }
  for (Point x = 0; x < m; ++x) {
    unit[x] = s.group->identity() * m + x;
  }
  auto group = s.group;
  auto base = s.base;
  // (k, k'.x) . (k', x) = (kk', x).
  auto compose = [group, m](Arrow a, Arrow b) {
    return group->mul(a / m, b / m) * m + b % m;
  };
  auto names = [group, base, m](Arrow a) {
    return "(" + group->name(a / m) + "," + base.name(a % m) + ")";
  };
  auto g = std::make_shared<const FiniteGroupoid>(s.base, names, std::move(src),
                                                  std::move(tgt), compose, std::move(unit),
                                                  std::move(inv));
  return ActionGroupoid{std::move(g), s};
}

////////////////////////////////////////////////////////////////////////
// Slice morphisms
////////////////////////////////////////////////////////////////////////

ValidationReport validate_slice_morphism(const SliceMorphism& psi) {
  if (psi.source.base != psi.target.base) {
    return ValidationReport::fail("slice", "actions on different bases");
  }
  if (auto r = validate_hom(psi.hom); !r) {
    return r;
  }
  auto const m = psi.source.base.size();
  for (Elem k = 0; k < psi.source.group->size(); ++k) {
    for (Point x = 0; x < m; ++x) {
      if (psi.target.act(psi.hom(k), x) != psi.source.act(k, x)) {
        return ValidationReport::fail("slice", psi.source.group->name(k));
      }
    }
  }
  return ValidationReport::pass();
}

SliceMorphism identity_slice(const SlicedGroupHom& s) {
  return SliceMorphism{s, s, identity_hom(s.group)};
}

SliceMorphism compose(const SliceMorphism& g, const SliceMorphism& f) {
  return SliceMorphism{f.source, g.target, compose(g.hom, f.hom)};
}

std::vector<SliceMorphism> enumerate_slice_morphisms(const SlicedGroupHom& source,
                                                     const SlicedGroupHom& target,
                                                     std::uint64_t         cap) {
  if (source.base != target.base) {
    throw ValidationError("slice morphisms need a common base");
  }
  std::map<Perm, std::vector<Elem>> by_perm;
  for (Elem k = 0; k < target.group->size(); ++k) {
    by_perm[target.permutation(k)].push_back(k);
  }
  std::vector<std::vector<Elem>> allowed(source.group->size());
  for (Elem k = 0; k < allowed.size(); ++k) {
    auto it = by_perm.find(source.permutation(k));
    if (it != by_perm.end()) {
      allowed[k] = it->second;
    }
  }
  std::vector<SliceMorphism> out;
  for (auto& h : enumerate_group_homs(source.group, target.group, std::move(allowed), cap)) {
    out.push_back(SliceMorphism{source, target, std::move(h)});
  }
  return out;
}

GroupoidMorphism ltimes_on_morphism(const SliceMorphism&  psi,
                                    const ActionGroupoid& source,
                                    const ActionGroupoid& target) {
  // Only the slice condition is checked here; it is linear in |K|, while
  // the homomorphism property of large bisection groups is quadratic.
  auto const m = source.action.base.size();
  for (Elem k = 0; k < psi.source.group->size(); ++k) {
    for (Point x = 0; x < m; ++x) {
      if (psi.target.act(psi.hom(k), x) != psi.source.act(k, x)) {
        throw NotSliceMorphism("slice condition fails at " + psi.source.group->name(k));
      }
    }
  }
  std::vector<Arrow> map(source.groupoid->size());
  for (Arrow a = 0; a < map.size(); ++a) {
    map[a] = target.arrow(psi.hom(source.group_part(a)), static_cast<Point>(a % m));
  }
  return GroupoidMorphism{source.groupoid, target.groupoid, std::move(map)};
}

SliceMorphism bis_slice(const GroupoidMorphism& phi,
                        const BisectionGroup&   source,
                        const BisectionGroup&   target) {
  return SliceMorphism{source.beta_action(), target.beta_action(),
                       bis_on_morphism(phi, source, target)};
}

////////////////////////////////////////////////////////////////////////
// The adjunction
////////////////////////////////////////////////////////////////////////

SliceMorphism curry_hom(const GroupoidMorphism& f,
                        const ActionGroupoid&   source,
                        const BisectionGroup&   target) {
  auto const         m = source.action.base.size();
  auto const         k = source.action.group->size();
  std::vector<Elem>  map(k);
  std::vector<Arrow> sec(m);
  for (Elem g = 0; g < k; ++g) {
    for (Point x = 0; x < m; ++x) {
      sec[x] = f.map[source.arrow(g, x)];
    }
    auto const s = target.index_of(sec);
    if (!s) {
      throw InternalLawViolation("curried value at " + source.action.group->name(g)
                                 + " is not a bisection");
    }
    map[g] = *s;
  }
  return SliceMorphism{source.action, target.beta_action(),
                       GroupHom{source.action.group, target.group(), std::move(map)}};
}

GroupoidMorphism uncurry_hom(const SliceMorphism&  psi,
                             const ActionGroupoid& source,
                             const BisectionGroup& target) {
  std::vector<Arrow> map(source.groupoid->size());
  for (Arrow a = 0; a < map.size(); ++a) {
    map[a] = target.eval(psi.hom(source.group_part(a)), source.point_part(a));
  }
  return GroupoidMorphism{source.groupoid, target.groupoid(), std::move(map)};
}

BObject b_object(const GroupoidPtr& g, std::uint64_t cap) {
  auto bis = enumerate_bisections(g, cap);
  auto b = ltimes(bis->beta_action());
  return BObject{g, std::move(bis), std::move(b)};
}

GroupoidMorphism ev_counit(const BObject& g) {
  std::vector<Arrow> map(g.b.groupoid->size());
  for (Arrow a = 0; a < map.size(); ++a) {
    map[a] = g.bis->eval(g.b.group_part(a), g.b.point_part(a));
  }
  return GroupoidMorphism{g.b.groupoid, g.base_groupoid, std::move(map)};
}

SliceMorphism const_unit(const ActionGroupoid& a, const BisectionGroup& bis) {
  auto const         m = a.action.base.size();
  std::vector<Elem>  map(a.action.group->size());
  std::vector<Arrow> sec(m);
  for (Elem k = 0; k < map.size(); ++k) {
    for (Point x = 0; x < m; ++x) {
      sec[x] = a.arrow(k, x);
    }
    auto const s = bis.index_of(sec);
    if (!s) {
      throw InternalLawViolation("constant section is not a bisection");
    }
    map[k] = *s;
  }
  return SliceMorphism{a.action, bis.beta_action(),
                       GroupHom{a.action.group, bis.group(), std::move(map)}};
}

GroupoidMorphism comultiplication(const BObject& g, const BObject& bb) {
  if (bb.base_groupoid != g.b.groupoid) {
    throw MixedGroupoids();
  }
  auto const         m = g.b.action.base.size();
  std::vector<Elem>  constant(g.bis->size());
  std::vector<Arrow> sec(m);
  for (Elem s = 0; s < constant.size(); ++s) {
    for (Point x = 0; x < m; ++x) {
      sec[x] = g.b.arrow(s, x);
    }
    auto const c = bb.bis->index_of(sec);
    if (!c) {
      throw InternalLawViolation("constant section of B(G) is not a bisection");
    }
    constant[s] = *c;
  }
  std::vector<Arrow> map(g.b.groupoid->size());
  for (Arrow a = 0; a < map.size(); ++a) {
    map[a] = bb.b.arrow(constant[g.b.group_part(a)], g.b.point_part(a));
  }
  return GroupoidMorphism{g.b.groupoid, bb.b.groupoid, std::move(map)};
}

GroupoidMorphism b_on_morphism(const GroupoidMorphism& phi,
                               const BObject&          source,
                               const BObject&          target) {
  return ltimes_on_morphism(bis_slice(phi, *source.bis, *target.bis), source.b, target.b);
}

////////////////////////////////////////////////////////////////////////
// Quotient reconstruction
////////////////////////////////////////////////////////////////////////

ArrowCongruence reconstruction_relation(const BObject& g) {
  auto const         ev = ev_counit(g);
  std::vector<Arrow> first(g.base_groupoid->size(), kNone);
  std::vector<Arrow> cls(ev.map.size());
  for (Arrow a = 0; a < cls.size(); ++a) {
    auto& f = first[ev.map[a]];
    if (f == kNone) {
      f = a;
    }
    cls[a] = f;
  }
  return ArrowCongruence(g.b.groupoid, std::move(cls));
}

CheckOutcome check_quotient_reconstruction(const BObject& g) {
  if (!has_bisection_through_each_arrow(*g.bis)) {
    return CheckOutcome::skipped("some arrow lies on no bisection");
  }
  auto const r = reconstruction_relation(g);
  if (auto rep = check_congruence(r); !rep) {
    return CheckOutcome::failed("R is not a congruence: " + rep.failed + " " + rep.witness);
  }
  auto const ev = ev_counit(g);
  if (!ev.is_surjective()) {
    return CheckOutcome::failed("ev is not surjective");
  }
  if (!check_effective_quotient(r, ev)) {
    return CheckOutcome::failed("ev fibres differ from the R-classes");
  }
  auto const q = quotient_groupoid(r);
  if (!check_effective_quotient(r, q.projection)) {
    return CheckOutcome::failed("quotient is not effective");
  }
  auto const f = factor_through_quotient(q, r, ev);
  if (!f) {
    return CheckOutcome::failed("ev does not factor through the quotient");
  }
  if (auto rep = validate_morphism(*f); !rep) {
    return CheckOutcome::failed("induced map is not a morphism: " + rep.failed + " "
                                + rep.witness);
  }
  if (!f->is_isomorphism()) {
    return CheckOutcome::failed("B(G)/R is not isomorphic to G");
  }
  return CheckOutcome::passed(std::to_string(q.groupoid->size()) + " classes");
}

////////////////////////////////////////////////////////////////////////
// Limits
////////////////////////////////////////////////////////////////////////

GroupoidMorphism groupoid_kernel(const GroupoidMorphism& phi) {
  auto const&        t = *phi.target;
  std::vector<Arrow> arrows;
  for (Arrow a = 0; a < phi.map.size(); ++a) {
    Arrow const y = phi.map[a];
    if (t.src(y) == t.tgt(y) && t.unit(t.src(y)) == y) {
      arrows.push_back(a);
    }
  }
  return wide_subgroupoid(phi.source, arrows);
}

namespace {

std::set<std::vector<Arrow>> sections_through(const GroupoidMorphism& inclusion,
                                              const BisectionGroup&   bis) {
  std::set<std::vector<Arrow>> out;
  auto const                   m = inclusion.source->base().size();
  std::vector<Arrow>           sec(m);
  for (Elem s = 0; s < bis.size(); ++s) {
    for (Point x = 0; x < m; ++x) {
      sec[x] = inclusion.map[bis.eval(s, x)];
    }
    out.insert(sec);
  }
  return out;
}

}  // namespace

CheckOutcome check_bis_preserves_kernel(const GroupoidMorphism& phi, std::uint64_t cap) {
  auto const bis_a = enumerate_bisections(phi.source, cap);
  auto const bis_c = enumerate_bisections(phi.target, cap);
  auto const hom = bis_on_morphism(phi, *bis_a, *bis_c);
  std::set<std::vector<Arrow>> kernel_of_hom;
  for (Elem s = 0; s < bis_a->size(); ++s) {
    if (hom(s) == bis_c->unit()) {
      auto const sec = bis_a->section(s);
      kernel_of_hom.emplace(sec.begin(), sec.end());
    }
  }
  auto const incl = groupoid_kernel(phi);
  auto const bis_k = enumerate_bisections(incl.source, cap);
  if (sections_through(incl, *bis_k) != kernel_of_hom) {
    return CheckOutcome::failed("Bis(ker) differs from ker Bis");
  }
  return CheckOutcome::passed(std::to_string(kernel_of_hom.size()) + " kernel bisections");
}

FibreProduct fibre_product(const GroupoidMorphism& phi, const GroupoidMorphism& psi) {
  if (phi.target != psi.target) {
    throw MixedGroupoids();
  }
  auto const&                          a = *phi.source;
  auto const&                          b = *psi.source;
  std::vector<std::pair<Arrow, Arrow>> pairs;
  for (Arrow x = 0; x < a.size(); ++x) {
    for (Arrow y = 0; y < b.size(); ++y) {
      if (phi.map[x] == psi.map[y]) {
        pairs.emplace_back(x, y);
      }
    }
  }
  std::map<std::pair<Arrow, Arrow>, Arrow> index;
  for (Arrow i = 0; i < pairs.size(); ++i) {
    index.emplace(pairs[i], i);
  }
  auto const               n = pairs.size();
  std::vector<std::string> names(n);
  std::vector<Point>       src(n), tgt(n);
  std::vector<Arrow>       comp(n * n, kNone), inv(n), unit(a.base().size());
  for (Arrow i = 0; i < n; ++i) {
    auto [x, y] = pairs[i];
    names[i] = "<" + a.name(x) + "," + b.name(y) + ">";
    src[i] = a.src(x);
    tgt[i] = a.tgt(x);
    inv[i] = index.at({a.inv(x), b.inv(y)});
    for (Arrow j = 0; j < n; ++j) {
      auto [u, v] = pairs[j];
      if (a.src(x) == a.tgt(u)) {
        comp[i * n + j] = index.at({a.compose(x, u), b.compose(y, v)});
      }
    }
  }
  for (Point p = 0; p < unit.size(); ++p) {
    unit[p] = index.at({a.unit(p), b.unit(p)});
  }
  auto g = std::make_shared<const FiniteGroupoid>(a.base(), std::move(names), std::move(src),
                                                  std::move(tgt), std::move(comp),
                                                  std::move(unit), std::move(inv));
  std::vector<Arrow> pa(n), pb(n);
  for (Arrow i = 0; i < n; ++i) {
    pa[i] = pairs[i].first;
    pb[i] = pairs[i].second;
  }
  return FibreProduct{g, GroupoidMorphism{g, phi.source, std::move(pa)},
                      GroupoidMorphism{g, psi.source, std::move(pb)}};
}

CheckOutcome check_bis_preserves_pullback(const GroupoidMorphism& phi,
                                          const GroupoidMorphism& psi,
                                          std::uint64_t           cap) {
  auto const fp = fibre_product(phi, psi);
  auto const bis_a = enumerate_bisections(phi.source, cap);
  auto const bis_b = enumerate_bisections(psi.source, cap);
  auto const bis_c = enumerate_bisections(phi.target, cap);
  auto const bis_p = enumerate_bisections(fp.groupoid, cap);
  auto const ha = bis_on_morphism(phi, *bis_a, *bis_c);
  auto const hb = bis_on_morphism(psi, *bis_b, *bis_c);
  std::set<std::pair<Elem, Elem>> expected;
  for (Elem s = 0; s < bis_a->size(); ++s) {
    for (Elem t = 0; t < bis_b->size(); ++t) {
      if (ha(s) == hb(t)) {
        expected.emplace(s, t);
      }
    }
  }
  auto const pa = bis_on_morphism(fp.to_a, *bis_p, *bis_a);
  auto const pb = bis_on_morphism(fp.to_b, *bis_p, *bis_b);
  std::set<std::pair<Elem, Elem>> got;
  for (Elem s = 0; s < bis_p->size(); ++s) {
    got.emplace(pa(s), pb(s));
  }
  if (got.size() != bis_p->size()) {
    return CheckOutcome::failed("projections do not separate bisections of the pullback");
  }
  if (got != expected) {
    return CheckOutcome::failed("Bis(pullback) differs from the pullback of Bis");
  }
  return CheckOutcome::passed(std::to_string(got.size()) + " bisections");
}

}  // namespace fingpd
