#include "fingpd/transitive_pair.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fingpd {

ValidationReport validate_pair(const TransitivePair& p) {
  auto const& k = *p.group();
  auto const& base = p.base();
  if (!base.contains(p.basepoint)) {
    return ValidationReport::fail("basepoint",
                                  "point " + std::to_string(p.basepoint) + " not in base");
  }
  auto const orb = orbit(p.action, p.basepoint);
  if (orb.size() != base.size()) {
    for (Point x = 0; x < base.size(); ++x) {
      if (std::find(orb.begin(), orb.end(), x) == orb.end()) {
        return ValidationReport::fail("P1", base.name(x) + " is not reached from "
                                                + base.name(p.basepoint));
      }
    }
  }
  if (p.h.parent_order() != k.size()) {
    return ValidationReport::fail("P2", "H is not a subgroup of K");
  }
  for (auto h : p.h.members()) {
    if (p.action.act(h, p.basepoint) != p.basepoint) {
      return ValidationReport::fail("P2", k.name(h) + " in H moves " + base.name(p.basepoint));
    }
  }
  auto const stab = stabilizer(p.action, p.basepoint);
  for (auto s : stab.members()) {
    for (auto h : p.h.members()) {
      Elem const c = k.mul(k.mul(s, h), k.inv(s));
      if (!p.h.contains(c)) {
        return ValidationReport::fail("P2", k.name(s) + " " + k.name(h) + " " + k.name(s)
                                                + "^-1 = " + k.name(c) + " is not in H");
      }
    }
  }
  return ValidationReport::pass();
}

Subgroup pair_kernel(const TransitivePair& p) {
  return normal_core(*p.group(), p.h);
}

////////////////////////////////////////////////////////////////////////
// Morphisms of pairs
////////////////////////////////////////////////////////////////////////

void PairMorphismReport::raise_if_failed() const {
  if (!report.ok()) {
    throw ConditionViolated(report.failed, report.witness);
  }
}

PairMorphismReport validate_pair_morphism(const PairMorphism& f) {
  PairMorphismReport out;
  if (auto r = validate_hom(f.hom); !r) {
    out.report = ValidationReport::fail("hom", r.failed + " " + r.witness);
    return out;
  }
  if (f.source.base() != f.target.base() || f.source.basepoint != f.target.basepoint) {
    out.report = ValidationReport::fail("basepoint", "pairs over different (M, m)");
    return out;
  }
  auto const& k = *f.source.group();
  for (auto h : f.source.h.members()) {
    if (!f.target.h.contains(f.hom(h))) {
      out.report = ValidationReport::fail("subgroup", k.name(h) + " maps outside H'");
      return out;
    }
  }
  for (Elem g = 0; g < k.size(); ++g) {
    for (Point x = 0; x < f.source.base().size(); ++x) {
      if (f.target.action.act(f.hom(g), x) != f.source.action.act(g, x)) {
        out.report = ValidationReport::fail("slice", k.name(g));
        return out;
      }
    }
  }
  if (f.hom.is_bijective()) {
    auto const inv = f.hom.inverse();
    out.is_isomorphism = std::all_of(f.target.h.members().begin(), f.target.h.members().end(),
                                     [&](Elem h) { return f.source.h.contains(inv(h)); });
  }
  return out;
}

PairMorphism identity_pair_morphism(const TransitivePair& p) {
  return PairMorphism{p, p, identity_hom(p.group())};
}

PairMorphism compose(const PairMorphism& g, const PairMorphism& f) {
  return PairMorphism{f.source, g.target, compose(g.hom, f.hom)};
}

std::vector<PairMorphism> enumerate_pair_morphisms(const TransitivePair& source,
                                                   const TransitivePair& target,
                                                   std::uint64_t         cap) {
  if (source.base() != target.base() || source.basepoint != target.basepoint) {
    return {};
  }
  std::map<Perm, std::vector<Elem>> by_perm;
  for (Elem k = 0; k < target.group()->size(); ++k) {
    by_perm[target.action.permutation(k)].push_back(k);
  }
  std::vector<std::vector<Elem>> allowed(source.group()->size());
  for (Elem k = 0; k < allowed.size(); ++k) {
    auto it = by_perm.find(source.action.permutation(k));
    if (it == by_perm.end()) {
      continue;
    }
    for (auto x : it->second) {
      if (!source.h.contains(k) || target.h.contains(x)) {
        allowed[k].push_back(x);
      }
    }
  }
  std::vector<PairMorphism> out;
  for (auto& h : enumerate_group_homs(source.group(), target.group(), std::move(allowed), cap)) {
    out.push_back(PairMorphism{source, target, std::move(h)});
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Bundle and gauge groupoid
////////////////////////////////////////////////////////////////////////

std::uint32_t PrincipalBundle::act_left(Elem k, std::uint32_t p) const {
  return total.class_of[pair.group()->mul(k, total.reps[p])];
}

std::string PrincipalBundle::coset_name(std::uint32_t p) const {
  return pair.group()->name(total.reps[p]) + "H";
}

PrincipalBundle build_bundle(const TransitivePair& p) {
  validate_pair(p).raise_if_failed();
  auto const& k = *p.group();
  auto const  m = p.basepoint;
  PrincipalBundle b;
  b.pair = p;
  b.total = coset_space(p.group(), p.h);
  b.stab = stabilizer(p.action, m);
  b.lambda = quotient_group(k, b.stab, p.h);
  auto const n = b.total.size();
  auto const l = b.lambda.group->size();

  b.projection.resize(n);
  b.fibre.assign(p.base().size(), {});
  for (std::uint32_t c = 0; c < n; ++c) {
    b.projection[c] = p.action.act(b.total.reps[c], m);
    b.fibre[b.projection[c]].push_back(c);
  }
  b.right.resize(n * l);
  for (std::uint32_t c = 0; c < n; ++c) {
    for (Elem g = 0; g < l; ++g) {
      b.right[c * l + g] = b.total.class_of[k.mul(b.total.reps[c], b.lambda.reps[g])];
    }
  }
  b.delta.assign(n * n, kNone);
  for (std::uint32_t c = 0; c < n; ++c) {
    for (Elem g = 0; g < l; ++g) {
      auto const d = b.right[c * l + g];
      if (b.projection[d] != b.projection[c]) {
        throw InternalLawViolation("right action leaves a fibre");
      }
      if (b.delta[c * n + d] != kNone) {
        throw InternalLawViolation("right action is not free at " + b.coset_name(c));
      }
      b.delta[c * n + d] = g;
    }
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    for (std::uint32_t d = 0; d < n; ++d) {
      if (b.projection[c] == b.projection[d] && b.delta[c * n + d] == kNone) {
        throw InternalLawViolation("right action is not transitive on a fibre");
      }
    }
  }
  for (auto const& f : b.fibre) {
    if (f.empty()) {
      throw InternalLawViolation("projection is not surjective");
    }
  }
  return b;
}

GaugeGroupoid gauge_groupoid(const TransitivePair& pair) {
  GaugeGroupoid r;
  r.bundle = build_bundle(pair);
  auto const& b = r.bundle;
  auto const  n = static_cast<std::uint32_t>(b.size());
  auto const  l = b.lambda_order();

  r.orbit_of.assign(n * n, kNone);
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      if (r.orbit_of[p * n + q] != kNone) {
        continue;
      }
      // Scanning in lexicographic order, the first unseen pair is the least
      // member of its orbit.
      auto const id = static_cast<Arrow>(r.reps.size());
      r.reps.emplace_back(p, q);
      for (Elem g = 0; g < l; ++g) {
        r.orbit_of[b.act_right(p, g) * n + b.act_right(q, g)] = id;
      }
    }
  }
  auto const               count = r.reps.size();
  std::vector<std::string> names(count);
  std::vector<Point>       src(count), tgt(count);
  std::vector<Arrow>       comp(count * count, kNone), inv(count);
  std::vector<Arrow>       unit(pair.base().size());
  for (Arrow i = 0; i < count; ++i) {
    auto [p, q] = r.reps[i];
    names[i] = "<" + b.coset_name(p) + "," + b.coset_name(q) + ">";
    src[i] = b.projection[q];
    tgt[i] = b.projection[p];
    inv[i] = r.orbit_of[q * n + p];
  }
  for (Arrow i = 0; i < count; ++i) {
    auto [p, q] = r.reps[i];
    for (Arrow j = 0; j < count; ++j) {
      auto [u, s] = r.reps[j];
      if (b.projection[q] != b.projection[u]) {
        continue;
      }
      // Align <u, s> so that its first entry is q.
      comp[i * count + j] = r.orbit_of[p * n + b.act_right(s, b.delta_of(u, q))];
    }
  }
  for (Point x = 0; x < unit.size(); ++x) {
    auto const s = b.section(x);
    unit[x] = r.orbit_of[s * n + s];
  }
  r.groupoid = std::make_shared<const FiniteGroupoid>(pair.base(), std::move(names),
                                                      std::move(src), std::move(tgt),
                                                      std::move(comp), std::move(unit),
                                                      std::move(inv));
  return r;
}

GroupoidMorphism gauge_on_morphism(const PairMorphism&  f,
                                   const GaugeGroupoid& source,
                                   const GaugeGroupoid& target) {
  validate_pair_morphism(f).raise_if_failed();
  auto const&        k = *f.source.group();
  auto const&        cs = source.bundle.total.class_of;
  auto const&        ct = target.bundle.total.class_of;
  std::vector<Arrow> map(source.groupoid->size(), kNone);
  for (Elem a = 0; a < k.size(); ++a) {
    for (Elem g = 0; g < k.size(); ++g) {
      Arrow const from = source.arrow(cs[a], cs[g]);
      Arrow const to = target.arrow(ct[f.hom(a)], ct[f.hom(g)]);
      if (map[from] == kNone) {
        map[from] = to;
      } else if (map[from] != to) {
        throw InternalLawViolation("R(f) depends on representatives at "
                                   + source.groupoid->name(from));
      }
    }
  }
  return GroupoidMorphism{source.groupoid, target.groupoid, std::move(map)};
}

std::vector<std::uint32_t> alternative_section(const PrincipalBundle& b) {
  std::vector<std::uint32_t> s(b.fibre.size());
  for (Point x = 0; x < s.size(); ++x) {
    s[x] = b.fibre[x].back();
  }
  return s;
}

GroupHom a_canonical(const GaugeGroupoid&                     r,
                     const BisectionGroup&                    bis,
                     std::optional<std::vector<std::uint32_t>> section) {
  auto const& b = r.bundle;
  auto const  m = b.pair.base().size();
  if (!section) {
    section.emplace(m);
    for (Point x = 0; x < m; ++x) {
      (*section)[x] = b.section(x);
    }
  }
  for (Point x = 0; x < m; ++x) {
    if (b.projection[(*section)[x]] != x) {
      throw ValidationError("not a section of the bundle projection");
    }
  }
  auto const&        k = *b.pair.group();
  std::vector<Elem>  map(k.size());
  std::vector<Arrow> sec(m);
  for (Elem g = 0; g < k.size(); ++g) {
    for (Point x = 0; x < m; ++x) {
      auto const s = (*section)[x];
      sec[x] = r.arrow(b.act_left(g, s), s);
    }
    auto const idx = bis.index_of(sec);
    if (!idx) {
      throw InternalLawViolation("a(" + k.name(g) + ") is not a bisection");
    }
    map[g] = *idx;
  }
  return GroupHom{b.pair.group(), bis.group(), std::move(map)};
}

////////////////////////////////////////////////////////////////////////
// Bisbar and chi
////////////////////////////////////////////////////////////////////////

bool in_bisbar_domain(const BisectionGroup& bis) {
  return is_locally_trivial(*bis.groupoid()) && has_bisection_through_each_arrow(bis);
}

TransitivePair bisbar(const BisectionGroup& bis, Point m) {
  auto const& g = *bis.groupoid();
  if (!g.base().contains(m)) {
    throw PointNotInBase(m);
  }
  if (!is_locally_trivial(g)) {
    throw HypothesisNotMet("groupoid is not locally trivial");
  }
  if (!has_bisection_through_each_arrow(bis)) {
    throw HypothesisNotMet("some arrow lies on no bisection");
  }
  TransitivePair p{bis.beta_action(), m, stabilizer_subgroups(bis, m).bis};
  if (auto r = validate_pair(p); !r) {
    throw InternalLawViolation("Bisbar is not a transitive pair: " + r.failed + " "
                               + r.witness);
  }
  return p;
}

PairMorphism bisbar_on_morphism(const GroupoidMorphism& psi,
                                const BisectionGroup&   source,
                                const BisectionGroup&   target,
                                Point                   m) {
  return PairMorphism{bisbar(source, m), bisbar(target, m),
                      bis_on_morphism(psi, source, target)};
}

PairMorphism a_pair_morphism(const TransitivePair& p,
                             const GaugeGroupoid&  r,
                             const BisectionGroup& bis) {
  return PairMorphism{p, bisbar(bis, p.basepoint), a_canonical(r, bis)};
}

GroupoidMorphism chi_canonical(const BisectionGroup& bis, const GaugeGroupoid& rbar) {
  auto const& b = rbar.bundle;
  if (b.pair.group() != bis.group()) {
    throw MixedGroupoids();
  }
  auto const& g = *bis.groupoid();
  auto const  m = b.pair.basepoint;
  auto const  n = static_cast<std::uint32_t>(b.size());
  std::vector<Arrow> map(rbar.groupoid->size(), kNone);
  // Every pair of cosets is visited, so the value is checked on whole orbits.
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      Arrow const s = bis.eval(b.total.reps[p], m);
      Arrow const t = bis.eval(b.total.reps[q], m);
      Arrow const v = g.compose(s, g.inv(t));
      Arrow const a = rbar.arrow(p, q);
      if (map[a] == kNone) {
        map[a] = v;
      } else if (map[a] != v) {
        throw InternalLawViolation("chi depends on representatives at "
                                   + rbar.groupoid->name(a));
      }
    }
  }
  return GroupoidMorphism{rbar.groupoid, bis.groupoid(), std::move(map)};
}

////////////////////////////////////////////////////////////////////////
// Bundle automorphisms
////////////////////////////////////////////////////////////////////////

std::vector<std::vector<std::uint32_t>> bundle_automorphisms(const PrincipalBundle& b,
                                                             std::uint64_t          cap) {
  auto const    n = b.size();
  std::uint64_t total = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    total *= i;
    if (total > cap) {
      throw CapExceeded("bundle automorphism scan", total);
    }
  }
  auto const&                             base = b.pair.base();
  auto const                              l = b.lambda_order();
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t>              f(n);
  std::iota(f.begin(), f.end(), 0u);
  do {
    Perm fbar(base.size(), kNone);
    bool ok = true;
    for (std::uint32_t p = 0; p < n && ok; ++p) {
      auto& y = fbar[b.projection[p]];
      Point const img = b.projection[f[p]];
      ok = y == kNone || y == img;
      y = img;
    }
    ok = ok && base.is_admissible(fbar);
    for (std::uint32_t p = 0; p < n && ok; ++p) {
      for (Elem g = 0; g < l && ok; ++g) {
        ok = f[b.act_right(p, g)] == b.act_right(f[p], g);
      }
    }
    if (ok) {
      out.push_back(f);
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

Bisection automorphism_to_bisection(const std::vector<std::uint32_t>& f,
                                    const GaugeGroupoid&              r) {
  auto const         m = r.bundle.pair.base().size();
  std::vector<Arrow> sec(m);
  for (Point x = 0; x < m; ++x) {
    auto const s = r.bundle.section(x);
    sec[x] = r.arrow(f[s], s);
  }
  return Bisection{r.groupoid, std::move(sec)};
}

////////////////////////////////////////////////////////////////////////
// Coreflection
////////////////////////////////////////////////////////////////////////

Coreflection coreflector(const BisectionGroup& bis, Point m) {
  if (in_bisbar_domain(bis)) {
    auto const rbar = gauge_groupoid(bisbar(bis, m));
    auto       chi = chi_canonical(bis, rbar);
    return Coreflection{rbar.groupoid, std::move(chi), true};
  }
  auto const         covered = covered_arrows(bis);
  std::vector<Arrow> arrows;
  for (Arrow a = 0; a < covered.size(); ++a) {
    if (covered[a]) {
      arrows.push_back(a);
    }
  }
  auto incl = wide_subgroupoid(bis.groupoid(), arrows);
  auto sub = incl.source;
  return Coreflection{std::move(sub), std::move(incl), false};
}

}  // namespace fingpd
