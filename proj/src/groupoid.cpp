#include "fingpd/groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "fingpd/hom_search.hpp"

namespace fingpd {

////////////////////////////////////////////////////////////////////////
// FiniteGroupoid
////////////////////////////////////////////////////////////////////////

FiniteGroupoid::FiniteGroupoid(Base                     base,
                               std::vector<std::string> names,
                               std::vector<Point>       src,
                               std::vector<Point>       tgt,
                               std::vector<Arrow>       comp,
                               std::vector<Arrow>       unit,
                               std::vector<Arrow>       inv)
    : base_(std::move(base)),
      names_(std::move(names)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      comp_(std::move(comp)),
      unit_(std::move(unit)),
      inv_(std::move(inv)) {
  auto const n = names_.size();
  if (src_.size() != n || tgt_.size() != n || inv_.size() != n
      || comp_.size() != n * n || unit_.size() != base_.size()) {
    throw ValidationError("groupoid tables do not match the declared arrows");
  }
  for (Arrow a = 0; a < n; ++a) {
    if (!lookup_.emplace(names_[a], a).second) {
      throw ValidationError("duplicate arrow '" + names_[a] + "'");
    }
  }
  index_fibres();
}

FiniteGroupoid::FiniteGroupoid(Base               base,
                               NameFn             names,
                               std::vector<Point> src,
                               std::vector<Point> tgt,
                               ComposeFn          compose,
                               std::vector<Arrow> unit,
                               std::vector<Arrow> inv)
    : base_(std::move(base)),
      name_fn_(std::move(names)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      compose_fn_(std::move(compose)),
      unit_(std::move(unit)),
      inv_(std::move(inv)) {
  index_fibres();
}

void FiniteGroupoid::index_fibres() {
  auto const m = base_.size();
  out_.assign(m, {});
  in_.assign(m, {});
  hom_.assign(m * m, {});
  for (Arrow a = 0; a < src_.size(); ++a) {
    if (src_[a] >= m || tgt_[a] >= m) {
      throw ValidationError("arrow endpoint outside the base");
    }
    out_[src_[a]].push_back(a);
    in_[tgt_[a]].push_back(a);
    hom_[tgt_[a] * m + src_[a]].push_back(a);
  }
}

Arrow FiniteGroupoid::compose(Arrow g, Arrow h) const {
  if (src_[g] != tgt_[h]) {
    return kNone;
  }
  return comp_.empty() ? compose_fn_(g, h) : comp_[g * size() + h];
}

std::string FiniteGroupoid::name(Arrow a) const {
  return names_.empty() ? name_fn_(a) : names_.at(a);
}

std::optional<Arrow> FiniteGroupoid::find(std::string_view name) const {
  if (!names_.empty()) {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }
  for (Arrow a = 0; a < size(); ++a) {
    if (name_fn_(a) == name) {
      return a;
    }
  }
  return std::nullopt;
}

GroupoidPtr tabulate(const FiniteGroupoid& g) {
  auto const               n = g.size();
  std::vector<std::string> names(n);
  std::vector<Arrow>       comp(n * n, kNone);
  for (Arrow a = 0; a < n; ++a) {
    names[a] = g.name(a);
    for (auto b : g.into(g.src(a))) {
      comp[a * n + b] = g.compose(a, b);
    }
  }
  return std::make_shared<const FiniteGroupoid>(g.base(), std::move(names), g.src_table(),
                                                g.tgt_table(), std::move(comp),
                                                g.unit_table(), g.inv_table());
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  auto const n = g.size();
  auto const m = g.base().size();
  auto       nm = [&](Arrow a) { return g.name(a); };

  for (Point x = 0; x < m; ++x) {
    Arrow const u = g.unit(x);
    if (u >= n || g.src(u) != x || g.tgt(u) != x) {
      return ValidationReport::fail("unit", "unit at " + g.base().name(x));
    }
  }
  for (Arrow a = 0; a < n; ++a) {
    if (g.inv(a) >= n) {
      return ValidationReport::fail("inverse", "(" + nm(a) + ") has no inverse entry");
    }
  }
  if (g.tabulated()) {
    auto const& comp = g.comp_table();
    for (Arrow a = 0; a < n; ++a) {
      for (Arrow b = 0; b < n; ++b) {
        bool const composable = g.src(a) == g.tgt(b);
        Arrow const c = comp[a * n + b];
        if (composable && c == kNone) {
          return ValidationReport::fail("partiality",
                                        "(" + nm(a) + ", " + nm(b) + ") undefined");
        }
        if (!composable && c != kNone) {
          return ValidationReport::fail(
              "partiality", "(" + nm(a) + ", " + nm(b) + ") defined but not composable");
        }
        if (composable && c >= n) {
          return ValidationReport::fail("closure", "(" + nm(a) + ", " + nm(b) + ")");
        }
      }
    }
  }
  for (Arrow a = 0; a < n; ++a) {
    for (auto b : g.into(g.src(a))) {
      Arrow const c = g.compose(a, b);
      if (g.src(c) != g.src(b) || g.tgt(c) != g.tgt(a)) {
        return ValidationReport::fail("src/tgt", "(" + nm(a) + ", " + nm(b) + ") -> " + nm(c));
      }
    }
  }
  for (Arrow a = 0; a < n; ++a) {
    if (g.compose(g.unit(g.tgt(a)), a) != a || g.compose(a, g.unit(g.src(a))) != a) {
      return ValidationReport::fail("unit", "(" + nm(a) + ")");
    }
    Arrow const i = g.inv(a);
    if (g.compose(a, i) != g.unit(g.tgt(a)) || g.compose(i, a) != g.unit(g.src(a))) {
      return ValidationReport::fail("inverse", "(" + nm(a) + ")");
    }
  }
  for (Arrow a = 0; a < n; ++a) {
    for (auto b : g.into(g.src(a))) {
      Arrow const ab = g.compose(a, b);
      for (auto c : g.into(g.src(b))) {
        if (g.compose(ab, c) != g.compose(a, g.compose(b, c))) {
          return ValidationReport::fail("associativity",
                                        "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ")");
        }
      }
    }
  }
  return ValidationReport::pass();
}

////////////////////////////////////////////////////////////////////////
// Morphisms
////////////////////////////////////////////////////////////////////////

bool GroupoidMorphism::is_injective() const {
  std::vector<bool> hit(target->size(), false);
  for (auto y : map) {
    if (hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

bool GroupoidMorphism::is_surjective() const {
  std::vector<bool> hit(target->size(), false);
  for (auto y : map) {
    hit[y] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroupoidMorphism GroupoidMorphism::inverse() const {
  std::vector<Arrow> inv(target->size(), kNone);
  for (Arrow a = 0; a < map.size(); ++a) {
    inv[map[a]] = a;
  }
  return GroupoidMorphism{target, source, std::move(inv)};
}

ValidationReport validate_morphism(const GroupoidMorphism& f) {
  auto const& s = *f.source;
  auto const& t = *f.target;
  if (s.base() != t.base()) {
    return ValidationReport::fail("base", "source and target have different bases");
  }
  if (f.map.size() != s.size()) {
    return ValidationReport::fail("totality", "map has wrong length");
  }
  for (Arrow a = 0; a < s.size(); ++a) {
    Arrow const y = f.map[a];
    if (y >= t.size()) {
      return ValidationReport::fail("totality", "(" + s.name(a) + ") image out of range");
    }
    if (t.src(y) != s.src(a) || t.tgt(y) != s.tgt(a)) {
      return ValidationReport::fail("src/tgt", "(" + s.name(a) + ") -> " + t.name(y));
    }
  }
  for (Point x = 0; x < s.base().size(); ++x) {
    if (f.map[s.unit(x)] != t.unit(x)) {
      return ValidationReport::fail("unit", "at " + s.base().name(x));
    }
  }
  for (Arrow a = 0; a < s.size(); ++a) {
    for (auto b : s.into(s.src(a))) {
      if (f.map[s.compose(a, b)] != t.compose(f.map[a], f.map[b])) {
        return ValidationReport::fail("composition", "(" + s.name(a) + ", " + s.name(b) + ")");
      }
    }
  }
  return ValidationReport::pass();
}

GroupoidMorphism identity_morphism(const GroupoidPtr& g) {
  std::vector<Arrow> id(g->size());
  std::iota(id.begin(), id.end(), Arrow{0});
  return GroupoidMorphism{g, g, std::move(id)};
}

GroupoidMorphism compose(const GroupoidMorphism& g, const GroupoidMorphism& f) {
  std::vector<Arrow> m(f.map.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    m[a] = g.map[f.map[a]];
  }
  return GroupoidMorphism{f.source, g.target, std::move(m)};
}

////////////////////////////////////////////////////////////////////////
// Standard groupoids
////////////////////////////////////////////////////////////////////////

GroupoidPtr pair_groupoid(const Base& base) {
  auto const               m = base.size();
  auto const               n = m * m;
  std::vector<std::string> names(n);
  std::vector<Point>       src(n), tgt(n);
  std::vector<Arrow>       comp(n * n, kNone), unit(m), inv(n);
  // Arrow (a, b) has index a * m + b, source b and target a.
  for (Point a = 0; a < m; ++a) {
    for (Point b = 0; b < m; ++b) {
      Arrow const i = a * m + b;
      names[i] = "(" + base.name(a) + "," + base.name(b) + ")";
      src[i] = b;
      tgt[i] = a;
      inv[i] = b * m + a;
      for (Point c = 0; c < m; ++c) {
        comp[i * n + (b * m + c)] = a * m + c;
      }
    }
    unit[a] = a * m + a;
  }
  return std::make_shared<const FiniteGroupoid>(base, std::move(names), std::move(src),
                                                std::move(tgt), std::move(comp),
                                                std::move(unit), std::move(inv));
}

GroupoidPtr unit_groupoid(const Base& base) {
  auto const               m = base.size();
  std::vector<std::string> names(m);
  std::vector<Point>       pts(m);
  std::vector<Arrow>       comp(m * m, kNone);
  for (Point x = 0; x < m; ++x) {
    names[x] = "1_" + base.name(x);
    pts[x] = x;
    comp[x * m + x] = x;
  }
  return std::make_shared<const FiniteGroupoid>(base, std::move(names), pts, pts,
                                                std::move(comp), pts, pts);
}

GroupoidPtr group_over_point(const FiniteGroup& g) {
  auto const               n = g.size();
  std::vector<std::string> names(n);
  std::vector<Arrow>       comp(n * n), inv(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = g.name(a);
    inv[a] = g.inv(a);
    for (Elem b = 0; b < n; ++b) {
      comp[a * n + b] = g.mul(a, b);
    }
  }
  return std::make_shared<const FiniteGroupoid>(
      Base({"*"}), std::move(names), std::vector<Point>(n, 0), std::vector<Point>(n, 0),
      std::move(comp), std::vector<Arrow>{g.identity()}, std::move(inv));
}

GroupoidPtr standard_groupoid(StandardKind kind, const Base& base) {
  switch (kind) {
    case StandardKind::pair:
      return pair_groupoid(base);
    case StandardKind::unit:
      return unit_groupoid(base);
    case StandardKind::group_over_point:
      break;
  }
  throw std::invalid_argument("group_over_point needs a group");
}

GroupoidPtr standard_groupoid(StandardKind kind, const FiniteGroup& g) {
  if (kind != StandardKind::group_over_point) {
    throw std::invalid_argument("pair and unit groupoids need a base");
  }
  return group_over_point(g);
}

GroupPtr vertex_group(const FiniteGroupoid& g, Point m) {
  if (!g.base().contains(m)) {
    throw PointNotInBase(m);
  }
  auto const               loops = g.between(m, m);
  auto const               n = loops.size();
  std::vector<std::string> names(n);
  std::vector<Elem>        table(n * n), inverse(n);
  auto index = [&](Arrow a) {
    return static_cast<Elem>(std::find(loops.begin(), loops.end(), a) - loops.begin());
  };
  for (Elem i = 0; i < n; ++i) {
    names[i] = g.name(loops[i]);
    inverse[i] = index(g.inv(loops[i]));
    for (Elem j = 0; j < n; ++j) {
      table[i * n + j] = index(g.compose(loops[i], loops[j]));
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(table),
                                             index(g.unit(m)), std::move(inverse));
}

bool is_locally_trivial(const FiniteGroupoid& g) {
  auto const m = g.base().size();
  for (Point y = 0; y < m; ++y) {
    for (Point x = 0; x < m; ++x) {
      if (g.between(y, x).empty()) {
        return false;
      }
    }
  }
  return true;
}

GroupoidMorphism wide_subgroupoid(const GroupoidPtr& g, std::span<const Arrow> arrows) {
  std::vector<Arrow> sub(arrows.begin(), arrows.end());
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  std::vector<Arrow> local(g->size(), kNone);
  for (Arrow i = 0; i < sub.size(); ++i) {
    local[sub[i]] = i;
  }
  auto const               n = sub.size();
  std::vector<std::string> names(n);
  std::vector<Point>       src(n), tgt(n);
  std::vector<Arrow>       comp(n * n, kNone), inv(n), unit(g->base().size());
  for (Point x = 0; x < unit.size(); ++x) {
    unit[x] = local[g->unit(x)];
    if (unit[x] == kNone) {
      throw ValidationError("wide subgroupoid misses the unit at " + g->base().name(x));
    }
  }
  for (Arrow i = 0; i < n; ++i) {
    Arrow const a = sub[i];
    names[i] = g->name(a);
    src[i] = g->src(a);
    tgt[i] = g->tgt(a);
    inv[i] = local[g->inv(a)];
    if (inv[i] == kNone) {
      throw ValidationError("subgroupoid not closed under inverse at " + g->name(a));
    }
    for (Arrow j = 0; j < n; ++j) {
      Arrow const c = g->compose(a, sub[j]);
      if (c != kNone) {
        comp[i * n + j] = local[c];
        if (comp[i * n + j] == kNone) {
          throw ValidationError("subgroupoid not closed under composition at ("
                                + g->name(a) + ", " + g->name(sub[j]) + ")");
        }
      }
    }
  }
  auto h = std::make_shared<const FiniteGroupoid>(g->base(), std::move(names), std::move(src),
                                                  std::move(tgt), std::move(comp),
                                                  std::move(unit), std::move(inv));
  return GroupoidMorphism{h, g, std::move(sub)};
}

std::vector<GroupoidMorphism> enumerate_morphisms(const GroupoidPtr& a,
                                                  const GroupoidPtr& b,
                                                  std::uint64_t      cap) {
  if (a->base() != b->base()) {
    throw ValidationError("morphisms over the identity need a common base");
  }
  HomSearch s;
  s.what = "morphism enumeration";
  s.source_size = a->size();
  s.candidates.resize(a->size());
  for (Arrow x = 0; x < a->size(); ++x) {
    auto const c = b->between(a->tgt(x), a->src(x));
    s.candidates[x].assign(c.begin(), c.end());
  }
  s.source_op = [&](std::uint32_t x, std::uint32_t y) { return a->compose(x, y); };
  s.target_op = [&](std::uint32_t x, std::uint32_t y) { return b->compose(x, y); };
  s.right_partners = [&](std::uint32_t x) { return a->into(a->src(x)); };
  s.left_partners = [&](std::uint32_t x) { return a->out_of(a->tgt(x)); };
  std::vector<GroupoidMorphism> out;
  for (auto& m : enumerate_homs(s, cap)) {
    out.push_back(GroupoidMorphism{a, b, std::move(m)});
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Congruences and quotients
////////////////////////////////////////////////////////////////////////

ArrowCongruence::ArrowCongruence(GroupoidPtr g, std::vector<Arrow> class_of)
    : g_(std::move(g)), class_of_(std::move(class_of)) {
  if (class_of_.size() != g_->size()) {
    throw ValidationError("congruence table does not cover every arrow");
  }
  for (Arrow a = 0; a < class_of_.size(); ++a) {
    Arrow const r = class_of_[a];
    if (r > a || class_of_[r] != r) {
      throw ValidationError("congruence classes must be keyed by their least arrow");
    }
  }
}

ArrowCongruence ArrowCongruence::identity(const GroupoidPtr& g) {
  std::vector<Arrow> id(g->size());
  std::iota(id.begin(), id.end(), Arrow{0});
  return ArrowCongruence(g, std::move(id));
}

ArrowCongruence ArrowCongruence::from_pairs(const GroupoidPtr&                         g,
                                            std::span<const std::pair<Arrow, Arrow>> pairs) {
  std::vector<Arrow> parent(g->size());
  std::iota(parent.begin(), parent.end(), Arrow{0});
  std::function<Arrow(Arrow)> root = [&](Arrow a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (auto [x, y] : pairs) {
    Arrow rx = root(x), ry = root(y);
    if (rx != ry) {
      parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  std::vector<Arrow> cls(g->size());
  for (Arrow a = 0; a < cls.size(); ++a) {
    cls[a] = root(a);
  }
  return ArrowCongruence(g, std::move(cls));
}

ValidationReport check_congruence(const ArrowCongruence& r) {
  auto const& g = *r.groupoid();
  auto        nm = [&](Arrow a) { return g.name(a); };
  for (Arrow a = 0; a < g.size(); ++a) {
    Arrow const c = r.class_min(a);
    if (g.src(a) != g.src(c) || g.tgt(a) != g.tgt(c)) {
      return ValidationReport::fail("endpoints", "(" + nm(a) + " ~ " + nm(c) + ")");
    }
    if (!r.related(g.inv(a), g.inv(c))) {
      return ValidationReport::fail("inverse", "(" + nm(a) + " ~ " + nm(c) + ")");
    }
  }
  // Compatibility with composition reduces to comparing each composite with
  // the composite of class representatives.
  for (Arrow a = 0; a < g.size(); ++a) {
    for (auto b : g.into(g.src(a))) {
      Arrow const lhs = g.compose(a, b);
      Arrow const rhs = g.compose(r.class_min(a), r.class_min(b));
      if (!r.related(lhs, rhs)) {
        return ValidationReport::fail("composition", "(" + nm(a) + ", " + nm(b) + ")");
      }
    }
  }
  return ValidationReport::pass();
}

Quotient quotient_groupoid(const ArrowCongruence& r) {
  if (auto rep = check_congruence(r); !rep) {
    throw NotACongruence(rep.failed + ": " + rep.witness);
  }
  auto const&        g = *r.groupoid();
  std::vector<Arrow> mins;
  std::vector<Arrow> local(g.size(), kNone);
  for (Arrow a = 0; a < g.size(); ++a) {
    if (r.class_min(a) == a) {
      local[a] = static_cast<Arrow>(mins.size());
      mins.push_back(a);
    }
  }
  auto const               n = mins.size();
  std::vector<std::string> names(n);
  std::vector<Point>       src(n), tgt(n);
  std::vector<Arrow>       comp(n * n, kNone), inv(n), unit(g.base().size());
  auto cls = [&](Arrow a) { return local[r.class_min(a)]; };
  for (Arrow i = 0; i < n; ++i) {
    Arrow const a = mins[i];
    names[i] = g.name(a);
    src[i] = g.src(a);
    tgt[i] = g.tgt(a);
    inv[i] = cls(g.inv(a));
    for (Arrow j = 0; j < n; ++j) {
      Arrow const c = g.compose(a, mins[j]);
      if (c != kNone) {
        comp[i * n + j] = cls(c);
      }
    }
  }
  for (Point x = 0; x < unit.size(); ++x) {
    unit[x] = cls(g.unit(x));
  }
  auto q = std::make_shared<const FiniteGroupoid>(g.base(), std::move(names), std::move(src),
                                                  std::move(tgt), std::move(comp),
                                                  std::move(unit), std::move(inv));
  std::vector<Arrow> proj(g.size());
  for (Arrow a = 0; a < g.size(); ++a) {
    proj[a] = cls(a);
  }
  return Quotient{q, GroupoidMorphism{r.groupoid(), q, std::move(proj)}};
}

bool check_effective_quotient(const ArrowCongruence& r, const GroupoidMorphism& proj) {
  auto const n = r.groupoid()->size();
  for (Arrow x = 0; x < n; ++x) {
    for (Arrow y = 0; y < n; ++y) {
      if ((proj.map[x] == proj.map[y]) != r.related(x, y)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<GroupoidMorphism> factor_through_quotient(const Quotient&         q,
                                                        const ArrowCongruence&  r,
                                                        const GroupoidMorphism& h) {
  auto const         n = r.groupoid()->size();
  std::vector<Arrow> fac(q.groupoid->size(), kNone);
  for (Arrow a = 0; a < n; ++a) {
    Arrow const c = q.projection.map[a];
    if (fac[c] == kNone) {
      fac[c] = h.map[a];
    } else if (fac[c] != h.map[a]) {
      return std::nullopt;
    }
  }
  return GroupoidMorphism{q.groupoid, h.target, std::move(fac)};
}

}  // namespace fingpd
