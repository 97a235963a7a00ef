#include "fingpd/group.hpp"

#include "fingpd/hom_search.hpp"

#include <algorithm>
#include <functional>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace fingpd {

////////////////////////////////////////////////////////////////////////
// Base
////////////////////////////////////////////////////////////////////////

Base::Base(std::vector<std::string> names, std::vector<std::uint32_t> components)
    : names_(std::move(names)), components_(std::move(components)) {
  if (components_.empty()) {
    components_.assign(names_.size(), 0);
  }
  if (components_.size() != names_.size()) {
    throw ValidationError("component labels do not match the number of points");
  }
  std::set<std::string_view> seen;
  for (auto const& n : names_) {
    if (!seen.insert(n).second) {
      throw ValidationError("duplicate point '" + n + "'");
    }
  }
}

Base Base::numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::to_string(i));
  }
  return Base(std::move(names));
}

std::optional<Point> Base::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<Point>(it - names_.begin());
}

bool Base::labelled() const noexcept {
  return std::adjacent_find(components_.begin(), components_.end(),
                            std::not_equal_to<>())
         != components_.end();
}

bool Base::is_bijection(std::span<const Point> f) const {
  if (f.size() != size()) {
    return false;
  }
  std::vector<bool> hit(size(), false);
  for (auto y : f) {
    if (y >= size() || hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

bool Base::is_admissible(std::span<const Point> f) const {
  if (!is_bijection(f)) {
    return false;
  }
  for (Point x = 0; x < size(); ++x) {
    if (components_[x] != components_[f[x]]) {
      return false;
    }
  }
  return true;
}

std::string format_perm(const Base& base, std::span<const Point> p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += base.name(p[i]);
  }
  return out + "]";
}

////////////////////////////////////////////////////////////////////////
// FiniteGroup
////////////////////////////////////////////////////////////////////////

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<Elem>        table,
                         Elem                     identity,
                         std::vector<Elem>        inverse)
    : order_(names.size()),
      names_(std::move(names)),
      table_(std::move(table)),
      identity_(identity),
      inverse_(std::move(inverse)) {
  if (order_ == 0) {
    throw ValidationError("a group has at least one element");
  }
  if (table_.size() != order_ * order_ || inverse_.size() != order_
      || identity_ >= order_) {
    throw ValidationError("group tables are not total over the elements");
  }
  for (Elem a = 0; a < order_; ++a) {
    if (!lookup_.emplace(names_[a], a).second) {
      throw ValidationError("duplicate element '" + names_[a] + "'");
    }
  }
}

FiniteGroup::FiniteGroup(std::size_t       order,
                         NameFn            names,
                         MulFn             mul,
                         Elem              identity,
                         std::vector<Elem> inverse)
    : order_(order),
      name_fn_(std::move(names)),
      mul_fn_(std::move(mul)),
      identity_(identity),
      inverse_(std::move(inverse)) {}

std::string FiniteGroup::name(Elem a) const {
  return names_.empty() ? name_fn_(a) : names_.at(a);
}

std::optional<Elem> FiniteGroup::find(std::string_view name) const {
  if (!names_.empty()) {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }
  for (Elem a = 0; a < order_; ++a) {
    if (name_fn_(a) == name) {
      return a;
    }
  }
  return std::nullopt;
}

GroupPtr tabulate(const FiniteGroup& g) {
  auto const        n = g.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = g.name(a);
    for (Elem b = 0; b < n; ++b) {
      table[a * n + b] = g.mul(a, b);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(table),
                                             g.identity(), g.inverse_table());
}

ValidationReport validate_group(const FiniteGroup& g) {
  auto const n = g.size();
  auto       nm = [&](Elem a) { return g.name(a); };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.mul(a, b) >= n) {
        return ValidationReport::fail("closure", "(" + nm(a) + ", " + nm(b) + ")");
      }
    }
  }
  Elem const e = g.identity();
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a) {
      return ValidationReport::fail("identity", "(" + nm(e) + ", " + nm(a) + ")");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    Elem const i = g.inv(a);
    if (i >= n || g.mul(a, i) != e || g.mul(i, a) != e) {
      return ValidationReport::fail("inverse", "(" + nm(a) + ")");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem const ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          return ValidationReport::fail(
              "associativity", "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ")");
        }
      }
    }
  }
  return ValidationReport::pass();
}

////////////////////////////////////////////////////////////////////////
// Subgroup
////////////////////////////////////////////////////////////////////////

Subgroup Subgroup::from_members(const FiniteGroup& g, std::vector<Elem> members) {
  Subgroup s;
  s.mask_.assign(g.size(), false);
  for (auto a : members) {
    if (a >= g.size()) {
      throw NotASubgroup("element index out of range");
    }
    s.mask_[a] = true;
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  s.members_ = std::move(members);
  if (!s.mask_[g.identity()]) {
    throw NotASubgroup("subset does not contain the identity");
  }
  for (auto a : s.members_) {
    if (!s.mask_[g.inv(a)]) {
      throw NotASubgroup("not closed under inverse at " + g.name(a));
    }
    for (auto b : s.members_) {
      if (!s.mask_[g.mul(a, b)]) {
        throw NotASubgroup("not closed under product at (" + g.name(a) + ", "
                           + g.name(b) + ")");
      }
    }
  }
  return s;
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.size());
  std::iota(all.begin(), all.end(), Elem{0});
  return from_members(g, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  return from_members(g, {g.identity()});
}

Subgroup Subgroup::generated(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> seen(g.size(), false);
  std::vector<Elem> members{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      Elem const x = g.mul(members[i], s);
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
      }
    }
  }
  return from_members(g, std::move(members));
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem a) { return other.contains(a); });
}

////////////////////////////////////////////////////////////////////////
// GroupHom
////////////////////////////////////////////////////////////////////////

bool GroupHom::is_injective() const {
  std::vector<bool> hit(target->size(), false);
  for (auto y : map) {
    if (hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target->size(), false);
  for (auto y : map) {
    hit[y] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> ker;
  for (Elem a = 0; a < map.size(); ++a) {
    if (map[a] == target->identity()) {
      ker.push_back(a);
    }
  }
  return Subgroup::from_members(*source, std::move(ker));
}

GroupHom GroupHom::inverse() const {
  std::vector<Elem> inv(target->size(), kNone);
  for (Elem a = 0; a < map.size(); ++a) {
    inv[map[a]] = a;
  }
  return GroupHom{target, source, std::move(inv)};
}

ValidationReport validate_hom(const GroupHom& f) {
  auto const& s = *f.source;
  auto const& t = *f.target;
  if (f.map.size() != s.size()) {
    return ValidationReport::fail("totality", "map has wrong length");
  }
  for (auto y : f.map) {
    if (y >= t.size()) {
      return ValidationReport::fail("totality", "image out of range");
    }
  }
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (f.map[s.mul(a, b)] != t.mul(f.map[a], f.map[b])) {
        return ValidationReport::fail("homomorphism",
                                      "(" + s.name(a) + ", " + s.name(b) + ")");
      }
    }
  }
  return ValidationReport::pass();
}

std::vector<GroupHom> enumerate_group_homs(const GroupPtr&               source,
                                           const GroupPtr&               target,
                                           std::vector<std::vector<Elem>> allowed,
                                           std::uint64_t                 cap) {
  auto const n = source->size();
  if (allowed.empty()) {
    std::vector<Elem> all(target->size());
    std::iota(all.begin(), all.end(), Elem{0});
    allowed.assign(n, all);
  }
  // The identity must go to the identity.
  auto& id = allowed[source->identity()];
  id.erase(std::remove_if(id.begin(), id.end(),
                          [&](Elem x) { return x != target->identity(); }),
           id.end());
  std::vector<std::uint32_t> everything(n);
  std::iota(everything.begin(), everything.end(), std::uint32_t{0});
  HomSearch s;
  s.what = "group homomorphism enumeration";
  s.source_size = n;
  s.candidates = std::move(allowed);
  s.source_op = [&](std::uint32_t a, std::uint32_t b) { return source->mul(a, b); };
  s.target_op = [&](std::uint32_t a, std::uint32_t b) { return target->mul(a, b); };
  s.right_partners = [&](std::uint32_t) { return std::span<const std::uint32_t>(everything); };
  s.left_partners = s.right_partners;
  std::vector<GroupHom> out;
  for (auto& m : enumerate_homs(s, cap)) {
    out.push_back(GroupHom{source, target, std::move(m)});
  }
  return out;
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elem> id(g->size());
  std::iota(id.begin(), id.end(), Elem{0});
  return GroupHom{g, g, std::move(id)};
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  std::vector<Elem> m(f.map.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    m[a] = g.map[f.map[a]];
  }
  return GroupHom{f.source, g.target, std::move(m)};
}

////////////////////////////////////////////////////////////////////////
// Actions
////////////////////////////////////////////////////////////////////////

Perm GroupAction::permutation(Elem k) const {
  auto const n = base.size();
  return Perm(table.begin() + k * n, table.begin() + (k + 1) * n);
}

ValidationReport validate_action(const GroupAction& a) {
  auto const& g = *a.group;
  auto const  n = a.base.size();
  if (a.table.size() != g.size() * n) {
    return ValidationReport::fail("totality", "action table is not total");
  }
  for (auto y : a.table) {
    if (y >= n) {
      return ValidationReport::fail("totality", "image point out of range");
    }
  }
  for (Point x = 0; x < n; ++x) {
    if (a.act(g.identity(), x) != x) {
      return ValidationReport::fail("identity", "(" + a.base.name(x) + ")");
    }
  }
  for (Elem k = 0; k < g.size(); ++k) {
    for (Elem h = 0; h < g.size(); ++h) {
      for (Point x = 0; x < n; ++x) {
        if (a.act(k, a.act(h, x)) != a.act(g.mul(k, h), x)) {
          return ValidationReport::fail(
              "compatibility",
              "(" + g.name(k) + ", " + g.name(h) + ", " + a.base.name(x) + ")");
        }
      }
    }
  }
  for (Elem k = 0; k < g.size(); ++k) {
    if (!a.base.is_admissible(a.permutation(k))) {
      return ValidationReport::fail("admissibility",
                                    "(" + g.name(k) + ") mixes base components");
    }
  }
  return ValidationReport::pass();
}

Subgroup stabilizer(const GroupAction& a, Point m) {
  if (!a.base.contains(m)) {
    throw PointNotInCarrier(m);
  }
  std::vector<Elem> members;
  for (Elem k = 0; k < a.group->size(); ++k) {
    if (a.act(k, m) == m) {
      members.push_back(k);
    }
  }
  return Subgroup::from_members(*a.group, std::move(members));
}

std::vector<Point> orbit(const GroupAction& a, Point m) {
  if (!a.base.contains(m)) {
    throw PointNotInCarrier(m);
  }
  std::vector<bool> seen(a.base.size(), false);
  for (Elem k = 0; k < a.group->size(); ++k) {
    seen[a.act(k, m)] = true;
  }
  std::vector<Point> out;
  for (Point x = 0; x < seen.size(); ++x) {
    if (seen[x]) {
      out.push_back(x);
    }
  }
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n, const Subgroup& in) {
  for (auto k : in.members()) {
    for (auto h : n.members()) {
      if (!n.contains(g.mul(g.mul(k, h), g.inv(k)))) {
        return false;
      }
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  return is_normal(g, n, Subgroup::whole(g));
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order() != g.size()) {
    throw NotASubgroup("subgroup belongs to a different group");
  }
  std::vector<Elem> core;
  for (auto x : h.members()) {
    bool in_all = true;
    // x lies in k H k^-1 iff k^-1 x k lies in H.
    for (Elem k = 0; k < g.size() && in_all; ++k) {
      in_all = h.contains(g.mul(g.mul(g.inv(k), x), k));
    }
    if (in_all) {
      core.push_back(x);
    }
  }
  return Subgroup::from_members(g, std::move(core));
}

CosetSpace coset_space(const GroupPtr& g, const Subgroup& h) {
  if (h.parent_order() != g->size()) {
    throw NotASubgroup("subgroup belongs to a different group");
  }
  CosetSpace cs{g, h, {}, {}, std::vector<std::uint32_t>(g->size(), kNone)};
  for (Elem k = 0; k < g->size(); ++k) {
    if (cs.class_of[k] != kNone) {
      continue;
    }
    auto const        idx = static_cast<std::uint32_t>(cs.classes.size());
    std::vector<Elem> cls;
    for (auto x : h.members()) {
      Elem const kx = g->mul(k, x);
      cls.push_back(kx);
      cs.class_of[kx] = idx;
    }
    std::sort(cls.begin(), cls.end());
    // Elements are visited in increasing order, so k is the class minimum.
    cs.reps.push_back(k);
    cs.classes.push_back(std::move(cls));
  }
  return cs;
}

QuotientGroup quotient_group(const FiniteGroup& k, const Subgroup& s, const Subgroup& h) {
  if (!h.subset_of(s) || !is_normal(k, h, s)) {
    throw NotASubgroup("quotient requires a normal subgroup");
  }
  QuotientGroup q;
  q.class_of.assign(k.size(), kNone);
  for (auto x : s.members()) {
    if (q.class_of[x] != kNone) {
      continue;
    }
    auto const idx = static_cast<std::uint32_t>(q.reps.size());
    for (auto y : h.members()) {
      q.class_of[k.mul(x, y)] = idx;
    }
    q.reps.push_back(x);
  }
  auto const               n = q.reps.size();
  std::vector<Elem>        table(n * n);
  std::vector<Elem>        inverse(n);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = k.name(q.reps[a]) + "H";
    inverse[a] = q.class_of[k.inv(q.reps[a])];
    for (Elem b = 0; b < n; ++b) {
      table[a * n + b] = q.class_of[k.mul(q.reps[a], q.reps[b])];
    }
  }
  q.group = std::make_shared<const FiniteGroup>(std::move(names), std::move(table),
                                                q.class_of[k.identity()],
                                                std::move(inverse));
  return q;
}

bool check_transitivity(const GroupAction& a, std::size_t n) {
  auto const size = a.base.size();
  if (n == 0) {
    throw std::invalid_argument("transitivity degree must be positive");
  }
  if (n > size) {
    // No distinct n-tuples exist.
    return false;
  }
  // Number of distinct n-tuples: size * (size - 1) * ... * (size - n + 1).
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= size - i;
  }
  std::vector<Point> start(n);
  std::iota(start.begin(), start.end(), Point{0});
  std::set<std::vector<Point>> seen;
  for (Elem k = 0; k < a.group->size(); ++k) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = a.act(k, start[i]);
    }
    seen.insert(std::move(img));
  }
  return seen.size() == total;
}

////////////////////////////////////////////////////////////////////////
// Symmetric groups and standard groups
////////////////////////////////////////////////////////////////////////

std::optional<Elem> SymmetricGroup::find(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) {
    return std::nullopt;
  }
  return it->second;
}

SymmetricGroup symmetric_group(const Base& base) {
  SymmetricGroup sym;
  Perm           p(base.size());
  std::iota(p.begin(), p.end(), Point{0});
  do {
    sym.index.emplace(p, static_cast<Elem>(sym.perms.size()));
    sym.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (sym.perms.size() > kDefaultGroupCap) {
    throw CapExceeded("symmetric group", sym.perms.size());
  }
  auto const               n = sym.perms.size();
  std::vector<Elem>        table(n * n);
  std::vector<Elem>        inverse(n);
  std::vector<std::string> names(n);
  Perm                     q(base.size());
  for (Elem a = 0; a < n; ++a) {
    auto const& f = sym.perms[a];
    names[a] = format_perm(base, f);
    for (Point x = 0; x < base.size(); ++x) {
      q[f[x]] = x;
    }
    inverse[a] = sym.index.at(q);
    for (Elem b = 0; b < n; ++b) {
      auto const& g = sym.perms[b];
      for (Point x = 0; x < base.size(); ++x) {
        q[x] = f[g[x]];
      }
      table[a * n + b] = sym.index.at(q);
    }
  }
  sym.group = std::make_shared<const FiniteGroup>(std::move(names), std::move(table),
                                                  Elem{0}, std::move(inverse));
  return sym;
}

GroupHom curry_action(const GroupAction& a, const SymmetricGroup& sym) {
  std::vector<Elem> m(a.group->size());
  for (Elem k = 0; k < m.size(); ++k) {
    m[k] = sym.index.at(a.permutation(k));
  }
  return GroupHom{a.group, sym.group, std::move(m)};
}

GroupHom curry_action(const GroupAction& a) {
  return curry_action(a, symmetric_group(a.base));
}

GroupAction uncurry_action(const GroupHom& f, const SymmetricGroup& sym,
                           const Base& base) {
  GroupAction a{f.source, base, {}};
  a.table.reserve(f.source->size() * base.size());
  for (Elem k = 0; k < f.source->size(); ++k) {
    auto const& p = sym.perms.at(f.map[k]);
    a.table.insert(a.table.end(), p.begin(), p.end());
  }
  return a;
}

GroupPtr cyclic_group(std::size_t n) {
  std::vector<std::string> names(n);
  std::vector<Elem>        table(n * n);
  std::vector<Elem>        inverse(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    inverse[a] = static_cast<Elem>((n - a) % n);
    for (Elem b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<Elem>((a + b) % n);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(table),
                                             Elem{0}, std::move(inverse));
}

GroupPtr trivial_group() {
  return std::make_shared<const FiniteGroup>(std::vector<std::string>{"e"},
                                             std::vector<Elem>{0}, Elem{0},
                                             std::vector<Elem>{0});
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  auto const               na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> names(n);
  std::vector<Elem>        table(n * n);
  std::vector<Elem>        inverse(n);
  for (Elem x = 0; x < na; ++x) {
    for (Elem y = 0; y < nb; ++y) {
      Elem const i = product_index(b, x, y);
      names[i] = "(" + a.name(x) + "," + b.name(y) + ")";
      inverse[i] = product_index(b, a.inv(x), b.inv(y));
      for (Elem u = 0; u < na; ++u) {
        for (Elem v = 0; v < nb; ++v) {
          table[i * n + product_index(b, u, v)] =
              product_index(b, a.mul(x, u), b.mul(y, v));
        }
      }
    }
  }
  return std::make_shared<const FiniteGroup>(
      std::move(names), std::move(table), product_index(b, a.identity(), b.identity()),
      std::move(inverse));
}

}  // namespace fingpd
