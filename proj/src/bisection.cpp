#include "fingpd/bisection.hpp"

#include <algorithm>

namespace fingpd {

Perm Bisection::target_map() const {
  Perm p(section.size());
  for (Point x = 0; x < p.size(); ++x) {
    p[x] = groupoid->tgt(section[x]);
  }
  return p;
}

bool is_bisection(const FiniteGroupoid& g, std::span<const Arrow> section) {
  auto const m = g.base().size();
  if (section.size() != m) {
    return false;
  }
  Perm f(m);
  for (Point x = 0; x < m; ++x) {
    if (section[x] >= g.size() || g.src(section[x]) != x) {
      return false;
    }
    f[x] = g.tgt(section[x]);
  }
  return g.base().is_admissible(f);
}

Bisection unit_bisection(const GroupoidPtr& g) {
  return Bisection{g, g->unit_table()};
}

namespace {

std::vector<Arrow> star_sections(const FiniteGroupoid&  g,
                                 std::span<const Arrow> s,
                                 std::span<const Arrow> t) {
  std::vector<Arrow> out(t.size());
  for (Point x = 0; x < t.size(); ++x) {
    out[x] = g.compose(s[g.tgt(t[x])], t[x]);
  }
  return out;
}

std::vector<Arrow> invert_section(const FiniteGroupoid& g, std::span<const Arrow> s) {
  std::vector<Arrow> out(s.size());
  // (tgt . s)^{-1}(x) is the y with tgt(s(y)) = x.
  for (Point y = 0; y < s.size(); ++y) {
    out[g.tgt(s[y])] = g.inv(s[y]);
  }
  return out;
}

std::string section_name(const FiniteGroupoid& g, std::span<const Arrow> s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + g.name(s[i]);
  }
  return out + "]";
}

}  // namespace

Bisection star(const Bisection& s, const Bisection& t) {
  if (s.groupoid != t.groupoid) {
    throw MixedGroupoids();
  }
  return Bisection{s.groupoid, star_sections(*s.groupoid, s.section, t.section)};
}

Bisection invert(const Bisection& s) {
  return Bisection{s.groupoid, invert_section(*s.groupoid, s.section)};
}

////////////////////////////////////////////////////////////////////////
// Enumeration
////////////////////////////////////////////////////////////////////////

BisectionGroup::BisectionGroup(GroupoidPtr g, std::shared_ptr<Store> store)
    : g_(std::move(g)), store_(store) {
  auto const& gg = *g_;
  auto const  m = store->width;
  count_ = m == 0 ? 1 : store->sections.size() / m;
  auto const n = count_;
  auto const unit = index_of(gg.unit_table());
  if (!unit) {
    throw AxiomViolation("unit", "unit section is not a bisection");
  }
  unit_ = *unit;

  std::vector<Elem> inverse(n);
  for (Elem s = 0; s < n; ++s) {
    auto const i = index_of(invert_section(gg, section(s)));
    if (!i) {
      throw AxiomViolation("inverse", "inverse of " + section_name(gg, section(s))
                                          + " is not a bisection");
    }
    inverse[s] = *i;
  }
  auto mul = [g = g_, st = store_](Elem a, Elem b) {
    auto const w = st->width;
    auto const c = star_sections(*g, {st->sections.data() + a * w, w},
                                 {st->sections.data() + b * w, w});
    auto it = st->index.find(c);
    if (it == st->index.end()) {
      throw AxiomViolation("closure", "star product " + section_name(*g, c)
                                          + " is not a bisection");
    }
    return it->second;
  };
  if (n <= kTabulateLimit) {
    std::vector<Elem>        table(n * n);
    std::vector<std::string> names(n);
    for (Elem a = 0; a < n; ++a) {
      names[a] = section_name(gg, section(a));
      for (Elem b = 0; b < n; ++b) {
        table[a * n + b] = mul(a, b);
      }
    }
    group_ = std::make_shared<const FiniteGroup>(std::move(names), std::move(table), unit_,
                                                 std::move(inverse));
  } else {
    auto name = [g = g_, st = store_](Elem a) {
      return section_name(*g, {st->sections.data() + a * st->width, st->width});
    };
    group_ = std::make_shared<const FiniteGroup>(n, name, mul, unit_, std::move(inverse));
  }

  std::vector<Point> beta(n * m);
  for (Elem s = 0; s < n; ++s) {
    for (Point x = 0; x < m; ++x) {
      beta[s * m + x] = gg.tgt(eval(s, x));
    }
  }
  beta_ = GroupAction{group_, gg.base(), std::move(beta)};
}

Bisection BisectionGroup::element(Elem s) const {
  auto const sec = section(s);
  return Bisection{g_, std::vector<Arrow>(sec.begin(), sec.end())};
}

std::optional<Elem> BisectionGroup::index_of(std::span<const Arrow> section) const {
  auto it = store_->index.find(std::vector<Arrow>(section.begin(), section.end()));
  if (it == store_->index.end()) {
    return std::nullopt;
  }
  return it->second;
}

namespace {

// Perfect-matching style search: x is matched to tgt(section(x)), never
// reusing a target and never leaving the component of x.
class BisectionSearch {
 public:
  BisectionSearch(const FiniteGroupoid& g, std::uint64_t cap)
      : g_(g), cap_(cap), used_(g.base().size(), false), cur_(g.base().size()) {}

  void run(BisectionGroup::Store& out) {
    out_ = &out;
    search(0);
  }

 private:
  void search(Point x) {
    auto const& base = g_.base();
    if (x == base.size()) {
      out_->index.emplace(cur_, static_cast<Elem>(out_->index.size()));
      out_->sections.insert(out_->sections.end(), cur_.begin(), cur_.end());
      return;
    }
    for (auto a : g_.out_of(x)) {
      Point const y = g_.tgt(a);
      if (used_[y] || base.component(y) != base.component(x)) {
        continue;
      }
      if (++nodes_ > cap_) {
        throw CapExceeded("bisection enumeration", nodes_);
      }
      used_[y] = true;
      cur_[x] = a;
      search(x + 1);
      used_[y] = false;
    }
  }

  const FiniteGroupoid&  g_;
  std::uint64_t          cap_;
  std::uint64_t          nodes_ = 0;
  std::vector<bool>      used_;
  std::vector<Arrow>     cur_;
  BisectionGroup::Store* out_ = nullptr;
};

}  // namespace

std::vector<std::vector<Arrow>> enumerate_sections(const FiniteGroupoid& g, std::uint64_t cap) {
  BisectionGroup::Store store;
  store.width = g.base().size();
  BisectionSearch(g, cap).run(store);
  std::vector<std::vector<Arrow>> out;
  auto const                      w = store.width;
  for (std::size_t i = 0; w && i < store.sections.size(); i += w) {
    out.emplace_back(store.sections.begin() + i, store.sections.begin() + i + w);
  }
  if (w == 0) {
    out.emplace_back();
  }
  return out;
}

BisPtr enumerate_bisections(const GroupoidPtr& g, std::uint64_t cap) {
  auto store = std::make_shared<BisectionGroup::Store>();
  store->width = g->base().size();
  // out_of lists are ascending, so solutions arrive in lexicographic order.
  BisectionSearch(*g, cap).run(*store);
  return std::make_shared<const BisectionGroup>(g, std::move(store));
}

SlicedGroupHom beta_star(const BisectionGroup& b) {
  return b.beta_action();
}

GroupHom bis_on_morphism(const GroupoidMorphism& phi,
                         const BisectionGroup&   source,
                         const BisectionGroup&   target) {
  auto const         m = source.groupoid()->base().size();
  std::vector<Elem>  map(source.size());
  std::vector<Arrow> image(m);
  for (Elem s = 0; s < source.size(); ++s) {
    for (Point x = 0; x < m; ++x) {
      image[x] = phi.map[source.eval(s, x)];
    }
    auto const t = target.index_of(image);
    if (!t) {
      throw InternalLawViolation("image of a bisection is not a bisection");
    }
    map[s] = *t;
  }
  return GroupHom{source.group(), target.group(), std::move(map)};
}

StabilizerSubgroups stabilizer_subgroups(const BisectionGroup& b, Point m) {
  auto const& g = *b.groupoid();
  if (!g.base().contains(m)) {
    throw PointNotInBase(m);
  }
  std::vector<Elem> loop, bis;
  for (Elem s = 0; s < b.size(); ++s) {
    Arrow const a = b.eval(s, m);
    if (g.tgt(a) == m) {
      loop.push_back(s);
      if (a == g.unit(m)) {
        bis.push_back(s);
      }
    }
  }
  auto const& grp = *b.group();
  StabilizerSubgroups out{Subgroup::from_members(grp, std::move(loop)),
                          Subgroup::from_members(grp, std::move(bis))};
  if (!is_normal(grp, out.bis, out.loop)) {
    throw InternalLawViolation("Bis_m is not normal in Loop_m");
  }
  return out;
}

std::vector<bool> covered_arrows(const BisectionGroup& b) {
  auto const&       g = *b.groupoid();
  std::vector<bool> covered(g.size(), false);
  for (Elem s = 0; s < b.size(); ++s) {
    for (Point x = 0; x < g.base().size(); ++x) {
      covered[b.eval(s, x)] = true;
    }
  }
  return covered;
}

bool has_bisection_through_each_arrow(const BisectionGroup& b) {
  auto const c = covered_arrows(b);
  return std::all_of(c.begin(), c.end(), [](bool v) { return v; });
}

}  // namespace fingpd
