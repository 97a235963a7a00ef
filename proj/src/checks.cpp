#include "fingpd/checks.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fingpd/fixtures.hpp"

namespace fingpd {

void Corpus::add(const Instance& x) {
  switch (x.kind) {
    case InstanceKind::group:
      // A bare group carries no law of its own; it is used through actions.
      break;
    case InstanceKind::action:
      actions.emplace_back(x.name, *x.action);
      break;
    case InstanceKind::groupoid:
      groupoids.emplace_back(x.name, x.groupoid);
      break;
    case InstanceKind::pair:
      pairs.emplace_back(x.name, *x.pair);
      break;
  }
}

Corpus fixture_corpus() {
  Corpus c;
  for (auto const& name : fixture_names()) {
    c.add(generate_fixture(name));
  }
  return c;
}

Corpus load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw ValidationError("corpus directory not found: " + dir);
  }
  std::vector<fs::path> files;
  for (auto const& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  Corpus c;
  for (auto const& f : files) {
    c.add(load_instance(f.string()));
  }
  return c;
}

////////////////////////////////////////////////////////////////////////
// Context
////////////////////////////////////////////////////////////////////////

CorpusContext::CorpusContext(const Corpus& corpus, std::uint64_t cap) : cap_(cap) {
  for (auto const& [name, g] : corpus.groupoids) {
    BisPtr bis;
    try {
      bis = enumerate_bisections(g, cap);
    } catch (const CapExceeded&) {
    }
    groupoids_.push_back(GroupoidEntry{name, g, std::move(bis)});
  }
  for (auto const& [name, a] : corpus.actions) {
    actions_.push_back(ActionEntry{name, a, ltimes(a)});
  }
  for (auto const& [name, p] : corpus.pairs) {
    auto   r = std::make_shared<const GaugeGroupoid>(gauge_groupoid(p));
    BisPtr bis;
    try {
      bis = enumerate_bisections(r->groupoid, cap);
    } catch (const CapExceeded&) {
    }
    pairs_.push_back(PairEntry{name, p, std::move(r), std::move(bis)});
  }
  for (std::size_t i = 0; i < groupoids_.size(); ++i) {
    for (std::size_t j = 0; j < groupoids_.size(); ++j) {
      if (groupoids_[i].g->base() != groupoids_[j].g->base()) {
        continue;
      }
      try {
        homs_[{i, j}] = enumerate_morphisms(groupoids_[i].g, groupoids_[j].g, cap);
      } catch (const CapExceeded&) {
      }
    }
  }
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    for (std::size_t j = 0; j < actions_.size(); ++j) {
      if (actions_[i].action.base != actions_[j].action.base) {
        continue;
      }
      try {
        slices_[{i, j}] = enumerate_slice_morphisms(actions_[i].action, actions_[j].action, cap);
      } catch (const CapExceeded&) {
      }
    }
  }
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
      if (pairs_[i].pair.base() != pairs_[j].pair.base()) {
        continue;
      }
      try {
        pair_homs_[{i, j}] = enumerate_pair_morphisms(pairs_[i].pair, pairs_[j].pair, cap);
      } catch (const CapExceeded&) {
      }
    }
  }
}

namespace {

template <class M>
auto lookup(const M& m, std::size_t a, std::size_t b) -> const typename M::mapped_type* {
  auto it = m.find({a, b});
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

const std::vector<GroupoidMorphism>* CorpusContext::homs(std::size_t a, std::size_t b) const {
  return lookup(homs_, a, b);
}

const std::vector<SliceMorphism>* CorpusContext::slice_homs(std::size_t a, std::size_t b) const {
  return lookup(slices_, a, b);
}

const std::vector<PairMorphism>* CorpusContext::pair_homs(std::size_t a, std::size_t b) const {
  return lookup(pair_homs_, a, b);
}

bool CorpusContext::in_bisbar_domain(std::size_t g) const {
  auto const& e = groupoids_.at(g);
  return e.bis && fingpd::in_bisbar_domain(*e.bis);
}

GroupoidMorphism coreflector_on_morphism(const GroupoidMorphism& psi,
                                         const Coreflection&     source,
                                         const Coreflection&     target) {
  std::vector<Arrow> preimage(target.counit.target->size(), kNone);
  for (Arrow e = 0; e < target.counit.map.size(); ++e) {
    preimage[target.counit.map[e]] = e;
  }
  std::vector<Arrow> map(source.groupoid->size());
  for (Arrow e = 0; e < map.size(); ++e) {
    auto const image = psi.map[source.counit.map[e]];
    if (preimage[image] == kNone) {
      throw InternalLawViolation("image of " + source.groupoid->name(e)
                                 + " lies on no bisection");
    }
    map[e] = preimage[image];
  }
  return GroupoidMorphism{source.groupoid, target.groupoid, std::move(map)};
}

namespace {

////////////////////////////////////////////////////////////////////////
// Law plumbing
////////////////////////////////////////////////////////////////////////

// Applies the requested corruption to a table owned by a law. The index
// counts defined entries only, so kNone holes of partial tables are never
// hit.
class Faults {
 public:
  explicit Faults(std::optional<Corruption> c) : c_(std::move(c)) {}

  bool targets(std::string_view table) const { return c_ && c_->table == table; }

  void apply(std::string_view table, std::vector<std::uint32_t>& v, std::size_t range) const {
    if (!targets(table) || range == 0) {
      return;
    }
    std::size_t seen = 0;
    for (auto& x : v) {
      if (x == kNone) {
        continue;
      }
      if (seen++ == c_->index) {
        x = static_cast<std::uint32_t>((x + c_->shift) % range);
        return;
      }
    }
  }

 private:
  std::optional<Corruption> c_;
};

using Case = std::function<Witness()>;

LawBody from_cases(std::vector<Case> cases, std::string note = {}) {
  auto shared = std::make_shared<std::vector<Case>>(std::move(cases));
  LawBody body;
  body.domain = shared->size();
  body.probe = [shared](std::size_t i) { return (*shared)[i](); };
  body.note = std::move(note);
  return body;
}

LawBody skipped(std::string why) {
  LawBody body;
  body.skip = std::move(why);
  return body;
}

struct Builder {
  std::string      family;
  std::vector<Law> laws;

  void add(const std::string& law, const std::string& instance, std::function<LawBody()> prep) {
    laws.push_back(Law{family + "/" + law + "/" + instance, std::move(prep)});
  }
};

const BisectionGroup& need_bis(const BisPtr& b, std::uint64_t cap) {
  if (!b) {
    throw CapExceeded("bisection enumeration", cap);
  }
  return *b;
}

template <class T>
const T& need(const T* p, std::uint64_t cap) {
  if (!p) {
    throw CapExceeded("hom-set enumeration", cap);
  }
  return *p;
}

std::string arrow_name(const FiniteGroupoid& g, Arrow a) {
  return a < g.size() ? g.name(a) : std::string("<none>");
}

std::string elem_name(const FiniteGroup& g, Elem a) {
  return a < g.size() ? g.name(a) : std::string("<none>");
}

std::string sec_name(const FiniteGroupoid& g, const std::vector<Arrow>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + arrow_name(g, s[i]);
  }
  return out + "]";
}

Witness same_map(const std::string& what, const GroupoidMorphism& lhs, const GroupoidMorphism& rhs) {
  for (Arrow a = 0; a < lhs.map.size(); ++a) {
    if (lhs.map[a] != rhs.map[a]) {
      return what + " differ at " + lhs.source->name(a) + ": "
             + arrow_name(*lhs.target, lhs.map[a]) + " vs " + arrow_name(*rhs.target, rhs.map[a]);
    }
  }
  return std::nullopt;
}

Witness is_identity(const std::string& what, const GroupoidMorphism& f) {
  for (Arrow a = 0; a < f.map.size(); ++a) {
    if (f.map[a] != a) {
      return what + " moves " + f.source->name(a) + " to " + arrow_name(*f.target, f.map[a]);
    }
  }
  return std::nullopt;
}

Witness same_hom(const std::string& what, const GroupHom& lhs, const GroupHom& rhs) {
  for (Elem a = 0; a < lhs.map.size(); ++a) {
    if (lhs.map[a] != rhs.map[a]) {
      return what + " differ at " + lhs.source->name(a) + ": "
             + elem_name(*lhs.target, lhs.map[a]) + " vs " + elem_name(*rhs.target, rhs.map[a]);
    }
  }
  return std::nullopt;
}

Witness report_witness(const std::string& what, const ValidationReport& r) {
  if (r.ok()) {
    return std::nullopt;
  }
  return what + " fails " + r.failed + ": " + r.witness;
}

template <class M>
bool contains_map(const std::vector<M>& v, const M& x) {
  return std::any_of(v.begin(), v.end(), [&](const M& y) { return y.map == x.map; });
}

bool contains_hom(const std::vector<SliceMorphism>& v, const GroupHom& h) {
  return std::any_of(v.begin(), v.end(), [&](const SliceMorphism& y) { return y.hom.map == h.map; });
}

bool contains_hom(const std::vector<PairMorphism>& v, const GroupHom& h) {
  return std::any_of(v.begin(), v.end(), [&](const PairMorphism& y) { return y.hom.map == h.map; });
}

BObject b_of(const CorpusContext::GroupoidEntry& e, std::uint64_t cap) {
  auto const& bis = need_bis(e.bis, cap);
  (void)bis;
  return BObject{e.g, e.bis, ltimes(e.bis->beta_action())};
}

GroupoidPtr with_comp(const FiniteGroupoid& g, std::vector<Arrow> comp) {
  std::vector<std::string> names(g.size());
  for (Arrow a = 0; a < g.size(); ++a) {
    names[a] = g.name(a);
  }
  return std::make_shared<const FiniteGroupoid>(g.base(), std::move(names), g.src_table(),
                                                g.tgt_table(), std::move(comp), g.unit_table(),
                                                g.inv_table());
}

// Bisbar(G) at m with its gauge groupoid and chi.
struct Bar {
  TransitivePair                       pair;
  std::shared_ptr<const GaugeGroupoid> r;
  GroupoidMorphism                     chi;
};

Bar make_bar(const BisectionGroup& bis, Point m) {
  auto p = bisbar(bis, m);
  auto r = std::make_shared<const GaugeGroupoid>(gauge_groupoid(p));
  auto chi = chi_canonical(bis, *r);
  return Bar{std::move(p), std::move(r), std::move(chi)};
}

////////////////////////////////////////////////////////////////////////
// bisection-group
////////////////////////////////////////////////////////////////////////

void bisection_group_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t i = 0; i < ctx->groupoids().size(); ++i) {
    auto const& name = ctx->groupoids()[i].name;

    b.add("axioms", name, [ctx, i, f] {
      auto g = ctx->groupoids()[i].g;
      if (f.targets("comp") && g->tabulated()) {
        auto comp = g->comp_table();
        f.apply("comp", comp, g->size());
        g = with_comp(*g, std::move(comp));
      }
      using Index = std::unordered_map<std::vector<Arrow>, std::size_t, SectionHash>;
      auto secs = std::make_shared<std::vector<std::vector<Arrow>>>(
          enumerate_sections(*g, ctx->cap()));
      auto index = std::make_shared<Index>();
      for (std::size_t s = 0; s < secs->size(); ++s) {
        index->emplace((*secs)[s], s);
      }
      LawBody body;
      body.domain = secs->size();
      body.probe = [g, secs, index](std::size_t s) -> Witness {
        auto const& gg = *g;
        auto        st = [&](const std::vector<Arrow>& x, const std::vector<Arrow>& y) {
          return star(Bisection{g, x}, Bisection{g, y}).section;
        };
        auto const& x = (*secs)[s];
        auto const& u = gg.unit_table();
        if (st(x, u) != x || st(u, x) != x) {
          return "unit law fails for " + sec_name(gg, x);
        }
        auto const xi = invert(Bisection{g, x}).section;
        if (!is_bisection(gg, xi)) {
          return "inverse of " + sec_name(gg, x) + " is not a bisection";
        }
        if (st(x, xi) != u || st(xi, x) != u) {
          return "inverse law fails for " + sec_name(gg, x);
        }
        for (auto const& y : *secs) {
          auto const xy = st(x, y);
          if (!is_bisection(gg, xy)) {
            return sec_name(gg, x) + " * " + sec_name(gg, y) + " = " + sec_name(gg, xy)
                   + " is not a bisection";
          }
          if (!index->count(xy)) {
            return sec_name(gg, x) + " * " + sec_name(gg, y) + " is not enumerated";
          }
          for (auto const& z : *secs) {
            if (st(xy, z) != st(x, st(y, z))) {
              return "associativity fails at (" + sec_name(gg, x) + ", " + sec_name(gg, y)
                     + ", " + sec_name(gg, z) + ")";
            }
          }
        }
        return std::nullopt;
      };
      body.note = std::to_string(secs->size()) + " bisections";
      return body;
    });

    b.add("beta-star-hom", name, [ctx, i, f] {
      auto const& bis = need_bis(ctx->groupoids()[i].bis, ctx->cap());
      auto const  m = bis.groupoid()->base().size();
      auto        beta = std::make_shared<std::vector<Point>>(bis.beta_action().table);
      f.apply("beta", *beta, m);
      LawBody body;
      body.domain = bis.size();
      body.probe = [&bis, beta, m](std::size_t s) -> Witness {
        auto const& grp = *bis.group();
        for (Elem t = 0; t < bis.size(); ++t) {
          auto const st = grp.mul(static_cast<Elem>(s), t);
          for (Point x = 0; x < m; ++x) {
            if ((*beta)[st * m + x] != (*beta)[s * m + (*beta)[t * m + x]]) {
              return "beta(" + grp.name(static_cast<Elem>(s)) + " * " + grp.name(t)
                     + ") differs from the composite at point " + std::to_string(x);
            }
          }
        }
        return std::nullopt;
      };
      return body;
    });

    b.add("beta-star-injective", name, [ctx, i, f] {
      auto const& e = ctx->groupoids()[i];
      auto const& bis = need_bis(e.bis, ctx->cap());
      auto const  m = e.g->base().size();
      for (Point x = 0; x < m; ++x) {
        for (Point y = 0; y < m; ++y) {
          if (e.g->between(y, x).size() > 1) {
            return skipped("some hom-set has more than one arrow");
          }
        }
      }
      auto beta = std::make_shared<std::vector<Point>>(bis.beta_action().table);
      f.apply("beta", *beta, m);
      std::vector<Case> cases;
      cases.push_back([beta, m, &bis]() -> Witness {
        std::set<std::vector<Point>> seen;
        for (Elem s = 0; s < bis.size(); ++s) {
          std::vector<Point> p(beta->begin() + s * m, beta->begin() + (s + 1) * m);
          if (!seen.insert(p).second) {
            return "two bisections share the permutation "
                   + format_perm(bis.groupoid()->base(), p);
          }
        }
        return std::nullopt;
      });
      cases.push_back([beta, m, &bis]() -> Witness {
        for (Elem s = 0; s < bis.size(); ++s) {
          std::vector<Point> p(beta->begin() + s * m, beta->begin() + (s + 1) * m);
          if (!bis.groupoid()->base().is_admissible(p)) {
            return bis.group()->name(s) + " covers a non-admissible map";
          }
        }
        return std::nullopt;
      });
      return from_cases(std::move(cases));
    });

    b.add("stabilizers", name, [ctx, i] {
      auto const& bis = need_bis(ctx->groupoids()[i].bis, ctx->cap());
      LawBody     body;
      body.domain = bis.groupoid()->base().size();
      body.probe = [&bis](std::size_t m) -> Witness {
        stabilizer_subgroups(bis, static_cast<Point>(m));
        return std::nullopt;
      };
      return body;
    });
  }
}

////////////////////////////////////////////////////////////////////////
// ltimes-adjunction
////////////////////////////////////////////////////////////////////////

void ltimes_adjunction_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  auto const& gs = ctx->groupoids();
  auto const& as = ctx->actions();
  for (std::size_t s = 0; s < as.size(); ++s) {
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (as[s].action.base != gs[i].g->base()) {
        continue;
      }
      auto const inst = as[s].name + "/" + gs[i].name;

      b.add("bijection", inst, [ctx, s, i, f] {
        auto const& lt = ctx->actions()[s].lt;
        auto const& e = ctx->groupoids()[i];
        auto const& bis = need_bis(e.bis, ctx->cap());
        auto homs = std::make_shared<std::vector<GroupoidMorphism>>(
            enumerate_morphisms(lt.groupoid, e.g, ctx->cap()));
        auto slices = std::make_shared<std::vector<SliceMorphism>>(
            enumerate_slice_morphisms(lt.action, bis.beta_action(), ctx->cap()));
        if (!homs->empty()) {
          f.apply("hom", homs->front().map, e.g->size());
        }
        if (!slices->empty()) {
          f.apply("slice", slices->front().hom.map, bis.size());
        }
        LawBody body;
        body.domain = homs->size() + slices->size();
        body.probe = [homs, slices, &lt, &bis](std::size_t k) -> Witness {
          if (k < homs->size()) {
            auto const& h = (*homs)[k];
            auto const  c = curry_hom(h, lt, bis);
            if (!contains_hom(*slices, c.hom)) {
              return "curry of morphism #" + std::to_string(k) + " is not a slice morphism";
            }
            return same_map("uncurry(curry(f)) and f", uncurry_hom(c, lt, bis), h);
          }
          auto const& z = (*slices)[k - homs->size()];
          auto const  u = uncurry_hom(z, lt, bis);
          if (auto w = report_witness("uncurry", validate_morphism(u))) {
            return w;
          }
          if (!contains_map(*homs, u)) {
            return "uncurry of slice morphism #" + std::to_string(k - homs->size())
                   + " is not enumerated";
          }
          return same_hom("curry(uncurry(z)) and z", curry_hom(u, lt, bis).hom, z.hom);
        };
        body.note = std::to_string(homs->size()) + " morphisms, " + std::to_string(slices->size())
                    + " slice morphisms";
        return body;
      });

      b.add("naturality-groupoid", inst, [ctx, s, i, f] {
        auto const& lt = ctx->actions()[s].lt;
        auto const& e = ctx->groupoids()[i];
        auto const& bis = need_bis(e.bis, ctx->cap());
        auto homs = std::make_shared<std::vector<GroupoidMorphism>>(
            enumerate_morphisms(lt.groupoid, e.g, ctx->cap()));
        std::vector<Case> cases;
        bool              corrupted = false;
        for (std::size_t j = 0; j < ctx->groupoids().size(); ++j) {
          auto const* phis = ctx->homs(i, j);
          auto const& e2 = ctx->groupoids()[j];
          if (!phis || !e2.bis) {
            continue;
          }
          for (auto const& phi : *phis) {
            auto bphi = std::make_shared<GroupHom>(bis_on_morphism(phi, bis, *e2.bis));
            if (!corrupted) {
              f.apply("Bis(phi)", bphi->map, e2.bis->size());
              corrupted = true;
            }
            for (std::size_t k = 0; k < homs->size(); ++k) {
              cases.push_back([&lt, &bis, &phi, &e2, bphi, homs, k]() -> Witness {
                auto const lhs = curry_hom(compose(phi, (*homs)[k]), lt, *e2.bis).hom;
                auto const rhs = compose(*bphi, curry_hom((*homs)[k], lt, bis).hom);
                return same_hom("curry(phi.f) and Bis(phi).curry(f)", lhs, rhs);
              });
            }
          }
        }
        return from_cases(std::move(cases));
      });

      b.add("naturality-slice", inst, [ctx, s, i, f] {
        auto const& e = ctx->groupoids()[i];
        auto const& bis = need_bis(e.bis, ctx->cap());
        auto const& lt = ctx->actions()[s].lt;
        auto homs = std::make_shared<std::vector<GroupoidMorphism>>(
            enumerate_morphisms(lt.groupoid, e.g, ctx->cap()));
        std::vector<Case> cases;
        bool              corrupted = false;
        for (std::size_t t = 0; t < ctx->actions().size(); ++t) {
          auto const* zetas = ctx->slice_homs(t, s);
          if (!zetas) {
            continue;
          }
          auto const& lt2 = ctx->actions()[t].lt;
          for (auto const& zeta : *zetas) {
            auto lz = std::make_shared<GroupoidMorphism>(ltimes_on_morphism(zeta, lt2, lt));
            if (!corrupted) {
              f.apply("ltimes(zeta)", lz->map, lt.groupoid->size());
              corrupted = true;
            }
            for (std::size_t k = 0; k < homs->size(); ++k) {
              cases.push_back([&lt, &lt2, &bis, &zeta, lz, homs, k]() -> Witness {
                auto const lhs = curry_hom(compose((*homs)[k], *lz), lt2, bis).hom;
                auto const rhs = compose(curry_hom((*homs)[k], lt, bis).hom, zeta.hom);
                return same_hom("curry(f.ltimes(z)) and curry(f).z", lhs, rhs);
              });
            }
          }
        }
        return from_cases(std::move(cases));
      });
    }
  }

  for (std::size_t s = 0; s < as.size(); ++s) {
    b.add("triangle-ltimes", as[s].name, [ctx, s, f] {
      auto const& lt = ctx->actions()[s].lt;
      auto        bo = std::make_shared<BObject>(b_object(lt.groupoid, ctx->cap()));
      auto        c = const_unit(lt, *bo->bis);
      f.apply("const", c.hom.map, bo->bis->size());
      auto ev = ev_counit(*bo);
      f.apply("ev", ev.map, lt.groupoid->size());
      auto const m = lt.action.base.size();
      auto       composite = std::make_shared<std::vector<Arrow>>(lt.groupoid->size());
      for (Arrow a = 0; a < composite->size(); ++a) {
        (*composite)[a] = ev.map[bo->b.arrow(c.hom(lt.group_part(a)), static_cast<Point>(a % m))];
      }
      LawBody body;
      body.domain = composite->size();
      body.probe = [composite, bo, &lt](std::size_t a) -> Witness {
        if ((*composite)[a] != a) {
          return "ev.ltimes(const) moves " + lt.groupoid->name(static_cast<Arrow>(a)) + " to "
                 + arrow_name(*lt.groupoid, (*composite)[a]);
        }
        return std::nullopt;
      };
      return body;
    });
  }

  for (std::size_t i = 0; i < gs.size(); ++i) {
    b.add("triangle-bis", gs[i].name, [ctx, i, f] {
      auto bo = std::make_shared<BObject>(b_of(ctx->groupoids()[i], ctx->cap()));
      auto bb = std::make_shared<BisPtr>(enumerate_bisections(bo->b.groupoid, ctx->cap()));
      auto c = const_unit(bo->b, **bb);
      f.apply("const", c.hom.map, (*bb)->size());
      auto bev = bis_on_morphism(ev_counit(*bo), **bb, *bo->bis);
      f.apply("Bis(ev)", bev.map, bo->bis->size());
      auto composite = std::make_shared<GroupHom>(compose(bev, c.hom));
      LawBody body;
      body.domain = bo->bis->size();
      body.probe = [composite, bo, bb](std::size_t s) -> Witness {
        if ((*composite)(static_cast<Elem>(s)) != s) {
          return "Bis(ev).const moves " + bo->bis->group()->name(static_cast<Elem>(s));
        }
        return std::nullopt;
      };
      return body;
    });
  }
}

////////////////////////////////////////////////////////////////////////
// comonad
////////////////////////////////////////////////////////////////////////

struct ComonadData {
  BObject          bo;
  BObject          bb;
  GroupoidMorphism delta;
};

std::shared_ptr<ComonadData> comonad_data(const CorpusContext& ctx, std::size_t i) {
  auto bo = b_of(ctx.groupoids()[i], ctx.cap());
  auto bb = b_object(bo.b.groupoid, ctx.cap());
  auto delta = comultiplication(bo, bb);
  return std::make_shared<ComonadData>(ComonadData{std::move(bo), std::move(bb), std::move(delta)});
}

LawBody identity_on_arrows(std::shared_ptr<const std::vector<Arrow>> composite,
                           GroupoidPtr                               g,
                           std::string                               what) {
  LawBody body;
  body.domain = composite->size();
  body.probe = [composite, g, what](std::size_t a) -> Witness {
    if ((*composite)[a] != a) {
      return what + " moves " + g->name(static_cast<Arrow>(a)) + " to "
             + arrow_name(*g, (*composite)[a]);
    }
    return std::nullopt;
  };
  return body;
}

std::shared_ptr<const std::vector<Arrow>> composite_map(const std::vector<Arrow>& outer,
                                                        const std::vector<Arrow>& inner) {
  auto out = std::make_shared<std::vector<Arrow>>(inner.size());
  for (std::size_t a = 0; a < inner.size(); ++a) {
    (*out)[a] = inner[a] < outer.size() ? outer[inner[a]] : kNone;
  }
  return out;
}

void comonad_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t i = 0; i < ctx->groupoids().size(); ++i) {
    auto const& name = ctx->groupoids()[i].name;

    b.add("counit-bis", name, [ctx, i, f] {
      auto d = comonad_data(*ctx, i);
      f.apply("delta", d->delta.map, d->bb.b.groupoid->size());
      auto bev = b_on_morphism(ev_counit(d->bo), d->bb, d->bo);
      f.apply("B(ev)", bev.map, d->bo.b.groupoid->size());
      return identity_on_arrows(composite_map(bev.map, d->delta.map), d->bo.b.groupoid,
                                 "B(ev).delta");
    });

    b.add("counit-ev", name, [ctx, i, f] {
      auto d = comonad_data(*ctx, i);
      f.apply("delta", d->delta.map, d->bb.b.groupoid->size());
      auto ev = ev_counit(d->bb);
      f.apply("ev", ev.map, d->bo.b.groupoid->size());
      return identity_on_arrows(composite_map(ev.map, d->delta.map), d->bo.b.groupoid,
                                "ev_B.delta");
    });

    b.add("coassociativity", name, [ctx, i, f] {
      auto d = comonad_data(*ctx, i);
      auto bbb = b_object(d->bb.b.groupoid, ctx->cap());
      auto delta_b = comultiplication(d->bb, bbb);
      auto b_delta = b_on_morphism(d->delta, d->bb, bbb);
      f.apply("delta", d->delta.map, d->bb.b.groupoid->size());
      auto lhs = composite_map(delta_b.map, d->delta.map);
      auto rhs = composite_map(b_delta.map, d->delta.map);
      auto g = d->bo.b.groupoid;
      auto g3 = bbb.b.groupoid;
      LawBody body;
      body.domain = lhs->size();
      body.probe = [lhs, rhs, g, g3](std::size_t a) -> Witness {
        if ((*lhs)[a] != (*rhs)[a]) {
          return "delta_B.delta and B(delta).delta differ at " + g->name(static_cast<Arrow>(a))
                 + ": " + arrow_name(*g3, (*lhs)[a]) + " vs " + arrow_name(*g3, (*rhs)[a]);
        }
        return std::nullopt;
      };
      return body;
    });
  }
}

////////////////////////////////////////////////////////////////////////
// quotient
////////////////////////////////////////////////////////////////////////

void quotient_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t i = 0; i < ctx->groupoids().size(); ++i) {
    b.add("reconstruction", ctx->groupoids()[i].name, [ctx, i, f] {
      auto const& e = ctx->groupoids()[i];
      auto const& bis = need_bis(e.bis, ctx->cap());
      if (!has_bisection_through_each_arrow(bis)) {
        return skipped("some arrow lies on no bisection");
      }
      auto bo = std::make_shared<BObject>(b_of(e, ctx->cap()));
      auto r = std::make_shared<ArrowCongruence>(reconstruction_relation(*bo));
      auto ev = std::make_shared<GroupoidMorphism>(ev_counit(*bo));
      f.apply("ev", ev->map, e.g->size());
      std::vector<Case> cases;
      cases.push_back([r]() { return report_witness("relation", check_congruence(*r)); });
      cases.push_back([ev]() -> Witness {
        if (!ev->is_surjective()) {
          return std::string("ev is not surjective");
        }
        return std::nullopt;
      });
      cases.push_back([ev, r, bo]() -> Witness {
        auto const& bg = *bo->b.groupoid;
        for (Arrow a = 0; a < bg.size(); ++a) {
          for (Arrow c = 0; c < bg.size(); ++c) {
            if ((ev->map[a] == ev->map[c]) != r->related(a, c)) {
              return "ev fibre and class differ on (" + bg.name(a) + ", " + bg.name(c) + ")";
            }
          }
        }
        return std::nullopt;
      });
      cases.push_back([r, ev]() -> Witness {
        auto q = quotient_groupoid(*r);
        if (!check_effective_quotient(*r, q.projection)) {
          return std::string("quotient is not effective");
        }
        auto h = factor_through_quotient(q, *r, *ev);
        if (!h) {
          return std::string("ev does not factor through the quotient");
        }
        if (auto w = report_witness("factorization", validate_morphism(*h))) {
          return w;
        }
        if (!h->is_isomorphism()) {
          return std::string("factorization of ev is not an isomorphism");
        }
        return report_witness("inverse of factorization", validate_morphism(h->inverse()));
      });
      return from_cases(std::move(cases));
    });
  }
}

////////////////////////////////////////////////////////////////////////
// gauge
////////////////////////////////////////////////////////////////////////

void gauge_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t p = 0; p < ctx->pairs().size(); ++p) {
    auto const& name = ctx->pairs()[p].name;

    b.add("structure", name, [ctx, p, f] {
      auto const& e = ctx->pairs()[p];
      auto        r = e.r;
      auto        g = r->groupoid;
      if (f.targets("comp")) {
        auto const& src = *g;
        std::vector<Arrow> comp(src.size() * src.size(), kNone);
        for (Arrow x = 0; x < src.size(); ++x) {
          for (Arrow y = 0; y < src.size(); ++y) {
            comp[x * src.size() + y] = src.compose(x, y);
          }
        }
        f.apply("comp", comp, src.size());
        g = with_comp(src, std::move(comp));
      }
      auto const&       pair = e.pair;
      auto const        m = pair.base().size();
      auto const        lambda = r->bundle.lambda_order();
      std::vector<Case> cases;
      cases.push_back([g]() { return report_witness("gauge groupoid", validate_groupoid(*g)); });
      cases.push_back([g, m, lambda]() -> Witness {
        if (g->size() != m * m * lambda) {
          return std::to_string(g->size()) + " arrows, expected " + std::to_string(m * m * lambda);
        }
        return std::nullopt;
      });
      cases.push_back([g]() -> Witness {
        if (!is_locally_trivial(*g)) {
          return std::string("not locally trivial");
        }
        return std::nullopt;
      });
      cases.push_back([g, r, &pair]() -> Witness {
        auto const v = vertex_group(*g, pair.basepoint);
        for (auto const& h : enumerate_group_homs(r->bundle.lambda.group, v)) {
          if (h.is_bijective()) {
            return std::nullopt;
          }
        }
        return std::string("vertex group is not isomorphic to Lambda");
      });
      cases.push_back([g, &pair]() -> Witness {
        if (pair.h.members() != stabilizer(pair.action, pair.basepoint).members()) {
          return std::nullopt;
        }
        auto const homs = enumerate_morphisms(g, pair_groupoid(pair.base()));
        if (homs.size() != 1 || !homs.front().is_isomorphism()) {
          return "R(theta, Stab) has " + std::to_string(homs.size())
                 + " morphisms to the pair groupoid, none an isomorphism";
        }
        return std::nullopt;
      });
      return from_cases(std::move(cases));
    });

    b.add("bundle", name, [ctx, p, f] {
      auto const& bundle = ctx->pairs()[p].r->bundle;
      auto        right = std::make_shared<std::vector<std::uint32_t>>(bundle.right);
      f.apply("right", *right, bundle.size());
      auto const n = bundle.size();
      auto const l = bundle.lambda_order();
      LawBody    body;
      body.domain = n;
      body.probe = [&bundle, right, n, l](std::size_t pp) -> Witness {
        auto const  q0 = static_cast<std::uint32_t>(pp);
        auto const& lg = *bundle.lambda.group;
        auto        act = [&](std::uint32_t q, Elem x) { return (*right)[q * l + x]; };
        auto const  name = bundle.coset_name(q0);
        if (act(q0, lg.identity()) != q0) {
          return "unit of Lambda moves " + name;
        }
        for (Elem x = 0; x < l; ++x) {
          auto const qx = act(q0, x);
          if (qx >= n || bundle.projection[qx] != bundle.projection[q0]) {
            return "right action leaves the fibre of " + name;
          }
          if (x != lg.identity() && qx == q0) {
            return "right action is not free at " + name;
          }
          for (Elem y = 0; y < l; ++y) {
            if (act(qx, y) != act(q0, lg.mul(x, y))) {
              return "right action is not an action at " + name;
            }
          }
          for (Elem k = 0; k < bundle.pair.group()->size(); ++k) {
            if (bundle.act_left(k, qx) != act(bundle.act_left(k, q0), x)) {
              return "left and right actions do not commute at " + name;
            }
          }
        }
        for (auto q : bundle.fibre[bundle.projection[q0]]) {
          if (act(q0, bundle.delta_of(q0, q)) != q) {
            return "delta(" + name + ", " + bundle.coset_name(q) + ") does not align";
          }
        }
        return std::nullopt;
      };
      return body;
    });

    b.add("automorphisms", name, [ctx, p, f] {
      auto const& e = ctx->pairs()[p];
      auto const& bis = need_bis(e.bis_r, ctx->cap());
      if (e.r->bundle.size() > 7) {
        return skipped("more than 7 cosets");
      }
      auto auts = std::make_shared<std::vector<std::vector<std::uint32_t>>>(
          bundle_automorphisms(e.r->bundle, ctx->cap()));
      auto phi = std::make_shared<std::vector<Elem>>();
      for (auto const& a : *auts) {
        auto const s = bis.index_of(automorphism_to_bisection(a, *e.r).section);
        phi->push_back(s ? *s : kNone);
      }
      f.apply("Phi", *phi, bis.size());
      auto index = std::make_shared<std::map<std::vector<std::uint32_t>, std::size_t>>();
      for (std::size_t k = 0; k < auts->size(); ++k) {
        index->emplace((*auts)[k], k);
      }
      LawBody body;
      body.domain = auts->size() + 1;
      body.probe = [auts, phi, index, &bis](std::size_t k) -> Witness {
        if (k == auts->size()) {
          std::set<Elem> image(phi->begin(), phi->end());
          if (image.size() != auts->size() || auts->size() != bis.size()) {
            return std::to_string(auts->size()) + " automorphisms, "
                   + std::to_string(image.size()) + " distinct images, "
                   + std::to_string(bis.size()) + " bisections";
          }
          return std::nullopt;
        }
        if ((*phi)[k] == kNone) {
          return "automorphism #" + std::to_string(k) + " gives no bisection";
        }
        auto const& fk = (*auts)[k];
        for (std::size_t j = 0; j < auts->size(); ++j) {
          std::vector<std::uint32_t> c(fk.size());
          for (std::size_t q = 0; q < c.size(); ++q) {
            c[q] = fk[(*auts)[j][q]];
          }
          auto it = index->find(c);
          if (it == index->end()) {
            return "automorphisms are not closed under composition";
          }
          if ((*phi)[it->second] != bis.group()->mul((*phi)[k], (*phi)[j])) {
            return "Phi(f#" + std::to_string(k) + " . f#" + std::to_string(j)
                   + ") differs from the star product of the images";
          }
        }
        return std::nullopt;
      };
      body.note = std::to_string(auts->size()) + " automorphisms";
      return body;
    });
  }
}

////////////////////////////////////////////////////////////////////////
// canonical
////////////////////////////////////////////////////////////////////////

void canonical_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t p = 0; p < ctx->pairs().size(); ++p) {
    auto const& name = ctx->pairs()[p].name;

    b.add("a-morphism", name, [ctx, p, f] {
      auto const& e = ctx->pairs()[p];
      auto const& bis = need_bis(e.bis_r, ctx->cap());
      auto        a = std::make_shared<GroupHom>(a_canonical(*e.r, bis));
      f.apply("a", a->map, bis.size());
      auto    core = std::make_shared<Subgroup>(pair_kernel(e.pair));
      LawBody body;
      body.domain = e.pair.group()->size();
      body.probe = [&e, &bis, a, core](std::size_t kk) -> Witness {
        auto const  k = static_cast<Elem>(kk);
        auto const& grp = *e.pair.group();
        auto const& bg = *bis.group();
        auto const  kn = grp.name(k);
        if ((*a)(k) >= bis.size()) {
          return "a(" + kn + ") is out of range";
        }
        for (Elem l = 0; l < grp.size(); ++l) {
          if ((*a)(grp.mul(k, l)) != bg.mul((*a)(k), (*a)(l))) {
            return "a is not a homomorphism at (" + kn + ", " + grp.name(l) + ")";
          }
        }
        for (Point x = 0; x < e.pair.base().size(); ++x) {
          if (bis.beta_action().act((*a)(k), x) != e.pair.action.act(k, x)) {
            return "beta.ev.a(" + kn + ") differs from theta at point " + std::to_string(x);
          }
        }
        auto const m = e.pair.basepoint;
        if (e.pair.h.contains(k) && bis.eval((*a)(k), m) != e.r->groupoid->unit(m)) {
          return "a(" + kn + ") is not in Bis_m although " + kn + " is in H";
        }
        if (((*a)(k) == bg.identity()) != core->contains(k)) {
          return kn + " is in exactly one of ker(a) and the normal core";
        }
        return std::nullopt;
      };
      return body;
    });

    b.add("section-independence", name, [ctx, p, f] {
      auto const& e = ctx->pairs()[p];
      auto const& bis = need_bis(e.bis_r, ctx->cap());
      auto        a = std::make_shared<GroupHom>(a_canonical(*e.r, bis));
      f.apply("a", a->map, bis.size());
      auto    alt = std::make_shared<GroupHom>(
          a_canonical(*e.r, bis, alternative_section(e.r->bundle)));
      LawBody body;
      body.domain = 1;
      body.probe = [a, alt](std::size_t) {
        return same_hom("a with the minimal and the maximal section", *a, *alt);
      };
      return body;
    });

    b.add("kernel-maps", name, [ctx, p, f] {
      auto maps = std::make_shared<std::vector<PairMorphism>>();
      for (std::size_t q = 0; q < ctx->pairs().size(); ++q) {
        if (auto const* v = ctx->pair_homs(p, q)) {
          maps->insert(maps->end(), v->begin(), v->end());
        }
      }
      if (!maps->empty()) {
        f.apply("hom", maps->front().hom.map, maps->front().target.group()->size());
      }
      LawBody body;
      body.domain = maps->size();
      body.probe = [maps](std::size_t k) -> Witness {
        auto const& m = (*maps)[k];
        auto const  src = pair_kernel(m.source);
        auto const  dst = pair_kernel(m.target);
        for (auto x : src.members()) {
          if (!dst.contains(m.hom(x))) {
            return "morphism #" + std::to_string(k) + " sends kernel element "
                   + m.source.group()->name(x) + " outside the kernel";
          }
        }
        return std::nullopt;
      };
      return body;
    });
  }
}

////////////////////////////////////////////////////////////////////////
// r-adjunction
////////////////////////////////////////////////////////////////////////

// Everything needed to compare Hom(p, Bisbar(G)) and Hom(R(p), G).
struct RAdjunction {
  const CorpusContext::PairEntry* p = nullptr;
  const BisectionGroup*           bis_g = nullptr;
  GroupoidPtr                     g;
  Bar                             bar;
  GroupHom                        a;

  GroupoidMorphism i_of(const PairMorphism& phi) const {
    return compose(bar.chi, gauge_on_morphism(phi, *p->r, *bar.r));
  }
  PairMorphism j_of(const GroupoidMorphism& psi) const {
    return PairMorphism{p->pair, bar.pair, compose(bis_on_morphism(psi, *p->bis_r, *bis_g), a)};
  }
};

std::shared_ptr<RAdjunction> r_adjunction(const CorpusContext& ctx,
                                          std::size_t          p,
                                          std::size_t          i,
                                          const Faults&        f) {
  auto const& pe = ctx.pairs()[p];
  auto const& ge = ctx.groupoids()[i];
  auto const& bis_r = need_bis(pe.bis_r, ctx.cap());
  auto const& bis_g = need_bis(ge.bis, ctx.cap());
  auto        out = std::make_shared<RAdjunction>(
      RAdjunction{&pe, &bis_g, ge.g, make_bar(bis_g, pe.pair.basepoint), a_canonical(*pe.r, bis_r)});
  f.apply("chi", out->bar.chi.map, ge.g->size());
  f.apply("a", out->a.map, bis_r.size());
  return out;
}

void r_adjunction_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t p = 0; p < ctx->pairs().size(); ++p) {
    for (std::size_t i = 0; i < ctx->groupoids().size(); ++i) {
      if (!ctx->in_bisbar_domain(i) || ctx->groupoids()[i].g->base() != ctx->pairs()[p].pair.base()) {
        continue;
      }
      auto const inst = ctx->pairs()[p].name + "/" + ctx->groupoids()[i].name;

      b.add("bijection", inst, [ctx, p, i, f] {
        auto d = r_adjunction(*ctx, p, i, f);
        auto pms = std::make_shared<std::vector<PairMorphism>>(
            enumerate_pair_morphisms(d->p->pair, d->bar.pair, ctx->cap()));
        auto gms = std::make_shared<std::vector<GroupoidMorphism>>(
            enumerate_morphisms(d->p->r->groupoid, d->g, ctx->cap()));
        LawBody body;
        body.domain = pms->size() + gms->size();
        body.probe = [d, pms, gms](std::size_t k) -> Witness {
          if (k < pms->size()) {
            auto const& phi = (*pms)[k];
            auto const  i = d->i_of(phi);
            if (!contains_map(*gms, i)) {
              return "I of pair morphism #" + std::to_string(k) + " is not a groupoid morphism";
            }
            return same_hom("J(I(phi)) and phi", d->j_of(i).hom, phi.hom);
          }
          auto const& psi = (*gms)[k - pms->size()];
          auto const  j = d->j_of(psi);
          if (auto const r = validate_pair_morphism(j); !r.ok()) {
            return report_witness("J(psi)", r.report);
          }
          if (!contains_hom(*pms, j.hom)) {
            return "J of morphism #" + std::to_string(k - pms->size()) + " is not enumerated";
          }
          return same_map("I(J(psi)) and psi", d->i_of(j), psi);
        };
        body.note = std::to_string(pms->size()) + " pair morphisms, "
                    + std::to_string(gms->size()) + " groupoid morphisms";
        return body;
      });

      b.add("naturality-pair", inst, [ctx, p, i, f] {
        auto d = r_adjunction(*ctx, p, i, Faults(std::nullopt));
        auto pms = std::make_shared<std::vector<PairMorphism>>(
            enumerate_pair_morphisms(d->p->pair, d->bar.pair, ctx->cap()));
        std::vector<Case> cases;
        bool              corrupted = false;
        for (std::size_t q = 0; q < ctx->pairs().size(); ++q) {
          auto const* fs = ctx->pair_homs(q, p);
          if (!fs) {
            continue;
          }
          auto const& qe = ctx->pairs()[q];
          for (auto const& fm : *fs) {
            auto rf = std::make_shared<GroupoidMorphism>(gauge_on_morphism(fm, *qe.r, *d->p->r));
            if (!corrupted) {
              f.apply("R(f)", rf->map, d->p->r->groupoid->size());
              corrupted = true;
            }
            for (auto const& phi : *pms) {
              cases.push_back([d, pms, &fm, &phi, &qe, rf]() -> Witness {
                auto const composite = compose(phi, fm);
                auto const lhs = compose(d->bar.chi, gauge_on_morphism(composite, *qe.r, *d->bar.r));
                auto const rhs = compose(d->i_of(phi), *rf);
                return same_map("I(phi.f) and I(phi).R(f)", lhs, rhs);
              });
            }
          }
        }
        return from_cases(std::move(cases));
      });

      b.add("naturality-groupoid", inst, [ctx, p, i, f] {
        auto d = r_adjunction(*ctx, p, i, Faults(std::nullopt));
        auto pms = std::make_shared<std::vector<PairMorphism>>(
            enumerate_pair_morphisms(d->p->pair, d->bar.pair, ctx->cap()));
        std::vector<Case> cases;
        bool              corrupted = false;
        for (std::size_t j = 0; j < ctx->groupoids().size(); ++j) {
          auto const* psis = ctx->homs(i, j);
          if (!psis || !ctx->in_bisbar_domain(j)) {
            continue;
          }
          auto d2 = r_adjunction(*ctx, p, j, Faults(std::nullopt));
          for (auto const& psi : *psis) {
            auto bp = std::make_shared<PairMorphism>(
                bisbar_on_morphism(psi, *d->bis_g, *d2->bis_g, d->p->pair.basepoint));
            if (!corrupted) {
              f.apply("Bisbar(psi)", bp->hom.map, d2->bis_g->size());
              corrupted = true;
            }
            for (auto const& phi : *pms) {
              cases.push_back([d, d2, pms, &psi, &phi, bp]() -> Witness {
                auto const lhs = d2->i_of(compose(*bp, phi));
                auto const rhs = compose(psi, d->i_of(phi));
                return same_map("I(Bisbar(psi).phi) and psi.I(phi)", lhs, rhs);
              });
            }
          }
        }
        return from_cases(std::move(cases));
      });
    }
  }

  for (std::size_t p = 0; p < ctx->pairs().size(); ++p) {
    b.add("triangle-counit", ctx->pairs()[p].name, [ctx, p, f] {
      auto const& e = ctx->pairs()[p];
      auto const& bis = need_bis(e.bis_r, ctx->cap());
      auto const  bar = make_bar(bis, e.pair.basepoint);
      auto        a = a_canonical(*e.r, bis);
      f.apply("a", a.map, bis.size());
      auto ra = gauge_on_morphism(PairMorphism{e.pair, bar.pair, std::move(a)}, *e.r, *bar.r);
      auto chi = bar.chi;
      f.apply("chi", chi.map, e.r->groupoid->size());
      return identity_on_arrows(composite_map(chi.map, ra.map), e.r->groupoid, "chi_R.R(a)");
    });
  }

  for (std::size_t i = 0; i < ctx->groupoids().size(); ++i) {
    b.add("triangle-unit", ctx->groupoids()[i].name, [ctx, i, f] {
      auto const& e = ctx->groupoids()[i];
      auto const& bis = need_bis(e.bis, ctx->cap());
      if (!ctx->in_bisbar_domain(i)) {
        throw HypothesisNotMet("not locally trivial with a bisection through each arrow");
      }
      auto bar = make_bar(bis, 0);
      auto bis_rbar = enumerate_bisections(bar.r->groupoid, ctx->cap());
      auto a = a_canonical(*bar.r, *bis_rbar);
      f.apply("a", a.map, bis_rbar->size());
      f.apply("chi", bar.chi.map, e.g->size());
      auto composite = std::make_shared<GroupHom>(
          compose(bis_on_morphism(bar.chi, *bis_rbar, bis), a));
      LawBody body;
      body.domain = bis.size();
      body.probe = [composite, &bis](std::size_t s) -> Witness {
        if ((*composite)(static_cast<Elem>(s)) != s) {
          return "Bis(chi).a moves " + bis.group()->name(static_cast<Elem>(s));
        }
        return std::nullopt;
      };
      return body;
    });
  }
}

////////////////////////////////////////////////////////////////////////
// coreflection
////////////////////////////////////////////////////////////////////////

void coreflection_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t i = 0; i < ctx->groupoids().size(); ++i) {
    auto const& name = ctx->groupoids()[i].name;

    b.add("universal", name, [ctx, i, f] {
      auto const& e = ctx->groupoids()[i];
      auto const& bis = need_bis(e.bis, ctx->cap());
      auto        c = std::make_shared<Coreflection>(coreflector(bis, 0));
      f.apply("counit", c->counit.map, e.g->size());
      auto preimage = std::make_shared<std::vector<Arrow>>(e.g->size(), kNone);
      for (Arrow a = 0; a < c->counit.map.size(); ++a) {
        (*preimage)[c->counit.map[a]] = a;
      }
      std::vector<Case> cases;
      for (std::size_t k = 0; k < ctx->groupoids().size(); ++k) {
        auto const& ke = ctx->groupoids()[k];
        auto const* to_g = ctx->homs(k, i);
        if (!to_g || !ke.bis || !has_bisection_through_each_arrow(*ke.bis)) {
          continue;
        }
        auto to_e = std::make_shared<std::vector<GroupoidMorphism>>(
            enumerate_morphisms(ke.g, c->groupoid, ctx->cap()));
        auto j_of = [c, preimage](const GroupoidMorphism& psi) -> std::optional<GroupoidMorphism> {
          std::vector<Arrow> map(psi.map.size());
          for (Arrow a = 0; a < map.size(); ++a) {
            map[a] = (*preimage)[psi.map[a]];
            if (map[a] == kNone) {
              return std::nullopt;
            }
          }
          return GroupoidMorphism{psi.source, c->groupoid, std::move(map)};
        };
        for (std::size_t n = 0; n < to_e->size(); ++n) {
          cases.push_back([c, to_e, n, to_g, j_of]() -> Witness {
            auto const i_phi = compose(c->counit, (*to_e)[n]);
            if (!contains_map(*to_g, i_phi)) {
              return "counit.phi is not a morphism for phi #" + std::to_string(n);
            }
            auto const back = j_of(i_phi);
            if (!back) {
              return "counit.phi leaves the image of the counit";
            }
            return same_map("J(I(phi)) and phi", *back, (*to_e)[n]);
          });
        }
        for (auto const& psi : *to_g) {
          cases.push_back([c, to_e, &psi, j_of]() -> Witness {
            auto const j = j_of(psi);
            if (!j) {
              return std::string("a morphism from a covered groupoid leaves the covered arrows");
            }
            if (!contains_map(*to_e, *j)) {
              return std::string("J(psi) is not a morphism into E(G)");
            }
            return same_map("I(J(psi)) and psi", compose(c->counit, *j), psi);
          });
        }
      }
      return from_cases(std::move(cases));
    });

    b.add("image", name, [ctx, i, f] {
      auto const& e = ctx->groupoids()[i];
      auto const& bis = need_bis(e.bis, ctx->cap());
      auto        c = std::make_shared<Coreflection>(coreflector(bis, 0));
      f.apply("counit", c->counit.map, e.g->size());
      auto              covered = std::make_shared<std::vector<bool>>(covered_arrows(bis));
      std::vector<Case> cases;
      cases.push_back([c]() { return report_witness("counit", validate_morphism(c->counit)); });
      cases.push_back([c]() -> Witness {
        if (!c->counit.is_injective()) {
          return std::string("counit is not injective");
        }
        return std::nullopt;
      });
      cases.push_back([c, covered, &e]() -> Witness {
        std::vector<bool> image(covered->size(), false);
        for (auto a : c->counit.map) {
          if (a < image.size()) {
            image[a] = true;
          }
        }
        for (Arrow a = 0; a < image.size(); ++a) {
          if (image[a] != (*covered)[a]) {
            return "image of the counit and covered arrows differ at " + e.g->name(a);
          }
        }
        return std::nullopt;
      });
      cases.push_back([c, covered, &e]() -> Witness {
        bool const all = std::all_of(covered->begin(), covered->end(), [](bool v) { return v; });
        if (c->groupoid->base() != e.g->base()) {
          return std::string("E(G) is not wide");
        }
        if (c->via_gauge != (all && is_locally_trivial(*e.g))) {
          return std::string("E(G) is built through the gauge groupoid exactly when Bisbar(G) "
                             "is a transitive pair, which fails here");
        }
        return std::nullopt;
      });
      return from_cases(std::move(cases));
    });
  }
}

////////////////////////////////////////////////////////////////////////
// equivalence
////////////////////////////////////////////////////////////////////////

void equivalence_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  for (std::size_t i = 0; i < ctx->groupoids().size(); ++i) {
    auto const& name = ctx->groupoids()[i].name;
    auto const  domain_only = [ctx, i] {
      need_bis(ctx->groupoids()[i].bis, ctx->cap());
      if (!ctx->in_bisbar_domain(i)) {
        throw HypothesisNotMet("not locally trivial with a bisection through each arrow");
      }
    };

    b.add("chi-iso", name, [ctx, i, f, domain_only] {
      domain_only();
      auto const& e = ctx->groupoids()[i];
      auto        bar = std::make_shared<Bar>(make_bar(*e.bis, 0));
      f.apply("chi", bar->chi.map, e.g->size());
      std::vector<Case> cases;
      cases.push_back([bar]() { return report_witness("chi", validate_morphism(bar->chi)); });
      cases.push_back([bar]() -> Witness {
        if (!bar->chi.is_isomorphism()) {
          return std::string("chi is not bijective");
        }
        return report_witness("inverse of chi", validate_morphism(bar->chi.inverse()));
      });
      return from_cases(std::move(cases));
    });

    b.add("a-iso", name, [ctx, i, f, domain_only] {
      domain_only();
      auto const& e = ctx->groupoids()[i];
      auto        bar = make_bar(*e.bis, 0);
      auto        bis_r = enumerate_bisections(bar.r->groupoid, ctx->cap());
      auto        a = a_canonical(*bar.r, *bis_r);
      f.apply("a", a.map, bis_r->size());
      auto back = bisbar(*bis_r, 0);
      auto pm = std::make_shared<PairMorphism>(PairMorphism{bar.pair, back, std::move(a)});
      std::vector<Case> cases;
      cases.push_back([pm]() -> Witness {
        auto const r = validate_pair_morphism(*pm);
        if (!r.ok()) {
          return report_witness("a", r.report);
        }
        if (!r.is_isomorphism) {
          return std::string("a is not an isomorphism of pairs");
        }
        return std::nullopt;
      });
      cases.push_back([pm]() -> Witness {
        if (!pm->hom.is_bijective()) {
          return std::string("a is not bijective");
        }
        auto const inv = PairMorphism{pm->target, pm->source, pm->hom.inverse()};
        return report_witness("inverse of a", validate_pair_morphism(inv).report);
      });
      return from_cases(std::move(cases));
    });

    b.add("natural", name, [ctx, i, f, domain_only] {
      domain_only();
      auto const&       e = ctx->groupoids()[i];
      auto              bar = std::make_shared<Bar>(make_bar(*e.bis, 0));
      auto              bis_r = enumerate_bisections(bar->r->groupoid, ctx->cap());
      auto              a = std::make_shared<GroupHom>(a_canonical(*bar->r, *bis_r));
      std::vector<Case> cases;
      bool              corrupted = false;
      for (std::size_t j = 0; j < ctx->groupoids().size(); ++j) {
        auto const* psis = ctx->homs(i, j);
        if (!psis || !ctx->in_bisbar_domain(j)) {
          continue;
        }
        auto const& e2 = ctx->groupoids()[j];
        auto        bar2 = std::make_shared<Bar>(make_bar(*e2.bis, 0));
        auto        bis_r2 = enumerate_bisections(bar2->r->groupoid, ctx->cap());
        auto        a2 = std::make_shared<GroupHom>(a_canonical(*bar2->r, *bis_r2));
        if (!corrupted) {
          f.apply("chi", bar2->chi.map, e2.g->size());
          f.apply("a", a2->map, bis_r2->size());
          corrupted = true;
        }
        for (auto const& psi : *psis) {
          cases.push_back([&e, &e2, &psi, bar, bar2, a, a2, bis_r, bis_r2]() -> Witness {
            auto const bp = bisbar_on_morphism(psi, *e.bis, *e2.bis, 0);
            auto const rbp = gauge_on_morphism(bp, *bar->r, *bar2->r);
            if (auto w = same_map("psi.chi and chi'.R(Bisbar(psi))", compose(psi, bar->chi),
                                  compose(bar2->chi, rbp))) {
              return w;
            }
            auto const lhs = compose(bis_on_morphism(rbp, *bis_r, *bis_r2), *a);
            auto const rhs = compose(*a2, bp.hom);
            return same_hom("Bis(R(Bisbar(psi))).a and a'.Bisbar(psi)", lhs, rhs);
          });
        }
      }
      return from_cases(std::move(cases));
    });
  }
}

////////////////////////////////////////////////////////////////////////
// functor-laws
////////////////////////////////////////////////////////////////////////

// Calls visit(j, k, f, g) for every composable pair f: i -> j, g: j -> k of
// corpus hom-sets.
template <class Homs, class Visit>
void composable_pairs(std::size_t n, std::size_t i, Homs homs, Visit visit) {
  for (std::size_t j = 0; j < n; ++j) {
    auto const* fs = homs(i, j);
    if (!fs) {
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      auto const* gs = homs(j, k);
      if (!gs) {
        continue;
      }
      for (auto const& f : *fs) {
        for (auto const& g : *gs) {
          visit(j, k, f, g);
        }
      }
    }
  }
}

void functor_laws(Builder& b, const ContextPtr& ctx, const Faults& faults) {
  auto const ng = ctx->groupoids().size();
  auto const homs = [ctx](std::size_t a, std::size_t c) { return ctx->homs(a, c); };

  for (std::size_t i = 0; i < ng; ++i) {
    auto const& name = ctx->groupoids()[i].name;

    b.add("Bis", name, [ctx, i, faults, ng, homs] {
      auto const& e = ctx->groupoids()[i];
      auto const& bis = need_bis(e.bis, ctx->cap());
      std::vector<Case> cases;
      cases.push_back([&e, &bis]() -> Witness {
        auto const id = bis_on_morphism(identity_morphism(e.g), bis, bis);
        return same_hom("Bis(id) and id", id, identity_hom(bis.group()));
      });
      bool corrupted = false;
      composable_pairs(ng, i, homs, [&](std::size_t j, std::size_t k, auto const& f, auto const& g) {
        auto const& bj = ctx->groupoids()[j].bis;
        auto const& bk = ctx->groupoids()[k].bis;
        if (!bj || !bk) {
          return;
        }
        auto gf = std::make_shared<GroupoidMorphism>(compose(g, f));
        if (!corrupted) {
          faults.apply("morphism", gf->map, gf->target->size());
          corrupted = true;
        }
        cases.push_back([&bis, bj, bk, &f, &g, gf]() -> Witness {
          auto const lhs = bis_on_morphism(*gf, bis, *bk);
          auto const rhs = compose(bis_on_morphism(g, *bj, *bk), bis_on_morphism(f, bis, *bj));
          return same_hom("Bis(g.f) and Bis(g).Bis(f)", lhs, rhs);
        });
      });
      return from_cases(std::move(cases));
    });

    b.add("B", name, [ctx, i, faults, ng, homs] {
      auto const& gs = ctx->groupoids();
      auto        bo = std::make_shared<BObject>(b_of(gs[i], ctx->cap()));
      std::vector<Case> cases;
      cases.push_back([bo]() {
        return is_identity("B(id)", b_on_morphism(identity_morphism(bo->base_groupoid), *bo, *bo));
      });
      std::map<std::size_t, std::shared_ptr<BObject>> objects;
      auto object = [&](std::size_t j) {
        auto& o = objects[j];
        if (!o) {
          o = std::make_shared<BObject>(b_of(gs[j], ctx->cap()));
        }
        return o;
      };
      bool corrupted = false;
      composable_pairs(ng, i, homs, [&](std::size_t j, std::size_t k, auto const& f, auto const& g) {
        if (!gs[j].bis || !gs[k].bis) {
          return;
        }
        auto bj = object(j);
        auto bk = object(k);
        auto gf = std::make_shared<GroupoidMorphism>(compose(g, f));
        if (!corrupted) {
          faults.apply("morphism", gf->map, gf->target->size());
          corrupted = true;
        }
        cases.push_back([bo, bj, bk, &f, &g, gf]() -> Witness {
          auto const lhs = b_on_morphism(*gf, *bo, *bk);
          auto const rhs = compose(b_on_morphism(g, *bj, *bk), b_on_morphism(f, *bo, *bj));
          return same_map("B(g.f) and B(g).B(f)", lhs, rhs);
        });
      });
      return from_cases(std::move(cases));
    });

    b.add("Bisbar", name, [ctx, i, faults, ng, homs] {
      auto const& gs = ctx->groupoids();
      need_bis(gs[i].bis, ctx->cap());
      if (!ctx->in_bisbar_domain(i)) {
        throw HypothesisNotMet("not locally trivial with a bisection through each arrow");
      }
      auto const&       bis = *gs[i].bis;
      std::vector<Case> cases;
      cases.push_back([&bis, &gs, i]() -> Witness {
        auto const id = bisbar_on_morphism(identity_morphism(gs[i].g), bis, bis, 0);
        return same_hom("Bisbar(id) and id", id.hom, identity_hom(bis.group()));
      });
      bool corrupted = false;
      composable_pairs(ng, i, homs, [&](std::size_t j, std::size_t k, auto const& f, auto const& g) {
        if (!ctx->in_bisbar_domain(j) || !ctx->in_bisbar_domain(k)) {
          return;
        }
        auto const* bj = gs[j].bis.get();
        auto const* bk = gs[k].bis.get();
        auto        gf = std::make_shared<GroupoidMorphism>(compose(g, f));
        if (!corrupted) {
          faults.apply("morphism", gf->map, gf->target->size());
          corrupted = true;
        }
        cases.push_back([&bis, bj, bk, &f, &g, gf]() -> Witness {
          auto const bf = bisbar_on_morphism(f, bis, *bj, 0);
          if (auto const r = validate_pair_morphism(bf); !r.ok()) {
            return report_witness("Bisbar(f)", r.report);
          }
          auto const lhs = bisbar_on_morphism(*gf, bis, *bk, 0);
          auto const rhs = compose(bisbar_on_morphism(g, *bj, *bk, 0), bf);
          return same_hom("Bisbar(g.f) and Bisbar(g).Bisbar(f)", lhs.hom, rhs.hom);
        });
      });
      return from_cases(std::move(cases));
    });

    b.add("E", name, [ctx, i, faults, ng, homs] {
      auto const& gs = ctx->groupoids();
      auto const& bis = need_bis(gs[i].bis, ctx->cap());
      auto        ci = std::make_shared<Coreflection>(coreflector(bis, 0));
      std::map<std::size_t, std::shared_ptr<Coreflection>> objects;
      auto object = [&](std::size_t j) {
        auto& o = objects[j];
        if (!o) {
          o = std::make_shared<Coreflection>(coreflector(*gs[j].bis, 0));
        }
        return o;
      };
      std::vector<Case> cases;
      cases.push_back([ci, &gs, i]() {
        return is_identity("E(id)", coreflector_on_morphism(identity_morphism(gs[i].g), *ci, *ci));
      });
      bool corrupted = false;
      composable_pairs(ng, i, homs, [&](std::size_t j, std::size_t k, auto const& f, auto const& g) {
        if (!gs[j].bis || !gs[k].bis) {
          return;
        }
        auto cj = object(j);
        auto ck = object(k);
        auto gf = std::make_shared<GroupoidMorphism>(compose(g, f));
        if (!corrupted) {
          faults.apply("morphism", gf->map, gf->target->size());
          corrupted = true;
        }
        cases.push_back([ci, cj, ck, &f, &g, gf]() -> Witness {
          auto const ef = coreflector_on_morphism(f, *ci, *cj);
          if (auto w = report_witness("E(f)", validate_morphism(ef))) {
            return w;
          }
          auto const lhs = coreflector_on_morphism(*gf, *ci, *ck);
          auto const rhs = compose(coreflector_on_morphism(g, *cj, *ck), ef);
          return same_map("E(g.f) and E(g).E(f)", lhs, rhs);
        });
      });
      return from_cases(std::move(cases));
    });
  }

  auto const na = ctx->actions().size();
  for (std::size_t s = 0; s < na; ++s) {
    b.add("ltimes", ctx->actions()[s].name, [ctx, s, faults, na] {
      auto const&       as = ctx->actions();
      std::vector<Case> cases;
      cases.push_back([&as, s]() {
        return is_identity("ltimes(id)",
                           ltimes_on_morphism(identity_slice(as[s].action), as[s].lt, as[s].lt));
      });
      bool corrupted = false;
      composable_pairs(
          na, s, [ctx](std::size_t a, std::size_t c) { return ctx->slice_homs(a, c); },
          [&](std::size_t j, std::size_t k, auto const& f, auto const& g) {
            auto gf = std::make_shared<SliceMorphism>(compose(g, f));
            if (!corrupted) {
              faults.apply("morphism", gf->hom.map, gf->target.group->size());
              corrupted = true;
            }
            cases.push_back([&as, s, j, k, &f, &g, gf]() -> Witness {
              auto const lhs = ltimes_on_morphism(*gf, as[s].lt, as[k].lt);
              auto const rhs = compose(ltimes_on_morphism(g, as[j].lt, as[k].lt),
                                       ltimes_on_morphism(f, as[s].lt, as[j].lt));
              return same_map("ltimes(g.f) and ltimes(g).ltimes(f)", lhs, rhs);
            });
          });
      return from_cases(std::move(cases));
    });
  }

  auto const np = ctx->pairs().size();
  for (std::size_t p = 0; p < np; ++p) {
    b.add("R", ctx->pairs()[p].name, [ctx, p, faults, np] {
      auto const&       ps = ctx->pairs();
      std::vector<Case> cases;
      cases.push_back([&ps, p]() {
        return is_identity("R(id)", gauge_on_morphism(identity_pair_morphism(ps[p].pair), *ps[p].r,
                                                      *ps[p].r));
      });
      bool corrupted = false;
      composable_pairs(
          np, p, [ctx](std::size_t a, std::size_t c) { return ctx->pair_homs(a, c); },
          [&](std::size_t j, std::size_t k, auto const& f, auto const& g) {
            auto gf = std::make_shared<PairMorphism>(compose(g, f));
            if (!corrupted) {
              faults.apply("morphism", gf->hom.map, gf->target.group()->size());
              corrupted = true;
            }
            cases.push_back([&ps, p, j, k, &f, &g, gf]() -> Witness {
              auto const lhs = gauge_on_morphism(*gf, *ps[p].r, *ps[k].r);
              auto const rhs = compose(gauge_on_morphism(g, *ps[j].r, *ps[k].r),
                                       gauge_on_morphism(f, *ps[p].r, *ps[j].r));
              return same_map("R(g.f) and R(g).R(f)", lhs, rhs);
            });
          });
      return from_cases(std::move(cases));
    });
  }
}

////////////////////////////////////////////////////////////////////////
// naturality
////////////////////////////////////////////////////////////////////////

void naturality_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  auto const& gs = ctx->groupoids();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    b.add("ev", gs[i].name, [ctx, i, f] {
      auto const& gs = ctx->groupoids();
      auto        bo = std::make_shared<BObject>(b_of(gs[i], ctx->cap()));
      auto        ev = std::make_shared<GroupoidMorphism>(ev_counit(*bo));
      f.apply("ev", ev->map, gs[i].g->size());
      std::vector<Case> cases;
      for (std::size_t j = 0; j < gs.size(); ++j) {
        auto const* psis = ctx->homs(i, j);
        if (!psis || !gs[j].bis) {
          continue;
        }
        auto bj = std::make_shared<BObject>(b_of(gs[j], ctx->cap()));
        for (auto const& psi : *psis) {
          cases.push_back([bo, bj, ev, &psi]() {
            return same_map("psi.ev and ev'.B(psi)", compose(psi, *ev),
                            compose(ev_counit(*bj), b_on_morphism(psi, *bo, *bj)));
          });
        }
      }
      return from_cases(std::move(cases));
    });

    b.add("beta-star", gs[i].name, [ctx, i, f] {
      auto const&       gs = ctx->groupoids();
      auto const&       bis = need_bis(gs[i].bis, ctx->cap());
      std::vector<Case> cases;
      bool              corrupted = false;
      for (std::size_t j = 0; j < gs.size(); ++j) {
        auto const* psis = ctx->homs(i, j);
        if (!psis || !gs[j].bis) {
          continue;
        }
        auto const* bj = gs[j].bis.get();
        for (auto const& psi : *psis) {
          auto bp = std::make_shared<GroupHom>(bis_on_morphism(psi, bis, *bj));
          if (!corrupted) {
            f.apply("Bis(psi)", bp->map, bj->size());
            corrupted = true;
          }
          cases.push_back([&bis, bj, bp]() -> Witness {
            for (Elem s = 0; s < bis.size(); ++s) {
              for (Point x = 0; x < bis.groupoid()->base().size(); ++x) {
                if (bj->beta_action().act((*bp)(s), x) != bis.beta_action().act(s, x)) {
                  return "beta'.Bis(psi) and beta differ at " + bis.group()->name(s);
                }
              }
            }
            return std::nullopt;
          });
        }
      }
      return from_cases(std::move(cases));
    });
  }

  auto const& as = ctx->actions();
  for (std::size_t s = 0; s < as.size(); ++s) {
    b.add("const", as[s].name, [ctx, s, f] {
      auto const& as = ctx->actions();
      auto        bis = enumerate_bisections(as[s].lt.groupoid, ctx->cap());
      auto        c = std::make_shared<SliceMorphism>(const_unit(as[s].lt, *bis));
      f.apply("const", c->hom.map, bis->size());
      std::vector<Case> cases;
      for (std::size_t t = 0; t < as.size(); ++t) {
        auto const* zetas = ctx->slice_homs(s, t);
        if (!zetas) {
          continue;
        }
        auto bt = enumerate_bisections(as[t].lt.groupoid, ctx->cap());
        auto ct = std::make_shared<SliceMorphism>(const_unit(as[t].lt, *bt));
        for (auto const& z : *zetas) {
          cases.push_back([&as, s, t, &z, bis, bt, c, ct]() {
            auto const lz = ltimes_on_morphism(z, as[s].lt, as[t].lt);
            return same_hom("Bis(ltimes(z)).const and const'.z",
                            compose(bis_on_morphism(lz, *bis, *bt), c->hom),
                            compose(ct->hom, z.hom));
          });
        }
      }
      return from_cases(std::move(cases));
    });
  }

  auto const& ps = ctx->pairs();
  for (std::size_t p = 0; p < ps.size(); ++p) {
    b.add("a", ps[p].name, [ctx, p, f] {
      auto const& ps = ctx->pairs();
      auto const& bis = need_bis(ps[p].bis_r, ctx->cap());
      auto        a = std::make_shared<GroupHom>(a_canonical(*ps[p].r, bis));
      f.apply("a", a->map, bis.size());
      std::vector<Case> cases;
      cases.push_back([&ps, p, &bis, a]() -> Witness {
        auto const pm = PairMorphism{ps[p].pair, bisbar(bis, ps[p].pair.basepoint), *a};
        return report_witness("a as a pair morphism", validate_pair_morphism(pm).report);
      });
      for (std::size_t q = 0; q < ps.size(); ++q) {
        auto const* fs = ctx->pair_homs(p, q);
        if (!fs || !ps[q].bis_r) {
          continue;
        }
        auto const* bq = ps[q].bis_r.get();
        auto        aq = std::make_shared<GroupHom>(a_canonical(*ps[q].r, *bq));
        for (auto const& fm : *fs) {
          cases.push_back([&ps, p, q, &bis, bq, a, aq, &fm]() -> Witness {
            auto const rf = gauge_on_morphism(fm, *ps[p].r, *ps[q].r);
            auto const brf = bis_on_morphism(rf, bis, *bq);
            if (auto w = same_hom("Bis(R(f)).a and a'.f", compose(brf, *a), compose(*aq, fm.hom))) {
              return w;
            }
            auto const m = ps[p].pair.basepoint;
            auto const bar_rf = PairMorphism{bisbar(bis, m), bisbar(*bq, m), brf};
            return report_witness("Bisbar(R(f))", validate_pair_morphism(bar_rf).report);
          });
        }
      }
      return from_cases(std::move(cases));
    });
  }
}

////////////////////////////////////////////////////////////////////////
// limits
////////////////////////////////////////////////////////////////////////

Witness outcome_witness(const CheckOutcome& o) {
  if (o.status == CheckOutcome::Status::fail) {
    return o.detail;
  }
  return std::nullopt;
}

void limit_laws(Builder& b, const ContextPtr& ctx, const Faults& f) {
  auto const& gs = ctx->groupoids();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    b.add("kernel", gs[i].name, [ctx, i, f] {
      auto const&       gs = ctx->groupoids();
      std::vector<Case> cases;
      bool              corrupted = false;
      for (std::size_t j = 0; j < gs.size(); ++j) {
        auto const* phis = ctx->homs(i, j);
        if (!phis) {
          continue;
        }
        for (auto const& phi : *phis) {
          auto copy = std::make_shared<GroupoidMorphism>(phi);
          if (!corrupted) {
            f.apply("morphism", copy->map, copy->target->size());
            corrupted = true;
          }
          auto const cap = ctx->cap();
          cases.push_back(
              [copy, cap]() { return outcome_witness(check_bis_preserves_kernel(*copy, cap)); });
        }
      }
      return from_cases(std::move(cases));
    });

    b.add("pullback", gs[i].name, [ctx, i, f] {
      auto const&       gs = ctx->groupoids();
      std::vector<Case> cases;
      bool              corrupted = false;
      for (std::size_t a = 0; a < gs.size(); ++a) {
        for (std::size_t c = a; c < gs.size(); ++c) {
          auto const* pa = ctx->homs(a, i);
          auto const* pc = ctx->homs(c, i);
          if (!pa || !pc || pa->empty() || pc->empty()) {
            continue;
          }
          auto phi = std::make_shared<GroupoidMorphism>(pa->front());
          auto psi = std::make_shared<GroupoidMorphism>(pc->back());
          if (!corrupted) {
            f.apply("morphism", phi->map, phi->target->size());
            corrupted = true;
          }
          auto const cap = ctx->cap();
          cases.push_back([phi, psi, cap]() {
            return outcome_witness(check_bis_preserves_pullback(*phi, *psi, cap));
          });
        }
      }
      return from_cases(std::move(cases));
    });
  }
}

using FamilyFn = void (*)(Builder&, const ContextPtr&, const Faults&);

const std::vector<std::pair<std::string, FamilyFn>>& families() {
  static const std::vector<std::pair<std::string, FamilyFn>> table = {
      {"bisection-group", bisection_group_laws},
      {"ltimes-adjunction", ltimes_adjunction_laws},
      {"comonad", comonad_laws},
      {"quotient", quotient_laws},
      {"gauge", gauge_laws},
      {"canonical", canonical_laws},
      {"r-adjunction", r_adjunction_laws},
      {"coreflection", coreflection_laws},
      {"equivalence", equivalence_laws},
      {"functor-laws", functor_laws},
      {"naturality", naturality_laws},
      {"limits", limit_laws},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& law_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (auto const& [name, fn] : families()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

std::vector<Law> laws_for_family(const std::string&  family,
                                 const ContextPtr&   ctx,
                                 const CheckOptions& opts) {
  for (auto const& [name, fn] : families()) {
    if (name == family) {
      Builder b{family, {}};
      fn(b, ctx, Faults(opts.corruption));
      return std::move(b.laws);
    }
  }
  throw std::invalid_argument("unknown law family: " + family);
}

std::vector<Law> all_laws(const ContextPtr& ctx, const CheckOptions& opts) {
  std::vector<Law> out;
  for (auto const& name : law_families()) {
    auto laws = laws_for_family(name, ctx, opts);
    out.insert(out.end(), std::make_move_iterator(laws.begin()),
               std::make_move_iterator(laws.end()));
  }
  return out;
}

}  // namespace fingpd
