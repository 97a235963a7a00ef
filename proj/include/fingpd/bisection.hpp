#pragma once

// Bisections of a finite groupoid: sections s of the source map such that
// x -> tgt(s(x)) is an admissible bijection of the base. They form a group
// under the star product (s * t)(x) = s(tgt(t(x))) . t(x).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fingpd/groupoid.hpp"

namespace fingpd {

struct SectionHash {
  std::size_t operator()(const std::vector<Arrow>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto a : v) {
      h = (h ^ a) * 0x100000001b3ULL;
    }
    return h;
  }
};

struct Bisection {
  GroupoidPtr        groupoid;
  std::vector<Arrow> section;

  Arrow operator()(Point x) const { return section[x]; }
  // x -> tgt(section(x)).
  Perm target_map() const;

  friend bool operator==(const Bisection& a, const Bisection& b) {
    return a.groupoid == b.groupoid && a.section == b.section;
  }
};

bool      is_bisection(const FiniteGroupoid& g, std::span<const Arrow> section);
Bisection unit_bisection(const GroupoidPtr& g);
// Throws MixedGroupoids when s and t live on different groupoids.
Bisection star(const Bisection& s, const Bisection& t);
Bisection invert(const Bisection& s);

// The exhaustively enumerated bisection group, ordered lexicographically by
// section table. Element i of group() is bisection i.
class BisectionGroup {
 public:
  // Largest order stored as a full multiplication table.
  static constexpr std::size_t kTabulateLimit = 1024;

  const GroupoidPtr& groupoid() const noexcept { return g_; }
  const GroupPtr&    group() const noexcept { return group_; }
  std::size_t        size() const noexcept { return count_; }

  Arrow eval(Elem s, Point x) const { return store_->sections[s * store_->width + x]; }
  std::span<const Arrow> section(Elem s) const {
    return {store_->sections.data() + s * store_->width, store_->width};
  }
  Bisection           element(Elem s) const;
  std::optional<Elem> index_of(std::span<const Arrow> section) const;
  Elem                unit() const noexcept { return unit_; }

  // beta_* as an action of Bis(G) on the base: (s, x) -> tgt(s(x)).
  const GroupAction& beta_action() const noexcept { return beta_; }

  struct Store {
    std::size_t                                               width = 0;
    std::vector<Arrow>                                        sections;
    std::unordered_map<std::vector<Arrow>, Elem, SectionHash> index;
  };

  BisectionGroup(GroupoidPtr g, std::shared_ptr<Store> store);

 private:
  GroupoidPtr                  g_;
  std::size_t                  count_ = 0;
  std::shared_ptr<const Store> store_;
  Elem                         unit_ = 0;
  GroupPtr                     group_;
  GroupAction                  beta_;
};

using BisPtr = std::shared_ptr<const BisectionGroup>;

// Section tables of all bisections in lexicographic order. Throws
// CapExceeded when the backtracking search visits more than cap nodes.
std::vector<std::vector<Arrow>> enumerate_sections(const FiniteGroupoid& g,
                                                   std::uint64_t cap = kDefaultSearchCap);

// Throws CapExceeded as above, and AxiomViolation if the star product of two
// bisections is not a bisection (only possible for an invalid groupoid).
BisPtr enumerate_bisections(const GroupoidPtr& g, std::uint64_t cap = kDefaultSearchCap);

// sigma -> tgt . sigma, a homomorphism into Sym(M).
SlicedGroupHom beta_star(const BisectionGroup& b);

// sigma -> phi . sigma.
GroupHom bis_on_morphism(const GroupoidMorphism& phi,
                         const BisectionGroup&   source,
                         const BisectionGroup&   target);

struct StabilizerSubgroups {
  Subgroup loop;  // sigma(m) lies in the vertex group at m
  Subgroup bis;   // sigma(m) is the unit at m
};

// Throws PointNotInBase; throws InternalLawViolation if Bis_m is not normal
// in Loop_m.
StabilizerSubgroups stabilizer_subgroups(const BisectionGroup& b, Point m);

// covered[a] iff some bisection passes through arrow a.
std::vector<bool> covered_arrows(const BisectionGroup& b);
bool              has_bisection_through_each_arrow(const BisectionGroup& b);

}  // namespace fingpd
