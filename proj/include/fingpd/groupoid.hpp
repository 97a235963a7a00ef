#pragma once

// Finite groupoids over a fixed base, morphisms over the identity of the
// base, congruences and quotients.
//
// Composition convention: compose(g, h) is "h, then g". It is defined iff
// src(g) == tgt(h), with src(g.h) = src(h) and tgt(g.h) = tgt(g). This is
// the order used by the star product of bisections.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fingpd/group.hpp"

namespace fingpd {

using Arrow = std::uint32_t;

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

class FiniteGroupoid {
 public:
  using ComposeFn = std::function<Arrow(Arrow, Arrow)>;
  using NameFn    = std::function<std::string(Arrow)>;

  // Table-backed groupoid: comp[g * n + h] is g.h, or kNone when
  // src(g) != tgt(h).
  FiniteGroupoid(Base                     base,
                 std::vector<std::string> names,
                 std::vector<Point>       src,
                 std::vector<Point>       tgt,
                 std::vector<Arrow>       comp,
                 std::vector<Arrow>       unit,
                 std::vector<Arrow>       inv);

  // Groupoid whose composition is computed from its structure (action
  // groupoids). compose must only be called on composable pairs.
  FiniteGroupoid(Base               base,
                 NameFn             names,
                 std::vector<Point> src,
                 std::vector<Point> tgt,
                 ComposeFn          compose,
                 std::vector<Arrow> unit,
                 std::vector<Arrow> inv);

  const Base& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return src_.size(); }
  Point       src(Arrow a) const { return src_[a]; }
  Point       tgt(Arrow a) const { return tgt_[a]; }
  Arrow       unit(Point x) const { return unit_[x]; }
  Arrow       inv(Arrow a) const { return inv_[a]; }
  bool        tabulated() const noexcept { return !comp_.empty(); }

  // kNone when src(g) != tgt(h).
  Arrow compose(Arrow g, Arrow h) const;

  std::string          name(Arrow a) const;
  std::optional<Arrow> find(std::string_view name) const;

  // Arrows with the given source (alpha fibre) / target (beta fibre).
  std::span<const Arrow> out_of(Point x) const { return out_[x]; }
  std::span<const Arrow> into(Point y) const { return in_[y]; }
  // Arrows x -> y.
  std::span<const Arrow> between(Point y, Point x) const {
    return hom_[y * base_.size() + x];
  }

  const std::vector<Arrow>& comp_table() const noexcept { return comp_; }
  const std::vector<Point>& src_table() const noexcept { return src_; }
  const std::vector<Point>& tgt_table() const noexcept { return tgt_; }
  const std::vector<Arrow>& unit_table() const noexcept { return unit_; }
  const std::vector<Arrow>& inv_table() const noexcept { return inv_; }

 private:
  void index_fibres();

  Base                                   base_;
  std::vector<std::string>               names_;
  NameFn                                 name_fn_;
  std::vector<Point>                     src_;
  std::vector<Point>                     tgt_;
  std::vector<Arrow>                     comp_;
  ComposeFn                              compose_fn_;
  std::vector<Arrow>                     unit_;
  std::vector<Arrow>                     inv_;
  std::vector<std::vector<Arrow>>        out_;
  std::vector<std::vector<Arrow>>        in_;
  std::vector<std::vector<Arrow>>        hom_;
  std::unordered_map<std::string, Arrow> lookup_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

// Table copy with explicit names, suitable for serialization.
GroupoidPtr tabulate(const FiniteGroupoid& g);

ValidationReport validate_groupoid(const FiniteGroupoid& g);

struct GroupoidMorphism {
  GroupoidPtr        source;
  GroupoidPtr        target;
  std::vector<Arrow> map;

  Arrow operator()(Arrow a) const { return map[a]; }
  bool  is_injective() const;
  bool  is_surjective() const;
  bool  is_isomorphism() const { return is_injective() && is_surjective(); }
  // Only valid for isomorphisms.
  GroupoidMorphism inverse() const;
};

ValidationReport validate_morphism(const GroupoidMorphism& f);
GroupoidMorphism identity_morphism(const GroupoidPtr& g);
// g after f.
GroupoidMorphism compose(const GroupoidMorphism& g, const GroupoidMorphism& f);

enum class StandardKind { pair, unit, group_over_point };

GroupoidPtr pair_groupoid(const Base& base);
GroupoidPtr unit_groupoid(const Base& base);
// The group as a groupoid over the one-point base {"*"}.
GroupoidPtr group_over_point(const FiniteGroup& g);
GroupoidPtr standard_groupoid(StandardKind kind, const Base& base);
GroupoidPtr standard_groupoid(StandardKind kind, const FiniteGroup& g);

GroupPtr vertex_group(const FiniteGroupoid& g, Point m);
bool     is_locally_trivial(const FiniteGroupoid& g);

// Wide subgroupoid on the given arrows (must contain units and be closed);
// returns it with its inclusion.
GroupoidMorphism wide_subgroupoid(const GroupoidPtr& g, std::span<const Arrow> arrows);

std::vector<GroupoidMorphism> enumerate_morphisms(const GroupoidPtr& a,
                                                  const GroupoidPtr& b,
                                                  std::uint64_t cap = kDefaultSearchCap);

// Equivalence relation on arrows stored as a partition: class_of[a] is the
// least arrow related to a.
class ArrowCongruence {
 public:
  ArrowCongruence(GroupoidPtr g, std::vector<Arrow> class_of);
  static ArrowCongruence identity(const GroupoidPtr& g);
  // Equivalence closure of the given pairs.
  static ArrowCongruence from_pairs(const GroupoidPtr&                         g,
                                    std::span<const std::pair<Arrow, Arrow>> pairs);

  const GroupoidPtr&        groupoid() const noexcept { return g_; }
  bool                      related(Arrow a, Arrow b) const { return class_of_[a] == class_of_[b]; }
  Arrow                     class_min(Arrow a) const { return class_of_[a]; }
  const std::vector<Arrow>& class_table() const noexcept { return class_of_; }

 private:
  GroupoidPtr        g_;
  std::vector<Arrow> class_of_;
};

// Empty when the relation is a congruence; otherwise a witness.
ValidationReport check_congruence(const ArrowCongruence& r);

struct Quotient {
  GroupoidPtr      groupoid;
  GroupoidMorphism projection;
};

Quotient quotient_groupoid(const ArrowCongruence& r);

// proj(x) == proj(y) iff x ~ y.
bool check_effective_quotient(const ArrowCongruence& r, const GroupoidMorphism& proj);

// The unique h' with h' . proj == h, or nullopt when h does not coequalize
// the relation.
std::optional<GroupoidMorphism> factor_through_quotient(const Quotient&         q,
                                                        const ArrowCongruence&  r,
                                                        const GroupoidMorphism& h);

}  // namespace fingpd
