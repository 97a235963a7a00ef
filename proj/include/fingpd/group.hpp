#pragma once

// Exact finite group theory on full multiplication tables: groups,
// subgroups, homomorphisms, actions on finite sets, cosets and quotients.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fingpd/error.hpp"

namespace fingpd {

using Elem  = std::uint32_t;
using Point = std::uint32_t;
using Perm  = std::vector<Point>;

inline constexpr std::uint32_t kNone = UINT32_MAX;

// Default bound on the order of groups that are stored as full tables.
inline constexpr std::size_t kDefaultGroupCap = 720;

// A finite set of named points. Points may carry a component label; an
// admissible bijection of the base maps every point to a point with the same
// label (the finite stand-in for a diffeomorphism of a manifold whose
// components are pairwise non-diffeomorphic). Unlabelled bases put every
// point in component 0, so every bijection is admissible.
class Base {
 public:
  Base() = default;
  explicit Base(std::vector<std::string> names,
                std::vector<std::uint32_t> components = {});

  static Base numbered(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Point p) const { return names_.at(p); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Point> find(std::string_view name) const;
  std::uint32_t component(Point p) const { return components_.at(p); }
  const std::vector<std::uint32_t>& components() const noexcept {
    return components_;
  }
  // True when more than one component label occurs.
  bool labelled() const noexcept;
  bool contains(Point p) const noexcept { return p < names_.size(); }

  bool is_bijection(std::span<const Point> f) const;
  bool is_admissible(std::span<const Point> f) const;

  friend bool operator==(const Base&, const Base&) = default;

 private:
  std::vector<std::string>   names_;
  std::vector<std::uint32_t> components_;
};

class FiniteGroup {
 public:
  using MulFn  = std::function<Elem(Elem, Elem)>;
  using NameFn = std::function<std::string(Elem)>;

  // Table-backed group: table[a * n + b] = a * b.
  FiniteGroup(std::vector<std::string> names,
              std::vector<Elem>        table,
              Elem                     identity,
              std::vector<Elem>        inverse);

  // Group whose product is computed on demand (bisection groups too large
  // to tabulate).
  FiniteGroup(std::size_t       order,
              NameFn            names,
              MulFn             mul,
              Elem              identity,
              std::vector<Elem> inverse);

  std::size_t size() const noexcept { return order_; }
  Elem        identity() const noexcept { return identity_; }
  Elem        mul(Elem a, Elem b) const {
    return table_.empty() ? mul_fn_(a, b) : table_[a * order_ + b];
  }
  Elem inv(Elem a) const { return inverse_[a]; }
  bool tabulated() const noexcept { return !table_.empty(); }

  std::string         name(Elem a) const;
  std::optional<Elem> find(std::string_view name) const;

  const std::vector<Elem>& table() const noexcept { return table_; }
  const std::vector<Elem>& inverse_table() const noexcept { return inverse_; }

 private:
  std::size_t                           order_;
  std::vector<std::string>              names_;
  NameFn                                name_fn_;
  std::vector<Elem>                     table_;
  MulFn                                 mul_fn_;
  Elem                                  identity_;
  std::vector<Elem>                     inverse_;
  std::unordered_map<std::string, Elem> lookup_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Table copy of a (possibly computed) group.
GroupPtr tabulate(const FiniteGroup& g);

class Subgroup {
 public:
  Subgroup() = default;
  // Throws NotASubgroup unless members are closed under product and inverse.
  static Subgroup from_members(const FiniteGroup& g, std::vector<Elem> members);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup generated(const FiniteGroup& g, std::span<const Elem> gens);

  std::size_t              size() const noexcept { return members_.size(); }
  std::size_t              parent_order() const noexcept { return mask_.size(); }
  bool                     contains(Elem a) const { return a < mask_.size() && mask_[a]; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  bool                     subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.mask_.size() == b.mask_.size();
  }

 private:
  std::vector<Elem> members_;  // sorted
  std::vector<bool> mask_;
};

struct GroupHom {
  GroupPtr          source;
  GroupPtr          target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  Subgroup kernel() const;
  // Only valid when bijective.
  GroupHom inverse() const;
};

ValidationReport validate_hom(const GroupHom& f);
GroupHom         identity_hom(const GroupPtr& g);
// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);

// All homomorphisms source -> target in lexicographic order of their maps.
// allowed[a], when given, is the sorted list of admissible images of a.
// Throws CapExceeded when the search visits more than cap nodes.
std::vector<GroupHom> enumerate_group_homs(const GroupPtr& source,
                                           const GroupPtr& target,
                                           std::vector<std::vector<Elem>> allowed = {},
                                           std::uint64_t cap = 1'000'000);

// Left action of a group on the points of a base, act(k, x) = table[k*n + x].
struct GroupAction {
  GroupPtr           group;
  Base               base;
  std::vector<Point> table;

  Point act(Elem k, Point x) const { return table[k * base.size() + x]; }
  Perm  permutation(Elem k) const;
};

// A homomorphism K -> Sym(M) is the same data as a left action of K on M;
// objects of the slice category over Sym(M) are stored as actions.
using SlicedGroupHom = GroupAction;

ValidationReport validate_group(const FiniteGroup& g);
ValidationReport validate_action(const GroupAction& a);

Subgroup           stabilizer(const GroupAction& a, Point m);
std::vector<Point> orbit(const GroupAction& a, Point m);

bool is_normal(const FiniteGroup& g, const Subgroup& n, const Subgroup& in);
bool is_normal(const FiniteGroup& g, const Subgroup& n);

// Largest subgroup of h that is normal in g.
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);

// Left cosets kH, ordered by their minimal member.
struct CosetSpace {
  GroupPtr                       group;
  Subgroup                       subgroup;
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem>              reps;
  std::vector<std::uint32_t>     class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

CosetSpace coset_space(const GroupPtr& g, const Subgroup& h);

// S/H for H normal in S <= K, with class_of indexed by elements of K
// (kNone outside S).
struct QuotientGroup {
  GroupPtr                   group;
  std::vector<Elem>          reps;
  std::vector<std::uint32_t> class_of;
};

QuotientGroup quotient_group(const FiniteGroup& k,
                             const Subgroup&    s,
                             const Subgroup&    h);

// n-fold transitivity on distinct n-tuples; n > |M| yields false.
bool check_transitivity(const GroupAction& a, std::size_t n);

struct SymmetricGroup {
  GroupPtr             group;
  std::vector<Perm>    perms;
  std::map<Perm, Elem> index;

  std::optional<Elem> find(const Perm& p) const;
};

SymmetricGroup symmetric_group(const Base& base);

GroupHom curry_action(const GroupAction& a, const SymmetricGroup& sym);
GroupHom curry_action(const GroupAction& a);
// Inverse of curry_action.
GroupAction uncurry_action(const GroupHom& f, const SymmetricGroup& sym,
                           const Base& base);

GroupPtr cyclic_group(std::size_t n);
GroupPtr trivial_group();
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Element (x, y) of direct_product(a, b) has index x * |b| + y.
inline Elem product_index(const FiniteGroup& b, Elem x, Elem y) {
  return x * static_cast<Elem>(b.size()) + y;
}

std::string format_perm(const Base& base, std::span<const Point> p);

}  // namespace fingpd
