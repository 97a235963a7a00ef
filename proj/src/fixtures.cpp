#include "fingpd/fixtures.hpp"

#include <functional>
#include <map>

namespace fingpd {

GroupAction natural_action(const Base& base) {
  auto const         sym = symmetric_group(base);
  auto const         m = base.size();
  std::vector<Point> table;
  table.reserve(sym.perms.size() * m);
  for (auto const& p : sym.perms) {
    table.insert(table.end(), p.begin(), p.end());
  }
  return GroupAction{sym.group, base, std::move(table)};
}

GroupAction trivial_action(const GroupPtr& g, const Base& base) {
  std::vector<Point> table;
  for (Elem k = 0; k < g->size(); ++k) {
    for (Point x = 0; x < base.size(); ++x) {
      table.push_back(x);
    }
  }
  return GroupAction{g, base, std::move(table)};
}

namespace {

Base point_base() {
  return Base({"*"});
}

Base split_base() {
  return Base({"1", "2", "3"}, {0, 0, 1});
}

GroupPtr s3() {
  return symmetric_group(Base::numbered(3)).group;
}

GroupAction swap_action() {
  return GroupAction{cyclic_group(2), Base::numbered(2), {0, 1, 1, 0}};
}

GroupAction rotation_action() {
  std::vector<Point> table;
  for (Point k = 0; k < 3; ++k) {
    for (Point x = 0; x < 3; ++x) {
      table.push_back((x + k) % 3);
    }
  }
  return GroupAction{cyclic_group(3), Base::numbered(3), std::move(table)};
}

// Sym(M3) x Z2 acting through the first factor.
GroupAction augmented_action() {
  auto const         nat = natural_action(Base::numbered(3));
  auto const         z2 = cyclic_group(2);
  auto               k = direct_product(*nat.group, *z2);
  std::vector<Point> table(k->size() * 3);
  for (Elem s = 0; s < nat.group->size(); ++s) {
    for (Elem b = 0; b < z2->size(); ++b) {
      for (Point x = 0; x < 3; ++x) {
        table[product_index(*z2, s, b) * 3 + x] = nat.act(s, x);
      }
    }
  }
  return GroupAction{k, nat.base, std::move(table)};
}

GroupAction split_swap_action() {
  return GroupAction{cyclic_group(2), split_base(), {0, 1, 2, 1, 0, 2}};
}

// K acting on itself by left translation.
GroupAction regular_action(const GroupPtr& k) {
  std::vector<std::string> names;
  for (Elem g = 0; g < k->size(); ++g) {
    names.push_back(k->name(g));
  }
  std::vector<Point> table;
  for (Elem g = 0; g < k->size(); ++g) {
    for (Elem x = 0; x < k->size(); ++x) {
      table.push_back(k->mul(g, x));
    }
  }
  return GroupAction{k, Base(std::move(names)), std::move(table)};
}

TransitivePair pair_with(GroupAction a, Point m, bool whole_stabilizer) {
  auto h = whole_stabilizer ? stabilizer(a, m) : Subgroup::trivial(*a.group);
  return TransitivePair{std::move(a), m, std::move(h)};
}

GroupoidPtr ltimes_table(const GroupAction& a) {
  return tabulate(*ltimes(a).groupoid);
}

using Maker = std::function<Instance(const std::string&)>;

const std::vector<std::pair<std::string, Maker>>& registry() {
  static const std::vector<std::pair<std::string, Maker>> r = [] {
    std::vector<std::pair<std::string, Maker>> v;
    auto group = [&](std::string n, std::function<GroupPtr()> f) {
      v.emplace_back(n, [f](const std::string& name) { return make_group_instance(name, f()); });
    };
    auto action = [&](std::string n, std::function<GroupAction()> f) {
      v.emplace_back(n,
                     [f](const std::string& name) { return make_action_instance(name, f()); });
    };
    auto groupoid = [&](std::string n, std::function<GroupoidPtr()> f) {
      v.emplace_back(
          n, [f](const std::string& name) { return make_groupoid_instance(name, f()); });
    };
    auto pair = [&](std::string n, std::function<TransitivePair()> f) {
      v.emplace_back(n, [f](const std::string& name) { return make_pair_instance(name, f()); });
    };

    group("Z2", [] { return cyclic_group(2); });
    group("Z3", [] { return cyclic_group(3); });
    group("S3", [] { return s3(); });
    group("Z2xZ2", [] { return direct_product(*cyclic_group(2), *cyclic_group(2)); });
    group("S3xZ2", [] { return direct_product(*s3(), *cyclic_group(2)); });

    action("Z2-on-point", [] { return trivial_action(cyclic_group(2), point_base()); });
    action("S3-on-point", [] { return trivial_action(s3(), point_base()); });
    action("Z2-on-M2-swap", [] { return swap_action(); });
    action("Z2-on-M2-trivial", [] { return trivial_action(cyclic_group(2), Base::numbered(2)); });
    action("S3-on-M3", [] { return natural_action(Base::numbered(3)); });
    action("Z3-on-M3", [] { return rotation_action(); });
    action("S3xZ2-on-M3", [] { return augmented_action(); });
    action("Z3-on-M3-trivial", [] { return trivial_action(cyclic_group(3), Base::numbered(3)); });
    action("Z2-on-M3-split", [] { return split_swap_action(); });

    groupoid("P2", [] { return pair_groupoid(Base::numbered(2)); });
    groupoid("P3", [] { return pair_groupoid(Base::numbered(3)); });
    groupoid("U2", [] { return unit_groupoid(Base::numbered(2)); });
    groupoid("U3", [] { return unit_groupoid(Base::numbered(3)); });
    groupoid("Z2-over-point", [] { return group_over_point(*cyclic_group(2)); });
    groupoid("S3-over-point", [] { return group_over_point(*s3()); });
    groupoid("Z2-ltimes-M2", [] { return ltimes_table(swap_action()); });
    groupoid("Z2-bundle-M2", [] {
      return ltimes_table(trivial_action(cyclic_group(2), Base::numbered(2)));
    });
    groupoid("S3-ltimes-M3", [] { return ltimes_table(natural_action(Base::numbered(3))); });
    groupoid("Z3-bundle-M3", [] {
      return ltimes_table(trivial_action(cyclic_group(3), Base::numbered(3)));
    });
    groupoid("gauge-S3-He", [] {
      return gauge_groupoid(pair_with(natural_action(Base::numbered(3)), 0, false)).groupoid;
    });
    groupoid("P3-split", [] { return pair_groupoid(split_base()); });
    groupoid("U3-split", [] { return unit_groupoid(split_base()); });

    pair("Z2-pair-He", [] { return pair_with(swap_action(), 0, false); });
    pair("S3-pair-He", [] { return pair_with(natural_action(Base::numbered(3)), 0, false); });
    pair("S3-pair-Stab", [] { return pair_with(natural_action(Base::numbered(3)), 0, true); });
    pair("augmented-B=Z2", [] { return pair_with(augmented_action(), 0, true); });
    pair("Z3-pair-He", [] { return pair_with(rotation_action(), 0, false); });
    pair("S3-regular-pair", [] { return pair_with(regular_action(s3()), 0, true); });
    return v;
  }();
  return r;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto const& [n, f] : registry()) {
      v.push_back(n);
    }
    return v;
  }();
  return names;
}

Instance generate_fixture(const std::string& name) {
  for (auto const& [n, f] : registry()) {
    if (n == name) {
      return f(name);
    }
  }
  throw UnknownFixture(name);
}

}  // namespace fingpd
