#pragma once

// Brute-force oracles for tests. They share no search code with the
// library: every candidate map is generated by an odometer over the raw
// tables and filtered by the defining conditions.

#include <algorithm>
#include <set>
#include <vector>

#include "fingpd/checks.hpp"
#include "fingpd/fixtures.hpp"

namespace oracle {

using namespace fingpd;

// Calls visit(v) for every v in [0, radix)^n.
template <class Visit>
void odometer(std::size_t n, std::size_t radix, Visit visit) {
  std::vector<std::uint32_t> v(n, 0);
  if (radix == 0 && n > 0) {
    return;
  }
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == radix) {
      v[i++] = 0;
    }
    if (i == n) {
      return;
    }
  }
}

// Sections s with src(s(x)) = x and x -> tgt(s(x)) a label-preserving
// bijection.
inline std::vector<std::vector<Arrow>> bisections(const FiniteGroupoid& g) {
  auto const                      m = g.base().size();
  std::vector<std::vector<Arrow>> out;
  odometer(m, g.size(), [&](const std::vector<std::uint32_t>& s) {
    std::set<Point> targets;
    for (Point x = 0; x < m; ++x) {
      if (g.src_table()[s[x]] != x) {
        return;
      }
      auto const y = g.tgt_table()[s[x]];
      if (g.base().components()[y] != g.base().components()[x]) {
        return;
      }
      targets.insert(y);
    }
    if (targets.size() == m) {
      out.emplace_back(s.begin(), s.end());
    }
  });
  // The odometer runs colexicographically.
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t group_hom_count(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t count = 0;
  odometer(a.size(), b.size(), [&](const std::vector<std::uint32_t>& f) {
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = 0; y < a.size(); ++y) {
        if (f[a.mul(x, y)] != b.mul(f[x], f[y])) {
          return;
        }
      }
    }
    ++count;
  });
  return count;
}

// Maps over the identity of the base that preserve composition.
inline std::size_t groupoid_hom_count(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  std::size_t count = 0;
  odometer(a.size(), b.size(), [&](const std::vector<std::uint32_t>& f) {
    for (Arrow x = 0; x < a.size(); ++x) {
      if (b.src(f[x]) != a.src(x) || b.tgt(f[x]) != a.tgt(x)) {
        return;
      }
    }
    for (Arrow x = 0; x < a.size(); ++x) {
      for (Arrow y = 0; y < a.size(); ++y) {
        auto const xy = a.compose(x, y);
        if (xy != kNone && f[xy] != b.compose(f[x], f[y])) {
          return;
        }
      }
    }
    ++count;
  });
  return count;
}

// Intersection of all conjugates k H k^-1.
inline std::vector<Elem> core(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.size(); ++x) {
    bool all = true;
    for (Elem k = 0; k < g.size() && all; ++k) {
      all = h.contains(g.mul(g.mul(g.inv(k), x), k));
    }
    if (all) {
      out.push_back(x);
    }
  }
  return out;
}

inline Instance fixture(const std::string& name) {
  return generate_fixture(name);
}

inline GroupoidPtr groupoid(const std::string& name) {
  return generate_fixture(name).groupoid;
}

inline TransitivePair pair(const std::string& name) {
  return *generate_fixture(name).pair;
}

inline GroupAction action(const std::string& name) {
  return *generate_fixture(name).action;
}

inline GroupPtr group(const std::string& name) {
  return generate_fixture(name).group;
}

}  // namespace oracle
