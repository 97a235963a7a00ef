#pragma once

// Deterministic named instances. Bases are numbered "1", "2", ... except
// over a point ("*") and for the regular pair, whose points are the group
// elements. The basepoint of every pair is the first point.

#include <string>
#include <vector>

#include "fingpd/io.hpp"

namespace fingpd {

// Registry order: groups, actions, groupoids, pairs.
const std::vector<std::string>& fixture_names();

// Throws UnknownFixture.
Instance generate_fixture(const std::string& name);

// The symmetric group on the points of base with its natural action.
GroupAction natural_action(const Base& base);
// Trivial action of g on base.
GroupAction trivial_action(const GroupPtr& g, const Base& base);

}  // namespace fingpd
