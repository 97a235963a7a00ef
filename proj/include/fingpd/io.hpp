#pragma once

// Instance files: JSON documents with explicit tables. Every element,
// point and arrow is a string; products and composites are listed as
// triples. Nothing is closed or completed implicitly. The grammar is in
// docs/instance-format.md.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fingpd/transitive_pair.hpp"

namespace fingpd {

enum class InstanceKind { group, action, groupoid, pair };

std::string_view             to_string(InstanceKind k);
std::optional<InstanceKind>  parse_kind(std::string_view s);

struct Instance {
  std::string  name;
  InstanceKind kind = InstanceKind::group;
  GroupPtr     group;                   // group, and the acting group otherwise
  std::optional<GroupAction>    action;  // action and pair
  GroupoidPtr                   groupoid;
  std::optional<TransitivePair> pair;
};

// Throws ParseError (with 1-based line and column) on malformed JSON, and
// ValidationError on a missing or mistyped field, an unknown name, an
// incomplete table or tables that do not form a valid object of the
// declared kind.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

// Canonical text; emit(parse(emit(x))) == emit(x).
std::string emit(const Instance& x);

Instance make_group_instance(std::string name, GroupPtr g);
Instance make_action_instance(std::string name, GroupAction a);
Instance make_groupoid_instance(std::string name, GroupoidPtr g);
Instance make_pair_instance(std::string name, TransitivePair p);

}  // namespace fingpd
