#include "fingpd/io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fingpd {

using nlohmann::json;

std::string_view to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::group:
      return "group";
    case InstanceKind::action:
      return "action";
    case InstanceKind::groupoid:
      return "groupoid";
    case InstanceKind::pair:
      return "pair";
  }
  return "group";
}

std::optional<InstanceKind> parse_kind(std::string_view s) {
  for (auto k : {InstanceKind::group, InstanceKind::action, InstanceKind::groupoid,
                 InstanceKind::pair}) {
    if (to_string(k) == s) {
      return k;
    }
  }
  return std::nullopt;
}

////////////////////////////////////////////////////////////////////////
// Parsing
////////////////////////////////////////////////////////////////////////

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) {
    throw ValidationError(where + ": expected an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) {
    throw ValidationError(where + ": expected a string");
  }
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) {
    throw ValidationError(where + ": expected an array of strings");
  }
  std::vector<std::string> out;
  for (auto const& e : v) {
    out.push_back(as_string(e, where));
  }
  return out;
}

// Rows of a table, each an array of exactly `width` strings.
std::vector<std::vector<std::string>> rows(const json& v, std::size_t width,
                                           const std::string& where) {
  if (!v.is_array()) {
    throw ValidationError(where + ": expected an array of rows");
  }
  std::vector<std::vector<std::string>> out;
  for (auto const& r : v) {
    auto row = string_list(r, where);
    if (row.size() != width) {
      throw ValidationError(where + ": rows must have " + std::to_string(width) + " entries");
    }
    out.push_back(std::move(row));
  }
  return out;
}

class Names {
 public:
  Names(const std::vector<std::string>& names, std::string what)
      : what_(std::move(what)) {
    for (std::uint32_t i = 0; i < names.size(); ++i) {
      if (!index_.emplace(names[i], i).second) {
        throw ValidationError("duplicate " + what_ + " '" + names[i] + "'");
      }
    }
  }
  std::uint32_t operator()(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) {
      throw ValidationError("unknown " + what_ + " '" + n + "'");
    }
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::string                          what_;
  std::map<std::string, std::uint32_t> index_;
};

// Fills table[key] = value, rejecting duplicate keys.
void put(std::vector<std::uint32_t>& table, std::size_t key, std::uint32_t value,
         const std::string& what) {
  if (table[key] != kNone) {
    throw ValidationError("duplicate " + what + " entry");
  }
  table[key] = value;
}

Base parse_base(const json& obj, const std::string& where) {
  auto names = string_list(field(obj, "points", where), where + ".points");
  std::vector<std::uint32_t> comps;
  if (auto it = obj.find("components"); it != obj.end()) {
    if (!it->is_array()) {
      throw ValidationError(where + ".components: expected an array");
    }
    for (auto const& c : *it) {
      if (!c.is_number_unsigned()) {
        throw ValidationError(where + ".components: expected non-negative integers");
      }
      comps.push_back(c.get<std::uint32_t>());
    }
  }
  return Base(std::move(names), std::move(comps));
}

GroupPtr parse_group(const json& obj, const std::string& where) {
  auto        elements = string_list(field(obj, "elements", where), where + ".elements");
  Names const el(elements, "element");
  auto const  n = elements.size();
  if (n == 0) {
    throw ValidationError(where + ": a group needs at least one element");
  }
  auto const identity = el(as_string(field(obj, "identity", where), where + ".identity"));

  std::vector<std::uint32_t> table(n * n, kNone);
  for (auto const& r : rows(field(obj, "mult", where), 3, where + ".mult")) {
    put(table, el(r[0]) * n + el(r[1]), el(r[2]), "mult (" + r[0] + ", " + r[1] + ")");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == kNone) {
      throw ValidationError("missing mult entry (" + elements[i / n] + ", "
                            + elements[i % n] + ")");
    }
  }
  std::vector<std::uint32_t> inverse(n, kNone);
  for (auto const& r : rows(field(obj, "inverse", where), 2, where + ".inverse")) {
    put(inverse, el(r[0]), el(r[1]), "inverse '" + r[0] + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (inverse[i] == kNone) {
      throw ValidationError("missing inverse entry for '" + elements[i] + "'");
    }
  }
  auto g = std::make_shared<const FiniteGroup>(std::move(elements), std::move(table), identity,
                                               std::move(inverse));
  if (auto r = validate_group(*g); !r) {
    throw ValidationError("group axiom " + r.failed + " fails: " + r.witness);
  }
  return g;
}

GroupAction parse_action(const json& obj, const std::string& where) {
  auto        group = parse_group(field(obj, "group", where), where + ".group");
  auto        base = parse_base(obj, where);
  std::vector<std::string> elements;
  for (Elem k = 0; k < group->size(); ++k) {
    elements.push_back(group->name(k));
  }
  Names const el(elements, "element");
  Names const pt(base.names(), "point");
  auto const  m = base.size();
  std::vector<std::uint32_t> table(group->size() * m, kNone);
  for (auto const& r : rows(field(obj, "act", where), 3, where + ".act")) {
    put(table, el(r[0]) * m + pt(r[1]), pt(r[2]), "act (" + r[0] + ", " + r[1] + ")");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == kNone) {
      throw ValidationError("missing act entry (" + group->name(static_cast<Elem>(i / m))
                            + ", " + base.name(static_cast<Point>(i % m)) + ")");
    }
  }
  GroupAction a{group, std::move(base), std::move(table)};
  if (auto r = validate_action(a); !r) {
    throw ValidationError("action axiom " + r.failed + " fails: " + r.witness);
  }
  return a;
}

GroupoidPtr parse_groupoid(const json& obj, const std::string& where) {
  auto                     base = parse_base(obj, where);
  Names const              pt(base.names(), "point");
  std::vector<std::string> names;
  std::vector<Point>       src, tgt;
  for (auto const& r : rows(field(obj, "arrows", where), 3, where + ".arrows")) {
    names.push_back(r[0]);
    src.push_back(pt(r[1]));
    tgt.push_back(pt(r[2]));
  }
  Names const ar(names, "arrow");
  auto const  n = names.size();

  std::vector<std::uint32_t> comp(n * n, kNone);
  for (auto const& r : rows(field(obj, "comp", where), 3, where + ".comp")) {
    auto const g = ar(r[0]);
    auto const h = ar(r[1]);
    if (src[g] != tgt[h]) {
      throw ValidationError("comp entry (" + r[0] + ", " + r[1] + ") is not composable");
    }
    put(comp, g * n + h, ar(r[2]), "comp (" + r[0] + ", " + r[1] + ")");
  }
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      if (src[g] == tgt[h] && comp[g * n + h] == kNone) {
        throw ValidationError("missing comp entry (" + names[g] + ", " + names[h] + ")");
      }
    }
  }
  std::vector<std::uint32_t> unit(base.size(), kNone);
  for (auto const& r : rows(field(obj, "units", where), 2, where + ".units")) {
    put(unit, pt(r[0]), ar(r[1]), "units '" + r[0] + "'");
  }
  for (Point x = 0; x < base.size(); ++x) {
    if (unit[x] == kNone) {
      throw ValidationError("missing unit entry for '" + base.name(x) + "'");
    }
  }
  std::vector<std::uint32_t> inv(n, kNone);
  for (auto const& r : rows(field(obj, "inverse", where), 2, where + ".inverse")) {
    put(inv, ar(r[0]), ar(r[1]), "inverse '" + r[0] + "'");
  }
  for (Arrow a = 0; a < n; ++a) {
    if (inv[a] == kNone) {
      throw ValidationError("missing inverse entry for '" + names[a] + "'");
    }
  }
  auto g = std::make_shared<const FiniteGroupoid>(std::move(base), std::move(names),
                                                  std::move(src), std::move(tgt),
                                                  std::move(comp), std::move(unit),
                                                  std::move(inv));
  if (auto r = validate_groupoid(*g); !r) {
    throw ValidationError("groupoid axiom " + r.failed + " fails: " + r.witness);
  }
  return g;
}

TransitivePair parse_pair(const json& obj, const std::string& where) {
  auto        action = parse_action(field(obj, "action", where), where + ".action");
  auto const  bp = as_string(field(obj, "basepoint", where), where + ".basepoint");
  auto const  m = action.base.find(bp);
  if (!m) {
    throw ValidationError("unknown basepoint '" + bp + "'");
  }
  std::vector<Elem> members;
  for (auto const& e : string_list(field(obj, "subgroup", where), where + ".subgroup")) {
    auto k = action.group->find(e);
    if (!k) {
      throw ValidationError("unknown element '" + e + "' in subgroup");
    }
    members.push_back(*k);
  }
  Subgroup h;
  try {
    h = Subgroup::from_members(*action.group, std::move(members));
  } catch (const NotASubgroup& e) {
    throw ValidationError(std::string("subgroup: ") + e.what());
  }
  TransitivePair p{std::move(action), *m, std::move(h)};
  if (auto r = validate_pair(p); !r) {
    throw ValidationError("pair condition " + r.failed + " fails: " + r.witness);
  }
  return p;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) {
      msg = msg.substr(p);
    }
    throw ParseError(msg, line, col);
  }
  try {
    Instance x;
    auto const kind = as_string(field(doc, "kind", "instance"), "instance.kind");
    auto const k = parse_kind(kind);
    if (!k) {
      throw ValidationError("unknown kind '" + kind + "'");
    }
    x.kind = *k;
    if (auto it = doc.find("name"); it != doc.end()) {
      x.name = as_string(*it, "instance.name");
    }
    switch (x.kind) {
      case InstanceKind::group:
        x.group = parse_group(doc, "group");
        break;
      case InstanceKind::action:
        x.action = parse_action(doc, "action");
        x.group = x.action->group;
        break;
      case InstanceKind::groupoid:
        x.groupoid = parse_groupoid(doc, "groupoid");
        break;
      case InstanceKind::pair:
        x.pair = parse_pair(doc, "pair");
        x.action = x.pair->action;
        x.group = x.pair->group();
        break;
    }
    return x;
  } catch (const json::exception& e) {
    throw ValidationError(e.what());
  } catch (const AxiomViolation& e) {
    throw ValidationError(e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

////////////////////////////////////////////////////////////////////////
// Emission
////////////////////////////////////////////////////////////////////////

namespace {

std::string quote(const std::string& s) {
  return json(s).dump();
}

class Writer {
 public:
  explicit Writer(std::string& out) : out_(out) {}

  void open(std::size_t indent) {
    out_ += "{\n";
    indent_ = indent + 2;
    first_ = true;
  }
  void close(std::size_t indent) {
    out_ += "\n" + std::string(indent, ' ') + "}";
  }
  void key(const std::string& k) {
    out_ += first_ ? "" : ",\n";
    first_ = false;
    out_ += std::string(indent_, ' ') + quote(k) + ": ";
  }
  void scalar(const std::string& k, const std::string& v) {
    key(k);
    out_ += quote(v);
  }
  void inline_list(const std::string& k, const std::vector<std::string>& v) {
    key(k);
    out_ += "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out_ += (i ? ", " : "") + quote(v[i]);
    }
    out_ += "]";
  }
  void numbers(const std::string& k, const std::vector<std::uint32_t>& v) {
    key(k);
    out_ += "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out_ += (i ? ", " : "") + std::to_string(v[i]);
    }
    out_ += "]";
  }
  void table(const std::string& k, const std::vector<std::vector<std::string>>& rs) {
    key(k);
    if (rs.empty()) {
      out_ += "[]";
      return;
    }
    out_ += "[\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
      out_ += std::string(indent_ + 2, ' ') + "[";
      for (std::size_t j = 0; j < rs[i].size(); ++j) {
        out_ += (j ? ", " : "") + quote(rs[i][j]);
      }
      out_ += i + 1 < rs.size() ? "],\n" : "]\n";
    }
    out_ += std::string(indent_, ' ') + "]";
  }
  std::size_t indent() const { return indent_; }
  void        restore(std::size_t indent) {
    indent_ = indent;
    first_ = false;
  }

 private:
  std::string& out_;
  std::size_t  indent_ = 2;
  bool         first_ = true;
};

void emit_group_body(Writer& w, const FiniteGroup& g) {
  auto const               n = static_cast<Elem>(g.size());
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = g.name(a);
  }
  w.inline_list("elements", names);
  w.scalar("identity", names[g.identity()]);
  std::vector<std::vector<std::string>> mult, inv;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      mult.push_back({names[a], names[b], names[g.mul(a, b)]});
    }
    inv.push_back({names[a], names[g.inv(a)]});
  }
  w.table("mult", mult);
  w.table("inverse", inv);
}

void emit_base(Writer& w, const Base& b) {
  w.inline_list("points", b.names());
  if (b.labelled()) {
    w.numbers("components", b.components());
  }
}

void emit_nested(std::string& out, Writer& w, const std::string& k,
                 const std::function<void(Writer&)>& body) {
  w.key(k);
  auto const outer = w.indent();
  Writer     inner(out);
  inner.open(outer);
  body(inner);
  inner.close(outer);
  w.restore(outer);
}

void emit_action_body(std::string& out, Writer& w, const GroupAction& a) {
  emit_nested(out, w, "group", [&](Writer& in) { emit_group_body(in, *a.group); });
  emit_base(w, a.base);
  std::vector<std::vector<std::string>> act;
  for (Elem k = 0; k < a.group->size(); ++k) {
    for (Point x = 0; x < a.base.size(); ++x) {
      act.push_back({a.group->name(k), a.base.name(x), a.base.name(a.act(k, x))});
    }
  }
  w.table("act", act);
}

void emit_groupoid_body(Writer& w, const FiniteGroupoid& g) {
  auto const& base = g.base();
  emit_base(w, base);
  auto const               n = static_cast<Arrow>(g.size());
  std::vector<std::string> names(n);
  for (Arrow a = 0; a < n; ++a) {
    names[a] = g.name(a);
  }
  std::vector<std::vector<std::string>> arrows, comp, units, inv;
  for (Arrow a = 0; a < n; ++a) {
    arrows.push_back({names[a], base.name(g.src(a)), base.name(g.tgt(a))});
  }
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow b = 0; b < n; ++b) {
      if (g.src(a) == g.tgt(b)) {
        comp.push_back({names[a], names[b], names[g.compose(a, b)]});
      }
    }
  }
  for (Point x = 0; x < base.size(); ++x) {
    units.push_back({base.name(x), names[g.unit(x)]});
  }
  for (Arrow a = 0; a < n; ++a) {
    inv.push_back({names[a], names[g.inv(a)]});
  }
  w.table("arrows", arrows);
  w.table("comp", comp);
  w.table("units", units);
  w.table("inverse", inv);
}

}  // namespace

std::string emit(const Instance& x) {
  std::string out;
  Writer      w(out);
  w.open(0);
  w.scalar("kind", std::string(to_string(x.kind)));
  w.scalar("name", x.name);
  switch (x.kind) {
    case InstanceKind::group:
      emit_group_body(w, *x.group);
      break;
    case InstanceKind::action:
      emit_action_body(out, w, *x.action);
      break;
    case InstanceKind::groupoid:
      emit_groupoid_body(w, *x.groupoid);
      break;
    case InstanceKind::pair: {
      auto const& p = *x.pair;
      emit_nested(out, w, "action", [&](Writer& in) { emit_action_body(out, in, p.action); });
      w.scalar("basepoint", p.base().name(p.basepoint));
      std::vector<std::string> members;
      for (auto h : p.h.members()) {
        members.push_back(p.group()->name(h));
      }
      w.inline_list("subgroup", members);
      break;
    }
  }
  w.close(0);
  out += "\n";
  return out;
}

Instance make_group_instance(std::string name, GroupPtr g) {
  Instance x;
  x.name = std::move(name);
  x.kind = InstanceKind::group;
  x.group = std::move(g);
  return x;
}

Instance make_action_instance(std::string name, GroupAction a) {
  Instance x;
  x.name = std::move(name);
  x.kind = InstanceKind::action;
  x.group = a.group;
  x.action = std::move(a);
  return x;
}

Instance make_groupoid_instance(std::string name, GroupoidPtr g) {
  Instance x;
  x.name = std::move(name);
  x.kind = InstanceKind::groupoid;
  x.groupoid = std::move(g);
  return x;
}

Instance make_pair_instance(std::string name, TransitivePair p) {
  Instance x;
  x.name = std::move(name);
  x.kind = InstanceKind::pair;
  x.group = p.group();
  x.action = p.action;
  x.pair = std::move(p);
  return x;
}

}  // namespace fingpd
