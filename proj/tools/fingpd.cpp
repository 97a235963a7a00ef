// Command-line front end. Exit codes: 0 success or all laws pass, 1 some
// law fails, 2 unreadable or invalid input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "fingpd/checks.hpp"
#include "fingpd/fixtures.hpp"

namespace {

using namespace fingpd;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_cap() {
  if (auto const* env = std::getenv("FINGPD_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("FINGPD_CAP is not a number: ") + env);
    }
  }
  return kDefaultSearchCap;
}

std::string perm_of(const GroupAction& a, Elem k) {
  return format_perm(a.base, a.permutation(k));
}

void print_group_table(std::ostream& os, const FiniteGroup& g) {
  os << "table (row * column, by index):\n";
  for (Elem a = 0; a < g.size(); ++a) {
    os << " ";
    for (Elem b = 0; b < g.size(); ++b) {
      os << " " << g.mul(a, b);
    }
    os << "\n";
  }
}

GroupoidPtr groupoid_input(const Instance& x) {
  switch (x.kind) {
    case InstanceKind::groupoid:
      return x.groupoid;
    case InstanceKind::group:
      return group_over_point(*x.group);
    default:
      throw InputError("expected a groupoid or group instance, got " + std::string(to_string(x.kind)));
  }
}

int cmd_validate(const std::string& file) {
  auto const x = load_instance(file);
  std::cout << "ok: " << to_string(x.kind) << " '" << x.name << "'";
  switch (x.kind) {
    case InstanceKind::group:
      std::cout << ", order " << x.group->size();
      break;
    case InstanceKind::action:
      std::cout << ", group of order " << x.group->size() << " on " << x.action->base.size()
                << " points";
      break;
    case InstanceKind::groupoid:
      std::cout << ", " << x.groupoid->size() << " arrows over " << x.groupoid->base().size()
                << " points";
      break;
    case InstanceKind::pair:
      std::cout << ", group of order " << x.group->size() << ", |H| = " << x.pair->h.size()
                << ", kernel order " << pair_kernel(*x.pair).size();
      break;
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_bis(const std::string& file, std::uint64_t cap, bool emit_json) {
  auto const x = load_instance(file);
  auto const g = groupoid_input(x);
  auto const bis = enumerate_bisections(g, cap);
  auto const grp = tabulate(*bis->group());
  if (emit_json) {
    std::cout << emit(make_group_instance("Bis(" + x.name + ")", grp));
    return kExitOk;
  }
  auto const& beta = bis->beta_action();
  std::cout << "order: " << bis->size() << "\n";
  for (Elem s = 0; s < bis->size(); ++s) {
    std::cout << "  " << s << ": " << grp->name(s) << "  beta " << perm_of(beta, s) << "\n";
  }
  std::set<Perm> perms;
  for (Elem s = 0; s < bis->size(); ++s) {
    perms.insert(beta.permutation(s));
  }
  auto const sym = symmetric_group(g->base());
  std::size_t admissible = 0;
  for (Elem k = 0; k < sym.group->size(); ++k) {
    admissible += g->base().is_admissible(sym.perms[k]);
  }
  std::cout << "beta_star: image of order " << perms.size() << " in " << admissible
            << " admissible permutations";
  if (perms.size() == bis->size() && perms.size() == admissible) {
    std::cout << " (isomorphism onto the symmetric group)";
  }
  std::cout << "\ncovered arrows: "
            << (has_bisection_through_each_arrow(*bis) ? "all" : "not all") << "\n";
  print_group_table(std::cout, *grp);
  return kExitOk;
}

int cmd_ltimes(const std::string& file, bool emit_json) {
  auto const x = load_instance(file);
  if (x.kind != InstanceKind::action) {
    throw InputError("expected an action instance, got " + std::string(to_string(x.kind)));
  }
  auto const lt = ltimes(*x.action);
  auto const tab = tabulate(*lt.groupoid);
  if (emit_json) {
    std::cout << emit(make_groupoid_instance(x.name + "-ltimes", tab));
    return kExitOk;
  }
  std::cout << "arrows: " << tab->size() << "\n";
  std::cout << "points: " << tab->base().size() << "\n";
  std::cout << "locally trivial: " << (is_locally_trivial(*tab) ? "yes" : "no") << "\n";
  for (Arrow a = 0; a < tab->size(); ++a) {
    std::cout << "  " << tab->name(a) << ": " << tab->base().name(tab->src(a)) << " -> "
              << tab->base().name(tab->tgt(a)) << "\n";
  }
  return kExitOk;
}

int cmd_gauge(const std::string& file, std::uint64_t cap, bool emit_json) {
  auto const x = load_instance(file);
  if (x.kind != InstanceKind::pair) {
    throw InputError("expected a pair instance, got " + std::string(to_string(x.kind)));
  }
  auto const r = gauge_groupoid(*x.pair);
  auto const tab = tabulate(*r.groupoid);
  if (emit_json) {
    std::cout << emit(make_groupoid_instance("R(" + x.name + ")", tab));
    return kExitOk;
  }
  auto const m = x.pair->base().size();
  std::cout << "cosets: " << r.bundle.size() << "\n";
  std::cout << "Lambda order: " << r.bundle.lambda_order() << "\n";
  std::cout << "arrows: " << tab->size() << " (|M|^2 |Lambda| = "
            << m * m * r.bundle.lambda_order() << ")\n";
  std::cout << "kernel order: " << pair_kernel(*x.pair).size() << "\n";
  try {
    auto const bis = enumerate_bisections(r.groupoid, cap);
    std::cout << "bisections: " << bis->size() << "\n";
  } catch (const CapExceeded& e) {
    std::cout << "bisections: not enumerated (" << e.what() << ")\n";
  }
  for (Arrow a = 0; a < tab->size(); ++a) {
    std::cout << "  " << tab->name(a) << ": " << tab->base().name(tab->src(a)) << " -> "
              << tab->base().name(tab->tgt(a)) << "\n";
  }
  return kExitOk;
}

std::optional<Corruption> parse_corruption(const std::string& text) {
  if (text.empty()) {
    return std::nullopt;
  }
  // table:index[:shift]; the table name itself may not contain ':'.
  auto const first = text.find(':');
  if (first == std::string::npos) {
    throw InputError("--corrupt expects table:index[:shift]");
  }
  Corruption c;
  c.table = text.substr(0, first);
  auto const rest = text.substr(first + 1);
  auto const second = rest.find(':');
  try {
    c.index = std::stoull(rest.substr(0, second));
    if (second != std::string::npos) {
      c.shift = static_cast<std::uint32_t>(std::stoul(rest.substr(second + 1)));
    }
  } catch (const std::exception&) {
    throw InputError("--corrupt expects table:index[:shift]");
  }
  return c;
}

struct CheckArgs {
  std::string family = "all";
  std::string corpus;
  std::string format = "text";
  std::string corrupt;
  std::string replay_law;
  std::size_t replay_index = 0;
  std::string filter;
  unsigned    threads = 0;
};

int cmd_check(const CheckArgs& a, std::uint64_t cap) {
  if (a.format != "text" && a.format != "machine-readable") {
    throw InputError("unknown format: " + a.format);
  }
  auto corpus = a.corpus.empty() ? fixture_corpus() : load_corpus(a.corpus);
  auto ctx = std::make_shared<const CorpusContext>(corpus, cap);
  CheckOptions opts;
  opts.cap = cap;
  opts.corruption = parse_corruption(a.corrupt);
  std::vector<Law> laws;
  try {
    laws = a.family == "all" ? all_laws(ctx, opts) : laws_for_family(a.family, ctx, opts);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!a.filter.empty()) {
    std::erase_if(laws, [&](const Law& l) { return l.id.find(a.filter) == std::string::npos; });
  }
  if (!a.replay_law.empty()) {
    for (auto const& law : laws) {
      if (law.id == a.replay_law) {
        auto const w = replay(law, a.replay_index);
        if (w) {
          std::cout << "FAIL  " << law.id << "  witness #" << a.replay_index << ": " << *w << "\n";
          return kExitViolation;
        }
        std::cout << "PASS  " << law.id << "  probe #" << a.replay_index << "\n";
        return kExitOk;
      }
    }
    throw InputError("no law with id " + a.replay_law);
  }
  auto const reports = run_laws(laws, a.threads);
  std::cout << (a.format == "text" ? format_text(reports) : format_machine(reports));
  return all_passed(reports) ? kExitOk : kExitViolation;
}

int cmd_fixtures(const std::string& action, const std::string& arg) {
  if (action == "list") {
    for (auto const& n : fixture_names()) {
      std::cout << n << "  " << to_string(generate_fixture(n).kind) << "\n";
    }
    return kExitOk;
  }
  if (action == "emit") {
    std::cout << emit(generate_fixture(arg));
    return kExitOk;
  }
  if (action == "dump") {
    std::filesystem::create_directories(arg);
    for (auto const& n : fixture_names()) {
      auto const path = std::filesystem::path(arg) / (n + ".json");
      std::ofstream out(path);
      out << emit(generate_fixture(n));
      if (!out) {
        throw InputError("cannot write " + path.string());
      }
    }
    std::cout << "wrote " << fixture_names().size() << " fixtures to " << arg << "\n";
    return kExitOk;
  }
  throw InputError("fixtures expects list, emit <name> or dump <dir>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoids, bisection groups and transitive pairs"};
  app.require_subcommand(1);
  std::uint64_t cap = 0;
  app.add_option("--cap", cap, "search cap (default FINGPD_CAP or 1000000)");

  std::string file;
  bool        emit_json = false;

  auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
  validate->add_option("file", file)->required();

  auto* bis = app.add_subcommand("bis", "bisection group of a groupoid");
  bis->add_option("file", file)->required();
  bis->add_flag("--emit", emit_json, "print the group as an instance file");

  auto* lt = app.add_subcommand("ltimes", "action groupoid of an action");
  lt->add_option("file", file)->required();
  lt->add_flag("--emit", emit_json, "print the groupoid as an instance file");

  auto* gauge = app.add_subcommand("gauge", "gauge groupoid of a transitive pair");
  gauge->add_option("file", file)->required();
  gauge->add_flag("--emit", emit_json, "print the groupoid as an instance file");

  CheckArgs ca;
  auto*     check = app.add_subcommand("check", "run one law family (or all)");
  check->add_option("family", ca.family, "law family or 'all'")->required();
  check->add_option("--corpus", ca.corpus, "directory of instance files (default: fixtures)");
  check->add_option("--format", ca.format, "text or machine-readable");
  check->add_option("--corrupt", ca.corrupt, "fault injection table:index[:shift]");
  check->add_option("--filter", ca.filter, "only laws whose id contains this string");
  check->add_option("--replay", ca.replay_law, "law id to replay at --index");
  check->add_option("--index", ca.replay_index, "probe index for --replay");
  check->add_option("--threads", ca.threads, "worker threads (0: all cores)");

  CheckArgs ra;
  auto*     report = app.add_subcommand("report", "run every law family");
  report->add_option("--corpus", ra.corpus, "directory of instance files (default: fixtures)");
  report->add_option("--format", ra.format, "text or machine-readable");
  report->add_option("--threads", ra.threads, "worker threads (0: all cores)");

  std::string fx_action, fx_arg;
  auto*       fixtures = app.add_subcommand("fixtures", "list, emit or dump fixtures");
  fixtures->add_option("action", fx_action, "list, emit or dump")->required();
  fixtures->add_option("arg", fx_arg, "fixture name or directory");

  auto* families = app.add_subcommand("families", "list law families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    auto const code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cap == 0) {
      cap = default_cap();
    }
    if (*validate) {
      return cmd_validate(file);
    }
    if (*bis) {
      return cmd_bis(file, cap, emit_json);
    }
    if (*lt) {
      return cmd_ltimes(file, emit_json);
    }
    if (*gauge) {
      return cmd_gauge(file, cap, emit_json);
    }
    if (*check) {
      return cmd_check(ca, cap);
    }
    if (*report) {
      ra.family = "all";
      return cmd_check(ra, cap);
    }
    if (*fixtures) {
      return cmd_fixtures(fx_action, fx_arg);
    }
    if (*families) {
      for (auto const& f : law_families()) {
        std::cout << f << "\n";
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
