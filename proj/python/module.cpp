// Python bindings: instances cross the boundary as JSON text, results as
// plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fingpd/checks.hpp"
#include "fingpd/fixtures.hpp"

namespace py = pybind11;
using namespace fingpd;

namespace {

Instance from_text(const std::string& text) { return parse_instance(text); }

py::dict summary(const Instance& x) {
  py::dict d;
  d["name"] = x.name;
  d["kind"] = std::string(to_string(x.kind));
  if (x.group) {
    d["group_order"] = x.group->size();
  }
  if (x.groupoid) {
    d["points"] = x.groupoid->base().size();
    d["arrows"] = x.groupoid->size();
    d["locally_trivial"] = is_locally_trivial(*x.groupoid);
  }
  if (x.pair) {
    d["points"] = x.pair->base().size();
    d["subgroup_order"] = x.pair->h.size();
  }
  return d;
}

py::dict bisections(const std::string& text, std::uint64_t cap) {
  auto const x = from_text(text);
  if (!x.groupoid) {
    throw ValidationError("bisections need a groupoid instance");
  }
  auto const      bis = enumerate_bisections(x.groupoid, cap);
  py::list        sections;
  for (Elem s = 0; s < bis->size(); ++s) {
    py::list sec;
    for (auto a : bis->section(s)) {
      sec.append(x.groupoid->name(a));
    }
    sections.append(sec);
  }
  auto const covered = covered_arrows(*bis);
  py::dict   d;
  d["order"] = bis->size();
  d["sections"] = sections;
  d["covered"] = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), true));
  d["beta_injective"] = curry_action(beta_star(*bis)).is_injective();
  return d;
}

py::dict gauge(const std::string& text) {
  auto const x = from_text(text);
  if (!x.pair) {
    throw ValidationError("the gauge construction needs a pair instance");
  }
  auto const r = gauge_groupoid(*x.pair);
  py::dict   d;
  d["cosets"] = r.bundle.size();
  d["lambda_order"] = r.bundle.lambda_order();
  d["arrows"] = r.groupoid->size();
  d["kernel_order"] = pair_kernel(*x.pair).size();
  d["groupoid"] = emit(make_groupoid_instance(x.name + "-gauge", r.groupoid));
  return d;
}

py::list check(const std::string& family, const std::optional<std::string>& corpus,
               std::uint64_t cap, unsigned threads) {
  auto const ctx = std::make_shared<const CorpusContext>(
      corpus ? load_corpus(*corpus) : fixture_corpus(), cap);
  CheckOptions opts;
  opts.cap = cap;
  auto const laws = family == "all" ? all_laws(ctx, opts) : laws_for_family(family, ctx, opts);
  std::vector<LawReport> reports;
  {
    py::gil_scoped_release release;
    reports = run_laws(laws, threads);
  }
  py::list out;
  for (auto const& r : reports) {
    py::dict d;
    d["law"] = r.law;
    d["status"] = std::string(to_string(r.status));
    d["witness"] = r.witness;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_fingpd, m) {
  // Translators run newest first, so the base class is registered first.
  auto const& base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("fixture_names", &fixture_names);
  m.def("emit_fixture", [](const std::string& n) { return emit(generate_fixture(n)); });
  m.def("describe", [](const std::string& text) { return summary(from_text(text)); });
  m.def("canonical", [](const std::string& text) { return emit(from_text(text)); });
  m.def("bisections", &bisections, py::arg("text"), py::arg("cap") = kDefaultSearchCap);
  m.def("gauge", &gauge);
  m.def("families", &law_families);
  m.def("check", &check, py::arg("family") = "all", py::arg("corpus") = py::none(),
        py::arg("cap") = kDefaultSearchCap, py::arg("threads") = 0);
}
