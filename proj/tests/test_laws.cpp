#include "json.hpp"

#include "doctest.h"
#include "oracle.hpp"

using namespace fingpd;

namespace {

ContextPtr shared_context() {
  static ContextPtr const ctx =
      std::make_shared<const CorpusContext>(fixture_corpus(), kDefaultSearchCap);
  return ctx;
}

std::size_t count(const std::vector<LawReport>& r, LawStatus s) {
  return static_cast<std::size_t>(
      std::count_if(r.begin(), r.end(), [&](const LawReport& x) { return x.status == s; }));
}

}  // namespace

TEST_SUITE("laws") {
  TEST_CASE("engine: pass, fail, skip and setup failure") {
    Law const ok{"t/ok", [] { return LawBody{.domain = 3, .probe = [](std::size_t) -> Witness { return {}; }}; }};
    Law const bad{"t/bad", [] {
                    return LawBody{.domain = 5, .probe = [](std::size_t i) -> Witness {
                                     if (i == 3) {
                                       return "three";
                                     }
                                     return {};
                                   }};
                  }};
    Law const skip{"t/skip", [] { return LawBody{.skip = "not applicable"}; }};
    Law const capped{"t/capped", []() -> LawBody { throw CapExceeded("search", 11); }};
    Law const broken{"t/broken", []() -> LawBody { throw InternalLawViolation("boom"); }};

    CHECK(run_law(ok).status == LawStatus::pass);
    auto const r = run_law(bad);
    CHECK(r.status == LawStatus::fail);
    CHECK(r.witness_index == 3);
    CHECK(r.witness == "three");
    CHECK(replay(bad, 3) == Witness{"three"});
    CHECK_FALSE(replay(bad, 2));
    CHECK(run_law(skip).status == LawStatus::skipped);
    CHECK(run_law(capped).status == LawStatus::skipped);
    CHECK_FALSE(replay(capped, 0));
    auto const b = run_law(broken);
    CHECK(b.status == LawStatus::fail);
    CHECK(b.witness_index == kSetupWitness);

    auto const all = run_laws({skip, bad, ok}, 2);
    REQUIRE(all.size() == 3);
    CHECK(all[0].law == "t/bad");
    CHECK(all[1].law == "t/ok");
    CHECK(all[2].law == "t/skip");
    CHECK_FALSE(all_passed(all));
    CHECK(all_passed({run_law(ok), run_law(skip)}));
  }

  TEST_CASE("machine output is one JSON object per line") {
    auto const reports = run_laws(laws_for_family("quotient", shared_context()), 1);
    auto const text = format_machine(reports);
    std::istringstream in(text);
    std::string        line;
    std::size_t        n = 0;
    while (std::getline(in, line)) {
      auto const j = nlohmann::json::parse(line);
      CHECK(j.contains("law"));
      CHECK(j.contains("status"));
      ++n;
    }
    CHECK(n == reports.size());
    CHECK_FALSE(format_text(reports).empty());
  }

  TEST_CASE("every family passes on the fixture corpus") {
    auto const ctx = shared_context();
    for (auto const& fam : law_families()) {
      CAPTURE(fam);
      auto const reports = run_laws(laws_for_family(fam, ctx), 1);
      CHECK(!reports.empty());
      for (auto const& r : reports) {
        CAPTURE(r.law);
        CAPTURE(r.witness);
        CHECK(r.status != LawStatus::fail);
      }
      CHECK(count(reports, LawStatus::pass) > 0);
    }
    CHECK_THROWS_AS(laws_for_family("nonsense", ctx), std::invalid_argument);
  }

  TEST_CASE("the large fixtures skip coassociativity on the cap") {
    auto const reports = run_laws(laws_for_family("comonad", shared_context()), 1);
    for (auto const& r : reports) {
      if (r.law == "comonad/coassociativity/S3-ltimes-M3"
          || r.law == "comonad/coassociativity/gauge-S3-He") {
        CHECK(r.status == LawStatus::skipped);
      }
      if (r.law == "comonad/coassociativity/P3") {
        CHECK(r.status == LawStatus::pass);
      }
    }
  }

  TEST_CASE("fault injection is detected and replays") {
    struct Fault {
      const char* family;
      const char* table;
    };
    for (auto const& [family, table] :
         {Fault{"bisection-group", "comp"}, Fault{"bisection-group", "beta"},
          Fault{"ltimes-adjunction", "hom"}, Fault{"ltimes-adjunction", "ev"},
          Fault{"ltimes-adjunction", "const"}, Fault{"comonad", "delta"},
          Fault{"comonad", "ev"}, Fault{"quotient", "ev"}, Fault{"gauge", "comp"},
          Fault{"gauge", "right"}, Fault{"canonical", "a"}, Fault{"r-adjunction", "chi"},
          Fault{"r-adjunction", "a"}, Fault{"coreflection", "counit"},
          Fault{"equivalence", "chi"}, Fault{"equivalence", "a"},
          Fault{"functor-laws", "morphism"}, Fault{"naturality", "ev"},
          Fault{"naturality", "a"}, Fault{"limits", "morphism"}}) {
      CAPTURE(family);
      CAPTURE(table);
      CheckOptions opts;
      opts.corruption = Corruption{table, 0, 1};
      auto const laws = laws_for_family(family, shared_context(), opts);
      auto const reports = run_laws(laws, 1);
      CHECK(count(reports, LawStatus::fail) > 0);
      for (auto const& r : reports) {
        if (r.status != LawStatus::fail || r.witness_index == kSetupWitness) {
          continue;
        }
        auto const law = std::find_if(laws.begin(), laws.end(),
                                      [&](const Law& l) { return l.id == r.law; });
        REQUIRE(law != laws.end());
        CHECK(replay(*law, r.witness_index) == Witness{r.witness});
      }
    }
  }

  TEST_CASE("an unused table name corrupts nothing") {
    CheckOptions opts;
    opts.corruption = Corruption{"no-such-table", 0, 1};
    CHECK(all_passed(run_laws(laws_for_family("gauge", shared_context(), opts), 1)));
  }

  TEST_CASE("corpus loading") {
    auto const c = load_corpus(FINGPD_FIXTURE_DIR);
    auto const f = fixture_corpus();
    CHECK(c.groupoids.size() == f.groupoids.size());
    CHECK(c.actions.size() == f.actions.size());
    CHECK(c.pairs.size() == f.pairs.size());
    CHECK_THROWS_AS(load_corpus("/nonexistent/dir"), ValidationError);
  }
}
