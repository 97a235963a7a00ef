#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"

using namespace fingpd;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream      in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto const at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("every fixture round-trips") {
    for (auto const& n : fixture_names()) {
      CAPTURE(n);
      auto const x = generate_fixture(n);
      auto const text = emit(x);
      auto const y = parse_instance(text);
      CHECK(y.name == n);
      CHECK(y.kind == x.kind);
      CHECK(emit(y) == text);
    }
  }

  TEST_CASE("the shipped fixture files match the generators") {
    for (auto const& n : fixture_names()) {
      CAPTURE(n);
      auto const path = std::string(FINGPD_FIXTURE_DIR) + "/" + n + ".json";
      CHECK(read_file(path) == emit(generate_fixture(n)));
      CHECK(load_instance(path).name == n);
    }
  }

  TEST_CASE("parsed tables equal the generated tables") {
    auto const p3 = parse_instance(emit(generate_fixture("P3"))).groupoid;
    auto const g = oracle::groupoid("P3");
    CHECK(p3->comp_table() == g->comp_table());
    CHECK(p3->inv_table() == g->inv_table());
    auto const pair = parse_instance(emit(generate_fixture("S3-pair-He"))).pair;
    REQUIRE(pair);
    CHECK(pair->h == oracle::pair("S3-pair-He").h);
  }

  TEST_CASE("malformed JSON reports a position") {
    try {
      parse_instance("{\n  \"kind\": \"group\",\n  \"name\": ]\n}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_instance(""), ParseError);
  }

  TEST_CASE("schema errors") {
    auto const z2 = emit(generate_fixture("Z2"));
    CHECK_THROWS_AS(parse_instance(replace_once(z2, "\"kind\": \"group\"", "\"kind\": \"monoid\"")),
                    Error);
    // An unknown element in a product triple.
    CHECK_THROWS_AS(parse_instance(replace_once(z2, "[\"1\", \"1\", \"0\"]", "[\"1\", \"1\", \"7\"]")),
                    ValidationError);
  }

  TEST_CASE("a table with a wrong product is rejected") {
    auto const z2 = emit(generate_fixture("Z2"));
    auto const bad = replace_once(z2, "[\"1\", \"1\", \"0\"]", "[\"1\", \"1\", \"1\"]");
    CHECK_THROWS_AS(parse_instance(bad), ValidationError);
  }

  TEST_CASE("a groupoid with a missing inverse entry is rejected") {
    auto const p2 = emit(generate_fixture("P2"));
    auto const bad = replace_once(p2, ",\n    [\"(2,2)\", \"(2,2)\"]\n  ]", "\n  ]");
    CHECK_THROWS_AS(parse_instance(bad), ValidationError);
  }

  TEST_CASE("a pair with an unknown basepoint is rejected") {
    auto const p = emit(generate_fixture("Z2-pair-He"));
    auto const bad = replace_once(p, "\"basepoint\": \"1\"", "\"basepoint\": \"9\"");
    CHECK_THROWS_AS(parse_instance(bad), ValidationError);
  }

  TEST_CASE("a pair whose subgroup leaves the stabilizer is rejected") {
    auto const p = emit(generate_fixture("Z2-pair-He"));
    auto const bad = replace_once(p, "\"subgroup\": [\"0\"]", "\"subgroup\": [\"0\", \"1\"]");
    CHECK_THROWS_AS(parse_instance(bad), ValidationError);
  }

  TEST_CASE("component labels survive a round trip") {
    auto const x = parse_instance(emit(generate_fixture("P3-split")));
    CHECK(x.groupoid->base().components() == std::vector<std::uint32_t>{0, 0, 1});
  }

  TEST_CASE("kinds") {
    for (auto k : {InstanceKind::group, InstanceKind::action, InstanceKind::groupoid,
                   InstanceKind::pair}) {
      CHECK(parse_kind(to_string(k)) == k);
    }
    CHECK_FALSE(parse_kind("ring"));
  }

  TEST_CASE("unknown fixtures") { CHECK_THROWS_AS(generate_fixture("P4"), UnknownFixture); }
}
