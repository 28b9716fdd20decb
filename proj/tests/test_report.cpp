#include <catch_amalgamated.hpp>

#include "superx/commands.hpp"
#include "superx/error.hpp"
#include "superx/report.hpp"

using namespace superx;
using nlohmann::ordered_json;

namespace {

  Report sample() {
    Report r;
    r.command    = "lambda";
    r.group      = "C3";
    r.status     = Status::pass;
    r.payload    = {{"size", 4}, {"note", "a,b"}};
    r.payload["rows"] = ordered_json::array({{{"x", 1}, {"y", "p"}},
                                             {{"x", 22}, {"y", "q\"r"}}});
    r.elapsed_ms = 3;
    return r;
  }

}  // namespace

TEST_CASE("status and format names", "[report]") {
  for (auto s : {Status::pass, Status::fail, Status::info}) {
    CHECK(parse_status(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_status("ok"), ParseError);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("yaml"), ParseError);
}

TEST_CASE("JSON round-trip", "[report]") {
  auto const r = sample();
  auto const j = to_json(r);
  CHECK(j.size() == 5);
  CHECK(report_from_json(j) == r);
  CHECK(report_from_json(ordered_json::parse(render(r, Format::json))) == r);

  Report anon = r;
  anon.group  = std::nullopt;
  CHECK(to_json(anon)["group"].is_null());
  CHECK(report_from_json(to_json(anon)) == anon);
}

TEST_CASE("malformed reports are rejected", "[report]") {
  auto j = to_json(sample());
  j.erase("elapsed_ms");
  CHECK_THROWS_AS(report_from_json(j), ParseError);
  j               = to_json(sample());
  j["extra"]      = 1;
  CHECK_THROWS_AS(report_from_json(j), ParseError);
  j               = to_json(sample());
  j["payload"]    = 7;
  CHECK_THROWS_AS(report_from_json(j), ParseError);
  j               = to_json(sample());
  j["status"]     = "maybe";
  CHECK_THROWS_AS(report_from_json(j), ParseError);
}

TEST_CASE("CSV quoting", "[report]") {
  auto const csv = render(sample(), Format::csv);
  CHECK(csv == "x,y\n1,p\n22,\"q\"\"r\"\n");
  Report r = sample();
  r.payload.erase("rows");
  CHECK(render(r, Format::csv) == "key,value\nsize,4\nnote,\"a,b\"\n");
}

TEST_CASE("text rendering", "[report]") {
  auto const text = render(sample(), Format::text);
  CHECK(text.rfind("lambda C3: pass (3 ms)\n", 0) == 0);
  CHECK(text.find("size: 4\n") != std::string::npos);
  CHECK(text.find("x   y\n") != std::string::npos);
  CHECK(text.find("22  q\"r\n") != std::string::npos);
}

TEST_CASE("lambda count command", "[report][command]") {
  auto const r = cmd_lambda("C5", LambdaQuery::count);
  CHECK(r.status == Status::pass);
  CHECK(r.payload["size"] == 81);
  CHECK(r.payload["orbits"] == 17);
  CHECK_THROWS_AS(cmd_lambda("C7", LambdaQuery::count), CapacityError);
  CHECK_THROWS_AS(cmd_lambda("C7", LambdaQuery::table, {true, nullptr}),
                  CapacityError);
  CHECK_THROWS_AS(parse_lambda_query("size"), ParseError);
}

TEST_CASE("explore-sl is informational", "[report][command]") {
  auto const r = cmd_explore_sl(12);
  CHECK(r.status == Status::info);
  REQUIRE(r.payload["rows"].size() == 12);
  for (auto const& row : r.payload["rows"]) {
    CHECK(row.contains("n"));
  }
  CHECK_THROWS(cmd_explore_sl(17));
}

TEST_CASE("sl-table reports the single mismatch", "[report][command]") {
  auto const r = cmd_sl_table();
  CHECK(r.status == Status::fail);
  std::vector<std::string> bad;
  for (auto const& row : r.payload["rows"]) {
    if (row["match"] == false) {
      bad.push_back(row["group"].get<std::string>());
    }
  }
  CHECK(bad == std::vector<std::string>{"D10"});
}

TEST_CASE("invariant command", "[report][command]") {
  auto const r = cmd_invariant("Q8");
  CHECK(r.payload["count"] == 8);
  CHECK(r.payload["s"] == 3);
  CHECK(r.payload["up_L0_count"] == 8);
  CHECK_THROWS_AS(cmd_invariant("C3xC3"), CapacityError);
}
