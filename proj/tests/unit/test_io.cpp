#include <doctest.h>

#include <thread>

#include "mnc/presets.hpp"
#include "mnc/verify.hpp"

using namespace mnc;

TEST_CASE("parameter JSON") {
  const GroupParams p{3, 6, 0, 1, 0};
  CHECK(params_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(params_from_json(json{{"r", 5}, {"beta", 0}, {"gamma", 2}, {"delta", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(json{{"r", "four"}}), std::invalid_argument);
}

TEST_CASE("subgroup, map and matrix JSON round-trip") {
  const auto G = make_pc_ops(GroupParams{3, 5, 0, 0, 0});
  const auto whole = whole_group(G);
  for (const auto& q : subgroups_of_order(whole, 27)) CHECK(subgroup_from_json(G, to_json(q)) == q);
  const auto q = subgroups_of_order(whole, 9).front();
  const auto c = GroupMap::conjugation(q, G->group().s().code());
  CHECK(map_from_json(G, q, c.image(), to_json(c)) == c);
  const Mat2F3 m(1, 2, 0, 2);
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(json{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_from_json(G, json{{"generators", {"s"}}, {"order", 9}}), std::invalid_argument);
}

TEST_CASE("every preset file round-trips and builds saturated") {
  const auto files = preset_files();
  REQUIRE(files.size() == 12);
  for (const auto& f : files) {
    CAPTURE(f.string());
    const auto p = load_preset(f);
    CHECK(to_json(preset_from_json(to_json(p))) == to_json(p));
    if (p.base.r == 4) CHECK(is_saturated(build_preset(p, make_pc_ops(p.base))).saturated);
  }
  CHECK(find_preset("b4g2-eta_omega-V0")->name == "b4g2-eta,omega-V0");
  CHECK_FALSE(find_preset("no-such-preset"));
  CHECK_THROWS_AS(preset_from_json(json{{"name", "x"}}), std::invalid_argument);
}

TEST_CASE("fusion system JSON is deterministic") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto p = *find_preset("b4g2-omega");
  CHECK(to_json(build_preset(p, G), p.base).dump() == to_json(build_preset(p, G), p.base).dump());
}

TEST_CASE("report semantics") {
  CheckReport r;
  r.check = "x";
  CHECK(r.claim("a", true));
  CHECK(r.passed());
  r.open("b", json::object());
  CHECK(r.status == Status::indeterminate);
  r.note("c", json{{"k", 1}});
  CHECK(r.status == Status::indeterminate);
  r.claim("d", false);
  CHECK(r.status == Status::fail);
  r.millis = 123;
  CHECK_FALSE(r.payload().contains("millis"));
  CHECK(r.to_json().at("millis") == 123);
  CHECK(r.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("run_checks keeps entry order and payloads are stable") {
  std::vector<CheckEntry> entries;
  for (int r = 4; r <= 5; ++r)
    for (int g : {0, 1}) entries.push_back({"prop-a9", [r, g] { return check_prop_a9(r, g); }});
  entries.push_back({"gl23-facts", [] { return check_gl23_facts(); }});
  const auto a = run_checks(entries, 3);
  const auto b = run_checks(entries, 1);
  CHECK(a.payload().dump() == b.payload().dump());
  REQUIRE(a.reports.size() == entries.size());
  CHECK(a.reports.back().check == "gl23-facts");
  CHECK(a.reports[0].params.at("r") == 4);
}
