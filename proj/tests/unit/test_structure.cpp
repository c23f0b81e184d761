#include <doctest.h>

#include "mnc/structure.hpp"
#include "oracles.hpp"

using namespace mnc;

namespace {

std::vector<std::uint32_t> brute_center(const GroupOps& g) {
  std::vector<std::uint32_t> z;
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    bool central = true;
    for (std::uint32_t y = 0; y < g.size() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

bool brute_normal(const GroupOps& g, const std::vector<std::uint32_t>& members) {
  std::vector<char> in(g.size(), 0);
  for (auto m : members) in[m] = 1;
  for (std::uint32_t x = 0; x < g.size(); ++x)
    for (auto m : members)
      if (!in[g.conj(m, x)]) return false;
  return true;
}

}  // namespace

TEST_CASE("all_subgroups matches brute force at r = 4") {
  for (const auto& p : admissible_params(4)) {
    CAPTURE(to_string(p));
    const auto G = make_pc_ops(p);
    const auto subs = all_subgroups(whole_group(G));
    const auto brute = oracle::brute_subgroups(*G);
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& q : subs) got.insert(q.members());
    CHECK(got == brute);
    CHECK(got.size() == subs.size());
  }
}

TEST_CASE("all_subgroups of 3^{1+2}_+ and C3 wr C3 match brute force") {
  for (const auto& t : {oracle::heisenberg(), oracle::c3_wreath_c3()}) {
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& q : all_subgroups(whole_group(t))) got.insert(q.members());
    CHECK(got == oracle::brute_subgroups(*t));
  }
}

TEST_CASE("normal subgroups and center against definitions") {
  for (const auto& p : {GroupParams{3, 4, 0, 2, 0}, GroupParams{3, 5, 0, 0, 0}, GroupParams{3, 5, 1, 0, 0}}) {
    CAPTURE(to_string(p));
    const auto G = make_pc_ops(p);
    const auto whole = whole_group(G);
    CHECK(center(whole).members() == brute_center(*G));
    std::set<std::vector<std::uint32_t>> expected;
    for (const auto& q : all_subgroups(whole))
      if (brute_normal(*G, q.members())) expected.insert(q.members());
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& n : normal_subgroups(whole)) {
      got.insert(n.members());
      CHECK(is_normal(n, whole));
    }
    CHECK(got == expected);
  }
}

TEST_CASE("normalizer, centralizer and conjugation") {
  const auto G = make_pc_ops(GroupParams{3, 5, 0, 1, 0});
  const auto whole = whole_group(G);
  for (const auto& q : subgroups_of_order(whole, 9)) {
    const auto n = normalizer(whole, q);
    const auto c = centralizer(whole, q);
    for (auto x : whole.members()) {
      CHECK(n.contains(x) == (conjugate(q, x) == q));
      bool commutes = true;
      for (auto y : q.members()) commutes = commutes && G->mul(x, y) == G->mul(y, x);
      CHECK(c.contains(x) == commutes);
    }
    CHECK(c.is_subgroup_of(n));
    CHECK(fingerprint(conjugate(q, G->group().s().code())) == fingerprint(q));
  }
}

TEST_CASE("class equation and conjugacy classes of subgroups") {
  const auto G = make_pc_ops(GroupParams{3, 6, 0, 1, 0});
  const auto whole = whole_group(G);
  std::size_t total = 0;
  for (const auto& cls : conjugacy_classes(whole)) {
    total += cls.size();
    CHECK(whole.order() % cls.size() == 0);
  }
  CHECK(total == whole.order());
  const auto subs = subgroups_of_order(whole, 27);
  std::size_t covered = 0;
  for (const auto& cls : conjugacy_classes_of_subgroups(subs, whole)) {
    covered += cls.size();
    for (auto i : cls) CHECK(fingerprint(subs[i]) == fingerprint(subs[cls.front()]));
  }
  CHECK(covered == subs.size());
}

TEST_CASE("series and named subgroups of B(3,6;0,1,0)") {
  const auto G = make_pc_ops(GroupParams{3, 6, 0, 1, 0});
  const auto lcs = lower_central_series(G);
  REQUIRE(lcs.size() == 5);
  for (std::size_t i = 0; i < lcs.size(); ++i) CHECK(lcs[i].order() == std::uint32_t{243} / [](std::size_t k) { std::uint32_t o = 1; while (k--) o *= 3; return o; }(i));
  const auto literal = literal_lower_central_series(whole_group(G));
  CHECK(literal.at(1) == lcs.at(1));
  const auto named = named_subgroups(G);
  CHECK(named.center.order() == 3);
  CHECK(fingerprint(named.E.at(0)) == fingerprint(whole_group(oracle::heisenberg())));
  for (const auto& [i, e] : named.E) {
    CHECK(e.order() == 27);
    CHECK(center(e).order() == 3);
    CHECK(fingerprint(e).exponent == (i == 0 ? 3u : 9u));
  }
  for (const auto& [i, v] : named.V) {
    CHECK(v.order() == 9);
    CHECK(is_abelian(v));
  }
  CHECK_THROWS_AS(named_subgroups(make_pc_ops(GroupParams{3, 5, 1, 0, 0})), std::invalid_argument);
}

TEST_CASE("Frattini subgroup") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto whole = whole_group(G);
  const auto phi = frattini_subgroup(whole);
  CHECK(phi.order() == 9);
  // Intersection of the maximal subgroups.
  std::vector<char> in(G->size(), 1);
  for (const auto& m : subgroups_of_order(whole, 27))
    for (std::uint32_t x = 0; x < G->size(); ++x) in[x] = in[x] && m.contains(x);
  for (std::uint32_t x = 0; x < G->size(); ++x) CHECK(static_cast<bool>(in[x]) == phi.contains(x));
}
