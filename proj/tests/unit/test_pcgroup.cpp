#include <doctest.h>

#include <random>
#include <set>

#include "mnc/structure.hpp"
#include "oracles.hpp"

using namespace mnc;

namespace {

std::vector<GroupParams> beta_zero(int r) {
  std::vector<GroupParams> out;
  for (const auto& p : admissible_params(r))
    if (p.beta == 0) out.push_back(p);
  return out;
}

oracle::AbelianCollector::Elt to_oracle(const Group& g, const oracle::AbelianCollector& o, Element x) {
  return o.element(g.s_exponent(x), g.pc_exponents(x));
}

}  // namespace

TEST_CASE("multiplication agrees with the module collector on every pair (r = 4, 5)") {
  for (int r : {4, 5})
    for (const auto& p : beta_zero(r)) {
      CAPTURE(to_string(p));
      const Group g(p);
      const oracle::AbelianCollector o(r, p.gamma, p.delta);
      REQUIRE(o.module_order() * 3 == static_cast<long long>(g.order()));
      const auto all = g.elements();
      std::vector<oracle::AbelianCollector::Elt> image;
      for (auto x : all) image.push_back(to_oracle(g, o, x));
      REQUIRE(std::set(image.begin(), image.end()).size() == all.size());
      bool agree = true;
      for (std::size_t i = 0; i < all.size() && agree; ++i)
        for (std::size_t j = 0; j < all.size() && agree; ++j)
          agree = to_oracle(g, o, g.mul(all[i], all[j])) == o.mul(image[i], image[j]);
      CHECK(agree);
    }
}

TEST_CASE("multiplication agrees with the module collector on random pairs (r = 6..8)") {
  std::mt19937 rng(20261014);
  for (int r : {6, 7, 8})
    for (const auto& p : beta_zero(r)) {
      CAPTURE(to_string(p));
      const Group g(p);
      const oracle::AbelianCollector o(r, p.gamma, p.delta);
      REQUIRE(o.module_order() * 3 == static_cast<long long>(g.order()));
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
      for (int t = 0; t < 3000; ++t) {
        const auto x = g.from_code(pick(rng)), y = g.from_code(pick(rng));
        REQUIRE(to_oracle(g, o, g.mul(x, y)) == o.mul(to_oracle(g, o, x), to_oracle(g, o, y)));
      }
    }
}

TEST_CASE("associativity, identity and inverses") {
  for (const auto& p : admissible_params(4)) {
    CAPTURE(to_string(p));
    const Group g(p);
    const auto all = g.elements();
    for (auto x : all) {
      CHECK(g.mul(x, g.inv(x)) == g.identity());
      CHECK(g.mul(g.identity(), x) == x);
      for (auto y : all)
        for (auto z : all) REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
    }
  }
  std::mt19937 rng(7);
  for (int r : {6, 8})
    for (const auto& p : admissible_params(r)) {
      const Group g(p);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
      for (int t = 0; t < 2000; ++t) {
        const auto x = g.from_code(pick(rng)), y = g.from_code(pick(rng)), z = g.from_code(pick(rng));
        REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      }
    }
}

TEST_CASE("defining relations hold for every admissible group, r = 4..8") {
  for (int r = 4; r <= 8; ++r)
    for (const auto& p : admissible_params(r)) {
      CAPTURE(to_string(p));
      CHECK(verify_presentation(Group(p)).all_pass());
    }
}

TEST_CASE("B(3,4;0,2,0) basics") {
  const Group g(GroupParams{3, 4, 0, 2, 0});
  CHECK(g.order() == 81);
  const auto s = g.s(), s1 = g.generator(1);
  CHECK(g.comm(s, s1) == g.generator(2));
  CHECK(g.mul(s, s1) == g.parse_word("s2*s1*s"));
  CHECK(g.conj(s1, s) == g.mul(g.generator(2), s1));
  CHECK(g.element_order(s1) == 9);
  CHECK(g.element_order(s) == 3);
}

TEST_CASE("B(3,4;0,1,0) is C3 wr C3 and its s1 has order 3") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 1, 0});
  CHECK(fingerprint(whole_group(G)) == fingerprint(whole_group(oracle::c3_wreath_c3())));
  CHECK(G->group().element_order(G->group().generator(1)) == 3);
}

TEST_CASE("format and parse round-trip") {
  for (int r : {4, 5, 6})
    for (const auto& p : admissible_params(r)) {
      const Group g(p);
      for (auto x : g.elements()) REQUIRE(g.parse_word(g.format(x)) == x);
    }
  const Group g(GroupParams{3, 4, 0, 2, 0});
  CHECK(g.parse_word("1") == g.identity());
  CHECK(g.parse_word("s^-1") == g.inv(g.s()));
  CHECK(g.parse_word("s1^-2*s") == g.mul(g.pow(g.generator(1), -2), g.s()));
  CHECK_THROWS_AS(g.parse_word("(s*s1)^3"), ParseError);
  CHECK_THROWS_AS(g.parse_word("s*"), ParseError);
  CHECK_THROWS_AS(g.parse_word("s9"), ParseError);
  CHECK_THROWS_AS(g.parse_word("x"), ParseError);
}

TEST_CASE("inadmissible parameters are rejected") {
  CHECK(params_rejection(GroupParams{3, 5, 0, 2, 0}).has_value());
  CHECK_THROWS_AS(Group(GroupParams{3, 5, 0, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Group(GroupParams{3, 3, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Group(GroupParams{5, 4, 0, 0, 0}), std::invalid_argument);
  CHECK_FALSE(params_rejection(GroupParams{3, 4, 0, 2, 0}).has_value());
}

TEST_CASE("corrupted groups are detected") {
  const Group g(GroupParams{3, 4, 0, 2, 0});
  CHECK_FALSE(verify_presentation(testing::corrupt_conjugation(g)).all_pass());
  const auto bad = testing::corrupt_power(g, 1);
  CHECK(bad.element_order(bad.generator(1)) == 3);
  CHECK_THROWS_AS(testing::corrupt_power(g, 4), std::invalid_argument);
}
