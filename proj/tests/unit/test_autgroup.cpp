#include <doctest.h>

#include <random>

#include "mnc/autgroup.hpp"
#include "oracles.hpp"

using namespace mnc;

TEST_CASE("automorphism group orders") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto named = named_subgroups(G);
  CHECK(automorphism_group(named.V.at(0)).order() == 48);  // GL_2(3)
  CHECK(automorphism_group(named.E.at(0)).order() == 432);
  CHECK(automorphism_group(whole_group(oracle::heisenberg())).order() == 432);
  const auto c9 = subgroup_generated(G, std::vector<Element>{G->group().generator(1)});
  CHECK(automorphism_group(c9).order() == 6);
  const auto a = automorphism_group(named.E.at(0));
  CHECK(a.inner.order() == 9);
}

TEST_CASE("GroupMap::extend accepts homomorphisms only") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto& g = G->group();
  const auto v = subgroup_generated(G, std::vector<Element>{g.s(), g.generator(3)});
  const auto s = g.s().code(), z = g.generator(3).code();
  auto swap = GroupMap::extend(v, v, {s, z}, {z, s});
  REQUIRE(swap);
  CHECK(swap->injective());
  CHECK(swap->after(*swap) == GroupMap::identity(v));
  // s has order 3 and s1 order 9: s -> s1 does not extend, s1 -> s does (not injectively).
  const auto c9 = subgroup_generated(G, std::vector<Element>{g.generator(1)});
  const auto whole = whole_group(G);
  CHECK(GroupMap::extend(v, whole, {s, z}, {g.generator(1).code(), z}) == std::nullopt);
  const auto onto = GroupMap::extend(c9, whole, {g.generator(1).code()}, {s});
  REQUIRE(onto);
  CHECK_FALSE(onto->injective());
  CHECK(onto->image().order() == 3);
}

TEST_CASE("conjugation maps and restriction") {
  const auto G = make_pc_ops(GroupParams{3, 5, 0, 0, 0});
  const auto whole = whole_group(G);
  const auto x = G->group().generator(1).code();
  const auto c = GroupMap::conjugation(whole, x);
  for (auto y : whole.members()) CHECK(c(y) == G->conj(y, x));
  const auto q = subgroups_of_order(whole, 27).front();
  const auto cq = c.restrict(q);
  CHECK(cq.image() == conjugate(q, x));
  CHECK(cq.inverse().after(cq) == GroupMap::identity(q));
}

TEST_CASE("Frattini matrices are multiplicative") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto named = named_subgroups(G);
  const auto& e0 = named.E.at(0);
  const auto aut = automorphism_group(e0);
  const auto b1 = G->group().s().code(), b2 = named.zeta_prime.code();
  const auto mats = frattini_matrices(aut, b1, b2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint32_t> pick(0, aut.order() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto i = pick(rng), j = pick(rng);
    const auto f = aut.map(i), h = aut.map(j);
    CHECK(frattini_matrix(f.after(h), b1, b2) == mat_mul(mats[i], mats[j]));
    CHECK(mats[i] == frattini_matrix(f, b1, b2));
  }
  // Inner automorphisms act trivially.
  for (auto k : aut.inner.members()) CHECK(mats[k] == Mat2F3{});
  CHECK_THROWS_AS(frattini_matrix(aut.map(0), b1, named.zeta.code()), std::invalid_argument);
}

TEST_CASE("GL_2(3) and SL_2(3)") {
  const auto gl = gl2_3();
  const auto sl = sl2_3();
  CHECK(gl.table->size() == 48);
  CHECK(sl.table->size() == 24);
  CHECK(recognize_sl2_3(whole_group(sl.table)));
  CHECK_FALSE(recognize_sl2_3(whole_group(gl.table)));
  for (const auto& s : subgroups_of_order(gl.table, 16)) CHECK(recognize_sd16(s));
  CHECK(mat_mul(Mat2F3(1, 1, 0, 1), mat_inv(Mat2F3(1, 1, 0, 1))) == Mat2F3{});
  CHECK(Mat2F3(-1, 0, 1, 1) == Mat2F3(2, 0, 1, 1));
  CHECK(mat_conj(Mat2F3(2, 0, 1, 1), Mat2F3(2, 0, 0, 1)) == Mat2F3(2, 0, 2, 1));
}

TEST_CASE("PermutationGroup::generate") {
  using P = PermutationGroup::Perm;
  const P a{1, 2, 0}, b{1, 0, 2};
  const auto s3 = PermutationGroup::generate(3, {a, b});
  CHECK(s3->size() == 6);
  const auto again = PermutationGroup::generate(3, {a, a, b, P{0, 1, 2}, b});
  CHECK(again->size() == 6);
  CHECK(again->generators().size() == 2);
  CHECK_THROWS_AS(PermutationGroup::generate(4, {a}), std::invalid_argument);
  for (std::uint32_t i = 0; i < s3->size(); ++i) CHECK(s3->mul(i, s3->inv(i)) == 0);
}

TEST_CASE("quotients") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto whole = whole_group(G);
  const auto out = out_quotient(automorphism_group(whole));
  CHECK(out.table->size() == 12);
  const auto q = quotient(whole, center(whole));
  CHECK(q.table->size() == 27);
  CHECK(fingerprint(whole_group(q.table)) == fingerprint(whole_group(oracle::heisenberg())));
}
