#include <doctest.h>

#include "mnc/fusion.hpp"
#include "mnc/presets.hpp"

using namespace mnc;

TEST_CASE("inner fusion system: classes are P-conjugacy classes, automizers are N/C") {
  for (const auto& p : {GroupParams{3, 4, 0, 2, 0}, GroupParams{3, 5, 0, 1, 0}}) {
    CAPTURE(to_string(p));
    const auto G = make_pc_ops(p);
    const auto whole = whole_group(G);
    const auto F = inner_fusion(whole);
    const auto& subs = F.universe();
    CHECK(F.class_ids().size() == conjugacy_classes_of_subgroups(subs, whole).size());
    for (std::size_t id = 0; id < subs.size(); ++id)
      CHECK(F.automizer_order(id) == normalizer(whole, subs[id]).order() / centralizer(whole, subs[id]).order());
    CHECK(is_saturated(F).saturated);
    for (auto id : strongly_closed_subgroups(F)) CHECK(is_normal(F.subgroup(id), whole));
    for (const auto& n : normal_subgroups(whole)) CHECK(is_strongly_closed(F, n));
    // element classes are conjugacy classes
    const auto labels = F.element_class_labels();
    for (const auto& cls : conjugacy_classes(whole))
      for (auto x : cls) CHECK(labels[x] == cls.front());
  }
}

TEST_CASE("F_P(G) for GL_2(3)") {
  const auto gl = gl2_3();
  const auto whole = whole_group(gl.table);
  const auto p3 = subgroups_of_order(gl.table, 3).front();
  const auto F3 = from_group(whole, p3);
  CHECK(F3.automizer_order(F3.id_of(p3)) == 2);
  CHECK(is_saturated(F3).saturated);
  const auto p2 = subgroups_of_order(gl.table, 16).front();
  const auto F2 = from_group(whole, p2);
  CHECK(F2.automizer_order(F2.id_of(p2)) == normalizer(whole, p2).order() / centralizer(whole, p2).order());
  CHECK(is_saturated(F2).saturated);
  CHECK_THROWS_AS(from_group(whole, subgroups_of_order(gl.table, 8).front()), std::invalid_argument);
}

TEST_CASE("the b4g2-omega preset") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto named = named_subgroups(G);
  const auto preset = find_preset("b4g2-omega");
  REQUIRE(preset);
  const auto F = build_preset(*preset, G);
  const auto whole = whole_group(G);
  CHECK(F.automizer_order(F.id_of(named.V.at(0))) == 24);
  CHECK(F.automizer_order(F.id_of(named.E.at(0))) == 54);
  CHECK(F.automizer_order(F.id_of(whole)) == 54);
  CHECK(is_saturated(F).saturated);
  CHECK(is_strongly_closed(F, named.E.at(0)));
  CHECK_FALSE(is_strongly_closed(F, named.V.at(0)));
  CHECK_THROWS_AS(invariant_closure(F, named.V.at(0), {}), std::invalid_argument);

  // Everything in F restricts, composes and contains Hom_P.
  for (const auto& q : F.universe())
    for (auto g : whole.generators()) CHECK(F.contains(GroupMap::conjugation(q, g)));
  const auto v = F.id_of(named.V.at(0));
  const auto gens = F.automizer_generators(v);
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(F.contains(a.after(b)));
  // An automorphism of V0 of determinant -1 is not in F.
  const auto flip = frattini_preimage(named.V.at(0), named.zeta.code(), G->group().s().code(), {Mat2F3(2, 0, 0, 1)});
  bool some_outside = false;
  for (const auto& f : flip) some_outside = some_outside || !F.contains(f);
  CHECK(some_outside);
}

TEST_CASE("shrinking an automizer breaks saturation") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto named = named_subgroups(G);
  auto F = build_preset(*find_preset("b4g2-omega"), G);
  const auto e0 = F.id_of(named.E.at(0));
  const auto inner = F.base_automizer(e0);
  std::vector<GroupMap> gens;
  for (const auto& p : inner->generators()) gens.push_back(automorphism_of_perm(named.E.at(0), p));
  F.testing_replace_automizer(e0, gens);
  CHECK_FALSE(is_saturated(F).saturated);
}

TEST_CASE("add rejects bad input") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto whole = whole_group(G);
  FusionSystem F(whole);
  const auto c9 = subgroup_generated(G, std::vector<Element>{G->group().generator(1)});
  const auto f = GroupMap::extend(c9, whole, {G->group().generator(1).code()}, {G->group().s().code()});
  REQUIRE(f);
  CHECK_THROWS_AS(F.add(*f), std::invalid_argument);
  CHECK_THROWS_AS(FusionSystem(whole_group(gl2_3().table)), std::invalid_argument);
}

TEST_CASE("generate_fusion is idempotent") {
  const auto G = make_pc_ops(GroupParams{3, 4, 0, 2, 0});
  const auto F = build_preset(*find_preset("b4g2-eta,omega-V0"), G);
  std::vector<AutomizerSpec> specs;
  for (auto c : F.class_ids()) {
    const auto r = F.representative(c);
    specs.push_back({F.subgroup(r), F.automizer_generators(r)});
  }
  auto again = generate_fusion(F.base(), specs);
  for (auto c : F.class_ids()) {
    const auto r = F.representative(c);
    for (auto m : F.class_members(c)) again.add(*F.some_isomorphism(r, m));
  }
  CHECK(again.summary() == F.summary());
}
