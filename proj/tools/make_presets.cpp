// Regenerates presets/drv: for each base group, searches the 2-subgroups of
// Out(B) of order 2 and 4 for the choices that, together with an SL_2(3) or
// GL_2(3) automizer on V0 or E0, give a saturated system in which neither
// automizer grows.  Usage: mnc-make-presets [output-dir]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "mnc/presets.hpp"

using namespace mnc;

namespace {

const Mat2F3 kUpper(1, 1, 0, 1);
const Mat2F3 kLower(1, 0, 1, 1);
const Mat2F3 kFlip(2, 0, 0, 1);

struct Base {
  GroupParams params;
  int table;
  std::string prefix;
};

struct Context {
  std::shared_ptr<const PcGroupOps> G;
  NamedSubgroups named;
  Subgroup whole;
  AutomorphismGroup aut;
  QuotientGroup out;
};

PresetAutomizer local_automizer(const Context& c, bool on_e0, bool special) {
  const auto& g = c.G->group();
  PresetAutomizer a;
  a.label = on_e0 ? "E0" : "V0";
  const auto& q = on_e0 ? c.named.E.at(0) : c.named.V.at(0);
  a.subject = q.generator_labels();
  if (on_e0)
    a.basis = {g.format(g.s()), g.format(c.named.zeta_prime)};
  else
    a.basis = {g.format(c.named.zeta), g.format(g.s())};
  a.frattini_preimage = {kUpper, kLower};
  if (!special) a.frattini_preimage.push_back(kFlip);
  return a;
}

PresetAutomizer base_automizer(const Context& c, const std::vector<std::uint32_t>& cosets) {
  PresetAutomizer a;
  a.label = "B";
  a.subject = c.whole.generator_labels();
  for (auto k : cosets) a.automorphisms.push_back(to_json(c.aut.map(c.out.representative[k])));
  return a;
}

bool row_ok(const Context& c, const Preset& p, std::uint64_t b_order, const PresetAutomizer& local,
            std::uint64_t local_order) {
  auto F = build_preset(p, c.G);
  const auto q = subgroup_from_json(c.G, json(local.subject));
  return F.automizer_order(F.id_of(c.whole)) == b_order && F.automizer_order(F.id_of(q)) == local_order &&
         is_saturated(F).saturated;
}

Preset make(const Base& b, const std::string& name, const Context& c, const std::vector<std::uint32_t>& cosets,
            const PresetAutomizer& local) {
  Preset p;
  p.name = b.prefix + "-" + name;
  p.table = b.table;
  p.base = b.params;
  p.automizers = {base_automizer(c, cosets), local};
  json mats = json::array();
  const auto& g = c.G->group();
  for (auto k : cosets)
    mats.push_back(to_json(frattini_matrix(c.aut.map(c.out.representative[k]), g.s().code(), g.generator(1).code())));
  p.out_b = json{{"order", cosets.size() == 1 ? 2 : 4}, {"out_order", c.out.table->size()}, {"frattini_matrices", mats},
                 {"frattini_basis", {g.format(g.s()), g.format(g.generator(1))}}};
  return p;
}

void write(const std::filesystem::path& dir, const Preset& p) {
  std::string file = p.name;
  for (auto& ch : file)
    if (ch == ',') ch = '_';
  std::ofstream out(dir / (file + ".json"));
  out << to_json(p).dump(2) << "\n";
  std::cout << "wrote " << (dir / (file + ".json")).string() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : preset_dir();
  std::filesystem::create_directories(dir);
  const std::vector<Base> bases{{{3, 4, 0, 2, 0}, 1, "b4g2"}, {{3, 6, 0, 1, 0}, 2, "b6g1"}, {{3, 6, 0, 2, 0}, 2, "b6g2"}};
  for (const auto& b : bases) {
    auto G = make_pc_ops(b.params);
    auto whole = whole_group(G);
    auto aut = automorphism_group(whole);
    auto out = out_quotient(aut);
    Context c{G, named_subgroups(G), whole, aut, out};
    const auto inner = c.aut.inner.order();
    const auto v_sl = local_automizer(c, false, true), v_gl = local_automizer(c, false, false);
    const auto e_sl = local_automizer(c, true, true), e_gl = local_automizer(c, true, false);

    auto involution_ok = [&](std::uint32_t k, const PresetAutomizer& local, std::uint64_t order) {
      auto p = make(b, "probe", c, {k}, local);
      return row_ok(c, p, 2 * inner, local, order);
    };
    std::optional<Preset> chosen[4];
    for (const auto& x : subgroups_of_order(out.table, 4)) {
      std::vector<std::uint32_t> inv;
      for (auto k : x.members())
        if (k != 0 && out.table->element_order(k) == 2) inv.push_back(k);
      if (inv.size() != 3) continue;
      std::optional<std::uint32_t> omega, eta_omega;
      for (auto k : inv) {
        if (!omega && involution_ok(k, v_sl, 24)) omega = k;
        else if (!eta_omega && involution_ok(k, e_sl, 216)) eta_omega = k;
      }
      if (!omega || !eta_omega) continue;
      const std::vector<std::uint32_t> pair{*omega, *eta_omega};
      auto pv = make(b, "eta,omega-V0", c, pair, v_gl);
      auto pe = make(b, "eta,omega-E0", c, pair, e_gl);
      if (!row_ok(c, pv, 4 * inner, v_gl, 48) || !row_ok(c, pe, 4 * inner, e_gl, 432)) continue;
      chosen[0] = make(b, "omega", c, {*omega}, v_sl);
      chosen[1] = make(b, "eta-omega", c, {*eta_omega}, e_sl);
      chosen[2] = pv;
      chosen[3] = pe;
      break;
    }
    if (!chosen[0]) {
      std::cerr << to_string(b.params) << ": no consistent choice of eta, omega found" << std::endl;
      return 1;
    }
    for (const auto& p : chosen) write(dir, *p);
  }
  return 0;
}
