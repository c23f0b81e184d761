#include "mnc/presets.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#ifndef MNC_SOURCE_PRESET_DIR
#define MNC_SOURCE_PRESET_DIR "presets/drv"
#endif

namespace mnc {

std::vector<Mat2F3> matrix_closure(const std::vector<Mat2F3>& mats) {
  std::set<Mat2F3> seen{Mat2F3{}};
  std::vector<Mat2F3> frontier{Mat2F3{}};
  while (!frontier.empty()) {
    auto m = frontier.back();
    frontier.pop_back();
    for (const auto& g : mats) {
      auto n = mat_mul(m, g);
      if (seen.insert(n).second) frontier.push_back(n);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<GroupMap> frattini_preimage(const Subgroup& q, std::uint32_t b1, std::uint32_t b2,
                                        const std::vector<Mat2F3>& mats) {
  for (const auto& m : mats)
    if (m.det() == 0) throw std::invalid_argument("frattini_preimage: singular matrix");
  const auto group = matrix_closure(mats);
  const std::set<Mat2F3> allowed(group.begin(), group.end());
  const auto aut = automorphism_group(q);
  std::vector<GroupMap> out;
  for (std::uint32_t i = 0; i < aut.order(); ++i) {
    auto f = aut.map(i);
    if (allowed.count(frattini_matrix(f, b1, b2))) out.push_back(std::move(f));
  }
  return out;
}

json to_json(const Preset& p) {
  json autos = json::array();
  for (const auto& a : p.automizers) {
    json j{{"subject", a.subject}};
    if (!a.label.empty()) j["label"] = a.label;
    if (!a.basis.empty()) j["basis"] = a.basis;
    if (!a.frattini_preimage.empty()) {
      json ms = json::array();
      for (const auto& m : a.frattini_preimage) ms.push_back(to_json(m));
      j["frattini_preimage"] = ms;
    }
    if (!a.automorphisms.empty()) j["automorphisms"] = a.automorphisms;
    autos.push_back(j);
  }
  return json{{"name", p.name}, {"table", p.table}, {"base", to_json(p.base)}, {"out_b", p.out_b}, {"automizers", autos}};
}

Preset preset_from_json(const json& j) {
  try {
    Preset p;
    p.name = j.at("name").get<std::string>();
    p.table = j.value("table", 0);
    p.base = params_from_json(j.at("base"));
    p.out_b = j.value("out_b", json::object());
    for (const auto& a : j.at("automizers")) {
      PresetAutomizer pa;
      pa.label = a.value("label", "");
      pa.subject = a.at("subject").get<std::vector<std::string>>();
      pa.basis = a.value("basis", std::vector<std::string>{});
      if (a.contains("frattini_preimage")) {
        if (pa.basis.size() != 2) throw std::invalid_argument("frattini_preimage needs a two-element basis");
        for (const auto& m : a.at("frattini_preimage")) pa.frattini_preimage.push_back(matrix_from_json(m));
      }
      if (a.contains("automorphisms")) pa.automorphisms = a.at("automorphisms").get<std::vector<json>>();
      p.automizers.push_back(std::move(pa));
    }
    return p;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed preset: ") + e.what());
  }
}

Preset load_preset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read preset " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return preset_from_json(j);
}

std::filesystem::path preset_dir() {
  if (const char* env = std::getenv("MNC_PRESET_DIR"); env && *env) return env;
  return MNC_SOURCE_PRESET_DIR;
}

std::vector<std::filesystem::path> preset_files() {
  std::vector<std::filesystem::path> out;
  const auto dir = preset_dir();
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Preset> find_preset(const std::string& name) {
  for (const auto& f : preset_files()) {
    if (f.stem() == name) return load_preset(f);
    auto p = load_preset(f);
    if (p.name == name) return p;
  }
  return std::nullopt;
}

std::vector<AutomizerSpec> preset_specs(const Preset& p, const std::shared_ptr<const PcGroupOps>& G) {
  if (!(G->group().params() == p.base)) throw std::invalid_argument("preset base does not match the group");
  std::vector<AutomizerSpec> out;
  for (const auto& a : p.automizers) {
    const auto q = subgroup_from_json(G, json(a.subject));
    AutomizerSpec spec{q, {}};
    if (!a.frattini_preimage.empty()) {
      const auto b1 = G->group().parse_word(a.basis[0]).code();
      const auto b2 = G->group().parse_word(a.basis[1]).code();
      spec.generators = frattini_preimage(q, b1, b2, a.frattini_preimage);
    }
    for (const auto& m : a.automorphisms) {
      auto f = map_from_json(G, q, q, m);
      if (!f.injective()) throw std::invalid_argument("preset automorphism is not injective");
      spec.generators.push_back(std::move(f));
    }
    out.push_back(std::move(spec));
  }
  return out;
}

FusionSystem build_preset(const Preset& p, const std::shared_ptr<const PcGroupOps>& G) {
  return generate_fusion(whole_group(G), preset_specs(p, G));
}

}  // namespace mnc
