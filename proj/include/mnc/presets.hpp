#pragma once

// Named fusion systems stored as JSON fixtures.  A preset lists automizer
// generators on a few subgroups of B; the fusion system is what they generate
// together with Hom_B.
//
//   {
//     "name": "omega", "table": 1, "base": {"r": 4, "beta": 0, "gamma": 2, "delta": 0},
//     "out_b": {"order": 2, "frattini_matrices": [[a, b, c, d]]},
//     "automizers": [
//       {"subject": ["s", "s1"], "automorphisms": [{"images": {"s": "...", "s1": "..."}}]},
//       {"label": "V0", "subject": ["s2^3", "s"], "basis": ["s2^3", "s"],
//        "frattini_preimage": [[1, 1, 0, 1], [1, 0, 1, 1]]}
//     ]
//   }
//
// "frattini_preimage" stands for every automorphism of the subject whose
// matrix on the Frattini quotient, in the declared basis and column
// convention, lies in the group generated by the listed matrices.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mnc/io.hpp"

namespace mnc {

struct PresetAutomizer {
  std::string label;
  std::vector<std::string> subject;
  std::vector<std::string> basis;
  std::vector<Mat2F3> frattini_preimage;
  std::vector<json> automorphisms;
};

struct Preset {
  std::string name;
  int table = 0;
  GroupParams base;
  json out_b = json::object();
  std::vector<PresetAutomizer> automizers;
};

json to_json(const Preset& p);
/// Throws std::invalid_argument on malformed input.
Preset preset_from_json(const json& j);
Preset load_preset(const std::filesystem::path& path);

/// The preset directory: $MNC_PRESET_DIR if set, else the source tree's presets/drv.
std::filesystem::path preset_dir();
/// Presets in preset_dir(), sorted by file name.
std::vector<std::filesystem::path> preset_files();
/// Looks up by preset name or file stem.
std::optional<Preset> find_preset(const std::string& name);

std::vector<AutomizerSpec> preset_specs(const Preset& p, const std::shared_ptr<const PcGroupOps>& G);
FusionSystem build_preset(const Preset& p, const std::shared_ptr<const PcGroupOps>& G);

/// All automorphisms f of q with frattini_matrix(f, b1, b2) in <mats>.
std::vector<GroupMap> frattini_preimage(const Subgroup& q, std::uint32_t b1, std::uint32_t b2,
                                        const std::vector<Mat2F3>& mats);
/// The subgroup of GL_2(3) generated by mats.
std::vector<Mat2F3> matrix_closure(const std::vector<Mat2F3>& mats);

}  // namespace mnc
