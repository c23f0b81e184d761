#pragma once

// JSON forms of parameters, subgroups, maps, matrices and fusion systems.
// Objects are nlohmann::json with sorted keys, so dumps are byte-stable.

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "mnc/fusion.hpp"

namespace mnc {

using nlohmann::json;

json to_json(const GroupParams& params);
/// Accepts {"r", "beta", "gamma", "delta"} (p defaults to 3).  Throws std::invalid_argument.
GroupParams params_from_json(const json& j);

/// {"generators": [words], "order": n, "fingerprint": "..."}.  The fingerprint
/// is included only for p-groups small enough to fingerprint.
json to_json(const Subgroup& q, bool with_fingerprint = true);
Subgroup subgroup_from_json(const std::shared_ptr<const PcGroupOps>& G, const json& j);

/// {"images": {generator word: image word}}.
json to_json(const GroupMap& f);
/// Reads images of the subject's declared generators; throws std::invalid_argument
/// when they do not define a homomorphism into `codomain`.
GroupMap map_from_json(const std::shared_ptr<const PcGroupOps>& G, const Subgroup& domain,
                       const Subgroup& codomain, const json& j);

/// Row-major [a, b, c, d].
json to_json(const Mat2F3& m);
Mat2F3 matrix_from_json(const json& j);

/// {"base", "universe", "automizers", "classes"}: universe ids index the list
/// of subgroups, automizers are keyed by class-representative id, classes are
/// the F-classes of elements as word lists.
json to_json(const FusionSystem& F, const GroupParams& params);

std::vector<std::string> words(const GroupOps& ops, const std::vector<std::uint32_t>& xs);

}  // namespace mnc
