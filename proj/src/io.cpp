#include "mnc/io.hpp"

#include <stdexcept>

namespace mnc {

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return true;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<std::string> words(const GroupOps& ops, const std::vector<std::uint32_t>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(ops.label(x));
  return out;
}

json to_json(const GroupParams& params) {
  return json{{"r", params.r}, {"beta", params.beta}, {"gamma", params.gamma}, {"delta", params.delta}};
}

GroupParams params_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("group parameters must be an object");
  GroupParams p;
  try {
    p.p = j.value("p", 3);
    p.r = j.at("r").get<int>();
    p.beta = j.value("beta", 0);
    p.gamma = j.value("gamma", 0);
    p.delta = j.value("delta", 0);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad group parameters: ") + e.what());
  }
  if (auto why = params_rejection(p)) throw std::invalid_argument(*why);
  return p;
}

json to_json(const Subgroup& q, bool with_fingerprint) {
  json j{{"generators", q.generator_labels()}, {"order", q.order()}};
  if (with_fingerprint && q.order() <= kFingerprintBound && is_prime_power(q.order()))
    j["fingerprint"] = to_string(fingerprint(q));
  return j;
}

Subgroup subgroup_from_json(const std::shared_ptr<const PcGroupOps>& G, const json& j) {
  const json& gens = j.is_object() ? j.at("generators") : j;
  std::vector<std::uint32_t> xs;
  for (const auto& w : gens) xs.push_back(G->group().parse_word(w.get<std::string>()).code());
  auto q = subgroup_generated(G, xs);
  if (j.is_object() && j.contains("order") && j.at("order").get<std::uint64_t>() != q.order())
    throw std::invalid_argument("subgroup order does not match its generators");
  return q;
}

json to_json(const GroupMap& f) {
  json images = json::object();
  const auto& ops = f.domain().parent();
  for (auto g : f.domain().generators()) images[ops.label(g)] = ops.label(f(g));
  return json{{"images", images}};
}

GroupMap map_from_json(const std::shared_ptr<const PcGroupOps>& G, const Subgroup& domain, const Subgroup& codomain,
                       const json& j) {
  std::vector<std::uint32_t> gens, images;
  for (const auto& [k, v] : j.at("images").items()) {
    gens.push_back(G->group().parse_word(k).code());
    images.push_back(G->group().parse_word(v.get<std::string>()).code());
  }
  for (auto g : gens)
    if (!domain.contains(g)) throw std::invalid_argument("map generator outside its domain");
  auto f = GroupMap::extend(domain, codomain, gens, images);
  if (!f) throw std::invalid_argument("images do not define a homomorphism");
  return *f;
}

json to_json(const Mat2F3& m) { return json(m.e); }

Mat2F3 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("matrix must be [a, b, c, d]");
  return Mat2F3(j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>());
}

json to_json(const FusionSystem& F, const GroupParams& params) {
  json universe = json::array();
  for (const auto& q : F.universe()) universe.push_back(to_json(q, false));
  json automizers = json::object();
  for (auto c : F.class_ids()) {
    const auto rep = F.representative(c);
    json gens = json::array();
    for (const auto& g : F.automizer_generators(rep)) gens.push_back(to_json(g));
    automizers[std::to_string(rep)] =
        json{{"order", F.automizer_order(rep)}, {"class", F.class_members(c)}, {"generators", gens}};
  }
  json classes = json::array();
  const auto labels = F.element_class_labels();
  std::vector<std::vector<std::uint32_t>> by_label(labels.size());
  for (auto x : F.base().members()) by_label[labels[x]].push_back(x);
  for (const auto& cls : by_label)
    if (!cls.empty()) classes.push_back(words(F.base().parent(), cls));
  return json{{"base", to_json(params)}, {"universe", universe}, {"automizers", automizers}, {"classes", classes}};
}

}  // namespace mnc
