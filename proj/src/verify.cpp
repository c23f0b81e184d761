#include "mnc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

namespace mnc {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::indeterminate:
      return "indeterminate";
  }
  return "?";
}

bool CheckReport::claim(const std::string& name, bool holds, json details) {
  json w{{"claim", name}, {"holds", holds}};
  if (!details.is_null() && !details.empty()) w["details"] = std::move(details);
  witnesses.push_back(std::move(w));
  if (!holds) status = Status::fail;
  return holds;
}

void CheckReport::open(const std::string& name, json details) {
  witnesses.push_back(json{{"claim", name}, {"open", true}, {"details", std::move(details)}});
  if (status == Status::pass) status = Status::indeterminate;
}

void CheckReport::note(const std::string& name, json details) {
  witnesses.push_back(json{{"note", name}, {"details", std::move(details)}});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (auto w : other.witnesses) {
    if (w.contains("claim")) w["claim"] = prefix + w["claim"].get<std::string>();
    if (w.contains("note")) w["note"] = prefix + w["note"].get<std::string>();
    witnesses.push_back(std::move(w));
  }
  enumerated += other.enumerated;
  if (other.status == Status::fail) status = Status::fail;
  else if (other.status == Status::indeterminate && status == Status::pass)
    status = Status::indeterminate;
}

json CheckReport::payload() const {
  return json{{"check", check}, {"params", params}, {"status", to_string(status)}, {"witnesses", witnesses},
              {"enumerated", enumerated}};
}

json CheckReport::to_json() const {
  auto j = payload();
  j["millis"] = millis;
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << check << "  " << to_string(status) << "  enumerated=" << enumerated << "  " << millis << " ms";
  if (!params.empty()) os << "  " << params.dump();
  os << "\n";
  for (const auto& w : witnesses) {
    if (w.contains("note")) {
      os << "    note  " << w["note"].get<std::string>();
    } else {
      const bool open = w.value("open", false);
      os << "    " << (open ? "open" : (w["holds"].get<bool>() ? "ok  " : "FAIL")) << "  " << w["claim"].get<std::string>();
    }
    if (w.contains("details")) os << "  " << w["details"].dump();
    os << "\n";
  }
  return os.str();
}

namespace {

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

std::uint64_t pow3(int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 3;
  return v;
}

GroupParams params_zero(int r, int gamma) { return GroupParams{3, r, 0, gamma, 0}; }

// The 3x3 upper unitriangular matrices over F_3, as an independent model of 3^{1+2}_+.
std::shared_ptr<const FiniteGroupTable> heisenberg_table() {
  auto code = [](int a, int b, int c) { return static_cast<std::uint32_t>(a * 9 + b * 3 + c); };
  std::vector<std::uint32_t> table(27 * 27);
  std::vector<std::string> labels;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) labels.push_back("[" + std::to_string(a) + std::to_string(b) + std::to_string(c) + "]");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
              table[code(a, b, c) * 27 + code(x, y, z)] = code((a + x) % 3, (b + y) % 3, (c + z + a * y) % 3);
  return std::make_shared<FiniteGroupTable>(27, std::move(table), std::move(labels), true);
}

json subgroup_record(const Subgroup& q) { return to_json(q); }

}  // namespace

CheckReport check_presentation(int r_min, int r_max, int associativity_r_max) {
  Stopwatch sw;
  CheckReport rep;
  rep.check = "presentation";
  rep.params = {{"r_min", r_min}, {"r_max", r_max}, {"associativity_r_max", associativity_r_max}};
  std::size_t groups = 0;
  for (int r = r_min; r <= r_max; ++r) {
    for (const auto& p : admissible_params(r)) {
      ++groups;
      const Group g(p);
      const auto pr = verify_presentation(g);
      rep.enumerated += pr.checks.size();
      json bad = json::array();
      for (const auto& c : pr.checks)
        if (!c.pass) bad.push_back({{"relation", c.relation}, {"instance", c.instance}, {"lhs", c.lhs}, {"rhs", c.rhs}});
      rep.claim("relations hold in " + to_string(p), pr.all_pass(),
                bad.empty() ? json{{"instances", pr.checks.size()}} : json{{"violations", bad}});
      if (r > associativity_r_max) continue;
      const auto ops = make_pc_ops(p);
      const std::uint32_t n = ops->size();
      json counterexample;
      for (std::uint32_t x = 0; x < n && counterexample.is_null(); ++x)
        for (std::uint32_t y = 0; y < n && counterexample.is_null(); ++y) {
          const auto xy = ops->mul(x, y);
          for (std::uint32_t z = 0; z < n; ++z)
            if (ops->mul(xy, z) != ops->mul(x, ops->mul(y, z))) {
              counterexample = {{"x", ops->label(x)}, {"y", ops->label(y)}, {"z", ops->label(z)}};
              break;
            }
        }
      rep.enumerated += std::uint64_t{n} * n * n;
      rep.claim("associativity exhaustive in " + to_string(p), counterexample.is_null(),
                counterexample.is_null() ? json{{"triples", std::uint64_t{n} * n * n}} : counterexample);
    }
  }
  rep.note("groups", json{{"count", groups}});
  const Group base(params_zero(4, 2));
  const auto control = verify_presentation(testing::corrupt_conjugation(base));
  rep.claim("negative control: corrupted conjugation is rejected", !control.all_pass());
  rep.millis = sw.millis();
  return rep;
}

CheckReport check_orders_on(const std::vector<Group>& groups) {
  CheckReport rep;
  rep.check = "orders";
  for (const auto& g : groups) {
    const int r = g.rank();
    json bad = json::array();
    for (int i = 1; i < r; ++i) {
      const auto got = g.element_order(g.generator(i));
      const auto want = pow3((r + 1 - i) / 2);
      ++rep.enumerated;
      if (got != want) bad.push_back({{"i", i}, {"order", got}, {"formula", want}});
    }
    rep.claim("o(s_i) formula in " + to_string(g.params()), bad.empty(), bad.empty() ? json() : json{{"mismatches", bad}});
  }
  return rep;
}

CheckReport check_orders(int r_min, int r_max) {
  Stopwatch sw;
  std::vector<Group> groups;
  for (int r = r_min; r <= r_max; ++r)
    for (const auto& p : admissible_params(r))
      if (p.beta == 0) groups.emplace_back(p);
  auto rep = check_orders_on(groups);
  rep.params = {{"r_min", r_min}, {"r_max", r_max}};
  const auto control = check_orders_on({testing::corrupt_power(Group(params_zero(4, 2)), 1)});
  rep.claim("negative control: corrupted power rule is rejected", !control.passed());
  rep.millis = sw.millis();
  return rep;
}

CheckReport check_prop_a9(int r, int gamma) {
  Stopwatch sw;
  CheckReport rep;
  rep.check = "prop-a9";
  const auto params = params_zero(r, gamma);
  rep.params = to_json(params);
  const auto G = make_pc_ops(params);
  const auto& g = G->group();
  const auto whole = whole_group(G);
  rep.enumerated = whole.order();
  const auto literal = literal_lower_central_series(whole);
  std::vector<Subgroup> gammas;
  for (int i = 1; i < r; ++i) {
    std::vector<Element> all, pair{g.generator(i)};
    for (int j = i; j < r; ++j) all.push_back(g.generator(j));
    if (i + 1 < r) pair.push_back(g.generator(i + 1));
    const auto gi = subgroup_generated(G, all);
    const auto by_pair = subgroup_generated(G, pair);
    gammas.push_back(gi);
    const std::string name = "gamma_" + std::to_string(i);
    rep.claim(name + " has order 3^(r-i)", gi.order() == pow3(r - i), {{"order", gi.order()}});
    rep.claim(name + " is generated by s_i and s_{i+1}", by_pair == gi, {{"order_of_pair_span", by_pair.order()}});
    if (i >= 2) {
      const bool match = static_cast<std::size_t>(i - 1) < literal.size() && literal[i - 1] == gi;
      rep.claim(name + " is the i-th lower central term", match);
    }
  }
  rep.claim("gamma_1 is abelian", is_abelian(gammas.front()));
  const auto z = center(whole);
  const auto last = subgroup_generated(G, std::vector<Element>{g.generator(r - 1)});
  rep.claim("Z(B) = gamma_{r-1} = <s_{r-1}> of order 3", z == last && z.order() == 3,
            {{"center", subgroup_record(z)}});
  // gamma_i (i >= 2) are lower central terms; gamma_1 is characteristic as the
  // only abelian maximal subgroup.
  std::vector<Subgroup> abelian_maximal;
  for (const auto& m : subgroups_of_order(whole, pow3(r - 1)))
    if (is_abelian(m)) abelian_maximal.push_back(m);
  json listed = json::array();
  for (const auto& m : abelian_maximal) listed.push_back(m.generator_labels());
  rep.claim("gamma_1 is the only abelian maximal subgroup",
            abelian_maximal.size() == 1 && abelian_maximal.front() == gammas.front(), {{"abelian_maximal", listed}});
  if (r <= 5) {
    const auto aut = automorphism_group(whole);
    json moved = json::array();
    for (const auto& p : aut.group->generators()) {
      const auto f = automorphism_of_perm(whole, p);
      for (std::size_t i = 0; i < gammas.size(); ++i)
        for (auto x : gammas[i].generators())
          if (!gammas[i].contains(f(x))) moved.push_back({{"i", i + 1}, {"automorphism", mnc::to_json(f)}});
    }
    rep.claim("every gamma_i is characteristic", moved.empty(),
              {{"aut_order", aut.order()}, {"aut_generators", aut.group->generators().size()}, {"moved", moved}});
  }
  rep.millis = sw.millis();
  return rep;
}

CheckReport check_lemma_normal(int r, int gamma) {
  Stopwatch sw;
  CheckReport rep;
  rep.check = "lemma-normal";
  const auto params = params_zero(r, gamma);
  rep.params = to_json(params);
  const auto G = make_pc_ops(params);
  const auto& g = G->group();
  const auto whole = whole_group(G);
  const auto z = center(whole);
  const auto normals = normal_subgroups(whole);
  rep.enumerated = normals.size();
  rep.note("normal subgroup count", json{{"count", normals.size()}});
  IsoFingerprint reference;
  std::string reference_name;
  if (r == 4) {
    reference = fingerprint(whole_group(heisenberg_table()));
    reference_name = "3^{1+2}_+ (unitriangular 3x3 over F_3)";
  } else {
    reference = fingerprint(whole_group(make_pc_ops(params_zero(r - 1, 0))));
    reference_name = to_string(params_zero(r - 1, 0));
  }
  json missing = json::array(), with_s = json::array();
  bool all_match = true;
  for (const auto& n : normals) {
    if (n.order() == 1 || n.order() == whole.order()) continue;
    if (!z.is_subgroup_of(n)) missing.push_back(subgroup_record(n));
    if (n.contains(g.s().code())) {
      const auto fp = fingerprint(n);
      const bool match = fp == reference;
      all_match = all_match && match;
      with_s.push_back({{"subgroup", subgroup_record(n)}, {"matches", match}});
    }
  }
  rep.claim("every nontrivial proper normal subgroup contains Z(B)", missing.empty(), {{"counterexamples", missing}});
  rep.claim("normal subgroups containing s match " + reference_name, all_match && !with_s.empty(),
            {{"reference", to_string(reference)}, {"subgroups", with_s}});
  rep.millis = sw.millis();
  return rep;
}

CheckReport check_aut_extraspecial() {
  Stopwatch sw;
  CheckReport rep;
  rep.check = "aut-extraspecial";
  const auto params = params_zero(4, 2);
  rep.params = to_json(params);
  const auto G = make_pc_ops(params);
  const auto t = named_subgroups(G).E.at(0);
  rep.claim("T = E_0 is 3^{1+2}_+", fingerprint(t) == fingerprint(whole_group(heisenberg_table())),
            {{"T", subgroup_record(t)}});
  const auto aut = automorphism_group(t);
  const auto gl = gl2_3();
  const auto rho = frattini_representation(aut, gl);
  std::size_t kernel = 0;
  std::vector<char> hit(gl.mats.size(), 0);
  for (auto i : rho) {
    kernel += i == 0;
    hit[i] = 1;
  }
  const auto image = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
  rep.claim("|Aut(T)| = 432", aut.order() == 432, {{"order", aut.order()}});
  rep.claim("|Inn(T)| = 9", aut.inner.order() == 9, {{"order", aut.inner.order()}});
  rep.claim("kernel of the Frattini map is a 3-group", pow3(static_cast<int>(std::log(double(kernel)) / std::log(3.0) + 0.5)) == kernel,
            {{"kernel", kernel}});
  rep.claim("432 = 9 * 3 * 2 * 8 with rho onto GL_2(3) and kernel Inn(T)",
            aut.order() == 9 * 3 * 2 * 8 && image == 48 && kernel == aut.inner.order(),
            {{"image", image}, {"kernel", kernel}});
  const auto normals = normal_subgroups_of_table(aut.group);
  rep.enumerated = normals.size();
  json offenders = json::array();
  for (const auto& n : normals)
    if (n.order() * 3 == aut.order() && aut.inner.is_subgroup_of(n)) offenders.push_back(n.order());
  rep.claim("no index-3 normal subgroup of Aut(T) contains Inn(T)", offenders.empty(),
            {{"normal_subgroups", normals.size()}, {"offenders", offenders}});
  rep.millis = sw.millis();
  return rep;
}

CheckReport check_gl23_facts() {
  Stopwatch sw;
  CheckReport rep;
  rep.check = "gl23-facts";
  const auto gl = gl2_3();
  rep.claim("|GL_2(3)| = 48", gl.table->size() == 48, {{"order", gl.table->size()}});
  const auto normals = normal_subgroups_of_table(gl.table);
  std::vector<std::uint32_t> census;
  for (const auto& n : normals) census.push_back(n.order());
  std::sort(census.begin(), census.end());
  rep.enumerated = normals.size();
  rep.claim("normal subgroup orders are 1, 2, 8, 24, 48", census == std::vector<std::uint32_t>{1, 2, 8, 24, 48},
            {{"orders", census}});
  rep.claim("no normal subgroup of index 3",
            std::none_of(census.begin(), census.end(), [](auto o) { return o * 3 == 48; }));
  const auto sixteen = subgroups_of_order(gl.table, 16);
  const auto sd = std::count_if(sixteen.begin(), sixteen.end(), [](const auto& s) { return recognize_sd16(s); });
  rep.enumerated += sixteen.size();
  rep.claim("every subgroup of order 16 is SD_16", !sixteen.empty() && sd == static_cast<long>(sixteen.size()),
            {{"subgroups", sixteen.size()}, {"semidihedral", sd}});
  const Mat2F3 alpha(-1, 0, 1, 1), x(-1, 0, 0, 1), stated(1, 0, 1, 1);
  const auto computed = mat_conj(alpha, x);
  rep.claim("alpha X alpha^-1 = [[1,0],[1,1]]", computed == stated,
            {{"alpha", to_string(alpha)}, {"X", to_string(x)}, {"alpha_inverse", to_string(mat_inv(alpha))},
             {"computed", to_string(computed)}, {"stated", to_string(stated)},
             {"alpha X [[1,0],[-1,1]]", to_string(mat_mul(mat_mul(alpha, x), Mat2F3(1, 0, -1, 1)))}});
  rep.millis = sw.millis();
  return rep;
}

std::vector<CheckEntry> all_checks(int r_max) {
  std::vector<CheckEntry> out;
  out.push_back({"presentation", [r_max] { return check_presentation(4, r_max, std::min(r_max, 5)); }});
  out.push_back({"orders", [r_max] { return check_orders(4, r_max); }});
  for (int r = 4; r <= std::min(r_max, 6); ++r)
    for (const auto& p : admissible_params(r))
      if (p.beta == 0 && p.delta == 0) {
        out.push_back({"prop-a9", [p] { return check_prop_a9(p.r, p.gamma); }});
        out.push_back({"lemma-normal", [p] { return check_lemma_normal(p.r, p.gamma); }});
      }
  out.push_back({"aut-extraspecial", [] { return check_aut_extraspecial(); }});
  out.push_back({"gl23-facts", [] { return check_gl23_facts(); }});
  for (const auto& f : table1_presets()) out.push_back({"e0-pipeline", [f] { return check_e0_pipeline(f); }});
  out.push_back({"theorem-b340", [] { return check_theorem_b340(); }});
  if (r_max >= 6)
    for (int gamma : {1, 2}) out.push_back({"theorem-b32k", [gamma] { return check_theorem_b32k(3, gamma); }});
  for (const auto& f : alperin_presets(r_max)) out.push_back({"alperin-table", [f] { return check_alperin_table(f); }});
  out.push_back({"fusion-axioms", [] { return check_fusion_axioms(); }});
  return out;
}

std::vector<std::string> check_ids() {
  return {"presentation", "orders",       "prop-a9",      "lemma-normal", "aut-extraspecial", "gl23-facts",
          "e0-pipeline",  "theorem-b340", "theorem-b32k", "alperin-table", "fusion-axioms"};
}

Status SuiteResult::status() const {
  Status out = Status::pass;
  for (const auto& r : reports) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::indeterminate) out = Status::indeterminate;
  }
  return out;
}

json SuiteResult::payload() const {
  json rs = json::array();
  for (const auto& r : reports) rs.push_back(r.payload());
  return json{{"status", to_string(status())}, {"reports", rs}};
}

json SuiteResult::timing() const {
  json out = json::array();
  for (const auto& r : reports) out.push_back({{"check", r.check}, {"params", r.params}, {"millis", r.millis}});
  return out;
}

SuiteResult run_checks(const std::vector<CheckEntry>& entries, unsigned jobs) {
  SuiteResult result;
  result.reports.resize(entries.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(entries.size());
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        result.reports[i] = entries[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return result;
}

}  // namespace mnc
