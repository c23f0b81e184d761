// mnc: construct the groups B(3,r;beta,gamma,delta), explore their subgroups and
// fusion systems, and run the verification checks.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "mnc/presets.hpp"
#include "mnc/verify.hpp"

using namespace mnc;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  GroupParams params{3, 4, 0, 0, 0};
  std::string format = "text";
  std::string output;
  std::string preset;
  std::string preset_file;
  bool inner = false;
  std::size_t cap = 200000;
  std::size_t limit = 729;
  bool list = false;
  std::string check;
  int r_max = 8;
  int r = 0;
  int gamma = -1;
  int k = 3;
  unsigned jobs = 1;
  bool timing = false;
};

void validate(const GroupParams& p) {
  if (auto why = params_rejection(p)) throw UsageError(to_string(p) + ": " + *why);
}

/// -o wins; relative paths and the default file land in $MNC_OUTPUT_DIR when set.
std::optional<fs::path> output_path(const CliConfig& c, const std::string& stem) {
  const char* env = std::getenv("MNC_OUTPUT_DIR");
  const bool has_dir = env && *env;
  if (!c.output.empty()) {
    fs::path p = c.output;
    if (has_dir && p.is_relative()) p = fs::path(env) / p;
    return p;
  }
  if (has_dir) return fs::path(env) / (stem + (c.format == "json" ? ".json" : ".txt"));
  return std::nullopt;
}

void emit(const CliConfig& c, const std::string& stem, const json& j, const std::string& text) {
  const std::string body = c.format == "json" ? j.dump(2) + "\n" : text;
  const auto path = output_path(c, stem);
  if (!path) {
    std::cout << body;
    return;
  }
  std::error_code ec;
  if (path->has_parent_path()) fs::create_directories(path->parent_path(), ec);
  std::ofstream out(*path, std::ios::binary);
  if (!out || !(out << body)) throw std::runtime_error("cannot write " + path->string());
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

// ---- group ----

int group_info(const CliConfig& c) {
  validate(c.params);
  const auto G = make_pc_ops(c.params);
  const auto& g = G->group();
  const auto whole = whole_group(G);
  json gens = json::array();
  std::ostringstream os;
  os << to_string(c.params) << "  order " << g.order() << "\n\ngenerator orders\n";
  for (int i = 0; i < g.rank(); ++i) {
    const auto x = g.generator(i);
    const std::string name = i == 0 ? "s" : "s" + std::to_string(i);
    gens.push_back({{"name", name}, {"normal_form", g.format(x)}, {"order", g.element_order(x)}});
    os << "  " << pad(name, 6) << pad(std::to_string(g.element_order(x)), 6) << g.format(x) << "\n";
  }
  json series = json::array();
  os << "\nseries gamma_i = <s_i, s_{i+1}>\n";
  const auto lcs = lower_central_series(G);
  for (std::size_t i = 0; i < lcs.size(); ++i) {
    series.push_back({{"i", i + 1}, {"order", lcs[i].order()}, {"generators", lcs[i].generator_labels()}});
    os << "  gamma_" << pad(std::to_string(i + 1), 3) << pad(std::to_string(lcs[i].order()), 8);
    for (const auto& w : lcs[i].generator_labels()) os << w << " ";
    os << "\n";
  }
  json literal = json::array();
  for (const auto& q : literal_lower_central_series(whole)) literal.push_back(q.order());
  const auto z = center(whole);
  os << "\ncenter  order " << z.order() << "  <";
  for (const auto& w : z.generator_labels()) os << w;
  os << ">\n";
  json j{{"params", to_json(c.params)}, {"order", g.order()},         {"generators", gens},
         {"series", series},            {"literal_lower_central_series", literal}, {"center", to_json(z)}};
  emit(c, "group-info", j, os.str());
  return 0;
}

int group_elements(const CliConfig& c) {
  validate(c.params);
  const Group g(c.params);
  json rows = json::array();
  std::ostringstream os;
  const auto all = g.elements();
  const std::size_t n = std::min<std::size_t>(all.size(), c.limit);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({{"word", g.format(all[i])}, {"order", g.element_order(all[i])}});
    os << pad(g.format(all[i]), 24) << g.element_order(all[i]) << "\n";
  }
  if (n < all.size()) os << "... " << all.size() - n << " more (raise --limit)\n";
  emit(c, "group-elements", json{{"params", to_json(c.params)}, {"total", all.size()}, {"elements", rows}}, os.str());
  return 0;
}

int group_subgroups(const CliConfig& c) {
  validate(c.params);
  const auto G = make_pc_ops(c.params);
  const auto whole = whole_group(G);
  const auto subs = all_subgroups(whole, c.cap);
  const auto normals = normal_subgroups(whole);
  std::map<std::uint32_t, std::vector<Subgroup>> by_order;
  for (const auto& q : subs) by_order[q.order()].push_back(q);
  std::map<std::uint32_t, std::size_t> normal_count;
  for (const auto& n : normals) ++normal_count[n.order()];
  json census = json::array();
  std::ostringstream os;
  os << to_string(c.params) << "  " << subs.size() << " subgroups, " << normals.size() << " normal\n\n";
  os << pad("order", 8) << pad("count", 8) << pad("classes", 9) << "normal\n";
  for (const auto& [order, qs] : by_order) {
    const auto classes = conjugacy_classes_of_subgroups(qs, whole).size();
    json row{{"order", order}, {"count", qs.size()}, {"classes", classes}, {"normal", normal_count[order]}};
    if (c.list) {
      json list = json::array();
      for (const auto& q : qs) list.push_back(q.generator_labels());
      row["subgroups"] = list;
    }
    census.push_back(row);
    os << pad(std::to_string(order), 8) << pad(std::to_string(qs.size()), 8) << pad(std::to_string(classes), 9)
       << normal_count[order] << "\n";
    if (c.list)
      for (const auto& q : qs) {
        os << "    <";
        const auto labels = q.generator_labels();
        for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << labels[i];
        os << ">\n";
      }
  }
  emit(c, "group-subgroups", json{{"params", to_json(c.params)}, {"total", subs.size()}, {"census", census}}, os.str());
  return 0;
}

// ---- fusion ----

struct Built {
  std::shared_ptr<const PcGroupOps> G;
  FusionSystem F;
  json source;
};

Built build(const CliConfig& c) {
  const int sources = !c.preset.empty() + !c.preset_file.empty() + c.inner;
  if (sources != 1) throw UsageError("give exactly one of --preset, --preset-file, --inner");
  if (c.inner) {
    validate(c.params);
    auto G = make_pc_ops(c.params);
    return {G, inner_fusion(whole_group(G)), {{"inner", to_json(c.params)}}};
  }
  Preset p;
  if (!c.preset.empty()) {
    auto found = find_preset(c.preset);
    if (!found) throw UsageError("unknown preset '" + c.preset + "' in " + preset_dir().string());
    p = *found;
  } else {
    if (!fs::exists(c.preset_file)) throw UsageError("no such file: " + c.preset_file);
    p = load_preset(c.preset_file);
  }
  auto G = make_pc_ops(p.base);
  return {G, build_preset(p, G), {{"preset", p.name}}};
}

std::string subgroup_text(const Subgroup& q) {
  std::string out = "<";
  const auto labels = q.generator_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i];
  return out + ">";
}

int fusion_build(const CliConfig& c) {
  const auto b = build(c);
  auto j = to_json(b.F, b.G->group().params());
  j["source"] = b.source;
  std::ostringstream os;
  os << b.source.dump() << "\n" << b.F.summary() << "\n";
  emit(c, "fusion-build", j, os.str());
  return 0;
}

int fusion_classes(const CliConfig& c) {
  const auto b = build(c);
  const auto& F = b.F;
  json rows = json::array();
  std::ostringstream os;
  os << pad("order", 7) << pad("size", 6) << pad("|Aut_F|", 9) << pad("|Out_F|", 9) << pad("centric", 9)
     << pad("radical", 9) << "representative\n";
  for (auto cls : F.class_ids()) {
    const auto rep = F.representative(cls);
    const auto& q = F.subgroup(rep);
    const auto out = out_f(F, rep).table->size();
    const bool centric = is_centric(F, rep), radical = is_radical(F, rep);
    rows.push_back({{"representative", q.generator_labels()},
                    {"order", q.order()},
                    {"size", F.class_members(cls).size()},
                    {"aut", F.automizer_order(rep)},
                    {"out", out},
                    {"centric", centric},
                    {"radical", radical}});
    os << pad(std::to_string(q.order()), 7) << pad(std::to_string(F.class_members(cls).size()), 6)
       << pad(std::to_string(F.automizer_order(rep)), 9) << pad(std::to_string(out), 9)
       << pad(centric ? "yes" : "no", 9) << pad(radical ? "yes" : "no", 9) << subgroup_text(q) << "\n";
  }
  emit(c, "fusion-classes", json{{"source", b.source}, {"classes", rows}}, os.str());
  return 0;
}

int fusion_saturation(const CliConfig& c) {
  const auto b = build(c);
  const auto& F = b.F;
  const auto sat = is_saturated(F);
  json classes = json::array();
  std::ostringstream os;
  os << b.source.dump() << "  " << (sat.saturated ? "saturated" : "NOT saturated") << "\n";
  for (const auto& v : sat.classes) {
    json row{{"representative", F.subgroup(v.representative).generator_labels()}, {"witnessed", v.witness.has_value()}};
    if (v.witness) row["witness"] = F.subgroup(*v.witness).generator_labels();
    classes.push_back(row);
    if (!v.witness) os << "  no fully automized receptive member: " << subgroup_text(F.subgroup(v.representative)) << "\n";
  }
  json alperin = json::array(), closed = json::array();
  os << "Alperin subgroups\n";
  for (auto id : alperin_subgroups(F)) {
    const auto& q = F.subgroup(id);
    const auto out = out_f(F, id).table->size();
    alperin.push_back({{"subgroup", q.generator_labels()}, {"order", q.order()}, {"out", out}});
    os << "  " << pad(std::to_string(q.order()), 6) << "|Out_F| " << pad(std::to_string(out), 6) << subgroup_text(q) << "\n";
  }
  os << "strongly closed subgroups\n";
  for (auto id : strongly_closed_subgroups(F)) {
    closed.push_back(F.subgroup(id).generator_labels());
    os << "  " << subgroup_text(F.subgroup(id)) << "\n";
  }
  emit(c, "fusion-saturation",
       json{{"source", b.source}, {"saturated", sat.saturated}, {"classes", classes}, {"alperin", alperin},
            {"strongly_closed", closed}},
       os.str());
  return sat.saturated ? 0 : 1;
}

int fusion_list(const CliConfig& c) {
  json rows = json::array();
  std::ostringstream os;
  for (const auto& f : preset_files()) {
    const auto p = load_preset(f);
    rows.push_back({{"name", p.name}, {"file", f.filename().string()}, {"base", to_json(p.base)}, {"table", p.table}});
    os << pad(p.name, 24) << pad(to_string(p.base), 22) << f.filename().string() << "\n";
  }
  emit(c, "fusion-list", json{{"directory", preset_dir().string()}, {"presets", rows}}, os.str());
  return 0;
}

// ---- verify ----

std::vector<CheckEntry> select(const CliConfig& c) {
  if (c.r_max < 4) throw UsageError("--r-max must be at least 4");
  if (c.check == "all") return all_checks(c.r_max);
  const auto ids = check_ids();
  if (std::find(ids.begin(), ids.end(), c.check) == ids.end()) {
    std::string known;
    for (const auto& id : ids) known += " " + id;
    throw UsageError("unknown check '" + c.check + "'; known: all" + known);
  }
  const bool rg = c.r > 0 || c.gamma >= 0;
  if (rg && (c.r <= 0 || c.gamma < 0)) throw UsageError("--r and --gamma go together");
  if (c.check == "prop-a9" && rg) return {{c.check, [c] { return check_prop_a9(c.r, c.gamma); }}};
  if (c.check == "lemma-normal" && rg) return {{c.check, [c] { return check_lemma_normal(c.r, c.gamma); }}};
  if (c.check == "theorem-b32k" && c.gamma >= 0)
    return {{c.check, [c] { return check_theorem_b32k(c.k, c.gamma); }}};
  if (!c.preset.empty()) {
    if (c.check == "alperin-table") return {{c.check, [c] { return check_alperin_table(c.preset); }}};
    if (c.check == "e0-pipeline") return {{c.check, [c] { return check_e0_pipeline(c.preset); }}};
    throw UsageError("--preset does not apply to " + c.check);
  }
  std::vector<CheckEntry> out;
  for (auto& e : all_checks(c.r_max))
    if (e.id == c.check) out.push_back(std::move(e));
  if (out.empty()) throw UsageError(c.check + " has no instances for --r-max " + std::to_string(c.r_max));
  return out;
}

int verify(const CliConfig& c) {
  const auto entries = select(c);
  const auto suite = run_checks(entries, c.jobs);
  json j;
  if (c.check != "all" && suite.reports.size() == 1) {
    j = c.timing ? suite.reports.front().to_json() : suite.reports.front().payload();
  } else {
    j = suite.payload();
    if (c.timing) j["timing"] = suite.timing();
  }
  std::ostringstream os;
  for (const auto& r : suite.reports) os << r.to_text() << "\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : suite.reports) ++counts[static_cast<int>(r.status)];
  os << suite.reports.size() << " reports: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
     << " indeterminate\n";
  emit(c, "verify-" + c.check, j, os.str());
  return suite.status() == Status::fail ? 1 : 0;
}

void group_options(CLI::App* app, CliConfig& c) {
  app->add_option("--r", c.params.r, "rank r (|B| = 3^r)")->check(CLI::Range(4, 12));
  app->add_option("--beta", c.params.beta, "beta in {0,1,2}")->check(CLI::Range(0, 2));
  app->add_option("--gamma", c.params.gamma, "gamma in {0,1,2}")->check(CLI::Range(0, 2));
  app->add_option("--delta", c.params.delta, "delta in {0,1,2}")->check(CLI::Range(0, 2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups B(3,r;beta,gamma,delta), their fusion systems, and verification checks"};
  app.require_subcommand(1);
  CliConfig c;
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", c.output, "output file (relative paths go under $MNC_OUTPUT_DIR when set)");

  int (*action)(const CliConfig&) = nullptr;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(const CliConfig&)) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto* group = app.add_subcommand("group", "construct B(3,r;beta,gamma,delta)");
  group->require_subcommand(1)->fallthrough();
  group_options(group, c);
  sub(group, "info", "order, generator orders, series and center", group_info);
  sub(group, "elements", "list elements in normal form with their orders", group_elements)
      ->add_option("--limit", c.limit, "maximum number of elements listed")
      ->check(CLI::PositiveNumber);
  auto* subgroups = sub(group, "subgroups", "subgroup census by order", group_subgroups);
  subgroups->add_option("--cap", c.cap, "enumeration cap")->check(CLI::PositiveNumber);
  subgroups->add_flag("--list", c.list, "list every subgroup");

  auto* fusion = app.add_subcommand("fusion", "fusion systems over B");
  fusion->require_subcommand(1)->fallthrough();
  fusion->add_option("--preset", c.preset, "preset name or file stem");
  fusion->add_option("--preset-file", c.preset_file, "preset JSON file");
  fusion->add_flag("--inner", c.inner, "the inner system F_B(B) for the group options");
  group_options(fusion, c);
  sub(fusion, "build", "the system as JSON: classes and automizer generators", fusion_build);
  sub(fusion, "classes", "F-isomorphism classes of subgroups", fusion_classes);
  sub(fusion, "saturation", "saturation, Alperin and strongly closed subgroups", fusion_saturation);
  sub(fusion, "list", "available presets", fusion_list);

  auto* ver = app.add_subcommand("verify", "run checks; exit 1 if any fails");
  ver->fallthrough();
  ver->add_option("check", c.check, "check id or 'all'")->required();
  ver->add_option("--r-max", c.r_max, "largest rank covered")->check(CLI::Range(4, 8));
  ver->add_option("--r", c.r, "rank for prop-a9 / lemma-normal")->check(CLI::Range(4, 8));
  ver->add_option("--gamma", c.gamma, "gamma for prop-a9 / lemma-normal / theorem-b32k")->check(CLI::Range(0, 2));
  ver->add_option("--k", c.k, "theorem-b32k: r = 2k");
  ver->add_option("--preset", c.preset, "preset for alperin-table / e0-pipeline");
  ver->add_option("-j,--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  ver->add_flag("--timing", c.timing, "include timings in JSON output");
  ver->callback([&action] { action = verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action(c) : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
