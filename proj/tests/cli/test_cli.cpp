#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const auto tmp = fs::temp_directory_path() / ("mnc-cli-" + std::to_string(::getpid()) + ".out");
  const std::string cmd = env + " '" + std::string(MNC_CLI) + "' " + args + " > '" + tmp.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(tmp);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("mnc-cli-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("group info") {
  const auto r = run("group --r 4 --gamma 2 info");
  CHECK(r.code == 0);
  CHECK(r.out.find("order 81") != std::string::npos);
  const auto j = nlohmann::json::parse(run("group --r 4 --gamma 2 info --format json").out);
  CHECK(j.at("order") == 81);
  CHECK(j.at("generators").at(1).at("order") == 9);
  CHECK(j.at("series").size() == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("group --r 5 --gamma 2 info").code == 2);
  CHECK(run("group --r 4 --format yaml info").code == 2);
  CHECK(run("verify no-such-check").code == 2);
  CHECK(run("fusion --preset no-such-preset classes").code == 2);
  CHECK(run("fusion classes").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify writes a report file matching the schema") {
  const auto d = scratch_dir("verify");
  const auto file = d / "out.json";
  const auto r = run("verify theorem-b340 --format json --timing -o '" + file.string() + "'");
  CHECK(r.code == 0);
  std::ifstream in(file);
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  for (const auto* key : {"check", "params", "status", "witnesses", "enumerated", "millis"}) CHECK(j.contains(key));
  CHECK(j.at("check") == "theorem-b340");
  CHECK(j.at("status") == "pass");
  fs::remove_all(d);
}

TEST_CASE("verify output is byte-identical across runs; failing checks exit 1") {
  const auto a = run("verify gl23-facts --format json");
  const auto b = run("verify gl23-facts --format json");
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).at("status") == "fail");
}

TEST_CASE("MNC_OUTPUT_DIR is the default output location") {
  const auto d = scratch_dir("env");
  const auto r = run("fusion --preset b4g2-omega saturation --format json", "MNC_OUTPUT_DIR='" + d.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto j = nlohmann::json::parse(std::ifstream(d / "fusion-saturation.json"));
  CHECK(j.at("saturated") == true);
  CHECK(run("group --r 4 info -o rel/info.txt", "MNC_OUTPUT_DIR='" + d.string() + "'").code == 0);
  CHECK(fs::exists(d / "rel" / "info.txt"));
  fs::remove_all(d);
}

TEST_CASE("fusion subcommands") {
  const auto classes = run("fusion --preset b4g2-omega classes --format json");
  CHECK(classes.code == 0);
  CHECK(nlohmann::json::parse(classes.out).at("classes").size() == 13);
  CHECK(run("fusion --inner --r 4 --gamma 2 saturation").code == 0);
  const auto built = nlohmann::json::parse(run("fusion --preset b4g2-omega build --format json").out);
  CHECK(built.contains("automizers"));
  CHECK(run("fusion list").out.find("b6g2-omega") != std::string::npos);
}
