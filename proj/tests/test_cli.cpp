#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "hinv/json_io.hpp"
#include "support.hpp"

using namespace hinv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output unless `stdout_only`.
Run run(const std::string& args, bool stdout_only = false) {
  std::string cmd = std::string(HINV_CLI) + " " + args + (stdout_only ? " 2>/dev/null" : " 2>&1");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string lie(const std::string& name) { return testing::fixture("lie/" + name + ".json").string(); }
std::string group(const std::string& name) { return testing::fixture("groups/" + name + ".json").string(); }

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("hinv_cli_" + std::to_string(::getpid()));
  TempDir() {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    fs::create_directories((path / name).parent_path());
    std::ofstream(path / name) << text;
    return path / name;
  }
};

}  // namespace

TEST_CASE("invariants report") {
  Run r = run("invariants " + lie("heisenberg3"), true);
  CHECK(r.status == 0);
  Json j = parse_json_text(r.out);
  CHECK(j.at("schema_version") == kReportSchemaVersion);
  CHECK(j.at("command") == "invariants");
  REQUIRE(j.at("basis").size() == 2);
  CHECK(j.at("basis")[0].at("text") == "a^c");
  CHECK(j.at("basis")[1].at("text") == "b^c");
}

TEST_CASE("central-z and twist-verify") {
  Run r = run("central-z " + lie("heisenberg3") + " --r 0,2 --s 1,2 --format text");
  CHECK(r.status == 0);
  CHECK(r.out.find("[r, s] = c (x) c^2 + c^2 (x) c") != std::string::npos);
  CHECK(r.out.find("z = 1/3 c^3") != std::string::npos);

  CHECK(run("twist-verify " + lie("heisenberg3")).status == 0);
  CHECK(run("twist-verify " + lie("L4_3") + " --trunc 4").status == 0);
  // a^b is not ad-invariant on the Heisenberg algebra
  CHECK(run("twist-verify " + lie("heisenberg3") + " --r 0,1").status == 1);
  CHECK(run("cyb " + lie("heisenberg3") + " --r 0,1").status == 1);
  CHECK(run("cyb " + lie("heisenberg3") + " --r 0,2").status == 0);
}

TEST_CASE("classify and bset") {
  Run r = run("classify " + group("sl2_like"), true);
  CHECK(r.status == 0);
  CHECK(parse_json_text(r.out).at("trivial") == true);

  Run t = run("classify " + group("gm_x_h3") + " --format text");
  CHECK(t.status == 0);
  CHECK(t.out.find("(k^x)^0 x k^3") != std::string::npos);

  Run b = run("bset " + group("gm_x_ga"), true);
  CHECK(b.status == 0);
  CHECK(b.out.find("\"minimal\": true") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  auto jacobi = tmp.write("jacobi.json", R"({"dim": 3, "brackets": {"0,1": {"1": 1}, "1,2": {"0": 1}}})");
  auto schema = tmp.write("schema.json", R"({"dim": 2, "brackets": {"0,1": {"7": 1}}})");
  auto syntax = tmp.write("syntax.json", "{\"dim\": 2,\n  ]");

  CHECK(run("validate " + lie("sl2")).status == 0);
  CHECK(run("validate " + jacobi.string()).status == 1);
  CHECK(run("invariants " + jacobi.string()).status == 1);

  Run s = run("invariants " + schema.string());
  CHECK(s.status == 2);
  CHECK(s.out.find("$.brackets.0,1.7") != std::string::npos);
  Run y = run("validate " + syntax.string());
  CHECK(y.status == 2);
  CHECK(y.out.find("line 2, column 3") != std::string::npos);

  CHECK(run("invariants " + (tmp.path / "missing.json").string()).status == 2);
  CHECK(run("classify " + lie("heisenberg3")).status == 2);
  CHECK(run("central-z " + lie("heisenberg3") + " --r 0,2 --s 1,2 --trunc 2").status == 2);
  CHECK(run("invariants " + lie("heisenberg3") + " --format yaml").status == 2);
  CHECK(run("no-such-command").status == 2);
  // nonzero lattice rank that the center cannot support
  auto rank = tmp.write("rank.json", R"({"lie": {"dim": 1}, "z_r_lattice": {"free_rank": 2, "invariant_factors": []}, "connected": true})");
  CHECK(run("classify " + rank.string()).status == 1);
}

TEST_CASE("corpus batch behaviour") {
  TempDir tmp;
  fs::create_directories(tmp.path / "empty");
  Run e = run("corpus " + (tmp.path / "empty").string(), true);
  CHECK(e.status == 0);
  Json ej = parse_json_text(e.out);
  CHECK(ej.at("files").empty());
  CHECK(ej.at("total") == 0);

  fs::create_directories(tmp.path / "mixed");
  fs::copy_file(lie("heisenberg3"), tmp.path / "mixed" / "heisenberg3.json", fs::copy_options::none);
  tmp.write("mixed/bad.json", R"({"dim": 3, "brackets": {"0,1": {"1": 1}, "1,2": {"0": 1}}})");
  tmp.write("mixed/broken.json", "{");
  Run m = run("corpus " + (tmp.path / "mixed").string(), true);
  CHECK(m.status == 1);
  Json mj = parse_json_text(m.out);
  REQUIRE(mj.at("files").size() == 3);
  CHECK(mj.at("files")[0].at("file") == "bad.json");
  CHECK(mj.at("files")[0].at("passed") == false);
  CHECK(mj.at("files")[1].contains("error"));
  CHECK(mj.at("files")[2].at("file") == "heisenberg3.json");
  CHECK(mj.at("files")[2].at("passed") == true);
  CHECK(mj.at("passed") == 1);
}

TEST_CASE("reports are deterministic and --out writes the same bytes") {
  TempDir tmp;
  const std::string cmd = "corpus " + (tmp.path / "c").string() + " --threads 3";
  fs::create_directories(tmp.path / "c");
  for (const char* n : {"heisenberg3", "L4_3", "abelian3", "L5_6"})
    fs::copy_file(lie(n), tmp.path / "c" / (std::string(n) + ".json"), fs::copy_options::none);
  Run a = run(cmd, true), b = run(cmd, true);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  Run c = run("classify " + group("gm_x_h3"), true);
  CHECK(c.out == run("classify " + group("gm_x_h3"), true).out);
  auto out = tmp.path / "report.json";
  CHECK(run("classify " + group("gm_x_h3") + " --out " + out.string()).status == 0);
  std::ifstream in(out);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == c.out);
}
