#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json report() const { return json::parse(out); }
};

/// Runs the CLI with `args`, capturing stdout and the exit code.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + NOVIKOV_CLI + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return std::string(NOVIKOV_FIXTURE_DIR) + "/" + name; }

struct TempDir {
  TempDir() {
    path = fs::temp_directory_path() / ("novikov-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const std::string p = (path / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }
  fs::path path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("verify") {
  Run r = run("verify --lie " + fx("ex35.laf") + " --product " + fx("ex35.lafp") + " --novikov");
  CHECK(r.code == 0);
  CHECK(r.report()["holds"] == true);
  CHECK(r.report()["checks"]["compatible"]["holds"] == true);

  r = run("verify --lie " + fx("In-3.laf") + " --product " + fx("In-3.lafp") + " --novikov");
  CHECK(r.code == 1);
  CHECK(r.report()["checks"]["novikov"]["holds"] == false);
  r = run("verify --product " + fx("In-3.lafp") + " --lsa");
  CHECK(r.code == 0);
  r = run("verify --product " + fx("In-3.lafp") + " --complete");
  CHECK(r.code == 1);
  CHECK(r.report()["checks"]["complete"]["verdict"] == "Incomplete");
  r = run("verify --product " + fx("half-bracket-n3.lafp") + " --complete");
  CHECK(r.code == 0);

  CHECK(run("verify --product " + fx("ex35.lafp")).code == 2);
  CHECK(run("verify --product " + fx("ex35.lafp") + " --lsa --novikov").code == 2);
  CHECK(run("verify --lie " + fx("n3.laf") + " --product " + fx("ex35.lafp") + " --lsa").code == 2);
  CHECK(run("verify --product /nonexistent.lafp --lsa").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("series and fixtures") {
  Run r = run("series --lie " + fx("free-n2-c4.laf"));
  CHECK(r.code == 0);
  CHECK(r.report()["lower_central_series"] == json::array({8, 6, 5, 3, 0}));
  CHECK(r.report()["profile"]["nilpotency_class"] == 4);

  r = run("fixture --name ex35 --kind lie");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(fx("ex35.laf")));
  CHECK(run("fixture --name no-such --kind lie").code == 2);
  CHECK(run("fixture --name sl2 --kind extension").code == 1);
}

TEST_CASE("r-matrices") {
  TempDir tmp;
  const std::string sl2 = fx("sl2.laf");
  const std::string e12 = tmp.file("e12.lafm", "LAF-M 1\nrows 3\ncols 3\nentry 1 2 1\nend\n");
  const std::string id = tmp.file("id.lafm", "LAF-M 1\nrows 3\ncols 3\nentry 1 1 1\nentry 2 2 1\nentry 3 3 1\nend\n");
  Run r = run("rmatrix --lie " + sl2 + " --t " + e12 + " --check");
  CHECK(r.code == 0);
  CHECK(r.report()["cybe"]["holds"] == true);
  const std::string out = tmp.file("p.lafp");
  r = run("rmatrix --lie " + sl2 + " --t " + e12 + " --induce -o " + out);
  CHECK(r.code == 0);
  CHECK(r.report()["deformed_profile"]["nilpotency_class"] == 2);
  CHECK(run("verify --product " + out + " --novikov").code == 0);
  r = run("rmatrix --lie " + sl2 + " --t " + id + " --check");
  CHECK(r.code == 1);
  CHECK(r.report()["holds"] == false);
}

TEST_CASE("lifts and reduction") {
  TempDir tmp;
  const std::string out = tmp.file("l.lafl");
  Run r = run("lift --ext " + fx("ex35.lafe") + " --method twogen -o " + out);
  CHECK(r.code == 0);
  CHECK(r.report()["checked"] == "novikov");
  CHECK(slurp(out).rfind("LAF-L 1\n", 0) == 0);
  CHECK(run("lift --ext " + fx("ex35.lafe") + " --method scheuneman").code == 0);
  CHECK(run("lift --ext " + fx("filiform-5.lafe") + " --method jordan").code == 0);
  CHECK(run("lift --ext " + fx("r2.lafe") + " --method iso --element 1").code == 0);
  CHECK(run("lift --ext " + fx("r2.lafe") + " --method iso --element 2").code == 2);
  /// Construction hypotheses that fail exit 1 with a report.
  r = run("lift --ext " + fx("free-n2-c4.lafe") + " --method scheuneman");
  CHECK(r.code == 1);
  CHECK(r.report()["holds"] == false);

  const std::string mixed = tmp.file("m.lafe", "LAF-E 1\ndim-a 3\ndim-b 1\nphi 1 1 1 1\nphi 1 2 3 1\nend\n");
  const std::string nil = tmp.file("n.lafe");
  r = run("reduce --ext " + mixed + " --nilpotent-out " + nil + " -o " + tmp.file("r.lafl"));
  CHECK(r.code == 0);
  CHECK(r.report()["dim_n"] == 2);
  CHECK(r.report()["dim_0"] == 1);
  CHECK(slurp(nil).rfind("LAF-E 1\n", 0) == 0);
}

TEST_CASE("decide and certificates") {
  TempDir tmp;
  const std::string cert = tmp.file("c.lafc");
  Run r = run("decide --lie " + fx("free-n2-c4.laf") + " -o " + cert);
  CHECK(r.code == 1);
  CHECK(r.report()["verdict"] == "NotExists");
  CHECK(r.report()["verified"] == true);
  CHECK(slurp(cert) == slurp(fx("free-n2-c4.lafc")));
  CHECK(run("check-cert --lie " + fx("free-n2-c4.laf") + " --cert " + cert).code == 0);
  CHECK(run("check-cert --lie " + fx("free-n3-c3.laf") + " --cert " + cert).code == 1);

  std::string text = slurp(cert);
  const std::size_t at = text.find("constant -1/8");
  REQUIRE(at != std::string::npos);
  text.replace(at, 13, "constant -1/9");
  const std::string bad = tmp.file("bad.lafc", text);
  r = run("check-cert --lie " + fx("free-n2-c4.laf") + " --cert " + bad);
  CHECK(r.code == 1);
  CHECK(r.report()["valid"] == false);

  r = run("decide --lie " + fx("free-n2-c4.laf") + " --effort 10");
  CHECK(r.code == 1);
  CHECK(r.report()["verdict"] == "Undetermined");
  r = run("decide --lie " + fx("free-n2-c4.laf"), "NOVIKOV_EFFORT=10");
  CHECK(r.report()["verdict"] == "Undetermined");
  CHECK(run("decide --lie " + fx("free-n2-c4.laf"), "NOVIKOV_EFFORT=ten").code == 2);

  r = run("decide --lie " + fx("ex35.laf"));
  CHECK(r.code == 0);
  CHECK(r.report()["verdict"] == "Exists");
  CHECK(run("check-cert --lie " + fx("sl2.laf") + " --cert " + fx("sl2.lafc")).code == 0);
}

TEST_CASE("quotients") {
  TempDir tmp;
  std::string cols = "LAF-M 1\nrows 14\ncols 8\n";
  for (int i = 0; i < 8; ++i) cols += "entry " + std::to_string(7 + i) + " " + std::to_string(1 + i) + " 1\n";
  cols += "end\n";
  const std::string ideal = tmp.file("i.lafm", cols);
  Run r = run("quotient --lie " + fx("free-n3-c3.laf") + " --ideal " + ideal + " -o " + tmp.file("q.laf"));
  CHECK(r.code == 0);
  CHECK(r.report()["profile"]["dim"] == 6);
  CHECK(r.report()["complement"] == json::array({1, 2, 3, 4, 5, 6}));
  r = run("quotient --product " + fx("free-n3-c3.lafp") + " --ideal " + ideal + " -o " + tmp.file("q.lafp"));
  CHECK(r.code == 0);
  CHECK(r.report()["novikov"]["holds"] == true);

  const std::string x1 = tmp.file("x1.lafm", "LAF-M 1\nrows 3\ncols 1\nentry 1 1 1\nend\n");
  r = run("quotient --lie " + fx("n3.laf") + " --ideal " + x1);
  CHECK(r.code == 1);
  CHECK(r.report()["holds"] == false);

  const std::string bad = tmp.file("bad.laf", "LAF 1\ndim 2\nbracket 1 2 2 2/4\nend\n");
  CHECK(run("series --lie " + bad).code == 2);
}
