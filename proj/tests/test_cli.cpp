#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Drives the built binary end to end: exit codes, output formats, and the
// byte-determinism of region CSVs.

#ifndef SCC_CLI_BIN
#error "SCC_CLI_BIN must point at the built CLI"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("scc-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = env + (env.empty() ? "" : " ") +
                          std::string(SCC_CLI_BIN) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("check: sharp T-series is a member with zero margin") {
  const auto r = run_cli(
      "check --convention T --coeffs 0.3333333333 --alpha 0.5 --beta 0 "
      "--gamma 0 --json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("verdict") == "member");
  CHECK(j.at("criterion").at("satisfied") == true);
  CHECK(std::abs(j.at("criterion").at("value").get<double>() - 0.5) < 1e-9);
}

TEST_CASE("check: bare series always passes") {
  const auto r = run_cli("check --convention A --coeffs \"\" --alpha 0.9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict         : member") != std::string::npos);

  const auto omitted = run_cli("check --convention A --alpha 0.9");
  CHECK(omitted.exit_code == 0);
}

TEST_CASE("check --terms lists the per-term breakdown") {
  const auto r = run_cli(
      "check --convention T --coeffs 0.1,0.05 --alpha 0.2 --terms --json");
  CHECK(r.exit_code == 0);
  const json terms = json::parse(r.out).at("criterion").at("per_term");
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].at("n") == 2);
  CHECK(terms[1].at("n") == 3);
  CHECK(terms[0].at("weight").get<double>() == doctest::Approx(1.8));
}

TEST_CASE("check: failing T-series exits 1 and is labeled not_member") {
  const auto r = run_cli(
      "check --convention T --coeffs 0.6 --alpha 0 --beta 0 --gamma 1 --json");
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.out);
  CHECK(j.at("verdict") == "not_member");
  CHECK(j.at("criterion").at("value").get<double>() == 2.4);
}

TEST_CASE("check: failing A-series is inconclusive, not rejected") {
  const auto r = run_cli(
      "check --convention A --coeffs 0.9 --alpha 0.5 --gamma 1 --json");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out).at("verdict") == "inconclusive");
}

TEST_CASE("check: usage errors exit 2") {
  CHECK(run_cli("check --convention T --coeffs 0.3,oops --alpha 0.5")
            .exit_code == 2);
  CHECK(run_cli("check --convention T --coeffs -0.5 --alpha 0.5").exit_code ==
        2);
  CHECK(run_cli("check --convention X --coeffs 0.1").exit_code == 2);
  CHECK(run_cli("check --convention T --coeffs 0.1 --alpha 1.2").exit_code ==
        2);
  CHECK(run_cli("check --no-such-flag").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("check --verify attaches a verification block") {
  const auto r = run_cli(
      "check --convention T --coeffs 0.2 --alpha 0.3 --verify --json "
      "--radii 12 --angles 32");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.contains("verification"));
  CHECK(j.at("verification").at("passed_numeric") == true);
  CHECK(j.at("verification").at("min_re_phi").get<double>() > 0.3);
}

TEST_CASE("check --file reads coefficients from disk") {
  const fs::path file = scratch_dir() / "coeffs.txt";
  std::ofstream(file) << "0.1, 0.05\n0.01\n";
  const auto r = run_cli("check --convention T --file " + file.string() +
                         " --alpha 0.2 --json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("truncation") == 4);
}

TEST_CASE("extremal: sharp coefficients") {
  const auto a = run_cli(
      "extremal --alpha 0 --beta 0 --gamma 1 --n 2 --convention A --json");
  CHECK(a.exit_code == 0);
  CHECK(json::parse(a.out).at("coefficient").get<double>() == 0.25);

  const auto t = run_cli(
      "extremal --alpha 0.5 --beta 0 --gamma 0 --n 2 --convention T --json");
  const double c = json::parse(t.out).at("coefficient").get<double>();
  CHECK(std::abs(c - 1.0 / 3.0) < 1e-15);

  const auto t5 = run_cli(
      "extremal --alpha 0 --beta 0 --gamma 0 --n 5 --convention T --json");
  CHECK(json::parse(t5.out).at("coefficient").get<double>() == 0.2);
}

TEST_CASE("wright: coefficient table rows") {
  const auto r = run_cli("wright --lambda 1 --mu 1 --N 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n,coefficient\n"
        "2,0.36787944117144233\n"
        "3,0.09196986029286049\n");

  const auto integral = run_cli("wright --lambda 1 --mu 1 --N 3 --integral");
  CHECK(integral.out ==
        "n,coefficient\n"
        "2,0.18393972058572117\n"
        "3,0.03065662009762016\n");

  const auto empty = run_cli("wright --lambda 1 --mu 2 --N 1");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "n,coefficient\n");

  CHECK(run_cli("wright --lambda 1 --mu 0").exit_code == 2);
  CHECK(run_cli("wright --lambda -1 --mu 1").exit_code == 2);
}

TEST_CASE("region: single-point runs match the closed form") {
  const auto yes = run_cli(
      "region --alpha 0 --beta 0 --gamma 0 --lambda 1 --mu 2 "
      "--condition wright");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("0,0,0,1,2,1,1,1\n") != std::string::npos);
  CHECK(yes.err.find("implication violations: 0") != std::string::npos);

  const auto no = run_cli(
      "region --alpha 0 --beta 0 --gamma 1 --lambda 1 --mu 2 "
      "--condition wright");
  CHECK(no.out.find("0,0,1,1,2,0,0,1\n") != std::string::npos);
}

TEST_CASE("region: guard and axis validation exit 2") {
  CHECK(run_cli("region --alpha 0:0.9:500 --beta 0:0.9:500 --gamma 0:1:500")
            .exit_code == 2);
  CHECK(run_cli("region --mu 0.1:0.2:5").exit_code == 2);
  CHECK(run_cli("region --alpha 0:0.9").exit_code == 2);
  CHECK(run_cli("region --condition bogus").exit_code == 2);
}

TEST_CASE("region: CSV is byte-identical across runs and worker counts") {
  const fs::path f1 = scratch_dir() / "scan1.csv";
  const fs::path f2 = scratch_dir() / "scan2.csv";
  const fs::path f3 = scratch_dir() / "scan3.csv";
  const std::string base =
      "region --alpha 0:0.9:10 --mu 0.5:20:10 --beta 0 --gamma 0 --lambda 1 "
      "--condition integral ";
  CHECK(run_cli(base + "--threads 1 --out " + f1.string()).exit_code == 0);
  CHECK(run_cli(base + "--threads 4 --out " + f2.string()).exit_code == 0);
  CHECK(run_cli(base + "--threads 4 --out " + f3.string()).exit_code == 0);
  const std::string csv1 = slurp(f1);
  CHECK(!csv1.empty());
  CHECK(csv1 == slurp(f2));
  CHECK(csv1 == slurp(f3));

  // 100 rows plus header
  std::size_t lines = 0;
  for (char c : csv1) {
    lines += c == '\n' ? 1 : 0;
  }
  CHECK(lines == 101);
}

TEST_CASE("verify: bare series reports min 1.0 and round-trips") {
  const auto r = run_cli("verify --convention A --alpha 0.25 --radii 8");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("min_re_phi").get<double>() == 1.0);
  CHECK(j.at("passed_criterion") == true);
  CHECK(j.at("passed_numeric") == true);
  // emit/parse stability
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("verify: sharp T-series passes numerically") {
  const auto r = run_cli(
      "verify --convention T --coeffs 0.3333333333 --alpha 0.5 "
      "--radii 16 --angles 64");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("passed_numeric") == true);
  CHECK(j.at("min_re_phi").get<double>() > 0.5);
}

TEST_CASE("verify: criterion failure exits 1") {
  const auto r = run_cli(
      "verify --convention T --coeffs 0.6 --alpha 0 --beta 0 --gamma 1 "
      "--radii 8");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out).at("passed_criterion") == false);
}

TEST_CASE("verify: singularity reports the offending point as JSON") {
  // z - 2z^2 has a root at 0.5; rmax pins a grid point exactly there
  const auto r = run_cli(
      "verify --convention T --coeffs 2 --alpha 0 --beta 0 --gamma 0 "
      "--rmax 0.5 --radii 8 --angles 8");
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.out);
  CHECK(j.at("error") == "singularity");
  CHECK(j.at("z").at("re").get<double>() == 0.5);
  CHECK(j.at("z").at("im").get<double>() == 0.0);
}

TEST_CASE("environment variables steer the default grid") {
  // with SCC_RMAX=0.5 the same series trips the singular grid point
  const auto r = run_cli(
      "verify --convention T --coeffs 2 --alpha 0 --beta 0 --gamma 0 "
      "--radii 8 --angles 8",
      "SCC_RMAX=0.5");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out).at("error") == "singularity");

  // malformed env values fall back to the defaults with a warning
  const auto ok = run_cli("verify --convention A --alpha 0 --radii 8",
                          "SCC_RMAX=banana");
  CHECK(ok.exit_code == 0);
  CHECK(ok.err.find("warning") != std::string::npos);
}
