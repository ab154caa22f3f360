// End-to-end checks of the grw binary: output contents, exit codes, and the
// byte-identical-JSON invariant for a fixed configuration and seed.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GRW_CLI_PATH) + " " + args + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) {
    res.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("structure renders theorem shapes with orders") {
    const RunResult q2 = run_cli("structure --family q12 --p 2 --k 1 --n 1");
    CHECK(q2.exit_code == 0);
    CHECK(contains(q2.out, "(C_2^5 x C_4) |x (C_1 x GL(2, F_2))"));
    CHECK(contains(q2.out, "order 768"));

    const RunResult q3 = run_cli("structure --family q12 --p 3 --k 1 --n 1");
    CHECK(q3.exit_code == 0);
    CHECK(contains(q3.out, "(C_3^6 |x C_3^2) |x (C_2^2 x C_8)"));
    CHECK(contains(q3.out, "order 209952"));

    const RunResult d7 = run_cli("structure --family d12 --p 7 --k 1 --n 1");
    CHECK(d7.exit_code == 0);
    CHECK(contains(d7.out, "C_6^4 x GL(2, F_7)^2"));
    CHECK(contains(d7.out, "V: order 1"));
  }

  TEST_CASE("decompose prints components and radical dimension") {
    const RunResult d = run_cli("decompose --family d12 --p 5 --k 1 --n 5");
    CHECK(d.exit_code == 0);
    CHECK(contains(d.out, "F^4 + M(2, F)^2"));
    CHECK(contains(d.out, "radical_dim 48"));
  }

  TEST_CASE("census counts units") {
    const RunResult c = run_cli("census --family q12 --p 2 --k 1 --n 1");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "768 units / 4096 states"));
  }

  TEST_CASE("verify passes on the characteristic-3 dihedral case") {
    const RunResult v = run_cli("verify --family d12 --p 3 --k 1 --n 1");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "theorem order 104976"));
    CHECK(contains(v.out, "all checks passed"));
  }

  TEST_CASE("verify radical path for p > 3") {
    const RunResult v = run_cli("verify --family d12 --p 5 --k 1 --n 5 --samples 20000");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "radical"));
    CHECK(contains(v.out, "all checks passed"));
  }

  TEST_CASE("identical configuration gives byte-identical JSON") {
    const std::string args =
        "census --family d12 --p 5 --k 1 --n 1 --mode sampled --samples 5000 --format json";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"schema\": \"grw.census.v1\""));
    CHECK_FALSE(contains(a.out, "elapsed"));  // timings are opt-in
  }

  TEST_CASE("unsupported cases exit with code 2 and a verbatim reason") {
    const RunResult r = run_cli("structure --family q12 --p 2 --k 1 --n 2");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "UnsupportedCase"));

    const RunResult bad = run_cli("census --family nosuch --p 2");
    CHECK(bad.exit_code == 2);

    const RunResult usage = run_cli("definitely-not-a-subcommand");
    CHECK(usage.exit_code != 0);
  }

  TEST_CASE("selftest runs the property suites and the golden files") {
    const RunResult r = run_cli(std::string("selftest --golden-dir ") + GRW_GOLDEN_DIR);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "dimension-audit"));
    CHECK(contains(r.out, "fc4-vs-cyclic"));
    CHECK(contains(r.out, "golden"));
    CHECK(contains(r.out, "all checks passed"));
  }
}
