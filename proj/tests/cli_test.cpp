#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("gpindex_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the CLI through the shell; `env` is prepended verbatim.
CliRun run_cli(const std::string& args, const std::string& env = "") {
  const fs::path err_path = scratch_dir() / "stderr.txt";
  const std::string cmd = env + " '" + std::string(GPINDEX_CLI) + "' " + args + " 2>'" + err_path.string() + "'";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  return r;
}

fs::path write_file(const std::string& name, const std::string& contents) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << contents;
  return p;
}

std::string last_line(const std::string& text) {
  std::string s = text;
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s.substr(s.rfind('\n') == std::string::npos ? 0 : s.rfind('\n') + 1);
}

TEST(CliComputeTest, EdgeList) {
  const fs::path k2 = write_file("k2.txt", "2 1\n0 1\n");
  const CliRun r = run_cli("compute --edges '" + k2.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("\"gp\":\"1\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"guarantee\":\"even-order\""), std::string::npos) << r.out;
}

TEST(CliComputeTest, Graph6) {
  const CliRun r = run_cli("compute --g6 Dhc");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("\"gp\":\"15\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"guarantee\":\"none\""), std::string::npos) << r.out;
}

TEST(CliComputeTest, NonIntegerFixture) {
  const CliRun r = run_cli(std::string("compute --edges '") + GPINDEX_TEST_DATA_DIR + "/noninteger5/graph2.txt'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("\"gp\":\"25/2\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"is_integer\":false"), std::string::npos) << r.out;
}

TEST(CliComputeTest, Errors) {
  const fs::path two = write_file("disconnected.txt", "4 2\n0 1\n2 3\n");
  const CliRun disconnected = run_cli("compute --edges '" + two.string() + "'");
  EXPECT_EQ(disconnected.exit_code, 2);
  EXPECT_NE(disconnected.err.find("graph is not connected"), std::string::npos) << disconnected.err;

  EXPECT_EQ(run_cli("compute --g6 Dh").exit_code, 2);
  EXPECT_EQ(run_cli("compute").exit_code, 2);
  EXPECT_EQ(run_cli("compute --edges /nonexistent/file").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);

  const CliRun capped = run_cli("compute --g6 Dhc", "GP_MAX_N=4");
  EXPECT_EQ(capped.exit_code, 3);
  EXPECT_EQ(run_cli("compute --g6 Dhc", "GP_MAX_N=5").exit_code, 0);
  EXPECT_EQ(run_cli("compute --g6 Dhc", "GP_MAX_N=zero").exit_code, 2);
}

TEST(CliCensusTest, GeneratedOrder) {
  const CliRun r = run_cli("census 5");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(last_line(r.out), "n=5 connected=21 integer=14 noninteger=7");
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "canon_g6,n,m,aut_order,orbit_count,gp_num,gp_den,is_integer");
  EXPECT_EQ(run_cli("census 11").exit_code, 3);
  EXPECT_EQ(run_cli("census 6", "GP_MAX_N=5").exit_code, 3);
  EXPECT_EQ(run_cli("census 0").exit_code, 2);
  EXPECT_EQ(run_cli("census").exit_code, 2);
}

TEST(CliCensusTest, OutputFilesAndWorkers) {
  const fs::path one = scratch_dir() / "one.csv";
  const fs::path eight = scratch_dir() / "eight.csv";
  const fs::path nonint = scratch_dir() / "nonint.g6";
  const CliRun a = run_cli("census 6 --workers 1 --out '" + one.string() + "'");
  const CliRun b = run_cli("census 6 --workers 8 --out '" + eight.string() + "' --nonintegers '" + nonint.string() + "'");
  ASSERT_EQ(a.exit_code, 0) << a.err;
  ASSERT_EQ(b.exit_code, 0) << b.err;
  EXPECT_EQ(slurp(one), slurp(eight));
  EXPECT_EQ(slurp(nonint), "");
  EXPECT_EQ(a.out, "n=6 connected=112 integer=112 noninteger=0\n");
}

TEST(CliCensusTest, FromFile) {
  const fs::path in = write_file("three.g6", "Dhc\nA_\nBw\n");
  const CliRun r = run_cli("census --from '" + in.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 5);  // header, three rows, summary
  EXPECT_EQ(last_line(r.out), "n=mixed connected=3 integer=3 noninteger=0");

  const fs::path bad = write_file("bad.g6", "Dhc\nDh\n");
  const CliRun broken = run_cli("census --from '" + bad.string() + "'");
  EXPECT_EQ(broken.exit_code, 2);
  EXPECT_NE(broken.err.find("line 2"), std::string::npos) << broken.err;
  EXPECT_EQ(run_cli("census 5 --from '" + in.string() + "'").exit_code, 2);
}

TEST(CliFamilyTest, Tadpoles) {
  const CliRun t32 = run_cli("family 3 2");
  ASSERT_EQ(t32.exit_code, 0) << t32.err;
  EXPECT_EQ(t32.out, "tadpole l=3 t=2 n=5\nclosed-form 5/2\ncomputed 5/2\nMATCH\npredicted non-integer\n");
  const CliRun t72 = run_cli("family 7 2");
  ASSERT_EQ(t72.exit_code, 0) << t72.err;
  EXPECT_NE(t72.out.find("computed 27\n"), std::string::npos);
  EXPECT_NE(t72.out.find("predicted integer\n"), std::string::npos);
  EXPECT_EQ(run_cli("family 4 2").exit_code, 2);
  EXPECT_EQ(run_cli("family 3").exit_code, 2);
}

TEST(CliSelfcheckTest, Runs) {
  const CliRun r = run_cli("selfcheck");
  ASSERT_EQ(r.exit_code, 0) << r.out << r.err;
  EXPECT_EQ(last_line(r.out), "all checks passed");
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const CliRun seven = run_cli("selfcheck --max-n 7");
  EXPECT_EQ(seven.exit_code, 0) << seven.out;
  EXPECT_EQ(run_cli("selfcheck --max-n 12").exit_code, 2);
}

}  // namespace
