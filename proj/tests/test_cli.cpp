#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(GSPEC_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const CliRun& r, const std::string& needle) { return r.out.find(needle) != std::string::npos; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, RhoOfStarFour) {
  const CliRun r = run("rho 'D?{' --exact");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "rho: 2")) << r.out;
  EXPECT_TRUE(has(r, "x^5 - 4x^3")) << r.out;
}

TEST(Cli, RhoOfFiveCycle) {
  const CliRun r = run("rho Dhc");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "rho: 2")) << r.out;
}

TEST(Cli, MalformedGraph6) {
  const CliRun r = run("rho '~'");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r, "MalformedGraph6")) << r.out;
}

TEST(Cli, CharPolySizeCap) {
  // P_17: spectral radius is fine, the exact polynomial is capped.
  const CliRun fam = run("family path 17");
  ASSERT_EQ(fam.code, 0);
  const std::string g6 = fam.out.substr(0, fam.out.find('\n'));
  EXPECT_EQ(run("rho '" + g6 + "'").code, 0);
  EXPECT_EQ(run("rho '" + g6 + "' --exact").code, 3);
}

TEST(Cli, SplitStarFiveIsLess) {
  const CliRun r = run("transform split 'Esa?' --vertex 0 --part 1,2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "Fo?Cw")) << r.out;
  EXPECT_TRUE(has(r, "Less")) << r.out;
}

TEST(Cli, SubdivideTildeDIsEqual) {
  const CliRun r = run("transform subdivide 'EsP?' --edge 0,1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "Equal")) << r.out;
}

TEST(Cli, SplitCycleVertexIsRejected) {
  const CliRun r = run("transform split 'Cl' --vertex 0 --part 1");
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_TRUE(has(r, "DegreeTooSmall")) << r.out;
}

TEST(Cli, ExpandAndNonadjacentSplit) {
  const CliRun fam = run("family star 9");
  const std::string g6 = fam.out.substr(0, fam.out.find('\n'));
  const CliRun e = run("transform expand '" + g6 + "' --vertex 0 --part 1,2,3 --part 4,5,6 --part 7,8,9");
  EXPECT_EQ(e.code, 0) << e.out;
  EXPECT_TRUE(has(e, "Equal")) << e.out;
  const CliRun s = run("transform split-na 'Cl' --vertex 0 --part 1");
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_TRUE(has(s, "Less")) << s.out;
}

TEST(Cli, Witness) {
  const CliRun r = run("witness 'Esa?' --vertex 0 --part 1,2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "case: 2")) << r.out;
}

TEST(Cli, EnumerateAndFamily) {
  EXPECT_EQ(run("enumerate 4 --count").out, "38\n");
  EXPECT_EQ(run("enumerate 3").out, "Bo\nBg\nBW\nBw\n");
  EXPECT_EQ(run("family tilde-d 5").out, "EsP?\n");
  EXPECT_EQ(run("family cycle 2").code, 2);
  EXPECT_EQ(run("family hexagon 6").code, 2);
  EXPECT_EQ(run("enumerate 9").code, 3);
}

TEST(Cli, VerifyIsReproducible) {
  const auto dir = std::filesystem::temp_directory_path() / "gspec_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  const std::string common = "verify --max-n 5 --theorems all --samples 3 --seed 7 --out ";
  const CliRun ra = run(common + a.string());
  const CliRun rb = run(common + b.string() + " --jobs 2");
  EXPECT_EQ(ra.code, 0) << ra.out;
  EXPECT_EQ(rb.code, 0) << rb.out;
  EXPECT_TRUE(has(ra, "violations=0")) << ra.out;
  EXPECT_TRUE(has(ra, "cases=[")) << ra.out;
  const std::string ja = slurp(a);
  EXPECT_FALSE(ja.empty());
  EXPECT_EQ(ja, slurp(b));
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyErrors) {
  EXPECT_EQ(run("verify --max-n 20").code, 3);
  EXPECT_EQ(run("verify --max-n 3 --theorems nonsense").code, 2);
  EXPECT_EQ(run("verify --max-n 3 --exact-mode sometimes").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
}
