#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "cobkh/builtins.hpp"
#include "cobkh/homology.hpp"

using namespace cobkh;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(COBKH_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kDiagrams = COBKH_DIAGRAMS;

}  // namespace

TEST(Cli, VerifyOneCheckJson) {
  const CliRun r = cli("verify --check mainA_prism --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json({{"mainA_prism", "pass"}}));
}

TEST(Cli, VerifyAll) {
  const CliRun r = cli("verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 16u);
  EXPECT_EQ(cli("verify --pretty").code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("verify --check nonexistent").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("kh --bogus builtin:unknot").code, 2);
  EXPECT_EQ(cli("kh builtin:no_such_diagram").code, 2);
  EXPECT_EQ(cli("kh /nonexistent/file.json").code, 2);
  EXPECT_EQ(cli("kh builtin:pos_x").code, 2);
  EXPECT_EQ(cli("kh builtin:unknot --coeff q").code, 2);
  EXPECT_EQ(cli("dump-morphism nope").code, 2);
}

TEST(Cli, KhTrefoilFile) {
  const CliRun r = cli("kh " + kDiagrams + "/trefoil.json --coeff z");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), homology_json(kh_link(builtin("trefoil"), Coeff::Z)));
  const CliRun f2 = cli("kh " + kDiagrams + "/trefoil.json --coeff f2 --no-simplify");
  ASSERT_EQ(f2.code, 0);
  EXPECT_EQ(nlohmann::json::parse(f2.out), homology_json(kh_link(builtin("trefoil"), Coeff::F2)));
  EXPECT_EQ(cli("kh " + kDiagrams + "/hopf.json").out, cli("kh builtin:hopf").out);
}

TEST(Cli, Dumps) {
  const CliRun l = cli("list");
  ASSERT_EQ(l.code, 0);
  const auto j = nlohmann::json::parse(l.out);
  EXPECT_EQ(j["builtins"].size(), builtin_names().size());
  for (const auto& m : j["morphisms"]) EXPECT_EQ(cli("dump-morphism " + m.get<std::string>()).code, 0) << m;
  const CliRun s = cli("show-complex builtin:sing_x");
  ASSERT_EQ(s.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(s.out).contains("degrees"));
}

TEST(Cli, ByteStable) {
  EXPECT_EQ(cli("show-complex builtin:r3_left_LMR").out, cli("show-complex builtin:r3_left_LMR").out);
  EXPECT_EQ(cli("dump-morphism psi_O").out, cli("dump-morphism psi_O").out);
}
