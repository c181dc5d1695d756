#include <gtest/gtest.h>

#include <chrono>

#include <nlohmann/json.hpp>

#include "cobkh/builtins.hpp"
#include "cobkh/papermorph.hpp"
#include "cobkh/r2.hpp"
#include "cobkh/verify.hpp"

using namespace cobkh;

TEST(Verify, AllChecksPass) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_all();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ASSERT_EQ(results.size(), check_names().size());
  for (const auto& r : results)
    EXPECT_EQ(r.status, Status::Pass) << r.name << ": " << (r.witness.empty() ? "" : r.witness.front());
  EXPECT_LT(secs, 10.0);
}

TEST(Verify, Filters) {
  EXPECT_EQ(run_all("mainA*").size(), 2u);
  EXPECT_EQ(run_all("main*").size(), 5u);
  EXPECT_TRUE(run_all("nothing_matches*").empty());
  EXPECT_TRUE(all_passed(run_all("nothing_matches*")));
  EXPECT_THROW(run_check("nonexistent"), InputError);
  EXPECT_TRUE(glob_match("lemma_hex*", "lemma_hexpos"));
  EXPECT_TRUE(glob_match("f?_eqn", "fo_eqn"));
  EXPECT_FALSE(glob_match("f?_eqn", "g_eqn"));
}

TEST(Verify, ReportJson) {
  const auto r = run_all("mainA_prism");
  const nlohmann::json j = report_json(r);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["name"], "mainA_prism");
  EXPECT_EQ(j[0]["status"], "pass");
  EXPECT_FALSE(j[0].contains("witness"));
  EXPECT_NE(report_text(r).find("PASS mainA_prism"), std::string::npos);
}

TEST(Verify, NegatedFMinusFailsFoEqn) {
  Catalog c = default_catalog();
  for (auto& t : c)
    if (t.morphism == "F_O-") t.coeff = -t.coeff;
  const CheckResult r = run_check("fo_eqn", c);
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_FALSE(r.witness.empty());
}

// One sabotage per catalog term and kind: each must make some check fail.
struct Sabotage {
  std::size_t term;
  bool add_dot;
};

void PrintTo(const Sabotage& s, std::ostream* os) { *os << (s.add_dot ? "dot " : "sign ") << s.term; }

class CatalogSabotage : public ::testing::TestWithParam<Sabotage> {};

TEST_P(CatalogSabotage, SomeCheckFails) {
  Catalog c = default_catalog();
  const Sabotage s = GetParam();
  ASSERT_LT(s.term, c.size());
  CatalogTerm& t = c[s.term];
  if (!s.add_dot) {
    t.coeff = -t.coeff;
  } else if (t.picture.components.empty()) {
    // dot on an identity strand
    t.picture.components.push_back({{"s:0-5"}, 1});
  } else {
    t.picture.components.front().dots += 1;
  }
  bool failed = false;
  try {
    failed = !all_passed(run_all("*", c));
  } catch (const std::exception&) {
    failed = true;
  }
  EXPECT_TRUE(failed) << t.morphism << " " << t.from << "->" << t.to;
}

std::vector<Sabotage> all_sabotages() {
  std::vector<Sabotage> v;
  for (std::size_t i = 0; i < default_catalog().size(); ++i) {
    v.push_back({i, false});
    v.push_back({i, true});
  }
  return v;
}

INSTANTIATE_TEST_SUITE_P(Catalog, CatalogSabotage, ::testing::ValuesIn(all_sabotages()),
                         [](const ::testing::TestParamInfo<Sabotage>& info) {
                           return std::string(info.param.add_dot ? "dot_" : "sign_") +
                                  std::to_string(info.param.term);
                         });

TEST(Verify, CatalogSize) {
  EXPECT_GE(default_catalog().size(), 10u);
  for (const auto& t : default_catalog()) EXPECT_TRUE(t.coeff == 1 || t.coeff == -1);
}

TEST(R2, Certificate) {
  const R2Equivalence e = r2_equiv();
  EXPECT_TRUE(is_chain_map(e.to_strands));
  EXPECT_TRUE(is_chain_map(e.from_strands));
  EXPECT_EQ(internal_qdeg(e.to_strands), 0);
  EXPECT_EQ(internal_qdeg(e.from_strands), 0);
  EXPECT_TRUE(compare(e.to_strands * e.from_strands, HomElement::identity(e.strands)).empty());
  EXPECT_TRUE(verify_homotopy(e.from_strands * e.to_strands, HomElement::identity(e.tangle), e.homotopy));
}

TEST(Morphisms, R3AndR4AreChainMaps) {
  MorphismBook P;
  for (Flavor f : {Flavor::O, Flavor::U}) {
    for (int sign : {-1, 1}) {
      const HomElement r = P.r3_equiv(f, sign);
      EXPECT_TRUE(is_chain_map(r));
      EXPECT_EQ(internal_qdeg(r), 0);
    }
    EXPECT_TRUE(is_chain_map(P.r4_equiv(f)));
    EXPECT_EQ(P.psi(f).degree, -1);
  }
}
