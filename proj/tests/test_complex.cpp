#include <gtest/gtest.h>

#include <random>

#include "cobkh/builtins.hpp"
#include "cobkh/homology.hpp"
#include "cobkh/kh.hpp"
#include "cobkh/papermorph.hpp"
#include "support.hpp"

using namespace cobkh;

namespace {

const FlatTangle kV = FlatTangle::from_arcs(4, {{0, 3}, {1, 2}});
const FlatTangle kH = FlatTangle::from_arcs(4, {{0, 1}, {2, 3}});

ComplexPtr ptr(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

}  // namespace

TEST(Complex, NegCrossing) {
  const Complex c = kh_complex(builtin("neg_x"));
  ASSERT_EQ(c.degree_range(), std::make_pair(-1, 0));
  ASSERT_EQ(c.size(-1), 1);
  ASSERT_EQ(c.size(0), 1);
  EXPECT_EQ(c.at(-1)[0].tangle, kH);
  EXPECT_EQ(c.at(-1)[0].q, -2);
  EXPECT_EQ(c.at(0)[0].tangle, kV);
  EXPECT_EQ(c.at(0)[0].q, -1);
  EXPECT_EQ(*c.diff(-1).find(0, 0), saddle(kH, kV));
}

TEST(Complex, SingCrossing) {
  const Complex c = kh_complex(builtin("sing_x"));
  ASSERT_EQ(c.degree_range(), std::make_pair(-2, 1));
  EXPECT_EQ(*c.diff(-2).find(0, 0), -saddle(kH, kV));
  EXPECT_EQ(*c.diff(-1).find(0, 0), phi());
  EXPECT_EQ(*c.diff(0).find(0, 0), -saddle(kV, kH));
  EXPECT_EQ(c.at(-2)[0].q, -2);
  EXPECT_EQ(c.at(1)[0].q, 2);
}

TEST(Complex, AllBuiltinsWellFormed) {
  for (const auto& name : builtin_names()) {
    const Witness w = check_complex(kh_complex(builtin(name)));
    EXPECT_TRUE(w.empty()) << name << ": " << (w.empty() ? "" : w.front());
  }
}

TEST(Complex, FlippedDifferentialIsCaught) {
  Complex c = kh_complex(builtin("r3_left_MLR"));
  auto& m = c.d.begin()->second;
  const auto [key, x] = *m.entries().begin();
  m.set(key.first, key.second, -x);
  const Witness w = check_complex(c);
  ASSERT_FALSE(w.empty());
  EXPECT_NE(w.front().find("d"), std::string::npos);
}

TEST(Complex, ConeOfIdentityIsAcyclic) {
  const ComplexPtr c = kh_ptr(builtin("trefoil"));
  const Complex k = cone(HomElement::identity(c));
  EXPECT_TRUE(check_complex(k).empty());
  EXPECT_TRUE(homology(k, Coeff::Z).empty());
  EXPECT_THROW(cone(HomElement::zero(c, c, 1)), std::exception);
}

TEST(Complex, Shift) {
  const Complex c = kh_complex(builtin("r3_left_LMR"));
  const Complex s0 = shift(c, 0, 0);
  EXPECT_TRUE(same_objects(c, s0));
  const Complex back = shift(shift(c, 1, 0), -1, 0);
  EXPECT_TRUE(same_objects(c, back));
  EXPECT_TRUE(match_complexes(c, back, [](const auto& l) { return l; }).empty());
  const Complex up = shift(c, 1, 3);
  EXPECT_EQ(up.degree_range()->first, c.degree_range()->first - 1);
  EXPECT_EQ(up.at(up.degree_range()->first)[0].q, c.at(c.degree_range()->first)[0].q + 3);
  EXPECT_TRUE(check_complex(up).empty());
}

TEST(Complex, SquareOfIdentitiesOnOneTerm) {
  const ComplexPtr a = kh_ptr(builtin("id_2"));
  const HomElement id = HomElement::identity(a);
  const Square sq{id, id, id, id};
  EXPECT_TRUE(check_square(sq).empty());
  const Complex tot = total_complex(sq);
  EXPECT_TRUE(check_complex(tot).empty());
  // A at -2, B and C at -1, D at 0
  EXPECT_EQ(tot.degree_range(), std::make_pair(-2, 0));
  EXPECT_EQ(tot.size(-1), 2);
  const auto rows = ptr(tot), cols = ptr(total_complex_columns(sq));
  EXPECT_TRUE(is_chain_map(total_rows_to_columns(sq, rows, cols)));
}

TEST(Complex, HomDifferentialSquaresToZero) {
  std::mt19937_64 rng(cobkh::testing::seed() + 2);
  const ComplexPtr a = kh_ptr(builtin("r3_left_LMR")), b = kh_ptr(builtin("r3_left_MLR"));
  for (int trial = 0; trial < 20; ++trial) {
    const int deg = cobkh::testing::uniform(rng, -1, 1);
    HomElement f = HomElement::zero(a, b, deg);
    for (const auto& [n, objs] : a->objects)
      for (int c = 0; c < static_cast<int>(objs.size()); ++c)
        for (int r = 0; r < b->size(n + deg); ++r) {
          if (cobkh::testing::uniform(rng, 0, 2)) continue;
          f.add_entry(n, r, c, cobkh::testing::random_generator(rng, objs[c].tangle, b->at(n + deg)[r].tangle));
        }
    ASSERT_TRUE(hom_differential(hom_differential(f)).is_zero());
  }
}

TEST(Complex, ComposeWithIdentity) {
  MorphismBook P;
  const HomElement f = P.phi_hat("r3_left_LMR", "a", "r3_left_MLR");
  EXPECT_TRUE(compare(HomElement::identity(f.target) * f, f).empty());
  EXPECT_TRUE(compare(f * HomElement::identity(f.source), f).empty());
  EXPECT_TRUE(is_chain_map(f));
  EXPECT_EQ(internal_qdeg(f), 0);
}

TEST(Complex, SkeinCone) {
  MorphismBook P;
  const HomElement f = P.phi_hat("neg_x", "x", "pos_x");
  const Complex k = cone(f);
  const Complex s = kh_complex(builtin("sing_x"));
  EXPECT_TRUE(check_complex(k).empty());
  ASSERT_EQ(k.total_summands(), s.total_summands());
  for (int n = -2; n <= 1; ++n) {
    ASSERT_EQ(k.size(n), 1);
    EXPECT_EQ(k.at(n)[0].tangle, s.at(n)[0].tangle);
    EXPECT_EQ(k.at(n)[0].q, s.at(n)[0].q);
  }
}
