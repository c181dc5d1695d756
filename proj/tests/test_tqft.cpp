#include <gtest/gtest.h>

#include <random>

#include "cobkh/kh.hpp"
#include "cobkh/tqft.hpp"
#include "support.hpp"

using namespace cobkh;
using cobkh::testing::random_generator;
using cobkh::testing::random_presurface;
using cobkh::testing::random_tangle;
using cobkh::testing::uniform;

TEST(Tqft, Objects) {
  EXPECT_EQ(eval_object(FlatTangle::empty()).masks.size(), 1u);
  const GradedBasis one = eval_object(FlatTangle({}, {3}));
  ASSERT_EQ(one.q.size(), 2u);
  EXPECT_EQ(one.q[0], 1);
  EXPECT_EQ(one.q[1], -1);
  EXPECT_EQ(eval_object(FlatTangle({}, {3, 4})).masks.size(), 4u);
  EXPECT_THROW(eval_object(FlatTangle::from_arcs(2, {{0, 1}})), InputError);
}

TEST(Tqft, ElementaryMatrices) {
  const FlatTangle l({}, {3});
  IntMatrix id(2, 2);
  id << 1, 0, 0, 1;
  EXPECT_EQ(eval_map(Cobordism::identity(l)), id);
  IntMatrix x(2, 2);
  x << 0, 0, 1, 0;
  EXPECT_EQ(eval_map(dot(l, Circle::loop(3))), x);
  // unit and counit
  IntMatrix unit(2, 1), counit(1, 2);
  unit << 1, 0;
  counit << 0, 1;
  EXPECT_EQ(eval_map(birth(FlatTangle::empty(), 3)), unit);
  EXPECT_EQ(eval_map(death(l, 3)), counit);
  // m(X ⊗ X) = 0, Δ(1) = 1⊗X + X⊗1
  const FlatTangle two({}, {3, 4});
  const FlatTangle l5({}, {5});
  const IntMatrix m = eval_map(saddle(two, l5));
  EXPECT_EQ(m(1, 3), 0);
  EXPECT_EQ(m(0, 0), 1);
  const IntMatrix delta = eval_map(saddle(l5, two));
  EXPECT_EQ(delta(1, 0), 1);
  EXPECT_EQ(delta(2, 0), 1);
  EXPECT_EQ(delta(3, 1), 1);
  EXPECT_EQ(delta.col(0).sum(), 2);
}

TEST(Tqft, PhiClosedUp) {
  // Φ closed by {0-1, 2-3}: one loop; each tube picture evaluated without
  // neck cutting as a genus-1 surface piece
  const std::vector<std::pair<int, int>> m{{0, 1}, {2, 3}};
  const Cobordism closed = close_cobordism(phi(), m);
  ASSERT_EQ(closed.source().loop_count(), 1);
  EXPECT_TRUE(eval_map(closed).isZero());
  // closure {0-3, 1-2}: two loops, Φ = X⊗1 - 1⊗X
  const std::vector<std::pair<int, int>> m2{{0, 3}, {1, 2}};
  const Cobordism c2 = close_cobordism(phi(), m2);
  const FlatTangle t = c2.source();
  ASSERT_EQ(t.loop_count(), 2);
  const PreSurface left{t, t, {{{0}, {0}, 0, 1}, {{1}, {1}, 0, 0}}, 1};
  const PreSurface right{t, t, {{{0}, {0}, 0, 0}, {{1}, {1}, 0, 1}}, 1};
  EXPECT_EQ(eval_map(c2), eval_presurface(left) - eval_presurface(right));
  // tube pictures: annulus with a handle attached along either strand
  const PreSurface tube_l{t, t, {{{0}, {0}, 1, 0}, {{1}, {1}, 0, 0}}, 1};
  const PreSurface tube_r{t, t, {{{0}, {0}, 0, 0}, {{1}, {1}, 1, 0}}, 1};
  EXPECT_EQ(2 * eval_map(c2), eval_presurface(tube_l) - eval_presurface(tube_r));
}

class TqftProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{cobkh::testing::seed() + 1};
};

TEST_F(TqftProperty, FunctorialityClosed) {
  for (int i = 0; i < 250; ++i) {
    const FlatTangle a = random_tangle(rng, 0, 3), b = random_tangle(rng, 0, 3), c = random_tangle(rng, 0, 3);
    const Cobordism f = random_generator(rng, a, b), g = random_generator(rng, b, c);
    ASSERT_EQ(eval_map(g * f), eval_map(g) * eval_map(f)) << f.to_string() << " | " << g.to_string();
  }
}

TEST_F(TqftProperty, FunctorialityAfterClosure) {
  for (int i = 0; i < 250; ++i) {
    const int n = 2 * uniform(rng, 1, 3);
    const FlatTangle a = random_tangle(rng, n, 2), b = random_tangle(rng, n, 2), c = random_tangle(rng, n, 2);
    std::vector<int> mate(n);
    cobkh::testing::random_matching(rng, 0, n, mate);
    std::vector<std::pair<int, int>> m;
    for (int p = 0; p < n; ++p)
      if (p < mate[p]) m.emplace_back(p, mate[p]);
    const Cobordism f = random_generator(rng, a, b), g = random_generator(rng, b, c);
    ASSERT_EQ(eval_map(close_cobordism(g * f, m)),
              eval_map(close_cobordism(g, m)) * eval_map(close_cobordism(f, m)));
  }
}

TEST_F(TqftProperty, NormalFormAgainstSurfaceEvaluation) {
  for (int i = 0; i < 250; ++i) {
    const PreSurface p = random_presurface(rng, random_tangle(rng, 0, 3), random_tangle(rng, 0, 3));
    ASSERT_EQ(eval_map(normalize(p)), eval_presurface(p));
  }
}

TEST_F(TqftProperty, RespectsDegree) {
  for (int i = 0; i < 100; ++i) {
    const FlatTangle a = random_tangle(rng, 0, 3), b = random_tangle(rng, 0, 3);
    const Cobordism f = random_generator(rng, a, b);
    if (!f.qdeg()) continue;
    const IntMatrix m = eval_map(f);
    const GradedBasis sa = eval_object(a), sb = eval_object(b);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) ASSERT_EQ(sb.q[r] - sa.q[c], *f.qdeg());
  }
}
