#include <gtest/gtest.h>

#include <random>

#include "cobkh/cobordism.hpp"
#include "cobkh/kh.hpp"
#include "cobkh/tqft.hpp"
#include "support.hpp"

using namespace cobkh;
using cobkh::testing::random_generator;
using cobkh::testing::random_presurface;
using cobkh::testing::random_tangle;
using cobkh::testing::uniform;

namespace {

const FlatTangle kV = FlatTangle::from_arcs(4, {{0, 3}, {1, 2}});
const FlatTangle kH = FlatTangle::from_arcs(4, {{0, 1}, {2, 3}});
const FlatTangle kEmpty = FlatTangle::empty();
const FlatTangle kLoop = FlatTangle({}, {7});

CircleRef s_arc(int p) { return CircleRef::src(Circle::arc(p)); }

}  // namespace

TEST(Cobordism, IdentityShapes) {
  const Cobordism idv = Cobordism::identity(kV);
  ASSERT_EQ(idv.terms().size(), 1u);
  EXPECT_EQ(idv.terms()[0].coeff, 1);
  EXPECT_EQ(idv.cycles().count, 2);
  EXPECT_EQ(idv.qdeg(), 0);
  const Cobordism idl = Cobordism::identity(kLoop);
  // the annulus neck-cuts into dot-on-source plus dot-on-target
  EXPECT_EQ(idl.cycles().count, 2);
  ASSERT_EQ(idl.terms().size(), 2u);
  EXPECT_EQ(idl.qdeg(), 0);
}

TEST(Cobordism, ElementaryDegrees) {
  const Cobordism s = saddle(kH, kV);
  EXPECT_EQ(s.cycles().count, 1);
  EXPECT_EQ(s.qdeg(), -1);
  EXPECT_EQ(saddle(kV, kH).qdeg(), -1);
  EXPECT_EQ(birth(kV, 3).qdeg(), 1);
  EXPECT_EQ(death(kV.with_loop(3), 3).qdeg(), 1);
  EXPECT_EQ(dot(kV, Circle::arc(0)).qdeg(), -2);
  EXPECT_EQ(phi().qdeg(), -2);
  EXPECT_THROW(saddle(kV, kV), InputError);
}

TEST(Cobordism, DeathNextToStrands) {
  const Cobordism d = death(kV.with_loop(3), 3);
  EXPECT_EQ(d.cycles().count, 3);
  EXPECT_EQ(d.terms().size(), 1u);
}

TEST(Cobordism, AttachTube) {
  const Cobordism id = Cobordism::identity(kV);
  const Cobordism tube = id.attach_tube(s_arc(0), s_arc(1));
  EXPECT_EQ(tube, dot(kV, Circle::arc(0)) + dot(kV, Circle::arc(1)));
  EXPECT_EQ(tube.qdeg(), -2);
  const Cobordism loop_id = Cobordism::identity(kLoop);
  const CircleRef l = CircleRef::src(Circle::loop(7));
  const Cobordism handle = loop_id.attach_tube(l, l);
  EXPECT_EQ(handle, std::int64_t{2} * loop_id.with_dot(l));
  EXPECT_TRUE(handle.attach_tube(l, l).is_zero());
}

TEST(Cobordism, TubeMatchesTqft) {
  const auto closing = std::vector<std::pair<int, int>>{{0, 3}, {1, 2}};
  const Cobordism tube = Cobordism::identity(kV).attach_tube(s_arc(0), s_arc(1));
  // closed up: one genus-0 piece through both loops on each side
  const FlatTangle closed = close_tangle(kV, closing);
  ASSERT_EQ(closed.loop_count(), 2);
  const PreSurface p{closed, closed, {{{0, 1}, {0, 1}, 0, 0}}, 1};
  EXPECT_EQ(eval_map(close_cobordism(tube, closing)), eval_presurface(p));
}

TEST(Cobordism, NormalizeExamples) {
  PreSurface sphere{kV, kV, {{{0}, {0}, 0, 0}, {{1}, {1}, 0, 0}, {{}, {}, 0, 0}}, 1};
  EXPECT_TRUE(normalize(sphere).is_zero());
  PreSurface torus{kEmpty, kEmpty, {{{}, {}, 1, 0}}, 1};
  EXPECT_EQ(normalize(torus), Cobordism::basis(kEmpty, kEmpty, 0, 2));
  PreSurface dotted_sphere{kEmpty, kEmpty, {{{}, {}, 0, 1}}, 1};
  EXPECT_EQ(normalize(dotted_sphere), Cobordism::identity(kEmpty));
  PreSurface open_handle{kV, kV, {{{0}, {0}, 1, 0}, {{1}, {1}, 0, 0}}, 1};
  EXPECT_EQ(normalize(open_handle), std::int64_t{2} * dot(kV, Circle::arc(0)));
  PreSurface two_dots{kV, kV, {{{0}, {0}, 0, 2}, {{1}, {1}, 0, 0}}, 1};
  EXPECT_TRUE(normalize(two_dots).is_zero());
}

TEST(Cobordism, ComposeExamples) {
  const Cobordism b = birth(kEmpty, 4);
  const Cobordism d = death(kEmpty.with_loop(4), 4);
  EXPECT_TRUE((d * b).is_zero());
  const Cobordism dotted = d * dot(kEmpty.with_loop(4), Circle::loop(4));
  EXPECT_EQ(dotted * b, Cobordism::identity(kEmpty));
  const Cobordism hh = saddle(kV, kH) * saddle(kH, kV);
  EXPECT_EQ(hh.qdeg(), -2);
  // genus-1 piece through the four arcs: 2 * (dot on the single cycle)
  EXPECT_EQ(hh, Cobordism::identity(kH).attach_tube(s_arc(0), s_arc(2)));
  const Cobordism vv = saddle(kH, kV) * saddle(kV, kH);
  EXPECT_EQ(vv, Cobordism::identity(kV).attach_tube(s_arc(0), s_arc(1)));
  EXPECT_THROW(saddle(kH, kV) * saddle(kH, kV), InputError);
}

TEST(Cobordism, Linear) {
  const Cobordism f = saddle(kH, kV);
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ(std::int64_t{2} * f + std::int64_t{3} * f, std::int64_t{5} * f);
  const Cobordism id = Cobordism::identity(kV);
  const Cobordism t1 = id.attach_tube(s_arc(0), s_arc(1));
  EXPECT_EQ(phi(), id.with_dot(s_arc(0)) - id.with_dot(s_arc(1)));
  EXPECT_EQ(t1.terms().size(), 2u);
  EXPECT_THROW(f + Cobordism::identity(kV), InputError);
}

TEST(Cobordism, PhiCompositeOrderings) {
  const Cobordism a = saddle(kV, kH) * phi();
  const Cobordism b = compose(phi(), saddle(kV, kH));
  EXPECT_EQ(a, b);
  // Φ followed by the saddle vanishes: both dots land on one circle
  EXPECT_TRUE(a.is_zero());
}

class CobordismProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{cobkh::testing::seed()};
  FlatTangle pick(int boundary) { return random_tangle(rng, boundary, 2); }
};

TEST_F(CobordismProperty, Associativity) {
  for (int i = 0; i < 200; ++i) {
    const int b = 2 * uniform(rng, 0, 3);
    const FlatTangle t0 = pick(b), t1 = pick(b), t2 = pick(b), t3 = pick(b);
    const Cobordism f = random_generator(rng, t0, t1), g = random_generator(rng, t1, t2),
                    h = random_generator(rng, t2, t3);
    ASSERT_EQ((h * g) * f, h * (g * f)) << f.to_string() << " | " << g.to_string() << " | " << h.to_string();
  }
}

TEST_F(CobordismProperty, IdentityLaws) {
  for (int i = 0; i < 200; ++i) {
    const int b = 2 * uniform(rng, 0, 3);
    const FlatTangle s = pick(b), t = pick(b);
    const Cobordism f = random_generator(rng, s, t);
    ASSERT_EQ(Cobordism::identity(t) * f, f);
    ASSERT_EQ(f * Cobordism::identity(s), f);
  }
}

TEST_F(CobordismProperty, DegreeAdditivity) {
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const int b = 2 * uniform(rng, 0, 3);
    const FlatTangle t0 = pick(b), t1 = pick(b), t2 = pick(b);
    const Cobordism f = random_generator(rng, t0, t1), g = random_generator(rng, t1, t2);
    const Cobordism gf = g * f;
    if (!f.qdeg() || !g.qdeg() || gf.is_zero()) continue;
    ASSERT_EQ(gf.qdeg(), *f.qdeg() + *g.qdeg());
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST_F(CobordismProperty, Bilinearity) {
  for (int i = 0; i < 100; ++i) {
    const int b = 2 * uniform(rng, 0, 2);
    const FlatTangle t0 = pick(b), t1 = pick(b), t2 = pick(b);
    const Cobordism f1 = random_generator(rng, t0, t1), f2 = random_generator(rng, t0, t1);
    const Cobordism g = random_generator(rng, t1, t2);
    ASSERT_EQ(g * (f1 + std::int64_t{3} * f2), g * f1 + std::int64_t{3} * (g * f2));
  }
}

TEST_F(CobordismProperty, Confluence) {
  int nonzero = 0;
  for (int i = 0; i < 250; ++i) {
    const int b = 2 * uniform(rng, 0, 3);
    const PreSurface p = random_presurface(rng, pick(b), pick(b));
    const Cobordism ref = normalize(p);
    nonzero += !ref.is_zero();
    for (int k = 0; k < 4; ++k) {
      std::mt19937_64 order(rng());
      ASSERT_EQ(normalize_by_rewriting(p, order), ref) << ref.to_string();
    }
  }
  EXPECT_GT(nonzero, 50);
}

TEST_F(CobordismProperty, PresurfaceRoundTrip) {
  for (int i = 0; i < 100; ++i) {
    const int b = 2 * uniform(rng, 0, 3);
    const Cobordism f = random_generator(rng, pick(b), pick(b));
    for (std::size_t t = 0; t < f.terms().size(); ++t) {
      const PreSurface p = to_presurface(f, t);
      ASSERT_EQ(normalize(p), Cobordism::basis(f.source(), f.target(), f.terms()[t].mask, f.terms()[t].coeff));
    }
  }
}
