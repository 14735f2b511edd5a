#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubix/cubix.hpp"

using namespace cubix;

namespace {

struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(std::uint64_t seed) : eng(seed) {}
  Int pick(long lo, long hi)
  {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(eng));
  }
};

TernaryCubic make_cubic(const std::array<long, 10>& v)
{
  TernaryCubic g;
  for (std::size_t i = 0; i < 10; ++i) g.c[i] = Int(v[i]);
  return g;
}

WeierstrassCurve curve_of(long a1, long a2, long a3, long a4, long a6)
{
  return {Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6)};
}

Mat3<Int> mat_of(const std::array<std::array<long, 3>, 3>& rows)
{
  Mat3<Int> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = Int(rows[r][c]);
  return m;
}

const PellCubeInstance kExample{BinaryCubicForm{1, 1, 2, 1}, Rat(0), Rat(1)};

/* X^3 + X Z^2 - Y^2 Z: flex at (0:1:0), non-flex rational point (0:0:1) */
const std::array<long, 10> kG1 = {1, 0, 0, 0, 0, 1, 0, -1, 0, 0};

/* a smooth cubic whose point (-1:1:1) is a flex */
const std::array<long, 10> kG2 = {2, 4, 2, 2, 2, 1, 1, -1, 1, 0};

}  // namespace

TEST_CASE("standard invariants of short Weierstrass models")
{
  SECTION("y^2 = x^3 + 1")
  {
    CurveInvariants iv = curve_invariants(curve_of(0, 0, 0, 0, 1));
    CHECK(iv.b2 == 0);
    CHECK(iv.b6 == 4);
    CHECK(iv.c4 == 0);
    CHECK(iv.c6 == -864);
    CHECK(iv.disc == -432);
    CHECK(iv.j() == 0);
  }
  SECTION("y^2 = x^3 + x")
  {
    CurveInvariants iv = curve_invariants(curve_of(0, 0, 0, 1, 0));
    CHECK(iv.c4 == -48);
    CHECK(iv.disc == -64);
    CHECK(iv.j() == 1728);
  }
  SECTION("singular y^2 = x^3 has no j-invariant")
  {
    CurveInvariants iv = curve_invariants(curve_of(0, 0, 0, 0, 0));
    CHECK(iv.disc == 0);
    CHECK_THROWS_AS(iv.j(), std::domain_error);
  }
  SECTION("c4^3 - c6^2 = 1728 disc on random rational curves")
  {
    TestRng rng(89);
    for (int i = 0; i < 100; ++i) {
      WeierstrassCurve w{Rat(rng.pick(-9, 9), rng.pick(1, 5)), Rat(rng.pick(-9, 9), rng.pick(1, 5)),
                         Rat(rng.pick(-9, 9), rng.pick(1, 5)), Rat(rng.pick(-9, 9), rng.pick(1, 5)),
                         Rat(rng.pick(-9, 9), rng.pick(1, 5))};
      CurveInvariants iv = curve_invariants(w);  // throws if the identity fails
      CHECK(iv.c4 * iv.c4 * iv.c4 - iv.c6 * iv.c6 == 1728 * iv.disc);
    }
  }
}

TEST_CASE("homogenized trace-norm cubic")
{
  SECTION("worked instance")
  {
    TernaryCubic g = build_gamma(kExample);
    CHECK(g.c == make_cubic({-11, 39, 0, 48, 0, 0, 25, 0, 0, -27}).c);
  }
  SECTION("singular slice t = 3, n = 1 degenerates at (0:0:1)")
  {
    TernaryCubic g = build_gamma({BinaryCubicForm{1, 1, 2, 1}, Rat(3), Rat(1)});
    CHECK(g.c == make_cubic({-11, 39, 45, 48, 63, 0, 25, -9, 0, 0}).c);
    CHECK(g.contains(ProjPoint(0, 0, 1)));
    CHECK(is_zero_vec(g.gradient({0, 0, 1})));
  }
  SECTION("rational parameters are cleared to a primitive integer cubic")
  {
    PellCubeInstance inst{BinaryCubicForm{1, 1, 2, 1}, Rat(1, 2), Rat(1, 3)};
    TernaryCubic g = build_gamma(inst);

    Int content = 0;
    for (const Int& v : g.c) content = gcd_int(content, abs_int(v));
    CHECK(content == 1);

    /* proportional to the rational homogenization: compare cross-ratios */
    auto gamma_rat = [&](long x, long y, long z) {
      Rat q = Rat(inst.form.hessian().eval(Int(x), Int(y)));
      Rat f = Rat(inst.form.jacobian().evaluate(Int(x), Int(y)));
      Rat t = inst.t, n = inst.n;
      return f - 3 * t * q * Rat(z) + (t * t * t - 27 * n) * Rat(z) * Rat(z) * Rat(z);
    };
    Rat r1 = gamma_rat(1, 2, 3), r2 = gamma_rat(2, -1, 1);
    Rat i1(g.eval(Int(1), Int(2), Int(3))), i2(g.eval(Int(2), Int(-1), Int(1)));
    REQUIRE(r2 != 0);
    REQUIRE(i2 != 0);
    CHECK(r1 * i2 == r2 * i1);
  }
  SECTION("the zero cubic is rejected")
  {
    /* zero form with t^3 = 27 n makes every coefficient vanish */
    CHECK_THROWS_AS(build_gamma({BinaryCubicForm{0, 0, 0, 0}, Rat(0), Rat(0)}),
                    std::domain_error);
  }
}

TEST_CASE("tangent lines")
{
  TernaryCubic g = build_gamma(kExample);
  CHECK(tangent_line(g, ProjPoint(-1, 1, 1)) == ProjLine(V3{7, -2, 9}));
  CHECK(tangent_line(g, ProjPoint(-29, 2, 23)) == ProjLine(V3{155, -133, 207}));
  CHECK_THROWS_AS(tangent_line(g, ProjPoint(1, 0, 0)), std::invalid_argument);

  TernaryCubic sing = build_gamma({BinaryCubicForm{1, 1, 2, 1}, Rat(3), Rat(1)});
  CHECK_THROWS_AS(tangent_line(sing, ProjPoint(0, 0, 1)), std::domain_error);
}

TEST_CASE("tangent steps walk the chord chain")
{
  TernaryCubic g = build_gamma(kExample);

  TangentStep s1 = tangent_step(g, ProjPoint(-1, 1, 1));
  CHECK_FALSE(s1.is_flex);
  CHECK(s1.line == ProjLine(V3{7, -2, 9}));
  CHECK(s1.third == ProjPoint(-29, 2, 23));

  TangentStep s2 = tangent_step(g, s1.third);
  CHECK_FALSE(s2.is_flex);
  CHECK(s2.line == ProjLine(V3{155, -133, 207}));
  CHECK(s2.third == ProjPoint(-6968, 27569, 22931));

  TangentStep flex = tangent_step(make_cubic(kG1), ProjPoint(0, 1, 0));
  CHECK(flex.is_flex);
  CHECK(flex.line == ProjLine(V3{0, 0, 1}));
}

TEST_CASE("normalization of the reduced affine shape")
{
  /* k u^3 + p u^2 + q u v + r v^2 + s u + w v + m */
  PreWeierstrass pw{Rat(2), Rat(-3), Rat(4), Rat(5), Rat(-6), Rat(7), Rat(-8)};
  WeierstrassCurve wcu = to_weierstrass_form(pw);
  CHECK(wcu.a1 == Rat(4, 5));
  CHECK(wcu.a2 == Rat(3, 5));
  CHECK(wcu.a3 == Rat(-14, 25));
  CHECK(wcu.a4 == Rat(-12, 25));
  CHECK(wcu.a6 == Rat(32, 125));

  CHECK_THROWS_AS(to_weierstrass_form(PreWeierstrass{Rat(0), Rat(1), Rat(1), Rat(1), Rat(1),
                                                     Rat(1), Rat(1)}),
                  std::domain_error);
  CHECK_THROWS_AS(to_weierstrass_form(PreWeierstrass{Rat(1), Rat(1), Rat(1), Rat(0), Rat(1),
                                                     Rat(1), Rat(1)}),
                  std::domain_error);
}

TEST_CASE("flex reduction on a synthetic smooth cubic")
{
  TernaryCubic g = make_cubic(kG2);
  ProjPoint p(-1, 1, 1);
  REQUIRE(g.contains(p));

  ReductionReport rep = reduce_case1(g, p);
  CHECK(rep.reduction_case == 1);
  CHECK(rep.start == p);
  CHECK_FALSE(rep.second.has_value());
  REQUIRE(rep.aux.has_value());
  CHECK(*rep.aux == ProjPoint(-1, 0, 1));
  REQUIRE(rep.tangents.size() == 1);
  CHECK(rep.tangents[0] == ProjLine(V3{1, 0, 1}));
  CHECK(rep.M == mat_of({{{-1, -1, 1}, {0, 1, 0}, {1, 1, 0}}}));
  CHECK(rep.curve == curve_of(0, 3, 0, 4, 2));
  CHECK(curve_invariants(rep.curve).j() == 1728);

  /* frame sends the start point to (0:1:0) ... */
  Mat3<Rat> mr;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) mr(r, c) = Rat(rep.M(r, c));
  Mat3<Rat> inv = inverse(mr);
  std::array<Rat, 3> back{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) back[r] += inv(r, c) * Rat(p.v[c]);
  CHECK(back[0] == 0);
  CHECK(back[1] == 1);
  CHECK(back[2] == 0);

  /* ... and pulls the tangent back to the line T = 0 */
  const V3& l = rep.tangents[0].l;
  for (int col = 0; col < 2; ++col)
    CHECK(l[0] * rep.M(0, col) + l[1] * rep.M(1, col) + l[2] * rep.M(2, col) == 0);
  CHECK(l[0] * rep.M(0, 2) + l[1] * rep.M(1, 2) + l[2] * rep.M(2, 2) != 0);

  CHECK_THROWS_AS(reduce_case2(g, p), std::invalid_argument);
}

TEST_CASE("flex reduction at the point at infinity of a Weierstrass-like cubic")
{
  TernaryCubic g = make_cubic(kG1);
  ReductionReport rep = to_weierstrass(g, ProjPoint(0, 1, 0));
  CHECK(rep.reduction_case == 1);
  CHECK(rep.start == ProjPoint(0, 1, 0));
  REQUIRE(rep.aux.has_value());
  CHECK(*rep.aux == ProjPoint(-1, 1, 0));
  CHECK(rep.M == mat_of({{{-1, 0, 0}, {1, 1, 0}, {0, 0, 1}}}));
  CHECK(rep.curve == curve_of(2, -1, 0, 1, 0));
  CHECK(curve_invariants(rep.curve).j() == 1728);
}

TEST_CASE("tangent-chord reduction delegates when the chain hits a flex")
{
  TernaryCubic g = make_cubic(kG1);
  ProjPoint p(0, 0, 1);
  REQUIRE(g.contains(p));

  ReductionReport rep = to_weierstrass(g, p);
  CHECK(rep.reduction_case == 1);  // finished on the flex path
  CHECK(rep.start == p);
  REQUIRE(rep.second.has_value());
  CHECK(*rep.second == ProjPoint(0, 1, 0));
  CHECK_FALSE(rep.third.has_value());
  REQUIRE(rep.aux.has_value());
  CHECK(*rep.aux == ProjPoint(-1, 1, 0));
  REQUIRE(rep.tangents.size() == 2);
  CHECK(rep.tangents[0] == ProjLine(V3{1, 0, 0}));
  CHECK(rep.tangents[1] == ProjLine(V3{0, 0, 1}));
  CHECK(rep.curve == curve_of(2, -1, 0, 1, 0));
  CHECK(curve_invariants(rep.curve).j() == 1728);
}

TEST_CASE("tangent-chord reduction of the worked instance")
{
  TernaryCubic g = build_gamma(kExample);
  ProjPoint p(-1, 1, 1);

  ReductionReport rep = to_weierstrass(g, p);
  CHECK(rep.reduction_case == 2);
  CHECK(rep.start == p);
  REQUIRE(rep.second.has_value());
  CHECK(*rep.second == ProjPoint(-29, 2, 23));
  REQUIRE(rep.third.has_value());
  CHECK(*rep.third == ProjPoint(-6968, 27569, 22931));
  CHECK_FALSE(rep.aux.has_value());
  REQUIRE(rep.tangents.size() == 2);
  CHECK(rep.tangents[0] == ProjLine(V3{7, -2, 9}));
  CHECK(rep.tangents[1] == ProjLine(V3{155, -133, 207}));
  CHECK(rep.M == mat_of({{{-1, -29, -6968}, {1, 2, 27569}, {1, 23, 22931}}}));

  CHECK(rep.curve == WeierstrassCurve{Rat(-4056), Rat(1314066), Rat(-4840680625LL), Rat(0), Rat(0)});
  CHECK(rep.curve.is_integral());

  CurveInvariants iv = curve_invariants(rep.curve);
  CHECK(iv.c4 == 0);
  CHECK(iv.c6 == Rat(Int("53032356378527625000")));
  CHECK(iv.disc == Rat(Int("-1627564133714791477402872041748046875")));
  CHECK(iv.j() == 0);

  CHECK_THROWS_AS(reduce_case1(g, p), std::invalid_argument);
}

TEST_CASE("reduction rejects singular input points")
{
  TernaryCubic sing = build_gamma({BinaryCubicForm{1, 1, 2, 1}, Rat(3), Rat(1)});
  CHECK_THROWS_AS(to_weierstrass(sing, ProjPoint(0, 0, 1)), std::domain_error);
}

TEST_CASE("singularity decisions")
{
  PellCubeInstance slice{BinaryCubicForm{1, 1, 2, 1}, Rat(3), Rat(1)};
  CHECK(is_singular_curve(slice));
  CHECK(is_singular_curve(slice, ProjPoint(0, 0, 1)));

  CHECK_FALSE(is_singular_curve(kExample));
  CHECK_FALSE(is_singular_curve(kExample, ProjPoint(-1, 1, 1)));

  CHECK_THROWS_AS(is_singular_curve(kExample, ProjPoint(1, 0, 0)), std::invalid_argument);
}
