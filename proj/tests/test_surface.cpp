#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

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

}  // namespace

TEST_CASE("trace-norm slice: every element gives a surface point and back")
{
  TestRng rng(61);
  for (int i = 0; i < 200; ++i) {
    BinaryCubicForm f{rng.pick(-8, 8), rng.pick(-8, 8), rng.pick(-8, 8), rng.pick(-8, 8)};
    CubicElement e{f, Rat(rng.pick(-20, 20)), Rat(rng.pick(-20, 20)), Rat(rng.pick(-20, 20))};

    SurfacePoint sp = point_from_element(e);
    CHECK(sp.t == trace(e));
    CHECK(sp.n == norm(e));

    PellCubeInstance inst{f, sp.t, sp.n};
    CHECK(surface_eval(inst, sp.x, sp.y) == 0);
    CHECK(element_from_point(inst, sp.x, sp.y) == e);
  }
}

TEST_CASE("points off the surface are rejected")
{
  PellCubeInstance inst{BinaryCubicForm{1, 1, 2, 1}, Rat(0), Rat(1)};
  REQUIRE(surface_eval(inst, Rat(-1), Rat(1)) == 0);
  CHECK(element_from_point(inst, Rat(-1), Rat(1)) ==
        CubicElement{BinaryCubicForm{1, 1, 2, 1}, Rat(1), Rat(-1), Rat(1)});
  CHECK_THROWS_AS(element_from_point(inst, Rat(0), Rat(1)), std::domain_error);
  CHECK_THROWS_AS(element_from_point(inst, Rat(2), Rat(-3)), std::domain_error);
}

TEST_CASE("norm-one orbit of the cube-root ring of 2")
{
  BinaryCubicForm f{1, 0, 0, -2};
  CubicElement seed{f, Rat(-1), Rat(1), Rat(0)};
  REQUIRE(norm(seed) == 1);

  std::vector<CubicElement> orb = orbit(seed, 8);
  REQUIRE(orb.size() == 8);

  std::vector<std::array<long, 3>> expect = {
      {-1, 1, 0},  {1, -2, 1},   {1, 3, -3},    {-7, -2, 6},
      {19, -5, -8}, {-35, 24, 3}, {41, -59, 21}, {1, 100, -80},
  };
  std::set<std::array<std::string, 3>> seen;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    CHECK(orb[i].u == Rat(expect[i][0]));
    CHECK(orb[i].x == Rat(expect[i][1]));
    CHECK(orb[i].y == Rat(expect[i][2]));
    CHECK(norm(orb[i]) == 1);
    CHECK(carmichael_eval(2, Int(expect[i][0]), Int(expect[i][1]), Int(expect[i][2])) == 1);
    seen.insert({to_string(orb[i].u), to_string(orb[i].x), to_string(orb[i].y)});
  }
  CHECK(seen.size() == 8);  // all points distinct
}

TEST_CASE("orbit input validation")
{
  BinaryCubicForm f{1, 0, 0, -2};
  CubicElement seed{f, Rat(-1), Rat(1), Rat(0)};
  CHECK_THROWS_AS(orbit(seed, 0), std::invalid_argument);
  CHECK_THROWS_AS(orbit(seed, -3), std::invalid_argument);

  CubicElement norm3{f, Rat(1), Rat(1), Rat(0)};  // norm 3
  REQUIRE(norm(norm3) == 3);
  CHECK_THROWS_AS(orbit(norm3, 4), std::invalid_argument);

  CHECK_THROWS_AS(orbit(CubicElement::one(f), 4), std::invalid_argument);
}

TEST_CASE("carmichael norm form equals the element norm on (1,0,0,-n)")
{
  TestRng rng(67);
  for (int i = 0; i < 150; ++i) {
    Int n = rng.pick(-10, 10);
    BinaryCubicForm f{Int(1), Int(0), Int(0), -n};
    Int u = rng.pick(-20, 20), x = rng.pick(-20, 20), y = rng.pick(-20, 20);
    CubicElement e{f, Rat(u), Rat(x), Rat(y)};
    CHECK(Rat(carmichael_eval(n, u, x, y)) == norm(e));
  }
}

TEST_CASE("singular slices satisfy t^3 = 27 n")
{
  CHECK(PellCubeInstance{BinaryCubicForm{1, 1, 2, 1}, Rat(3), Rat(1)}.is_singular_slice());
  CHECK(PellCubeInstance{BinaryCubicForm{1, 1, 2, 1}, Rat(0), Rat(0)}.is_singular_slice());
  CHECK(PellCubeInstance{BinaryCubicForm{1, 0, 0, -2}, Rat(1, 2), Rat(1, 216)}.is_singular_slice());
  CHECK_FALSE(PellCubeInstance{BinaryCubicForm{1, 1, 2, 1}, Rat(0), Rat(1)}.is_singular_slice());
  CHECK_FALSE(PellCubeInstance{BinaryCubicForm{1, 1, 2, 1}, Rat(3), Rat(2)}.is_singular_slice());
}

TEST_CASE("surface equation ties trace and norm to the covariants")
{
  /* t^3 - 3 t Q(x,y) + F(x,y) = 27 n on coordinates coming from an element */
  TestRng rng(71);
  for (int i = 0; i < 100; ++i) {
    BinaryCubicForm f{rng.pick(-6, 6), rng.pick(-6, 6), rng.pick(-6, 6), rng.pick(-6, 6)};
    CubicElement e{f, Rat(rng.pick(-15, 15)), Rat(rng.pick(-15, 15)), Rat(rng.pick(-15, 15))};
    Rat t = trace(e), n = norm(e);
    Rat q = Rat(f.hessian().eval(num(e.x), num(e.y)));
    Rat fv = Rat(f.jacobian().evaluate(num(e.x), num(e.y)));
    CHECK(t * t * t - 3 * t * q + fv == 27 * n);
  }
}
