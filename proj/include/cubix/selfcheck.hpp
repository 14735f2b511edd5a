#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubic_form.hpp"
#include "element.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "surface.hpp"

namespace cubix {

/*
 * Deterministic value source for the identity suites: mt19937_64 raw output
 * reduced by hand so the same seed yields the same report on every platform.
 */
struct CheckRng {
  std::mt19937_64 eng;

  explicit CheckRng(std::uint64_t seed) : eng(seed) {}

  Int pick(long lo, long hi)
  {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return Int(lo + static_cast<long>(eng() % span));
  }
};

struct SuiteResult {
  std::string name;
  long trials = 0;
  long passed = 0;

  bool ok() const { return passed == trials; }
};

struct SelfCheckReport {
  std::vector<SuiteResult> suites;
  bool all_passed = true;
};

/*
 * Randomized identity suites over exact values:
 *   syzygy            F^2 + 27 D C^2 = 4 Q^3 for random forms
 *   commutativity     products commute and agree with matrix products
 *   norm-mult         det is multiplicative
 *   trace-norm-slice  t^3 - 3 t Q(x,y) + F(x,y) = 27 n with t, n off the matrix
 *   factorization     the 3x6 factor identities of the product
 */
inline SelfCheckReport self_check(long trials, std::uint64_t seed)
{
  if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
  CheckRng rng(seed);
  SelfCheckReport rep;

  auto random_form = [&](long bound) {
    return BinaryCubicForm{rng.pick(-bound, bound), rng.pick(-bound, bound),
                           rng.pick(-bound, bound), rng.pick(-bound, bound)};
  };
  auto random_elem = [&](const BinaryCubicForm& f, long bound) {
    return CubicElement{f, Rat(rng.pick(-bound, bound)), Rat(rng.pick(-bound, bound)),
                        Rat(rng.pick(-bound, bound))};
  };
  auto run = [&](const char* name, auto&& trial) {
    SuiteResult res;
    res.name = name;
    res.trials = trials;
    for (long i = 0; i < trials; ++i)
      if (trial()) ++res.passed;
    rep.all_passed = rep.all_passed && res.ok();
    rep.suites.push_back(std::move(res));
  };

  run("syzygy", [&] { return random_form(20).syzygy_check(); });

  run("commutativity", [&] {
    BinaryCubicForm f = random_form(50);
    CubicElement e1 = random_elem(f, 50), e2 = random_elem(f, 50);
    CubicElement prod = multiply(e1, e2);
    return prod == multiply(e2, e1) && to_matrix(prod) == to_matrix(e1) * to_matrix(e2);
  });

  run("norm-mult", [&] {
    BinaryCubicForm f = random_form(50);
    CubicElement e1 = random_elem(f, 50), e2 = random_elem(f, 50);
    return norm(multiply(e1, e2)) == norm(e1) * norm(e2);
  });

  run("trace-norm-slice", [&] {
    BinaryCubicForm f = random_form(50);
    CubicElement e = random_elem(f, 50);
    PellCubeInstance inst{f, trace(e), norm(e)};
    return surface_eval(inst, e.x, e.y) == 0;
  });

  run("factorization", [&] {
    BinaryCubicForm f = random_form(50);
    return factor_check(random_elem(f, 50), random_elem(f, 50));
  });

  return rep;
}

}  // namespace cubix
