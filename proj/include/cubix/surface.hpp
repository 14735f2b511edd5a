#pragma once

#include <stdexcept>
#include <vector>

#include "cubic_form.hpp"
#include "element.hpp"
#include "numeric.hpp"

namespace cubix {

/*
 * Fixed-trace, fixed-norm slice of the norm-form equation. In the variables
 * (t, x, y) with t the trace, elements of trace t and norm n correspond to
 * points of
 *     t^3 - 3 t Q(x, y) + F(x, y) = 27 n
 * where Q and F are the Hessian and Jacobian covariants of the form.
 * The cubic curve in (x, y) is singular exactly when t^3 = 27 n.
 */
struct PellCubeInstance {
  BinaryCubicForm form;
  Rat t, n;

  bool is_singular_slice() const { return t * t * t == 27 * n; }
};

inline Rat surface_eval(const PellCubeInstance& inst, const Rat& x, const Rat& y)
{
  QuadForm h = inst.form.hessian();
  BinaryCubicForm f = inst.form.jacobian();
  return inst.t * inst.t * inst.t - 3 * inst.t * h.eval(x, y) + f.evaluate(x, y) - 27 * inst.n;
}

/* Inverts the trace formula: u = (t + b x + 2 c y) / 3. */
inline CubicElement element_from_point(const PellCubeInstance& inst, const Rat& x, const Rat& y)
{
  if (surface_eval(inst, x, y) != 0)
    throw std::domain_error("point does not lie on the trace/norm surface");
  Rat u = (inst.t + Rat(inst.form.b) * x + 2 * Rat(inst.form.c) * y) / 3;
  return {inst.form, u, x, y};
}

struct SurfacePoint {
  Rat t, n, x, y;
};

inline SurfacePoint point_from_element(const CubicElement& e)
{
  return {trace(e), norm(e), e.x, e.y};
}

/*
 * Powers seed^1 .. seed^count of a norm-one seed: every member is again a
 * norm-one solution, giving new points of the n = 1 norm-form equation.
 * Distinctness is checked by the caller; it is expected (and reported)
 * for irreducible forms of negative discriminant, not proven here.
 */
inline std::vector<CubicElement> orbit(const CubicElement& seed, int count)
{
  if (count <= 0) throw std::invalid_argument("orbit length must be positive");
  if (norm(seed) != 1) throw std::invalid_argument("orbit seed must have norm 1");
  if (seed == CubicElement::one(seed.form))
    throw std::invalid_argument("orbit seed must differ from the identity");
  std::vector<CubicElement> out;
  out.reserve(static_cast<std::size_t>(count));
  CubicElement cur = seed;
  for (int i = 0; i < count; ++i) {
    out.push_back(cur);
    if (i + 1 < count) cur = multiply(cur, seed);
  }
  return out;
}

/* u^3 + n x^3 + n^2 y^3 - 3 n u x y: the norm form of (1, 0, 0, -n). */
inline Int carmichael_eval(const Int& n, const Int& u, const Int& x, const Int& y)
{
  return u * u * u + n * x * x * x + n * n * y * y * y - 3 * n * u * x * y;
}

}  // namespace cubix
