#pragma once

/*
 * Exact arithmetic for binary cubic forms and the cubic fields they cut out:
 * covariants and the degree-six syzygy, a faithful 3x3 matrix model of field
 * elements, composition laws for binary quadratic forms, trace/norm slice
 * surfaces with their unit orbits, and the reduction of the slice cubic to
 * Weierstrass form. JSON plumbing lives in io.hpp / cli.hpp, kept out of
 * this umbrella so library users do not pay for it.
 */

#include "numeric.hpp"
#include "matrix.hpp"
#include "binpoly.hpp"
#include "mpoly.hpp"
#include "quad.hpp"
#include "roots.hpp"
#include "cubic_form.hpp"
#include "element.hpp"
#include "surface.hpp"
#include "projective.hpp"
#include "weierstrass.hpp"
#include "selfcheck.hpp"
