#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cubic_form.hpp"
#include "element.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "projective.hpp"
#include "quad.hpp"
#include "weierstrass.hpp"

/*
 * JSON bridge. Every integer and rational crosses the boundary as a decimal
 * string ("123", "-7/3") so that consumers never truncate to machine words;
 * ordered_json keeps emission deterministic.
 */
namespace cubix::io {

using Json = nlohmann::ordered_json;

inline Json jint(const Int& v) { return to_string(v); }
inline Json jrat(const Rat& v) { return to_string(v); }

inline const Json& field(const Json& j, const char* key)
{
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + key);
  return *it;
}

inline const Json* opt_field(const Json& j, const char* key)
{
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline void expect_array(const Json& j, std::size_t n, const char* what)
{
  if (!j.is_array() || j.size() != n)
    throw std::invalid_argument(std::string(what) + ": expected an array of " + std::to_string(n));
}

inline Int int_from(const Json& j)
{
  if (!j.is_string()) throw std::invalid_argument("integers must be decimal strings");
  return parse_int(j.get<std::string>());
}

inline Rat rat_from(const Json& j)
{
  if (!j.is_string())
    throw std::invalid_argument("rationals must be strings of the shape \"p\" or \"p/q\"");
  return parse_rat(j.get<std::string>());
}

inline Json jform(const BinaryCubicForm& f)
{
  return Json::array({jint(f.a), jint(f.b), jint(f.c), jint(f.d)});
}

inline BinaryCubicForm form_from(const Json& j)
{
  expect_array(j, 4, "binary cubic form");
  return {int_from(j[0]), int_from(j[1]), int_from(j[2]), int_from(j[3])};
}

inline Json jquad(const QuadForm& q) { return Json::array({jint(q.A), jint(q.B), jint(q.C)}); }

inline QuadForm quad_from(const Json& j)
{
  expect_array(j, 3, "binary quadratic form");
  return {int_from(j[0]), int_from(j[1]), int_from(j[2])};
}

/* element coordinates (u, x, y) in the 1, rho, omega basis */
inline Json jcoords(const CubicElement& e)
{
  return Json::array({jrat(e.u), jrat(e.x), jrat(e.y)});
}

inline std::array<Rat, 3> coords_from(const Json& j)
{
  expect_array(j, 3, "element coordinates");
  return {rat_from(j[0]), rat_from(j[1]), rat_from(j[2])};
}

inline Json jpoint(const ProjPoint& p)
{
  return Json::array({jint(p.v[0]), jint(p.v[1]), jint(p.v[2])});
}

inline ProjPoint point_from(const Json& j)
{
  expect_array(j, 3, "projective point");
  return ProjPoint(V3{int_from(j[0]), int_from(j[1]), int_from(j[2])});
}

inline Json jline(const ProjLine& l)
{
  return Json::array({jint(l.l[0]), jint(l.l[1]), jint(l.l[2])});
}

inline Json jcurve(const WeierstrassCurve& w)
{
  return Json::array({jrat(w.a1), jrat(w.a2), jrat(w.a3), jrat(w.a4), jrat(w.a6)});
}

inline WeierstrassCurve curve_from(const Json& j)
{
  expect_array(j, 5, "weierstrass coefficients");
  return {rat_from(j[0]), rat_from(j[1]), rat_from(j[2]), rat_from(j[3]), rat_from(j[4])};
}

inline Json jmat(const Mat3<Int>& m)
{
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(Json::array({jint(m(r, 0)), jint(m(r, 1)), jint(m(r, 2))}));
  return rows;
}

inline Json jmat_rat(const Mat3<Rat>& m)
{
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(Json::array({jrat(m(r, 0)), jrat(m(r, 1)), jrat(m(r, 2))}));
  return rows;
}

inline Json jinvariants(const CurveInvariants& iv)
{
  Json out;
  out["c4"] = jrat(iv.c4);
  out["c6"] = jrat(iv.c6);
  out["disc"] = jrat(iv.disc);
  out["j"] = iv.disc == 0 ? Json() : jrat(iv.j());
  return out;
}

inline Json jcomposition(const quad::GaussComposition& g)
{
  Json bilinear;
  bilinear["u"] = Json::array({jint(g.u_coeffs[0]), jint(g.u_coeffs[1]), jint(g.u_coeffs[2]),
                               jint(g.u_coeffs[3])});
  bilinear["y"] = Json::array({jint(g.y_coeffs[0]), jint(g.y_coeffs[1]), jint(g.y_coeffs[2]),
                               jint(g.y_coeffs[3])});
  Json out;
  out["q3"] = jquad(g.q3);
  out["bilinear"] = bilinear;
  return out;
}

inline Json jreduction(const ReductionReport& rep)
{
  Json out;
  out["case"] = std::to_string(rep.reduction_case);
  Json tans = Json::array();
  for (const ProjLine& l : rep.tangents) tans.push_back(jline(l));
  out["tangents"] = tans;
  out["P"] = jpoint(rep.start);
  if (rep.second) out["Q"] = jpoint(*rep.second);
  if (rep.third) out["R"] = jpoint(*rep.third);
  if (rep.aux) out["aux"] = jpoint(*rep.aux);
  out["M"] = jmat(rep.M);
  out["weierstrass"] = jcurve(rep.curve);
  out["invariants"] = jinvariants(curve_invariants(rep.curve));
  return out;
}

}  // namespace cubix::io
