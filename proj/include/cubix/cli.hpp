#pragma once

#include <string>
#include <vector>

#include "io.hpp"
#include "selfcheck.hpp"
#include "surface.hpp"
#include "weierstrass.hpp"

/*
 * Subcommand bodies: JSON request in, JSON response out, exceptions for
 * failure (std::invalid_argument: malformed request, std::domain_error:
 * well-formed but mathematically impossible). The binary maps these to
 * exit codes 2 and 1.
 */
namespace cubix::cli {

using io::Json;

inline std::string str_from(const Json& j, const char* what)
{
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

inline Json run_form(const Json& req)
{
  BinaryCubicForm f = io::form_from(io::field(req, "form"));
  Json out;
  out["disc"] = io::jint(f.discriminant());
  out["hessian"] = io::jquad(f.hessian());
  out["jacobian"] = io::jform(f.jacobian());
  out["syzygy_ok"] = f.syzygy_check();
  out["irreducible"] = f.is_irreducible();
  return out;
}

inline Json run_elem(const Json& req)
{
  BinaryCubicForm f = io::form_from(io::field(req, "form"));
  std::string op = str_from(io::field(req, "op"), "op");
  const Json& operands = io::field(req, "operands");
  if (!operands.is_array() || operands.empty())
    throw std::invalid_argument("operands: expected a non-empty array");
  auto elem_at = [&](std::size_t i) {
    if (operands.size() <= i) throw std::invalid_argument("missing operand");
    auto [u, x, y] = io::coords_from(operands[i]);
    return CubicElement{f, u, x, y};
  };

  Json out;
  if (op == "mul")
    out["result"] = io::jcoords(multiply(elem_at(0), elem_at(1)));
  else if (op == "add")
    out["result"] = io::jcoords(add(elem_at(0), elem_at(1)));
  else if (op == "inv")
    out["result"] = io::jcoords(inverse(elem_at(0)));
  else if (op == "pow") {
    Int k = io::int_from(io::field(req, "k"));
    if (k > 4096 || k < -4096) throw std::invalid_argument("exponent out of supported range");
    out["result"] = io::jcoords(power(elem_at(0), k.convert_to<long>()));
  } else if (op == "trace")
    out["result"] = io::jrat(trace(elem_at(0)));
  else if (op == "norm")
    out["result"] = io::jrat(norm(elem_at(0)));
  else if (op == "matrix")
    out["result"] = io::jmat_rat(to_matrix(elem_at(0)));
  else
    throw std::invalid_argument("unknown element operation: " + op);
  return out;
}

inline Json run_compose(const Json& req)
{
  std::string law = "gauss";
  if (const Json* l = io::opt_field(req, "law")) law = str_from(*l, "law");

  Json out;
  if (law == "gauss") {
    quad::GaussComposition g = quad::gauss_compose(io::quad_from(io::field(req, "q1")),
                                                   io::quad_from(io::field(req, "q2")));
    return io::jcomposition(g);
  }
  if (law == "brahmagupta") {
    Int d = io::int_from(io::field(req, "d"));
    const Json &p1 = io::field(req, "p1"), &p2 = io::field(req, "p2");
    io::expect_array(p1, 2, "p1");
    io::expect_array(p2, 2, "p2");
    auto [x3, y3] = quad::brahmagupta_compose(io::int_from(p1[0]), io::int_from(p1[1]),
                                              io::int_from(p2[0]), io::int_from(p2[1]), d);
    out["result"] = Json::array({io::jint(x3), io::jint(y3)});
    return out;
  }
  if (law == "pythagorean") {
    const Json &t1 = io::field(req, "t1"), &t2 = io::field(req, "t2");
    io::expect_array(t1, 3, "t1");
    io::expect_array(t2, 3, "t2");
    quad::Triple a{io::int_from(t1[0]), io::int_from(t1[1]), io::int_from(t1[2])};
    quad::Triple b{io::int_from(t2[0]), io::int_from(t2[1]), io::int_from(t2[2])};
    quad::Triple c = quad::pythagorean_compose(a, b);
    out["result"] = Json::array({io::jint(c.x), io::jint(c.y), io::jint(c.z)});
    return out;
  }
  throw std::invalid_argument("unknown composition law: " + law);
}

inline Json run_pell(const Json& req)
{
  BinaryCubicForm f;
  if (const Json* cn = io::opt_field(req, "carmichael_n"))
    f = {Int(1), Int(0), Int(0), -io::int_from(*cn)};
  else
    f = io::form_from(io::field(req, "form"));

  auto [u, x, y] = io::coords_from(io::field(req, "seed"));
  Int count = io::int_from(io::field(req, "count"));
  if (count <= 0 || count > 100000) throw std::invalid_argument("count out of range");

  std::vector<CubicElement> orb = orbit(CubicElement{f, u, x, y}, count.convert_to<int>());
  Json arr = Json::array();
  for (const CubicElement& e : orb) arr.push_back(io::jcoords(e));
  Json out;
  out["form"] = io::jform(f);
  out["orbit"] = arr;
  return out;
}

inline Json run_curve(const Json& req)
{
  BinaryCubicForm f = io::form_from(io::field(req, "form"));
  Rat t = io::rat_from(io::field(req, "t"));
  Rat n = io::rat_from(io::field(req, "n"));
  const Json& pt = io::field(req, "point");
  io::expect_array(pt, 2, "point");

  PellCubeInstance inst{f, t, n};
  if (inst.is_singular_slice()) throw std::domain_error("singular slice: t^3 = 27 n");
  TernaryCubic g = build_gamma(inst);
  ProjPoint p = ProjPoint::from_rationals(io::rat_from(pt[0]), io::rat_from(pt[1]), Rat(1));
  return io::jreduction(to_weierstrass(g, p));
}

inline Json run_selfcheck(const Json& req)
{
  Int trials = 200, seed = 1;
  if (const Json* t = io::opt_field(req, "trials")) trials = io::int_from(*t);
  if (const Json* s = io::opt_field(req, "rng_seed")) seed = io::int_from(*s);
  if (trials < 0 || trials > 10000000) throw std::invalid_argument("trials out of range");
  if (seed < 0) throw std::invalid_argument("rng_seed must be non-negative");

  SelfCheckReport rep =
      self_check(trials.convert_to<long>(), seed.convert_to<std::uint64_t>());
  Json suites = Json::array();
  for (const SuiteResult& s : rep.suites) {
    Json row;
    row["name"] = s.name;
    row["trials"] = std::to_string(s.trials);
    row["passed"] = std::to_string(s.passed);
    suites.push_back(row);
  }
  Json out;
  out["trials"] = io::jint(trials);
  out["rng_seed"] = io::jint(seed);
  out["suites"] = suites;
  out["all_passed"] = rep.all_passed;
  return out;
}

}  // namespace cubix::cli
