#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cubix/cli.hpp"

namespace {

using cubix::io::Json;

Json read_request(const std::string& path)
{
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    ss << in.rdbuf();
  }
  return Json::parse(ss.str());
}

void emit(const Json& out, bool pretty) { std::cout << (pretty ? out.dump(2) : out.dump()) << "\n"; }

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact arithmetic for binary cubic forms, cubic field elements and the\n"
               "reduction of their trace/norm slice curves to Weierstrass form"};
  app.require_subcommand(1);

  std::string input;
  bool pretty = false;
  long trials = 200;
  long long seed = 1;

  struct SubSpec {
    const char* name;
    const char* desc;
  };
  for (SubSpec s : {SubSpec{"form", "discriminant, covariants, syzygy and irreducibility"},
                    SubSpec{"elem", "arithmetic of cubic field elements via 3x3 matrices"},
                    SubSpec{"compose", "composition of quadratic forms, triples and norm pairs"},
                    SubSpec{"pell", "orbit of a norm-one unit on a trace/norm slice"},
                    SubSpec{"curve", "reduce a slice cubic to Weierstrass form"}}) {
    CLI::App* sub = app.add_subcommand(s.name, s.desc);
    sub->add_option("--input,-i", input, "JSON request file ('-' or omitted reads stdin)");
    sub->add_flag("--pretty", pretty, "indent the JSON response");
  }
  CLI::App* sc = app.add_subcommand("selfcheck", "run the randomized exact-identity suites");
  sc->add_option("--trials", trials, "trials per suite");
  sc->add_option("--seed", seed, "RNG seed");
  sc->add_flag("--pretty", pretty, "indent the JSON response");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().at(0)->get_name();
  try {
    if (name == "selfcheck") {
      Json req;
      req["trials"] = std::to_string(trials);
      req["rng_seed"] = std::to_string(seed);
      Json out = cubix::cli::run_selfcheck(req);
      emit(out, pretty);
      return out["all_passed"].get<bool>() ? 0 : 1;
    }
    Json req = read_request(input);
    Json out;
    if (name == "form")
      out = cubix::cli::run_form(req);
    else if (name == "elem")
      out = cubix::cli::run_elem(req);
    else if (name == "compose")
      out = cubix::cli::run_compose(req);
    else if (name == "pell")
      out = cubix::cli::run_pell(req);
    else
      out = cubix::cli::run_curve(req);
    emit(out, pretty);
    return 0;
  } catch (const Json::exception& e) {
    std::cerr << "request error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "request error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
}
