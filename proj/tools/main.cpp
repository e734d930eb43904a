// tdual: exact computations for orientifold T-duality on circle bundles.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tdual/commands.hpp"

namespace {

tdual::Document load(const std::string& path) {
  if (path.empty())
    throw tdual::ParseError("this subcommand needs --input FILE");
  std::ifstream in(path);
  if (!in) throw tdual::ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return tdual::Document::parse(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact orientifold T-duality for circle bundles"};
  app.require_subcommand(1);

  std::string input, twist = "0", coeff = "Z";
  std::string complex_name, background_name, triple_name, form_name;
  unsigned long long seed = 1;
  long count = 200;
  bool corrupt = false;

  CLI::App* coh = app.add_subcommand(
      "cohomology", "twisted cohomology of a complex, one line per degree");
  coh->add_option("--input", input, "document file");
  coh->add_option("complex", complex_name, "complex name or catalog:NAME")
      ->required();
  coh->add_option("twist", twist, "twist name, or 0");
  coh->add_option("coeff", coeff, "Z, Q, or Z/m");

  CLI::App* td = app.add_subcommand(
      "tdual", "the T-dual background and the T1-T5 report");
  td->add_option("--input", input, "document file");
  td->add_option("background", background_name, "background name")->required();

  CLI::App* kr = app.add_subcommand("kr", "KR groups for n = 0..3");
  kr->add_option("--input", input, "document file");
  kr->add_option("complex", complex_name, "complex name or catalog:NAME")
      ->required();
  kr->add_option("twist", twist, "twist name, or 0");

  CLI::App* ax = app.add_subcommand(
      "axioms", "seeded random verification of the algebroid identities");
  ax->add_option("--seed", seed, "random seed");
  ax->add_option("--count", count, "number of instances");
  ax->add_flag("--corrupt", corrupt,
               "deliberately break the bracket (reports failures)");

  CLI::App* tr = app.add_subcommand(
      "transform", "apply the duality transform to an invariant form");
  tr->add_option("--input", input, "document file");
  tr->add_option("triple", triple_name, "differential triple name")
      ->required();
  tr->add_option("form", form_name, "invariant form name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coh) {
      tdual::Document doc = load(input);
      return tdual::cmd_cohomology(doc, complex_name, twist, coeff,
                                   std::cout);
    }
    if (*td) {
      tdual::Document doc = load(input);
      return tdual::cmd_tdual(doc, background_name, std::cout);
    }
    if (*kr) {
      tdual::Document doc = load(input);
      return tdual::cmd_kr(doc, complex_name, twist, std::cout);
    }
    if (*ax) return tdual::cmd_axioms(seed, count, corrupt, std::cout);
    if (*tr) {
      tdual::Document doc = load(input);
      return tdual::cmd_transform(doc, triple_name, form_name, std::cout);
    }
  } catch (const tdual::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
