#include <CLI11.hpp>

#include <iostream>

#include "ncalc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ncalc - exact workbench for differential calculi and vector fields over "
               "finite-dimensional algebras"};
  app.require_subcommand(1);

  ncalc::JobSpec job;
  std::string field, out_path, ideal, cartan;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "ground field: Q or Fp:<prime>");
    sub->add_option("--seed", job.seed, "seed for randomized checks")->default_val(0);
    sub->add_option("--format", job.format, "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}))
        ->default_val("human");
    sub->add_option("--out", out_path, "write the report to a file");
    sub->add_option("input", job.inputs, "input file(s)")->required();
  };

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"validate", "check the axioms of an algebra/bimodule/fodc/cartan/braiding document"},
      {"universal", "build and verify the universal calculus of an algebra"},
      {"fodc", "build a quotient calculus from an ideal generator file"},
      {"dual", "compute the module dual (of ker mu, or of a bimodule file)"},
      {"cartan", "build the vector fields of a calculus and check the axioms"},
      {"reconstruct", "attempt to rebuild a calculus from a Cartan pair"},
      {"end-structures", "endomorphism bimodule structures and embeddings"},
      {"kaehler", "the Kaehler calculus of a commutative algebra"},
      {"splitting", "universal decompositions and the intertwining table"},
      {"report", "run the full invariant suite on an algebra"},
  };
  for (const auto& [name, desc] : verbs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub);
    if (name == "fodc") sub->add_option("--ideal", ideal, "generator-set file (default: empty)");
    if (name == "cartan")
      sub->add_option("--fodc", job.fodc_choice, "'universal' or a calculus file")
          ->default_val("universal");
    if (name == "reconstruct")
      sub->add_option("--cartan", cartan, "action-table file (default: the universal pair)");
    if (name == "dual" || name == "cartan")
      sub->add_option("--side", job.side, "right or left")
          ->check(CLI::IsMember({"right", "left"}))
          ->default_val("right");
  }

  CLI11_PARSE(app, argc, argv);

  job.command = app.get_subcommands().front()->get_name();
  if (!field.empty()) job.field = field;
  if (!out_path.empty()) job.out_path = out_path;
  if (!ideal.empty()) job.ideal_path = ideal;
  if (!cartan.empty()) job.cartan_path = cartan;

  return ncalc::run(job, std::cout, std::cerr);
}
