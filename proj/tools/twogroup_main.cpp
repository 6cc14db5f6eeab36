#include <iostream>

#include "CLI11.hpp"
#include "twogroups/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite 2-group toolkit: validators, improvement, "
               "homomorphism checks and string-diagram proofs"};
  app.require_subcommand(1);

  std::string path, out_path, level = "coherent";
  std::string f_path, c_path, c2_path;
  std::string d1_path, d2_path;
  std::string directive;
  int max_steps = 64;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "run the law validators");
  validate->add_option("path", path, "instance file")->required();
  validate->add_option("--level", level, "monoidal | weak | coherent");

  auto* improve = app.add_subcommand("improve", "equip with an adjoint equivalence");
  improve->add_option("path", path, "instance file")->required();
  improve->add_option("--out", out_path, "output instance file")->required();

  auto* checkhom = app.add_subcommand("check-hom", "validate a homomorphism");
  checkhom->add_option("functor", f_path, "functor file")->required();
  checkhom->add_option("source", c_path, "source instance file")->required();
  checkhom->add_option("target", c2_path, "target instance file")->required();

  auto* prove = app.add_subcommand("prove", "search for a rewrite proof");
  prove->add_option("d1", d1_path, "first diagram file")->required();
  prove->add_option("d2", d2_path, "second diagram file")->required();
  prove->add_option("--max-steps", max_steps, "rule application bound");
  prove->add_option("--out", out_path, "trace output file");

  auto* gen = app.add_subcommand("gen", "write a generated instance file");
  gen->add_option("directive", directive,
                  "group:Z3 | deloop:Z3:1:2 | xmod:Z2:Z2:id:trivial")
      ->required();
  gen->add_option("--out", out_path, "output instance file")->required();
  gen->add_option("--seed", seed, "seed for '?' choices");

  CLI11_PARSE(app, argc, argv);

  using namespace twogroups::cli;
  if (validate->parsed()) return cmd_validate(path, level, std::cout);
  if (improve->parsed()) return cmd_improve(path, out_path, std::cout);
  if (checkhom->parsed())
    return cmd_check_hom(f_path, c_path, c2_path, std::cout);
  if (prove->parsed())
    return cmd_prove(d1_path, d2_path, max_steps, out_path, std::cout);
  if (gen->parsed()) return cmd_gen(directive, out_path, seed, std::cout);
  return kStructural;
}
