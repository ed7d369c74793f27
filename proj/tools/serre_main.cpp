#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "serre/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Explicit Serre-weight sets and adequacy of finite matrix "
               "groups"};
  app.require_subcommand(1);

  serre::CommandOptions opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json-lines"}))
      ->capture_default_str();
  app.add_option("--cap", opt.cap, "group element cap")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads for set enumeration")
      ->capture_default_str();

  std::string input, which = "explicit", weight_text, a_text, b_text,
              exps_text;
  serre::i64 l = 0, e = 0;
  int f = 0;

  auto* weights = app.add_subcommand(
      "weights", "weight-class table of a representation spec");
  weights->add_option("--input", input, "representation spec file")
      ->required();
  weights->add_option("--which", which, "which explicit set")
      ->check(CLI::IsMember({"bdj", "sch", "explicit", "ghs"}))
      ->capture_default_str();
  weights->add_option("--query", weight_text,
                      "weight (2f integers) to test for membership");

  auto* detset = app.add_subcommand(
      "detset", "classes satisfying the determinant condition");
  detset->add_option("--l", l, "prime l")->required();
  detset->add_option("--f", f, "residue degree f")->required();
  detset->add_option("--exps", exps_text, "f character exponents")->required();
  detset->add_option("--e", e, "ramification index e")->required();

  auto* witness =
      app.add_subcommand("witness", "(J, delta) witness for one weight");
  witness->add_option("--input", input, "representation spec file")
      ->required();
  witness->add_option("--weight", weight_text, "weight (2f integers)")
      ->required();

  auto* equiv = app.add_subcommand("equiv", "Serre-weight equivalence");
  equiv->add_option("--l", l, "prime l")->required();
  equiv->add_option("--f", f, "residue degree f")->required();
  equiv->add_option("--a", a_text, "first weight (2f integers)")->required();
  equiv->add_option("--b", b_text, "second weight (2f integers)")->required();

  auto* adequacy =
      app.add_subcommand("adequacy", "four-condition adequacy report");
  adequacy->add_option("--input", input, "group spec file")->required();

  auto* verify = app.add_subcommand(
      "verify-paper", "regression battery over the published examples");
  (void)verify;

  CLI11_PARSE(app, argc, argv);

  try {
    if (weights->parsed()) {
      std::optional<std::vector<serre::i64>> query;
      if (!weight_text.empty()) query = serre::parse_int_list(weight_text);
      return serre::cmd_weights(input, which, query, opt, std::cout,
                                std::cerr);
    }
    if (detset->parsed())
      return serre::cmd_detset(l, f, serre::parse_int_list(exps_text), e, opt,
                               std::cout, std::cerr);
    if (witness->parsed())
      return serre::cmd_witness(input, serre::parse_int_list(weight_text), opt,
                                std::cout, std::cerr);
    if (equiv->parsed())
      return serre::cmd_equiv(l, f, serre::parse_int_list(a_text),
                              serre::parse_int_list(b_text), std::cout,
                              std::cerr);
    if (adequacy->parsed())
      return serre::cmd_adequacy(input, opt, std::cout, std::cerr);
    if (verify->parsed())
      return serre::cmd_verify_paper(opt, std::cout, std::cerr);
  } catch (const serre::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return serre::exit_code_for(ex);
  }
  return 1;
}
