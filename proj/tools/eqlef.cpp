// eqlef: equivariant Lefschetz invariants from chain-level data.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "eqlef/cli.hpp"

namespace {

int emit(const eqlef::cli::CommandOutput &r, const std::string &output_path) {
  if (!r.err.empty()) std::cerr << r.err;
  if (r.code != 0) return r.code;
  if (output_path.empty()) {
    std::cout << r.out;
  } else {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write '" << output_path << "'\n";
      return eqlef::cli::kInvalid;
    }
    f << r.out;
  }
  return r.code;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Equivariant Lefschetz invariants (u, λ, ℓ) and U(Z) classes"};
  app.require_subcommand(1);

  eqlef::cli::Options opt;
  std::string output;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("-v,--verbose", opt.verbose, "extra detail");
  app.add_option("-o,--output", output, "write the result to a file");

  std::string arg;
  auto *cls = app.add_subcommand("class", "U(Z) class of a square integer matrix");
  cls->add_option("matrix", arg, "JSON matrix, e.g. [[0,-1],[1,0]]")->required();
  auto *fac = app.add_subcommand("factor", "factor an integer polynomial over Q");
  fac->add_option("polynomial", arg, "e.g. x^4-1")->required();
  auto *inv = app.add_subcommand("invariants", "compute u, λ, R, L and ℓ for a complex");
  inv->add_option("complex", arg, "complex document path or builtin name")->required();
  auto *rea = app.add_subcommand("realize", "wedge of spheres realizing [a] − [b_prime]");
  rea->add_option("target", arg, R"(JSON target {"a": [[...]], "b_prime": [[...]]} or a path to one)")->required();
  auto *chk = app.add_subcommand("check", "validate a complex document");
  chk->add_option("complex", arg, "complex document path or builtin name")->required();
  auto *ex = app.add_subcommand("example", "report for a builtin example");
  ex->add_option("name", arg, "example1, example2 or example3")->required();

  for (auto *sub : {cls, fac, inv, rea, chk, ex}) {
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("-v,--verbose", opt.verbose, "extra detail");
    sub->add_option("-o,--output", output, "write the result to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : eqlef::cli::kInvalid;
  }

  namespace cli = eqlef::cli;
  if (*cls) return emit(cli::cmd_class(arg, opt), output);
  if (*fac) return emit(cli::cmd_factor(arg, opt), output);
  if (*inv) return emit(cli::cmd_invariants(arg, opt), output);
  if (*chk) return emit(cli::cmd_check(arg, opt), output);
  if (*ex) return emit(cli::cmd_example(arg, opt), output);
  if (*rea) {
    std::string text = arg;
    if (!text.empty() && text.front() != '{') {
      std::ifstream f(arg);
      if (!f) {
        std::cerr << "cannot read '" << arg << "'\n";
        return cli::kInvalid;
      }
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return emit(cli::cmd_realize(text, opt), output);
  }
  return cli::kInternal;
}
