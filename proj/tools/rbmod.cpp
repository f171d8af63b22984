// rbmod: exact classification and verification of finite-dimensional
// modules over polynomial Rota-Baxter algebras of weight 1.

#include "rbmod/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

using rbmod::cli::Json;

struct Options {
  std::string input;
  std::string output;
  std::string flavor;
  std::string variant;
  unsigned truncation = 0;
  std::string A, B, op;
  std::string family, weight, b, b1, b2;
  long s = -1, t = -1, n = -1;
  bool spot = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-i,--input", o.input, "JSON input file, or an inline JSON document");
  sub->add_option("-o,--output", o.output, "write the JSON report here instead of stdout");
  sub->add_option("--truncation", o.truncation,
                  "degree bound N for identity checks (default: $RBMOD_TRUNCATION or 12)")
      ->check(CLI::PositiveNumber);
}

void add_module(CLI::App* sub, Options& o) {
  sub->add_option("--flavor", o.flavor, "xkx, kxp1, kxp2, kxp3 or kxp4");
  sub->add_option("--A", o.A, "matrix of x as JSON, e.g. '[[\"1\",\"0\"],[\"0\",\"1/2\"]]'");
  sub->add_option("--B", o.B, "matrix of p as JSON");
}

void add_block(CLI::App* sub, Options& o) {
  sub->add_option("--s", o.s, "size of the left Jordan block")->check(CLI::PositiveNumber);
  sub->add_option("--t", o.t, "size of the right Jordan block")->check(CLI::PositiveNumber);
  sub->add_option("--b1", o.b1, "eigenvalue of J_s, e.g. -1 or 1/2");
  sub->add_option("--b2", o.b2, "eigenvalue of J_t");
}

Json inline_json(const std::string& text, const char* flag) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

rbmod::cli::JobSpec to_job(rbmod::cli::Command c, const Options& o) {
  rbmod::cli::JobSpec job;
  job.command = c;
  job.input = o.input;
  if (!o.output.empty()) job.output_path = o.output;
  if (o.truncation > 0) job.truncation = o.truncation;
  if (!o.flavor.empty()) job.params["flavor"] = o.flavor;
  if (!o.variant.empty()) job.params["variant"] = o.variant;
  if (!o.A.empty()) job.params["A"] = inline_json(o.A, "--A");
  if (!o.B.empty()) job.params["B"] = inline_json(o.B, "--B");
  if (!o.op.empty()) job.params["operator"] = inline_json(o.op, "--operator");
  if (!o.family.empty()) job.params["family"] = o.family;
  if (!o.weight.empty()) job.params["weight"] = o.weight;
  if (!o.b.empty()) job.params["b"] = o.b;
  if (!o.b1.empty()) job.params["b1"] = o.b1;
  if (!o.b2.empty()) job.params["b2"] = o.b2;
  if (o.s >= 0) job.params["s"] = o.s;
  if (o.t >= 0) job.params["t"] = o.t;
  if (o.n >= 0) job.params["n"] = o.n;
  if (o.spot) job.params["spot"] = true;
  return job;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of modules over polynomial Rota-Baxter algebras"};
  app.require_subcommand(1);
  app.footer(
      "Exit status: 0 success/true, 1 checked and false, 2 input error, "
      "3 irrational spectrum or inconclusive.\n"
      "Matrices are JSON arrays of rows of strings (\"3\", \"-1/2\").");

  Options o;
  std::map<CLI::App*, rbmod::cli::Command> commands;
  auto sub = [&](const char* name, const char* help, rbmod::cli::Command c) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, o);
    commands[s] = c;
    return s;
  };
  using rbmod::cli::Command;

  auto* verify = sub("verify", "check the module equations and the module axiom for (A, B)",
                     Command::Verify);
  add_module(verify, o);
  verify->add_option("--b", o.b, "constant b of P1 (flavor kxp1, default 1)");

  auto* classify = sub("classify", "solution space of A for a given B", Command::Classify);
  add_module(classify, o);
  classify->add_option("--variant", o.variant, "i14 or i23 (k[x] flavors)");

  auto* block = sub("solve-block", "free cells of X J_t(b2) = -J_s(b1) X J_t(b2)", Command::SolveBlock);
  add_block(block, o);

  auto* analyze = sub("analyze", "submodules, irreducibility and indecomposability of (A, B)",
                      Command::Analyze);
  add_module(analyze, o);

  auto* cat = sub("catalog", "worked families for small dimensions", Command::Catalog);
  cat->add_option("--n", o.n, "dimension 1, 2 or 3");
  cat->add_option("--flavor", o.flavor, "flavor (default xkx)");
  cat->add_flag("--spot", o.spot, "list the larger worked x k[x] examples instead");

  auto* compare = sub("oracle-compare", "closed form against the Kronecker kernel oracle",
                      Command::OracleCompare);
  add_module(compare, o);
  add_block(compare, o);
  compare->add_option("--variant", o.variant, "i14 or i23 (k[x] flavors)");

  auto* rb = sub("rb-check", "check the Rota-Baxter identity on monomials up to degree N",
                 Command::RbCheck);
  rb->add_option("--operator", o.op, "operator as JSON, e.g. '{\"family\":\"P2\",\"weight\":\"1\"}'");
  rb->add_option("--family", o.family, "P1, P2, P3, P4 or XKx");
  rb->add_option("--weight", o.weight, "nonzero weight (default 1)");
  rb->add_option("--b", o.b, "constant b of P1");

  sub("batch", "run a JSON list of jobs, reports in input order", Command::Batch);

  try {
    app.parse(argc, argv);
    for (auto& [s, c] : commands) {
      if (s->parsed()) return rbmod::cli::run(to_job(c, o), std::cout, std::cerr);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rbmod::cli::kInputError;
  }
  return rbmod::cli::kInputError;
}
