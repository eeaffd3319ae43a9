// alexinv: invariant factors and higher Alexander polynomials from PD codes.
//
//   alexinv compute --pd "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]" [--format pretty]
//   alexinv batch --input knots.csv [--output out.csv|out.jsonl] [--jobs N]
//   alexinv bench --input knots.csv [--compare]
//   alexinv smith --input matrix.json
//
// Exit status: 0 success, 1 input error, 2 internal error or unresolved
// ambiguity under --policy fast.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "alexinv/alexinv.hpp"

namespace {

enum Exit { kOk = 0, kInputError = 1, kInternalError = 2 };

struct Options {
  std::string pd;
  std::string format = "json";
  std::string policy;  // empty: subcommand default
  unsigned jobs = alexinv::default_jobs();
  std::string input;
  std::string output;
  bool compare = false;
};

int run_compute(const Options& o) {
  alexinv::PDCode pd;
  try {
    pd = alexinv::parse_pd(o.pd);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInputError;
  }
  const auto inv = alexinv::compute_invariants(pd, alexinv::policy_from_string(o.policy));
  if (o.format == "pretty") std::cout << alexinv::to_pretty(inv);
  else std::cout << alexinv::to_json(inv) << '\n';
  if (!inv.ambiguous_phis.empty()) {
    std::cerr << "warning: primary decomposition left unresolved; rerun with --policy fast-with-fallback\n";
    return kInternalError;
  }
  return kOk;
}

int run_batch(const Options& o) {
  const auto rows = alexinv::read_knots(o.input);
  const auto start = std::chrono::steady_clock::now();
  const auto records = alexinv::run_batch(rows, alexinv::policy_from_string(o.policy), o.jobs);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // Output format follows the output extension, or the input's when writing to stdout.
  const bool jsonl = alexinv::is_jsonl_path(o.output.empty() ? o.input : o.output);
  if (o.output.empty()) {
    alexinv::write_batch(records, std::cout, jsonl);
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << o.output << "'\n";
      return kInputError;
    }
    alexinv::write_batch(records, out, jsonl);
  }
  std::cerr << alexinv::summary_line(alexinv::summarize(records, wall)) << '\n';
  return kOk;
}

int run_bench(const Options& o) {
  const auto rows = alexinv::read_knots(o.input);
  const auto policy = alexinv::policy_from_string(o.policy);
  std::cout << alexinv::render_bench(alexinv::run_bench(rows, policy, o.compare));
  return kOk;
}

int run_smith(const Options& o) {
  std::ifstream in(o.input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input file '" << o.input << "'\n";
    return kInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  alexinv::PolyMatrix m;
  try {
    m = alexinv::matrix_from_json(alexinv::parse_exact_json(buf.str()));
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInputError;
  }
  const auto res = alexinv::smith_form(m);
  auto factors = res.invariant_factors();
  if (o.format == "pretty") {
    for (std::size_t i = 0; i < factors.size(); ++i)
      std::cout << "delta_" << i + 1 << " = " << alexinv::to_pretty(factors[i]) << '\n';
    if (factors.empty()) std::cout << "delta_1 = 1\n";
  } else {
    std::cout << "{\"diagonal\":" << alexinv::to_json(res.diagonal) << ",\"delta\":" << alexinv::to_json(factors) << "}\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant factors and higher Alexander polynomials of knots"};
  app.require_subcommand(1);
  Options o;

  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--policy", o.policy, "fast | fast-with-fallback | oracle-only")
        ->check(CLI::IsMember({"fast", "fast-with-fallback", "oracle-only"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));
  };

  auto* compute = app.add_subcommand("compute", "Invariants of one knot");
  compute->add_option("--pd", o.pd, "PD code, e.g. [[1,4,2,5],[3,6,4,1],[5,2,6,3]]")->required();
  add_format(compute);
  add_policy(compute);

  auto* batch = app.add_subcommand("batch", "Invariants of every knot in a CSV or JSON-lines table");
  batch->add_option("--input", o.input, "CSV with name,pd columns, or .jsonl")->required();
  batch->add_option("--output", o.output, "Result file (.csv or .jsonl); stdout if omitted");
  batch->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_policy(batch);

  auto* bench = app.add_subcommand("bench", "Average time per knot grouped by crossing number");
  bench->add_option("--input", o.input, "CSV with name,pd columns, or .jsonl")->required();
  bench->add_flag("--compare", o.compare, "Also time --policy oracle-only and report the speedup");
  add_policy(bench);

  auto* smith = app.add_subcommand("smith", "Smith normal form of a square matrix over Q[t]");
  smith->add_option("--input", o.input, "JSON array of rows of coefficient arrays")->required();
  add_format(smith);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (o.policy.empty()) o.policy = bench->parsed() ? "fast" : "fast-with-fallback";

  try {
    if (compute->parsed()) return run_compute(o);
    if (batch->parsed()) return run_batch(o);
    if (bench->parsed()) return run_bench(o);
    if (smith->parsed()) return run_smith(o);
  } catch (const alexinv::InputError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInputError;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}
