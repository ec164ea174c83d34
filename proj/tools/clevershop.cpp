// Copyright 2026 The Clevershop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// clevershop: solve, generate, check and bench Clever Shopper instances.
//
// Exit codes: 0 solved / within budget, 1 over budget or answer "no",
// 2 input or validation error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clevershop/bench.hpp"
#include "clevershop/error.hpp"
#include "clevershop/io.hpp"
#include "clevershop/reductions.hpp"

namespace cs = clevershop;

namespace {

enum Exit : int { kOk = 0, kNo = 1, kInput = 2, kResource = 3 };

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputFailure("cannot write " + path);
}

struct SolveArgs {
  std::string input, algo, output;
  std::optional<cs::Money> budget;
  bool seedless = false;
};

int run_solve(const SolveArgs& a) {
  const cs::Instance inst = cs::parse_instance(read_file(a.input));
  const cs::Algorithm algo = cs::parse_algorithm(a.algo);
  const std::optional<cs::Money> budget = a.budget ? a.budget : inst.budget();
  const cs::AlgoOutcome out = cs::run_algorithm(algo, inst, budget);
  if (!out.result) {
    std::cout << "answer no (no assignment of cost <= " << *budget << ")\n";
    return kNo;
  }
  const cs::SolveResult& r = *out.result;
  std::cerr << "algo " << a.algo << " cost " << r.total_cost << " discount " << r.total_discount
            << "\n";
  const std::string solution = cs::serialize_solution(r);
  if (a.output.empty()) {
    std::cout << solution;
  } else {
    write_file(a.output, solution);
  }
  if (budget && r.total_cost > *budget) {
    std::cerr << "over budget " << *budget << "\n";
    return kNo;
  }
  return kOk;
}

struct GenerateArgs {
  std::string kind, output, weights, graph, cnf, x3c;
  std::optional<std::size_t> bins, k, n, m, degree_cap;
  std::optional<cs::Money> capacity, t_const, max_price, budget;
  std::uint64_t seed = 1;
  bool relaxed = false, unit_prices = false, fixed_prices = false;
};

template <typename T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw InputFailure(std::string("missing ") + flag);
  return *v;
}

int run_generate(const GenerateArgs& a) {
  std::string text;
  if (a.kind == "partition") {
    if (a.weights.empty()) throw InputFailure("missing --weights");
    text = cs::serialize_generated(cs::from_partition(cs::parse_weight_list(a.weights)));
  } else if (a.kind == "binpacking") {
    if (a.weights.empty()) throw InputFailure("missing --weights");
    text = cs::serialize_generated(cs::from_bin_packing(
        cs::parse_weight_list(a.weights), need(a.bins, "--bins"), need(a.capacity, "--capacity")));
  } else if (a.kind == "perfectcode") {
    if (a.graph.empty()) throw InputFailure("missing --graph");
    text = cs::serialize_generated(
        cs::from_perfect_code(cs::parse_graph(read_file(a.graph)), need(a.k, "--k")));
  } else if (a.kind == "x3c") {
    if (a.x3c.empty()) throw InputFailure("missing --x3c");
    cs::X3COptions opts;
    opts.price_offset = a.t_const.value_or(42);
    opts.require_exactly_three = !a.relaxed;
    text = cs::serialize_generated(cs::x3c_or_composition(cs::parse_x3c(read_file(a.x3c)), opts));
  } else if (a.kind == "max3sat") {
    if (a.cnf.empty()) throw InputFailure("missing --cnf");
    text = cs::serialize_generated(cs::from_max3sat(cs::parse_cnf(read_file(a.cnf))));
  } else if (a.kind == "random") {
    cs::RandomInstanceParams p;
    p.books = a.n.value_or(p.books);
    p.shops = a.m.value_or(p.shops);
    p.max_price = a.max_price.value_or(p.max_price);
    p.shop_degree_cap = a.degree_cap;
    p.unit_prices = a.unit_prices;
    p.fixed_prices = a.fixed_prices;
    p.budget = a.budget;
    p.seed = a.seed;
    text = "# generated from random seed " + std::to_string(a.seed) + "\n" +
           cs::serialize_instance(cs::random_instance(p));
  } else {
    throw InputFailure("unknown generator '" + a.kind + "'");
  }
  write_file(a.output, text);
  return kOk;
}

struct CheckArgs {
  std::string input, solution;
  std::optional<cs::Money> budget;
};

int run_check(const CheckArgs& a) {
  const cs::Instance inst = cs::parse_instance(read_file(a.input));
  const cs::CheckReport r = cs::check_solution(inst, read_file(a.solution), a.budget);
  std::cout << "verified cost " << r.evaluated.total_cost << " discount "
            << r.evaluated.total_discount;
  if (r.budget) {
    std::cout << (r.within_budget ? " within" : " over") << " budget " << *r.budget;
  }
  std::cout << "\n";
  return r.within_budget ? kOk : kNo;
}

struct BenchArgs {
  std::string dir, algos, report;
  double timeout = 10.0;
  unsigned jobs = 1;
};

int run_bench(const BenchArgs& a) {
  cs::BenchOptions opts;
  opts.dir = a.dir;
  opts.timeout_seconds = a.timeout;
  opts.jobs = a.jobs;
  std::stringstream list(a.algos);
  for (std::string name; std::getline(list, name, ',');) {
    if (!name.empty()) opts.algorithms.push_back(cs::parse_algorithm(name));
  }
  if (opts.algorithms.empty()) throw InputFailure("--algos is empty");
  if (!std::filesystem::is_directory(opts.dir)) throw InputFailure("no such directory " + a.dir);
  const auto cells = cs::run_bench(opts);
  write_file(a.report, cs::bench_report_json(cells));
  std::cerr << cells.size() << " cells written to " << a.report << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clever Shopper solvers and instance tools"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance");
  s->add_option("--input", solve.input, "Instance file")->required();
  s->add_option("--algo", solve.algo, "Solver")
      ->required()
      ->check(CLI::IsMember({"oracle", "subset-dp", "price-dp", "matching2", "fstar", "greedy"}));
  s->add_option("--budget", solve.budget, "Budget K (overrides the file)");
  s->add_option("--output", solve.output, "Solution file (default: stdout)");
  s->add_flag("--seedless", solve.seedless, "Accepted for scripting; all solvers are deterministic");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate an instance");
  g->add_option("kind", gen.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"partition", "binpacking", "perfectcode", "x3c", "max3sat", "random"}));
  g->add_option("--output", gen.output, "Instance file")->required();
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--weights", gen.weights, "Item weights, e.g. 1,2,3");
  g->add_option("--bins", gen.bins, "Bin count");
  g->add_option("--capacity", gen.capacity, "Bin capacity");
  g->add_option("--graph", gen.graph, "Edge-list graph file");
  g->add_option("--k", gen.k, "Perfect code size");
  g->add_option("--cnf", gen.cnf, "DIMACS 3-CNF file");
  g->add_option("--x3c", gen.x3c, "X3C instance-list file");
  g->add_flag("--relaxed", gen.relaxed, "Do not require exactly three occurrences per item");
  g->add_option("--t-const", gen.t_const, "Price offset T of the X3C composition");
  g->add_option("--n", gen.n, "Books");
  g->add_option("--m", gen.m, "Shops");
  g->add_option("--max-price", gen.max_price, "Largest price");
  g->add_option("--degree-cap", gen.degree_cap, "Max books per shop");
  g->add_flag("--unit-prices", gen.unit_prices, "All prices 1");
  g->add_flag("--fixed-prices", gen.fixed_prices, "One price per book");
  g->add_option("--budget", gen.budget, "Budget written into random instances");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Verify a solution file");
  c->add_option("--input", check.input, "Instance file")->required();
  c->add_option("--solution", check.solution, "Solution file")->required();
  c->add_option("--budget", check.budget, "Budget K (overrides the file)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Benchmark solvers over a directory of .inst files");
  b->add_option("--dir", bench.dir, "Instance directory")->required();
  b->add_option("--algos", bench.algos, "Comma-separated solvers")->required();
  b->add_option("--timeout", bench.timeout, "Seconds per (instance, solver)")
      ->check(CLI::PositiveNumber);
  b->add_option("--report", bench.report, "JSON report file")->required();
  b->add_option("--jobs", bench.jobs, "Parallel cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*s) return run_solve(solve);
    if (*g) return run_generate(gen);
    if (*c) return run_check(check);
    if (*b) return run_bench(bench);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cs::is_resource_error(e.code()) ? kResource : kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
