// Copyright 2026 The Authors.
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

// Command-line front end: solve, verify, generate, counterexample,
// encode-latin, stress and selftest. Exit status 0 means solved or verified,
// 2 means infeasible, 1 means an error or a usage problem.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/io/json_io.hpp"
#include "rainbow/rainbow.hpp"

namespace {

using rainbow::io::Json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInfeasible = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string pretty(const Json& doc) { return doc.dump(2) + "\n"; }

std::pair<rainbow::Species, rainbow::Species> species_pair(const std::string& text) {
  const auto comma = text.find(',');
  const auto first = rainbow::lab::parse_species(text.substr(0, comma));
  const auto second = comma == std::string::npos ? first : rainbow::lab::parse_species(text.substr(comma + 1));
  return {first, second};
}

// Cells of an encoded Latin array read r<row>c<col>; blocks c<col> and s<symbol>.
rainbow::io::NamedInstance latin_named(rainbow::RainbowInstance inst) {
  rainbow::io::NamedInstance ni{std::move(inst), {}, {}, {}};
  const std::size_t n = ni.instance.n;
  for (std::size_t id = 0; id < ni.instance.ground_size(); ++id)
    ni.names.push_back("r" + std::to_string(id / n + 1) + "c" + std::to_string(id % n + 1));
  for (std::size_t b = 0; b < n; ++b) {
    ni.m_labels.push_back("c" + std::to_string(b + 1));
    ni.n_labels.push_back("s" + std::to_string(b + 1));
  }
  return ni;
}

// "1,2;2,1" -> rows {1,2} and {2,1}.
rainbow::lab::LatinArray parse_rows(const std::string& text) {
  rainbow::lab::LatinArray a;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<std::uint32_t> cells;
    std::stringstream items(row);
    std::string item;
    while (std::getline(items, item, ',')) {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw rainbow::SpecError("rows", "bad symbol '" + item + "'");
      cells.push_back(static_cast<std::uint32_t>(v));
    }
    a.rows.push_back(std::move(cells));
  }
  if (a.rows.empty()) throw rainbow::SpecError("rows", "no rows given");
  a.n = a.rows.front().size();
  return a;
}

struct Options {
  std::string in;
  std::string out;
  std::string species = "partition,partition";
  std::string rows;
  std::uint64_t seed = 1;
  std::size_t n = 3;
  std::size_t m = 0;
  std::size_t count = 100;
  std::size_t ground = 0;
  std::size_t jobs = 1;
  std::size_t quota = 1000;
};

int run_solve(const Options& o) {
  const auto ni = rainbow::io::parse_instance(read_file(o.in));
  const auto result = rainbow::solve(ni.instance);
  emit(o.out, pretty(rainbow::io::result_json(ni, result)));
  return result.status == rainbow::SolveStatus::solved ? kOk : kInfeasible;
}

int run_verify(const Options& o) {
  const auto ni = rainbow::io::parse_instance(read_file(o.in));
  const auto report = rainbow::lab::verify_instance(ni.instance);
  emit(o.out, pretty(rainbow::io::report_json(report)));
  return report.agreement ? kOk : kError;
}

int run_generate(const Options& o) {
  const auto [ms, ns] = species_pair(o.species);
  const std::size_t m = o.m ? o.m : 2 * o.n - 1;
  auto inst = rainbow::lab::random_instance(ms, ns, o.n, m, o.seed, {o.ground, 200});
  emit(o.out, pretty(rainbow::io::to_json(rainbow::io::with_default_names(std::move(inst)))));
  return kOk;
}

int run_counterexample(const Options& o) {
  emit(o.out, pretty(rainbow::io::to_json(latin_named(rainbow::lab::drisko_instance(o.n)))));
  return kOk;
}

int run_encode_latin(const Options& o) {
  rainbow::lab::LatinArray a;
  if (!o.rows.empty()) {
    a = parse_rows(o.rows);
  } else {
    const Json doc = Json::parse(read_file(o.in));
    a.rows = doc.at("rows").get<std::vector<std::vector<std::uint32_t>>>();
    a.n = a.rows.empty() ? 0 : a.rows.front().size();
  }
  emit(o.out, pretty(rainbow::io::to_json(latin_named(rainbow::lab::encode_latin(a)))));
  return kOk;
}

int run_stress(const Options& o) {
  const auto [ms, ns] = species_pair(o.species);
  const std::size_t m = o.m ? o.m : 2 * o.n - 1;
  std::vector<std::string> lines(o.count);
  std::vector<char> agreed(o.count, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&, ms = ms, ns = ns] {
    for (std::size_t k; (k = next++) < o.count;) {
      const std::uint64_t seed = o.seed + k;
      Json line;
      try {
        const auto inst = rainbow::lab::random_instance(ms, ns, o.n, m, seed, {o.ground, 200});
        const auto report = rainbow::lab::verify_instance(inst);
        line = rainbow::io::report_json(report);
        agreed[k] = report.agreement;
      } catch (const std::exception& e) {
        line = rainbow::io::error_json(e.what());
      }
      Json tagged{{"seed", seed}};
      tagged.update(line);
      lines[k] = tagged.dump();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(1, o.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string text;
  std::size_t disagreements = 0;
  for (std::size_t k = 0; k < o.count; ++k) {
    text += lines[k] + "\n";
    disagreements += agreed[k] ? 0 : 1;
  }
  emit(o.out, text);
  std::cerr << o.count << " instances, " << disagreements << " disagreements\n";
  return disagreements == 0 ? kOk : kError;
}

int run_selftest(const Options& o) {
  rainbow::lab::HarnessOptions opts;
  opts.quota = o.quota;
  opts.seed = o.seed;
  bool all = true;
  std::string text;
  for (const auto& r : rainbow::lab::run_all_harnesses(opts)) {
    const bool ok = r.passed(opts.quota);
    all = all && ok;
    text += std::string(ok ? "PASS " : "FAIL ") + r.name + " " + std::string(rainbow::species_name(r.species)) +
            " accepted=" + std::to_string(r.accepted) + " counterexamples=" + std::to_string(r.counterexamples);
    if (!r.first_counterexample.empty()) text += " first=" + r.first_counterexample;
    text += "\n";
  }
  emit(o.out, text);
  return all ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow common independent sets of two matroids"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--in", o.in, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve->add_option("--out", o.out, "Result JSON (default stdout)");

  auto* verify = app.add_subcommand("verify", "Compare the solver with brute force");
  verify->add_option("--in", o.in, "Instance JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--out", o.out, "Report JSON (default stdout)");

  auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
  generate->add_option("--species", o.species, "M species[,N species]");
  generate->add_option("--n", o.n, "Set size")->check(CLI::PositiveNumber);
  generate->add_option("--m", o.m, "Family size (default 2n-1)");
  generate->add_option("--ground", o.ground, "Ground set size (default 3n)");
  generate->add_option("--seed", o.seed, "Random seed");
  generate->add_option("--out", o.out, "Instance JSON (default stdout)");

  auto* counter = app.add_subcommand("counterexample", "Write the 2n-2 row family with no rainbow n-set");
  counter->add_option("--n", o.n, "Order, at least 2")->check(CLI::Range(2, 64));
  counter->add_option("--out", o.out, "Instance JSON (default stdout)");

  auto* latin = app.add_subcommand("encode-latin", "Encode a row-Latin array as an instance");
  auto* rows_opt = latin->add_option("--rows", o.rows, "Rows like 1,2;2,1");
  latin->add_option("--in", o.in, "JSON file {\"rows\": [[...], ...]}")->excludes(rows_opt);
  latin->add_option("--out", o.out, "Instance JSON (default stdout)");

  auto* stress = app.add_subcommand("stress", "Verify many seeded random instances");
  stress->add_option("--species", o.species, "M species[,N species]");
  stress->add_option("--n", o.n, "Set size")->check(CLI::PositiveNumber);
  stress->add_option("--m", o.m, "Family size (default 2n-1)");
  stress->add_option("--ground", o.ground, "Ground set size (default 3n)");
  stress->add_option("--count", o.count, "Number of instances");
  stress->add_option("--seed", o.seed, "First seed; instance k uses seed + k");
  stress->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  stress->add_option("--out", o.out, "Line-delimited reports (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "Run the randomized matroid property harnesses");
  selftest->add_option("--quota", o.quota, "Accepted cases per harness and species");
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--out", o.out, "Report (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kError;
  }

  try {
    if (solve->parsed()) return run_solve(o);
    if (verify->parsed()) return run_verify(o);
    if (generate->parsed()) return run_generate(o);
    if (counter->parsed()) return run_counterexample(o);
    if (latin->parsed()) return run_encode_latin(o);
    if (stress->parsed()) return run_stress(o);
    if (selftest->parsed()) return run_selftest(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << pretty(rainbow::io::error_json(e.what()));
    return kError;
  }
  return kError;
}
