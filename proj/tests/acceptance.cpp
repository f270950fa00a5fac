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

// Acceptance run: one PASS/FAIL line per criterion. Fallback activations
// are appended to the file given by --log, one JSON object per line.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/io/json_io.hpp"
#include "rainbow/rainbow.hpp"

namespace {

using rainbow::RainbowInstance;
using rainbow::SolveResult;
using rainbow::SolveStatus;
using rainbow::Species;
using rainbow::io::Json;
namespace lab = rainbow::lab;

struct Tally {
  std::size_t augmentations = 0;
  std::size_t fast = 0;
  std::size_t fallback_instances = 0;
  // Same instances solved from the empty set, so the sweep places every element.
  std::size_t unseeded_augmentations = 0;
  std::size_t unseeded_fast = 0;
  std::size_t unseeded_failures = 0;
};

class Run {
 public:
  explicit Run(const std::string& log_path) : log_(log_path) {}

  bool log_ok() const { return static_cast<bool>(log_); }

  // Solves, folds the counts into the fast-path tally, logs fallbacks.
  SolveResult solve(const RainbowInstance& inst, const std::string& origin, Tally* tally) {
    SolveResult res = rainbow::solve(inst);
    if (tally) {
      tally->augmentations += res.stats.augmentations;
      tally->fast += res.stats.fast_path_augmentations;
      tally->fallback_instances += res.stats.fallback_used() ? 1 : 0;
    }
    if (res.stats.fallback_used()) log_fallback(inst, origin, res);
    if (tally) {
      const SolveResult bare = rainbow::solve(inst, {false});
      tally->unseeded_augmentations += bare.stats.augmentations;
      tally->unseeded_fast += bare.stats.fast_path_augmentations;
      if (bare.assignment.size() != res.assignment.size()) ++tally->unseeded_failures;
      if (bare.stats.fallback_used()) log_fallback(inst, origin + " unseeded", bare);
    }
    return res;
  }

  void report(int id, bool ok, const std::string& detail, double seconds) {
    all_ok_ = all_ok_ && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << " (" << std::fixed
              << std::setprecision(1) << seconds << "s)" << std::endl;
  }

  bool all_ok() const { return all_ok_; }

 private:
  void log_fallback(const RainbowInstance& inst, const std::string& origin, const SolveResult& res) {
    Json line{{"origin", origin}, {"digest", lab::instance_digest(inst)}, {"n", inst.n}, {"m", inst.family.size()}};
    Json events = Json::array();
    for (const auto& e : res.stats.fallbacks)
      events.push_back({{"rainbow_size", e.rainbow_size}, {"reason", e.reason}, {"resolved_by", e.resolved_by}});
    line["events"] = std::move(events);
    try {
      line["instance"] = rainbow::io::to_json(rainbow::io::with_default_names(inst));
    } catch (const rainbow::SpecError&) {
      line["instance"] = nullptr;  // regenerate from origin
    }
    log_ << line.dump() << "\n";
    log_.flush();
  }

  std::ofstream log_;
  bool all_ok_ = true;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string origin_of(const std::string& kind, std::size_t n, std::uint64_t seed) {
  return kind + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

const std::vector<std::pair<Species, Species>> kPairs = {{Species::partition, Species::partition},
                                                         {Species::partition, Species::graphic},
                                                         {Species::graphic, Species::linear},
                                                         {Species::linear, Species::linear}};

std::string pair_name(const std::pair<Species, Species>& p) {
  return std::string(rainbow::species_name(p.first)) + "x" + std::string(rainbow::species_name(p.second));
}

bool full_rainbow(const RainbowInstance& inst, const SolveResult& res) {
  return res.status == SolveStatus::solved && res.assignment.size() == inst.n &&
         inst.m_oracle.is_independent(res.assignment.range()) && inst.n_oracle.is_independent(res.assignment.range()) &&
         rainbow::is_valid_rainbow(inst, res.assignment);
}

// Feasibility of a size-n rainbow set agrees between solver and brute force.
bool agrees_with_brute_force(const RainbowInstance& inst, const SolveResult& res) {
  return (res.status == SolveStatus::solved) == lab::brute_force_rainbow(inst, inst.n).has_value();
}

constexpr std::uint64_t kSeeds = 200;

// Generated instances, m = 2n - 1.
void criterion1(Run& run, Tally& tally, std::size_t& compared, std::size_t& disagreements) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, failures = 0;
  std::string first;
  for (const auto& pair : kPairs) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        const std::string origin = origin_of("generated " + pair_name(pair), n, seed);
        const auto inst = lab::random_instance(pair.first, pair.second, n, 2 * n - 1, seed);
        ++total;
        SolveResult res;
        try {
          res = run.solve(inst, origin, &tally);
        } catch (const std::exception& e) {
          if (failures++ == 0) first = origin + ": " + e.what();
          continue;
        }
        if (!full_rainbow(inst, res) && failures++ == 0) first = origin;
        if (n <= 4 && inst.ground_size() <= 12) {
          ++compared;
          if (!agrees_with_brute_force(inst, res)) ++disagreements;
        }
      }
    }
  }
  run.report(1, failures == 0,
             std::to_string(total - failures) + "/" + std::to_string(total) +
                 " generated instances solved at size n over 4 species pairs" + (first.empty() ? "" : "; first: " + first),
             seconds_since(t0));
}

// Tight family of 2n - 2 rows, then every possible extra row.
void criterion2(Run& run) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string problems;
  std::size_t extended = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto inst = lab::drisko_instance(n);
    if (lab::brute_force_rainbow(inst, n).has_value()) problems += " n=" + std::to_string(n) + " has a rainbow n-set;";
    if (!lab::brute_force_rainbow(inst, n - 1).has_value())
      problems += " n=" + std::to_string(n) + " lacks an (n-1)-set;";
    const auto base = lab::drisko_array(n);
    std::vector<std::uint32_t> row(n);
    std::iota(row.begin(), row.end(), 1U);
    do {
      auto array = base;
      array.rows.push_back(row);
      const auto bigger = lab::encode_latin(array);
      const SolveResult res = run.solve(bigger, "tight family n=" + std::to_string(n) + " plus a row", nullptr);
      ++extended;
      if (!full_rainbow(bigger, res)) {
        std::ostringstream os;
        os << " n=" << n << " extra row not solved;";
        problems += os.str();
      }
    } while (std::next_permutation(row.begin(), row.end()));
  }
  run.report(2, problems.empty(),
             "tight families n=2..7 certified with no rainbow n-set; " + std::to_string(extended) +
                 " single-row extensions all solved" + (problems.empty() ? "" : ";" + problems),
             seconds_since(t0));
}

// Random row-Latin rectangles with 2n - 1 rows.
void criterion3(Run& run, Tally& tally, std::size_t& compared, std::size_t& disagreements) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, failures = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    lab::Rng rng(1000 + n);
    for (int k = 0; k < 500; ++k) {
      const auto array = lab::random_row_latin(n, 2 * n - 1, rng);
      const auto inst = lab::encode_latin(array);
      const SolveResult res = run.solve(inst, origin_of("row-latin", n, k), &tally);
      ++total;
      if (!full_rainbow(inst, res)) ++failures;
      if (n <= 4 && inst.ground_size() <= 12) {
        ++compared;
        if (!agrees_with_brute_force(inst, res)) ++disagreements;
      }
    }
  }
  run.report(3, failures == 0,
             std::to_string(total - failures) + "/" + std::to_string(total) +
                 " random row-Latin rectangles (n=2..5) solved at size n",
             seconds_since(t0));
}

// Arrays whose rows are spanning trees of a random multigraph.
void criterion4(Run& run, Tally& tally, std::size_t& compared, std::size_t& disagreements) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, failures = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    lab::Rng rng(2000 + n);
    for (int k = 0; k < 200; ++k) {
      const auto g = lab::random_graphic_array(n, 2 * n - 1, rng);
      const auto inst = lab::encode_array(g.rows, g.value_matroid);
      const SolveResult res = run.solve(inst, origin_of("graphic array", n, k), &tally);
      ++total;
      rainbow::ElementSet edges;
      for (const auto& [row, cell] : res.assignment.pairs()) edges.insert(g.rows[row][cell.id % n]);
      const bool ok = full_rainbow(inst, res) && edges.size() == n && g.value_matroid.is_independent(edges);
      if (!ok) ++failures;
      if (inst.ground_size() <= 12) {
        ++compared;
        if (!agrees_with_brute_force(inst, res)) ++disagreements;
      }
    }
  }
  run.report(4, failures == 0,
             std::to_string(total - failures) + "/" + std::to_string(total) +
                 " graphic-valued arrays (n=2,3) solved with an independent edge set",
             seconds_since(t0));
}

// Families below the 2n - 1 bound.
void criterion5(Run& run, std::size_t compared, std::size_t disagreements) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t small = 0, small_bad = 0, infeasible = 0;
  for (const auto& pair : kPairs) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t m = 1; m + 2 <= 2 * n; ++m) {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
          const auto inst = lab::random_instance(pair.first, pair.second, n, m, 7919 * seed + 31 * m + n);
          const SolveResult res = run.solve(inst, origin_of("short family " + pair_name(pair), n, seed), nullptr);
          ++small;
          infeasible += res.status == SolveStatus::infeasible ? 1 : 0;
          if (!agrees_with_brute_force(inst, res) || !rainbow::is_valid_rainbow(inst, res.assignment) ||
              res.assignment.size() != lab::max_rainbow_size(inst))
            ++small_bad;
        }
      }
    }
  }
  run.report(5, disagreements == 0 && small_bad == 0,
             std::to_string(disagreements) + " disagreements on " + std::to_string(compared) +
                 " instances from criteria 1-4; " + std::to_string(small_bad) + " on " + std::to_string(small) +
                 " families with m <= 2n-2 (" + std::to_string(infeasible) + " infeasible)",
             seconds_since(t0));
}

void criterion6(Run& run) {
  const auto t0 = std::chrono::steady_clock::now();
  lab::HarnessOptions opts;
  opts.quota = 1000;
  opts.seed = 1;
  std::size_t min_accepted = SIZE_MAX, counterexamples = 0, short_runs = 0;
  std::string detail;
  for (const auto& r : lab::run_all_harnesses(opts)) {
    min_accepted = std::min(min_accepted, r.accepted);
    counterexamples += r.counterexamples;
    if (!r.passed(opts.quota)) {
      ++short_runs;
      detail += " " + r.name + "/" + std::string(rainbow::species_name(r.species)) + "(" +
                std::to_string(r.accepted) + " accepted, " + std::to_string(r.counterexamples) + " counterexamples)";
    }
  }
  run.report(6, short_runs == 0,
             "16 harness runs, min accepted " + std::to_string(min_accepted) + ", " + std::to_string(counterexamples) +
                 " counterexamples" + detail,
             seconds_since(t0));
}

void criterion7(Run& run, const Tally& tally) {
  auto share = [](std::size_t fast, std::size_t all) { return all ? static_cast<double>(fast) / all : 1.0; };
  const double seeded = share(tally.fast, tally.augmentations);
  const double bare = share(tally.unseeded_fast, tally.unseeded_augmentations);
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << 100.0 * seeded << "% of " << tally.augmentations
     << " augmentations on the sweep path (" << 100.0 * bare << "% of " << tally.unseeded_augmentations
     << " when started from the empty set); " << tally.fallback_instances
     << " instances used a fallback (logged)";
  run.report(7, seeded >= 0.99 && bare >= 0.99 && tally.unseeded_failures == 0 && run.log_ok(), os.str(), 0.0);
}

// Same seeds, same documents, twice over.
void criterion8(Run& run) {
  const auto t0 = std::chrono::steady_clock::now();
  auto documents = [&]() {
    std::string out;
    for (const auto& pair : kPairs)
      for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto ni = rainbow::io::with_default_names(lab::random_instance(pair.first, pair.second, 4, 7, seed));
        out += rainbow::io::to_json(ni).dump() + "\n";
        out += rainbow::io::result_json(ni, rainbow::solve(ni.instance)).dump() + "\n";
      }
    lab::Rng rng(77);
    for (int k = 0; k < 25; ++k) {
      auto ni = rainbow::io::with_default_names(lab::encode_latin(lab::random_row_latin(4, 7, rng)));
      out += rainbow::io::result_json(ni, rainbow::solve(ni.instance)).dump() + "\n";
    }
    std::ostringstream stress;
    for (std::uint64_t seed = 1; seed <= 25; ++seed)
      stress << rainbow::io::report_json(
                    lab::verify_instance(lab::random_instance(Species::partition, Species::graphic, 3, 5, seed)))
                    .dump()
             << "\n";
    return out + stress.str();
  };
  const std::string first = documents();
  const std::string second = documents();
  run.report(8, first == second,
             std::to_string(std::count(first.begin(), first.end(), '\n')) + " documents " +
                 (first == second ? "byte-identical" : "differ") + " across two runs",
             seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  std::string log_path = "fallback_log.jsonl";
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--log") log_path = argv[i + 1];
  Run run(log_path);
  Tally tally;
  std::size_t compared = 0, disagreements = 0;
  criterion1(run, tally, compared, disagreements);
  criterion2(run);
  criterion3(run, tally, compared, disagreements);
  criterion4(run, tally, compared, disagreements);
  criterion5(run, compared, disagreements);
  criterion6(run);
  criterion7(run, tally);
  criterion8(run);
  std::cout << (run.all_ok() ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return run.all_ok() ? 0 : 1;
}
