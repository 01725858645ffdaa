// Copyright 2026 The otsyl Authors
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

#include "otsyl/analysis.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "otsyl/errors.h"

namespace otsyl {

namespace {

uint64_t Pow(uint64_t base, int exp) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::string CountRow::ToString() const {
  std::string out = std::to_string(n);
  for (uint64_t v : {epenthesis, deletion, both, nonlocal, local}) {
    out += '\t' + std::to_string(v);
  }
  return out;
}

CountRow Counts(int n) {
  if (n < 1) throw UsageError("segment count must be at least 1");
  if (n > 31) throw UsageError("segment count too large for exact counts");
  CountRow row;
  row.n = n;
  row.epenthesis = Pow(2, n + 1);
  row.deletion = Pow(2, n) - 1;
  row.both = 2 * Pow(3, n) - 2;
  row.nonlocal = Pow(4, n);
  row.local = 4 * static_cast<uint64_t>(n);
  return row;
}

CostStrategy CostStrategyFromName(const std::string& name) {
  if (name == "sequential") return CostStrategy::kSequential;
  if (name == "cyclic-even") return CostStrategy::kCyclicEven;
  if (name == "cyclic-halving") return CostStrategy::kCyclicHalving;
  throw UsageError("unknown cost strategy: " + name);
}

CostRange EvalCost(uint64_t candidates, uint64_t constraints,
                   CostStrategy strategy) {
  if (candidates == 0 || constraints == 0) {
    throw UsageError("candidate and constraint counts must be positive");
  }
  switch (strategy) {
    case CostStrategy::kSequential: {
      uint64_t total = candidates * constraints;
      return CostRange{total, total};
    }
    case CostStrategy::kCyclicEven: {
      // each constraint knocks out about candidates/constraints of the
      // pool it examines, and at least one candidate always survives
      uint64_t eliminated_per_step = candidates / constraints;
      uint64_t pool = candidates;
      uint64_t total = 0;
      for (uint64_t i = 0; i < constraints; ++i) {
        total += pool;
        pool = pool > eliminated_per_step ? pool - eliminated_per_step : 1;
      }
      return CostRange{total, total};
    }
    case CostStrategy::kCyclicHalving: {
      // survivors halve after each constraint; once a single candidate
      // remains it may or may not be looked at again, hence the range
      uint64_t total = candidates;
      bool lone_survivor_seen = false;
      uint64_t pool = candidates / 2;
      for (uint64_t i = 1; i < constraints; ++i) {
        if (pool >= 2) {
          total += pool;
        } else if (pool == 1) {
          lone_survivor_seen = true;
        }
        pool /= 2;
      }
      return CostRange{total, total + (lone_survivor_seen ? 1 : 0)};
    }
  }
  throw UsageError("unreachable strategy");
}

namespace {

std::vector<std::string> RenderedSet(const std::vector<ParseResult>& results) {
  std::vector<std::string> out;
  out.reserve(results.size());
  for (const ParseResult& r : results) out.push_back(r.rendered);
  return out;
}

}  // namespace

TypologyReport Typology(const std::vector<TypologyInput>& inputs,
                        const std::vector<Ranking>& rankings,
                        TypologyMode mode) {
  const size_t n = rankings.size();
  std::vector<std::vector<std::vector<std::string>>> outputs(n);

  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        std::vector<std::vector<std::string>> per_input;
        per_input.reserve(inputs.size());
        for (const TypologyInput& in : inputs) {
          switch (mode) {
            case TypologyMode::kOneShot:
              per_input.push_back(RenderedSet(
                  Run(in.segments, rankings[i], EvalMode::kOneShot).results));
              break;
            case TypologyMode::kRestart:
              per_input.push_back(RenderedSet(
                  Run(in.segments, rankings[i], EvalMode::kRestart).results));
              break;
            case TypologyMode::kOracle:
              per_input.push_back(
                  RenderedSet(OracleParse(in.segments, rankings[i])));
              break;
          }
        }
        outputs[i] = std::move(per_input);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  size_t workers = std::min<size_t>(std::max(1u, hw), std::max<size_t>(n, 1));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  // group rankings by identical outputs, in ranking order
  std::map<std::string, size_t> group_of;
  TypologyReport report;
  for (const TypologyInput& in : inputs) report.inputs.push_back(in.display);
  for (size_t i = 0; i < n; ++i) {
    std::string key;
    for (const auto& parses : outputs[i]) {
      for (const std::string& p : parses) {
        key += p;
        key += '\x1e';
      }
      key += '\x1f';
    }
    auto [it, inserted] = group_of.emplace(key, report.groups.size());
    if (inserted) {
      report.groups.push_back(TypologyGroup{outputs[i], {}});
    }
    report.groups[it->second].rankings.push_back(rankings[i]);
  }

  std::stable_sort(report.groups.begin(), report.groups.end(),
                   [](const TypologyGroup& a, const TypologyGroup& b) {
                     return a.rankings.size() > b.rankings.size();
                   });
  return report;
}

std::string TypologyReport::ToString() const {
  std::string out;
  for (size_t g = 0; g < groups.size(); ++g) {
    const TypologyGroup& group = groups[g];
    if (g) out += '\n';
    out += "group " + std::to_string(g + 1) + ": " +
           std::to_string(group.rankings.size()) + " rankings (e.g. " +
           group.rankings.front().ToString() + ")\n";
    for (size_t i = 0; i < inputs.size(); ++i) {
      out += "  " + inputs[i] + '\t';
      const auto& parses = group.outputs[i];
      for (size_t k = 0; k < parses.size(); ++k) {
        if (k) out += ' ';
        out += parses[k];
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace otsyl
