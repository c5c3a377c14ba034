// Copyright 2026 The detscore Authors.
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

#include "detscore/scoring.h"

#include <fmt/format.h>
#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "detscore/error.h"
#include "detscore/parallel.h"

namespace detscore {

Fraction TermStats::exact_a() const {
  using u128 = Uint128;
  u128 num = static_cast<u128>(n_pos) * dc_p +
             static_cast<u128>(doc_count_pos) * n_total;
  u128 den = static_cast<u128>(2) * n_total * dc_p;
  u128 a = num, b = den;
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return {static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den)};
}

ScoreValues Score(std::uint64_t n_pos, std::uint64_t n_total,
                  std::uint64_t doc_count_pos, std::uint64_t dc_p) {
  if (dc_p == 0) ThrowValidation("score: DC_p = 0, positive corpus empty");
  if (n_pos == 0 || n_total < n_pos) {
    ThrowValidation(fmt::format(
        "score: need 1 <= n_pos <= n_total, got n_pos={} n_total={}", n_pos,
        n_total));
  }
  if (doc_count_pos == 0 || doc_count_pos > n_pos || doc_count_pos > dc_p) {
    ThrowValidation(fmt::format(
        "score: need 1 <= doc_count_pos <= min(n_pos, DC_p), got "
        "doc_count_pos={} n_pos={} DC_p={}",
        doc_count_pos, n_pos, dc_p));
  }
  ScoreValues v;
  v.b = static_cast<double>(n_pos) / static_cast<double>(n_total);
  v.dist = static_cast<double>(doc_count_pos) / static_cast<double>(dc_p);
  v.a = (v.b + v.dist) / 2.0;
  return v;
}

TermStats MakeTermStats(std::string term, const TermCounts& counts,
                        std::uint64_t dc_p) {
  const ScoreValues v =
      Score(counts.n_pos, counts.n_total, counts.doc_count_pos, dc_p);
  TermStats s;
  s.term = std::move(term);
  s.n_pos = counts.n_pos;
  s.n_total = counts.n_total;
  s.doc_count_pos = counts.doc_count_pos;
  s.dc_p = dc_p;
  s.b = v.b;
  s.dist = v.dist;
  s.a = v.a;
  return s;
}

ScoreTable::ScoreTable(std::uint64_t dc_p, std::vector<TermStats> stats)
    : dc_p_(dc_p), stats_(std::move(stats)) {
  if (dc_p_ == 0) ThrowValidation("score table: DC_p = 0");
  std::sort(stats_.begin(), stats_.end(),
            [](const TermStats& x, const TermStats& y) { return x.term < y.term; });
}

const TermStats* ScoreTable::Find(std::string_view term) const {
  auto it = std::lower_bound(
      stats_.begin(), stats_.end(), term,
      [](const TermStats& s, std::string_view t) { return s.term < t; });
  return (it != stats_.end() && it->term == term) ? &*it : nullptr;
}

std::set<std::string, std::less<>> TermUniverse(const Corpus& positive) {
  if (positive.empty()) {
    ThrowValidation("positive corpus empty: term universe undefined");
  }
  std::set<std::string, std::less<>> universe;
  for (const auto& doc : positive.documents()) {
    for (const auto& [term, count] : doc.term_counts) universe.insert(term);
  }
  return universe;
}

TermCounts CountStats(const CorpusPair& pair, std::string_view term) {
  TermCounts c;
  for (const auto& doc : pair.positive().documents()) {
    const std::uint64_t n = doc.Count(term);
    c.n_pos += n;
    if (n > 0) ++c.doc_count_pos;
  }
  if (c.n_pos == 0) {
    throw Error(ErrorKind::kNotInUniverse,
                fmt::format("term '{}' does not occur in the positive corpus", term));
  }
  c.n_total = c.n_pos;
  for (const auto& doc : pair.negative().documents()) c.n_total += doc.Count(term);
  return c;
}

namespace {

ScoreTable BuildTable(std::uint64_t dc_p,
                      std::vector<std::pair<std::string_view, TermCounts>> counts) {
  std::vector<TermStats> stats;
  stats.reserve(counts.size());
  for (const auto& [term, c] : counts) {
    stats.push_back(MakeTermStats(std::string(term), c, dc_p));
  }
  return ScoreTable(dc_p, std::move(stats));
}

}  // namespace

ScoreTable ScoreAll(const CorpusPair& pair, int threads) {
  const auto& pos = pair.positive().documents();
  const auto& neg = pair.negative().documents();
  if (pos.empty()) ThrowValidation("positive corpus empty: DC_p = 0");
  const int nthreads = ResolveThreads(threads);

  // Keys view into the documents, which outlive this call.
  using CountMap = std::unordered_map<std::string_view, TermCounts>;
  std::vector<CountMap> local(static_cast<std::size_t>(nthreads));
  const auto npos = static_cast<long long>(pos.size());
#pragma omp parallel num_threads(nthreads)
  {
    CountMap& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long long i = 0; i < npos; ++i) {
      for (const auto& [term, n] : pos[static_cast<std::size_t>(i)].term_counts) {
        TermCounts& c = mine[term];
        c.n_pos += n;
        c.doc_count_pos += 1;
      }
    }
  }
  CountMap merged = std::move(local[0]);
  for (std::size_t t = 1; t < local.size(); ++t) {
    for (const auto& [term, c] : local[t]) {
      TermCounts& dst = merged[term];
      dst.n_pos += c.n_pos;
      dst.doc_count_pos += c.doc_count_pos;
    }
    local[t] = CountMap();
  }

  std::vector<std::unordered_map<std::string_view, std::uint64_t>> neg_local(
      static_cast<std::size_t>(nthreads));
  const auto nneg = static_cast<long long>(neg.size());
#pragma omp parallel num_threads(nthreads)
  {
    auto& mine = neg_local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long long i = 0; i < nneg; ++i) {
      for (const auto& [term, n] : neg[static_cast<std::size_t>(i)].term_counts) {
        if (merged.find(term) != merged.end()) mine[term] += n;
      }
    }
  }
  for (auto& [term, c] : merged) c.n_total = c.n_pos;
  for (const auto& part : neg_local) {
    for (const auto& [term, n] : part) merged[term].n_total += n;
  }

  std::vector<std::pair<std::string_view, TermCounts>> counts(merged.begin(),
                                                              merged.end());
  return BuildTable(pos.size(), std::move(counts));
}

namespace serial {

ScoreTable ScoreAll(const CorpusPair& pair) {
  const auto& pos = pair.positive().documents();
  if (pos.empty()) ThrowValidation("positive corpus empty: DC_p = 0");
  std::map<std::string_view, TermCounts> counts;
  for (const auto& doc : pos) {
    for (const auto& [term, n] : doc.term_counts) {
      TermCounts& c = counts[term];
      c.n_pos += n;
      c.n_total += n;
      c.doc_count_pos += 1;
    }
  }
  for (const auto& doc : pair.negative().documents()) {
    for (const auto& [term, n] : doc.term_counts) {
      if (auto it = counts.find(term); it != counts.end()) it->second.n_total += n;
    }
  }
  return BuildTable(pos.size(), {counts.begin(), counts.end()});
}

}  // namespace serial

bool RanksBefore(const TermStats& lhs, const TermStats& rhs) {
  const auto order = lhs.exact_a() <=> rhs.exact_a();
  if (order != 0) return order > 0;
  return lhs.term < rhs.term;
}

}  // namespace detscore
