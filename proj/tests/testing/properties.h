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

// Score-table checks shared by the unit suites and the acceptance binary.
// Each returns an empty string when the property holds.

#ifndef DETSCORE_TESTS_TESTING_PROPERTIES_H_
#define DETSCORE_TESTS_TESTING_PROPERTIES_H_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "detscore/scoring.h"
#include "testing/oracle.h"
#include "testing/random_corpus.h"

namespace detscore::testing {

inline bool SameRatio(const Fraction& f, const Rational& r) {
  return static_cast<Uint128>(f.num) * static_cast<std::uint64_t>(r.den) ==
         static_cast<Uint128>(static_cast<std::uint64_t>(r.num)) * f.den;
}

inline std::string OracleMismatch(const TokenPair& pair, const ScoreTable& table) {
  const auto oracle = OracleScores(pair);
  if (oracle.size() != table.size()) {
    return fmt::format("universe size {} vs oracle {}", table.size(), oracle.size());
  }
  if (table.dc_p() != pair.positive.size()) return "dc_p mismatch";
  for (const auto& [term, want] : oracle) {
    const TermStats* got = table.Find(term);
    if (got == nullptr) return "missing term " + term;
    if (static_cast<std::int64_t>(got->n_pos) != want.n_pos ||
        static_cast<std::int64_t>(got->n_total) != want.n_total ||
        static_cast<std::int64_t>(got->doc_count_pos) != want.doc_count_pos) {
      return "count mismatch for " + term;
    }
    if (!SameRatio(got->exact_b(), want.b) || !SameRatio(got->exact_dist(), want.dist) ||
        !SameRatio(got->exact_a(), want.a)) {
      return "ratio mismatch for " + term;
    }
    if (std::abs(got->b - want.b.ToDouble()) > 1e-12 ||
        std::abs(got->dist - want.dist.ToDouble()) > 1e-12 ||
        std::abs(got->a - want.a.ToDouble()) > 1e-12) {
      return fmt::format("float mismatch for {}: a {} vs {}", term, got->a,
                         want.a.ToDouble());
    }
  }
  return "";
}

inline std::vector<std::string> UniverseOf(const TokenPair& pair) {
  std::vector<std::string> out;
  for (const auto& [term, s] : OracleScores(pair)) out.push_back(term);
  return out;
}

template <typename T>
const T& PickOne(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Adding one occurrence of t to a C_n document lowers b(t) and a(t).
inline std::string NegativeEvidenceViolation(const TokenPair& pair, std::mt19937_64& rng) {
  const auto universe = UniverseOf(pair);
  if (universe.empty() || pair.negative.empty()) return "generator produced no candidate";
  const std::string term = PickOne(universe, rng);
  TokenPair changed = pair;
  const auto doc = std::uniform_int_distribution<std::size_t>(0, pair.negative.size() - 1)(rng);
  changed.negative[doc].tokens.push_back(term);
  const TermStats before = *ScoreAll(ToPair(pair)).Find(term);
  const TermStats after = *ScoreAll(ToPair(changed)).Find(term);
  if (!(after.exact_b() < before.exact_b()) || !(after.exact_a() < before.exact_a())) {
    return fmt::format("{}: a {} -> {}", term, before.a, after.a);
  }
  return "";
}

// Moves one occurrence of some term from a C_p document holding at least two
// into a C_p document holding none. Returns false when no such move exists.
inline bool SpreadOneOccurrence(TokenPair& pair, std::mt19937_64& rng, std::string& term) {
  struct Move {
    std::string term;
    std::size_t from;
    std::size_t to;
  };
  std::vector<Move> moves;
  for (const auto& t : UniverseOf(pair)) {
    std::vector<std::size_t> rich;
    std::vector<std::size_t> empty;
    for (std::size_t i = 0; i < pair.positive.size(); ++i) {
      const auto c = CountIn(pair.positive[i], t);
      if (c >= 2) rich.push_back(i);
      if (c == 0) empty.push_back(i);
    }
    for (auto f : rich) {
      for (auto e : empty) moves.push_back({t, f, e});
    }
  }
  if (moves.empty()) return false;
  const Move m = PickOne(moves, rng);
  auto& from = pair.positive[m.from].tokens;
  from.erase(std::find(from.begin(), from.end(), m.term));
  pair.positive[m.to].tokens.push_back(m.term);
  term = m.term;
  return true;
}

inline std::string SpreadViolation(const TokenPair& pair, std::mt19937_64& rng) {
  TokenPair changed = pair;
  std::string term;
  if (!SpreadOneOccurrence(changed, rng, term)) return "generator produced no candidate";
  const TermStats before = *ScoreAll(ToPair(pair)).Find(term);
  const TermStats after = *ScoreAll(ToPair(changed)).Find(term);
  if (!(after.exact_b() == before.exact_b()) || !(after.exact_a() > before.exact_a())) {
    return fmt::format("{}: a {} -> {}", term, before.a, after.a);
  }
  return "";
}

inline TokenPair Duplicate(const TokenPair& pair, int k) {
  const auto dup = [k](const std::vector<TokenDoc>& docs) {
    std::vector<TokenDoc> out;
    for (const auto& d : docs) {
      for (int c = 0; c < k; ++c) out.push_back({d.id + "_" + std::to_string(c), d.tokens});
    }
    return out;
  };
  return {dup(pair.positive), dup(pair.negative)};
}

inline std::string DuplicationViolation(const TokenPair& pair, int k) {
  const ScoreTable base = ScoreAll(ToPair(pair));
  const ScoreTable dup = ScoreAll(ToPair(Duplicate(pair, k)));
  if (base.size() != dup.size()) return "universe changed";
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& x = base.stats()[i];
    const auto& y = dup.stats()[i];
    if (x.term != y.term || !(x.exact_b() == y.exact_b()) ||
        !(x.exact_dist() == y.exact_dist()) || !(x.exact_a() == y.exact_a()) ||
        x.a != y.a || x.b != y.b || x.dist != y.dist) {
      return fmt::format("{} changed under {}-fold duplication", x.term, k);
    }
  }
  return "";
}

// Pairs guaranteed to admit each property's perturbation.
inline TokenPair PairWithNegatives(std::mt19937_64& rng) {
  RandomPairLimits limits;
  limits.min_negative_docs = 1;
  for (;;) {
    TokenPair p = RandomTokenPair(rng, limits);
    if (!UniverseOf(p).empty()) return p;
  }
}

inline TokenPair PairWithSpreadMove(std::mt19937_64& rng) {
  for (;;) {
    TokenPair p = RandomTokenPair(rng);
    TokenPair probe = p;
    std::mt19937_64 scratch(rng());
    std::string term;
    if (SpreadOneOccurrence(probe, scratch, term)) return p;
  }
}

}  // namespace detscore::testing

#endif  // DETSCORE_TESTS_TESTING_PROPERTIES_H_
