/*
 * Copyright (c) 2026, The giacheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GIACHECK_CORPUS_HPP_
#define GIACHECK_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "giacheck/gchor.hpp"

namespace giacheck {

// splitmix64; bounded draws avoid std distributions so streams are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::uint64_t state_;
};

struct CorpusConfig {
  std::uint64_t seed = 1;
  std::size_t count = 500;
  std::size_t max_depth = 4;
  std::size_t max_participants = 4;
  std::size_t max_messages = 3;
  std::size_t state_cap = 200000;
};

GChor random_gchor(Rng& rng, const CorpusConfig& cfg);
std::vector<GChor> generate_corpus(const CorpusConfig& cfg);

// Greedy shrinking: replaces subterms by 0 or by one of their children
// while `fails` keeps holding.
GChor shrink(const GChor& g, const std::function<bool(const GChor&)>& fails);

struct CorpusFailure {
  std::string property;
  std::size_t instance;
  std::string reproducer;  // shrunk, in the textual syntax
};

struct CorpusReport {
  std::size_t instances = 0;
  std::size_t gia_well_formed = 0;
  std::size_t oracle_well_formed = 0;
  std::size_t agreement = 0;
  std::size_t language_checks = 0;
  std::size_t language_ok = 0;
  std::size_t triples = 0;
  std::size_t commutative_ok = 0;
  std::size_t associative_ok = 0;
  std::size_t buffered_checks = 0;
  std::size_t buffered_ok = 0;
  std::size_t buffered_inconclusive = 0;
  std::vector<CorpusFailure> failures;
};

CorpusReport run_corpus(const CorpusConfig& cfg);
std::string format_report(const CorpusReport& r, const CorpusConfig& cfg);

}  // namespace giacheck

#endif  // GIACHECK_CORPUS_HPP_
