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

#ifndef GIACHECK_ANALYSIS_HPP_
#define GIACHECK_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "giacheck/action.hpp"
#include "giacheck/gchor.hpp"
#include "giacheck/gia.hpp"
#include "giacheck/pomset.hpp"

namespace giacheck {

// Word helpers.
ActionWord dual(const ActionWord& w);
// Labels of w with subject a and object b, in order.
ActionWord channel_word(const ActionWord& w, const Participant& a, const Participant& b);
// w without its last label when that label is an output.
ActionWord ro(const ActionWord& w);
std::set<ActionWord> prefixes(const ActionWord& w);

/**
 * Shared outputs of g1 enabled at v that g2, from v2, can never take.
 *
 * An output AB!m is unmatched when some maximal run of g1 starting with it
 * leaves every run of g2 from v2 unable to reach AB?m: either AB?m never
 * occurs, or before it B must take a shared action towards A, or towards
 * another member C of g1 in an order C does not follow along that run.
 */
std::vector<Action> unmatched_shared_outputs(const Gia& g1, const Gia& g2, StateId v, StateId v2);
bool unmatched_shared_output(const Gia& g1, const Gia& g2, StateId v, StateId v2);

struct Witness {
  std::string kind;  // "error-state", "parallel" or "branching"
  std::vector<std::string> states;
  std::string label;
  std::vector<std::string> trail;  // steps from the initial state
  std::string detail;
  std::optional<SubtermPath> subterm;
};

// Error states of g1 (x) g2, checked in both directions.
std::vector<Witness> error_states(const Gia& g1, const Gia& g2);
// Error states of the product of all factors; each factor is checked
// against the product of the others.
std::vector<Witness> error_states(const std::vector<Gia>& factors);

// Same-label diamonds in a product.
std::vector<Witness> parallel_errors_in(const Gia& product);
// Branching conditions on the product of a choice.
std::vector<Witness> branching_errors_in(const Gia& product);

// Stripped projections onto participants(g), states renamed <name>0, <name>1, ...
std::vector<Gia> stripped_projections(const GChor& g);
Gia stripped_product(const GChor& g);

std::vector<Witness> parallel_error_states(const GChor& g);
std::vector<Witness> branching_error_states(const GChor& g);

struct BufferedResult {
  bool deadlock_free = true;
  bool orphan_free = true;
  bool inconclusive = false;
  std::uint64_t traces_explored = 0;  // maximal runs, saturating
  std::size_t states_explored = 0;
};

// Runs the stripped projections with a one-slot buffer per ordered pair.
BufferedResult explore_buffered_system(const std::vector<Gia>& locals, std::size_t state_cap);
BufferedResult explore_buffered_system(const GChor& g, std::size_t state_cap);

struct SubtermVerdict {
  SubtermPath path;
  std::string kind;  // "par" or "branch"
  std::string term;
  bool ok = true;
  std::size_t witnesses = 0;
};

struct CheckOptions {
  std::size_t state_cap = 200000;
  bool run_oracle = true;
  bool run_buffered = true;
};

struct Verdict {
  bool well_formed = true;
  bool oracle_well_formed = true;
  std::optional<Undefined> oracle_failure;
  std::vector<Witness> witnesses;
  std::vector<SubtermVerdict> per_subterm;
  std::optional<BufferedResult> buffered;
};

Verdict check_well_formed(const GChor& g, const CheckOptions& opts = {});

// Deterministic JSON rendering.
std::string verdict_to_json(const Verdict& v, int indent = 2);
std::string verdict_to_text(const Verdict& v);

}  // namespace giacheck

#endif  // GIACHECK_ANALYSIS_HPP_
