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

#ifndef GIACHECK_POMSET_HPP_
#define GIACHECK_POMSET_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "giacheck/action.hpp"
#include "giacheck/gchor.hpp"

namespace giacheck {

/**
 * Labelled partial order over events 0..size()-1.
 *
 * Labels are sends and receives. The strict order is kept transitively
 * closed.
 */
class Pomset {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Pomset() = default;
  // `order` lists pairs (a, b) with a < b; the closure is computed here.
  // Throws std::invalid_argument if the pairs form a cycle.
  Pomset(std::vector<Action> labels, const std::vector<Edge>& order);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Action>& labels() const { return labels_; }
  const Action& label(std::size_t e) const { return labels_[e]; }
  bool less(std::size_t a, std::size_t b) const { return lt_[a * size() + b] != 0; }

  // Hasse diagram edges, sorted.
  std::vector<Edge> covering() const;
  // All pairs of the strict order, sorted.
  std::vector<Edge> order() const;

 private:
  std::vector<Action> labels_;
  std::vector<char> lt_;
};

using PomsetSet = std::vector<Pomset>;

// [AB!m -> AB?m]
Pomset interaction_pomset(const Participant& a, const Participant& b, const Message& m);

// Disjoint union, same-subject events of r before those of r2, then closure.
Pomset seq(const Pomset& r, const Pomset& r2);
// Disjoint union.
Pomset par(const Pomset& r, const Pomset& r2);

// No input label occurs on both sides.
bool well_forked(const PomsetSet& r1, const PomsetSet& r2);

// Events whose label has subject a, with the induced order.
Pomset restrict_to(const Pomset& r, const Participant& a);
std::vector<std::size_t> min_events(const Pomset& r);

// Union over each set of the labels of min(r restricted to a).
std::pair<ActionSet, ActionSet> divergence(const Participant& a, const PomsetSet& r1,
                                           const PomsetSet& r2);

enum class Role { kActive, kPassive, kNeither };
std::string to_string(Role r);

Role classify(const Participant& a, const PomsetSet& r1, const PomsetSet& r2);

// At most one active participant in `ps` and every other one passive.
bool well_branched(const PomsetSet& r1, const PomsetSet& r2, const ParticipantSet& ps);

bool pomset_isomorphic(const Pomset& a, const Pomset& b);
// Appends r unless an isomorphic copy is present.
void insert_unique(PomsetSet& set, Pomset r);

struct Undefined {
  enum class Reason { kNotWellForked, kNotWellBranched };

  Reason reason;
  SubtermPath path;  // innermost failing subterm
  GChor subterm;
};

std::string to_string(Undefined::Reason r);

using Semantics = std::variant<PomsetSet, Undefined>;

inline bool is_defined(const Semantics& s) { return std::holds_alternative<PomsetSet>(s); }

// Pomset semantics; pomsets are deduplicated up to isomorphism.
Semantics semantics(const GChor& g);

std::string pomset_to_dot(const Pomset& r, const std::string& name = "pomset");

}  // namespace giacheck

#endif  // GIACHECK_POMSET_HPP_
