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

#ifndef GIACHECK_GIA_HPP_
#define GIACHECK_GIA_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "giacheck/action.hpp"

namespace giacheck {

using StateId = std::size_t;

struct Transition {
  StateId src;
  Action action;
  StateId dst;

  auto operator<=>(const Transition&) const = default;
};

struct Interfaces {
  ActionSet inputs;     // AB?m with A outside the group, B inside
  ActionSet outputs;    // AB!m with A inside, B outside
  ActionSet internals;  // AB!?m with both inside

  bool contains(const Action& a) const;
  auto operator<=>(const Interfaces&) const = default;
};

/**
 * Group interface automaton.
 *
 * States are named; transitions are kept sorted and duplicate free.
 * When no interfaces are given they are taken from the transition labels.
 * The constructor checks indices and name uniqueness only; see validate_gia.
 */
class Gia {
 public:
  Gia();  // one state "0", no transitions, empty group
  Gia(std::vector<std::string> states, StateId initial, ParticipantSet group,
      std::vector<Transition> transitions, std::optional<Interfaces> interfaces = std::nullopt);

  std::size_t num_states() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  const std::string& name(StateId s) const { return names_[s]; }
  std::optional<StateId> find(const std::string& name) const;
  // Throws std::out_of_range for unknown names.
  StateId id(const std::string& name) const;

  StateId initial() const { return initial_; }
  const ParticipantSet& group() const { return group_; }
  const Interfaces& interfaces() const { return interfaces_; }

  const std::vector<Transition>& transitions() const { return transitions_; }
  // Indices into transitions().
  const std::vector<std::size_t>& out(StateId s) const { return out_[s]; }
  const std::vector<std::size_t>& in(StateId s) const { return in_[s]; }
  bool is_sink(StateId s) const { return out_[s].empty(); }

  // Every label occurring on a transition, tau excluded.
  ActionSet labels() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, StateId> index_;
  StateId initial_ = 0;
  ParticipantSet group_;
  Interfaces interfaces_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Incremental construction by state name.
class GiaBuilder {
 public:
  StateId state(const std::string& name);
  GiaBuilder& add(const std::string& src, const Action& a, const std::string& dst);
  // "AB!m", "AB?m", "AB!?m" or "tau".
  GiaBuilder& add(const std::string& src, const std::string& action, const std::string& dst);
  Gia build(const std::string& initial, ParticipantSet group,
            std::optional<Interfaces> interfaces = std::nullopt) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, StateId> index_;
  std::vector<Transition> transitions_;
};

// Diagnostics for class membership of labels, interface consistency and
// acyclicity. Empty when valid.
std::vector<std::string> validate_gia(const Gia& g);
bool is_acyclic(const Gia& g);

struct SharedInterface {
  ActionSet inputs;     // si
  ActionSet outputs;    // so
  ActionSet internals;  // sh
};

SharedInterface shared(const Gia& g1, const Gia& g2);
bool composable(const Gia& g1, const Gia& g2);

/**
 * Product of pairwise composable automata, restricted to reachable states.
 *
 * components[s] gives the factor states of product state s. State names
 * are tuples "(a,b,...)".
 */
struct Product {
  Gia automaton;
  std::vector<std::vector<StateId>> components;
  std::map<std::vector<StateId>, StateId> index;
};

// Throws std::invalid_argument when two factors are not composable.
Product tensor_all(const std::vector<const Gia*>& factors,
                   std::optional<std::vector<StateId>> start = std::nullopt);
Gia tensor(const Gia& g1, const Gia& g2);

// Free product: no synchronisation.
Gia interleave(const Gia& g1, const Gia& g2);
// {u/v}: state v renamed to u, merging with u if it already exists.
Gia substitute(const Gia& g, const std::string& u, const std::string& v);
// Every state x renamed to "x.n".
Gia tag(const Gia& g, int n);
std::string tagged(const std::string& state, int n);
// Union of states and transitions by name; the initial state is g1's.
Gia union_gia(const Gia& g1, const Gia& g2);

// States reachable from the initial one, in breadth-first order.
std::vector<StateId> reachable_states(const Gia& g);
Gia reachable_part(const Gia& g);
// States renamed prefix0, prefix1, ... in breadth-first order.
Gia rename_states(const Gia& g, const std::string& prefix);

/**
 * Words along paths from `from` to `to` with tau erased.
 *
 * The empty word is included when from == to; the set is empty when `to`
 * is unreachable.
 */
std::set<ActionWord> language(const Gia& g, StateId from, StateId to);
// Words from the initial state to any sink.
std::set<ActionWord> complete_language(const Gia& g);

bool gia_isomorphic(const Gia& a, const Gia& b);

std::string gia_to_dot(const Gia& g, const std::string& name = "gia");

}  // namespace giacheck

#endif  // GIACHECK_GIA_HPP_
