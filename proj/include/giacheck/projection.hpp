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

#ifndef GIACHECK_PROJECTION_HPP_
#define GIACHECK_PROJECTION_HPP_

#include <cstddef>
#include <vector>

#include "giacheck/action.hpp"
#include "giacheck/gchor.hpp"
#include "giacheck/gia.hpp"

namespace giacheck {

// Projected automaton with its initial and connecting (final) state.
struct Projection {
  Gia automaton;
  StateId initial;
  StateId connecting;
};

/**
 * Projection of a choreography onto one participant.
 *
 * Interactions not involving the participant and the empty choreography
 * become a single tau step. Parallel branches are stripped before being
 * interleaved. State names record provenance: ".n" suffixes are tags and
 * "(x,y)" are interleaving pairs.
 */
Projection project(const GChor& g, const Participant& a);

// Non-tau labels reachable from s through tau steps followed by one action.
ActionSet first_actions(const Gia& g, StateId s);

/**
 * Whether the tau transition with index `t` may be collapsed.
 *
 * It may when it is the only move of its source, when the other moves of
 * the source offer exactly the first actions of its target, or when all
 * those first actions are inputs or all are outputs. A target without
 * first actions is kept when the source has alternatives. The endpoints
 * must not be connected by any other path.
 */
bool removable_tau(const Gia& g, std::size_t t);

struct TauQuotient {
  Gia automaton;
  std::vector<StateId> class_of;  // original state -> quotient state
};

/**
 * Classes of states joined by accepted removable taus.
 *
 * Taus are considered in transition order; one is accepted only if the
 * quotient stays acyclic and language equivalent to g.
 */
std::vector<std::vector<StateId>> tau_classes(const Gia& g);
TauQuotient strip_tau_with_classes(const Gia& g);
Gia strip_tau(const Gia& g);

// Equality of complete languages (initial state to sinks, tau erased).
bool language_equivalent(const Gia& a, const Gia& b);

}  // namespace giacheck

#endif  // GIACHECK_PROJECTION_HPP_
