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

#include "giacheck/projection.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace giacheck {

namespace {

Projection tau_step(const Participant& a) {
  Gia g({"0", "e"}, 0, {a}, {Transition{0, Action::tau(), 1}});
  return {g, 0, 1};
}

Projection single_step(const Participant& a, const Action& act) {
  Gia g({"0", "e"}, 0, {a}, {Transition{0, act, 1}});
  return {g, 0, 1};
}

Projection with_ends(Gia g, const std::string& init, const std::string& conn) {
  StateId i = g.id(init);
  StateId c = g.id(conn);
  if (g.initial() != i) g = Gia(g.state_names(), i, g.group(), g.transitions(), g.interfaces());
  return {g, i, c};
}

Projection project_rec(const GChor& g, const Participant& a) {
  switch (g.kind()) {
    case GChor::Kind::kEmpty:
      return tau_step(a);
    case GChor::Kind::kInteraction:
      if (g.from() == a) return single_step(a, Action::send(g.from(), g.to(), g.msg()));
      if (g.to() == a) return single_step(a, Action::receive(g.from(), g.to(), g.msg()));
      return tau_step(a);
    default:
      break;
  }
  Projection l = project_rec(g.left(), a);
  Projection r = project_rec(g.right(), a);
  switch (g.kind()) {
    case GChor::Kind::kSeq: {
      Gia gl = tag(l.automaton, 1);
      Gia gr = tag(r.automaton, 2);
      const std::string v0 = gl.name(l.initial);
      const std::string ve = gl.name(l.connecting);
      const std::string ue = gr.name(r.connecting);
      Gia u = union_gia(gl, substitute(gr, ve, gr.name(r.initial)));
      return with_ends(u, v0, ue);
    }
    case GChor::Kind::kBranch: {
      Gia gl = tag(l.automaton, 1);
      Gia gr = tag(r.automaton, 2);
      const std::string v0 = gl.name(l.initial);
      const std::string ve = gl.name(l.connecting);
      const std::string u0 = gr.name(r.initial);
      const std::string ue = gr.name(r.connecting);
      Gia u = union_gia(substitute(gl, ue, ve), substitute(gr, v0, u0));
      return with_ends(u, v0, ue);
    }
    default: {
      TauQuotient ql = strip_tau_with_classes(l.automaton);
      TauQuotient qr = strip_tau_with_classes(r.automaton);
      const StateId l0 = ql.class_of[l.initial], le = ql.class_of[l.connecting];
      const StateId r0 = qr.class_of[r.initial], re = qr.class_of[r.connecting];
      // Both sides collapsed to a point: same as doing nothing.
      if (l0 == le && r0 == re) return tau_step(a);
      Gia gl = tag(ql.automaton, 1);
      Gia gr = tag(qr.automaton, 2);
      Gia x = interleave(gl, gr);
      auto pair = [](const std::string& p, const std::string& q) { return "(" + p + "," + q + ")"; };
      return with_ends(x, pair(gl.name(l0), gr.name(r0)), pair(gl.name(le), gr.name(re)));
    }
  }
}

std::vector<std::size_t> out_except(const Gia& g, StateId s, std::size_t skip) {
  std::vector<std::size_t> out;
  for (auto i : g.out(s)) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

// Whether dst is reachable from src without using transition `skip`.
bool reaches_avoiding(const Gia& g, StateId src, StateId dst, std::size_t skip) {
  std::vector<bool> seen(g.num_states(), false);
  std::vector<StateId> stack{src};
  seen[src] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (auto i : g.out(s)) {
      if (i == skip) continue;
      StateId d = g.transitions()[i].dst;
      if (d == dst) return true;
      if (!seen[d]) {
        seen[d] = true;
        stack.push_back(d);
      }
    }
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string class_name(const Gia& g, const std::vector<StateId>& members) {
  if (members.size() == 1) return g.name(members[0]);
  std::vector<std::string> names;
  for (auto s : members) names.push_back(g.name(s));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

TauQuotient quotient(const Gia& g, UnionFind uf) {
  std::map<std::size_t, std::vector<StateId>> members;
  for (StateId s = 0; s < g.num_states(); ++s) members[uf.find(s)].push_back(s);
  std::vector<std::string> names;
  std::map<std::size_t, StateId> id;
  for (const auto& [root, ms] : members) {
    id[root] = names.size();
    names.push_back(class_name(g, ms));
  }
  TauQuotient q{Gia(), std::vector<StateId>(g.num_states())};
  for (StateId s = 0; s < g.num_states(); ++s) q.class_of[s] = id[uf.find(s)];
  std::vector<Transition> ts;
  for (const auto& t : g.transitions()) {
    StateId a = q.class_of[t.src], b = q.class_of[t.dst];
    if (a == b && t.action.is_tau()) continue;
    ts.push_back(Transition{a, t.action, b});
  }
  q.automaton = Gia(std::move(names), q.class_of[g.initial()], g.group(), std::move(ts),
                    g.interfaces());
  return q;
}

UnionFind accepted_merges(const Gia& g) {
  UnionFind uf(g.num_states());
  for (std::size_t i = 0; i < g.transitions().size(); ++i) {
    const auto& t = g.transitions()[i];
    if (!t.action.is_tau() || uf.find(t.src) == uf.find(t.dst)) continue;
    if (!removable_tau(g, i)) continue;
    UnionFind trial = uf;
    trial.unite(t.src, t.dst);
    TauQuotient q = quotient(g, trial);
    bool ok = is_acyclic(q.automaton);
    for (const auto& u : q.automaton.transitions()) {
      if (u.src == u.dst) ok = false;
    }
    if (ok && language_equivalent(g, q.automaton)) uf = trial;
  }
  return uf;
}

// Closure of a set of states under tau steps.
std::vector<StateId> tau_closure(const Gia& g, std::vector<StateId> states) {
  std::set<StateId> seen(states.begin(), states.end());
  std::vector<StateId> stack = states;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (auto i : g.out(s)) {
      const auto& t = g.transitions()[i];
      if (t.action.is_tau() && seen.insert(t.dst).second) stack.push_back(t.dst);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Projection project(const GChor& g, const Participant& a) { return project_rec(g, a); }

ActionSet first_actions(const Gia& g, StateId s) {
  ActionSet out;
  for (auto x : tau_closure(g, {s})) {
    for (auto i : g.out(x)) {
      const auto& t = g.transitions()[i];
      if (!t.action.is_tau()) out.insert(t.action);
    }
  }
  return out;
}

bool removable_tau(const Gia& g, std::size_t ti) {
  const Transition& t = g.transitions()[ti];
  if (!t.action.is_tau() || t.src == t.dst) return false;
  if (reaches_avoiding(g, t.src, t.dst, ti)) return false;
  const auto others = out_except(g, t.src, ti);
  if (others.empty()) return true;
  const ActionSet target = first_actions(g, t.dst);
  if (target.empty()) return false;
  ActionSet alt;
  for (auto i : others) {
    const auto& u = g.transitions()[i];
    if (u.action.is_tau()) {
      auto f = first_actions(g, u.dst);
      alt.insert(f.begin(), f.end());
    } else {
      alt.insert(u.action);
    }
  }
  if (alt == target) return true;
  ActionSet all = alt;
  all.insert(target.begin(), target.end());
  const bool inputs = std::all_of(all.begin(), all.end(), [](const Action& x) { return x.is_receive(); });
  const bool outputs = std::all_of(all.begin(), all.end(), [](const Action& x) { return x.is_send(); });
  return inputs || outputs;
}

TauQuotient strip_tau_with_classes(const Gia& g) {
  TauQuotient q = quotient(g, accepted_merges(g));
  // A merge can make further taus removable; repeat until nothing changes.
  for (;;) {
    TauQuotient next = quotient(q.automaton, accepted_merges(q.automaton));
    if (next.automaton.num_states() == q.automaton.num_states()) break;
    for (auto& c : q.class_of) c = next.class_of[c];
    q.automaton = std::move(next.automaton);
  }
  // Name classes after their original members.
  std::vector<std::vector<StateId>> members(q.automaton.num_states());
  for (StateId s = 0; s < g.num_states(); ++s) members[q.class_of[s]].push_back(s);
  std::vector<std::string> names;
  for (const auto& ms : members) names.push_back(class_name(g, ms));
  const Gia& a = q.automaton;
  q.automaton = Gia(std::move(names), a.initial(), a.group(), a.transitions(), a.interfaces());
  return q;
}

std::vector<std::vector<StateId>> tau_classes(const Gia& g) {
  const TauQuotient q = strip_tau_with_classes(g);
  std::vector<std::vector<StateId>> out(q.automaton.num_states());
  for (StateId s = 0; s < g.num_states(); ++s) out[q.class_of[s]].push_back(s);
  return out;
}

Gia strip_tau(const Gia& g) { return strip_tau_with_classes(g).automaton; }

bool language_equivalent(const Gia& a, const Gia& b) {
  using Subset = std::vector<StateId>;
  auto accepting = [](const Gia& g, const Subset& s) {
    return std::any_of(s.begin(), s.end(), [&](StateId x) { return g.is_sink(x); });
  };
  auto step = [](const Gia& g, const Subset& s) {
    std::map<Action, Subset> next;
    for (auto x : s) {
      for (auto i : g.out(x)) {
        const auto& t = g.transitions()[i];
        if (!t.action.is_tau()) next[t.action].push_back(t.dst);
      }
    }
    for (auto& [act, set] : next) set = tau_closure(g, set);
    return next;
  };
  std::set<std::pair<Subset, Subset>> seen;
  std::deque<std::pair<Subset, Subset>> queue;
  auto push = [&](Subset x, Subset y) {
    if (seen.emplace(x, y).second) queue.emplace_back(std::move(x), std::move(y));
  };
  push(tau_closure(a, {a.initial()}), tau_closure(b, {b.initial()}));
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (accepting(a, x) != accepting(b, y)) return false;
    auto nx = step(a, x);
    auto ny = step(b, y);
    std::set<Action> acts;
    for (const auto& [act, s] : nx) acts.insert(act);
    for (const auto& [act, s] : ny) acts.insert(act);
    for (const auto& act : acts) {
      auto ix = nx.find(act);
      auto iy = ny.find(act);
      push(ix == nx.end() ? Subset{} : ix->second, iy == ny.end() ? Subset{} : iy->second);
    }
  }
  return true;
}

}  // namespace giacheck
