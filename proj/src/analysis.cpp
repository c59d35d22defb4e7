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

#include "giacheck/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "giacheck/projection.hpp"
#include "json.hpp"

namespace giacheck {

ActionWord dual(const ActionWord& w) {
  ActionWord out;
  out.reserve(w.size());
  for (const auto& a : w) out.push_back(a.dual());
  return out;
}

ActionWord channel_word(const ActionWord& w, const Participant& a, const Participant& b) {
  ActionWord out;
  for (const auto& x : w) {
    if (!x.is_tau() && x.subject() == a && x.object() == b) out.push_back(x);
  }
  return out;
}

ActionWord ro(const ActionWord& w) {
  if (!w.empty() && w.back().is_send()) return ActionWord(w.begin(), w.end() - 1);
  return w;
}

std::set<ActionWord> prefixes(const ActionWord& w) {
  std::set<ActionWord> out;
  for (std::size_t k = 0; k <= w.size(); ++k) out.emplace(w.begin(), w.begin() + k);
  return out;
}

namespace {

void maximal_words(const Gia& g, StateId s, ActionWord& w, std::set<ActionWord>& out) {
  if (g.is_sink(s)) {
    out.insert(w);
    return;
  }
  for (auto i : g.out(s)) {
    const auto& t = g.transitions()[i];
    if (!t.action.is_tau()) w.push_back(t.action);
    maximal_words(g, t.dst, w, out);
    if (!t.action.is_tau()) w.pop_back();
  }
}

/**
 * Whether some run of g2 from v2 reaches `target` (an input AB?m) without
 * being blocked. `others` are the members of the sending side other than A
 * and `pref[k]` the admissible B-side words towards others[k].
 */
bool good_run_exists(const Gia& g2, StateId v2, const Action& target, const ActionSet& shared_labels,
                     const std::vector<Participant>& others,
                     const std::vector<std::set<ActionWord>>& pref) {
  const Participant& a = target.sender();
  const Participant& b = target.receiver();
  using Key = std::tuple<StateId, std::vector<ActionWord>, std::vector<char>>;
  std::set<Key> seen;
  std::vector<Key> stack;
  Key start{v2, std::vector<ActionWord>(others.size()), std::vector<char>(others.size(), 0)};
  seen.insert(start);
  stack.push_back(start);
  auto index_of = [&](const Participant& p) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (others[k] == p) return k;
    }
    return std::nullopt;
  };
  while (!stack.empty()) {
    auto [s, words, pending] = stack.back();
    stack.pop_back();
    for (auto i : g2.out(s)) {
      const auto& t = g2.transitions()[i];
      const Action& beta = t.action;
      if (beta == target) {
        bool ok = true;
        for (std::size_t k = 0; k < others.size() && ok; ++k) {
          if (pending[k] && !pref[k].count(ro(words[k]))) ok = false;
        }
        if (ok) return true;
        continue;
      }
      auto next_words = words;
      auto next_pending = pending;
      if (!beta.is_tau() && beta.subject() == b) {
        auto k = index_of(beta.object());
        if (shared_labels.count(beta)) {
          if (beta.object() == a) continue;
          if (k) next_pending[*k] = 1;
        }
        if (k) next_words[*k].push_back(beta);
      }
      Key next{t.dst, std::move(next_words), std::move(next_pending)};
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace

std::vector<Action> unmatched_shared_outputs(const Gia& g1, const Gia& g2, StateId v, StateId v2) {
  const SharedInterface sh = shared(g1, g2);
  ActionSet shared_labels = sh.inputs;
  shared_labels.insert(sh.outputs.begin(), sh.outputs.end());
  std::vector<Action> out;
  for (auto i : g1.out(v)) {
    const Transition& t0 = g1.transitions()[i];
    const Action& alpha = t0.action;
    if (!alpha.is_send() || !sh.outputs.count(alpha) || !g1.group().count(alpha.sender())) continue;
    if (std::find(out.begin(), out.end(), alpha) != out.end()) continue;
    const Action target = alpha.dual();
    std::vector<Participant> others;
    for (const auto& p : g1.group()) {
      if (p != alpha.sender()) others.push_back(p);
    }
    bool unmatched = false;
    if (others.empty()) {
      unmatched = !good_run_exists(g2, v2, target, shared_labels, others, {});
    } else {
      std::set<ActionWord> runs;
      ActionWord w{alpha};
      maximal_words(g1, t0.dst, w, runs);
      for (const auto& run : runs) {
        std::vector<std::set<ActionWord>> pref;
        for (const auto& c : others) {
          pref.push_back(prefixes(dual(channel_word(run, c, alpha.receiver()))));
        }
        if (!good_run_exists(g2, v2, target, shared_labels, others, pref)) {
          unmatched = true;
          break;
        }
      }
    }
    if (unmatched) out.push_back(alpha);
  }
  return out;
}

bool unmatched_shared_output(const Gia& g1, const Gia& g2, StateId v, StateId v2) {
  return !unmatched_shared_outputs(g1, g2, v, v2).empty();
}

namespace {

std::vector<std::string> trail_to(const Gia& g, StateId target) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> via(g.num_states(), none);
  std::vector<bool> seen(g.num_states(), false);
  std::deque<StateId> queue{g.initial()};
  seen[g.initial()] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (s == target) break;
    for (auto i : g.out(s)) {
      StateId d = g.transitions()[i].dst;
      if (!seen[d]) {
        seen[d] = true;
        via[d] = i;
        queue.push_back(d);
      }
    }
  }
  std::vector<std::string> steps;
  for (StateId s = target; via[s] != none;) {
    const auto& t = g.transitions()[via[s]];
    steps.push_back(g.name(t.src) + " -" + to_string(t.action) + "-> " + g.name(t.dst));
    s = t.src;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Witness error_witness(const Gia& product, StateId s, const Action& label,
                      const std::string& detail) {
  return Witness{"error-state", {product.name(s)}, to_string(label), trail_to(product, s), detail,
                 std::nullopt};
}

std::vector<const Gia*> pointers(const std::vector<Gia>& gs) {
  std::vector<const Gia*> out;
  for (const auto& g : gs) out.push_back(&g);
  return out;
}

std::vector<StateId> topological_order(const Gia& g) {
  std::vector<std::size_t> indeg(g.num_states(), 0);
  for (const auto& t : g.transitions()) ++indeg[t.dst];
  std::vector<StateId> order;
  std::vector<StateId> ready;
  for (StateId s = g.num_states(); s-- > 0;) {
    if (indeg[s] == 0) ready.push_back(s);
  }
  while (!ready.empty()) {
    StateId s = ready.back();
    ready.pop_back();
    order.push_back(s);
    for (auto i : g.out(s)) {
      if (--indeg[g.transitions()[i].dst] == 0) ready.push_back(g.transitions()[i].dst);
    }
  }
  return order;
}

std::set<StateId> tau_closure(const Gia& g, const std::set<StateId>& from) {
  std::set<StateId> seen = from;
  std::vector<StateId> stack(from.begin(), from.end());
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (auto i : g.out(s)) {
      const auto& t = g.transitions()[i];
      if (t.action.is_tau() && seen.insert(t.dst).second) stack.push_back(t.dst);
    }
  }
  return seen;
}

// States reachable from s by tau* a tau*.
std::set<StateId> weak_successors(const Gia& g, StateId s, const Action& a) {
  std::set<StateId> mid;
  for (auto x : tau_closure(g, {s})) {
    for (auto i : g.out(x)) {
      const auto& t = g.transitions()[i];
      if (t.action == a) mid.insert(t.dst);
    }
  }
  return tau_closure(g, mid);
}

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<Witness> error_states(const Gia& g1, const Gia& g2) {
  Product p = tensor_all({&g1, &g2});
  std::vector<Witness> out;
  for (StateId s = 0; s < p.automaton.num_states(); ++s) {
    const auto& c = p.components[s];
    for (const auto& a : unmatched_shared_outputs(g1, g2, c[0], c[1])) {
      out.push_back(error_witness(p.automaton, s, a, "output not matched by the second automaton"));
    }
    for (const auto& a : unmatched_shared_outputs(g2, g1, c[1], c[0])) {
      out.push_back(error_witness(p.automaton, s, a, "output not matched by the first automaton"));
    }
  }
  return out;
}

std::vector<Witness> error_states(const std::vector<Gia>& factors) {
  std::vector<Witness> out;
  const std::size_t n = factors.size();
  if (n < 2) return out;
  Product global = tensor_all(pointers(factors));
  std::vector<std::vector<Gia>> rest_factors(n);
  std::vector<Product> rest(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) rest_factors[i].push_back(factors[j]);
    }
    rest[i] = tensor_all(pointers(rest_factors[i]));
  }
  std::map<std::pair<std::size_t, std::vector<StateId>>, Product> fallback;
  std::map<std::tuple<std::size_t, StateId, std::vector<StateId>>, std::vector<Action>> memo;
  for (StateId s = 0; s < global.automaton.num_states(); ++s) {
    const auto& c = global.components[s];
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<StateId> rc;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) rc.push_back(c[j]);
      }
      auto key = std::make_tuple(i, c[i], rc);
      auto it = memo.find(key);
      if (it == memo.end()) {
        const Gia* g2 = &rest[i].automaton;
        StateId v2 = 0;
        if (auto r = rest[i].index.find(rc); r != rest[i].index.end()) {
          v2 = r->second;
        } else {
          auto fk = std::make_pair(i, rc);
          auto f = fallback.find(fk);
          if (f == fallback.end()) {
            f = fallback.emplace(fk, tensor_all(pointers(rest_factors[i]), rc)).first;
          }
          g2 = &f->second.automaton;
        }
        it = memo.emplace(key, unmatched_shared_outputs(factors[i], *g2, c[i], v2)).first;
      }
      for (const auto& a : it->second) {
        const std::string who = a.sender().name;
        out.push_back(error_witness(global.automaton, s, a,
                                    "output of " + who + " cannot be received by " +
                                        a.receiver().name));
      }
    }
  }
  return out;
}

std::vector<Witness> parallel_errors_in(const Gia& p) {
  std::vector<Witness> out;
  for (StateId v = 0; v < p.num_states(); ++v) {
    std::map<Action, std::vector<StateId>> by_label;
    for (auto i : p.out(v)) {
      const auto& t = p.transitions()[i];
      if (!t.action.is_tau()) by_label[t.action].push_back(t.dst);
    }
    for (const auto& [label, targets] : by_label) {
      bool found = false;
      for (std::size_t x = 0; x < targets.size() && !found; ++x) {
        for (std::size_t y = x + 1; y < targets.size() && !found; ++y) {
          std::set<StateId> wx;
          for (auto i : p.out(targets[x])) {
            if (p.transitions()[i].action == label) wx.insert(p.transitions()[i].dst);
          }
          for (auto i : p.out(targets[y])) {
            const auto& t = p.transitions()[i];
            if (t.action == label && wx.count(t.dst)) {
              found = true;
              out.push_back(Witness{"parallel",
                                    {p.name(v)},
                                    to_string(label),
                                    trail_to(p, v),
                                    "both threads can take " + to_string(label) + " via " +
                                        p.name(targets[x]) + " and " + p.name(targets[y]),
                                    std::nullopt});
              break;
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<Witness> branching_errors_in(const Gia& p) {
  std::vector<Witness> out;
  const auto& ts = p.transitions();
  if (ts.size() == 1) {
    out.push_back(Witness{"branching", {p.name(p.initial())}, to_string(ts[0].action),
                          {}, "condition 1: the choice has a single transition", std::nullopt});
  }
  const auto order = topological_order(p);
  std::vector<char> tau_only(p.num_states(), 0), non_tau(p.num_states(), 0);
  std::vector<ParticipantSet> sobj(p.num_states());
  tau_only[p.initial()] = 1;
  for (auto s : order) {
    for (auto i : p.out(s)) {
      const auto& t = ts[i];
      if (tau_only[s] && t.action.is_tau()) tau_only[t.dst] = 1;
      if (non_tau[s] || ((tau_only[s] || non_tau[s]) && !t.action.is_tau())) non_tau[t.dst] = 1;
      auto ps = t.action.participants();
      sobj[t.dst].insert(sobj[s].begin(), sobj[s].end());
      sobj[t.dst].insert(ps.begin(), ps.end());
    }
  }
  auto only_tau = [&](StateId s) { return tau_only[s] && !non_tau[s]; };

  for (StateId v = 0; v < p.num_states(); ++v) {
    if (!only_tau(v)) continue;
    const auto& outs = p.out(v);
    bool found = false;
    for (std::size_t x = 0; x < outs.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < outs.size() && !found; ++y) {
        const auto& t1 = ts[outs[x]];
        const auto& t2 = ts[outs[y]];
        if (!t1.action.is_internal() || !t2.action.is_internal()) continue;
        // Distinct targets only matter for equal labels.
        if (t1.action == t2.action && t1.dst == t2.dst) continue;
        if (t1.action == t2.action || t1.action.sender() != t2.action.sender()) {
          found = true;
          out.push_back(Witness{"branching",
                                {p.name(v)},
                                to_string(t1.action) + " / " + to_string(t2.action),
                                trail_to(p, v),
                                t1.action == t2.action
                                    ? "condition 2: the same label leads to distinct states"
                                    : "condition 2: distinct participants start the choice",
                                std::nullopt});
        }
      }
    }
  }

  // First transitions of each run, grouped when they commute.
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts[i].action.is_tau() && only_tau(ts[i].src)) first.push_back(i);
  }
  Dsu dsu(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) {
    for (std::size_t y = x + 1; y < first.size(); ++y) {
      const auto& e1 = ts[first[x]];
      const auto& e2 = ts[first[y]];
      auto s1 = weak_successors(p, e1.dst, e2.action);
      auto s2 = weak_successors(p, e2.dst, e1.action);
      if (std::any_of(s1.begin(), s1.end(), [&](StateId s) { return s2.count(s) > 0; })) {
        dsu.unite(x, y);
      }
    }
  }
  std::map<std::size_t, std::size_t> first_class;
  for (std::size_t x = 0; x < first.size(); ++x) first_class[first[x]] = dsu.find(x);
  std::vector<std::set<std::size_t>> side(p.num_states());
  for (auto s : order) {
    for (auto i : p.out(s)) {
      auto& dst = side[ts[i].dst];
      if (auto f = first_class.find(i); f != first_class.end()) {
        dst.insert(f->second);
      } else {
        dst.insert(side[s].begin(), side[s].end());
      }
    }
  }
  auto side_of = [&](std::size_t i) {
    if (auto f = first_class.find(i); f != first_class.end()) return std::set<std::size_t>{f->second};
    return side[ts[i].src];
  };
  std::map<Action, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].action.is_internal()) by_label[ts[i].action].push_back(i);
  }
  std::set<std::tuple<StateId, StateId, Action>> reported;
  for (const auto& [label, idx] : by_label) {
    for (std::size_t x = 0; x < idx.size(); ++x) {
      for (std::size_t y = x + 1; y < idx.size(); ++y) {
        StateId v = ts[idx[x]].src, w = ts[idx[y]].src;
        if (v == w || (only_tau(v) && only_tau(w))) continue;
        auto sv = side_of(idx[x]);
        auto sw = side_of(idx[y]);
        if (sv.empty() || sw.empty()) continue;
        if (std::any_of(sv.begin(), sv.end(), [&](std::size_t c) { return sw.count(c) > 0; })) {
          continue;
        }
        std::optional<Participant> unaware;
        for (const auto& q : {label.sender(), label.receiver()}) {
          if (!sobj[v].count(q) && !sobj[w].count(q)) {
            unaware = q;
            break;
          }
        }
        if (!unaware) continue;
        auto key = std::make_tuple(std::min(v, w), std::max(v, w), label);
        if (!reported.insert(key).second) continue;
        out.push_back(Witness{"branching",
                              {p.name(std::min(v, w)), p.name(std::max(v, w))},
                              to_string(label),
                              trail_to(p, std::min(v, w)),
                              "condition 3: " + unaware->name +
                                  " cannot tell the alternatives apart",
                              std::nullopt});
      }
    }
  }
  return out;
}

std::vector<Gia> stripped_projections(const GChor& g) {
  std::vector<Gia> out;
  for (const auto& a : participants(g)) {
    out.push_back(rename_states(strip_tau(project(g, a).automaton), a.name));
  }
  return out;
}

Gia stripped_product(const GChor& g) {
  auto locals = stripped_projections(g);
  return tensor_all(pointers(locals)).automaton;
}

std::vector<Witness> parallel_error_states(const GChor& g) {
  return parallel_errors_in(stripped_product(g));
}

namespace {

// Interactions that can occur first in a product.
ActionSet initial_interactions(const Gia& p) {
  ActionSet out;
  for (auto s : tau_closure(p, {p.initial()})) {
    for (auto i : p.out(s)) {
      const auto& t = p.transitions()[i];
      if (!t.action.is_tau()) out.insert(t.action);
    }
  }
  return out;
}

}  // namespace

std::vector<Witness> branching_error_states(const GChor& g) {
  Gia p = stripped_product(g);
  auto out = branching_errors_in(p);
  if (g.kind() != GChor::Kind::kBranch) return out;
  const ActionSet left = initial_interactions(stripped_product(g.left()));
  for (const auto& a : initial_interactions(stripped_product(g.right()))) {
    if (!left.count(a)) continue;
    out.push_back(Witness{"branching", {p.name(p.initial())}, to_string(a), {},
                          "condition 4: both alternatives can start with " + to_string(a),
                          std::nullopt});
  }
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

}  // namespace

BufferedResult explore_buffered_system(const std::vector<Gia>& locals, std::size_t state_cap) {
  BufferedResult res;
  const std::size_t n = locals.size();
  std::map<Participant, std::size_t> who;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : locals[i].group()) who[p] = i;
  }
  std::map<Message, int> msg_id;
  for (const auto& g : locals) {
    for (const auto& t : g.transitions()) {
      if (!t.action.is_tau()) msg_id.emplace(t.action.message(), static_cast<int>(msg_id.size()));
    }
  }
  // Layout: n local states, then n*n buffers (-1 when empty).
  auto buf = [&](std::size_t from, std::size_t to) { return n + from * n + to; };
  std::vector<int> init(n + n * n, -1);
  for (std::size_t i = 0; i < n; ++i) init[i] = static_cast<int>(locals[i].initial());

  std::unordered_map<std::vector<int>, std::size_t, VecHash> ids;
  std::vector<std::vector<int>> configs;
  std::vector<std::vector<std::size_t>> succ;
  auto intern = [&](const std::vector<int>& c) {
    auto [it, fresh] = ids.emplace(c, configs.size());
    if (fresh) {
      configs.push_back(c);
      succ.emplace_back();
    }
    return std::make_pair(it->second, fresh);
  };
  std::vector<std::size_t> stack{intern(init).first};
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    const std::vector<int> c = configs[id];
    for (std::size_t i = 0; i < n; ++i) {
      const Gia& g = locals[i];
      for (auto ti : g.out(static_cast<StateId>(c[i]))) {
        const auto& t = g.transitions()[ti];
        std::vector<int> next = c;
        next[i] = static_cast<int>(t.dst);
        if (t.action.is_send() || t.action.is_receive()) {
          auto from = who.find(t.action.sender());
          auto to = who.find(t.action.receiver());
          if (from == who.end() || to == who.end()) continue;
          std::size_t slot = buf(from->second, to->second);
          int m = msg_id.at(t.action.message());
          if (t.action.is_send()) {
            if (c[slot] != -1) continue;
            next[slot] = m;
          } else {
            if (c[slot] != m) continue;
            next[slot] = -1;
          }
        } else if (!t.action.is_tau()) {
          continue;
        }
        auto [nid, fresh] = intern(next);
        succ[id].push_back(nid);
        if (fresh) {
          if (configs.size() > state_cap) {
            res.inconclusive = true;
            stack.clear();
            break;
          }
          stack.push_back(nid);
        }
      }
      if (res.inconclusive) break;
    }
    if (res.inconclusive) break;
  }
  res.states_explored = configs.size();
  if (res.inconclusive) {
    for (auto& s : succ) s.clear();
  }
  // Terminal configurations and run counts; the configuration graph is acyclic.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> runs(configs.size(), 0);
  std::vector<char> done(configs.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> work{{0, 0}};
  while (!work.empty()) {
    auto& [id, k] = work.back();
    if (k < succ[id].size()) {
      std::size_t nxt = succ[id][k++];
      if (!done[nxt]) work.emplace_back(nxt, 0);
      continue;
    }
    if (!done[id]) {
      done[id] = 1;
      if (succ[id].empty()) {
        runs[id] = 1;
        if (!res.inconclusive) {
          const auto& c = configs[id];
          for (std::size_t i = 0; i < n; ++i) {
            if (!locals[i].is_sink(static_cast<StateId>(c[i]))) res.deadlock_free = false;
          }
          for (std::size_t j = n; j < c.size(); ++j) {
            if (c[j] != -1) res.orphan_free = false;
          }
        }
      } else {
        std::uint64_t total = 0;
        for (auto s : succ[id]) total = runs[s] > kMax - total ? kMax : total + runs[s];
        runs[id] = total;
      }
    }
    work.pop_back();
  }
  res.traces_explored = runs[0];
  return res;
}

BufferedResult explore_buffered_system(const GChor& g, std::size_t state_cap) {
  return explore_buffered_system(stripped_projections(g), state_cap);
}

Verdict check_well_formed(const GChor& g, const CheckOptions& opts) {
  Verdict v;
  if (opts.run_oracle) {
    Semantics sem = semantics(g);
    v.oracle_well_formed = is_defined(sem);
    if (!v.oracle_well_formed) v.oracle_failure = std::get<Undefined>(sem);
  }
  auto locals = stripped_projections(g);
  v.witnesses = error_states(locals);
  for (const auto& st : subterms(g)) {
    const auto kind = st.term.kind();
    if (kind != GChor::Kind::kPar && kind != GChor::Kind::kBranch) continue;
    auto ws = kind == GChor::Kind::kPar ? parallel_error_states(st.term)
                                        : branching_error_states(st.term);
    SubtermVerdict sv{st.path, kind == GChor::Kind::kPar ? "par" : "branch",
                      render_gchor(st.term), ws.empty(), ws.size()};
    v.per_subterm.push_back(sv);
    for (auto& w : ws) {
      w.subterm = st.path;
      v.witnesses.push_back(std::move(w));
    }
  }
  v.well_formed = v.witnesses.empty();
  if (opts.run_buffered) v.buffered = explore_buffered_system(locals, opts.state_cap);
  return v;
}

std::string verdict_to_json(const Verdict& v, int indent) {
  using nlohmann::json;
  json j;
  j["well_formed"] = v.well_formed;
  j["oracle_well_formed"] = v.oracle_well_formed;
  if (v.oracle_failure) {
    j["oracle_failure"] = {{"reason", to_string(v.oracle_failure->reason)},
                           {"path", to_string(v.oracle_failure->path)},
                           {"subterm", render_gchor(v.oracle_failure->subterm)}};
  } else {
    j["oracle_failure"] = nullptr;
  }
  j["witnesses"] = json::array();
  for (const auto& w : v.witnesses) {
    json jw = {{"kind", w.kind},
               {"states", w.states},
               {"label", w.label},
               {"trail", w.trail},
               {"detail", w.detail}};
    jw["subterm"] = w.subterm ? json(to_string(*w.subterm)) : json(nullptr);
    j["witnesses"].push_back(jw);
  }
  j["per_subterm"] = json::array();
  for (const auto& s : v.per_subterm) {
    j["per_subterm"].push_back({{"path", to_string(s.path)},
                                {"kind", s.kind},
                                {"term", s.term},
                                {"ok", s.ok},
                                {"witnesses", s.witnesses}});
  }
  if (v.buffered) {
    j["buffered"] = {{"deadlock_free", v.buffered->deadlock_free},
                     {"orphan_free", v.buffered->orphan_free},
                     {"inconclusive", v.buffered->inconclusive},
                     {"traces_explored", v.buffered->traces_explored},
                     {"states_explored", v.buffered->states_explored}};
  } else {
    j["buffered"] = nullptr;
  }
  return j.dump(indent);
}

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.well_formed ? "well-formed" : "not well-formed") << "\n";
  os << "pomset semantics: " << (v.oracle_well_formed ? "defined" : "undefined");
  if (v.oracle_failure) {
    os << " (" << to_string(v.oracle_failure->reason) << " at "
       << to_string(v.oracle_failure->path) << ": " << render_gchor(v.oracle_failure->subterm)
       << ")";
  }
  os << "\n";
  for (const auto& w : v.witnesses) {
    os << "  " << w.kind;
    if (w.subterm) os << " [" << to_string(*w.subterm) << "]";
    os << " at";
    for (const auto& s : w.states) os << " " << s;
    os << " on " << w.label << ": " << w.detail << "\n";
  }
  if (v.buffered) {
    os << "buffered run: " << (v.buffered->deadlock_free ? "deadlock-free" : "deadlock")
       << ", " << (v.buffered->orphan_free ? "orphan-free" : "orphan messages");
    if (v.buffered->inconclusive) os << " (inconclusive, state cap reached)";
    os << "\n";
  }
  return os.str();
}

}  // namespace giacheck
