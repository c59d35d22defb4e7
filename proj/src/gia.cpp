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

#include "giacheck/gia.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "iso_util.hpp"

namespace giacheck {

bool Interfaces::contains(const Action& a) const {
  return inputs.count(a) || outputs.count(a) || internals.count(a);
}

Gia::Gia() : Gia({"0"}, 0, {}, {}) {}

Gia::Gia(std::vector<std::string> states, StateId initial, ParticipantSet group,
         std::vector<Transition> transitions, std::optional<Interfaces> interfaces)
    : names_(std::move(states)),
      initial_(initial),
      group_(std::move(group)),
      transitions_(std::move(transitions)) {
  if (names_.empty()) throw std::invalid_argument("automaton without states");
  if (initial_ >= names_.size()) throw std::invalid_argument("initial state out of range");
  for (StateId s = 0; s < names_.size(); ++s) {
    if (!index_.emplace(names_[s], s).second) {
      throw std::invalid_argument("duplicate state name " + names_[s]);
    }
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  out_.resize(names_.size());
  in_.resize(names_.size());
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    if (t.src >= names_.size() || t.dst >= names_.size()) {
      throw std::invalid_argument("transition refers to unknown state");
    }
    out_[t.src].push_back(i);
    in_[t.dst].push_back(i);
  }
  if (interfaces) {
    interfaces_ = std::move(*interfaces);
  } else {
    for (const auto& t : transitions_) {
      switch (t.action.kind()) {
        case Action::Kind::kSend:
          interfaces_.outputs.insert(t.action);
          break;
        case Action::Kind::kReceive:
          interfaces_.inputs.insert(t.action);
          break;
        case Action::Kind::kInternal:
          interfaces_.internals.insert(t.action);
          break;
        default:
          break;
      }
    }
  }
}

std::optional<StateId> Gia::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateId Gia::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown state " + name);
  return it->second;
}

ActionSet Gia::labels() const {
  ActionSet out;
  for (const auto& t : transitions_) {
    if (!t.action.is_tau()) out.insert(t.action);
  }
  return out;
}

StateId GiaBuilder::state(const std::string& name) {
  auto [it, fresh] = index_.emplace(name, names_.size());
  if (fresh) names_.push_back(name);
  return it->second;
}

GiaBuilder& GiaBuilder::add(const std::string& src, const Action& a, const std::string& dst) {
  StateId s = state(src);
  StateId d = state(dst);
  transitions_.push_back(Transition{s, a, d});
  return *this;
}

GiaBuilder& GiaBuilder::add(const std::string& src, const std::string& action,
                            const std::string& dst) {
  return add(src, parse_action(action), dst);
}

Gia GiaBuilder::build(const std::string& initial, ParticipantSet group,
                      std::optional<Interfaces> interfaces) const {
  auto names = names_;
  auto it = index_.find(initial);
  StateId init = it == index_.end() ? names.size() : it->second;
  if (it == index_.end()) names.push_back(initial);
  return Gia(std::move(names), init, std::move(group), transitions_, std::move(interfaces));
}

bool is_acyclic(const Gia& g) {
  // Kahn's algorithm.
  std::vector<std::size_t> indeg(g.num_states(), 0);
  for (const auto& t : g.transitions()) ++indeg[t.dst];
  std::vector<StateId> ready;
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (indeg[s] == 0) ready.push_back(s);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    StateId s = ready.back();
    ready.pop_back();
    ++seen;
    for (auto i : g.out(s)) {
      if (--indeg[g.transitions()[i].dst] == 0) ready.push_back(g.transitions()[i].dst);
    }
  }
  return seen == g.num_states();
}

namespace {

bool in_group(const Gia& g, const Participant& p) { return g.group().count(p) > 0; }

std::string membership_error(const Gia& g, const Action& a) {
  const bool s = in_group(g, a.sender());
  const bool r = in_group(g, a.receiver());
  switch (a.kind()) {
    case Action::Kind::kSend:
      if (!s || r) return "output " + to_string(a) + " needs sender inside and receiver outside";
      break;
    case Action::Kind::kReceive:
      if (s || !r) return "input " + to_string(a) + " needs sender outside and receiver inside";
      break;
    case Action::Kind::kInternal:
      if (!s || !r) return "internal " + to_string(a) + " needs both participants inside";
      break;
    default:
      break;
  }
  return {};
}

}  // namespace

std::vector<std::string> validate_gia(const Gia& g) {
  std::vector<std::string> out;
  const auto& ifc = g.interfaces();
  auto check_set = [&](const ActionSet& set, Action::Kind kind, const char* what) {
    for (const auto& a : set) {
      if (a.kind() != kind) {
        out.push_back(std::string(what) + " interface holds " + to_string(a));
        continue;
      }
      if (auto e = membership_error(g, a); !e.empty()) out.push_back(e);
    }
  };
  check_set(ifc.inputs, Action::Kind::kReceive, "input");
  check_set(ifc.outputs, Action::Kind::kSend, "output");
  check_set(ifc.internals, Action::Kind::kInternal, "internal");
  for (const auto& t : g.transitions()) {
    if (t.action.is_tau()) continue;
    if (!ifc.contains(t.action)) {
      out.push_back("label " + to_string(t.action) + " on " + g.name(t.src) + " -> " +
                    g.name(t.dst) + " is not in the interface");
    }
    if (auto e = membership_error(g, t.action); !e.empty()) out.push_back(e);
  }
  if (!is_acyclic(g)) out.push_back("automaton has a cycle");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SharedInterface shared(const Gia& g1, const Gia& g2) {
  SharedInterface sh;
  auto one_way = [&](const Gia& a, const Gia& b) {
    for (const auto& in : a.interfaces().inputs) {
      if (b.interfaces().outputs.count(in.dual())) {
        sh.inputs.insert(in);
        sh.outputs.insert(in.dual());
        sh.internals.insert(in.with_kind(Action::Kind::kInternal));
      }
    }
  };
  one_way(g1, g2);
  one_way(g2, g1);
  return sh;
}

bool composable(const Gia& g1, const Gia& g2) {
  for (const auto& p : g1.group()) {
    if (g2.group().count(p)) return false;
  }
  return true;
}

namespace {

std::string tuple_name(const std::vector<const Gia*>& factors, const std::vector<StateId>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ',';
    out += factors[i]->name(c[i]);
  }
  return out + ")";
}

Product product(const std::vector<const Gia*>& factors, std::optional<std::vector<StateId>> start,
                bool synchronise) {
  const std::size_t n = factors.size();
  ParticipantSet group;
  for (const auto* f : factors) group.insert(f->group().begin(), f->group().end());

  // partner[i][label] = index of the factor that must take the dual label.
  std::vector<std::map<Action, std::size_t>> partner(n);
  Interfaces ifc;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fi = factors[i]->interfaces();
    ifc.internals.insert(fi.internals.begin(), fi.internals.end());
    auto find_partner = [&](const Action& a, bool want_output) -> std::optional<std::size_t> {
      if (!synchronise) return std::nullopt;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const auto& fj = factors[j]->interfaces();
        if ((want_output ? fj.outputs : fj.inputs).count(a.dual())) return j;
      }
      return std::nullopt;
    };
    for (const auto& a : fi.outputs) {
      if (auto j = find_partner(a, false)) {
        partner[i][a] = *j;
        ifc.internals.insert(a.with_kind(Action::Kind::kInternal));
      } else {
        ifc.outputs.insert(a);
      }
    }
    for (const auto& a : fi.inputs) {
      if (auto j = find_partner(a, true)) {
        partner[i][a] = *j;
      } else {
        ifc.inputs.insert(a);
      }
    }
  }

  Product p;
  std::vector<std::string> names;
  std::vector<Transition> transitions;
  std::vector<StateId> init(n);
  if (start) {
    init = *start;
  } else {
    for (std::size_t i = 0; i < n; ++i) init[i] = factors[i]->initial();
  }
  std::deque<StateId> queue;
  auto visit = [&](const std::vector<StateId>& c) {
    auto [it, fresh] = p.index.emplace(c, p.components.size());
    if (fresh) {
      p.components.push_back(c);
      names.push_back(tuple_name(factors, c));
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(init);
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    const auto cur = p.components[s];
    for (std::size_t i = 0; i < n; ++i) {
      const Gia& fi = *factors[i];
      for (auto ti : fi.out(cur[i])) {
        const Transition& t = fi.transitions()[ti];
        auto pit = partner[i].find(t.action);
        if (pit == partner[i].end()) {
          auto next = cur;
          next[i] = t.dst;
          StateId d = visit(next);
          transitions.push_back(Transition{s, t.action, d});
          continue;
        }
        if (!t.action.is_send()) continue;  // fired from the sending side
        const std::size_t j = pit->second;
        const Gia& fj = *factors[j];
        const Action want = t.action.dual();
        for (auto tj : fj.out(cur[j])) {
          const Transition& u = fj.transitions()[tj];
          if (u.action != want) continue;
          auto next = cur;
          next[i] = t.dst;
          next[j] = u.dst;
          StateId d = visit(next);
          transitions.push_back(Transition{s, t.action.with_kind(Action::Kind::kInternal), d});
        }
      }
    }
  }
  p.automaton = Gia(std::move(names), 0, std::move(group), std::move(transitions), ifc);
  return p;
}

}  // namespace

Product tensor_all(const std::vector<const Gia*>& factors,
                   std::optional<std::vector<StateId>> start) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (!composable(*factors[i], *factors[j])) {
        throw std::invalid_argument("automata with overlapping groups are not composable");
      }
    }
  }
  return product(factors, std::move(start), true);
}

Gia tensor(const Gia& g1, const Gia& g2) { return tensor_all({&g1, &g2}).automaton; }

Gia interleave(const Gia& g1, const Gia& g2) {
  Product p = product({&g1, &g2}, std::nullopt, false);
  Interfaces ifc = g1.interfaces();
  const auto& i2 = g2.interfaces();
  ifc.inputs.insert(i2.inputs.begin(), i2.inputs.end());
  ifc.outputs.insert(i2.outputs.begin(), i2.outputs.end());
  ifc.internals.insert(i2.internals.begin(), i2.internals.end());
  const Gia& a = p.automaton;
  return Gia(a.state_names(), a.initial(), a.group(), a.transitions(), ifc);
}

namespace {

Gia rename(const Gia& g, const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> names;
  std::map<std::string, StateId> index;
  std::vector<StateId> map(g.num_states());
  for (StateId s = 0; s < g.num_states(); ++s) {
    auto [it, fresh] = index.emplace(f(g.name(s)), names.size());
    if (fresh) names.push_back(it->first);
    map[s] = it->second;
  }
  std::vector<Transition> ts;
  for (const auto& t : g.transitions()) ts.push_back(Transition{map[t.src], t.action, map[t.dst]});
  return Gia(std::move(names), map[g.initial()], g.group(), std::move(ts), g.interfaces());
}

}  // namespace

Gia substitute(const Gia& g, const std::string& u, const std::string& v) {
  return rename(g, [&](const std::string& s) { return s == v ? u : s; });
}

std::string tagged(const std::string& state, int n) { return state + "." + std::to_string(n); }

Gia tag(const Gia& g, int n) {
  return rename(g, [&](const std::string& s) { return tagged(s, n); });
}

Gia union_gia(const Gia& g1, const Gia& g2) {
  std::vector<std::string> names = g1.state_names();
  std::map<std::string, StateId> index;
  for (StateId s = 0; s < names.size(); ++s) index.emplace(names[s], s);
  std::vector<StateId> map2(g2.num_states());
  for (StateId s = 0; s < g2.num_states(); ++s) {
    auto [it, fresh] = index.emplace(g2.name(s), names.size());
    if (fresh) names.push_back(g2.name(s));
    map2[s] = it->second;
  }
  std::vector<Transition> ts = g1.transitions();
  for (const auto& t : g2.transitions()) ts.push_back(Transition{map2[t.src], t.action, map2[t.dst]});
  ParticipantSet group = g1.group();
  group.insert(g2.group().begin(), g2.group().end());
  Interfaces ifc = g1.interfaces();
  const auto& i2 = g2.interfaces();
  ifc.inputs.insert(i2.inputs.begin(), i2.inputs.end());
  ifc.outputs.insert(i2.outputs.begin(), i2.outputs.end());
  ifc.internals.insert(i2.internals.begin(), i2.internals.end());
  return Gia(std::move(names), g1.initial(), std::move(group), std::move(ts), ifc);
}

std::vector<StateId> reachable_states(const Gia& g) {
  std::vector<StateId> order{g.initial()};
  std::vector<bool> seen(g.num_states(), false);
  seen[g.initial()] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto i : g.out(order[k])) {
      StateId d = g.transitions()[i].dst;
      if (!seen[d]) {
        seen[d] = true;
        order.push_back(d);
      }
    }
  }
  return order;
}

Gia reachable_part(const Gia& g) {
  auto order = reachable_states(g);
  if (order.size() == g.num_states()) return g;
  std::vector<StateId> map(g.num_states(), static_cast<StateId>(-1));
  std::vector<std::string> names;
  for (auto s : order) {
    map[s] = names.size();
    names.push_back(g.name(s));
  }
  std::vector<Transition> ts;
  for (const auto& t : g.transitions()) {
    if (map[t.src] != static_cast<StateId>(-1)) {
      ts.push_back(Transition{map[t.src], t.action, map[t.dst]});
    }
  }
  return Gia(std::move(names), 0, g.group(), std::move(ts), g.interfaces());
}

Gia rename_states(const Gia& g, const std::string& prefix) {
  auto order = reachable_states(g);
  std::vector<bool> seen(g.num_states(), false);
  for (auto s : order) seen[s] = true;
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (!seen[s]) order.push_back(s);
  }
  std::vector<std::string> fresh(g.num_states());
  for (std::size_t k = 0; k < order.size(); ++k) fresh[order[k]] = prefix + std::to_string(k);
  std::map<std::string, std::string> by_name;
  for (StateId s = 0; s < g.num_states(); ++s) by_name[g.name(s)] = fresh[s];
  return rename(g, [&](const std::string& s) { return by_name.at(s); });
}

namespace {

std::vector<bool> coreachable(const Gia& g, const std::vector<StateId>& targets) {
  std::vector<bool> ok(g.num_states(), false);
  std::vector<StateId> stack;
  for (auto t : targets) {
    if (!ok[t]) {
      ok[t] = true;
      stack.push_back(t);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (auto i : g.in(s)) {
      StateId p = g.transitions()[i].src;
      if (!ok[p]) {
        ok[p] = true;
        stack.push_back(p);
      }
    }
  }
  return ok;
}

void collect_words(const Gia& g, StateId s, const std::vector<bool>& target,
                   const std::vector<bool>& alive, ActionWord& word,
                   std::set<ActionWord>& out) {
  if (target[s]) out.insert(word);
  for (auto i : g.out(s)) {
    const auto& t = g.transitions()[i];
    if (!alive[t.dst]) continue;
    if (t.action.is_tau()) {
      collect_words(g, t.dst, target, alive, word, out);
    } else {
      word.push_back(t.action);
      collect_words(g, t.dst, target, alive, word, out);
      word.pop_back();
    }
  }
}

std::set<ActionWord> words_to(const Gia& g, StateId from, const std::vector<StateId>& targets) {
  std::set<ActionWord> out;
  std::vector<bool> alive = coreachable(g, targets);
  if (!alive[from]) return out;
  std::vector<bool> target(g.num_states(), false);
  for (auto t : targets) target[t] = true;
  ActionWord word;
  collect_words(g, from, target, alive, word, out);
  return out;
}

}  // namespace

std::set<ActionWord> language(const Gia& g, StateId from, StateId to) {
  return words_to(g, from, {to});
}

std::set<ActionWord> complete_language(const Gia& g) {
  std::vector<StateId> sinks;
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (g.is_sink(s)) sinks.push_back(s);
  }
  return words_to(g, g.initial(), sinks);
}

bool gia_isomorphic(const Gia& a0, const Gia& b0) {
  const Gia a = reachable_part(a0);
  const Gia b = reachable_part(b0);
  if (a.num_states() != b.num_states() || a.transitions().size() != b.transitions().size()) {
    return false;
  }
  auto colours = [](const Gia& g) {
    const std::size_t n = g.num_states();
    std::vector<std::uint64_t> c(n, 1);
    c[g.initial()] = 2;
    detail::ColouredAdj out(n), in(n);
    for (const auto& t : g.transitions()) {
      auto h = detail::hash_string(to_string(t.action));
      out[t.src].emplace_back(h, t.dst);
      in[t.dst].emplace_back(detail::mix(h, 3), t.src);
    }
    return detail::refine(std::move(c), out, in);
  };
  const auto ca = colours(a);
  const auto cb = colours(b);
  const std::set<Transition> tb(b.transitions().begin(), b.transitions().end());
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  return detail::find_bijection(
      ca, cb, [&](std::size_t x, std::size_t y, const std::vector<std::size_t>& map) {
        if ((x == a.initial()) != (y == b.initial())) return false;
        auto image = [&](StateId s) { return s == x ? y : map[s]; };
        std::size_t ka = 0;
        for (auto i : a.out(x)) {
          const auto& t = a.transitions()[i];
          StateId d = image(t.dst);
          if (d == npos) continue;
          ++ka;
          if (!tb.count(Transition{y, t.action, d})) return false;
        }
        for (auto i : a.in(x)) {
          const auto& t = a.transitions()[i];
          if (t.src == x) continue;
          StateId s = image(t.src);
          if (s == npos) continue;
          ++ka;
          if (!tb.count(Transition{s, t.action, y})) return false;
        }
        // Count the edges of y towards already mapped states.
        std::vector<bool> mapped_b(b.num_states(), false);
        for (std::size_t s = 0; s < map.size(); ++s) {
          if (map[s] != npos) mapped_b[map[s]] = true;
        }
        mapped_b[y] = true;
        std::size_t kb = 0;
        for (auto i : b.out(y)) kb += mapped_b[b.transitions()[i].dst];
        for (auto i : b.in(y)) {
          const auto& t = b.transitions()[i];
          if (t.src != y) kb += mapped_b[t.src];
        }
        return ka == kb;
      });
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_label(const Action& a) { return a.is_tau() ? "τ" : to_string(a); }

std::string join(const ActionSet& s) {
  std::string out;
  for (const auto& a : s) {
    if (!out.empty()) out += ", ";
    out += to_string(a);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string gia_to_dot(const Gia& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=LR;\n";
  std::string group;
  for (const auto& p : g.group()) group += (group.empty() ? "" : ",") + p.name;
  os << "  legend [shape=note,label=" << quoted("group: {" + group + "}\\linputs: " +
                                                join(g.interfaces().inputs) + "\\loutputs: " +
                                                join(g.interfaces().outputs) + "\\linternal: " +
                                                join(g.interfaces().internals) + "\\l")
     << "];\n";
  std::vector<StateId> states(g.num_states());
  for (StateId s = 0; s < states.size(); ++s) states[s] = s;
  std::sort(states.begin(), states.end(),
            [&](StateId x, StateId y) { return g.name(x) < g.name(y); });
  for (auto s : states) {
    os << "  " << quoted(g.name(s)) << " [shape="
       << (g.is_sink(s) ? "doublecircle" : "circle")
       << (s == g.initial() ? ",style=bold" : "") << "];\n";
  }
  os << "  __start [shape=point];\n  __start -> " << quoted(g.name(g.initial())) << ";\n";
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& t : g.transitions()) {
    edges.emplace_back(g.name(t.src), dot_label(t.action), g.name(t.dst));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [s, l, d] : edges) {
    os << "  " << quoted(s) << " -> " << quoted(d) << " [label=" << quoted(l) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace giacheck
