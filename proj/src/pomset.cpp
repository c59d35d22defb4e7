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

#include "giacheck/pomset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iso_util.hpp"

namespace giacheck {

Pomset::Pomset(std::vector<Action> labels, const std::vector<Edge>& order)
    : labels_(std::move(labels)), lt_(labels_.size() * labels_.size(), 0) {
  const std::size_t n = labels_.size();
  for (auto [a, b] : order) {
    if (a >= n || b >= n) throw std::invalid_argument("pomset order refers to unknown event");
    lt_[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!lt_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (lt_[k * n + j]) lt_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lt_[i * n + i]) throw std::invalid_argument("pomset order is cyclic");
  }
}

std::vector<Pomset::Edge> Pomset::covering() const {
  std::vector<Edge> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c) {
        if (less(a, c) && less(c, b)) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Pomset::Edge> Pomset::order() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Pomset interaction_pomset(const Participant& a, const Participant& b, const Message& m) {
  return Pomset({Action::send(a, b, m), Action::receive(a, b, m)}, {{0, 1}});
}

namespace {

Pomset disjoint_union(const Pomset& r, const Pomset& r2, bool sequential) {
  std::vector<Action> labels = r.labels();
  labels.insert(labels.end(), r2.labels().begin(), r2.labels().end());
  std::vector<Pomset::Edge> order = r.order();
  const std::size_t off = r.size();
  for (auto [a, b] : r2.order()) order.emplace_back(a + off, b + off);
  if (sequential) {
    for (std::size_t a = 0; a < r.size(); ++a) {
      for (std::size_t b = 0; b < r2.size(); ++b) {
        if (r.label(a).subject() == r2.label(b).subject()) order.emplace_back(a, b + off);
      }
    }
  }
  return Pomset(std::move(labels), order);
}

ActionSet input_labels(const PomsetSet& rs) {
  ActionSet out;
  for (const auto& r : rs) {
    for (const auto& l : r.labels()) {
      if (l.is_receive()) out.insert(l);
    }
  }
  return out;
}

}  // namespace

Pomset seq(const Pomset& r, const Pomset& r2) { return disjoint_union(r, r2, true); }

Pomset par(const Pomset& r, const Pomset& r2) { return disjoint_union(r, r2, false); }

bool well_forked(const PomsetSet& r1, const PomsetSet& r2) {
  ActionSet a = input_labels(r1);
  for (const auto& l : input_labels(r2)) {
    if (a.count(l)) return false;
  }
  return true;
}

Pomset restrict_to(const Pomset& r, const Participant& a) {
  std::vector<std::size_t> keep;
  for (std::size_t e = 0; e < r.size(); ++e) {
    if (r.label(e).subject() == a) keep.push_back(e);
  }
  std::vector<Action> labels;
  std::vector<Pomset::Edge> order;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(r.label(keep[i]));
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (r.less(keep[i], keep[j])) order.emplace_back(i, j);
    }
  }
  return Pomset(std::move(labels), order);
}

std::vector<std::size_t> min_events(const Pomset& r) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < r.size(); ++e) {
    bool minimal = true;
    for (std::size_t d = 0; d < r.size() && minimal; ++d) {
      if (r.less(d, e)) minimal = false;
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

std::pair<ActionSet, ActionSet> divergence(const Participant& a, const PomsetSet& r1,
                                           const PomsetSet& r2) {
  auto firsts = [&](const PomsetSet& rs) {
    ActionSet out;
    for (const auto& r : rs) {
      Pomset p = restrict_to(r, a);
      for (auto e : min_events(p)) out.insert(p.label(e));
    }
    return out;
  };
  return {firsts(r1), firsts(r2)};
}

std::string to_string(Role r) {
  switch (r) {
    case Role::kActive:
      return "active";
    case Role::kPassive:
      return "passive";
    default:
      return "neither";
  }
}

Role classify(const Participant& a, const PomsetSet& r1, const PomsetSet& r2) {
  auto [l1, l2] = divergence(a, r1, r2);
  if (l1.empty() || l2.empty()) return Role::kNeither;
  for (const auto& l : l1) {
    if (l2.count(l)) return Role::kNeither;
  }
  auto all = [&](bool (Action::*pred)() const) {
    for (const auto& l : l1) {
      if (!(l.*pred)()) return false;
    }
    for (const auto& l : l2) {
      if (!(l.*pred)()) return false;
    }
    return true;
  };
  if (all(&Action::is_send)) return Role::kActive;
  if (all(&Action::is_receive)) return Role::kPassive;
  return Role::kNeither;
}

bool well_branched(const PomsetSet& r1, const PomsetSet& r2, const ParticipantSet& ps) {
  int active = 0;
  for (const auto& a : ps) {
    switch (classify(a, r1, r2)) {
      case Role::kActive:
        ++active;
        break;
      case Role::kPassive:
        break;
      case Role::kNeither:
        return false;
    }
  }
  return active <= 1;
}

namespace {

std::vector<std::uint64_t> pomset_colours(const Pomset& r) {
  const std::size_t n = r.size();
  std::vector<std::uint64_t> c(n);
  detail::ColouredAdj out(n), in(n);
  for (std::size_t e = 0; e < n; ++e) c[e] = detail::hash_string(to_string(r.label(e)));
  for (auto [a, b] : r.covering()) {
    out[a].emplace_back(1, b);
    in[b].emplace_back(2, a);
  }
  return detail::refine(std::move(c), out, in);
}

std::uint64_t pomset_signature(const std::vector<std::uint64_t>& colours) {
  auto c = colours;
  std::sort(c.begin(), c.end());
  std::uint64_t h = c.size();
  for (auto x : c) h = detail::mix(h, x);
  return h;
}

bool isomorphic_with(const Pomset& a, const std::vector<std::uint64_t>& ca, const Pomset& b,
                     const std::vector<std::uint64_t>& cb) {
  if (a.size() != b.size()) return false;
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  return detail::find_bijection(
      ca, cb, [&](std::size_t x, std::size_t y, const std::vector<std::size_t>& map) {
        if (a.label(x) != b.label(y)) return false;
        for (std::size_t x2 = 0; x2 < map.size(); ++x2) {
          if (map[x2] == npos) continue;
          std::size_t y2 = map[x2];
          if (a.less(x, x2) != b.less(y, y2) || a.less(x2, x) != b.less(y2, y)) return false;
        }
        return true;
      });
}

}  // namespace

bool pomset_isomorphic(const Pomset& a, const Pomset& b) {
  if (a.size() != b.size()) return false;
  return isomorphic_with(a, pomset_colours(a), b, pomset_colours(b));
}

void insert_unique(PomsetSet& set, Pomset r) {
  auto cr = pomset_colours(r);
  auto sig = pomset_signature(cr);
  for (const auto& p : set) {
    if (p.size() != r.size()) continue;
    auto cp = pomset_colours(p);
    if (pomset_signature(cp) != sig) continue;
    if (isomorphic_with(p, cp, r, cr)) return;
  }
  set.push_back(std::move(r));
}

std::string to_string(Undefined::Reason r) {
  return r == Undefined::Reason::kNotWellForked ? "not-well-forked" : "not-well-branched";
}

namespace {

Semantics eval(const GChor& g, SubtermPath& path) {
  switch (g.kind()) {
    case GChor::Kind::kEmpty:
      return PomsetSet{Pomset()};
    case GChor::Kind::kInteraction:
      return PomsetSet{interaction_pomset(g.from(), g.to(), g.msg())};
    default:
      break;
  }
  path.push_back(0);
  Semantics left = eval(g.left(), path);
  if (!is_defined(left)) {
    path.pop_back();
    return left;
  }
  path.back() = 1;
  Semantics right = eval(g.right(), path);
  path.pop_back();
  if (!is_defined(right)) return right;
  const auto& r1 = std::get<PomsetSet>(left);
  const auto& r2 = std::get<PomsetSet>(right);
  PomsetSet out;
  switch (g.kind()) {
    case GChor::Kind::kSeq:
      for (const auto& a : r1) {
        for (const auto& b : r2) insert_unique(out, seq(a, b));
      }
      return out;
    case GChor::Kind::kPar:
      if (!well_forked(r1, r2)) return Undefined{Undefined::Reason::kNotWellForked, path, g};
      for (const auto& a : r1) {
        for (const auto& b : r2) insert_unique(out, par(a, b));
      }
      return out;
    default:
      if (!well_branched(r1, r2, participants(g))) {
        return Undefined{Undefined::Reason::kNotWellBranched, path, g};
      }
      for (const auto& a : r1) insert_unique(out, a);
      for (const auto& b : r2) insert_unique(out, b);
      return out;
  }
}

}  // namespace

Semantics semantics(const GChor& g) {
  SubtermPath path;
  return eval(g, path);
}

std::string pomset_to_dot(const Pomset& r, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t e = 0; e < r.size(); ++e) {
    os << "  e" << e << " [label=\"" << to_string(r.label(e)) << "\"];\n";
  }
  for (auto [a, b] : r.covering()) os << "  e" << a << " -> e" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace giacheck
