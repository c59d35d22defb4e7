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

#include "giacheck/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "giacheck/analysis.hpp"
#include "giacheck/gia.hpp"
#include "giacheck/projection.hpp"

namespace giacheck {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

namespace {

const char* const kParticipants[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
const char* const kMessages[] = {"m", "n", "k", "x", "y", "z"};

class Generator {
 public:
  Generator(Rng& rng, const CorpusConfig& cfg)
      : rng_(rng),
        np_(std::clamp<std::size_t>(cfg.max_participants, 2, 8)),
        nm_(std::clamp<std::size_t>(cfg.max_messages, 1, 6)) {}

  GChor term(std::size_t depth) {
    if (depth == 0 || rng_.chance(20)) return leaf();
    const auto r = rng_.below(100);
    if (r < 35) return GChor::seq(term(depth - 1), term(depth - 1));
    if (r < 55) return GChor::par(term(depth - 1), term(depth - 1));
    if (r < 68) return GChor::branch(term(depth - 1), term(depth - 1));
    if (r < 95 && nm_ >= 2) return guided_branch(depth);
    GChor x = term(depth - 1);
    return GChor::branch(x, x);
  }

 private:
  Participant participant() { return Participant(kParticipants[rng_.below(np_)]); }
  Message message() { return Message(kMessages[rng_.below(nm_)]); }

  GChor interaction() {
    Participant a = participant();
    Participant b = participant();
    while (b == a) b = participant();
    return GChor::interaction(a, message(), b);
  }

  GChor leaf() {
    if (rng_.chance(8)) return GChor::empty();
    return interaction();
  }

  // A choice whose alternatives start with distinct messages from one sender.
  GChor guided_branch(std::size_t depth) {
    Participant a = participant();
    Participant b = participant();
    while (b == a) b = participant();
    Message m1 = message();
    Message m2 = message();
    while (m2 == m1) m2 = message();
    GChor l = GChor::interaction(a, m1, b);
    GChor r = GChor::interaction(a, m2, b);
    if (depth >= 2) {
      l = GChor::seq(l, term(depth - 2));
      r = GChor::seq(r, term(depth - 2));
    }
    return GChor::branch(l, r);
  }

  Rng& rng_;
  std::size_t np_;
  std::size_t nm_;
};

std::vector<GChor> candidates(const GChor& g) {
  std::vector<GChor> out;
  if (!g.is_empty()) out.push_back(GChor::empty());
  if (!g.is_binary()) return out;
  out.push_back(g.left());
  out.push_back(g.right());
  auto rebuild = [&](const GChor& l, const GChor& r) {
    switch (g.kind()) {
      case GChor::Kind::kSeq:
        return GChor::seq(l, r);
      case GChor::Kind::kPar:
        return GChor::par(l, r);
      default:
        return GChor::branch(l, r);
    }
  };
  for (const auto& c : candidates(g.left())) out.push_back(rebuild(c, g.right()));
  for (const auto& c : candidates(g.right())) out.push_back(rebuild(g.left(), c));
  return out;
}

}  // namespace

GChor random_gchor(Rng& rng, const CorpusConfig& cfg) {
  return Generator(rng, cfg).term(cfg.max_depth);
}

std::vector<GChor> generate_corpus(const CorpusConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<GChor> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(random_gchor(rng, cfg));
  return out;
}

GChor shrink(const GChor& g, const std::function<bool(const GChor&)>& fails) {
  GChor cur = g;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& c : candidates(cur)) {
      if (c.size() < cur.size() && fails(c)) {
        cur = c;
        progress = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

bool agrees(const GChor& g, std::size_t cap) {
  CheckOptions o;
  o.state_cap = cap;
  o.run_buffered = false;
  Verdict v = check_well_formed(g, o);
  return v.well_formed == v.oracle_well_formed;
}

bool languages_preserved(const GChor& g) {
  for (const auto& a : participants(g)) {
    Gia p = project(g, a).automaton;
    if (!language_equivalent(p, strip_tau(p))) return false;
  }
  return true;
}

bool buffered_sound(const GChor& g, std::size_t cap) {
  CheckOptions o;
  o.state_cap = cap;
  o.run_oracle = false;
  Verdict v = check_well_formed(g, o);
  if (!v.well_formed || !v.buffered || v.buffered->inconclusive) return true;
  return v.buffered->deadlock_free && v.buffered->orphan_free;
}

}  // namespace

CorpusReport run_corpus(const CorpusConfig& cfg) {
  CorpusReport rep;
  const auto corpus = generate_corpus(cfg);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const GChor& g = corpus[i];
    ++rep.instances;
    auto fail = [&](const std::string& prop, const std::function<bool(const GChor&)>& bad) {
      rep.failures.push_back(CorpusFailure{prop, i, render_gchor(shrink(g, bad))});
    };

    CheckOptions opts;
    opts.state_cap = cfg.state_cap;
    Verdict v = check_well_formed(g, opts);
    rep.gia_well_formed += v.well_formed;
    rep.oracle_well_formed += v.oracle_well_formed;
    if (v.well_formed == v.oracle_well_formed) {
      ++rep.agreement;
    } else {
      fail("agreement", [&](const GChor& h) { return !agrees(h, cfg.state_cap); });
    }

    const auto ps = participants(g);
    bool lang_ok = true;
    for (const auto& a : ps) {
      ++rep.language_checks;
      Gia p = project(g, a).automaton;
      if (language_equivalent(p, strip_tau(p))) {
        ++rep.language_ok;
      } else {
        lang_ok = false;
      }
    }
    if (!lang_ok) fail("language", [&](const GChor& h) { return !languages_preserved(h); });

    if (v.well_formed && v.buffered) {
      ++rep.buffered_checks;
      if (v.buffered->inconclusive) {
        ++rep.buffered_inconclusive;
      } else if (v.buffered->deadlock_free && v.buffered->orphan_free) {
        ++rep.buffered_ok;
      } else {
        fail("buffered", [&](const GChor& h) { return !buffered_sound(h, cfg.state_cap); });
      }
    }

    if (ps.size() >= 3) {
      auto locals = stripped_projections(g);
      Rng pick(cfg.seed * 0x100000001b3ULL + i);
      std::vector<std::size_t> idx(locals.size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      for (std::size_t k = 0; k < 3; ++k) {
        std::swap(idx[k], idx[k + pick.below(idx.size() - k)]);
      }
      const Gia& a = locals[idx[0]];
      const Gia& b = locals[idx[1]];
      const Gia& c = locals[idx[2]];
      ++rep.triples;
      if (gia_isomorphic(tensor(a, b), tensor(b, a))) {
        ++rep.commutative_ok;
      } else {
        rep.failures.push_back(CorpusFailure{"commutativity", i, render_gchor(g)});
      }
      if (gia_isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))) {
        ++rep.associative_ok;
      } else {
        rep.failures.push_back(CorpusFailure{"associativity", i, render_gchor(g)});
      }
    }
  }
  return rep;
}

std::string format_report(const CorpusReport& r, const CorpusConfig& cfg) {
  std::ostringstream os;
  os << "corpus seed=" << cfg.seed << " count=" << cfg.count << " max-depth=" << cfg.max_depth
     << " max-participants=" << cfg.max_participants << " max-messages=" << cfg.max_messages
     << "\n";
  os << "instances: " << r.instances << "\n";
  os << "well-formed (automata): " << r.gia_well_formed << "\n";
  os << "well-formed (pomsets): " << r.oracle_well_formed << "\n";
  os << "agreement: " << r.agreement << "/" << r.instances << "\n";
  os << "language equivalence: " << r.language_ok << "/" << r.language_checks << "\n";
  os << "product triples: commutative " << r.commutative_ok << "/" << r.triples
     << ", associative " << r.associative_ok << "/" << r.triples << "\n";
  os << "buffered runs: " << r.buffered_ok << "/" << r.buffered_checks
     << " (inconclusive " << r.buffered_inconclusive << ")\n";
  os << "failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    os << "FAIL " << f.property << " #" << f.instance << ": " << f.reproducer << "\n";
  }
  return os.str();
}

}  // namespace giacheck
