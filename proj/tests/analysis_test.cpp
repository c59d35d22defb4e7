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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "figures.hpp"
#include "giacheck/analysis.hpp"
#include "giacheck/corpus.hpp"
#include "giacheck/projection.hpp"
#include "oracle.hpp"

using namespace giacheck;

namespace {

Action act(const char* s) { return parse_action(s); }

ActionWord word(std::initializer_list<const char*> ls) {
  ActionWord w;
  for (const char* l : ls) w.push_back(act(l));
  return w;
}

std::set<std::string> flagged(const std::vector<Witness>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.states.begin(), w.states.end());
  return out;
}

std::vector<std::string> conditions(const std::vector<Witness>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) {
    if (w.kind == "branching") out.push_back(w.detail.substr(0, w.detail.find(':')));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict check(const char* text) { return check_well_formed(parse_gchor(text)); }

// Replays "src -label-> dst" steps from the initial state.
bool replays(const Gia& g, const std::set<oracle::Edge>& es,
             const std::vector<std::string>& trail, const std::string& end) {
  std::string cur = g.name(g.initial());
  for (const auto& step : trail) {
    const auto a = step.find(" -");
    const auto b = step.find("-> ");
    if (a == std::string::npos || b == std::string::npos) return false;
    const std::string src = step.substr(0, a);
    const std::string label = step.substr(a + 2, b - a - 2);
    const std::string dst = step.substr(b + 3);
    if (src != cur) return false;
    if (!es.count({src, label, dst})) return false;
    cur = dst;
  }
  return cur == end;
}

}  // namespace

TEST(Words, Dual) {
  EXPECT_EQ(dual(word({"AB!m", "AB?n", "AB!?k"})), word({"AB?m", "AB!n", "AB!?k"}));
  EXPECT_EQ(dual(dual(word({"AB!m", "CA?x"}))), word({"AB!m", "CA?x"}));
}

TEST(Words, ChannelWord) {
  EXPECT_EQ(channel_word(word({"AB!m", "BC!y", "AB!n"}), Participant("A"), Participant("B")),
            word({"AB!m", "AB!n"}));
  EXPECT_TRUE(channel_word(word({"AB!m"}), Participant("X"), Participant("Y")).empty());
  EXPECT_EQ(channel_word(word({"BC?y"}), Participant("C"), Participant("B")), word({"BC?y"}));
}

TEST(Words, RemoveTrailingOutput) {
  EXPECT_EQ(ro(word({"AB?m", "AB!n"})), word({"AB?m"}));
  EXPECT_EQ(ro(word({"AB?m", "AB?n"})), word({"AB?m", "AB?n"}));
  EXPECT_TRUE(ro(ActionWord{}).empty());
}

TEST(Words, Prefixes) {
  EXPECT_EQ(prefixes(word({"AB!m", "AB!n"})),
            (std::set<ActionWord>{{}, word({"AB!m"}), word({"AB!m", "AB!n"})}));
  EXPECT_EQ(prefixes(ActionWord{}), (std::set<ActionWord>{{}}));
  ActionWord w = word({"AB!m", "BC!x", "CA!k"});
  EXPECT_EQ(prefixes(w).size(), w.size() + 1);
}

TEST(ErrorStates, MissingInput) {
  Gia a = figures::err_a();
  Gia b = figures::err_b();
  EXPECT_EQ(unmatched_shared_outputs(a, b, a.id("v1"), b.id("u1")),
            std::vector<Action>{act("AB!n")});
  EXPECT_FALSE(unmatched_shared_output(a, b, a.id("v0"), b.id("u0")));
  EXPECT_EQ(flagged(error_states(a, b)), std::set<std::string>{"(v1,u1)"});
}

TEST(ErrorStates, SameChannelBlocking) {
  Gia a = figures::err_a();
  Gia b = figures::err_b_prime();
  EXPECT_EQ(unmatched_shared_outputs(a, b, a.id("v0"), b.id("u'0")),
            std::vector<Action>{act("AB!m")});
  EXPECT_EQ(flagged(error_states(a, b)), std::set<std::string>{"(v0,u'0)"});
}

TEST(ErrorStates, OtherChannelOrder) {
  Gia ab = figures::err_ab();
  Gia c = figures::err_c();
  EXPECT_EQ(unmatched_shared_outputs(ab, c, ab.id("v1"), c.id("u1")),
            std::vector<Action>{act("BC!y")});
  EXPECT_EQ(flagged(error_states(ab, c)), std::set<std::string>{"(v1,u1)"});
}

TEST(ErrorStates, SpuriousBeforeStripping) {
  auto abc = flagged(error_states({figures::spurious_a(), figures::spurious_b(),
                                   figures::spurious_c()}));
  EXPECT_TRUE(abc.count("(v3,u1,w2)"));
  EXPECT_TRUE(abc.count("(v3,u2,w1)"));

  auto def = flagged(error_states({figures::spurious_d(), figures::spurious_e(),
                                   figures::spurious_f()}));
  EXPECT_EQ(def, (std::set<std::string>{"(v0,u1,w1)", "(v0,u0,w1)", "(v0,u1,w0)"}));
}

TEST(ErrorStates, StrippingRemovesOnlySpuriousOnes) {
  std::vector<Gia> abc = {strip_tau(figures::spurious_a()), strip_tau(figures::spurious_b()),
                          strip_tau(figures::spurious_c())};
  EXPECT_TRUE(error_states(abc).empty());
  Product p = tensor_all({&abc[0], &abc[1], &abc[2]});
  EXPECT_EQ(p.automaton.num_states(), 4u);
  EXPECT_EQ(p.automaton.labels(), (ActionSet{act("AB!?m"), act("AB!?n"), act("BC!?x"),
                                             act("BC!?y")}));

  std::vector<Gia> def = {strip_tau(figures::spurious_d()), strip_tau(figures::spurious_e()),
                          strip_tau(figures::spurious_f())};
  EXPECT_EQ(flagged(error_states(def)).size(), 3u);
}

TEST(ErrorStates, TrailsReplay) {
  std::vector<Gia> def = {figures::spurious_d(), figures::spurious_e(), figures::spurious_f()};
  Gia p = tensor_all({&def[0], &def[1], &def[2]}).automaton;
  const auto es = oracle::edges(p);
  for (const auto& w : error_states(def)) {
    ASSERT_EQ(w.states.size(), 1u);
    EXPECT_TRUE(replays(p, es, w.trail, w.states[0])) << w.states[0];
  }
}

TEST(ParallelErrors, SameInteractionTwice) {
  auto ws = parallel_error_states(parse_gchor("A->B:m | A->B:m"));
  ASSERT_FALSE(ws.empty());
  Gia p = stripped_product(parse_gchor("A->B:m | A->B:m"));
  EXPECT_EQ(flagged(ws), std::set<std::string>{p.name(p.initial())});
  EXPECT_EQ(ws[0].label, "AB!?m");
}

TEST(ParallelErrors, DistinctLabels) {
  EXPECT_TRUE(parallel_error_states(parse_gchor("A->B:m | C->D:n")).empty());
  EXPECT_TRUE(parallel_error_states(parse_gchor("A->B:m | A->B:n")).empty());
}

TEST(BranchingErrors, SingleTransition) {
  auto ws = branching_error_states(parse_gchor("A->B:m + A->B:m"));
  auto cs = conditions(ws);
  EXPECT_TRUE(std::count(cs.begin(), cs.end(), "condition 1"));
  Gia p = stripped_product(parse_gchor("A->B:m + A->B:m"));
  EXPECT_EQ(p.transitions().size(), 1u);
}

TEST(BranchingErrors, DistinctSenders) {
  auto ws = branching_error_states(parse_gchor("C->D:m + D->C:n"));
  EXPECT_EQ(conditions(ws), std::vector<std::string>{"condition 2"});
  Gia p = stripped_product(parse_gchor("C->D:m + D->C:n"));
  EXPECT_EQ(flagged(ws), std::set<std::string>{p.name(p.initial())});
}

TEST(BranchingErrors, IndistinguishableContinuation) {
  auto ws = branching_error_states(parse_gchor("(A->B:m ; C->B:n) + (A->B:m ; C->B:n)"));
  auto cs = conditions(ws);
  EXPECT_TRUE(std::count(cs.begin(), cs.end(), "condition 2"));
  EXPECT_TRUE(std::count(cs.begin(), cs.end(), "condition 3"));
  for (const auto& w : ws) {
    if (w.detail.rfind("condition 3", 0) == 0) {
      EXPECT_EQ(w.states.size(), 2u);
      EXPECT_EQ(w.label, "CB!?n");
    }
  }
}

TEST(BranchingErrors, WellFormedChoice) {
  EXPECT_TRUE(branching_error_states(parse_gchor("(A->B:m ; B->C:x) + (A->B:n ; B->C:y)")).empty());
}

TEST(CheckWellFormed, Figures) {
  Verdict g = check("(A->B:m ; B->C:x) + (A->B:n ; B->C:y)");
  EXPECT_TRUE(g.well_formed);
  EXPECT_TRUE(g.oracle_well_formed);
  EXPECT_TRUE(g.witnesses.empty());

  Verdict gp = check("D->E:m + D->F:n");
  EXPECT_FALSE(gp.well_formed);
  EXPECT_FALSE(gp.oracle_well_formed);
  EXPECT_FALSE(gp.witnesses.empty());

  Verdict g0 = check("A->B:m | A->B:m");
  EXPECT_FALSE(g0.well_formed);
  EXPECT_TRUE(std::any_of(g0.witnesses.begin(), g0.witnesses.end(),
                          [](const Witness& w) { return w.kind == "parallel"; }));

  Verdict shop = check(figures::kOnlineShop);
  EXPECT_TRUE(shop.well_formed);
  EXPECT_TRUE(shop.oracle_well_formed);

  Verdict empty = check("0");
  EXPECT_TRUE(empty.well_formed);
  EXPECT_TRUE(empty.oracle_well_formed);
}

TEST(CheckWellFormed, PerSubtermLocatesFault) {
  Verdict v = check("A->B:k ; (C->D:m + D->C:n)");
  ASSERT_EQ(v.per_subterm.size(), 1u);
  EXPECT_EQ(v.per_subterm[0].path, (SubtermPath{1}));
  EXPECT_EQ(v.per_subterm[0].kind, "branch");
  EXPECT_FALSE(v.per_subterm[0].ok);
}

// The pomset oracle judges each choice on its own and accepts this term;
// the trailing B->C:n can overtake D->C:n, so the system deadlocks.
TEST(CheckWellFormed, ChoiceFollowedByOvertakingMessage) {
  const char* text = "(D->B:m ; D->C:n + D->B:k ; B->C:n) ; B->C:n";
  Verdict v = check(text);
  EXPECT_TRUE(v.oracle_well_formed);
  EXPECT_FALSE(v.well_formed);
  ASSERT_TRUE(v.buffered.has_value());
  EXPECT_FALSE(v.buffered->deadlock_free);
  oracle::RunVerdict r = oracle::buffered(stripped_projections(parse_gchor(text)));
  EXPECT_TRUE(r.stuck);
}

TEST(Buffered, Figures) {
  BufferedResult g = explore_buffered_system(parse_gchor("(A->B:m ; B->C:x) + (A->B:n ; B->C:y)"),
                                             1000);
  EXPECT_TRUE(g.deadlock_free);
  EXPECT_TRUE(g.orphan_free);
  EXPECT_EQ(g.traces_explored, 2u);

  // E and F may skip their input, so the unsent message is never awaited;
  // the sent one is left behind instead.
  const GChor dp = parse_gchor("D->E:m + D->F:n");
  BufferedResult gp = explore_buffered_system(dp, 1000);
  oracle::RunVerdict naive = oracle::buffered(stripped_projections(dp));
  EXPECT_FALSE(gp.deadlock_free && gp.orphan_free);
  EXPECT_FALSE(gp.orphan_free);
  EXPECT_EQ(gp.deadlock_free, !naive.stuck);

  BufferedResult e = explore_buffered_system(parse_gchor("0"), 1000);
  EXPECT_TRUE(e.deadlock_free);
  EXPECT_TRUE(e.orphan_free);
}

TEST(Buffered, StateCapIsInconclusive) {
  BufferedResult r = explore_buffered_system(
      parse_gchor("A->B:m | C->D:n | E->F:k | A->C:x | B->D:y"), 5);
  EXPECT_TRUE(r.inconclusive);
  EXPECT_LE(r.states_explored, 6u);
}

TEST(Verdict, JsonIsDeterministic) {
  Verdict v = check("D->E:m + D->F:n");
  const std::string a = verdict_to_json(v);
  EXPECT_EQ(a, verdict_to_json(check("D->E:m + D->F:n")));
  auto j = nlohmann::json::parse(a);
  EXPECT_FALSE(j["well_formed"].get<bool>());
  EXPECT_FALSE(j["oracle_well_formed"].get<bool>());
  EXPECT_FALSE(j["witnesses"].empty());
  EXPECT_NE(verdict_to_text(v).find("not well-formed"), std::string::npos);
}

// Swapping the factors swaps the components of every flagged state.
TEST(AnalysisProperty, ErrorSymmetry) {
  CorpusConfig cfg;
  Rng rng(31);
  auto swap_pair = [](const std::string& s) {
    const auto comma = s.find(',');
    return "(" + s.substr(comma + 1, s.size() - comma - 2) + "," + s.substr(1, comma - 1) + ")";
  };
  for (int i = 0; i < 150; ++i) {
    GChor g = random_gchor(rng, cfg);
    auto locals = stripped_projections(g);
    if (locals.size() < 2) continue;
    std::set<std::string> ab = flagged(error_states(locals[0], locals[1]));
    std::set<std::string> ba;
    for (const auto& s : flagged(error_states(locals[1], locals[0]))) ba.insert(swap_pair(s));
    EXPECT_EQ(ab, ba) << render_gchor(g);
  }
}

TEST(AnalysisProperty, WitnessTrailsReplay) {
  CorpusConfig cfg;
  Rng rng(37);
  for (int i = 0; i < 150; ++i) {
    GChor g = random_gchor(rng, cfg);
    Gia p = stripped_product(g);
    const auto es = oracle::edges(p);
    for (const auto& w : error_states(stripped_projections(g))) {
      EXPECT_TRUE(replays(p, es, w.trail, w.states[0])) << render_gchor(g);
    }
  }
}

TEST(AnalysisProperty, DiamondsMatchNaiveSearch) {
  CorpusConfig cfg;
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    GChor g = random_gchor(rng, cfg);
    Gia p = stripped_product(g);
    EXPECT_EQ(flagged(parallel_errors_in(p)), oracle::diamonds(p)) << render_gchor(g);
  }
}

TEST(AnalysisProperty, ExecutorMatchesNaiveRun) {
  CorpusConfig cfg;
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    GChor g = random_gchor(rng, cfg);
    auto locals = stripped_projections(g);
    BufferedResult r = explore_buffered_system(locals, 200000);
    ASSERT_FALSE(r.inconclusive);
    oracle::RunVerdict n = oracle::buffered(locals);
    EXPECT_EQ(r.deadlock_free, !n.stuck) << render_gchor(g);
    EXPECT_EQ(r.orphan_free, !n.orphan) << render_gchor(g);
  }
}

TEST(AnalysisProperty, StrippingKeepsRealErrors) {
  std::vector<Gia> raw = {figures::spurious_d(), figures::spurious_e(), figures::spurious_f()};
  std::vector<Gia> stripped;
  for (const auto& g : raw) stripped.push_back(strip_tau(g));
  EXPECT_EQ(flagged(error_states(raw)), flagged(error_states(stripped)));
}
