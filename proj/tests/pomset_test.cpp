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
#include <stdexcept>

#include "giacheck/corpus.hpp"
#include "giacheck/gchor.hpp"
#include "giacheck/pomset.hpp"

using namespace giacheck;

namespace {

Participant P(const char* n) { return Participant(n); }
Message M(const char* n) { return Message(n); }

Pomset ix(const char* a, const char* m, const char* b) {
  return interaction_pomset(P(a), P(b), M(m));
}

PomsetSet pomsets_of(const char* text) {
  Semantics s = semantics(parse_gchor(text));
  EXPECT_TRUE(is_defined(s)) << text;
  return is_defined(s) ? std::get<PomsetSet>(s) : PomsetSet{};
}

std::size_t find_label(const Pomset& r, const char* label) {
  const Action a = parse_action(label);
  auto it = std::find(r.labels().begin(), r.labels().end(), a);
  EXPECT_NE(it, r.labels().end()) << label;
  return static_cast<std::size_t>(it - r.labels().begin());
}

}  // namespace

TEST(Pomset, Interaction) {
  Pomset r = ix("A", "m", "B");
  ASSERT_EQ(r.size(), 2u);
  std::size_t s = find_label(r, "AB!m");
  std::size_t t = find_label(r, "AB?m");
  EXPECT_TRUE(r.less(s, t));
  EXPECT_FALSE(r.less(t, s));
}

TEST(Pomset, ConstructorRejectsCycles) {
  std::vector<Action> ls = {parse_action("AB!m"), parse_action("AB?m")};
  EXPECT_THROW(Pomset(ls, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Pomset, SeqOrdersSameSubject) {
  Pomset r = seq(ix("A", "m", "B"), ix("B", "x", "C"));
  ASSERT_EQ(r.size(), 4u);
  EXPECT_TRUE(r.less(find_label(r, "AB?m"), find_label(r, "BC!x")));
  EXPECT_TRUE(r.less(find_label(r, "AB!m"), find_label(r, "BC?x")));

  Pomset b = restrict_to(r, P("B"));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(b.less(find_label(b, "AB?m"), find_label(b, "BC!x")));
}

TEST(Pomset, SeqOfDisjointParticipantsIsPar) {
  Pomset s = seq(ix("A", "m", "B"), ix("C", "n", "D"));
  Pomset p = par(ix("A", "m", "B"), ix("C", "n", "D"));
  EXPECT_EQ(s.order().size(), 2u);
  EXPECT_TRUE(pomset_isomorphic(s, p));
}

TEST(Pomset, EmptyIsNeutral) {
  Pomset r = ix("A", "m", "B");
  EXPECT_TRUE(pomset_isomorphic(seq(Pomset(), r), r));
  EXPECT_TRUE(pomset_isomorphic(seq(r, Pomset()), r));
  EXPECT_EQ(par(Pomset(), Pomset()).size(), 0u);
}

TEST(Pomset, Isomorphism) {
  EXPECT_TRUE(pomset_isomorphic(ix("A", "m", "B"), ix("A", "m", "B")));
  EXPECT_FALSE(pomset_isomorphic(ix("A", "m", "B"), ix("A", "n", "B")));
  Pomset a = par(ix("A", "m", "B"), ix("C", "n", "D"));
  Pomset b = par(ix("C", "n", "D"), ix("A", "m", "B"));
  EXPECT_TRUE(pomset_isomorphic(a, b));
  // Same labels, different order.
  EXPECT_FALSE(pomset_isomorphic(seq(ix("A", "m", "B"), ix("A", "m", "B")),
                                 par(ix("A", "m", "B"), ix("A", "m", "B"))));
}

TEST(Pomset, WellForked) {
  EXPECT_TRUE(well_forked({ix("A", "m", "B")}, {ix("C", "n", "D")}));
  EXPECT_FALSE(well_forked({ix("A", "m", "B")}, {ix("A", "m", "B")}));
  EXPECT_TRUE(well_forked({ix("A", "m", "B")}, {ix("B", "n", "A")}));
}

TEST(Pomset, MinEvents) {
  Pomset r = ix("A", "m", "B");
  auto mins = min_events(r);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(r.label(mins[0]), parse_action("AB!m"));
  EXPECT_TRUE(min_events(Pomset()).empty());
  Pomset p = par(ix("A", "m", "B"), ix("C", "n", "D"));
  auto pm = min_events(p);
  ASSERT_EQ(pm.size(), 2u);
  for (auto e : pm) EXPECT_TRUE(p.label(e).is_send());
}

TEST(Pomset, DivergenceAndRoles) {
  PomsetSet l = pomsets_of("A->B:m ; B->C:x");
  PomsetSet r = pomsets_of("A->B:n ; B->C:y");
  auto [la, ra] = divergence(P("A"), l, r);
  EXPECT_EQ(la, ActionSet{parse_action("AB!m")});
  EXPECT_EQ(ra, ActionSet{parse_action("AB!n")});
  auto [lb, rb] = divergence(P("B"), l, r);
  EXPECT_EQ(lb, ActionSet{parse_action("AB?m")});
  EXPECT_EQ(rb, ActionSet{parse_action("AB?n")});

  EXPECT_EQ(classify(P("A"), l, r), Role::kActive);
  EXPECT_EQ(classify(P("B"), l, r), Role::kPassive);
  EXPECT_EQ(classify(P("C"), l, r), Role::kPassive);

  PomsetSet same = pomsets_of("A->B:m");
  auto [x, y] = divergence(P("A"), same, same);
  EXPECT_EQ(x, y);
  EXPECT_EQ(classify(P("A"), same, same), Role::kNeither);
}

TEST(Pomset, WellBranched) {
  const ParticipantSet abc = {P("A"), P("B"), P("C")};
  EXPECT_TRUE(well_branched(pomsets_of("A->B:m ; B->C:x"), pomsets_of("A->B:n ; B->C:y"), abc));
  EXPECT_FALSE(well_branched(pomsets_of("D->E:m"), pomsets_of("D->F:n"),
                             {P("D"), P("E"), P("F")}));
  EXPECT_FALSE(well_branched(pomsets_of("A->B:m"), pomsets_of("A->B:m"), {P("A"), P("B")}));
}

TEST(Semantics, Undefined) {
  Semantics s = semantics(parse_gchor("A->B:m | A->B:m"));
  ASSERT_FALSE(is_defined(s));
  EXPECT_EQ(std::get<Undefined>(s).reason, Undefined::Reason::kNotWellForked);
  EXPECT_TRUE(std::get<Undefined>(s).path.empty());

  Semantics t = semantics(parse_gchor("C->D:k ; (D->E:m + D->F:n)"));
  ASSERT_FALSE(is_defined(t));
  const auto& u = std::get<Undefined>(t);
  EXPECT_EQ(u.reason, Undefined::Reason::kNotWellBranched);
  EXPECT_EQ(u.path, (SubtermPath{1}));
  EXPECT_EQ(render_gchor(u.subterm), "D->E:m + D->F:n");
}

TEST(Semantics, Defined) {
  EXPECT_EQ(pomsets_of("(A->B:m ; B->C:x) + (A->B:n ; B->C:y)").size(), 2u);
  EXPECT_EQ(pomsets_of("0").size(), 1u);
  EXPECT_EQ(pomsets_of("0")[0].size(), 0u);
}

TEST(Semantics, OnlineShopping) {
  PomsetSet rs = pomsets_of(
      "B->S:request ; (S->B:offer ; B->S:pay ; S->H:deliveryInfo ; H->B:delivery"
      " + S->B:notinStock ; S->H:noInfo)");
  ASSERT_EQ(rs.size(), 2u);
  std::vector<std::size_t> sizes = {rs[0].size(), rs[1].size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 10}));
}

TEST(Semantics, DuplicatesCollapseUpToIsomorphism) {
  // Both alternatives denote the same pomset but the choice is undefined.
  EXPECT_FALSE(is_defined(semantics(parse_gchor("A->B:m + A->B:m"))));
  PomsetSet s;
  insert_unique(s, ix("A", "m", "B"));
  insert_unique(s, ix("A", "m", "B"));
  insert_unique(s, ix("A", "n", "B"));
  EXPECT_EQ(s.size(), 2u);
}

TEST(SemanticsProperty, LabelsAreSendsAndReceives) {
  CorpusConfig cfg;
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    GChor g = random_gchor(rng, cfg);
    Semantics s = semantics(g);
    if (!is_defined(s)) continue;
    for (const auto& r : std::get<PomsetSet>(s)) {
      for (const auto& a : r.labels()) {
        EXPECT_TRUE(a.is_send() || a.is_receive()) << render_gchor(g);
      }
    }
  }
}

TEST(SemanticsProperty, EmptyPrefixIsNeutral) {
  CorpusConfig cfg;
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    GChor g = random_gchor(rng, cfg);
    Semantics a = semantics(g);
    Semantics b = semantics(GChor::seq(GChor::empty(), g));
    ASSERT_EQ(is_defined(a), is_defined(b)) << render_gchor(g);
    if (!is_defined(a)) continue;
    const auto& ra = std::get<PomsetSet>(a);
    const auto& rb = std::get<PomsetSet>(b);
    ASSERT_EQ(ra.size(), rb.size());
    for (const auto& r : ra) {
      EXPECT_TRUE(std::any_of(rb.begin(), rb.end(),
                              [&](const Pomset& x) { return pomset_isomorphic(r, x); }));
    }
  }
}

TEST(SemanticsProperty, DuplicatedChoiceIsUndefined) {
  CorpusConfig cfg;
  Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    GChor g = random_gchor(rng, cfg);
    if (participants(g).empty()) continue;
    ++checked;
    EXPECT_FALSE(is_defined(semantics(GChor::branch(g, g)))) << render_gchor(g);
  }
  EXPECT_GT(checked, 100);
}

TEST(SemanticsProperty, ParAndSeqAlgebra) {
  const Pomset a = ix("A", "m", "B");
  const Pomset b = ix("B", "n", "C");
  const Pomset c = ix("C", "k", "A");
  EXPECT_TRUE(pomset_isomorphic(par(a, b), par(b, a)));
  EXPECT_TRUE(pomset_isomorphic(par(par(a, b), c), par(a, par(b, c))));
  EXPECT_TRUE(pomset_isomorphic(seq(seq(a, b), c), seq(a, seq(b, c))));
}

TEST(Pomset, DotExport) {
  const std::string dot = pomset_to_dot(ix("A", "m", "B"), "r");
  EXPECT_NE(dot.find("AB!m"), std::string::npos);
  EXPECT_NE(dot.find("AB?m"), std::string::npos);
  EXPECT_EQ(dot, pomset_to_dot(ix("A", "m", "B"), "r"));
}
