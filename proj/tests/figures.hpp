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

// Hand-built automata for the worked examples used across the test suites.

#ifndef GIACHECK_TESTS_FIGURES_HPP_
#define GIACHECK_TESTS_FIGURES_HPP_

#include "giacheck/gia.hpp"

namespace figures {

using giacheck::Gia;
using giacheck::GiaBuilder;
using giacheck::Participant;
using giacheck::ParticipantSet;

inline ParticipantSet group(std::initializer_list<const char*> names) {
  ParticipantSet g;
  for (const char* n : names) g.insert(Participant(n));
  return g;
}

// Three composable automata and their products.
inline Gia product_a() { return GiaBuilder().add("v0", "AC!m", "v1").build("v0", group({"A"})); }
inline Gia product_b() { return GiaBuilder().add("u0", "BC!n", "u1").build("u0", group({"B"})); }
inline Gia product_c() {
  return GiaBuilder().add("w0", "AC?m", "w1").add("w1", "BC?n", "w2").build("w0", group({"C"}));
}

// Error-state examples.
inline Gia err_a() {
  return GiaBuilder().add("v0", "AB!m", "v1").add("v1", "AB!n", "v2").build("v0", group({"A"}));
}
inline Gia err_b() {
  return GiaBuilder().add("u0", "AB?m", "u1").add("u0", "AB?n", "u1").build("u0", group({"B"}));
}
inline Gia err_b_prime() {
  return GiaBuilder()
      .add("u'0", "AB?n", "u'1")
      .add("u'1", "AB?m", "u'2")
      .build("u'0", group({"B"}));
}
inline Gia err_ab() {
  return GiaBuilder()
      .add("v0", "AC!m", "v1")
      .add("v1", "BC!y", "v2")
      .add("v2", "AC!m", "v3")
      .add("v2", "AC!x", "v3")
      .build("v0", group({"A", "B"}));
}
inline Gia err_c() {
  return GiaBuilder()
      .add("u0", "AC?m", "u1")
      .add("u1", "AC?x", "u2")
      .add("u2", "BC?y", "u3")
      .build("u0", group({"C"}));
}

// Unstripped projections of (A->B:m ; B->C:x) + (A->B:n ; B->C:y).
inline Gia spurious_a() {
  return GiaBuilder()
      .add("v0", "AB!m", "v1")
      .add("v0", "AB!n", "v2")
      .add("v1", "tau", "v3")
      .add("v2", "tau", "v3")
      .build("v0", group({"A"}));
}
inline Gia spurious_b() {
  return GiaBuilder()
      .add("u0", "AB?m", "u1")
      .add("u0", "AB?n", "u2")
      .add("u1", "BC!x", "u3")
      .add("u2", "BC!y", "u3")
      .build("u0", group({"B"}));
}
inline Gia spurious_c() {
  return GiaBuilder()
      .add("w0", "tau", "w1")
      .add("w0", "tau", "w2")
      .add("w1", "BC?x", "w3")
      .add("w2", "BC?y", "w3")
      .build("w0", group({"C"}));
}

// Unstripped projections of D->E:m + D->F:n.
inline Gia spurious_d() {
  return GiaBuilder().add("v0", "DE!m", "v1").add("v0", "DF!n", "v1").build("v0", group({"D"}));
}
inline Gia spurious_e() {
  return GiaBuilder().add("u0", "DE?m", "u1").add("u0", "tau", "u1").build("u0", group({"E"}));
}
inline Gia spurious_f() {
  return GiaBuilder().add("w0", "tau", "w1").add("w0", "DF?n", "w1").build("w0", group({"F"}));
}

// Removability examples; alpha is AB!a, beta is AB!b or, when mixed, BA?b.
inline Gia removable_a() {
  return GiaBuilder()
      .add("v", "tau", "vt")
      .add("v", "tau", "vt'")
      .add("vt", "AB!a", "end")
      .add("vt'", "AB!a", "end")
      .build("v", group({"A"}));
}
inline Gia removable_b(bool mixed) {
  return GiaBuilder()
      .add("v", "tau", "vt")
      .add("v", mixed ? "BA?b" : "AB!b", "vb")
      .add("vt", "AB!a", "end")
      .add("vb", "tau", "end")
      .build("v", group({"A"}));
}
inline Gia removable_c() {
  return GiaBuilder().add("v", "tau", "vt").add("v", "AB!a", "vt").build("v", group({"A"}));
}

// Buyer of the online shop, as drawn in the introduction.
inline Gia buyer() {
  return GiaBuilder()
      .add("v0", "BS!request", "v1")
      .add("v1", "SB?offer", "v2")
      .add("v1", "SB?notinStock", "v6")
      .add("v2", "BS!pay", "v3")
      .add("v3", "tau", "v4")
      .add("v4", "HB?delivery", "v5")
      .add("v6", "tau", "v5")
      .build("v0", group({"B"}));
}

inline const char* kOnlineShop =
    "B->S:request ; (S->B:offer ; B->S:pay ; S->H:deliveryInfo ; H->B:delivery"
    " + S->B:notinStock ; S->H:noInfo)";

}  // namespace figures

#endif  // GIACHECK_TESTS_FIGURES_HPP_
