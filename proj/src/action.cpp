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

#include "giacheck/action.hpp"

#include <cctype>
#include <stdexcept>

namespace giacheck {

const Participant& Action::subject() const {
  return kind_ == Kind::kReceive ? receiver_ : sender_;
}

const Participant& Action::object() const {
  return kind_ == Kind::kReceive ? sender_ : receiver_;
}

ParticipantSet Action::participants() const {
  if (is_tau()) return {};
  return {sender_, receiver_};
}

Action Action::dual() const {
  switch (kind_) {
    case Kind::kSend:
      return with_kind(Kind::kReceive);
    case Kind::kReceive:
      return with_kind(Kind::kSend);
    default:
      return *this;
  }
}

std::string to_string(const Action& a) {
  if (a.is_tau()) return "tau";
  std::string out = a.sender().name;
  if (a.sender().name.size() != 1 || a.receiver().name.size() != 1) out += '-';
  out += a.receiver().name;
  switch (a.kind()) {
    case Action::Kind::kSend:
      out += "!";
      break;
    case Action::Kind::kReceive:
      out += "?";
      break;
    default:
      out += "!?";
      break;
  }
  return out + a.message().name;
}

std::string to_string(const ActionWord& w) {
  if (w.empty()) return "tau";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Action parse_action(std::string_view text) {
  if (text == "tau") return Action::tau();
  auto bang = text.find_first_of("!?");
  if (bang == std::string_view::npos || bang < 2) {
    throw std::invalid_argument("malformed action: " + std::string(text));
  }
  std::string_view pair = text.substr(0, bang);
  std::string a, b;
  if (auto dash = pair.find('-'); dash != std::string_view::npos) {
    a = pair.substr(0, dash);
    b = pair.substr(dash + 1);
  } else if (pair.size() == 2) {
    a = pair.substr(0, 1);
    b = pair.substr(1, 1);
  } else {
    throw std::invalid_argument("ambiguous participants in action: " + std::string(text));
  }
  std::string_view rest = text.substr(bang);
  Action::Kind kind;
  if (rest.substr(0, 2) == "!?") {
    kind = Action::Kind::kInternal;
    rest.remove_prefix(2);
  } else if (rest[0] == '!') {
    kind = Action::Kind::kSend;
    rest.remove_prefix(1);
  } else {
    kind = Action::Kind::kReceive;
    rest.remove_prefix(1);
  }
  if (a.empty() || b.empty() || rest.empty() || a == b) {
    throw std::invalid_argument("malformed action: " + std::string(text));
  }
  Participant pa(a), pb(b);
  Message m{std::string(rest)};
  switch (kind) {
    case Action::Kind::kSend:
      return Action::send(pa, pb, m);
    case Action::Kind::kReceive:
      return Action::receive(pa, pb, m);
    default:
      return Action::internal(pa, pb, m);
  }
}

ParticipantSet subjects_and_objects(const ActionWord& w) {
  ParticipantSet out;
  for (const auto& a : w) {
    if (a.is_tau()) continue;
    out.insert(a.subject());
    out.insert(a.object());
  }
  return out;
}

}  // namespace giacheck
