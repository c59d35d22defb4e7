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

#ifndef GIACHECK_ACTION_HPP_
#define GIACHECK_ACTION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace giacheck {

struct Participant {
  std::string name;

  Participant() = default;
  explicit Participant(std::string n) : name(std::move(n)) {}

  auto operator<=>(const Participant&) const = default;
};

struct Message {
  std::string name;

  Message() = default;
  explicit Message(std::string n) : name(std::move(n)) {}

  auto operator<=>(const Message&) const = default;
};

using ParticipantSet = std::set<Participant>;

/**
 * A communication action.
 *
 * Send is AB!m, Receive is AB?m and Internal is the synchronised AB!?m.
 * Tau carries no participants or message.
 */
class Action {
 public:
  enum class Kind { kTau, kSend, kReceive, kInternal };

  Action() = default;

  static Action tau() { return Action(); }
  static Action send(Participant a, Participant b, Message m) {
    return Action(Kind::kSend, std::move(a), std::move(b), std::move(m));
  }
  static Action receive(Participant a, Participant b, Message m) {
    return Action(Kind::kReceive, std::move(a), std::move(b), std::move(m));
  }
  static Action internal(Participant a, Participant b, Message m) {
    return Action(Kind::kInternal, std::move(a), std::move(b), std::move(m));
  }

  Kind kind() const { return kind_; }
  bool is_tau() const { return kind_ == Kind::kTau; }
  bool is_send() const { return kind_ == Kind::kSend; }
  bool is_receive() const { return kind_ == Kind::kReceive; }
  bool is_internal() const { return kind_ == Kind::kInternal; }

  const Participant& sender() const { return sender_; }
  const Participant& receiver() const { return receiver_; }
  const Message& message() const { return message_; }

  // sbj(AB!m) = A, sbj(AB?m) = B, sbj(AB!?m) = A.
  const Participant& subject() const;
  // obj(AB!m) = B, obj(AB?m) = A, obj(AB!?m) = B.
  const Participant& object() const;
  // Both participants of a non-tau action.
  ParticipantSet participants() const;

  // Swaps ! and ?; internal and tau are fixed points.
  Action dual() const;
  Action with_kind(Kind k) const { return Action(k, sender_, receiver_, message_); }

  auto operator<=>(const Action&) const = default;

 private:
  Action(Kind k, Participant a, Participant b, Message m)
      : kind_(k), sender_(std::move(a)), receiver_(std::move(b)),
        message_(std::move(m)) {}

  Kind kind_ = Kind::kTau;
  Participant sender_;
  Participant receiver_;
  Message message_;
};

using ActionWord = std::vector<Action>;
using ActionSet = std::set<Action>;

std::string to_string(const Action& a);
std::string to_string(const ActionWord& w);

/**
 * Parses "AB!m", "AB?m", "AB!?m" or "tau".
 *
 * Participants are single characters in the compact form; "A-B!m" is also
 * accepted for longer names. Throws std::invalid_argument on bad input.
 */
Action parse_action(std::string_view text);

// All participants occurring in a word.
ParticipantSet subjects_and_objects(const ActionWord& w);

}  // namespace giacheck

#endif  // GIACHECK_ACTION_HPP_
