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

#ifndef GIACHECK_GCHOR_HPP_
#define GIACHECK_GCHOR_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "giacheck/action.hpp"

namespace giacheck {

/**
 * Global choreography term.
 *
 * Immutable; children are shared, so copies are cheap.
 */
class GChor {
 public:
  enum class Kind { kEmpty, kInteraction, kSeq, kPar, kBranch };

  GChor() = default;  // the empty choreography

  static GChor empty() { return GChor(); }
  // Throws std::invalid_argument when from == to.
  static GChor interaction(Participant from, Message msg, Participant to);
  static GChor seq(GChor left, GChor right);
  static GChor par(GChor left, GChor right);
  static GChor branch(GChor left, GChor right);

  Kind kind() const;
  bool is_empty() const { return kind() == Kind::kEmpty; }
  bool is_interaction() const { return kind() == Kind::kInteraction; }
  bool is_binary() const;

  // Only meaningful for interactions.
  const Participant& from() const;
  const Participant& to() const;
  const Message& msg() const;

  // Only meaningful for Seq, Par and Branch.
  const GChor& left() const;
  const GChor& right() const;

  // Number of nodes.
  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const GChor& a, const GChor& b);

  struct Node;

 private:
  explicit GChor(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Child indices from the root: 0 is left, 1 is right.
using SubtermPath = std::vector<int>;

struct Subterm {
  SubtermPath path;
  GChor term;
};

std::string to_string(const SubtermPath& path);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // Message without position.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/**
 * Parses the textual syntax.
 *
 *   g ::= 0 | A -> B : m | g ; g | g | g | g + g | ( g )
 *
 * Precedence is ; over | over +, all left-associative. Line comments start
 * with //. Throws ParseError.
 */
GChor parse_gchor(std::string_view text);

// Minimal parenthesisation; parse_gchor(render_gchor(g)) == g.
std::string render_gchor(const GChor& g);

ParticipantSet participants(const GChor& g);

// Pre-order, root first.
std::vector<Subterm> subterms(const GChor& g);

// Subterm at the given path. Throws std::out_of_range on a bad path.
const GChor& subterm_at(const GChor& g, const SubtermPath& path);

// Graphviz rendering of the term as a diagram with fork and branch gates.
std::string gchor_to_dot(const GChor& g);

}  // namespace giacheck

#endif  // GIACHECK_GCHOR_HPP_
