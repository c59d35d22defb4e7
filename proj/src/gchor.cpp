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

#include "giacheck/gchor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace giacheck {

struct GChor::Node {
  Kind kind = Kind::kEmpty;
  Participant from;
  Participant to;
  Message msg;
  GChor left;
  GChor right;
  std::size_t size = 1;
  std::size_t depth = 0;
};


GChor GChor::interaction(Participant from, Message msg, Participant to) {
  if (from == to) {
    throw std::invalid_argument("self-interaction " + from.name + "->" + to.name + ":" +
                                msg.name + " is not allowed");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kInteraction;
  n->from = std::move(from);
  n->to = std::move(to);
  n->msg = std::move(msg);
  return GChor(n);
}

namespace {

template <typename NodeT, typename KindT>
std::shared_ptr<NodeT> make_binary(KindT k, const GChor& l, const GChor& r) {
  auto n = std::make_shared<NodeT>();
  n->kind = k;
  n->left = l;
  n->right = r;
  n->size = 1 + l.size() + r.size();
  n->depth = 1 + std::max(l.depth(), r.depth());
  return n;
}

}  // namespace

GChor GChor::seq(GChor left, GChor right) {
  return GChor(make_binary<Node>(Kind::kSeq, left, right));
}

GChor GChor::par(GChor left, GChor right) {
  return GChor(make_binary<Node>(Kind::kPar, left, right));
}

GChor GChor::branch(GChor left, GChor right) {
  return GChor(make_binary<Node>(Kind::kBranch, left, right));
}

GChor::Kind GChor::kind() const { return node_ ? node_->kind : Kind::kEmpty; }

bool GChor::is_binary() const {
  auto k = kind();
  return k == Kind::kSeq || k == Kind::kPar || k == Kind::kBranch;
}

const Participant& GChor::from() const { return node_->from; }
const Participant& GChor::to() const { return node_->to; }
const Message& GChor::msg() const { return node_->msg; }
const GChor& GChor::left() const { return node_->left; }
const GChor& GChor::right() const { return node_->right; }
std::size_t GChor::size() const { return node_ ? node_->size : 1; }
std::size_t GChor::depth() const { return node_ ? node_->depth : 0; }

bool operator==(const GChor& a, const GChor& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GChor::Kind::kEmpty:
      return true;
    case GChor::Kind::kInteraction:
      return a.from() == b.from() && a.to() == b.to() && a.msg() == b.msg();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

std::string to_string(const SubtermPath& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      detail_(what) {}

namespace {

enum class Tok { kWord, kArrow, kColon, kSemi, kBar, kPlus, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kWord:
      return "'" + t.text + "'";
    case Tok::kEnd:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::kEnd, std::string(1, c), line, col};
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      t.kind = Tok::kWord;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Tok::kArrow;
      t.text = "->";
      advance(2);
      out.push_back(t);
      continue;
    }
    switch (c) {
      case ':':
        t.kind = Tok::kColon;
        break;
      case ';':
        t.kind = Tok::kSemi;
        break;
      case '|':
        t.kind = Tok::kBar;
        break;
      case '+':
        t.kind = Tok::kPlus;
        break;
      case '(':
        t.kind = Tok::kLParen;
        break;
      case ')':
        t.kind = Tok::kRParen;
        break;
      default:
        throw ParseError(line, col, "unexpected character '" + std::string(1, c) + "'");
    }
    advance(1);
    out.push_back(t);
  }
  out.push_back(Token{Tok::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  GChor parse() {
    GChor g = parse_branch();
    if (peek().kind != Tok::kEnd) fail(peek(), "expected operator or end of input");
    return g;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw ParseError(t.line, t.column, what + ", found " + describe(t));
  }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what);
    return next();
  }

  GChor parse_branch() {
    GChor g = parse_par();
    while (peek().kind == Tok::kPlus) {
      next();
      g = GChor::branch(g, parse_par());
    }
    return g;
  }

  GChor parse_par() {
    GChor g = parse_seq();
    while (peek().kind == Tok::kBar) {
      next();
      g = GChor::par(g, parse_seq());
    }
    return g;
  }

  GChor parse_seq() {
    GChor g = parse_atom();
    while (peek().kind == Tok::kSemi) {
      next();
      g = GChor::seq(g, parse_atom());
    }
    return g;
  }

  GChor parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::kLParen) {
      next();
      GChor g = parse_branch();
      expect(Tok::kRParen, "')'");
      return g;
    }
    if (t.kind != Tok::kWord) fail(t, "expected '0', an interaction or '('");
    if (t.text == "0") {
      next();
      return GChor::empty();
    }
    if (std::isdigit(static_cast<unsigned char>(t.text[0]))) {
      fail(t, "participant names must start with a letter or '_'");
    }
    const Token start = next();
    expect(Tok::kArrow, "'->'");
    const Token& to = peek();
    if (to.kind != Tok::kWord || std::isdigit(static_cast<unsigned char>(to.text[0]))) {
      fail(to, "expected receiver name");
    }
    next();
    expect(Tok::kColon, "':'");
    const Token& msg = peek();
    if (msg.kind != Tok::kWord) fail(msg, "expected message name");
    next();
    if (start.text == to.text) {
      throw ParseError(start.line, start.column,
                       "self-interaction " + start.text + "->" + to.text + ":" + msg.text +
                           " is not allowed");
    }
    return GChor::interaction(Participant(start.text), Message(msg.text), Participant(to.text));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(GChor::Kind k) {
  switch (k) {
    case GChor::Kind::kBranch:
      return 1;
    case GChor::Kind::kPar:
      return 2;
    case GChor::Kind::kSeq:
      return 3;
    default:
      return 4;
  }
}

void render(const GChor& g, std::string& out) {
  switch (g.kind()) {
    case GChor::Kind::kEmpty:
      out += "0";
      return;
    case GChor::Kind::kInteraction:
      out += g.from().name + "->" + g.to().name + ":" + g.msg().name;
      return;
    default:
      break;
  }
  const int p = precedence(g.kind());
  const char* op = g.kind() == GChor::Kind::kSeq ? " ; "
                   : g.kind() == GChor::Kind::kPar ? " | "
                                                   : " + ";
  auto child = [&](const GChor& c, bool right) {
    const int cp = precedence(c.kind());
    const bool parens = cp < p || (right && cp == p);
    if (parens) out += "(";
    render(c, out);
    if (parens) out += ")";
  };
  child(g.left(), false);
  out += op;
  child(g.right(), true);
}

void collect_participants(const GChor& g, ParticipantSet& out) {
  switch (g.kind()) {
    case GChor::Kind::kEmpty:
      return;
    case GChor::Kind::kInteraction:
      out.insert(g.from());
      out.insert(g.to());
      return;
    default:
      collect_participants(g.left(), out);
      collect_participants(g.right(), out);
  }
}

void collect_subterms(const GChor& g, SubtermPath& path, std::vector<Subterm>& out) {
  out.push_back(Subterm{path, g});
  if (!g.is_binary()) return;
  path.push_back(0);
  collect_subterms(g.left(), path, out);
  path.back() = 1;
  collect_subterms(g.right(), path, out);
  path.pop_back();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

class DotWriter {
 public:
  std::pair<int, int> emit(const GChor& g) {
    switch (g.kind()) {
      case GChor::Kind::kEmpty: {
        int n = node("shape=point");
        return {n, n};
      }
      case GChor::Kind::kInteraction: {
        int n = node("shape=box,label=\"" +
                     dot_escape(g.from().name + " -> " + g.to().name + " : " + g.msg().name) +
                     "\"");
        return {n, n};
      }
      case GChor::Kind::kSeq: {
        auto [l_in, l_out] = emit(g.left());
        auto [r_in, r_out] = emit(g.right());
        edge(l_out, r_in);
        return {l_in, r_out};
      }
      default: {
        const bool par = g.kind() == GChor::Kind::kPar;
        const std::string gate = par ? "shape=square,label=\"|\"" : "shape=diamond,label=\"+\"";
        int open = node(gate);
        auto [l_in, l_out] = emit(g.left());
        auto [r_in, r_out] = emit(g.right());
        int close = node(gate);
        edge(open, l_in);
        edge(open, r_in);
        edge(l_out, close);
        edge(r_out, close);
        return {open, close};
      }
    }
  }

  int node(const std::string& attrs) {
    int id = count_++;
    body_ << "  n" << id << " [" << attrs << "];\n";
    return id;
  }

  void edge(int a, int b) { body_ << "  n" << a << " -> n" << b << ";\n"; }

  std::string body() const { return body_.str(); }

 private:
  int count_ = 0;
  std::ostringstream body_;
};

}  // namespace

GChor parse_gchor(std::string_view text) { return Parser(lex(text)).parse(); }

std::string render_gchor(const GChor& g) {
  std::string out;
  render(g, out);
  return out;
}

ParticipantSet participants(const GChor& g) {
  ParticipantSet out;
  collect_participants(g, out);
  return out;
}

std::vector<Subterm> subterms(const GChor& g) {
  std::vector<Subterm> out;
  SubtermPath path;
  collect_subterms(g, path, out);
  return out;
}

const GChor& subterm_at(const GChor& g, const SubtermPath& path) {
  const GChor* cur = &g;
  for (int step : path) {
    if (!cur->is_binary() || (step != 0 && step != 1)) {
      throw std::out_of_range("no subterm at " + to_string(path));
    }
    cur = step == 0 ? &cur->left() : &cur->right();
  }
  return *cur;
}

std::string gchor_to_dot(const GChor& g) {
  DotWriter w;
  int src = w.node("shape=circle,label=\"\",width=0.2");
  auto [in, out] = w.emit(g);
  int dst = w.node("shape=doublecircle,label=\"\",width=0.15");
  w.edge(src, in);
  w.edge(out, dst);
  return "digraph gchor {\n  rankdir=TB;\n" + w.body() + "}\n";
}

}  // namespace giacheck
