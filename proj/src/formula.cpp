/*
 *   Copyright 2026 The inqlab authors
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

#include "formula.hpp"

#include <set>
#include <unordered_set>

namespace inqlab {

namespace {

Formula make(Kind kind, std::string atom, Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->atom = std::move(atom);
  n->l = std::move(l);
  n->r = std::move(r);
  return n;
}

}  // namespace

Formula atom(const std::string& name) {
  if (name.empty()) fail(Errc::BadInput, "atom name must be nonempty");
  return make(Kind::Atom, name, nullptr, nullptr);
}

Formula bot() { return make(Kind::Bot, "", nullptr, nullptr); }

Formula land(Formula l, Formula r) {
  return make(Kind::And, "", std::move(l), std::move(r));
}

Formula lor(Formula l, Formula r) {
  return make(Kind::Or, "", std::move(l), std::move(r));
}

Formula impl(Formula l, Formula r) {
  return make(Kind::Impl, "", std::move(l), std::move(r));
}

Formula tensor(Formula l, Formula r) {
  return make(Kind::Tensor, "", std::move(l), std::move(r));
}

Formula lnot(Formula f) { return impl(std::move(f), bot()); }

Formula top() { return impl(bot(), bot()); }

bool equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Atom:
      return a->atom == b->atom;
    case Kind::Bot:
      return true;
    default:
      return equal(a->l, b->l) && equal(a->r, b->r);
  }
}

bool is_standard(const Formula& f) {
  if (f->kind == Kind::Or) return false;
  if (f->l && !is_standard(f->l)) return false;
  if (f->r && !is_standard(f->r)) return false;
  return true;
}

bool uses_tensor(const Formula& f) {
  if (f->kind == Kind::Tensor) return true;
  if (f->l && uses_tensor(f->l)) return true;
  if (f->r && uses_tensor(f->r)) return true;
  return false;
}

int node_count(const Formula& f) {
  int n = 1;
  if (f->l) n += node_count(f->l);
  if (f->r) n += node_count(f->r);
  return n;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f->kind == Kind::Atom) out.insert(f->atom);
  if (f->l) collect_atoms(f->l, out);
  if (f->r) collect_atoms(f->r, out);
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return std::vector<std::string>(names.begin(), names.end());
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  Ident,
  Bot,
  Not,
  And,
  Or,
  Tensor,
  Impl,
  LParen,
  RParen,
  Comma,
  Semi,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() &&
           (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' ||
            text_[i_] == '\r')) {
      ++i_;
    }
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_ = {Tok::End, "", i_};
      return;
    }
    // `(*)` is one token; it must be tried before a bare `(`.
    if (text_.compare(i_, 3, "(*)") == 0) {
      cur_ = {Tok::Tensor, "(*)", i_};
      i_ += 3;
      return;
    }
    if (text_.compare(i_, 3, "_|_") == 0) {
      cur_ = {Tok::Bot, "_|_", i_};
      i_ += 3;
      return;
    }
    if (text_.compare(i_, 2, "\\/") == 0) {
      cur_ = {Tok::Or, "\\/", i_};
      i_ += 2;
      return;
    }
    if (text_.compare(i_, 2, "->") == 0) {
      cur_ = {Tok::Impl, "->", i_};
      i_ += 2;
      return;
    }
    char c = text_[i_];
    switch (c) {
      case '(':
        cur_ = {Tok::LParen, "(", i_++};
        return;
      case ')':
        cur_ = {Tok::RParen, ")", i_++};
        return;
      case '~':
        cur_ = {Tok::Not, "~", i_++};
        return;
      case '&':
        cur_ = {Tok::And, "&", i_++};
        return;
      case ',':
        cur_ = {Tok::Comma, ",", i_++};
        return;
      case ';':
        cur_ = {Tok::Semi, ";", i_++};
        return;
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i_ + 1;
      while (j < text_.size() &&
             ((text_[j] >= 'a' && text_[j] <= 'z') ||
              (text_[j] >= '0' && text_[j] <= '9'))) {
        ++j;
      }
      cur_ = {Tok::Ident, text_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    fail(Errc::UnknownToken, "unknown token '" + std::string(1, c) +
                                 "' at position " + std::to_string(i_));
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token cur_{Tok::End, "", 0};
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Formula run() {
    Formula f = parse_impl();
    if (lex_.peek().kind != Tok::End) unexpected(lex_.peek());
    return f;
  }

 private:
  [[noreturn]] void unexpected(const Token& t) {
    if (t.kind == Tok::End) {
      fail(Errc::SyntaxError, "unexpected end of input");
    }
    fail(Errc::SyntaxError, "unexpected token '" + t.text + "' at position " +
                                std::to_string(t.pos));
  }

  Formula parse_impl() {
    Formula l = parse_or();
    if (lex_.peek().kind == Tok::Impl) {
      lex_.next();
      return impl(std::move(l), parse_impl());
    }
    return l;
  }

  Formula parse_or() {
    Formula f = parse_tensor();
    while (lex_.peek().kind == Tok::Or) {
      lex_.next();
      f = lor(std::move(f), parse_tensor());
    }
    return f;
  }

  Formula parse_tensor() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Tensor) {
      lex_.next();
      f = tensor(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.next();
      f = land(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (lex_.peek().kind == Tok::Not) {
      lex_.next();
      return lnot(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Bot:
        return bot();
      case Tok::LParen: {
        Formula f = parse_impl();
        Token close = lex_.next();
        if (close.kind != Tok::RParen) unexpected(close);
        return f;
      }
      case Tok::Ident:
        // `dep` followed by `(` is the dependence sugar; on its own it is
        // an ordinary atom.
        if (t.text == "dep" && lex_.peek().kind == Tok::LParen) {
          return parse_dep();
        }
        return atom(t.text);
      default:
        unexpected(t);
    }
  }

  Formula parse_dep() {
    lex_.next();  // consume '('
    std::vector<std::string> names;
    for (;;) {
      Token t = lex_.next();
      if (t.kind != Tok::Ident) {
        fail(Errc::SyntaxError, "dep arguments must be atoms (position " +
                                    std::to_string(t.pos) + ")");
      }
      names.push_back(t.text);
      Token sep = lex_.next();
      if (sep.kind == Tok::RParen) break;
      if (sep.kind != Tok::Comma && sep.kind != Tok::Semi) unexpected(sep);
    }
    auto dep1 = [](const std::string& name) {
      Formula a = atom(name);
      return lor(a, lnot(a));
    };
    if (names.size() == 1) return dep1(names[0]);
    // dep(p1,...,pn;q) := (dep(p1) ∧ ... ∧ dep(pn)) → dep(q); the last
    // argument is the consequent whichever separators were used.
    Formula ante = dep1(names[0]);
    for (std::size_t i = 1; i + 1 < names.size(); ++i) {
      ante = land(std::move(ante), dep1(names[i]));
    }
    return impl(std::move(ante), dep1(names.back()));
  }

  Lexer lex_;
};

}  // namespace

Formula parse(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence as displayed: -> 1, \/ 2, (*) 3, & 4, ~ 5, leaves 6. A formula
// φ→⊥ prints as ~φ, so it binds like a negation.
int display_prec(const Formula& f) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::Bot:
      return 6;
    case Kind::Impl:
      return f->r->kind == Kind::Bot ? 5 : 1;
    case Kind::Or:
      return 2;
    case Kind::Tensor:
      return 3;
    case Kind::And:
      return 4;
  }
  return 6;
}

void print_child(const Formula& f, int min_prec, std::string& out);

void print_rec(const Formula& f, std::string& out) {
  switch (f->kind) {
    case Kind::Atom:
      out += f->atom;
      return;
    case Kind::Bot:
      out += "_|_";
      return;
    case Kind::Impl:
      if (f->r->kind == Kind::Bot) {
        out += '~';
        print_child(f->l, 5, out);
        return;
      }
      // Right-associative: parenthesise a left child of equal precedence.
      print_child(f->l, 2, out);
      out += " -> ";
      print_child(f->r, 1, out);
      return;
    case Kind::Or:
      print_child(f->l, 2, out);
      out += " \\/ ";
      print_child(f->r, 3, out);
      return;
    case Kind::Tensor:
      print_child(f->l, 3, out);
      out += " (*) ";
      print_child(f->r, 4, out);
      return;
    case Kind::And:
      print_child(f->l, 4, out);
      out += " & ";
      print_child(f->r, 5, out);
      return;
  }
}

void print_child(const Formula& f, int min_prec, std::string& out) {
  if (display_prec(f) < min_prec) {
    out += '(';
    print_rec(f, out);
    out += ')';
  } else {
    print_rec(f, out);
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

Formula substitute_standard(const Formula& f,
                            const std::map<std::string, Formula>& sigma) {
  for (const auto& [name, g] : sigma) {
    if (!is_standard(g)) {
      fail(Errc::NonStandardSubstituent,
           "substituent for '" + name + "' contains \\/: " + print(g));
    }
  }
  struct Rec {
    const std::map<std::string, Formula>& sigma;
    Formula go(const Formula& f) {
      switch (f->kind) {
        case Kind::Atom: {
          auto it = sigma.find(f->atom);
          return it == sigma.end() ? f : it->second;
        }
        case Kind::Bot:
          return f;
        case Kind::And:
          return land(go(f->l), go(f->r));
        case Kind::Or:
          return lor(go(f->l), go(f->r));
        case Kind::Impl:
          return impl(go(f->l), go(f->r));
        case Kind::Tensor:
          return tensor(go(f->l), go(f->r));
      }
      return f;
    }
  };
  return Rec{sigma}.go(f);
}

// ---------------------------------------------------------------------------
// Disjunctive normal form
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kDnfLimit = 1000000;

std::vector<Formula> dedup(std::vector<Formula> disjuncts) {
  std::vector<Formula> out;
  std::unordered_set<std::string> seen;
  for (auto& d : disjuncts) {
    if (seen.insert(print(d)).second) out.push_back(std::move(d));
  }
  return out;
}

std::vector<Formula> dnf_rec(const Formula& f) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::Bot:
      return {f};
    case Kind::Or: {
      std::vector<Formula> out = dnf_rec(f->l);
      std::vector<Formula> rs = dnf_rec(f->r);
      out.insert(out.end(), rs.begin(), rs.end());
      if (out.size() > kDnfLimit) {
        fail(Errc::LimitExceeded, "dnf disjunct count exceeds limit");
      }
      return dedup(std::move(out));
    }
    case Kind::And:
    case Kind::Tensor: {
      std::vector<Formula> ls = dnf_rec(f->l);
      std::vector<Formula> rs = dnf_rec(f->r);
      if (ls.size() * rs.size() > kDnfLimit) {
        fail(Errc::LimitExceeded, "dnf disjunct count exceeds limit");
      }
      std::vector<Formula> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& a : ls) {
        for (const auto& b : rs) {
          out.push_back(f->kind == Kind::And ? land(a, b) : tensor(a, b));
        }
      }
      return dedup(std::move(out));
    }
    case Kind::Impl: {
      // Split: ⋀ᵢ(cᵢ → φ∨ψ) turns into ⋁_f ⋀ᵢ(cᵢ → d_{f(i)}) over all
      // choice functions f from antecedent disjuncts to consequent ones.
      std::vector<Formula> cs = dnf_rec(f->l);
      std::vector<Formula> ds = dnf_rec(f->r);
      const std::size_t n = cs.size();
      const std::size_t m = ds.size();
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (total > kDnfLimit / m) {
          fail(Errc::LimitExceeded, "dnf disjunct count exceeds limit");
        }
        total *= m;
      }
      std::vector<Formula> out;
      out.reserve(total);
      for (std::size_t k = 0; k < total; ++k) {
        Formula conj;
        std::size_t rest = k;
        for (std::size_t i = 0; i < n; ++i) {
          Formula leg = impl(cs[i], ds[rest % m]);
          rest /= m;
          conj = conj ? land(std::move(conj), std::move(leg)) : std::move(leg);
        }
        out.push_back(std::move(conj));
      }
      return dedup(std::move(out));
    }
  }
  fail(Errc::Internal, "dnf: unreachable node kind");
}

}  // namespace

std::vector<Formula> dnf(const Formula& f) { return dnf_rec(f); }

// ---------------------------------------------------------------------------
// Axiom schemata
// ---------------------------------------------------------------------------

namespace {

struct Schema {
  int arity;
  unsigned standard_slots;  // bit i set: argument i must be standard
};

const Schema* schema_info(const std::string& id) {
  static const std::map<std::string, Schema> table = {
      {"A1", {2, 0}},  {"A2", {3, 0}},  {"A3", {2, 0}},  {"A4", {2, 0}},
      {"A5", {2, 0}},  {"A6", {2, 0}},  {"A7", {2, 0}},  {"A8", {3, 0}},
      {"A9", {1, 0}},  {"A10", {3, 0b001}}, {"A11", {2, 0b011}},
      {"A12", {2, 0b011}}, {"A13", {3, 0}}, {"A14", {4, 0}},
      {"A15", {3, 0b111}},
  };
  auto it = table.find(id);
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace

int axiom_arity(const std::string& schema) {
  const Schema* s = schema_info(schema);
  if (!s) fail(Errc::BadInput, "unknown axiom schema '" + schema + "'");
  return s->arity;
}

Formula axiom_instances(const std::string& schema,
                        const std::vector<Formula>& args) {
  const Schema* s = schema_info(schema);
  if (!s) fail(Errc::BadInput, "unknown axiom schema '" + schema + "'");
  if (static_cast<int>(args.size()) != s->arity) {
    fail(Errc::SchemaArityMismatch,
         schema + " takes " + std::to_string(s->arity) + " arguments, got " +
             std::to_string(args.size()));
  }
  for (int i = 0; i < s->arity; ++i) {
    if ((s->standard_slots >> i & 1u) && !is_standard(args[i])) {
      fail(Errc::NonStandardSlot, schema + " slot " + std::to_string(i) +
                                      " requires a standard formula, got " +
                                      print(args[i]));
    }
  }
  const Formula& a = args[0];
  const Formula& b = args.size() > 1 ? args[1] : args[0];
  const Formula& c = args.size() > 2 ? args[2] : args[0];
  const Formula& d = args.size() > 3 ? args[3] : args[0];
  if (schema == "A1") return impl(a, impl(b, a));
  if (schema == "A2") {
    return impl(impl(a, impl(b, c)), impl(impl(a, b), impl(a, c)));
  }
  if (schema == "A3") return impl(land(a, b), a);
  if (schema == "A4") return impl(land(a, b), b);
  if (schema == "A5") return impl(a, impl(b, land(a, b)));
  if (schema == "A6") return impl(a, lor(a, b));
  if (schema == "A7") return impl(b, lor(a, b));
  if (schema == "A8") {
    return impl(impl(a, c), impl(impl(b, c), impl(lor(a, b), c)));
  }
  if (schema == "A9") return impl(bot(), a);
  if (schema == "A10") {
    return impl(impl(a, lor(b, c)), lor(impl(a, b), impl(a, c)));
  }
  if (schema == "A11") return impl(a, tensor(a, b));
  if (schema == "A12") return impl(tensor(a, b), tensor(b, a));
  if (schema == "A13") {
    return impl(tensor(a, lor(b, c)), lor(tensor(a, b), tensor(a, c)));
  }
  if (schema == "A14") {
    return impl(impl(a, c), impl(impl(b, d), impl(tensor(a, b), tensor(c, d))));
  }
  if (schema == "A15") {
    return impl(impl(a, c), impl(impl(b, c), impl(tensor(a, b), c)));
  }
  fail(Errc::Internal, "axiom_instances: unreachable schema");
}

}  // namespace inqlab
