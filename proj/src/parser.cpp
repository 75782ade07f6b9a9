// Copyright 2026 The lazyheur Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lazyheur/parser.hpp"

#include <cctype>
#include <cstring>
#include <string>
#include <vector>

#include "lazyheur/error.hpp"

namespace lazyheur {
namespace {

enum class Tok {
  End, Ident, Var, Anon, Int, Hash,
  LParen, RParen, Comma, Dot, DotDot, Colon, Semi, LBrace, RBrace, LBrack, RBrack, At,
  Plus, Minus, Star, Slash, Backslash, If, Bar,
  Eq, Ne, Lt, Le, Gt, Ge,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t num = 0;
  int line = 1;
  int col = 1;
};

bool is_cmp(Tok t) {
  return t == Tok::Eq || t == Tok::Ne || t == Tok::Lt || t == Tok::Le || t == Tok::Gt ||
         t == Tok::Ge;
}

CmpOp cmp_of(Tok t) {
  switch (t) {
    case Tok::Eq: return CmpOp::Eq;
    case Tok::Ne: return CmpOp::Ne;
    case Tok::Lt: return CmpOp::Lt;
    case Tok::Le: return CmpOp::Le;
    case Tok::Gt: return CmpOp::Gt;
    default: return CmpOp::Ge;
  }
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  Lexer(std::string_view src, bool allow_internal) : src_(src), allow_internal_(allow_internal) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Syntax, std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg);
  }

  char peek(std::size_t k = 0) const {
    return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
  }

  bool starts(const char* s) const { return src_.substr(pos_).starts_with(s); }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == '%') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string take_ident() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(peek())) advance();
    return std::string(src_.substr(start, pos_ - start));
  }

  void lex_one(Token& t) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      t.kind = Tok::Int;
      t.text = std::string(src_.substr(start, pos_ - start));
      try {
        t.num = std::stoll(t.text);
      } catch (const std::out_of_range&) {
        fail("integer literal out of range");
      }
      return;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::Ident;
      t.text = take_ident();
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      t.kind = Tok::Var;
      t.text = take_ident();
      return;
    }
    if (c == '_') {
      char n = peek(1);
      if (std::islower(static_cast<unsigned char>(n))) {
        if (!allow_internal_) fail("identifiers starting with '_' are reserved");
        t.kind = Tok::Ident;
        t.text = take_ident();
        return;
      }
      if (ident_char(n)) {
        t.kind = Tok::Var;
        t.text = take_ident();
        return;
      }
      advance();
      t.kind = Tok::Anon;
      t.text = "_";
      return;
    }
    if (c == '#') {
      advance();
      t.kind = Tok::Hash;
      t.text = take_ident();
      if (t.text.empty()) fail("expected directive name after '#'");
      return;
    }
    struct Glyph {
      const char* text;
      Tok kind;
    };
    static const Glyph glyphs[] = {
        {":-", Tok::If},        {"\xE2\x86\x90", Tok::If}, {"..", Tok::DotDot},
        {"<=", Tok::Le},        {">=", Tok::Ge},           {"!=", Tok::Ne},
        {"<>", Tok::Ne},        {"==", Tok::Eq},           {"\xE2\x89\xA4", Tok::Le},
        {"\xE2\x89\xA5", Tok::Ge}, {"\xE2\x89\xA0", Tok::Ne}, {"\xE2\x88\x92", Tok::Minus},
        {"(", Tok::LParen},     {")", Tok::RParen},        {",", Tok::Comma},
        {".", Tok::Dot},        {":", Tok::Colon},         {";", Tok::Semi},
        {"{", Tok::LBrace},     {"}", Tok::RBrace},        {"[", Tok::LBrack},
        {"]", Tok::RBrack},     {"@", Tok::At},            {"+", Tok::Plus},
        {"-", Tok::Minus},      {"*", Tok::Star},          {"/", Tok::Slash},
        {"\\", Tok::Backslash}, {"|", Tok::Bar},           {"=", Tok::Eq},
        {"<", Tok::Lt},         {">", Tok::Gt},
    };
    for (const auto& g : glyphs) {
      if (starts(g.text)) {
        t.kind = g.kind;
        t.text = g.text;
        advance(std::strlen(g.text));
        return;
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  bool allow_internal_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    while (cur().kind != Tok::End) statement(p);
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (cur().kind != k) return false;
    ++pos_;
    return true;
  }

  std::string where(const Token& t) const {
    return std::to_string(t.line) + ":" + std::to_string(t.col) + ": ";
  }
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const {
    throw Error(code, where(cur()) + msg);
  }
  [[noreturn]] void syntax(const std::string& what) const {
    std::string got = cur().kind == Tok::End ? "end of input" : "'" + cur().text + "'";
    fail(ErrorCode::Syntax, "expected " + what + ", got " + got);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) syntax(what);
  }

  bool is_not() const { return cur().kind == Tok::Ident && cur().text == "not"; }

  void statement(Program& p) {
    int line = cur().line;
    if (cur().kind == Tok::Hash) {
      if (cur().text != "heuristic") fail(ErrorCode::Unsupported, "unsupported directive #" + cur().text);
      take();
      p.directives.push_back(directive());
      p.directives.back().line = line;
      return;
    }
    Rule r;
    r.line = line;
    if ((cur().kind == Tok::Int || cur().kind == Tok::Var) && next().kind == Tok::LBrace)
      fail(ErrorCode::UnsupportedBounds, "bounded choice heads are not supported");
    if (accept(Tok::If)) {
      r.head_kind = Rule::HeadKind::None;
      r.body = body();
    } else {
      if (cur().kind == Tok::LBrace) {
        r.head_kind = Rule::HeadKind::Choice;
        r.choice = choice_head();
        if (cur().kind != Tok::If && cur().kind != Tok::Dot)
          fail(ErrorCode::UnsupportedBounds, "bounded choice heads are not supported");
      } else {
        r.head_kind = Rule::HeadKind::Atom;
        r.head = atom();
        if (cur().kind == Tok::Bar || cur().kind == Tok::Semi)
          fail(ErrorCode::Unsupported, "disjunctive heads are not supported");
      }
      if (accept(Tok::If)) r.body = body();
    }
    expect(Tok::Dot, "'.'");
    p.rules.push_back(std::move(r));
  }

  std::vector<ChoiceElement> choice_head() {
    expect(Tok::LBrace, "'{'");
    std::vector<ChoiceElement> elems;
    if (accept(Tok::RBrace)) return elems;
    do {
      ChoiceElement e;
      e.atom = atom();
      if (accept(Tok::Colon)) e.cond = literal_list();
      elems.push_back(std::move(e));
    } while (accept(Tok::Semi));
    expect(Tok::RBrace, "'}'");
    return elems;
  }

  std::vector<Literal> body() {
    return literal_list();
  }

  std::vector<Literal> literal_list() {
    std::vector<Literal> out;
    do out.push_back(literal());
    while (accept(Tok::Comma));
    return out;
  }

  Literal literal() {
    if (is_not()) {
      take();
      if (cur().kind == Tok::Hash)
        fail(ErrorCode::Unsupported, "negated aggregates are not supported");
      return Literal::negative(atom());
    }
    if (cur().kind == Tok::Hash) {
      Aggregate agg = aggregate_body();
      Tok op = cur().kind;
      if (!is_cmp(op)) syntax("comparison after aggregate");
      take();
      Term bound = term();
      if (op == Tok::Ge) {
        agg.lower = std::move(bound);
      } else if (op == Tok::Gt) {
        agg.lower = Term::binop('+', std::move(bound), Term::integer(1));
      } else {
        fail(ErrorCode::UnsupportedBounds, "only lower bounds on aggregates are supported");
      }
      return Literal::aggregate(std::move(agg));
    }
    if (cur().kind == Tok::Ident && next().kind == Tok::LParen) {
      Atom a = atom();
      if (is_cmp(cur().kind) || cur().kind == Tok::Plus || cur().kind == Tok::Minus)
        fail(ErrorCode::Unsupported, "function symbols are not supported");
      return Literal::positive(std::move(a));
    }
    if (cur().kind == Tok::Ident && !is_cmp(next().kind) && !is_arith(next().kind)) {
      return Literal::positive(atom());
    }
    Term lhs = term();
    Tok op = cur().kind;
    if (!is_cmp(op)) syntax("comparison operator");
    take();
    if (cur().kind == Tok::Hash) {
      Aggregate agg = aggregate_body();
      if (op == Tok::Le) {
        agg.lower = std::move(lhs);
      } else if (op == Tok::Lt) {
        agg.lower = Term::binop('+', std::move(lhs), Term::integer(1));
      } else {
        fail(ErrorCode::UnsupportedBounds, "only lower bounds on aggregates are supported");
      }
      return Literal::aggregate(std::move(agg));
    }
    Comparison c;
    c.op = cmp_of(op);
    c.lhs = std::move(lhs);
    c.rhs = term();
    return Literal::comparison(std::move(c));
  }

  static bool is_arith(Tok t) {
    return t == Tok::Plus || t == Tok::Minus || t == Tok::Star || t == Tok::Slash ||
           t == Tok::Backslash;
  }

  Aggregate aggregate_body() {
    Token h = take();
    Aggregate agg;
    if (h.text == "sum") {
      agg.func = AggFunc::Sum;
    } else if (h.text == "count") {
      agg.func = AggFunc::Count;
    } else {
      throw Error(ErrorCode::Unsupported, where(h) + "unsupported aggregate #" + h.text);
    }
    expect(Tok::LBrace, "'{'");
    if (accept(Tok::RBrace)) return agg;
    do {
      AggElement e;
      do e.tuple.push_back(term());
      while (accept(Tok::Comma));
      if (accept(Tok::Colon)) {
        e.cond = literal_list();
        for (const auto& l : e.cond)
          if (l.kind == Literal::Kind::Agg)
            fail(ErrorCode::Unsupported, "nested aggregates are not supported");
      }
      agg.elements.push_back(std::move(e));
    } while (accept(Tok::Semi));
    expect(Tok::RBrace, "'}'");
    return agg;
  }

  Atom atom() {
    if (cur().kind != Tok::Ident || is_not()) syntax("atom");
    Atom a;
    a.pred = take().text;
    if (accept(Tok::LParen)) {
      do a.args.push_back(arg_term());
      while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    return a;
  }

  Term arg_term() {
    Term t = term();
    if (accept(Tok::DotDot)) return Term::interval(std::move(t), term());
    return t;
  }

  Term term() {
    Term t = product();
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      char op = take().kind == Tok::Plus ? '+' : '-';
      t = Term::binop(op, std::move(t), product());
    }
    return t;
  }

  Term product() {
    Term t = unary();
    while (cur().kind == Tok::Star || cur().kind == Tok::Slash || cur().kind == Tok::Backslash) {
      Tok k = take().kind;
      char op = k == Tok::Star ? '*' : k == Tok::Slash ? '/' : '\\';
      t = Term::binop(op, std::move(t), unary());
    }
    return t;
  }

  Term unary() {
    if (accept(Tok::Minus)) return Term::negate(unary());
    return primary();
  }

  Term primary() {
    switch (cur().kind) {
      case Tok::Int: return Term::integer(take().num);
      case Tok::Var: return Term::var(take().text);
      case Tok::Anon: take(); return Term::anon();
      case Tok::Ident: {
        if (next().kind == Tok::LParen)
          fail(ErrorCode::Unsupported, "function symbols are not supported");
        return Term::symbol(take().text);
      }
      case Tok::LParen: {
        take();
        Term t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      default: syntax("term");
    }
  }

  HeuristicAtom heuristic_atom() {
    HeuristicAtom h;
    if ((cur().kind == Tok::Plus || cur().kind == Tok::Minus) && next().kind == Tok::Ident) {
      h.sign = take().kind == Tok::Plus ? Sign::Pos : Sign::Neg;
    }
    h.atom = atom();
    return h;
  }

  HeuristicDirective directive() {
    HeuristicDirective d;
    d.head = heuristic_atom();
    if (accept(Tok::Colon)) {
      do condition_item(d);
      while (accept(Tok::Comma));
    }
    expect(Tok::Dot, "'.'");
    if (accept(Tok::LBrack)) {
      if (cur().kind != Tok::At && cur().kind != Tok::RBrack) d.weight = term();
      if (accept(Tok::At)) d.level = term();
      expect(Tok::RBrack, "']'");
    }
    return d;
  }

  void condition_item(HeuristicDirective& d) {
    if (is_not()) {
      take();
      d.neg.push_back(heuristic_atom());
      return;
    }
    if (cur().kind == Tok::Hash)
      fail(ErrorCode::Unsupported, "aggregates in heuristic conditions are not supported");
    bool signed_atom =
        (cur().kind == Tok::Plus || cur().kind == Tok::Minus) && next().kind == Tok::Ident;
    bool plain_atom = cur().kind == Tok::Ident &&
                      (next().kind == Tok::LParen || (!is_cmp(next().kind) && !is_arith(next().kind)));
    if (signed_atom || plain_atom) {
      d.pos.push_back(heuristic_atom());
      if (is_cmp(cur().kind)) fail(ErrorCode::Unsupported, "function symbols are not supported");
      return;
    }
    Comparison c;
    c.lhs = term();
    if (!is_cmp(cur().kind)) syntax("comparison operator");
    c.op = cmp_of(take().kind);
    if (cur().kind == Tok::Hash)
      fail(ErrorCode::Unsupported, "aggregates in heuristic conditions are not supported");
    c.rhs = term();
    d.builtins.push_back(std::move(c));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view text, const ParseOptions& opts) {
  Lexer lex(text, opts.allow_internal);
  Parser parser(lex.run());
  return parser.program();
}

}  // namespace lazyheur
