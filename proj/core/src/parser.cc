// Recursive-descent parser for the concrete formula syntax.
//
//   iff     ::= imp [ "<->" imp ]
//   imp     ::= or [ "->" imp ]
//   or      ::= and { "|" and }
//   and     ::= unary { "&" unary }
//   unary   ::= ( "~" | "E" | "S" | "A" | "K" | "E^" | "S^" | "A^" | "K^" ) unary
//             | primary
//   primary ::= atom | "T" | "F" | "(" iff ")"
//   atom    ::= [a-z][a-z0-9_]*

#include <cctype>
#include <sstream>

#include "expertise/formula.h"

namespace expertise {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message), kind_(kind), position_(position) {}

namespace {

enum class Tok {
  kEnd,
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImp,
  kIff,
  kLParen,
  kRParen,
  kModal,  // text holds the letter, dual marks a trailing ^
  kTop,
  kBottom,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  bool dual = false;
};

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kAtom: return "atom '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

[[noreturn]] void Fail(ParseError::Kind kind, std::size_t pos, const std::string& what) {
  std::ostringstream msg;
  msg << (kind == ParseError::Kind::kSyntax ? "syntax error" : "unknown operator")
      << " at column " << pos + 1 << ": " << what;
  throw ParseError(kind, pos, msg.str());
}

std::vector<Token> Lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::islower(c)) {
      while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                              std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::kAtom, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isupper(c)) {
      ++i;
      switch (c) {
        case 'T':
          out.push_back({Tok::kTop, start, "T"});
          continue;
        case 'F':
          out.push_back({Tok::kBottom, start, "F"});
          continue;
        case 'E':
        case 'S':
        case 'A':
        case 'K': {
          Token t{Tok::kModal, start, std::string(1, static_cast<char>(c))};
          if (i < s.size() && s[i] == '^') {
            t.dual = true;
            t.text += '^';
            ++i;
          }
          out.push_back(std::move(t));
          continue;
        }
        default:
          Fail(ParseError::Kind::kUnknownOperator, start,
               "'" + std::string(1, static_cast<char>(c)) + "' is not an operator");
      }
    }
    switch (c) {
      case '~':
        out.push_back({Tok::kNot, start, "~"});
        ++i;
        continue;
      case '&':
        out.push_back({Tok::kAnd, start, "&"});
        ++i;
        continue;
      case '|':
        out.push_back({Tok::kOr, start, "|"});
        ++i;
        continue;
      case '(':
        out.push_back({Tok::kLParen, start, "("});
        ++i;
        continue;
      case ')':
        out.push_back({Tok::kRParen, start, ")"});
        ++i;
        continue;
      case '-':
        if (s.substr(i, 2) == "->") {
          out.push_back({Tok::kImp, start, "->"});
          i += 2;
          continue;
        }
        break;
      case '<':
        if (s.substr(i, 3) == "<->") {
          out.push_back({Tok::kIff, start, "<->"});
          i += 3;
          continue;
        }
        break;
      default:
        break;
    }
    if (std::ispunct(c)) {
      // Longest run of punctuation for a readable message, e.g. "=>".
      std::size_t j = i + 1;
      while (j < s.size() && std::ispunct(static_cast<unsigned char>(s[j])) &&
             s[j] != '(' && s[j] != ')' && s[j] != '~')
        ++j;
      Fail(ParseError::Kind::kUnknownOperator, start,
           "'" + std::string(s.substr(start, j - start)) + "' is not an operator");
    }
    Fail(ParseError::Kind::kSyntax, start,
         "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }
  out.push_back({Tok::kEnd, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula ParseAll() {
    Formula f = ParseIff();
    if (Peek().kind != Tok::kEnd)
      Fail(ParseError::Kind::kSyntax, Peek().pos, "unexpected " + Describe(Peek()));
    return f;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  Formula ParseIff() {
    Formula lhs = ParseImp();
    if (Peek().kind != Tok::kIff) return lhs;
    Next();
    Formula rhs = ParseImp();
    if (Peek().kind == Tok::kIff)
      Fail(ParseError::Kind::kSyntax, Peek().pos,
           "'<->' is not associative; add parentheses");
    return Formula::Iff(std::move(lhs), std::move(rhs));
  }

  Formula ParseImp() {
    Formula lhs = ParseOr();
    if (Peek().kind != Tok::kImp) return lhs;
    Next();
    return Formula::Implies(std::move(lhs), ParseImp());
  }

  Formula ParseOr() {
    Formula lhs = ParseAnd();
    while (Peek().kind == Tok::kOr) {
      Next();
      lhs = Formula::Or(std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  Formula ParseAnd() {
    Formula lhs = ParseUnary();
    while (Peek().kind == Tok::kAnd) {
      Next();
      lhs = Formula::And(std::move(lhs), ParseUnary());
    }
    return lhs;
  }

  Formula ParseUnary() {
    const Token& t = Peek();
    if (t.kind == Tok::kNot) {
      Next();
      return Formula::Not(ParseUnary());
    }
    if (t.kind == Tok::kModal) {
      const char letter = t.text[0];
      const bool dual = t.dual;
      Next();
      Formula operand = ParseUnary();
      if (dual) operand = Formula::Not(std::move(operand));
      Formula applied = [&] {
        switch (letter) {
          case 'E': return Formula::E(std::move(operand));
          case 'S': return Formula::S(std::move(operand));
          case 'A': return Formula::A(std::move(operand));
          default: return Formula::K(std::move(operand));
        }
      }();
      return dual ? Formula::Not(std::move(applied)) : applied;
    }
    return ParsePrimary();
  }

  Formula ParsePrimary() {
    const Token& t = Next();
    switch (t.kind) {
      case Tok::kAtom:
        return Formula::Atom(t.text);
      case Tok::kTop:
        return Formula::Top();
      case Tok::kBottom:
        return Formula::Bottom();
      case Tok::kLParen: {
        Formula inner = ParseIff();
        if (Peek().kind != Tok::kRParen)
          Fail(ParseError::Kind::kSyntax, Peek().pos,
               "expected ')' but found " + Describe(Peek()));
        Next();
        return inner;
      }
      default:
        Fail(ParseError::Kind::kSyntax, t.pos, "expected a formula but found " + Describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula Parse(std::string_view text) { return Parser(Lex(text)).ParseAll(); }

}  // namespace expertise
