// Formulas of the expertise language and its S5 translation target.
//
// One AST serves three fragments:
//   L     atoms, ~, &, E, S, A
//   L_SA  L without E
//   L_KA  atoms, ~, &, K, A
// Disjunction, implication, equivalence, the constants T/F and the dual
// operators are abbreviations: the factories below desugar them into the
// seven core constructors, and Render() re-sugars the recognisable shapes.

#ifndef EXPERTISE_FORMULA_H_
#define EXPERTISE_FORMULA_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace expertise {

enum class Op : std::uint8_t { kAtom, kNot, kAnd, kE, kS, kA, kK };

// Atom backing the constants: T is `top | ~top` over this atom. The name is
// not a valid identifier of the concrete syntax, so it can never collide
// with a user atom.
inline constexpr std::string_view kTopAtom = "$top";

// Immutable, shared formula tree. Copies are cheap and equality is
// structural.
class Formula {
 public:
  static Formula Atom(std::string name);
  static Formula Not(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula E(Formula f);
  static Formula S(Formula f);
  static Formula A(Formula f);
  static Formula K(Formula f);

  // Abbreviations.
  static Formula Or(Formula lhs, Formula rhs);       // ~(~l & ~r)
  static Formula Implies(Formula lhs, Formula rhs);  // ~(l & ~r)
  static Formula Iff(Formula lhs, Formula rhs);      // (l -> r) & (r -> l)
  static Formula Top();                              // ~(~t & ~~t)
  static Formula Bottom();                           // ~T
  static Formula EHat(Formula f) { return Not(E(Not(std::move(f)))); }
  static Formula SHat(Formula f) { return Not(S(Not(std::move(f)))); }
  static Formula AHat(Formula f) { return Not(A(Not(std::move(f)))); }
  static Formula KHat(Formula f) { return Not(K(Not(std::move(f)))); }

  Op op() const;
  bool is_atom() const { return op() == Op::kAtom; }
  bool is_modal() const;

  // Atom name; only valid for atoms.
  const std::string& name() const;
  // Operand of a unary node.
  const Formula& child() const;
  // Operands of an And node.
  const Formula& lhs() const;
  const Formula& rhs() const;

  // Number of nodes.
  std::size_t size() const;
  std::size_t modal_depth() const;
  std::size_t hash() const;

  // Identity of the shared node; equal ids imply structural equality.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool ContainsOp(const Formula& f, Op op);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Op op, std::string name, std::optional<Formula> a,
                      std::optional<Formula> b);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Strict weak order on structure (op, then atom name, then children); used
// wherever formulas need a deterministic sort order.
bool StructurallyLess(const Formula& a, const Formula& b);

// Thrown when a formula lies outside the fragment an operation accepts.
class LanguageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool ContainsOp(const Formula& f, Op op);
inline bool InL(const Formula& f) { return !ContainsOp(f, Op::kK); }
inline bool InLSA(const Formula& f) {
  return !ContainsOp(f, Op::kE) && !ContainsOp(f, Op::kK);
}
inline bool InLKA(const Formula& f) {
  return !ContainsOp(f, Op::kE) && !ContainsOp(f, Op::kS);
}

// Sorted, duplicate-free atom names, excluding the reserved constant atom.
std::vector<std::string> Atoms(const Formula& f);

// Shape recognisers for the abbreviations.
bool IsTop(const Formula& f);
bool IsBottom(const Formula& f);
std::optional<std::pair<Formula, Formula>> AsImplies(const Formula& f);
std::optional<std::pair<Formula, Formula>> AsIff(const Formula& f);

// t: L -> L_KA. Throws LanguageError on K in the input.
Formula TranslateT(const Formula& f);
// g: L -> L_SA, eliminating E through A(S g(f) -> g(f)). Throws
// LanguageError on K in the input.
Formula EmbedG(const Formula& f);

// Concrete syntax with minimal parentheses except that a modal operator
// always brackets a binary or modal operand: `A (p -> K p)`, `S (A p)`,
// `~K ~~p`. Parse(Render(f)) == f for every formula built from atoms of the
// concrete syntax.
std::string Render(const Formula& f);

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    // A symbol or capital letter that is not part of the grammar.
    kUnknownOperator,
  };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  // Byte offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// Parses the concrete grammar (see docs/grammar.md) and desugars it.
Formula Parse(std::string_view text);

}  // namespace expertise

#endif  // EXPERTISE_FORMULA_H_
