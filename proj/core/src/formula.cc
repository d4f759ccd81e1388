#include "expertise/formula.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace expertise {

struct Formula::Node {
  Op op;
  std::string name;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::size_t size;
  std::size_t modal_depth;
  std::size_t hash;
  unsigned ops;
};

namespace {

std::size_t Mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

Formula Formula::Make(Op op, std::string name, std::optional<Formula> a,
                      std::optional<Formula> b) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->size = 1;
  node->modal_depth = 0;
  node->ops = 1u << static_cast<unsigned>(op);
  std::size_t h = Mix(0, static_cast<std::size_t>(op) + 1);
  if (op == Op::kAtom) h = Mix(h, std::hash<std::string>{}(name));
  if (a) {
    node->size += a->size();
    node->modal_depth = a->modal_depth();
    h = Mix(h, a->hash());
    node->ops |= a->node_->ops;
  }
  if (b) {
    node->size += b->size();
    node->modal_depth = std::max(node->modal_depth, b->modal_depth());
    h = Mix(h, b->hash());
    node->ops |= b->node_->ops;
  }
  if (op == Op::kE || op == Op::kS || op == Op::kA || op == Op::kK)
    ++node->modal_depth;
  node->name = std::move(name);
  node->a = std::move(a);
  node->b = std::move(b);
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::Atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  return Make(Op::kAtom, std::move(name), std::nullopt, std::nullopt);
}
Formula Formula::Not(Formula f) { return Make(Op::kNot, {}, std::move(f), std::nullopt); }
Formula Formula::And(Formula lhs, Formula rhs) {
  return Make(Op::kAnd, {}, std::move(lhs), std::move(rhs));
}
Formula Formula::E(Formula f) { return Make(Op::kE, {}, std::move(f), std::nullopt); }
Formula Formula::S(Formula f) { return Make(Op::kS, {}, std::move(f), std::nullopt); }
Formula Formula::A(Formula f) { return Make(Op::kA, {}, std::move(f), std::nullopt); }
Formula Formula::K(Formula f) { return Make(Op::kK, {}, std::move(f), std::nullopt); }

Formula Formula::Or(Formula lhs, Formula rhs) {
  return Not(And(Not(std::move(lhs)), Not(std::move(rhs))));
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Not(And(std::move(lhs), Not(std::move(rhs))));
}

Formula Formula::Iff(Formula lhs, Formula rhs) {
  return And(Implies(lhs, rhs), Implies(rhs, lhs));
}

Formula Formula::Top() {
  static const Formula top = [] {
    Formula t = Atom(std::string(kTopAtom));
    return Or(t, Not(t));
  }();
  return top;
}

Formula Formula::Bottom() {
  static const Formula bottom = Not(Top());
  return bottom;
}

Op Formula::op() const { return node_->op; }

bool Formula::is_modal() const {
  const Op o = op();
  return o == Op::kE || o == Op::kS || o == Op::kA || o == Op::kK;
}

const std::string& Formula::name() const {
  assert(op() == Op::kAtom);
  return node_->name;
}

const Formula& Formula::child() const {
  assert(node_->a && !node_->b);
  return *node_->a;
}

const Formula& Formula::lhs() const {
  assert(op() == Op::kAnd);
  return *node_->a;
}

const Formula& Formula::rhs() const {
  assert(op() == Op::kAnd);
  return *node_->b;
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::modal_depth() const { return node_->modal_depth; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.op != y.op || x.size != y.size) return false;
  switch (x.op) {
    case Op::kAtom:
      return x.name == y.name;
    case Op::kAnd:
      return *x.a == *y.a && *x.b == *y.b;
    default:
      return *x.a == *y.a;
  }
}

bool StructurallyLess(const Formula& a, const Formula& b) {
  if (a.op() != b.op()) return a.op() < b.op();
  switch (a.op()) {
    case Op::kAtom:
      return a.name() < b.name();
    case Op::kAnd:
      if (!(a.lhs() == b.lhs())) return StructurallyLess(a.lhs(), b.lhs());
      return StructurallyLess(a.rhs(), b.rhs());
    default:
      return StructurallyLess(a.child(), b.child());
  }
}

bool ContainsOp(const Formula& f, Op op) {
  return (f.node_->ops >> static_cast<unsigned>(op)) & 1u;
}

namespace {

void CollectAtoms(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::kAtom:
      if (f.name() != kTopAtom) out.insert(f.name());
      return;
    case Op::kAnd:
      CollectAtoms(f.lhs(), out);
      CollectAtoms(f.rhs(), out);
      return;
    default:
      CollectAtoms(f.child(), out);
  }
}

}  // namespace

std::vector<std::string> Atoms(const Formula& f) {
  std::set<std::string> atoms;
  CollectAtoms(f, atoms);
  return {atoms.begin(), atoms.end()};
}

bool IsTop(const Formula& f) { return f == Formula::Top(); }
bool IsBottom(const Formula& f) { return f == Formula::Bottom(); }

std::optional<std::pair<Formula, Formula>> AsImplies(const Formula& f) {
  if (f.op() != Op::kNot) return std::nullopt;
  const Formula& inner = f.child();
  if (inner.op() != Op::kAnd || inner.rhs().op() != Op::kNot) return std::nullopt;
  return std::make_pair(inner.lhs(), inner.rhs().child());
}

std::optional<std::pair<Formula, Formula>> AsIff(const Formula& f) {
  if (f.op() != Op::kAnd) return std::nullopt;
  auto forward = AsImplies(f.lhs());
  auto backward = AsImplies(f.rhs());
  if (!forward || !backward) return std::nullopt;
  if (!(forward->first == backward->second) || !(forward->second == backward->first))
    return std::nullopt;
  return forward;
}

Formula TranslateT(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom:
      return f;
    case Op::kNot:
      return Formula::Not(TranslateT(f.child()));
    case Op::kAnd:
      return Formula::And(TranslateT(f.lhs()), TranslateT(f.rhs()));
    case Op::kA:
      return Formula::A(TranslateT(f.child()));
    case Op::kE: {
      Formula inner = TranslateT(f.child());
      return Formula::A(Formula::Implies(inner, Formula::K(inner)));
    }
    case Op::kS:
      return Formula::Not(Formula::K(Formula::Not(TranslateT(f.child()))));
    case Op::kK:
      break;
  }
  throw LanguageError("translation t is defined on L only; input contains K");
}

Formula EmbedG(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom:
      return f;
    case Op::kNot:
      return Formula::Not(EmbedG(f.child()));
    case Op::kAnd:
      return Formula::And(EmbedG(f.lhs()), EmbedG(f.rhs()));
    case Op::kA:
      return Formula::A(EmbedG(f.child()));
    case Op::kS:
      return Formula::S(EmbedG(f.child()));
    case Op::kE: {
      Formula inner = EmbedG(f.child());
      return Formula::A(Formula::Implies(Formula::S(inner), inner));
    }
    case Op::kK:
      break;
  }
  throw LanguageError("embedding g is defined on L only; input contains K");
}

// Rendering ---------------------------------------------------------------

namespace {

// Binding strength of the outermost construct, loosest first.
enum Level { kIffLevel = 1, kImpLevel, kAndLevel, kUnaryLevel, kAtomLevel };

enum class Shape { kAtomic, kNegation, kModal, kBinary };

struct Rendered {
  std::string text;
  Level level;
  Shape shape;
};

std::string Paren(const Rendered& r, bool wrap) {
  return wrap ? "(" + r.text + ")" : r.text;
}

char ModalLetter(Op op) {
  switch (op) {
    case Op::kE: return 'E';
    case Op::kS: return 'S';
    case Op::kA: return 'A';
    case Op::kK: return 'K';
    default: return '?';
  }
}

Rendered RenderNode(const Formula& f) {
  if (IsTop(f)) return {"T", kAtomLevel, Shape::kAtomic};
  if (IsBottom(f)) return {"F", kAtomLevel, Shape::kAtomic};
  if (auto iff = AsIff(f)) {
    Rendered l = RenderNode(iff->first);
    Rendered r = RenderNode(iff->second);
    return {Paren(l, l.level <= kIffLevel) + " <-> " + Paren(r, r.level <= kIffLevel),
            kIffLevel, Shape::kBinary};
  }
  if (auto imp = AsImplies(f)) {
    Rendered l = RenderNode(imp->first);
    Rendered r = RenderNode(imp->second);
    return {Paren(l, l.level <= kImpLevel) + " -> " + Paren(r, r.level < kImpLevel),
            kImpLevel, Shape::kBinary};
  }
  switch (f.op()) {
    case Op::kAtom:
      return {f.name(), kAtomLevel, Shape::kAtomic};
    case Op::kAnd: {
      Rendered l = RenderNode(f.lhs());
      Rendered r = RenderNode(f.rhs());
      return {Paren(l, l.level < kAndLevel) + " & " + Paren(r, r.level <= kAndLevel),
              kAndLevel, Shape::kBinary};
    }
    case Op::kNot: {
      Rendered c = RenderNode(f.child());
      return {"~" + Paren(c, c.level < kUnaryLevel), kUnaryLevel, Shape::kNegation};
    }
    default: {
      Rendered c = RenderNode(f.child());
      const bool wrap = c.shape == Shape::kBinary || c.shape == Shape::kModal;
      return {std::string(1, ModalLetter(f.op())) + " " + Paren(c, wrap), kUnaryLevel,
              Shape::kModal};
    }
  }
}

}  // namespace

std::string Render(const Formula& f) { return RenderNode(f).text; }

}  // namespace expertise
