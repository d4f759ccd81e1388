// Test-only reference implementations. Nothing here calls into the library's
// evaluators, partition enumeration or matchers; they work directly on
// 32-bit state masks so they can serve as independent oracles.

#ifndef EXPERTISE_TESTS_ORACLES_H_
#define EXPERTISE_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "expertise/formula.h"

namespace oracle {

using Mask = std::uint32_t;

// An expertise model as raw data: states 0..n-1, the full family P, and
// atom extensions.
struct RawModel {
  int n = 0;
  std::vector<Mask> family;
  std::map<std::string, Mask> valuation;

  Mask Full() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

// Satisfaction at one state, straight from the truth conditions: ||f|| is
// recomputed by evaluating f at every state, S quantifies over all members
// of P containing ||f||.
inline bool Sat(const RawModel& m, int x, const expertise::Formula& f);

inline Mask Ext(const RawModel& m, const expertise::Formula& f) {
  Mask out = 0;
  for (int y = 0; y < m.n; ++y)
    if (Sat(m, y, f)) out |= Mask{1} << y;
  return out;
}

inline bool Sat(const RawModel& m, int x, const expertise::Formula& f) {
  using expertise::Op;
  switch (f.op()) {
    case Op::kAtom: {
      auto it = m.valuation.find(f.name());
      return it != m.valuation.end() && ((it->second >> x) & 1u);
    }
    case Op::kNot:
      return !Sat(m, x, f.child());
    case Op::kAnd:
      return Sat(m, x, f.lhs()) && Sat(m, x, f.rhs());
    case Op::kE: {
      const Mask e = Ext(m, f.child());
      for (Mask a : m.family)
        if (a == e) return true;
      return false;
    }
    case Op::kS: {
      const Mask e = Ext(m, f.child());
      for (Mask a : m.family)
        if ((e & ~a) == 0 && !((a >> x) & 1u)) return false;
      return true;
    }
    case Op::kA:
      for (int y = 0; y < m.n; ++y)
        if (!Sat(m, y, f.child())) return false;
      return true;
    case Op::kK:
      break;
  }
  throw std::logic_error("oracle: K on an expertise model");
}

// Relational semantics on raw successor masks.
inline bool SatRel(const std::vector<Mask>& succ,
                   const std::map<std::string, Mask>& valuation, int x,
                   const expertise::Formula& f) {
  using expertise::Op;
  const int n = static_cast<int>(succ.size());
  switch (f.op()) {
    case Op::kAtom: {
      auto it = valuation.find(f.name());
      return it != valuation.end() && ((it->second >> x) & 1u);
    }
    case Op::kNot:
      return !SatRel(succ, valuation, x, f.child());
    case Op::kAnd:
      return SatRel(succ, valuation, x, f.lhs()) && SatRel(succ, valuation, x, f.rhs());
    case Op::kA:
      for (int y = 0; y < n; ++y)
        if (!SatRel(succ, valuation, y, f.child())) return false;
      return true;
    case Op::kK:
      for (int y = 0; y < n; ++y)
        if (((succ[x] >> y) & 1u) && !SatRel(succ, valuation, y, f.child())) return false;
      return true;
    default:
      break;
  }
  throw std::logic_error("oracle: E/S on a relational model");
}

// All families F over n states (as sets of masks) that satisfy P1-P3,
// found by brute force over the powerset of the powerset (n <= 4).
inline std::vector<std::set<Mask>> AllExpertiseSets(int n) {
  const Mask full = (Mask{1} << n) - 1;
  const int subsets = 1 << n;
  std::vector<std::set<Mask>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto in = [&](Mask a) { return ((fam >> a) & 1u) != 0; };
    if (!in(full)) continue;
    bool ok = true;
    for (Mask a = 0; a <= full && ok; ++a) {
      if (!in(a)) continue;
      if (!in(full & ~a)) ok = false;
      for (Mask b = 0; b <= full && ok; ++b)
        if (in(b) && !in(a & b)) ok = false;
    }
    if (!ok) continue;
    std::set<Mask> s;
    for (Mask a = 0; a <= full; ++a)
      if (in(a)) s.insert(a);
    out.push_back(std::move(s));
  }
  return out;
}

// Set partitions of n states as sorted lists of block masks, obtained by
// canonicalizing every labelling {0..n-1} -> {0..n-1}.
inline std::set<std::vector<Mask>> AllPartitionsByLabelling(int n) {
  std::set<std::vector<Mask>> out;
  std::vector<int> label(n, 0);
  while (true) {
    std::map<int, Mask> blocks;
    for (int x = 0; x < n; ++x) blocks[label[x]] |= Mask{1} << x;
    std::vector<Mask> bs;
    for (auto& [_, b] : blocks) bs.push_back(b);
    std::sort(bs.begin(), bs.end());
    out.insert(bs);
    int i = 0;
    while (i < n && ++label[i] == n) label[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// All unions of the given blocks.
inline std::set<Mask> UnionsOf(const std::vector<Mask>& blocks) {
  std::set<Mask> out;
  for (std::uint32_t sel = 0; sel < (1u << blocks.size()); ++sel) {
    Mask u = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if ((sel >> b) & 1u) u |= blocks[b];
    out.insert(u);
  }
  return out;
}

// Random formulas of L (or L_KA with `relational`) over the given atoms.
class FormulaGen {
 public:
  FormulaGen(std::uint32_t seed, std::vector<std::string> atoms, bool relational = false)
      : rng_(seed), atoms_(std::move(atoms)), relational_(relational) {}

  expertise::Formula Next(int depth) {
    using F = expertise::Formula;
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 6);
    switch (pick(rng_)) {
      case 0: {
        std::uniform_int_distribution<std::size_t> a(0, atoms_.size() - 1);
        return F::Atom(atoms_[a(rng_)]);
      }
      case 1:
        return F::Not(Next(depth - 1));
      case 2:
      case 3:
        return F::And(Next(depth - 1), Next(depth - 1));
      case 4:
        return relational_ ? F::K(Next(depth - 1)) : F::E(Next(depth - 1));
      case 5:
        return relational_ ? F::K(Next(depth - 1)) : F::S(Next(depth - 1));
      default:
        return F::A(Next(depth - 1));
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> atoms_;
  bool relational_;
};

}  // namespace oracle

#endif  // EXPERTISE_TESTS_ORACLES_H_
