// Finite expertise models, expertise sets and their partition form, and the
// induced S5 relational models.
//
// An expertise set P over X (closed under complement and intersection, with
// X in P) is determined by the partition of X into its minimal nonempty
// members: P is exactly the set of unions of blocks. Models store the
// partition and materialize P only on request.

#ifndef EXPERTISE_MODEL_H_
#define EXPERTISE_MODEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "expertise/state_set.h"

namespace expertise {

// Thrown on structurally invalid models, partitions or state spaces.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The ordered, duplicate-free, nonempty list of state names of a model.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> names);
  // States named x0, x1, ..., x{n-1}.
  static StateSpace Numbered(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> Find(std::string_view name) const;
  // Throws ModelError for unknown names.
  std::size_t Index(std::string_view name) const;

  StateSet Empty() const { return StateSet(size()); }
  StateSet Full() const { return StateSet::Full(size()); }
  StateSet SetOf(const std::vector<std::string>& names) const;
  std::vector<std::string> NamesOf(const StateSet& set) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A partition of {0..universe-1} in canonical form: blocks ordered by least
// element. Equality is structural.
class Partition {
 public:
  // Validates that blocks are nonempty, disjoint and cover the universe, then
  // canonicalizes.
  Partition(std::size_t universe, std::vector<StateSet> blocks);
  // Block index per state, e.g. a restricted growth string.
  static Partition FromLabels(const std::vector<std::size_t>& labels);
  static Partition Discrete(std::size_t universe);
  static Partition Trivial(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<StateSet>& blocks() const { return blocks_; }
  const StateSet& block(std::size_t i) const { return blocks_[i]; }
  std::size_t BlockIndexOf(std::size_t state) const { return block_of_[state]; }
  const StateSet& BlockOf(std::size_t state) const { return blocks_[block_of_[state]]; }

  // True iff `set` is a union of blocks.
  bool IsUnionOfBlocks(const StateSet& set) const;
  // Union of the blocks that meet `set`.
  StateSet Saturate(const StateSet& set) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t universe_;
  std::vector<StateSet> blocks_;
  std::vector<std::size_t> block_of_;
};

// A family of subsets of X: a candidate expertise set.
struct SetFamily {
  std::vector<StateSet> sets;

  // Sorted, duplicate-free copy.
  SetFamily Canonical() const;
  bool Contains(const StateSet& s) const;
};

enum class ExpertiseLaw { kP1, kP2, kP3 };
std::string_view LawName(ExpertiseLaw law);

struct LawViolation {
  ExpertiseLaw law;
  // Members of the family that require `missing`: none for P1, A for P2,
  // A and B for P3.
  std::vector<StateSet> sources;
  StateSet missing;
};

struct ExpertiseSetVerdict {
  // At most one entry per law, in law order.
  std::vector<LawViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Decides P1 (X in P), P2 (closure under complement) and P3 (closure under
// intersection; pairwise closure suffices on a finite X). Throws
// std::invalid_argument if a member is not a subset of X, i.e. has a
// different universe.
ExpertiseSetVerdict VerifyExpertiseSet(const SetFamily& family, std::size_t universe);

// Thrown when a family that is not an expertise set is used as one.
class ExpertiseSetError : public std::invalid_argument {
 public:
  explicit ExpertiseSetError(ExpertiseSetVerdict verdict);
  const ExpertiseSetVerdict& verdict() const { return verdict_; }

 private:
  ExpertiseSetVerdict verdict_;
};

// Blocks A_x = intersection of all members containing x.
Partition PartitionFromExpertiseSet(const SetFamily& family, std::size_t universe);
// All unions of blocks, in canonical set order.
SetFamily ExpertiseSetFromPartition(const Partition& partition);
// Partition of the least expertise set containing `family`: x and y share a
// block iff no member separates them.
Partition Closure(const SetFamily& family, std::size_t universe);

// Valuation: atom name to extension. Atoms absent from the map are false at
// every state.
using Valuation = std::map<std::string, StateSet, std::less<>>;

class ExpertiseModel {
 public:
  ExpertiseModel(StateSpace states, Partition partition, Valuation valuation);

  const StateSpace& states() const { return states_; }
  const Partition& partition() const { return partition_; }
  const Valuation& valuation() const { return valuation_; }
  std::size_t size() const { return states_.size(); }

  // v(atom), or the empty set for atoms outside the valuation.
  StateSet AtomExtension(std::string_view atom) const;
  bool HasAtom(std::string_view atom) const;

  SetFamily ExpertiseSet() const { return ExpertiseSetFromPartition(partition_); }

  friend bool operator==(const ExpertiseModel& a, const ExpertiseModel& b) {
    return a.states_ == b.states_ && a.partition_ == b.partition_ &&
           a.valuation_ == b.valuation_;
  }

 private:
  StateSpace states_;
  Partition partition_;
  Valuation valuation_;
};

enum class RelationProperty { kReflexive, kSymmetric, kTransitive };
std::string_view PropertyName(RelationProperty p);

struct S5Failure {
  RelationProperty property;
  // Pair whose membership in R is missing: (x,x) for reflexivity, (y,x) for
  // symmetry given xRy, and (x,z) for transitivity given xRy and yRz.
  std::pair<std::size_t, std::size_t> missing_pair;
};

class RelationalModel {
 public:
  // successors[x] = {y | x R y}.
  RelationalModel(StateSpace states, std::vector<StateSet> successors,
                  Valuation valuation);
  static RelationalModel FromPairs(StateSpace states,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                   Valuation valuation);

  const StateSpace& states() const { return states_; }
  const Valuation& valuation() const { return valuation_; }
  std::size_t size() const { return states_.size(); }
  const StateSet& Successors(std::size_t x) const { return successors_[x]; }
  bool Related(std::size_t x, std::size_t y) const { return successors_[x].contains(y); }
  // Pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> Pairs() const;

  StateSet AtomExtension(std::string_view atom) const;

  // First failed equivalence-relation property, checked in the order
  // reflexive, symmetric, transitive.
  std::optional<S5Failure> CheckS5() const;
  bool IsS5() const { return !CheckS5().has_value(); }

  friend bool operator==(const RelationalModel& a, const RelationalModel& b) {
    return a.states_ == b.states_ && a.successors_ == b.successors_ &&
           a.valuation_ == b.valuation_;
  }

 private:
  StateSpace states_;
  std::vector<StateSet> successors_;
  Valuation valuation_;
};

class NotEquivalenceError : public std::invalid_argument {
 public:
  NotEquivalenceError(S5Failure failure, const std::string& message);
  const S5Failure& failure() const { return failure_; }

 private:
  S5Failure failure_;
};

// M* = (X, R_P, v).
RelationalModel ToS5Model(const ExpertiseModel& model);
// Inverse of ToS5Model; throws NotEquivalenceError unless R is an
// equivalence relation.
ExpertiseModel FromS5Model(const RelationalModel& model);

}  // namespace expertise

#endif  // EXPERTISE_MODEL_H_
