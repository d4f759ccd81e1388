#include "expertise/model.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace expertise {

// StateSpace ---------------------------------------------------------------

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ModelError("a model needs at least one state");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ModelError("state names must be nonempty");
    if (!index_.emplace(names_[i], i).second)
      throw ModelError("duplicate state '" + names_[i] + "'");
  }
}

StateSpace StateSpace::Numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return StateSpace(std::move(names));
}

std::optional<std::size_t> StateSpace::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t StateSpace::Index(std::string_view name) const {
  if (auto i = Find(name)) return *i;
  throw ModelError("unknown state '" + std::string(name) + "'");
}

StateSet StateSpace::SetOf(const std::vector<std::string>& names) const {
  StateSet s(size());
  for (const auto& n : names) s.insert(Index(n));
  return s;
}

std::vector<std::string> StateSpace::NamesOf(const StateSet& set) const {
  std::vector<std::string> out;
  set.ForEach([&](std::size_t i) { out.push_back(names_[i]); });
  return out;
}

// Partition ----------------------------------------------------------------

Partition::Partition(std::size_t universe, std::vector<StateSet> blocks)
    : universe_(universe), blocks_(std::move(blocks)), block_of_(universe, 0) {
  if (universe_ == 0) throw ModelError("partition of an empty state set");
  StateSet seen(universe_);
  for (const auto& b : blocks_) {
    if (b.universe() != universe_)
      throw ModelError("partition block is not a subset of the state set");
    if (b.empty()) throw ModelError("partition blocks must be nonempty");
    if (b.Intersects(seen)) throw ModelError("partition blocks must be pairwise disjoint");
    seen |= b;
  }
  if (!seen.full()) throw ModelError("partition blocks must cover every state");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const StateSet& a, const StateSet& b) { return *a.First() < *b.First(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    blocks_[i].ForEach([&](std::size_t x) { block_of_[x] = i; });
}

Partition Partition::FromLabels(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, StateSet> by_label;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, _] = by_label.try_emplace(labels[x], StateSet(labels.size()));
    it->second.insert(x);
  }
  std::vector<StateSet> blocks;
  for (auto& [_, b] : by_label) blocks.push_back(std::move(b));
  return Partition(labels.size(), std::move(blocks));
}

Partition Partition::Discrete(std::size_t universe) {
  std::vector<StateSet> blocks;
  for (std::size_t x = 0; x < universe; ++x) blocks.push_back(StateSet::Singleton(universe, x));
  return Partition(universe, std::move(blocks));
}

Partition Partition::Trivial(std::size_t universe) {
  return Partition(universe, {StateSet::Full(universe)});
}

bool Partition::IsUnionOfBlocks(const StateSet& set) const {
  return Saturate(set) == set;
}

StateSet Partition::Saturate(const StateSet& set) const {
  StateSet out(universe_);
  for (const auto& b : blocks_)
    if (b.Intersects(set)) out |= b;
  return out;
}

// Expertise sets -----------------------------------------------------------

SetFamily SetFamily::Canonical() const {
  SetFamily out{sets};
  std::sort(out.sets.begin(), out.sets.end());
  out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());
  return out;
}

bool SetFamily::Contains(const StateSet& s) const {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

std::string_view LawName(ExpertiseLaw law) {
  switch (law) {
    case ExpertiseLaw::kP1: return "P1";
    case ExpertiseLaw::kP2: return "P2";
    case ExpertiseLaw::kP3: return "P3";
  }
  return "?";
}

namespace {

void RequireSubsets(const SetFamily& family, std::size_t universe) {
  for (const auto& s : family.sets)
    if (s.universe() != universe)
      throw std::invalid_argument("family member is not a subset of the state set");
}

}  // namespace

ExpertiseSetVerdict VerifyExpertiseSet(const SetFamily& family, std::size_t universe) {
  RequireSubsets(family, universe);
  const SetFamily canon = family.Canonical();
  const auto& sets = canon.sets;
  auto member = [&](const StateSet& s) {
    return std::binary_search(sets.begin(), sets.end(), s);
  };

  ExpertiseSetVerdict verdict;
  const StateSet full = StateSet::Full(universe);
  if (!member(full)) verdict.violations.push_back({ExpertiseLaw::kP1, {}, full});

  for (const auto& a : sets) {
    StateSet c = a.Complement();
    if (!member(c)) {
      verdict.violations.push_back({ExpertiseLaw::kP2, {a}, std::move(c)});
      break;
    }
  }

  bool p3_done = false;
  for (std::size_t i = 0; i < sets.size() && !p3_done; ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      StateSet meet = sets[i] & sets[j];
      if (!member(meet)) {
        verdict.violations.push_back({ExpertiseLaw::kP3, {sets[i], sets[j]}, std::move(meet)});
        p3_done = true;
        break;
      }
    }
  }
  return verdict;
}

namespace {

std::string DescribeVerdict(const ExpertiseSetVerdict& v) {
  std::ostringstream os;
  os << "not an expertise set:";
  for (const auto& viol : v.violations) os << ' ' << LawName(viol.law);
  return os.str();
}

}  // namespace

ExpertiseSetError::ExpertiseSetError(ExpertiseSetVerdict verdict)
    : std::invalid_argument(DescribeVerdict(verdict)), verdict_(std::move(verdict)) {}

Partition PartitionFromExpertiseSet(const SetFamily& family, std::size_t universe) {
  ExpertiseSetVerdict verdict = VerifyExpertiseSet(family, universe);
  if (!verdict.ok()) throw ExpertiseSetError(std::move(verdict));

  std::vector<StateSet> blocks;
  StateSet covered(universe);
  for (std::size_t x = 0; x < universe; ++x) {
    if (covered.contains(x)) continue;
    StateSet smallest = StateSet::Full(universe);
    for (const auto& a : family.sets)
      if (a.contains(x)) smallest &= a;
    covered |= smallest;
    blocks.push_back(std::move(smallest));
  }
  return Partition(universe, std::move(blocks));
}

SetFamily ExpertiseSetFromPartition(const Partition& partition) {
  const std::size_t m = partition.block_count();
  if (m > 24) throw std::length_error("expertise set too large to materialize");
  SetFamily out;
  out.sets.reserve(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    StateSet u(partition.universe());
    for (std::size_t b = 0; b < m; ++b)
      if ((mask >> b) & 1u) u |= partition.block(b);
    out.sets.push_back(std::move(u));
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

Partition Closure(const SetFamily& family, std::size_t universe) {
  RequireSubsets(family, universe);
  std::vector<StateSet> blocks{StateSet::Full(universe)};
  for (const auto& a : family.sets) {
    std::vector<StateSet> refined;
    refined.reserve(blocks.size() * 2);
    for (const auto& b : blocks) {
      StateSet in = b & a;
      StateSet out = b - a;
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    blocks = std::move(refined);
  }
  return Partition(universe, std::move(blocks));
}

// ExpertiseModel -----------------------------------------------------------

namespace {

void CheckValuation(const Valuation& v, std::size_t universe) {
  for (const auto& [atom, set] : v) {
    if (atom.empty()) throw ModelError("atom names must be nonempty");
    if (set.universe() != universe)
      throw ModelError("valuation of '" + atom + "' is not a subset of the state set");
  }
}

}  // namespace

ExpertiseModel::ExpertiseModel(StateSpace states, Partition partition, Valuation valuation)
    : states_(std::move(states)),
      partition_(std::move(partition)),
      valuation_(std::move(valuation)) {
  if (partition_.universe() != states_.size())
    throw ModelError("partition does not cover the state set");
  CheckValuation(valuation_, states_.size());
}

StateSet ExpertiseModel::AtomExtension(std::string_view atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? StateSet(size()) : it->second;
}

bool ExpertiseModel::HasAtom(std::string_view atom) const {
  return valuation_.find(atom) != valuation_.end();
}

// RelationalModel ----------------------------------------------------------

std::string_view PropertyName(RelationProperty p) {
  switch (p) {
    case RelationProperty::kReflexive: return "reflexive";
    case RelationProperty::kSymmetric: return "symmetric";
    case RelationProperty::kTransitive: return "transitive";
  }
  return "?";
}

RelationalModel::RelationalModel(StateSpace states, std::vector<StateSet> successors,
                                 Valuation valuation)
    : states_(std::move(states)),
      successors_(std::move(successors)),
      valuation_(std::move(valuation)) {
  if (successors_.size() != states_.size())
    throw ModelError("relation must list successors for every state");
  for (const auto& s : successors_)
    if (s.universe() != states_.size()) throw ModelError("relation is not a subset of X x X");
  CheckValuation(valuation_, states_.size());
}

RelationalModel RelationalModel::FromPairs(
    StateSpace states, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    Valuation valuation) {
  const std::size_t n = states.size();
  std::vector<StateSet> succ(n, StateSet(n));
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw ModelError("relation is not a subset of X x X");
    succ[x].insert(y);
  }
  return RelationalModel(std::move(states), std::move(succ), std::move(valuation));
}

std::vector<std::pair<std::size_t, std::size_t>> RelationalModel::Pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    successors_[x].ForEach([&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

StateSet RelationalModel::AtomExtension(std::string_view atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? StateSet(size()) : it->second;
}

std::optional<S5Failure> RelationalModel::CheckS5() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    if (!Related(x, x)) return S5Failure{RelationProperty::kReflexive, {x, x}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (Related(x, y) && !Related(y, x))
        return S5Failure{RelationProperty::kSymmetric, {y, x}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!Related(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (Related(y, z) && !Related(x, z))
          return S5Failure{RelationProperty::kTransitive, {x, z}};
    }
  return std::nullopt;
}

NotEquivalenceError::NotEquivalenceError(S5Failure failure, const std::string& message)
    : std::invalid_argument(message), failure_(failure) {}

RelationalModel ToS5Model(const ExpertiseModel& model) {
  const auto& p = model.partition();
  std::vector<StateSet> succ;
  succ.reserve(model.size());
  for (std::size_t x = 0; x < model.size(); ++x) succ.push_back(p.BlockOf(x));
  return RelationalModel(model.states(), std::move(succ), model.valuation());
}

ExpertiseModel FromS5Model(const RelationalModel& model) {
  if (auto failure = model.CheckS5()) {
    const auto& names = model.states().names();
    std::ostringstream msg;
    msg << "relation is not " << PropertyName(failure->property) << ": missing ("
        << names[failure->missing_pair.first] << ", " << names[failure->missing_pair.second]
        << ")";
    throw NotEquivalenceError(*failure, msg.str());
  }
  std::vector<StateSet> blocks;
  StateSet covered(model.size());
  for (std::size_t x = 0; x < model.size(); ++x) {
    if (covered.contains(x)) continue;
    covered |= model.Successors(x);
    blocks.push_back(model.Successors(x));
  }
  return ExpertiseModel(model.states(), Partition(model.size(), std::move(blocks)),
                        model.valuation());
}

}  // namespace expertise
