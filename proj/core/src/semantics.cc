#include "expertise/semantics.h"

#include <unordered_map>

namespace expertise {

namespace {

class ExpertiseEvaluator {
 public:
  ExpertiseEvaluator(const ExpertiseModel& model, SoundnessMode mode)
      : model_(model), mode_(mode) {}

  const StateSet& Eval(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    StateSet result = Compute(f);
    return memo_.emplace(f, std::move(result)).first->second;
  }

 private:
  StateSet Compute(const Formula& f) {
    const std::size_t n = model_.size();
    switch (f.op()) {
      case Op::kAtom:
        return model_.AtomExtension(f.name());
      case Op::kNot:
        return Eval(f.child()).Complement();
      case Op::kAnd: {
        StateSet l = Eval(f.lhs());
        return l &= Eval(f.rhs());
      }
      case Op::kA:
        return Eval(f.child()).full() ? StateSet::Full(n) : StateSet(n);
      case Op::kE: {
        const StateSet& inner = Eval(f.child());
        const bool expert = mode_ == SoundnessMode::kLiteral
                                ? Family().Contains(inner)
                                : model_.partition().IsUnionOfBlocks(inner);
        return expert ? StateSet::Full(n) : StateSet(n);
      }
      case Op::kS: {
        const StateSet& inner = Eval(f.child());
        if (mode_ == SoundnessMode::kBlockIntersection)
          return model_.partition().Saturate(inner);
        // x is in every member of P that includes ||f||.
        StateSet result = StateSet::Full(n);
        for (const auto& a : Family().sets)
          if (inner.IsSubsetOf(a)) result &= a;
        return result;
      }
      case Op::kK:
        break;
    }
    throw LanguageError("K is not interpreted on expertise models; use the relational semantics");
  }

  const SetFamily& Family() {
    if (!family_) family_ = model_.ExpertiseSet();
    return *family_;
  }

  const ExpertiseModel& model_;
  SoundnessMode mode_;
  std::optional<SetFamily> family_;
  std::unordered_map<Formula, StateSet, FormulaHash> memo_;
};

class RelationalEvaluator {
 public:
  explicit RelationalEvaluator(const RelationalModel& model) : model_(model) {}

  const StateSet& Eval(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    StateSet result = Compute(f);
    return memo_.emplace(f, std::move(result)).first->second;
  }

 private:
  StateSet Compute(const Formula& f) {
    const std::size_t n = model_.size();
    switch (f.op()) {
      case Op::kAtom:
        return model_.AtomExtension(f.name());
      case Op::kNot:
        return Eval(f.child()).Complement();
      case Op::kAnd: {
        StateSet l = Eval(f.lhs());
        return l &= Eval(f.rhs());
      }
      case Op::kA:
        return Eval(f.child()).full() ? StateSet::Full(n) : StateSet(n);
      case Op::kK: {
        const StateSet& inner = Eval(f.child());
        StateSet result(n);
        for (std::size_t x = 0; x < n; ++x)
          if (model_.Successors(x).IsSubsetOf(inner)) result.insert(x);
        return result;
      }
      case Op::kE:
      case Op::kS:
        break;
    }
    throw LanguageError("relational models interpret K and A only; input contains E or S");
  }

  const RelationalModel& model_;
  std::unordered_map<Formula, StateSet, FormulaHash> memo_;
};

void CheckState(std::size_t state, std::size_t size) {
  if (state >= size)
    throw ModelError("state index " + std::to_string(state) + " out of range");
}

}  // namespace

Extension ComputeExtension(const ExpertiseModel& model, const Formula& f, SoundnessMode mode) {
  if (!InL(f)) throw LanguageError("K is not interpreted on expertise models");
  ExpertiseEvaluator ev(model, mode);
  return Extension{&model, f, ev.Eval(f)};
}

bool Eval(const ExpertiseModel& model, std::size_t state, const Formula& f,
          SoundnessMode mode) {
  CheckState(state, model.size());
  return ComputeExtension(model, f, mode).Holds(state);
}

bool Eval(const ExpertiseModel& model, std::string_view state, const Formula& f,
          SoundnessMode mode) {
  return Eval(model, model.states().Index(state), f, mode);
}

bool GloballyTrue(const ExpertiseModel& model, const Formula& f, SoundnessMode mode) {
  return ComputeExtension(model, f, mode).states.full();
}

std::vector<std::string> UnvaluedAtoms(const ExpertiseModel& model, const Formula& f) {
  std::vector<std::string> out;
  for (auto& a : Atoms(f))
    if (!model.HasAtom(a)) out.push_back(std::move(a));
  return out;
}

StateSet ExtensionRelational(const RelationalModel& model, const Formula& f) {
  if (!InLKA(f)) throw LanguageError("relational models interpret K and A only; input contains E or S");
  RelationalEvaluator ev(model);
  return ev.Eval(f);
}

bool EvalRelational(const RelationalModel& model, std::size_t state, const Formula& f) {
  CheckState(state, model.size());
  return ExtensionRelational(model, f).contains(state);
}

bool EvalRelational(const RelationalModel& model, std::string_view state, const Formula& f) {
  return EvalRelational(model, model.states().Index(state), f);
}

CorrespondenceReport CheckCorrespondence(const ExpertiseModel& model, const Formula& f) {
  Formula translated = TranslateT(f);
  const StateSet lhs = ComputeExtension(model, f).states;
  const StateSet rhs = ExtensionRelational(ToS5Model(model), translated);
  CorrespondenceReport report{f, translated, std::nullopt};
  for (std::size_t x = 0; x < model.size(); ++x) {
    if (lhs.contains(x) != rhs.contains(x)) {
      report.mismatch = CorrespondenceMismatch{x, lhs.contains(x), rhs.contains(x)};
      break;
    }
  }
  return report;
}

}  // namespace expertise
