// Truth conditions for expertise models and for relational (S5) models,
// plus the check that the two agree under the translation t.

#ifndef EXPERTISE_SEMANTICS_H_
#define EXPERTISE_SEMANTICS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expertise/formula.h"
#include "expertise/model.h"
#include "expertise/state_set.h"

namespace expertise {

// How S (and E) are decided.
//
// kLiteral quantifies over the materialized expertise set: x satisfies S f
// iff every member of P containing ||f|| contains x, and E f holds iff
// ||f|| is a member of P.
//
// kBlockIntersection uses the partition: S f holds exactly on the blocks
// that meet ||f||, and E f holds iff ||f|| is a union of blocks. This is the
// default; the two modes are cross-checked in the tests.
enum class SoundnessMode { kBlockIntersection, kLiteral };

// ||f||_M.
struct Extension {
  const ExpertiseModel* model;
  Formula formula;
  StateSet states;

  bool Holds(std::size_t state) const { return states.contains(state); }
};

// Each distinct subformula is evaluated once per call. Throws LanguageError
// if f contains K.
Extension ComputeExtension(const ExpertiseModel& model, const Formula& f,
                           SoundnessMode mode = SoundnessMode::kBlockIntersection);

// Throws ModelError for an unknown state name or out-of-range index.
bool Eval(const ExpertiseModel& model, std::size_t state, const Formula& f,
          SoundnessMode mode = SoundnessMode::kBlockIntersection);
bool Eval(const ExpertiseModel& model, std::string_view state, const Formula& f,
          SoundnessMode mode = SoundnessMode::kBlockIntersection);

// M |= f.
bool GloballyTrue(const ExpertiseModel& model, const Formula& f,
                  SoundnessMode mode = SoundnessMode::kBlockIntersection);

// Atoms of f that the model's valuation does not mention; they evaluate to
// false everywhere.
std::vector<std::string> UnvaluedAtoms(const ExpertiseModel& model, const Formula& f);

// Relational semantics over L_KA. Throws LanguageError on E or S.
StateSet ExtensionRelational(const RelationalModel& model, const Formula& f);
bool EvalRelational(const RelationalModel& model, std::size_t state, const Formula& f);
bool EvalRelational(const RelationalModel& model, std::string_view state, const Formula& f);

struct CorrespondenceMismatch {
  std::size_t state;
  bool expertise_value;   // M, x |= f
  bool relational_value;  // M*, x |= t(f)
};

struct CorrespondenceReport {
  Formula formula;
  Formula translated;
  // Least mismatching state, if any.
  std::optional<CorrespondenceMismatch> mismatch;

  bool ok() const { return !mismatch.has_value(); }
};

// Compares M, x |= f with M*, x |= t(f) at every state.
CorrespondenceReport CheckCorrespondence(const ExpertiseModel& model, const Formula& f);

}  // namespace expertise

#endif  // EXPERTISE_SEMANTICS_H_
