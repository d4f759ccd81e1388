// The Hilbert system L: propositional tautologies plus the axiom schemas
//
//   K_S   S f & ~S g -> S (f & ~g)
//   T_S   f -> S f
//   5_S   S ~S f -> ~S f
//   K_A   A (f -> g) -> (A f -> A g)
//   T_A   A f -> f
//   5_A   ~A f -> A ~A f
//   ES    E f <-> A (S f -> f)
//   Inc   A f -> ~S ~f
//
// and the rules MP (from f and f -> g infer g), Nec_A (from f infer A f)
// and R_S (from f <-> g infer S f <-> S g).

#ifndef EXPERTISE_PROOFS_H_
#define EXPERTISE_PROOFS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "expertise/formula.h"
#include "expertise/validity.h"

namespace expertise {

enum class AxiomName { kKS, kTS, k5S, kKA, kTA, k5A, kES, kInc };

inline constexpr std::array<AxiomName, 8> kAllAxioms = {
    AxiomName::kKS, AxiomName::kTS, AxiomName::k5S, AxiomName::kKA,
    AxiomName::kTA, AxiomName::k5A, AxiomName::kES, AxiomName::kInc};

std::string_view AxiomLabel(AxiomName name);
std::optional<AxiomName> AxiomFromLabel(std::string_view label);

// Metavariables are atoms with reserved names; they cannot be written in the
// concrete syntax.
inline constexpr std::string_view kPhi = "$phi";
inline constexpr std::string_view kPsi = "$psi";

using Substitution = std::map<std::string, Formula, std::less<>>;

// A named schema over the metavariables. The eight axioms are fixed; other
// templates (e.g. a deliberately unsound one) can be built for sweeps.
struct SchemaTemplate {
  std::string name;
  Formula pattern;

  // Metavariables that occur in the pattern, sorted.
  std::vector<std::string> Metavariables() const;
};

SchemaTemplate AxiomSchema(AxiomName name);
// E (f -> g) -> (E f -> E g): not valid, used as a planted negative.
SchemaTemplate EDistributionSchema();

Formula Instantiate(const Formula& pattern, const Substitution& sigma);

// Purely syntactic match of the core AST. The substitution, if any, is
// unique and Instantiate(pattern, *result) == f.
std::optional<Substitution> MatchSchema(const Formula& pattern, const Formula& f);
inline std::optional<Substitution> MatchSchema(AxiomName name, const Formula& f) {
  return MatchSchema(AxiomSchema(name).pattern, f);
}

inline constexpr std::size_t kMaxTautologyLetters = 20;

class TautologyLimitError : public std::runtime_error {
 public:
  explicit TautologyLimitError(std::size_t letters);
  std::size_t letters() const { return letters_; }

 private:
  std::size_t letters_;
};

// Abstracts atoms and maximal modal subformulas to propositional letters and
// decides the result by truth table. Throws TautologyLimitError beyond
// kMaxTautologyLetters letters.
bool CheckTaut(const Formula& f);

namespace justification {
struct Taut {};
struct Axiom {
  AxiomName name;
  std::optional<Substitution> substitution;
};
// Step `minor` is f, step `major` is f -> (this step). 1-based.
struct MP {
  std::size_t minor;
  std::size_t major;
};
struct NecA {
  std::size_t premise;
};
struct RS {
  std::size_t premise;
};
}  // namespace justification

using Justification = std::variant<justification::Taut, justification::Axiom,
                                   justification::MP, justification::NecA, justification::RS>;

std::string RenderJustification(const Justification& j);

struct ProofStep {
  Formula formula;
  Justification justification;
};

// Steps are numbered from 1; premises must refer to earlier steps.
struct Derivation {
  std::vector<ProofStep> steps;

  const Formula& Conclusion() const { return steps.back().formula; }
};

enum class StepError {
  kIndexOutOfRange,
  kNotTautology,
  kTautologyTooLarge,
  kSchemaMismatch,
  kSubstitutionMismatch,
  kModusPonensMismatch,
  kNecessitationMismatch,
  kRsPremiseNotEquivalence,
  kRsConclusionMismatch,
};

std::string_view StepErrorText(StepError e);

struct DerivationVerdict {
  // First bad step (1-based), if any.
  std::optional<std::size_t> bad_step;
  std::optional<StepError> error;
  std::string message;

  bool ok() const { return !bad_step.has_value(); }
};

// Throws std::invalid_argument for an empty derivation.
DerivationVerdict CheckDerivation(const Derivation& d);

struct SoundnessViolation {
  std::string schema;
  Formula instance;
  Verdict verdict;
};

struct SoundnessReport {
  std::size_t instances = 0;
  std::vector<SoundnessViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Instantiates every schema with every assignment of corpus formulas to its
// metavariables and searches each instance for a countermodel within `spec`.
// Violations are listed in schema order, then instance order.
SoundnessReport SoundnessSweep(const std::vector<SchemaTemplate>& schemas,
                               const std::vector<Formula>& corpus, const EnumerationSpec& spec,
                               const SearchOptions& options = {});

nlohmann::json SoundnessReportToJson(const SoundnessReport& r, bool include_timing = true);

}  // namespace expertise

#endif  // EXPERTISE_PROOFS_H_
