#include "expertise/proofs.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace expertise {

std::string_view AxiomLabel(AxiomName name) {
  switch (name) {
    case AxiomName::kKS: return "K_S";
    case AxiomName::kTS: return "T_S";
    case AxiomName::k5S: return "5_S";
    case AxiomName::kKA: return "K_A";
    case AxiomName::kTA: return "T_A";
    case AxiomName::k5A: return "5_A";
    case AxiomName::kES: return "ES";
    case AxiomName::kInc: return "Inc";
  }
  return "?";
}

std::optional<AxiomName> AxiomFromLabel(std::string_view label) {
  for (AxiomName a : kAllAxioms)
    if (AxiomLabel(a) == label) return a;
  return std::nullopt;
}

namespace {

bool IsMetavariable(const Formula& f) {
  return f.is_atom() && !f.name().empty() && f.name()[0] == '$' && f.name() != kTopAtom;
}

void CollectMetavariables(const Formula& f, std::set<std::string>& out) {
  if (IsMetavariable(f)) {
    out.insert(f.name());
    return;
  }
  switch (f.op()) {
    case Op::kAtom:
      return;
    case Op::kAnd:
      CollectMetavariables(f.lhs(), out);
      CollectMetavariables(f.rhs(), out);
      return;
    default:
      CollectMetavariables(f.child(), out);
  }
}

}  // namespace

std::vector<std::string> SchemaTemplate::Metavariables() const {
  std::set<std::string> vars;
  CollectMetavariables(pattern, vars);
  return {vars.begin(), vars.end()};
}

SchemaTemplate AxiomSchema(AxiomName name) {
  using F = Formula;
  const F phi = F::Atom(std::string(kPhi));
  const F psi = F::Atom(std::string(kPsi));
  F pattern = [&] {
    switch (name) {
      case AxiomName::kKS:
        return F::Implies(F::And(F::S(phi), F::Not(F::S(psi))), F::S(F::And(phi, F::Not(psi))));
      case AxiomName::kTS:
        return F::Implies(phi, F::S(phi));
      case AxiomName::k5S:
        return F::Implies(F::S(F::Not(F::S(phi))), F::Not(F::S(phi)));
      case AxiomName::kKA:
        return F::Implies(F::A(F::Implies(phi, psi)), F::Implies(F::A(phi), F::A(psi)));
      case AxiomName::kTA:
        return F::Implies(F::A(phi), phi);
      case AxiomName::k5A:
        return F::Implies(F::Not(F::A(phi)), F::A(F::Not(F::A(phi))));
      case AxiomName::kES:
        return F::Iff(F::E(phi), F::A(F::Implies(F::S(phi), phi)));
      case AxiomName::kInc:
        return F::Implies(F::A(phi), F::Not(F::S(F::Not(phi))));
    }
    throw std::invalid_argument("unknown axiom");
  }();
  return {std::string(AxiomLabel(name)), std::move(pattern)};
}

SchemaTemplate EDistributionSchema() {
  using F = Formula;
  const F phi = F::Atom(std::string(kPhi));
  const F psi = F::Atom(std::string(kPsi));
  return {"E-dist", F::Implies(F::E(F::Implies(phi, psi)), F::Implies(F::E(phi), F::E(psi)))};
}

Formula Instantiate(const Formula& pattern, const Substitution& sigma) {
  if (IsMetavariable(pattern)) {
    auto it = sigma.find(pattern.name());
    if (it == sigma.end())
      throw std::invalid_argument("substitution does not bind " + pattern.name());
    return it->second;
  }
  switch (pattern.op()) {
    case Op::kAtom: return pattern;
    case Op::kNot: return Formula::Not(Instantiate(pattern.child(), sigma));
    case Op::kAnd:
      return Formula::And(Instantiate(pattern.lhs(), sigma), Instantiate(pattern.rhs(), sigma));
    case Op::kE: return Formula::E(Instantiate(pattern.child(), sigma));
    case Op::kS: return Formula::S(Instantiate(pattern.child(), sigma));
    case Op::kA: return Formula::A(Instantiate(pattern.child(), sigma));
    case Op::kK: return Formula::K(Instantiate(pattern.child(), sigma));
  }
  return pattern;
}

namespace {

bool Unify(const Formula& pattern, const Formula& f, Substitution& sigma) {
  if (IsMetavariable(pattern)) {
    auto [it, inserted] = sigma.emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.op() != f.op()) return false;
  switch (pattern.op()) {
    case Op::kAtom:
      return pattern.name() == f.name();
    case Op::kAnd:
      return Unify(pattern.lhs(), f.lhs(), sigma) && Unify(pattern.rhs(), f.rhs(), sigma);
    default:
      return Unify(pattern.child(), f.child(), sigma);
  }
}

}  // namespace

std::optional<Substitution> MatchSchema(const Formula& pattern, const Formula& f) {
  Substitution sigma;
  if (!Unify(pattern, f, sigma)) return std::nullopt;
  return sigma;
}

// Tautologies ---------------------------------------------------------------

TautologyLimitError::TautologyLimitError(std::size_t letters)
    : std::runtime_error("propositional abstraction has " + std::to_string(letters) +
                         " letters; the truth-table check is capped at " +
                         std::to_string(kMaxTautologyLetters)),
      letters_(letters) {}

namespace {

using LetterMap = std::unordered_map<Formula, std::size_t, FormulaHash>;

void AssignLetters(const Formula& f, LetterMap& letters) {
  switch (f.op()) {
    case Op::kNot:
      AssignLetters(f.child(), letters);
      return;
    case Op::kAnd:
      AssignLetters(f.lhs(), letters);
      AssignLetters(f.rhs(), letters);
      return;
    default:
      letters.emplace(f, letters.size());
  }
}

// Truth values of the formula on 64 consecutive rows starting at `base`;
// letter i is bit i of the row index.
std::uint64_t EvalRows(const Formula& f, const LetterMap& letters, std::uint64_t base) {
  static constexpr std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  switch (f.op()) {
    case Op::kNot:
      return ~EvalRows(f.child(), letters, base);
    case Op::kAnd:
      return EvalRows(f.lhs(), letters, base) & EvalRows(f.rhs(), letters, base);
    default: {
      const std::size_t i = letters.at(f);
      if (i < 6) return kPatterns[i];
      return ((base >> i) & 1u) ? ~std::uint64_t{0} : 0;
    }
  }
}

}  // namespace

bool CheckTaut(const Formula& f) {
  LetterMap letters;
  AssignLetters(f, letters);
  const std::size_t k = letters.size();
  if (k > kMaxTautologyLetters) throw TautologyLimitError(k);
  const std::uint64_t rows = std::uint64_t{1} << k;
  const std::uint64_t valid = rows >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
  for (std::uint64_t base = 0; base < rows; base += 64)
    if ((EvalRows(f, letters, base) & valid) != valid) return false;
  return true;
}

// Derivations ---------------------------------------------------------------

std::string RenderJustification(const Justification& j) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, justification::Taut>) {
          return "taut";
        } else if constexpr (std::is_same_v<T, justification::Axiom>) {
          return "axiom " + std::string(AxiomLabel(v.name));
        } else if constexpr (std::is_same_v<T, justification::MP>) {
          return "mp " + std::to_string(v.minor) + " " + std::to_string(v.major);
        } else if constexpr (std::is_same_v<T, justification::NecA>) {
          return "necA " + std::to_string(v.premise);
        } else {
          return "rs " + std::to_string(v.premise);
        }
      },
      j);
}

std::string_view StepErrorText(StepError e) {
  switch (e) {
    case StepError::kIndexOutOfRange: return "premise index out of range";
    case StepError::kNotTautology: return "not a propositional tautology";
    case StepError::kTautologyTooLarge: return "tautology check refused (too many letters)";
    case StepError::kSchemaMismatch: return "schema mismatch";
    case StepError::kSubstitutionMismatch: return "substitution mismatch";
    case StepError::kModusPonensMismatch: return "modus ponens mismatch";
    case StepError::kNecessitationMismatch: return "necessitation mismatch";
    case StepError::kRsPremiseNotEquivalence: return "R_S premise is not an equivalence";
    case StepError::kRsConclusionMismatch: return "R_S conclusion mismatch";
  }
  return "?";
}

namespace {

struct StepCheck {
  std::optional<StepError> error;
  std::string detail;
};

StepCheck Bad(StepError e, std::string detail = {}) { return {e, std::move(detail)}; }

StepCheck CheckStep(const std::vector<ProofStep>& steps, std::size_t index) {
  const ProofStep& step = steps[index];
  // Premise p (1-based) must satisfy 1 <= p <= index.
  auto premise = [&](std::size_t p) -> const Formula* {
    if (p == 0 || p > index) return nullptr;
    return &steps[p - 1].formula;
  };
  auto out_of_range = [&](std::size_t p) {
    return Bad(StepError::kIndexOutOfRange,
               "step " + std::to_string(p) + " does not precede step " + std::to_string(index + 1));
  };

  return std::visit(
      [&](const auto& j) -> StepCheck {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, justification::Taut>) {
          try {
            if (!CheckTaut(step.formula)) return Bad(StepError::kNotTautology);
          } catch (const TautologyLimitError& e) {
            return Bad(StepError::kTautologyTooLarge, e.what());
          }
          return {};
        } else if constexpr (std::is_same_v<T, justification::Axiom>) {
          const SchemaTemplate schema = AxiomSchema(j.name);
          auto sigma = MatchSchema(schema.pattern, step.formula);
          if (!sigma)
            return Bad(StepError::kSchemaMismatch, "not an instance of " + schema.name);
          if (j.substitution && !(Instantiate(schema.pattern, *j.substitution) == step.formula))
            return Bad(StepError::kSubstitutionMismatch);
          return {};
        } else if constexpr (std::is_same_v<T, justification::MP>) {
          const Formula* minor = premise(j.minor);
          if (!minor) return out_of_range(j.minor);
          const Formula* major = premise(j.major);
          if (!major) return out_of_range(j.major);
          if (!(*major == Formula::Implies(*minor, step.formula)))
            return Bad(StepError::kModusPonensMismatch,
                       "step " + std::to_string(j.major) + " is not step " +
                           std::to_string(j.minor) + " -> this formula");
          return {};
        } else if constexpr (std::is_same_v<T, justification::NecA>) {
          const Formula* p = premise(j.premise);
          if (!p) return out_of_range(j.premise);
          if (!(step.formula == Formula::A(*p))) return Bad(StepError::kNecessitationMismatch);
          return {};
        } else {
          const Formula* p = premise(j.premise);
          if (!p) return out_of_range(j.premise);
          auto iff = AsIff(*p);
          if (!iff) return Bad(StepError::kRsPremiseNotEquivalence);
          if (!(step.formula == Formula::Iff(Formula::S(iff->first), Formula::S(iff->second))))
            return Bad(StepError::kRsConclusionMismatch);
          return {};
        }
      },
      step.justification);
}

}  // namespace

DerivationVerdict CheckDerivation(const Derivation& d) {
  if (d.steps.empty()) throw std::invalid_argument("no steps");
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    StepCheck c = CheckStep(d.steps, i);
    if (!c.error) continue;
    DerivationVerdict v;
    v.bad_step = i + 1;
    v.error = c.error;
    std::ostringstream msg;
    msg << "bad step " << i + 1 << ": " << StepErrorText(*c.error);
    if (!c.detail.empty()) msg << " (" << c.detail << ")";
    v.message = msg.str();
    return v;
  }
  return DerivationVerdict{std::nullopt, std::nullopt, "ok"};
}

// Soundness sweeps ----------------------------------------------------------

namespace {

void Assignments(const std::vector<std::string>& vars, std::size_t depth,
                 const std::vector<Formula>& corpus, Substitution& current,
                 std::vector<Substitution>& out) {
  if (depth == vars.size()) {
    out.push_back(current);
    return;
  }
  for (const auto& f : corpus) {
    current.insert_or_assign(vars[depth], f);
    Assignments(vars, depth + 1, corpus, current, out);
  }
  current.erase(vars[depth]);
}

}  // namespace

SoundnessReport SoundnessSweep(const std::vector<SchemaTemplate>& schemas,
                               const std::vector<Formula>& corpus, const EnumerationSpec& spec,
                               const SearchOptions& options) {
  spec.Validate();
  for (const auto& f : corpus) {
    if (!InL(f)) throw LanguageError("corpus formulas must be in L");
    for (const auto& a : Atoms(f))
      if (std::find(spec.atoms.begin(), spec.atoms.end(), a) == spec.atoms.end())
        throw std::invalid_argument("corpus atom '" + a + "' is not in the search bound");
  }

  struct Instance {
    std::size_t schema;
    Formula formula;
  };
  std::vector<Instance> instances;
  for (std::size_t s = 0; s < schemas.size(); ++s) {
    std::vector<Substitution> sigmas;
    Substitution current;
    Assignments(schemas[s].Metavariables(), 0, corpus, current, sigmas);
    for (const auto& sigma : sigmas)
      instances.push_back({s, Instantiate(schemas[s].pattern, sigma)});
  }

  std::vector<std::optional<Verdict>> verdicts(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1))
      verdicts[i] = FindCountermodel(instances[i].formula, spec);
  };
  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : options.jobs;
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  SoundnessReport report;
  report.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i)
    if (verdicts[i]->refuted())
      report.violations.push_back(
          {schemas[instances[i].schema].name, instances[i].formula, *verdicts[i]});
  return report;
}

nlohmann::json SoundnessReportToJson(const SoundnessReport& r, bool include_timing) {
  nlohmann::json j;
  j["instances"] = r.instances;
  j["ok"] = r.ok();
  auto viols = nlohmann::json::array();
  for (const auto& v : r.violations)
    viols.push_back({{"schema", v.schema},
                     {"instance", Render(v.instance)},
                     {"verdict", VerdictToJson(v.verdict, include_timing)}});
  j["violations"] = std::move(viols);
  return j;
}

}  // namespace expertise
