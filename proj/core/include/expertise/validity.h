// Bounded validity: exhaustive enumeration of small expertise models,
// countermodel search and equivalence checking.
//
// Enumeration order (also the order in which witnesses are minimal):
//   1. number of states, ascending (searches cover 1..max_states);
//   2. partition, in restricted-growth-string order ("000" < "001" < ...);
//   3. valuation, as a binary counter: bit (i * n + x) of the counter says
//      whether state x satisfies the i-th atom;
//   4. state index.
// States are named x0..x{n-1}.

#ifndef EXPERTISE_VALIDITY_H_
#define EXPERTISE_VALIDITY_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "expertise/formula.h"
#include "expertise/model.h"

namespace expertise {

// Bell numbers B(0..25) fit in 64 bits; larger n throws std::overflow_error.
std::uint64_t BellNumber(std::size_t n);

// Every set partition of {0..n-1}, in restricted-growth-string order.
std::vector<Partition> AllPartitions(std::size_t n);

struct EnumerationSpec {
  std::size_t n_states = 1;
  std::vector<std::string> atoms;
  // Stop after this many models.
  std::optional<std::uint64_t> limit;

  // Bell(n) * 2^(n * |atoms|) for the configured n. Throws
  // std::overflow_error if it does not fit in 64 bits.
  std::uint64_t ModelCount() const;
  // Sum of ModelCount() over sizes 1..n_states.
  std::uint64_t CumulativeModelCount() const;
  void Validate() const;
};

// Streams every model with exactly spec.n_states states.
class ModelEnumerator {
 public:
  explicit ModelEnumerator(EnumerationSpec spec);

  // Next model, or nullopt when exhausted or the limit is reached.
  std::optional<ExpertiseModel> Next();
  bool truncated() const { return truncated_; }
  std::uint64_t visited() const { return visited_; }

 private:
  EnumerationSpec spec_;
  StateSpace states_;
  std::vector<Partition> partitions_;
  std::size_t partition_index_ = 0;
  std::uint64_t valuation_index_ = 0;
  std::uint64_t valuations_per_partition_;
  std::uint64_t visited_ = 0;
  bool truncated_ = false;
};

// The model at (partition, valuation) position of the enumeration.
ExpertiseModel EnumeratedModel(const StateSpace& states, const Partition& partition,
                               const std::vector<std::string>& atoms,
                               std::uint64_t valuation_index);

struct Countermodel {
  ExpertiseModel model;
  std::size_t state;
};

class Verdict {
 public:
  enum class Status { kValidUpToBound, kCountermodelFound };

  // Re-evaluates the formula on the witness and throws std::logic_error if
  // it does not falsify it.
  static Verdict Refuted(Formula formula, EnumerationSpec bound, Countermodel witness,
                         std::uint64_t models_checked, std::chrono::nanoseconds elapsed);
  static Verdict NoCountermodel(Formula formula, EnumerationSpec bound,
                                std::uint64_t models_checked, bool truncated,
                                std::chrono::nanoseconds elapsed);

  Status status() const { return status_; }
  bool refuted() const { return status_ == Status::kCountermodelFound; }
  const Formula& formula() const { return formula_; }
  const EnumerationSpec& bound() const { return bound_; }
  const std::optional<Countermodel>& witness() const { return witness_; }
  // Models in enumeration order up to and including the witness model, or
  // all models searched.
  std::uint64_t models_checked() const { return models_checked_; }
  bool truncated() const { return truncated_; }
  std::chrono::nanoseconds elapsed() const { return elapsed_; }

  // "no countermodel with <= n states" or "countermodel found ...".
  std::string Summary() const;

 private:
  Verdict(Status status, Formula formula, EnumerationSpec bound,
          std::optional<Countermodel> witness, std::uint64_t models_checked, bool truncated,
          std::chrono::nanoseconds elapsed);

  Status status_;
  Formula formula_;
  EnumerationSpec bound_;
  std::optional<Countermodel> witness_;
  std::uint64_t models_checked_;
  bool truncated_;
  std::chrono::nanoseconds elapsed_;
};

std::string_view StatusName(Verdict::Status status);

struct SearchOptions {
  // Worker threads; 0 means hardware concurrency.
  unsigned jobs = 1;
};

// Least (model, state) in enumeration order, over 1..spec.n_states states,
// at which f is false. Throws std::invalid_argument if f mentions an atom
// outside spec.atoms, LanguageError if f contains K.
Verdict FindCountermodel(const Formula& f, const EnumerationSpec& spec,
                         const SearchOptions& options = {});

// FindCountermodel(f <-> g).
Verdict CheckEquivalence(const Formula& f, const Formula& g, const EnumerationSpec& spec,
                         const SearchOptions& options = {});

// Default bound for f: atoms(f), and up to 4 states while keeping
// states * atoms <= 12.
EnumerationSpec DefaultBound(const Formula& f);

// {"status", "summary", "formula", "bound", "witness", "models_checked",
//  "total_models", "truncated"[, "wall_time_ms"]}.
nlohmann::json VerdictToJson(const Verdict& v, bool include_timing = true);

// Twelve formulas of modal depth <= 2 over {p, q}; the schema corpus.
const std::vector<Formula>& DefaultCorpus();
const std::vector<std::string>& DefaultCorpusText();

}  // namespace expertise

#endif  // EXPERTISE_VALIDITY_H_
