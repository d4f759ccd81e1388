#include "expertise/validity.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "expertise/model_io.h"
#include "expertise/semantics.h"

namespace expertise {

std::uint64_t BellNumber(std::size_t n) {
  // Bell triangle; row n's first entry is B(n).
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) {
      if (next.back() > std::numeric_limits<std::uint64_t>::max() - v)
        throw std::overflow_error("Bell number overflows 64 bits");
      next.push_back(next.back() + v);
    }
    row = std::move(next);
  }
  return row.front();
}

std::vector<Partition> AllPartitions(std::size_t n) {
  if (n == 0) throw std::invalid_argument("partitions of an empty set are not models");
  BellNumber(n);  // overflow guard
  std::vector<Partition> out;
  // rgs[i] <= 1 + max(rgs[0..i-1]), rgs[0] = 0.
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    out.push_back(Partition::FromLabels(rgs));
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0 || i >= n) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

namespace {

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("model count overflows 64 bits");
  return a * b;
}

std::uint64_t ValuationCount(std::size_t n, std::size_t atoms) {
  const std::size_t bits = n * atoms;
  if (bits >= 64) throw std::overflow_error("model count overflows 64 bits");
  return std::uint64_t{1} << bits;
}

std::uint64_t CountForSize(std::size_t n, std::size_t atoms) {
  return CheckedMul(BellNumber(n), ValuationCount(n, atoms));
}

}  // namespace

std::uint64_t EnumerationSpec::ModelCount() const {
  return CountForSize(n_states, atoms.size());
}

std::uint64_t EnumerationSpec::CumulativeModelCount() const {
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= n_states; ++s) {
    const std::uint64_t c = CountForSize(s, atoms.size());
    if (total > std::numeric_limits<std::uint64_t>::max() - c)
      throw std::overflow_error("model count overflows 64 bits");
    total += c;
  }
  return total;
}

void EnumerationSpec::Validate() const {
  if (n_states == 0) throw std::invalid_argument("the state bound must be at least 1");
  std::vector<std::string> sorted = atoms;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate atom in enumeration spec");
  CumulativeModelCount();
}

ExpertiseModel EnumeratedModel(const StateSpace& states, const Partition& partition,
                               const std::vector<std::string>& atoms,
                               std::uint64_t valuation_index) {
  const std::size_t n = states.size();
  const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Valuation v;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    v.emplace(atoms[i], StateSet::FromMask(n, (valuation_index >> (i * n)) & mask));
  return ExpertiseModel(states, partition, std::move(v));
}

ModelEnumerator::ModelEnumerator(EnumerationSpec spec)
    : spec_(std::move(spec)),
      states_(StateSpace::Numbered(std::max<std::size_t>(spec_.n_states, 1))) {
  spec_.Validate();
  partitions_ = AllPartitions(spec_.n_states);
  valuations_per_partition_ = ValuationCount(spec_.n_states, spec_.atoms.size());
}

std::optional<ExpertiseModel> ModelEnumerator::Next() {
  if (partition_index_ >= partitions_.size()) return std::nullopt;
  if (spec_.limit && visited_ >= *spec_.limit) {
    truncated_ = true;
    return std::nullopt;
  }
  ExpertiseModel m = EnumeratedModel(states_, partitions_[partition_index_], spec_.atoms,
                                     valuation_index_);
  ++visited_;
  if (++valuation_index_ == valuations_per_partition_) {
    valuation_index_ = 0;
    ++partition_index_;
  }
  return m;
}

// Verdict ------------------------------------------------------------------

Verdict::Verdict(Status status, Formula formula, EnumerationSpec bound,
                 std::optional<Countermodel> witness, std::uint64_t models_checked,
                 bool truncated, std::chrono::nanoseconds elapsed)
    : status_(status),
      formula_(std::move(formula)),
      bound_(std::move(bound)),
      witness_(std::move(witness)),
      models_checked_(models_checked),
      truncated_(truncated),
      elapsed_(elapsed) {}

Verdict Verdict::Refuted(Formula formula, EnumerationSpec bound, Countermodel witness,
                         std::uint64_t models_checked, std::chrono::nanoseconds elapsed) {
  if (Eval(witness.model, witness.state, formula))
    throw std::logic_error("countermodel does not falsify " + Render(formula));
  return Verdict(Status::kCountermodelFound, std::move(formula), std::move(bound),
                 std::move(witness), models_checked, false, elapsed);
}

Verdict Verdict::NoCountermodel(Formula formula, EnumerationSpec bound,
                                std::uint64_t models_checked, bool truncated,
                                std::chrono::nanoseconds elapsed) {
  return Verdict(Status::kValidUpToBound, std::move(formula), std::move(bound), std::nullopt,
                 models_checked, truncated, elapsed);
}

std::string_view StatusName(Verdict::Status status) {
  return status == Verdict::Status::kValidUpToBound ? "valid-up-to-bound"
                                                    : "countermodel-found";
}

std::string Verdict::Summary() const {
  std::ostringstream os;
  if (witness_) {
    os << "countermodel found: " << witness_->model.size() << " state"
       << (witness_->model.size() == 1 ? "" : "s") << ", false at "
       << witness_->model.states().name(witness_->state);
  } else if (truncated_) {
    os << "no countermodel among the first " << models_checked_
       << " models (search truncated before the bound of " << bound_.n_states
       << " states was exhausted)";
  } else {
    os << "no countermodel with ≤ " << bound_.n_states << " state"
       << (bound_.n_states == 1 ? "" : "s");
  }
  return os.str();
}

// Search -------------------------------------------------------------------

namespace {

struct WorkItem {
  std::size_t size;
  const Partition* partition;
  std::uint64_t first_ordinal;
  std::uint64_t valuations;
};

struct Hit {
  std::uint64_t valuation;
  std::size_t state;
};

}  // namespace

Verdict FindCountermodel(const Formula& f, const EnumerationSpec& spec,
                         const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!InL(f)) throw LanguageError("countermodel search is defined on L; input contains K");
  spec.Validate();
  for (const auto& a : Atoms(f))
    if (std::find(spec.atoms.begin(), spec.atoms.end(), a) == spec.atoms.end())
      throw std::invalid_argument("atom '" + a + "' of the formula is not in the search bound");

  std::vector<StateSpace> spaces;
  std::vector<std::vector<Partition>> partitions;
  std::vector<WorkItem> items;
  std::uint64_t ordinal = 0;
  for (std::size_t s = 1; s <= spec.n_states; ++s) {
    spaces.push_back(StateSpace::Numbered(s));
    partitions.push_back(AllPartitions(s));
  }
  for (std::size_t s = 1; s <= spec.n_states; ++s) {
    const std::uint64_t vals = ValuationCount(s, spec.atoms.size());
    for (const auto& p : partitions[s - 1]) {
      items.push_back({s, &p, ordinal, vals});
      ordinal += vals;
    }
  }
  const std::uint64_t total = ordinal;
  const std::uint64_t limit = spec.limit.value_or(total);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_item{items.size()};
  std::mutex mu;
  std::map<std::size_t, Hit> hits;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size() || i > best_item.load()) return;
      const WorkItem& item = items[i];
      for (std::uint64_t v = 0; v < item.valuations; ++v) {
        if (item.first_ordinal + v >= limit) return;
        ExpertiseModel m =
            EnumeratedModel(spaces[item.size - 1], *item.partition, spec.atoms, v);
        StateSet ext = ComputeExtension(m, f).states;
        if (ext.full()) continue;
        const std::size_t state = *ext.Complement().First();
        {
          std::lock_guard<std::mutex> lock(mu);
          hits.emplace(i, Hit{v, state});
        }
        std::size_t cur = best_item.load();
        while (i < cur && !best_item.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  };

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(items.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (!hits.empty()) {
    const auto& [i, hit] = *hits.begin();
    const WorkItem& item = items[i];
    Countermodel witness{
        EnumeratedModel(spaces[item.size - 1], *item.partition, spec.atoms, hit.valuation),
        hit.state};
    return Verdict::Refuted(f, spec, std::move(witness), item.first_ordinal + hit.valuation + 1,
                            elapsed);
  }
  return Verdict::NoCountermodel(f, spec, std::min(total, limit), limit < total, elapsed);
}

Verdict CheckEquivalence(const Formula& f, const Formula& g, const EnumerationSpec& spec,
                         const SearchOptions& options) {
  return FindCountermodel(Formula::Iff(f, g), spec, options);
}

EnumerationSpec DefaultBound(const Formula& f) {
  EnumerationSpec spec;
  spec.atoms = Atoms(f);
  const std::size_t k = spec.atoms.size();
  spec.n_states = k == 0 ? 4 : std::clamp<std::size_t>(12 / k, 1, 4);
  return spec;
}

nlohmann::json VerdictToJson(const Verdict& v, bool include_timing) {
  nlohmann::json j;
  j["status"] = StatusName(v.status());
  j["summary"] = v.Summary();
  j["formula"] = Render(v.formula());
  j["bound"] = {{"max_states", v.bound().n_states}, {"atoms", v.bound().atoms}};
  if (v.bound().limit) j["bound"]["limit"] = *v.bound().limit;
  if (v.witness()) {
    j["witness"] = {{"model", ModelToJson(v.witness()->model)},
                    {"state", v.witness()->model.states().name(v.witness()->state)}};
  } else {
    j["witness"] = nullptr;
  }
  j["models_checked"] = v.models_checked();
  j["total_models"] = v.bound().CumulativeModelCount();
  j["truncated"] = v.truncated();
  if (include_timing)
    j["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(v.elapsed()).count();
  return j;
}

// Corpus -------------------------------------------------------------------

const std::vector<std::string>& DefaultCorpusText() {
  static const std::vector<std::string> text = {
      "p",     "q",   "~p",  "p & q",         "p -> q",    "E p",
      "S q",   "A p", "S (p & ~q)", "E (p | q)", "S ~S p", "A (S p -> q)",
  };
  return text;
}

const std::vector<Formula>& DefaultCorpus() {
  static const std::vector<Formula> corpus = [] {
    std::vector<Formula> out;
    for (const auto& t : DefaultCorpusText()) out.push_back(Parse(t));
    return out;
  }();
  return corpus;
}

}  // namespace expertise
