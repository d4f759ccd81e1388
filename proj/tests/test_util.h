#ifndef EXPERTISE_TESTS_TEST_UTIL_H_
#define EXPERTISE_TESTS_TEST_UTIL_H_

#include <string>
#include <vector>

#include "expertise/model.h"
#include "expertise/model_io.h"
#include "oracles.h"

namespace testutil {

inline std::string Fixture(const std::string& name) {
  return std::string(EXPERTISE_FIXTURES_DIR) + "/" + name;
}

inline expertise::ExpertiseModel Economist() {
  return expertise::LoadModelFile(Fixture("economist.json"));
}

inline expertise::ExpertiseModel DistributionCountermodel() {
  return expertise::LoadModelFile(Fixture("distribution_countermodel.json"));
}

// Raw form for the oracles; P is rebuilt from the blocks by the oracle.
inline oracle::RawModel ToRaw(const expertise::ExpertiseModel& m) {
  oracle::RawModel raw;
  raw.n = static_cast<int>(m.size());
  std::vector<oracle::Mask> blocks;
  for (const auto& b : m.partition().blocks())
    blocks.push_back(static_cast<oracle::Mask>(b.LowWord()));
  auto family = oracle::UnionsOf(blocks);
  raw.family.assign(family.begin(), family.end());
  for (const auto& [atom, set] : m.valuation())
    raw.valuation[atom] = static_cast<oracle::Mask>(set.LowWord());
  return raw;
}

inline expertise::StateSet Set(const expertise::ExpertiseModel& m,
                               const std::vector<std::string>& names) {
  return m.states().SetOf(names);
}

}  // namespace testutil

#endif  // EXPERTISE_TESTS_TEST_UTIL_H_
