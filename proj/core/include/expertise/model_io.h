// JSON model files.
//
//   {"states": ["a","b","c","d"],
//    "partition": [["a","c"],["b","d"]],
//    "valuation": {"r": ["a","c"], "p": ["a","b"]}}
//
// "expertise": [[...], ...] (the raw family P) may replace "partition"; the
// loader verifies P1-P3 and converts it. Exactly one of the two must be
// present.

#ifndef EXPERTISE_MODEL_IO_H_
#define EXPERTISE_MODEL_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "expertise/model.h"

namespace expertise {

class ModelFormatError : public ModelError {
 public:
  using ModelError::ModelError;
};

ExpertiseModel ModelFromJson(const nlohmann::json& j);
ExpertiseModel ParseModel(std::string_view text);
ExpertiseModel LoadModelFile(const std::string& path);

// Always emits the partition form, blocks in canonical order.
nlohmann::json ModelToJson(const ExpertiseModel& model);
nlohmann::json RelationalModelToJson(const RelationalModel& model);

nlohmann::json StateSetToJson(const StateSpace& states, const StateSet& set);

}  // namespace expertise

#endif  // EXPERTISE_MODEL_IO_H_
