#include "expertise/model_io.h"

#include <cctype>
#include <fstream>
#include <sstream>

namespace expertise {

namespace {

bool IsIdentifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::islower(u) && !std::isdigit(u) && c != '_') return false;
  }
  return true;
}

std::vector<std::string> NameList(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw ModelFormatError(what + " must be an array of state names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ModelFormatError(what + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<StateSet> SetList(const nlohmann::json& j, const StateSpace& states,
                              const std::string& what) {
  if (!j.is_array()) throw ModelFormatError("\"" + what + "\" must be an array of arrays");
  std::vector<StateSet> out;
  for (const auto& e : j) out.push_back(states.SetOf(NameList(e, "\"" + what + "\" entries")));
  return out;
}

}  // namespace

ExpertiseModel ModelFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ModelFormatError("model must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "states" && key != "partition" && key != "expertise" && key != "valuation")
      throw ModelFormatError("unknown model field \"" + key + "\"");
  if (!j.contains("states")) throw ModelFormatError("model is missing \"states\"");

  try {
    StateSpace states(NameList(j.at("states"), "\"states\""));

    const bool has_partition = j.contains("partition");
    const bool has_expertise = j.contains("expertise");
    if (has_partition == has_expertise)
      throw ModelFormatError("exactly one of \"partition\" and \"expertise\" must be present");

    Partition partition = [&] {
      if (has_partition)
        return Partition(states.size(), SetList(j.at("partition"), states, "partition"));
      SetFamily family{SetList(j.at("expertise"), states, "expertise")};
      return PartitionFromExpertiseSet(family, states.size());
    }();

    Valuation valuation;
    if (j.contains("valuation")) {
      const auto& v = j.at("valuation");
      if (!v.is_object()) throw ModelFormatError("\"valuation\" must be an object");
      for (const auto& [atom, names] : v.items()) {
        if (!IsIdentifier(atom))
          throw ModelFormatError("invalid atom name \"" + atom + "\" in valuation");
        valuation.emplace(atom, states.SetOf(NameList(names, "valuation of " + atom)));
      }
    }
    return ExpertiseModel(std::move(states), std::move(partition), std::move(valuation));
  } catch (const ModelFormatError&) {
    throw;
  } catch (const ModelError& e) {
    throw ModelFormatError(e.what());
  } catch (const ExpertiseSetError& e) {
    throw ModelFormatError(std::string("\"expertise\" is ") + e.what());
  }
}

ExpertiseModel ParseModel(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelFormatError(std::string("malformed JSON: ") + e.what());
  }
  return ModelFromJson(j);
}

ExpertiseModel LoadModelFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelFormatError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseModel(buf.str());
}

nlohmann::json StateSetToJson(const StateSpace& states, const StateSet& set) {
  return states.NamesOf(set);
}

nlohmann::json ModelToJson(const ExpertiseModel& model) {
  nlohmann::json j;
  j["states"] = model.states().names();
  auto blocks = nlohmann::json::array();
  for (const auto& b : model.partition().blocks())
    blocks.push_back(StateSetToJson(model.states(), b));
  j["partition"] = std::move(blocks);
  auto val = nlohmann::json::object();
  for (const auto& [atom, set] : model.valuation())
    val[atom] = StateSetToJson(model.states(), set);
  j["valuation"] = std::move(val);
  return j;
}

nlohmann::json RelationalModelToJson(const RelationalModel& model) {
  const auto& names = model.states().names();
  nlohmann::json j;
  j["states"] = names;
  auto rel = nlohmann::json::array();
  for (auto [x, y] : model.Pairs()) rel.push_back({names[x], names[y]});
  j["relation"] = std::move(rel);
  auto val = nlohmann::json::object();
  for (const auto& [atom, set] : model.valuation())
    val[atom] = StateSetToJson(model.states(), set);
  j["valuation"] = std::move(val);
  j["is_s5"] = model.IsS5();
  return j;
}

}  // namespace expertise
