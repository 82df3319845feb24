#pragma once

// JSON form of weighted interval models and reduction model files.

#include <optional>
#include <string>

#include <json.hpp>

#include "icmc/graphs.hpp"
#include "icmc/interval_model.hpp"
#include "icmc/reduction.hpp"

namespace icmc {

nlohmann::json model_to_json(const WeightedIntervalModel& m);
WeightedIntervalModel model_from_json(const nlohmann::json& doc);

nlohmann::json params_to_json(const ParameterSet& ps);
ParameterSet params_from_json(const nlohmann::json& doc);

/// A model file: {"classes": [...], "instance": {...}, "params": {...}}.
/// The last two are optional for bare interval models.
struct ModelFile {
  WeightedIntervalModel model;
  std::optional<CubicInstance> instance;
  std::optional<ParameterSet> params;
};

std::string write_model_file(const ModelFile& f);
ModelFile read_model_file(const std::string& path);
ModelFile parse_model_file(const std::string& text);

/// Reduction model from a file that carries instance and params.
ReductionModel reduction_from_file(const ModelFile& f);

}  // namespace icmc
