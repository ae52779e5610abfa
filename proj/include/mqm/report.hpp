#pragma once

#include "mqm/defining_graph.hpp"
#include "mqm/raag_model.hpp"
#include "mqm/staircase_model.hpp"
#include "mqm/wedge_model.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mqm {

struct RunConfig {
  std::string command;
  std::string model_path;
  nlohmann::json model_doc; // resolved model document
  std::string segment;
  std::string segment2;
  std::size_t radius = 2;
  std::optional<std::size_t> window;
  std::string out;
  unsigned workers = 1;
  std::uint64_t budget = 400'000'000; // cap on enumerated tuples
  std::vector<std::string> elements;
  std::string mode;   // witness: separating | nested | distance
  std::string subset; // witness separating: F as "a,c"
  std::string gamma;  // witness nested
  int n_max = 10;
  int bound = 4;      // staircase search cap
  bool run_anyway = false;
};

/// Reads a model file; a string "graph" entry is resolved against the
/// file's directory and inlined.
nlohmann::json read_model_file(const std::filesystem::path& path);

struct LoadedModel {
  std::string kind;
  std::unique_ptr<DefiningGraph> graph;
  std::unique_ptr<RaagModel> raag;
  std::unique_ptr<StaircaseModel> stair;
  std::unique_ptr<WedgeModel> wedge;
  // declared | edgeless | scanned | none
  std::string sigma_source = "none";
  std::optional<int> sigma() const;
  int dim() const;
};

/// {"kind":"raag","graph":{...},"sigma":1} | {"kind":"staircase"} |
/// {"kind":"wedge","n":3}. For a raag without a declared sigma the value
/// found by staircase_search on the radius-2 ball is used.
LoadedModel load_model(const nlohmann::json& doc);

struct Report {
  nlohmann::json config;
  std::string config_hash;
  nlohmann::json model;
  nlohmann::json results;
  nlohmann::json verdicts = nlohmann::json::object();
  bool complete = true;
  std::string error;
  double runtime_ms = 0;

  bool verdicts_ok() const;
};

nlohmann::json config_json(const RunConfig& cfg);
/// FNV-1a over the canonical config dump, excluding output path and
/// worker count.
std::string config_hash(const RunConfig& cfg);
nlohmann::json to_json(const Report& r);

Report cmd_brooks(const RunConfig& cfg);
Report cmd_defect(const RunConfig& cfg);
Report cmd_cup(const RunConfig& cfg);
Report cmd_witness(const RunConfig& cfg);
Report cmd_staircase(const RunConfig& cfg);

/// Dispatches on cfg.command.
Report run_command(const RunConfig& cfg);

} // namespace mqm
