#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace quintic {

// Structured command report: deterministic serialization (stable key order),
// every numeric claim tagged exact or with a tolerance, and an evidence list
// of (claim, module, rule) triples for verdict-bearing commands.
struct Evidence {
  std::string claim;
  std::string module_name;
  std::string rule;
};

struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Evidence> evidence;
  std::vector<std::string> warnings;

  void add_evidence(std::string claim, std::string mod, std::string rule);
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace quintic
