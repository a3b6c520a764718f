#include "quintic/report.hpp"

#include <sstream>

namespace quintic {

void Report::add_evidence(std::string claim, std::string mod, std::string rule) {
  evidence.push_back({std::move(claim), std::move(mod), std::move(rule)});
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  auto ev = nlohmann::ordered_json::array();
  for (const auto& e : evidence) {
    nlohmann::ordered_json x;
    x["claim"] = e.claim;
    x["module"] = e.module_name;
    x["rule"] = e.rule;
    ev.push_back(x);
  }
  j["evidence"] = ev;
  j["warnings"] = warnings;
  return j;
}

namespace {
void render_block(std::ostringstream& os, const nlohmann::ordered_json& j,
                  const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      os << indent << it.key() << ":\n";
      render_block(os, *it, indent + "  ");
    } else {
      os << indent << it.key() << ": " << it->dump() << "\n";
    }
  }
}
}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << command << " ==\n";
  if (!inputs.empty()) {
    os << "inputs:\n";
    render_block(os, inputs, "  ");
  }
  os << "results:\n";
  render_block(os, results, "  ");
  if (!evidence.empty()) {
    os << "evidence:\n";
    for (const auto& e : evidence)
      os << "  - " << e.claim << "  [" << e.module_name << ": " << e.rule << "]\n";
  }
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace quintic
