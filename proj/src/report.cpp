#include "kk/report.hpp"

#include <json.hpp>

namespace kk::cli {

namespace {

// Knights and knaves take an article, normals do not.
std::string role_phrase(puzzle::Role role) {
  if (role == puzzle::Role::Normal) return "Normal";
  return std::string("a ") + puzzle::role_name(role);
}

std::string assignment_line(const solver::RoleAssignment& assignment) {
  std::string line = "model:";
  bool first = true;
  for (const auto& [person, role] : assignment) {
    line += first ? " " : ", ";
    first = false;
    line += person.name();
    line += '=';
    line += puzzle::role_name(role);
  }
  return line;
}

}  // namespace

std::string text_report(const puzzle::Puzzle& puzzle,
                        const solver::Verdict& verdict,
                        const puzzle::KnowledgeBase& kb,
                        const ReportOptions& options) {
  std::string out;
  if (verdict.outcome == solver::Outcome::Contradiction) {
    out += "contradiction\n";
  } else {
    std::vector<std::string> indeterminate;
    for (const auto& conclusion : verdict.conclusions) {
      if (conclusion.role) {
        out += conclusion.person.name();
        out += " is ";
        out += role_phrase(*conclusion.role);
        out += '\n';
      } else {
        indeterminate.push_back(conclusion.person.name());
      }
    }
    if (!indeterminate.empty() && !options.paper_style) {
      out += "indeterminate: ";
      for (std::size_t i = 0; i < indeterminate.size(); ++i) {
        if (i > 0) out += ", ";
        out += indeterminate[i];
      }
      out += '\n';
    }
  }
  if (options.include_models) {
    for (const auto& model : verdict.models) {
      out += assignment_line(model);
      out += '\n';
    }
  }
  if (options.include_kb) {
    out += "kb: ";
    out += logic::pretty_print(*kb.formula);
    out += '\n';
  }
  (void)puzzle;
  return out;
}

std::string json_report(const puzzle::Puzzle& puzzle,
                        const solver::Verdict& verdict,
                        const puzzle::KnowledgeBase& kb,
                        const ReportOptions& options) {
  nlohmann::ordered_json doc;
  doc["puzzle_name"] = puzzle.name;
  doc["outcome"] = verdict.outcome == solver::Outcome::Contradiction
                       ? "contradiction"
                       : "solved";
  nlohmann::ordered_json conclusions = nlohmann::ordered_json::array();
  for (const auto& conclusion : verdict.conclusions) {
    if (!conclusion.role && options.paper_style) continue;
    nlohmann::ordered_json entry;
    entry["person"] = conclusion.person.name();
    entry["status"] = conclusion.role ? "determinate" : "indeterminate";
    if (conclusion.role) {
      entry["role"] = puzzle::role_name(*conclusion.role);
    }
    conclusions.push_back(std::move(entry));
  }
  doc["conclusions"] = std::move(conclusions);
  doc["model_count"] = verdict.model_count;
  if (options.include_models) {
    nlohmann::ordered_json models = nlohmann::ordered_json::array();
    for (const auto& model : verdict.models) {
      nlohmann::ordered_json entry;
      for (const auto& [person, role] : model) {
        entry[person.name()] = puzzle::role_name(role);
      }
      models.push_back(std::move(entry));
    }
    doc["models"] = std::move(models);
  }
  if (options.include_kb) {
    doc["kb_pretty"] = logic::pretty_print(*kb.formula);
  }
  return doc.dump(2) + "\n";
}

}  // namespace kk::cli
