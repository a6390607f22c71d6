#ifndef KK_REPORT_HPP
#define KK_REPORT_HPP

#include <string>

#include "kk/puzzle.hpp"
#include "kk/solver.hpp"

namespace kk::cli {

struct ReportOptions {
  // Print only determinate conclusions, dropping indeterminate persons.
  bool paper_style = false;
  bool include_models = false;
  bool include_kb = false;
};

// Human-readable report: one "<P> is a <Role>" line per determinate person
// in declaration order, then an "indeterminate:" line when applicable, then
// optional model and knowledge-base sections. A contradiction prints a
// single "contradiction" line.
std::string text_report(const puzzle::Puzzle& puzzle,
                        const solver::Verdict& verdict,
                        const puzzle::KnowledgeBase& kb,
                        const ReportOptions& options);

// The same information as a JSON document with stable key order:
// puzzle_name, outcome, conclusions, model_count, then optional models and
// kb_pretty.
std::string json_report(const puzzle::Puzzle& puzzle,
                        const solver::Verdict& verdict,
                        const puzzle::KnowledgeBase& kb,
                        const ReportOptions& options);

}  // namespace kk::cli

#endif
