#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kk/dsl.hpp"
#include "kk/report.hpp"
#include "kk/solver.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitSolved = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

void report_diagnostic(const fs::path& path, const kk::dsl::DiagnosticError& e) {
  std::cerr << "error: " << path.string() << ": line " << e.span().line
            << ", column " << e.span().column << ": " << e.what() << "\n";
}

struct LoadedPuzzle {
  kk::puzzle::Puzzle puzzle;
  kk::puzzle::KnowledgeBase kb;
};

// Parses and compiles, reporting failures on standard error. Returns the
// exit code to use when loading fails.
std::optional<LoadedPuzzle> load_puzzle(const fs::path& path, int& exit_code) {
  std::optional<std::string> source = read_file(path);
  if (!source) {
    std::cerr << "error: " << path.string() << ": cannot read file\n";
    exit_code = kExitIo;
    return std::nullopt;
  }
  try {
    LoadedPuzzle loaded;
    loaded.puzzle = kk::dsl::parse_puzzle(*source);
    loaded.kb = kk::puzzle::compile(loaded.puzzle);
    return loaded;
  } catch (const kk::dsl::DiagnosticError& e) {
    report_diagnostic(path, e);
  } catch (const kk::puzzle::ValidationError& e) {
    std::cerr << "error: " << path.string() << ": " << e.what() << "\n";
  }
  exit_code = kExitBadInput;
  return std::nullopt;
}

int cmd_solve(const fs::path& path, const std::string& format,
              const kk::cli::ReportOptions& options) {
  int exit_code = kExitSolved;
  std::optional<LoadedPuzzle> loaded = load_puzzle(path, exit_code);
  if (!loaded) return exit_code;
  kk::solver::Verdict verdict = kk::solver::solve(loaded->kb, loaded->puzzle);
  if (format == "json") {
    std::cout << kk::cli::json_report(loaded->puzzle, verdict, loaded->kb,
                                      options);
  } else {
    std::cout << kk::cli::text_report(loaded->puzzle, verdict, loaded->kb,
                                      options);
  }
  return verdict.outcome == kk::solver::Outcome::Contradiction
             ? kExitContradiction
             : kExitSolved;
}

int cmd_check(const fs::path& path) {
  int exit_code = kExitSolved;
  if (!load_puzzle(path, exit_code)) return exit_code;
  return kExitSolved;
}

int cmd_corpus(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "error: " << dir.string() << ": not a directory\n";
    return kExitIo;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".kk") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::size_t passed = 0;
  for (const fs::path& file : files) {
    int exit_code = kExitSolved;
    std::optional<LoadedPuzzle> loaded = load_puzzle(file, exit_code);
    if (!loaded) {
      if (exit_code == kExitIo) return kExitIo;
      std::cout << "FAIL " << file.filename().string() << "\n";
      continue;
    }
    kk::solver::Verdict verdict = kk::solver::solve(loaded->kb, loaded->puzzle);
    std::string actual = kk::cli::text_report(loaded->puzzle, verdict,
                                              loaded->kb, {});
    fs::path golden = file;
    golden.replace_extension(".expected");
    bool ok = true;
    if (fs::exists(golden)) {
      std::optional<std::string> expected = read_file(golden);
      if (!expected) {
        std::cerr << "error: " << golden.string() << ": cannot read file\n";
        return kExitIo;
      }
      if (actual != *expected) {
        ok = false;
        std::cerr << "mismatch in " << file.filename().string()
                  << "\n--- expected ---\n"
                  << *expected << "--- actual ---\n"
                  << actual;
      }
    }
    if (ok) {
      ++passed;
      std::cout << "PASS " << file.filename().string() << "\n";
    } else {
      std::cout << "FAIL " << file.filename().string() << "\n";
    }
  }
  std::cout << "passed " << passed << " of " << files.size() << "\n";
  return passed == files.size() ? kExitSolved : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knights and Knaves puzzle solver"};
  app.require_subcommand(1);

  std::string solve_path;
  std::string format = "text";
  kk::cli::ReportOptions options;
  CLI::App* solve = app.add_subcommand("solve", "Solve a puzzle file");
  solve->add_option("file", solve_path, "puzzle file (.kk)")->required();
  solve->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--models", options.include_models,
                  "list every consistent role assignment");
  solve->add_flag("--show-kb", options.include_kb,
                  "include the compiled knowledge base");
  solve->add_flag("--paper-style", options.paper_style,
                  "print determinate conclusions only");

  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "Parse and validate only");
  check->add_option("file", check_path, "puzzle file (.kk)")->required();

  std::string corpus_dir;
  CLI::App* corpus = app.add_subcommand("corpus", "Run a fixture directory");
  corpus->add_option("dir", corpus_dir, "directory of .kk files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (solve->parsed()) return cmd_solve(solve_path, format, options);
  if (check->parsed()) return cmd_check(check_path);
  return cmd_corpus(corpus_dir);
}
