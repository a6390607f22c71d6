#ifndef KK_TESTS_PROC_HPP
#define KK_TESTS_PROC_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

// Minimal subprocess helper for exercising the CLI binary.
namespace kktest {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

inline RunResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + command);
  }
  RunResult result;
  char buffer[4096];
  while (fgets(buffer, sizeof(buffer), pipe) != nullptr) {
    result.output += buffer;
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

inline std::string quoted(const std::string& path) {
  return "'" + path + "'";
}

// Captures standard output; standard error is discarded.
inline RunResult run_stdout(const std::string& args) {
  return run_command(std::string(KKSOLVE_BIN) + " " + args + " 2>/dev/null");
}

// Captures standard error only.
inline RunResult run_stderr(const std::string& args) {
  return run_command(std::string(KKSOLVE_BIN) + " " + args +
                     " 2>&1 1>/dev/null");
}

}  // namespace kktest

#endif
