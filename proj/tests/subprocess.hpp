#pragma once

// Helpers for tests that drive the command-line binary as a subprocess.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testutil {

struct command_result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Runs a shell command, capturing stdout and stderr separately.
inline command_result run_command(const std::string& command) {
  static int counter = 0;
  ++counter;
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::string tag =
      std::to_string(::getpid()) + "_" + std::to_string(counter);
  const std::filesystem::path out_path = dir / ("cmd_out_" + tag);
  const std::filesystem::path err_path = dir / ("cmd_err_" + tag);
  const std::string full =
      command + " >" + out_path.string() + " 2>" + err_path.string();
  const int status = std::system(full.c_str());
  command_result result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

inline std::string require_env(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0')
    throw std::runtime_error(std::string("environment variable ") + name +
                             " is not set");
  return value;
}

// Fresh empty scratch directory, removed and recreated per call.
inline std::filesystem::path fresh_dir(const std::string& tag) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("varbench_test_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testutil
