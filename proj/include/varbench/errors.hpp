#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace varbench {

// Error taxonomy for unit outcomes. A unit that fails in a comparable,
// deterministic way throws harness_error with one of these class names;
// the gate compares error outcomes by (error_class, message).
namespace errclass {
inline constexpr const char* index_error = "IndexError-equivalent";
inline constexpr const char* value_error = "ValueError-equivalent";
inline constexpr const char* type_error = "TypeError-equivalent";
// Unexpected std::exception escaping a unit, mapped by run_once.
inline constexpr const char* host_error = "host-error";
}  // namespace errclass

class harness_error : public std::runtime_error {
 public:
  harness_error(std::string error_class, const std::string& message)
      : std::runtime_error(message), class_(std::move(error_class)) {}

  const std::string& error_class() const noexcept { return class_; }

 private:
  std::string class_;
};

// Violated precondition in the harness itself (bad payload schema, invalid
// timing spec, malformed record). Not a unit outcome; callers do not gate
// on it.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& message)
      : std::logic_error(message) {}
};

// Malformed persisted artifact (JSONL line, PPM header, fixture file).
// Carries enough position information to locate the defect.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& message)
      : std::runtime_error(message) {}
};

// Bad command-line invocation; the CLI maps this to exit code 2.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace varbench
