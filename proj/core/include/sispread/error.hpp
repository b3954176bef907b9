#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sispread {

/// Malformed or inconsistent input data (CDR files, edge lists, event logs).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
  DataError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// The ensemble-average spreading curve never reached 1/2 on its grid.
class HorizonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No white node of degree >= 2 in the largest component can start a run.
class NoInitiatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sispread
