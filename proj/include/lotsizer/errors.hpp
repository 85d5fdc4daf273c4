#ifndef LOTSIZER_ERRORS_HPP_
#define LOTSIZER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lotsizer {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. Carries the location that failed to parse.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, int column, const std::string& msg)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
              ": " + msg),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string file_;
  int line_;
  int column_;
};

// Semantically invalid data or request (well-formed but unusable).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A demand that no ordering period can serve. Names the offending cell.
class InfeasibleError : public DomainError {
 public:
  InfeasibleError(int part_id, int period, const std::string& msg)
      : DomainError(msg), part_id_(part_id), period_(period) {}

  int part_id() const { return part_id_; }
  int period() const { return period_; }

 private:
  int part_id_;
  int period_;
};

// Instance too large for exhaustive enumeration. Never truncates silently.
class EnumerationLimitError : public DomainError {
 public:
  explicit EnumerationLimitError(const std::string& msg) : DomainError(msg) {}
};

// Caller broke an API precondition (mismatched shapes, unknown variable, ...).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

}  // namespace lotsizer

#endif  // LOTSIZER_ERRORS_HPP_
