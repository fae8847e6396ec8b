#ifndef COXAN_ERRORS_HPP
#define COXAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxan {

// Input file is malformed. line == 0 means "no line information".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : std::move(msg)),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Enumeration hit the element cap with work left; the group is infinite or
// the cap is too small.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Root-system closure exceeded its safety bound; the input was not finite type.
class NotFiniteType : public std::runtime_error {
 public:
  explicit NotFiniteType(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// A retraction was requested for vertices that do not satisfy its hypothesis.
class HypothesisViolated : public std::runtime_error {
 public:
  explicit HypothesisViolated(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Exact integer arithmetic left the machine word. Raised instead of wrapping;
// results are never silently rounded or truncated.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

}  // namespace coxan

#endif
