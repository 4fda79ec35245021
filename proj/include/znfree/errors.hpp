#pragma once
#include <stdexcept>
#include <string>

namespace znfree {

// A mathematically well-formed request the library refuses: invalid towers,
// inadmissible extensions, lengths that are not attained by any prefix.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string condition, const std::string& detail)
      : std::runtime_error(detail.empty() ? condition : condition + ": " + detail),
        condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

// Raised when a periodic stabilisation loop hits its cap, which only happens
// for towers violating the orientation conditions.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace znfree
