#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mak {

// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An Instance (or generator input) violates a structural invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out.empty() ? std::string("invalid instance") : out;
  }

  std::vector<std::string> violations_;
};

// A resource cap in SolveOptions / RecognitionOptions would be exceeded.
class GuardrailError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its contract (bad index, profile not in
// the required domain, wrong objective for a method, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mak
