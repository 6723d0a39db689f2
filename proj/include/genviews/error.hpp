#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace genviews {

// Base for every error raised by the library. The CLI maps these to exit
// status 1 (user error); anything else escaping is an internal error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateMask : public Error {
 public:
  using Error::Error;
};

class Divergence : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class CorruptFile : public Error {
 public:
  using Error::Error;
};

// Raised when required inputs are absent; carries the missing item names.
class MissingInputs : public Error {
 public:
  MissingInputs(const std::string& what, std::vector<std::string> missing)
      : Error(format(what, missing)), missing_(std::move(missing)) {}

  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string format(const std::string& what, const std::vector<std::string>& missing) {
    std::string out = what + " (" + std::to_string(missing.size()) + " missing):";
    for (const auto& m : missing) out += " " + m;
    return out;
  }

  std::vector<std::string> missing_;
};

class DigestMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace genviews
