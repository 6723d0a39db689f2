#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "genviews/digest.hpp"

namespace genviews {

// Sectioned key = value file. Every key has a default; unknown sections or
// keys are rejected. '#' and ';' start comments.
class ExperimentConfig {
 public:
  ExperimentConfig();  // all defaults

  static ExperimentConfig parse(std::string_view text, const std::string& origin = "<config>");
  static ExperimentConfig load(const std::filesystem::path& path);

  void set(const std::string& section, const std::string& key, const std::string& value);
  const std::string& get(const std::string& section, const std::string& key) const;

  std::string str(const std::string& section, const std::string& key) const { return get(section, key); }
  std::int64_t integer(const std::string& section, const std::string& key) const;
  std::uint64_t unsigned_integer(const std::string& section, const std::string& key) const;
  double real(const std::string& section, const std::string& key) const;
  bool boolean(const std::string& section, const std::string& key) const;
  std::vector<double> reals(const std::string& section, const std::string& key) const;
  std::vector<std::int64_t> integers(const std::string& section, const std::string& key) const;
  std::vector<std::string> strings(const std::string& section, const std::string& key) const;

  // SHA-256 of the section's "key=value" lines in key order.
  Digest section_digest(const std::string& section) const;
  Digest digest() const;  // over every section digest
  std::string canonical() const;

  const std::map<std::string, std::map<std::string, std::string>>& sections() const { return values_; }

 private:
  std::map<std::string, std::map<std::string, std::string>> values_;
};

// The default configuration text, with comments, as written by `genviews init`.
std::string default_config_text();

}  // namespace genviews
