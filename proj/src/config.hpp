#pragma once

#include <string>
#include <utility>
#include <vector>

#include "driver.hpp"

namespace swe {

// Accumulates settings from files and explicit overrides, remembering
// whether the mandatory `case` key has been supplied.
class ConfigBuilder {
 public:
  // Applies one key=value pair; unknown keys or malformed values fail.
  void set(const std::string& key, const std::string& value);

  // Line-oriented "key = value" file with # comments.
  void load_file(const std::string& path);

  // Validates that a case was chosen and returns the settings.
  RunConfig finish() const;

  const RunConfig& current() const { return cfg_; }

 private:
  RunConfig cfg_;
  bool case_set_ = false;
};

// Config file (empty path = none) overridden by (key, value) pairs in order.
RunConfig parse_config(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& overrides);

}  // namespace swe
