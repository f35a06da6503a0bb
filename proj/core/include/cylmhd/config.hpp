#pragma once

#include "cylmhd/solver.hpp"

namespace cylmhd {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sectioned key-value configuration, also loadable from a JSON object of
// objects.  Unknown keys are rejected at conversion time.
struct ConfigDoc {
  std::map<std::string, std::map<std::string, std::string>> sections;

  bool has(const std::string& sec, const std::string& key) const;
  std::string get(const std::string& sec, const std::string& key,
                  const std::string& fallback) const;
  double get_num(const std::string& sec, const std::string& key,
                 double fallback) const;
};

// Parses INI-style text (`[section]` headers, `key = value`, `#` comments)
// or JSON when the document starts with '{'.
ConfigDoc parse_config(const std::string& text);
ConfigDoc load_config_file(const std::string& path);

RunConfig run_config_from(const ConfigDoc& doc);

}  // namespace cylmhd
