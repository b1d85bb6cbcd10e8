#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bgc {

/// Resolved invocation record embedded in every artifact file (as a comment
/// header in Matrix Market output, a `#` block in CSV, a field in JSON).
/// Holds only what is needed to reproduce the artifact byte-for-byte:
/// command, resolved parameters, seeds, tool version. Volatile facts such as
/// wall-clock duration go to the log, never into artifacts.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // insertion-ordered

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, long long value);
  void add(const std::string& key, unsigned long long value);
  void add(const std::string& key, double value);
  void add(const std::string& key, bool value);

  /// Single-line JSON, key order as inserted.
  std::string to_json() const;

  /// `manifest: {...}`; prefix with the host format's comment marker.
  std::string comment_line() const { return "manifest: " + to_json(); }
};

}  // namespace bgc
