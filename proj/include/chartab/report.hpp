#pragma once

// Verification suites and table emission shared by the command-line tool
// and the acceptance tests.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chartab {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& text);

/// A rectangular table of strings with optional notes.
struct TextTable {
  std::string id;
  std::string title;
  std::vector<std::string> row_names;     // may be empty
  std::vector<std::string> column_names;  // excludes the row-name column
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// CSV (RFC 4180 quoting) or aligned plain text. A leading column holds the
/// row names when present.
std::string render_csv(const TextTable& t);
std::string render_text(const TextTable& t);

struct Check {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  /// True when there is at least one check and every check passed.
  bool passed() const;
  nlohmann::json to_json() const;
  TextTable to_table() const;
};

std::vector<std::string> suite_names();

/// Runs a named suite; q selects an E6 scenario inside e6-tables. Throws
/// DomainError for an unknown suite. Checks that raise an exception are
/// recorded as failures with the message as the computed value.
SuiteReport run_suite(const std::string& name, std::optional<long> q = std::nullopt);

struct BasisTable;
/// Rows of a basis table over its class labels.
TextTable from_basis(const std::string& id, const BasisTable& b);

std::vector<std::string> emit_ids();

/// table1, table3, prop5.3, table4, d4. Throws DomainError for an unknown id.
TextTable emit_table(const std::string& id);

/// Label note attached to every output that involves the (.221) value.
extern const char* const kLabel221Note;

}  // namespace chartab
