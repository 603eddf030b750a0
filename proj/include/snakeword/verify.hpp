#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "snakeword/word.hpp"

namespace snakeword {

/// Words longer than this are checked for the unique boundary matching only
/// through forced propagation, not against the full matching enumeration.
inline constexpr std::size_t uniqueness_max_length = 10;

struct PropertyResult {
  std::string module;
  std::string name;
  std::size_t words_checked = 0;
  bool passed = true;
  /// Smallest failing word in length-lex order, with the first message seen
  /// for it.
  std::optional<BinaryWord> counterexample;
  std::string message;
};

struct StructureCounts {
  std::size_t subwords = 0;
  std::size_t antichains = 0;
  std::size_t filters = 0;
  std::size_t matchings = 0;

  bool agree() const noexcept {
    return subwords == antichains && antichains == filters && filters == matchings;
  }
};

struct VerifyOptions {
  /// Sweep every nonempty word of length 1..max_length. Ignored when `word`
  /// is set.
  std::size_t max_length = 0;
  std::optional<BinaryWord> word;
  /// Restrict to these property names; empty runs everything.
  std::vector<std::string> only;
  std::size_t jobs = 1;
  std::size_t cap = default_oracle_cap;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  std::size_t words_checked = 0;
  /// Filled for single-word runs.
  std::optional<StructureCounts> counts;
  double seconds = 0;

  bool passed() const;
};

struct PropertyInfo {
  std::string module;
  std::string name;
};

/// Every property the harness knows, grouped by module in run order.
std::vector<PropertyInfo> property_catalog();

/// Throws CapExceeded before doing any work if a requested word is longer
/// than options.cap, and std::invalid_argument for an unknown property name.
VerifyReport run_verification(const VerifyOptions& options);

/// Counts of the four structures through the brute-force oracles.
StructureCounts count_structures(const BinaryWord& w, std::size_t cap = default_oracle_cap);

std::string report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report);

}  // namespace snakeword
