#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "snakeword/word.hpp"

namespace snakeword {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Largest sweep `verify --max-length` accepts without --allow-long.
inline constexpr std::size_t verify_length_guard = 12;

/// Runs the command line `args` (program name excluded). Documents go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an antichain operand: "1,3,7,9", optionally braced; "", "{}" and
/// "∅" denote the empty antichain. Throws Error(MalformedPath) on bad input.
std::vector<std::size_t> parse_index_list(const std::string& text);

/// Like parse_word, but also accepts "e" and "ε" for the empty word.
BinaryWord parse_subword_operand(const std::string& text);

}  // namespace snakeword
