#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "loophopf/table.hpp"

namespace loophopf {

/// Raised when a table file is malformed or not in canonical form.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON encoding of a table.  Key order is fixed:
///   "p", "ext_degree", "modulus" (omitted when ext_degree = 1), "N",
///   "family" (only when tagged; keys "name", "n", "d", only the parameters
///   the family takes), "table".
/// "table" is an N x N array; each cell lists its nonzero coefficients as
/// [index, [c0, ..., c_{k-1}]] pairs sorted by index.  The string is compact
/// UTF-8 with no padding and no trailing newline, so export is injective on
/// canonical content and import(export(t)) == t byte-for-byte.
std::string export_table(const MultTable& t);

/// Strict inverse of export_table: parses, validates every structural
/// constraint (primality, modulus shape, index ranges, sortedness, no zero
/// coefficients), and finally re-serializes to confirm the input was
/// byte-for-byte canonical.  Any violation raises ParseError.  Whether the
/// resulting table satisfies the unit law or any Hopf axiom is the
/// verifier's business, not the parser's.
MultTable import_table(const std::string& text);

/// Exact-byte file wrappers around export_table / import_table.
void save_table(const std::filesystem::path& path, const MultTable& t);
MultTable load_table(const std::filesystem::path& path);

}  // namespace loophopf
