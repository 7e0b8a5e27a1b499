#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tcm/algebra.hpp"
#include "tcm/mealy.hpp"

namespace tcm {

/**
 * Machine file format:
 *
 *   {"delta": [[{"next": k, "out": j}, ...], ...], "letters": [...], "states": [...]}
 *
 * Rows of delta are indexed by state, columns by letter. Keys are emitted
 * sorted, so parse followed by serialize reproduces the bytes.
 */
nlohmann::json machine_to_json(const MealyMachine &m);
MealyMachine machine_from_json(const nlohmann::json &j);

std::string serialize_machine(const MealyMachine &m);
/// Throws FormatError on malformed input.
MealyMachine parse_machine(std::string_view text);

/// Monoid table as a JSON array of arrays; the identity is located by search.
FiniteMonoid parse_monoid_table(std::string_view text);
std::string serialize_monoid_table(const FiniteMonoid &m);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

/// FNV-1a of the serialized machine, as 16 hex digits.
std::string machine_fingerprint(const MealyMachine &m);

} // namespace tcm
