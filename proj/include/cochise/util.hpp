#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cochise {

// --- time ---

// Epoch milliseconds -> "YYYY-MM-DDTHH:MM:SS.mmmZ" (UTC).
std::string format_iso8601_ms(std::int64_t epoch_ms);

// Parses the format above (the 'Z' suffix is required).
std::optional<std::int64_t> parse_iso8601_ms(std::string_view text);

// --- hashing ---

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

// --- strings ---

// Replaces invalid UTF-8 byte sequences with U+FFFD so arbitrary command
// output stays representable as a JSON string.
std::string sanitize_utf8(std::string_view data);

std::string trim(std::string_view s);

// trim + collapse every internal whitespace run to a single space.
std::string normalize_whitespace(std::string_view s);

std::string to_lower(std::string_view s);

std::vector<std::string> split_lines(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

bool iequals(std::string_view a, std::string_view b);

// --- ids ---

// UUIDv4-format string. With a seed the output is deterministic.
std::string generate_uuid(std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace cochise
