#pragma once

// Text codecs: octal and binary generator listings, the CodeDB file format,
// and JSON reports (field names are documented in docs/report_schema.md).

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lcdlab/code.hpp"
#include "lcdlab/families.hpp"
#include "lcdlab/gf2.hpp"

namespace lcd {

// Octal listing of the k x (n-k) redundancy part of a systematic generator.
// Rows m_1..m_k are concatenated, cut into 3-bit digits (most significant bit
// first), and the k(n-k) mod 3 leftover bits are written as letters a = 0,
// b = 1 at the end. Throws std::invalid_argument on a bad symbol or a length
// that does not match (n, k).
BitMatrix decode_octal(std::string_view text, std::size_t n, std::size_t k);
std::string encode_octal(const BitMatrix& redundancy);

// Row i, character j -> bit (i, j). Throws std::invalid_argument on ragged
// rows, non-binary characters, or a row count other than k.
BitMatrix parse_binary_rows(std::span<const std::string> rows, std::size_t k);

// [I_k | redundancy].
BitMatrix systematic(const BitMatrix& redundancy);

struct CodeRecord {
  CanonicalKey key;
  BitMatrix generator;

  friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

// Classified codes with fixed (n, k, d), records strictly increasing by key.
struct CodeDb {
  int n = 0;
  int k = 0;
  int d = 0;
  std::string method;
  std::vector<CodeRecord> records;

  std::size_t count() const { return records.size(); }
  friend bool operator==(const CodeDb&, const CodeDb&) = default;
};

// Header line "n k d count method", then one line per record:
// "<key hex>: <row hex> ..." with rows packed LSB-first, byte by byte.
std::string emit_codedb(const CodeDb& db);
// Throws std::runtime_error on malformed input.
CodeDb parse_codedb(std::string_view text);

std::string row_hex(const BitMatrix& m, std::size_t row);
void parse_row_hex(std::string_view hex, BitMatrix& m, std::size_t row);

// Atomic: writes a sibling temp file and renames it over `path`.
void write_codedb(const std::filesystem::path& path, const CodeDb& db);
CodeDb read_codedb(const std::filesystem::path& path);

struct CodeClaim {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::optional<bool> is_lcd;
};

// {"params", "measured": {n, k, d, hull_dim, is_lcd, weight_enumerator},
//  "claimed", "match"}
nlohmann::json code_report(const LinearCode& code, const std::optional<CodeClaim>& claim,
                           nlohmann::json params = nlohmann::json::object());
nlohmann::json generator_json(const BitMatrix& g);
nlohmann::json family_report(int k, int s, std::int64_t t);
nlohmann::json bounds_report(int n, int k);

}  // namespace lcd
