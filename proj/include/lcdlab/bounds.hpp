#pragma once

// Griesmer bound, its residue-class closed forms for k = 4, 5, and the ledger
// of known largest minimum weights d(n,k) of LCD [n,k] codes.

#include <span>
#include <string>
#include <vector>

namespace lcd {

// Largest d with sum_{i<k} ceil(d / 2^i) <= n. Throws std::invalid_argument
// unless 1 <= k <= n.
int griesmer_dmax(int n, int k);

// Residue-class form of the Griesmer bound; k must be 4 or 5 and n >= k.
int closed_form_bound(int n, int k);

enum class DStatus { kExact, kRange, kUnknown };

struct DTableEntry {
  int n = 0;
  int k = 0;
  // Exact: one value. Range: all candidates, largest first. Unknown: empty.
  std::vector<int> candidates;
  DStatus status = DStatus::kUnknown;
  std::string provenance;

  int value() const { return candidates.front(); }
};

const char* to_string(DStatus status);

DTableEntry known_lcd_d(int n, int k);

// Reference table of d(n,k) for 17 <= n <= 24, 4 <= k <= n - 5.
inline constexpr int kTableMinN = 17;
inline constexpr int kTableMaxN = 24;
std::span<const int> lcd_d_table_row(int n);

}  // namespace lcd
