#include "lcdlab/bounds.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lcd {

namespace {

struct TableRow {
  int n;
  std::vector<int> d_from_k4;
};

const std::vector<TableRow>& lcd_table() {
  static const std::vector<TableRow> rows = {
    {17, {8, 7, 6, 6, 6, 5, 4, 3, 3}},
    {18, {8, 7, 7, 6, 6, 5, 4, 4, 4, 3}},
    {19, {9, 8, 8, 7, 6, 6, 5, 4, 4, 3, 3}},
    {20, {10, 9, 8, 7, 6, 6, 6, 5, 4, 4, 4, 3}},
    {21, {10, 9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 3, 3}},
    {22, {10, 10, 9, 8, 8, 7, 6, 6, 6, 5, 4, 4, 4, 3}},
    {23, {11, 10, 9, 9, 8, 7, 7, 6, 6, 5, 4, 4, 4, 3, 3}},
    {24, {12, 11, 10, 9, 8, 8, 8, 7, 6, 6, 5, 4, 4, 4, 4, 3}},
  };
  return rows;
}

bool in(int residue, std::initializer_list<int> set) {
  return std::find(set.begin(), set.end(), residue) != set.end();
}

DTableEntry exact(int n, int k, int d, std::string provenance) {
  return DTableEntry{n, k, {d}, DStatus::kExact, std::move(provenance)};
}

DTableEntry range(int n, int k, int top, int count, std::string provenance) {
  DTableEntry e{n, k, {}, DStatus::kRange, std::move(provenance)};
  for (int i = 0; i < count; ++i) e.candidates.push_back(top - i);
  return e;
}

// Lengths where a complete classification ruled out the upper candidate(s).
struct Narrowed {
  int n;
  int d;
};
constexpr std::array<Narrowed, 4> kDim4Narrowed = {{{26, 12}, {27, 13}, {30, 14}, {31, 15}}};
constexpr std::array<Narrowed, 5> kDim5Narrowed = {
    {{25, 11}, {27, 12}, {28, 13}, {29, 13}, {30, 14}}};

DTableEntry dim4(int n) {
  const int r = n % 15;
  const int f = 8 * n / 15;
  if (in(r, {5, 9, 13})) return exact(n, 4, f, "dim-4 family, n = 5,9,13 mod 15");
  if (in(r, {2, 3, 4, 6, 10})) return exact(n, 4, f - 1, "dim-4 family, n = 2,3,4,6,10 mod 15");
  for (const auto& x : kDim4Narrowed) {
    if (x.n == n) return exact(n, 4, x.d, "dim-4 family + classification nonexistence");
  }
  if (r == 0) return range(n, 4, f, 3, "dim-4 family, n = 0 mod 15");
  return range(n, 4, f, 2, "dim-4 family, n = 1,7,8,11,12,14 mod 15");
}

DTableEntry dim5(int n) {
  const int r = n % 31;
  const int f = 16 * n / 31;
  if (in(r, {3, 5, 7, 11, 19, 20, 22, 26})) {
    return exact(n, 5, f - 1, "dim-5 family, n = 3,5,7,11,19,20,22,26 mod 31");
  }
  if (r == 4) return exact(n, 5, f - 2, "dim-5 family, n = 4 mod 31");
  for (const auto& x : kDim5Narrowed) {
    if (x.n == n) return exact(n, 5, x.d, "dim-5 family + classification nonexistence");
  }
  if (in(r, {1, 9, 13, 15, 17, 21, 23, 24, 25, 27, 28, 29, 30})) {
    return range(n, 5, f, 2, "dim-5 family, two candidates");
  }
  if (in(r, {2, 6, 8, 10, 14, 18})) return range(n, 5, f - 1, 2, "dim-5 family, two candidates");
  if (r == 12) return range(n, 5, f - 2, 2, "dim-5 family, two candidates");
  return range(n, 5, f, 3, "dim-5 family, n = 0,16 mod 31");
}

}  // namespace

int griesmer_dmax(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("griesmer_dmax: need 1 <= k <= n (got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  }
  auto length_needed = [k](long long d) {
    long long sum = 0;
    for (int i = 0; i < k; ++i) sum += i < 62 ? (d + (1LL << i) - 1) >> i : 1;
    return sum;
  };
  int d = 1;
  while (d < n && length_needed(d + 1) <= n) ++d;
  return d;
}

int closed_form_bound(int n, int k) {
  if (k != 4 && k != 5) throw std::invalid_argument("closed_form_bound: k must be 4 or 5");
  if (n < k) throw std::invalid_argument("closed_form_bound: n must be at least k");
  if (k == 4) {
    const int f = 8 * n / 15;
    return in(n % 15, {0, 1, 5, 7, 8, 9, 11, 12, 13, 14}) ? f : f - 1;
  }
  const int f = 16 * n / 31;
  const int r = n % 31;
  if (in(r, {0, 1, 9, 13, 15, 16, 17, 21, 23, 24, 25, 27, 28, 29, 30})) return f;
  if (in(r, {2, 3, 5, 6, 7, 8, 10, 11, 14, 18, 19, 20, 22, 26})) return f - 1;
  return f - 2;
}

const char* to_string(DStatus status) {
  switch (status) {
    case DStatus::kExact:
      return "exact";
    case DStatus::kRange:
      return "range";
    case DStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::span<const int> lcd_d_table_row(int n) {
  for (const auto& row : lcd_table()) {
    if (row.n == n) return row.d_from_k4;
  }
  throw std::out_of_range("no d(n,k) table row for n = " + std::to_string(n));
}

DTableEntry known_lcd_d(int n, int k) {
  if (k < 1 || k > n) {
    return DTableEntry{n, k, {}, DStatus::kUnknown, "invalid parameters"};
  }
  if (k == n) return exact(n, k, 1, "full space");
  if (k == 1) return exact(n, k, n % 2 == 1 ? n : n - 1, "d(n,1)");
  if (k == n - 1) return exact(n, k, n % 2 == 1 ? 2 : 1, "d(n,n-1)");
  if (k == 2) {
    const int f = 2 * n / 3;
    return exact(n, k, in(n % 6, {1, 2, 3, 4}) ? f : f - 1, "d(n,2)");
  }
  if (k == 3) {
    const int f = 4 * n / 7;
    return exact(n, k, in(n % 7, {3, 5}) ? f : f - 1, "d(n,3)");
  }
  if (k == n - 2 && n >= 4) return exact(n, k, 2, "d(n,n-2)");
  if (k == n - 3 && n >= 8) return exact(n, k, 2, "d(n,n-3)");
  if (k == n - 4 && n >= 16) return exact(n, k, 2, "d(n,n-4)");
  if (n >= kTableMinN && n <= kTableMaxN && k >= 4 && k <= n - 5) {
    return exact(n, k, lcd_d_table_row(n)[static_cast<std::size_t>(k - 4)],
                 "table 17 <= n <= 24");
  }
  if (k == 4) return dim4(n);
  if (k == 5) return dim5(n);
  return DTableEntry{n, k, {}, DStatus::kUnknown, "no closed form or table entry"};
}

}  // namespace lcd
