#pragma once

// Binary linear [n,k] codes: dual, hull, weight data, shortening, and
// permutation equivalence through a canonical form on column types.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcdlab/gf2.hpp"

namespace lcd {

// Raised when an exhaustive routine is asked to go past its size cap.
class EnumerationCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Dense weight distribution: counts()[w] codewords of weight w.
class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  explicit WeightEnumerator(std::vector<std::uint64_t> counts);

  std::size_t length() const { return counts_.empty() ? 0 : counts_.size() - 1; }
  std::uint64_t count(std::size_t weight) const {
    return weight < counts_.size() ? counts_[weight] : 0;
  }
  std::uint64_t total() const;
  // Smallest nonzero weight with a positive count; 0 for the zero code.
  std::size_t min_nonzero_weight() const;
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  // "1+4y+6y^2+4y^3+y^4"
  std::string to_string() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

// Multiset of generator columns viewed as vectors of F2^k. A column with
// entry G[i][c] = 1 has bit i set in its type. counts[0] is the number of
// zero columns.
struct TypeMultiplicity {
  int k = 0;
  std::vector<std::uint32_t> counts;

  TypeMultiplicity() = default;
  explicit TypeMultiplicity(int dim);

  std::uint32_t zero_count() const { return counts[0]; }
  std::uint32_t mult(std::uint32_t type) const { return counts[type]; }
  std::size_t length() const;
  // True iff the types with positive count span F2^k.
  bool spans() const;

  friend bool operator==(const TypeMultiplicity&, const TypeMultiplicity&) = default;
};

// Weight of every message m in [0, 2^k) under the code described by `types`.
std::vector<std::uint32_t> message_weights(const TypeMultiplicity& types);
std::uint32_t min_weight(const TypeMultiplicity& types);
bool is_lcd(const TypeMultiplicity& types);

struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct HullInfo {
  std::size_t hull_dim = 0;
  bool is_lcd = false;
};

class LinearCode {
 public:
  static constexpr std::size_t kEnumerationCap = 28;

  // Row space of `generator`, stored in reduced row-echelon form. Throws
  // std::invalid_argument when the generator has no rows or is rank
  // deficient.
  explicit LinearCode(const BitMatrix& generator);

  std::size_t length() const;
  std::size_t dimension() const;
  const BitMatrix& generator() const;
  const std::vector<std::size_t>& pivots() const;

  // Exhaustive; throws EnumerationCapError when dimension() > 28.
  const WeightEnumerator& weight_enumerator() const;
  // 0 for the zero code.
  std::size_t min_weight() const;
  HullInfo hull() const;

  // Same row space.
  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  struct State;
  struct Reduced {};
  LinearCode(Reduced, RrefResult reduced);

  friend LinearCode dual(const LinearCode& code);
  friend LinearCode shorten(const LinearCode& code, std::size_t coordinate);

  std::shared_ptr<const State> state_;
};

LinearCode make_code(const BitMatrix& generator);
// For k == n the result is the zero code of length n (dimension 0).
LinearCode dual(const LinearCode& code);
HullInfo lcd_status(const LinearCode& code);
const WeightEnumerator& weight_enumerator(const LinearCode& code);
std::size_t min_weight(const LinearCode& code);
LinearCode shorten(const LinearCode& code, std::size_t coordinate);

TypeMultiplicity column_types(const BitMatrix& generator);
TypeMultiplicity column_types(const LinearCode& code);
// Zero columns first, then one block per type in increasing type order.
BitMatrix generator_from_types(const TypeMultiplicity& types);
LinearCode code_from_types(const TypeMultiplicity& types);

struct CanonicalForm {
  CanonicalKey key;
  // The orbit representative the key serializes.
  TypeMultiplicity types;
};

inline constexpr int kCanonicalMaxDim = 6;

// Orbit maximization under GL(k,2) acting on column types; two codes are
// equivalent iff their keys are equal. Throws EnumerationCapError for
// k > kCanonicalMaxDim.
CanonicalForm canonical_form(const TypeMultiplicity& types);
CanonicalKey canonical_key(const LinearCode& code);
bool equivalent(const LinearCode& a, const LinearCode& b);

}  // namespace lcd
