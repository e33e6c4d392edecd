#pragma once

// Isomorph-free classification of unrestricted binary [n,k,d] codes (zero
// columns allowed) up to coordinate permutation.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdlab/code.hpp"
#include "lcdlab/paperio.hpp"

namespace lcd {

class ClassificationSizeError : public std::length_error {
 public:
  ClassificationSizeError(const std::string& what, double estimate)
      : std::length_error(what), estimate_(estimate) {}
  // Number of multiplicity vectors the request would have to walk.
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// Number of ways to spread n columns over the 2^k column types.
double composition_count(int n, int k);

inline constexpr double kDefaultCompositionLimit = 5e10;

// Walks every multiplicity vector of total n over F2^k (zero type included)
// with pruning on partial weights. Throws ClassificationSizeError when the
// unpruned walk exceeds `limit`.
CodeDb classify_by_columns(int n, int k, int d, int jobs = 1,
                           double limit = kDefaultCompositionLimit);

enum class ExtendMethod {
  // Split each seed column class into columns with and without the new row.
  kTypeLift,
  // Adjoin (1 | v) for every coset representative v of the seed with coset
  // weight >= d - 1.
  kCosetScan,
};

const char* to_string(ExtendMethod method);

// All [n,k,d] codes from complete seed levels [n-1,k-1,d'] for every
// d <= d' <= griesmer_dmax(n-1,k-1). Throws std::invalid_argument when a
// level is missing or has the wrong (n, k).
CodeDb extend_by_inverse_shortening(const std::vector<CodeDb>& seeds, int n, int k, int d,
                                    ExtendMethod method = ExtendMethod::kTypeLift,
                                    int jobs = 1);

struct ClassifyOptions {
  int jobs = 1;
  // Empty: no persistence.
  std::filesystem::path db_dir;
  ExtendMethod method = ExtendMethod::kTypeLift;
  // Dimensions up to this use classify_by_columns directly.
  int columns_max_k = 2;
  // Called once per level as it is loaded or computed.
  std::function<void(const CodeDb&, bool from_disk)> on_level;
};

std::filesystem::path codedb_path(const std::filesystem::path& dir, int n, int k, int d);

// Recursive classification through inverse shortening, bottoming out at
// classify_by_columns. Levels found in db_dir are reused; computed levels are
// written there.
CodeDb classify(int n, int k, int d, const ClassifyOptions& options = {});

// Largest d with at least one [n,k,d] code; classifies levels downward from
// the Griesmer bound.
int d_all(int n, int k, const ClassifyOptions& options = {});

struct Census {
  std::size_t total = 0;
  std::size_t lcd = 0;
  std::vector<CanonicalKey> lcd_keys;
};

Census lcd_census(const CodeDb& db);

// Every record has the header's parameters, keys are strictly increasing and
// match the generators. Returns an empty string when consistent.
std::string check_codedb(const CodeDb& db);

}  // namespace lcd
