#include "lcdlab/code.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

namespace lcd {

// ---------------------------------------------------------------------------
// WeightEnumerator

WeightEnumerator::WeightEnumerator(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)) {}

std::uint64_t WeightEnumerator::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::size_t WeightEnumerator::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts_.size(); ++w) {
    if (counts_[w] != 0) return w;
  }
  return 0;
}

std::string WeightEnumerator::to_string() const {
  std::string s;
  for (std::size_t w = 0; w < counts_.size(); ++w) {
    const std::uint64_t c = counts_[w];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (w == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += 'y';
    if (w != 1) s += '^' + std::to_string(w);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// TypeMultiplicity

TypeMultiplicity::TypeMultiplicity(int dim) : k(dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("TypeMultiplicity: k out of range");
  counts.assign(std::size_t{1} << dim, 0);
}

std::size_t TypeMultiplicity::length() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

bool TypeMultiplicity::spans() const {
  // Insert each present type into an XOR basis keyed by its leading bit.
  std::vector<std::uint32_t> basis(static_cast<std::size_t>(k), 0);
  int rank = 0;
  for (std::uint32_t t = 1; t < counts.size() && rank < k; ++t) {
    if (counts[t] == 0) continue;
    std::uint32_t v = t;
    while (v != 0) {
      const int top = std::bit_width(v) - 1;
      if (basis[top] == 0) {
        basis[top] = v;
        ++rank;
        break;
      }
      v ^= basis[top];
    }
  }
  return rank == k;
}

std::vector<std::uint32_t> message_weights(const TypeMultiplicity& types) {
  const std::uint32_t size = 1u << types.k;
  std::vector<std::uint32_t> w(size, 0);
  for (std::uint32_t t = 1; t < size; ++t) {
    const std::uint32_t c = types.counts[t];
    if (c == 0) continue;
    for (std::uint32_t m = 1; m < size; ++m) {
      if (std::popcount(m & t) & 1u) w[m] += c;
    }
  }
  return w;
}

std::uint32_t min_weight(const TypeMultiplicity& types) {
  const auto w = message_weights(types);
  if (w.size() < 2) return 0;
  return *std::min_element(w.begin() + 1, w.end());
}

bool is_lcd(const TypeMultiplicity& types) {
  // G G^T = sum over columns of t t^T; only the parity of each count matters.
  const int k = types.k;
  std::vector<std::uint32_t> gram(static_cast<std::size_t>(k), 0);
  for (std::uint32_t t = 1; t < types.counts.size(); ++t) {
    if ((types.counts[t] & 1u) == 0) continue;
    for (int i = 0; i < k; ++i) {
      if ((t >> i) & 1u) gram[i] ^= t;
    }
  }
  int rank = 0;
  for (int bit = 0; bit < k; ++bit) {
    int pivot = rank;
    while (pivot < k && !((gram[pivot] >> bit) & 1u)) ++pivot;
    if (pivot == k) continue;
    std::swap(gram[pivot], gram[rank]);
    for (int r = 0; r < k; ++r) {
      if (r != rank && ((gram[r] >> bit) & 1u)) gram[r] ^= gram[rank];
    }
    ++rank;
  }
  return rank == k;
}

// ---------------------------------------------------------------------------
// CanonicalKey

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length key hex");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
  };
  CanonicalKey key;
  key.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    key.bytes.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  }
  return key;
}

// ---------------------------------------------------------------------------
// LinearCode

struct LinearCode::State {
  BitMatrix generator;
  std::vector<std::size_t> pivots;

  mutable std::once_flag weights_once;
  mutable WeightEnumerator weights;
  mutable std::once_flag hull_once;
  mutable HullInfo hull;
};

namespace {

WeightEnumerator enumerate_weights(const BitMatrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k > LinearCode::kEnumerationCap) {
    throw EnumerationCapError("weight enumeration cap: dimension " + std::to_string(k) +
                              " exceeds " + std::to_string(LinearCode::kEnumerationCap));
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::size_t wpr = g.words_per_row();
  if (wpr == 1) {
    std::vector<std::uint64_t> rows(k);
    for (std::size_t r = 0; r < k; ++r) rows[r] = g.row(r)[0];
    std::uint64_t word = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      word ^= rows[std::countr_zero(i)];
      ++counts[std::popcount(word)];
    }
  } else {
    std::vector<BitMatrix::Word> word(wpr, 0);
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto src = g.row(std::countr_zero(i));
      std::size_t w = 0;
      for (std::size_t j = 0; j < wpr; ++j) {
        word[j] ^= src[j];
        w += std::popcount(word[j]);
      }
      ++counts[w];
    }
  }
  return WeightEnumerator(std::move(counts));
}

}  // namespace

LinearCode::LinearCode(const BitMatrix& generator) {
  if (generator.rows() == 0) throw std::invalid_argument("make_code: generator has no rows");
  RrefResult red = rref(generator);
  if (red.rank != generator.rows()) {
    throw std::invalid_argument("make_code: generator is rank deficient (rank " +
                                std::to_string(red.rank) + " < " +
                                std::to_string(generator.rows()) + " rows)");
  }
  *this = LinearCode(Reduced{}, std::move(red));
}

LinearCode::LinearCode(Reduced, RrefResult reduced) {
  auto state = std::make_shared<State>();
  BitMatrix& m = reduced.reduced;
  if (m.rows() == reduced.rank) {
    state->generator = std::move(m);
  } else {
    state->generator = BitMatrix(reduced.rank, m.cols());
    for (std::size_t r = 0; r < reduced.rank; ++r) {
      std::copy(m.row(r).begin(), m.row(r).end(), state->generator.row(r).begin());
    }
  }
  state->pivots = std::move(reduced.pivots);
  state_ = std::move(state);
}

std::size_t LinearCode::length() const { return state_->generator.cols(); }
std::size_t LinearCode::dimension() const { return state_->generator.rows(); }
const BitMatrix& LinearCode::generator() const { return state_->generator; }
const std::vector<std::size_t>& LinearCode::pivots() const { return state_->pivots; }

const WeightEnumerator& LinearCode::weight_enumerator() const {
  std::call_once(state_->weights_once,
                 [this] { state_->weights = enumerate_weights(state_->generator); });
  return state_->weights;
}

std::size_t LinearCode::min_weight() const {
  return weight_enumerator().min_nonzero_weight();
}

HullInfo LinearCode::hull() const {
  std::call_once(state_->hull_once, [this] {
    const std::size_t k = dimension();
    const std::size_t r = rank(gram_f2(state_->generator));
    state_->hull = HullInfo{k - r, r == k};
  });
  return state_->hull;
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.generator() == b.generator();
}

LinearCode make_code(const BitMatrix& generator) { return LinearCode(generator); }

LinearCode dual(const LinearCode& code) {
  const BitMatrix& g = code.generator();
  const std::size_t n = g.cols();
  const auto& pivots = code.pivots();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  // For the free column j: e_j plus, at each pivot p_i, the entry G[i][j].
  BitMatrix h(n - pivots.size(), n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    h.set(r, j, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (g.get(i, j)) h.set(r, pivots[i], true);
    }
    ++r;
  }
  return LinearCode(LinearCode::Reduced{}, rref(h));
}

HullInfo lcd_status(const LinearCode& code) { return code.hull(); }

const WeightEnumerator& weight_enumerator(const LinearCode& code) {
  return code.weight_enumerator();
}

std::size_t min_weight(const LinearCode& code) { return code.min_weight(); }

LinearCode shorten(const LinearCode& code, std::size_t coordinate) {
  const BitMatrix& g = code.generator();
  if (coordinate >= g.cols()) throw std::out_of_range("shorten: coordinate out of range");
  BitMatrix work = g;
  std::size_t pivot_row = work.rows();
  for (std::size_t r = 0; r < work.rows(); ++r) {
    if (work.get(r, coordinate)) {
      pivot_row = r;
      break;
    }
  }
  if (pivot_row != work.rows()) {
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r != pivot_row && work.get(r, coordinate)) work.xor_row_into(r, pivot_row);
    }
    work = work.without_row(pivot_row);
  }
  return LinearCode(LinearCode::Reduced{}, rref(work.without_column(coordinate)));
}

// ---------------------------------------------------------------------------
// Column types

TypeMultiplicity column_types(const BitMatrix& generator) {
  TypeMultiplicity t(static_cast<int>(generator.rows()));
  for (std::size_t c = 0; c < generator.cols(); ++c) {
    std::uint32_t type = 0;
    for (std::size_t r = 0; r < generator.rows(); ++r) {
      if (generator.get(r, c)) type |= 1u << r;
    }
    ++t.counts[type];
  }
  return t;
}

TypeMultiplicity column_types(const LinearCode& code) {
  return column_types(code.generator());
}

BitMatrix generator_from_types(const TypeMultiplicity& types) {
  BitMatrix g(static_cast<std::size_t>(types.k), types.length());
  std::size_t col = 0;
  for (std::uint32_t t = 0; t < types.counts.size(); ++t) {
    for (std::uint32_t i = 0; i < types.counts[t]; ++i, ++col) {
      for (int r = 0; r < types.k; ++r) {
        if ((t >> r) & 1u) g.set(static_cast<std::size_t>(r), col, true);
      }
    }
  }
  return g;
}

LinearCode code_from_types(const TypeMultiplicity& types) {
  return LinearCode(generator_from_types(types));
}

// ---------------------------------------------------------------------------
// Canonical form
//
// An invertible B acts by counts'[w] = counts[B w]. B is built one basis
// image at a time; the entries counts'[w] for w in [2^j, 2^(j+1)) depend only
// on the first j+1 images, so the sequence counts'[1..2^k) can be compared
// block by block and branches that fall behind the best prefix are cut.

namespace {

class OrbitMaximizer {
 public:
  explicit OrbitMaximizer(const TypeMultiplicity& types)
      : k_(types.k),
        size_(1u << types.k),
        counts_(types.counts),
        best_(size_, 0),
        span_(size_, 0),
        in_span_(size_, 0),
        block_(size_, 0) {
    in_span_[0] = 1;
  }

  std::vector<std::uint32_t> run() {
    if (k_ > 0) descend(0);
    best_[0] = counts_[0];
    return best_;
  }

 private:
  void descend(int level) {
    const std::uint32_t half = 1u << level;
    for (std::uint32_t b = 1; b < size_; ++b) {
      if (in_span_[b]) continue;
      for (std::uint32_t x = 0; x < half; ++x) block_[half + x] = counts_[b ^ span_[x]];
      if (level < best_levels_) {
        const auto cmp = std::lexicographical_compare_three_way(
            block_.begin() + half, block_.begin() + 2 * half, best_.begin() + half,
            best_.begin() + 2 * half);
        if (cmp < 0) continue;
        if (cmp > 0) {
          std::copy(block_.begin() + half, block_.begin() + 2 * half, best_.begin() + half);
          best_levels_ = level + 1;
        }
      } else {
        std::copy(block_.begin() + half, block_.begin() + 2 * half, best_.begin() + half);
        best_levels_ = level + 1;
      }
      if (level + 1 == k_) continue;
      for (std::uint32_t x = 0; x < half; ++x) {
        span_[half + x] = b ^ span_[x];
        in_span_[span_[half + x]] = 1;
      }
      descend(level + 1);
      for (std::uint32_t x = 0; x < half; ++x) in_span_[span_[half + x]] = 0;
    }
  }

  int k_;
  std::uint32_t size_;
  const std::vector<std::uint32_t>& counts_;
  std::vector<std::uint32_t> best_;
  int best_levels_ = 0;
  std::vector<std::uint32_t> span_;
  std::vector<std::uint8_t> in_span_;
  std::vector<std::uint32_t> block_;
};

void put_u16(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

}  // namespace

CanonicalForm canonical_form(const TypeMultiplicity& types) {
  if (types.k > kCanonicalMaxDim) {
    throw EnumerationCapError("canonical form cap: dimension " + std::to_string(types.k) +
                              " exceeds " + std::to_string(kCanonicalMaxDim));
  }
  for (std::uint32_t c : types.counts) {
    if (c > 0xffff) throw std::invalid_argument("canonical form: multiplicity exceeds 65535");
  }
  CanonicalForm form;
  form.types.k = types.k;
  form.types.counts = OrbitMaximizer(types).run();
  form.key.bytes.reserve(1 + 2 * form.types.counts.size());
  form.key.bytes.push_back(static_cast<char>(types.k));
  for (std::uint32_t c : form.types.counts) put_u16(form.key.bytes, c);
  return form;
}

CanonicalKey canonical_key(const LinearCode& code) {
  return canonical_form(column_types(code)).key;
}

bool equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  if (a.dimension() <= LinearCode::kEnumerationCap &&
      a.weight_enumerator() != b.weight_enumerator()) {
    return false;
  }
  return canonical_key(a) == canonical_key(b);
}

}  // namespace lcd
