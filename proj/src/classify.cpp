#include "lcdlab/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "lcdlab/bounds.hpp"

namespace lcd {

namespace {

using KeyMap = std::map<CanonicalKey, TypeMultiplicity>;

void insert_canonical(KeyMap& found, const TypeMultiplicity& types) {
  CanonicalForm form = canonical_form(types);
  found.try_emplace(std::move(form.key), std::move(form.types));
}

// Runs fn(unit) for unit in [0, units) on up to `jobs` threads and merges the
// per-unit key maps. The merge is a set union, so the result does not depend
// on scheduling.
KeyMap run_units(std::size_t units, int jobs, const std::function<void(std::size_t, KeyMap&)>& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(units, static_cast<std::size_t>(jobs)));
  std::vector<KeyMap> partial(workers);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t u = next++; u < units; u = next++) fn(u, partial[w]);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = units;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  KeyMap merged = std::move(partial[0]);
  for (std::size_t w = 1; w < workers; ++w) merged.merge(partial[w]);
  return merged;
}

CodeDb to_codedb(int n, int k, int d, std::string method, const KeyMap& found) {
  CodeDb db{n, k, d, std::move(method), {}};
  db.records.reserve(found.size());
  for (const auto& [key, types] : found) {
    db.records.push_back({key, LinearCode(generator_from_types(types)).generator()});
  }
  return db;
}

// Depth-first walk over multiplicity vectors, one type at a time.
class ColumnWalker {
 public:
  ColumnWalker(int n, int k, int d) : n_(n), k_(k), d_(d), size_(1u << k), types_(k) {
    weights_.assign(size_, 0);
  }

  // Walks every completion of a prefix that fixes the counts of types
  // [0, prefix.size()).
  void walk(const std::vector<std::uint32_t>& prefix, KeyMap& out) {
    out_ = &out;
    std::fill(weights_.begin(), weights_.end(), 0);
    std::fill(types_.counts.begin(), types_.counts.end(), 0);
    int remaining = n_;
    for (std::uint32_t t = 0; t < prefix.size(); ++t) {
      add(t, static_cast<int>(prefix[t]));
      remaining -= static_cast<int>(prefix[t]);
    }
    if (remaining < 0 || !feasible(remaining)) return;
    step(static_cast<std::uint32_t>(prefix.size()), remaining);
  }

 private:
  void add(std::uint32_t t, int c) {
    types_.counts[t] = static_cast<std::uint32_t>(c);
    if (t == 0 || c == 0) return;
    for (std::uint32_t m = 1; m < size_; ++m) {
      if (std::popcount(m & t) & 1) weights_[m] += static_cast<std::uint32_t>(c);
    }
  }
  void remove(std::uint32_t t, int c) {
    types_.counts[t] = 0;
    if (t == 0 || c == 0) return;
    for (std::uint32_t m = 1; m < size_; ++m) {
      if (std::popcount(m & t) & 1) weights_[m] -= static_cast<std::uint32_t>(c);
    }
  }

  // Weights only grow, and by at most `remaining` more.
  bool feasible(int remaining) const {
    std::uint32_t low = UINT32_MAX;
    for (std::uint32_t m = 1; m < size_; ++m) {
      if (static_cast<int>(weights_[m]) + remaining < d_) return false;
      low = std::min(low, weights_[m]);
    }
    return static_cast<int>(low) <= d_;
  }

  void step(std::uint32_t t, int remaining) {
    if (t + 1 == size_) {
      add(t, remaining);
      leaf();
      remove(t, remaining);
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      add(t, c);
      if (feasible(remaining - c)) step(t + 1, remaining - c);
      remove(t, c);
    }
  }

  void leaf() {
    std::uint32_t low = UINT32_MAX;
    for (std::uint32_t m = 1; m < size_; ++m) low = std::min(low, weights_[m]);
    if (static_cast<int>(low) != d_ || !types_.spans()) return;
    insert_canonical(*out_, types_);
  }

  int n_;
  int k_;
  int d_;
  std::uint32_t size_;
  TypeMultiplicity types_;
  std::vector<std::uint32_t> weights_;
  KeyMap* out_ = nullptr;
};

void check_params(int n, int k, int d) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("need 1 <= k <= n (got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  }
  if (d < 1) throw std::invalid_argument("need d >= 1");
}

// Type lift of one seed: the seed's rows stay on bits 0..k-2, the new row is
// bit k-1 = top. A seed column of type u becomes u or u | top; the new
// coordinate has type top alone.
class TypeLifter {
 public:
  TypeLifter(const TypeMultiplicity& seed, int d, KeyMap& out)
      : seed_(seed),
        d_(d),
        half_(1u << seed.k),
        top_(1u << seed.k),
        out_(out),
        lifted_(seed.k + 1),
        pw_(half_, 1) {
    const auto w = message_weights(seed);
    seed_min_ = half_ > 1 ? *std::min_element(w.begin() + 1, w.end()) : UINT32_MAX;
    for (std::uint32_t u = 0; u < half_; ++u) {
      if (seed.counts[u] > 0) order_.push_back(u);
      lifted_.counts[u] = seed.counts[u];
    }
    lifted_.counts[top_] = 1;
    remaining_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i-- > 0;) {
      remaining_[i] = remaining_[i + 1] + seed.counts[order_[i]];
    }
  }

  void run() { step(0); }

 private:
  bool feasible(std::size_t depth) const {
    const std::uint32_t rest = remaining_[depth];
    std::uint32_t low = UINT32_MAX;
    for (std::uint32_t m = 0; m < half_; ++m) {
      if (pw_[m] + rest < static_cast<std::uint32_t>(d_)) return false;
      low = std::min(low, pw_[m]);
    }
    return low <= static_cast<std::uint32_t>(d_) || seed_min_ == static_cast<std::uint32_t>(d_);
  }

  void apply(std::uint32_t u, std::uint32_t s, std::uint32_t c, int sign) {
    for (std::uint32_t m = 0; m < half_; ++m) {
      const std::uint32_t add = (std::popcount(m & u) & 1) ? c - s : s;
      pw_[m] = sign > 0 ? pw_[m] + add : pw_[m] - add;
    }
  }

  void step(std::size_t depth) {
    if (depth == order_.size()) {
      leaf();
      return;
    }
    const std::uint32_t u = order_[depth];
    const std::uint32_t c = seed_.counts[u];
    for (std::uint32_t s = 0; s <= c; ++s) {
      apply(u, s, c, +1);
      if (feasible(depth + 1)) {
        lifted_.counts[u] = c - s;
        lifted_.counts[u | top_] += s;
        step(depth + 1);
        lifted_.counts[u | top_] -= s;
        lifted_.counts[u] = c;
      }
      apply(u, s, c, -1);
    }
  }

  void leaf() {
    const std::uint32_t low = *std::min_element(pw_.begin(), pw_.end());
    if (low < static_cast<std::uint32_t>(d_)) return;
    if (std::min(low, seed_min_) != static_cast<std::uint32_t>(d_)) return;
    insert_canonical(out_, lifted_);
  }

  const TypeMultiplicity& seed_;
  int d_;
  std::uint32_t half_;
  std::uint32_t top_;
  KeyMap& out_;
  TypeMultiplicity lifted_;
  // pw_[m] = weight of the codeword (new row) + (message m on seed rows).
  std::vector<std::uint32_t> pw_;
  std::uint32_t seed_min_ = 0;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> remaining_;
};

// Coset scan of one seed over a block of coset representatives. Seeds have
// length at most 64 so that vectors fit one word.
struct CosetScanner {
  const BitMatrix& seed;
  int d;
  std::vector<std::uint64_t> codewords;
  std::vector<std::size_t> free_positions;
  std::vector<std::uint32_t> seed_types;

  CosetScanner(const BitMatrix& g, int d_) : seed(g), d(d_) {
    const std::size_t k = g.rows();
    codewords.assign(std::size_t{1} << k, 0);
    for (std::size_t m = 1; m < codewords.size(); ++m) {
      codewords[m] = codewords[m & (m - 1)] ^ g.row(static_cast<std::size_t>(std::countr_zero(m)))[0];
    }
    std::vector<bool> pivot(g.cols(), false);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) {
        if (g.get(r, c)) {
          pivot[c] = true;
          break;
        }
      }
    }
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (!pivot[c]) free_positions.push_back(c);
    }
    seed_types.assign(g.cols(), 0);
    for (std::size_t c = 0; c < g.cols(); ++c) {
      for (std::size_t r = 0; r < k; ++r) {
        if (g.get(r, c)) seed_types[c] |= 1u << r;
      }
    }
  }

  std::uint64_t representative(std::uint64_t index) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < free_positions.size(); ++i) {
      if ((index >> i) & 1) v |= std::uint64_t{1} << free_positions[i];
    }
    return v;
  }

  void scan(std::uint64_t first, std::uint64_t last, KeyMap& out) const {
    const int k = static_cast<int>(seed.rows()) + 1;
    const std::uint32_t top = 1u << (k - 1);
    TypeMultiplicity types(k);
    for (std::uint64_t index = first; index < last; ++index) {
      const std::uint64_t v = representative(index);
      int coset_weight = 64;
      for (std::uint64_t c : codewords) coset_weight = std::min(coset_weight, std::popcount(v ^ c));
      if (coset_weight < d - 1) continue;
      std::fill(types.counts.begin(), types.counts.end(), 0);
      types.counts[top] = 1;
      for (std::size_t c = 0; c < seed.cols(); ++c) {
        ++types.counts[seed_types[c] | (((v >> c) & 1) ? top : 0u)];
      }
      if (static_cast<int>(min_weight(types)) != d) continue;
      insert_canonical(out, types);
    }
  }
};

constexpr std::uint64_t kCosetBlock = std::uint64_t{1} << 14;

}  // namespace

double composition_count(int n, int k) {
  // C(n + 2^k - 1, 2^k - 1)
  const double slots = std::ldexp(1.0, k) - 1;
  return std::exp(std::lgamma(n + slots + 1) - std::lgamma(slots + 1) - std::lgamma(n + 1.0));
}

CodeDb classify_by_columns(int n, int k, int d, int jobs, double limit) {
  check_params(n, k, d);
  if (k > kCanonicalMaxDim) {
    throw ClassificationSizeError("classify_by_columns: k = " + std::to_string(k) +
                                      " exceeds the canonical form cap",
                                  composition_count(n, k));
  }
  const double estimate = composition_count(n, k);
  if (estimate > limit) {
    throw ClassificationSizeError("classify_by_columns: about " + std::to_string(estimate) +
                                      " multiplicity vectors for n = " + std::to_string(n) +
                                      ", k = " + std::to_string(k) + " (limit " +
                                      std::to_string(limit) + ")",
                                  estimate);
  }
  if (d > griesmer_dmax(n, k)) return CodeDb{n, k, d, "columns", {}};

  // Work units fix the counts of the zero type and of type 1.
  std::vector<std::vector<std::uint32_t>> prefixes;
  for (int z = 0; z <= n; ++z) {
    if (k == 1) {
      prefixes.push_back({static_cast<std::uint32_t>(z)});
      continue;
    }
    for (int c1 = 0; z + c1 <= n; ++c1) {
      prefixes.push_back({static_cast<std::uint32_t>(z), static_cast<std::uint32_t>(c1)});
    }
  }
  const KeyMap found = run_units(prefixes.size(), jobs, [&](std::size_t u, KeyMap& out) {
    ColumnWalker(n, k, d).walk(prefixes[u], out);
  });
  return to_codedb(n, k, d, "columns", found);
}

const char* to_string(ExtendMethod method) {
  return method == ExtendMethod::kTypeLift ? "lift" : "coset";
}

CodeDb extend_by_inverse_shortening(const std::vector<CodeDb>& seeds, int n, int k, int d,
                                    ExtendMethod method, int jobs) {
  check_params(n, k, d);
  if (k < 2) throw std::invalid_argument("extend_by_inverse_shortening: need k >= 2");
  const int top_level = griesmer_dmax(n - 1, k - 1);
  std::vector<const CodeDb*> levels;
  for (int dp = d; dp <= top_level; ++dp) {
    const CodeDb* level = nullptr;
    for (const auto& s : seeds) {
      if (s.d == dp && s.n == n - 1 && s.k == k - 1) level = &s;
    }
    if (level == nullptr) {
      throw std::invalid_argument("extend_by_inverse_shortening: incomplete seeds, missing [" +
                                  std::to_string(n - 1) + "," + std::to_string(k - 1) + "," +
                                  std::to_string(dp) + "]");
    }
    levels.push_back(level);
  }
  std::vector<const CodeRecord*> records;
  for (const CodeDb* level : levels) {
    for (const auto& r : level->records) records.push_back(&r);
  }

  KeyMap found;
  if (method == ExtendMethod::kTypeLift) {
    found = run_units(records.size(), jobs, [&](std::size_t u, KeyMap& out) {
      const TypeMultiplicity seed = column_types(records[u]->generator);
      TypeLifter(seed, d, out).run();
    });
  } else {
    if (n - 1 > 64) throw std::invalid_argument("coset scan supports seed length <= 64");
    std::vector<CosetScanner> scanners;
    std::vector<std::pair<std::size_t, std::uint64_t>> units;
    scanners.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      scanners.emplace_back(records[i]->generator, d);
      const std::uint64_t total = std::uint64_t{1} << scanners.back().free_positions.size();
      for (std::uint64_t first = 0; first < total; first += kCosetBlock) units.emplace_back(i, first);
    }
    found = run_units(units.size(), jobs, [&](std::size_t u, KeyMap& out) {
      const auto& sc = scanners[units[u].first];
      const std::uint64_t total = std::uint64_t{1} << sc.free_positions.size();
      const std::uint64_t first = units[u].second;
      sc.scan(first, std::min(total, first + kCosetBlock), out);
    });
  }
  return to_codedb(n, k, d, to_string(method), found);
}

std::filesystem::path codedb_path(const std::filesystem::path& dir, int n, int k, int d) {
  return dir / ("n" + std::to_string(n) + "_k" + std::to_string(k) + "_d" + std::to_string(d) +
                ".lcddb");
}

CodeDb classify(int n, int k, int d, const ClassifyOptions& options) {
  check_params(n, k, d);
  if (d > griesmer_dmax(n, k)) return CodeDb{n, k, d, "griesmer", {}};

  const bool persist = !options.db_dir.empty();
  const auto path = persist ? codedb_path(options.db_dir, n, k, d) : std::filesystem::path();
  if (persist && std::filesystem::exists(path)) {
    CodeDb db = read_codedb(path);
    if (db.n != n || db.k != k || db.d != d) {
      throw std::runtime_error(path.string() + " holds a different level");
    }
    if (options.on_level) options.on_level(db, true);
    return db;
  }

  CodeDb db;
  if (k <= std::max(1, options.columns_max_k)) {
    db = classify_by_columns(n, k, d, options.jobs);
  } else {
    std::vector<CodeDb> seeds;
    for (int dp = d; dp <= griesmer_dmax(n - 1, k - 1); ++dp) {
      seeds.push_back(classify(n - 1, k - 1, dp, options));
    }
    db = extend_by_inverse_shortening(seeds, n, k, d, options.method, options.jobs);
  }
  if (persist) write_codedb(path, db);
  if (options.on_level) options.on_level(db, false);
  return db;
}

int d_all(int n, int k, const ClassifyOptions& options) {
  for (int d = griesmer_dmax(n, k); d >= 1; --d) {
    if (classify(n, k, d, options).count() > 0) return d;
  }
  return 0;
}

Census lcd_census(const CodeDb& db) {
  Census c;
  c.total = db.count();
  for (const auto& r : db.records) {
    if (LinearCode(r.generator).hull().is_lcd) {
      ++c.lcd;
      c.lcd_keys.push_back(r.key);
    }
  }
  return c;
}

std::string check_codedb(const CodeDb& db) {
  for (std::size_t i = 0; i < db.records.size(); ++i) {
    const auto& r = db.records[i];
    const std::string where = "record " + std::to_string(i) + ": ";
    if (i > 0 && !(db.records[i - 1].key < r.key)) return where + "keys not strictly increasing";
    if (r.generator.rows() != static_cast<std::size_t>(db.k) ||
        r.generator.cols() != static_cast<std::size_t>(db.n)) {
      return where + "generator has the wrong shape";
    }
    if (rank(r.generator) != r.generator.rows()) return where + "generator is rank deficient";
    const LinearCode code(r.generator);
    if (code.min_weight() != static_cast<std::size_t>(db.d)) return where + "wrong minimum weight";
    if (canonical_key(code) != r.key) return where + "key does not match the generator";
  }
  return {};
}

}  // namespace lcd
