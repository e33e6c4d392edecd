#include "lcdlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lcdlab/bounds.hpp"

namespace lcd {

namespace {

class Climber {
 public:
  Climber(int n, int k, int d, std::uint64_t seed)
      : n_(n), k_(k), d_(d), size_(1u << k), rng_(seed), types_(k), weights_(size_, 0) {
    // Start from [I_k | random columns] so the types span from the outset.
    std::uniform_int_distribution<std::uint32_t> pick(1, size_ - 1);
    for (int i = 0; i < k; ++i) add(1u << i, +1);
    for (int c = k; c < n; ++c) add(pick(rng_), +1);
    deficit_ = deficit();
  }

  // Returns the number of moves used when an LCD code is reached.
  std::optional<std::uint64_t> run(std::uint64_t iterations) {
    std::uniform_int_distribution<std::uint32_t> pick(0, size_ - 1);
    for (std::uint64_t it = 0; it <= iterations; ++it) {
      if (deficit_ == 0 && types_.spans() && is_lcd(types_)) return it;
      if (it == iterations) break;
      std::uint32_t from = pick(rng_);
      while (types_.counts[from] == 0) from = pick(rng_);
      std::uint32_t to = pick(rng_);
      while (to == from) to = pick(rng_);
      add(from, -1);
      add(to, +1);
      const std::uint64_t next = deficit();
      // Sideways moves are accepted so that a zero-deficit but non-LCD state
      // keeps drifting.
      if (next <= deficit_) {
        deficit_ = next;
      } else {
        add(to, -1);
        add(from, +1);
      }
    }
    return std::nullopt;
  }

  const TypeMultiplicity& types() const { return types_; }

 private:
  void add(std::uint32_t t, int delta) {
    types_.counts[t] = static_cast<std::uint32_t>(static_cast<int>(types_.counts[t]) + delta);
    if (t == 0) return;
    for (std::uint32_t m = 1; m < size_; ++m) {
      if (std::popcount(m & t) & 1) {
        weights_[m] = static_cast<std::uint32_t>(static_cast<int>(weights_[m]) + delta);
      }
    }
  }

  std::uint64_t deficit() const {
    std::uint64_t total = 0;
    for (std::uint32_t m = 1; m < size_; ++m) {
      if (static_cast<int>(weights_[m]) < d_) total += static_cast<std::uint64_t>(d_) - weights_[m];
    }
    return total;
  }

  int n_;
  int k_;
  int d_;
  std::uint32_t size_;
  std::mt19937_64 rng_;
  TypeMultiplicity types_;
  std::vector<std::uint32_t> weights_;
  std::uint64_t deficit_ = 0;
};

}  // namespace

SearchResult search_lcd(int n, int k, int d, const SearchBudget& budget, int jobs) {
  if (k < 1 || k > n) throw std::invalid_argument("search_lcd: need 1 <= k <= n");
  if (k > kSearchMaxDim) {
    throw std::invalid_argument("search_lcd: k above " + std::to_string(kSearchMaxDim));
  }
  if (d < 1) throw std::invalid_argument("search_lcd: need d >= 1");
  if (d > griesmer_dmax(n, k)) {
    throw std::invalid_argument("search_lcd: d = " + std::to_string(d) +
                                " exceeds the Griesmer bound " +
                                std::to_string(griesmer_dmax(n, k)));
  }
  const std::uint32_t restarts = std::max<std::uint32_t>(1, budget.restarts);
  const std::uint64_t per_restart = budget.max_iterations / restarts;

  struct Hit {
    std::uint32_t restart;
    std::uint64_t iterations;
    TypeMultiplicity types;
  };
  std::mutex mutex;
  std::optional<Hit> best;
  std::atomic<std::uint32_t> next{0};
  std::atomic<std::uint32_t> best_index{UINT32_MAX};

  auto work = [&] {
    for (std::uint32_t r = next++; r < restarts; r = next++) {
      // Higher restarts cannot win once a lower one has succeeded.
      if (r > best_index.load()) return;
      Climber climber(n, k, d, budget.rng_seed + r);
      const auto used = climber.run(per_restart);
      if (!used) continue;
      std::lock_guard lock(mutex);
      if (!best || r < best->restart) {
        best = Hit{r, *used, climber.types()};
        best_index = r;
      }
    }
  };
  const auto workers = static_cast<std::uint32_t>(std::clamp<int>(jobs, 1, static_cast<int>(restarts)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (std::uint32_t w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  SearchResult result;
  if (!best) return result;
  LinearCode code = code_from_types(best->types);
  // Independent re-verification on the generator matrix.
  if (code.length() != static_cast<std::size_t>(n) || code.dimension() != static_cast<std::size_t>(k) ||
      code.min_weight() < static_cast<std::size_t>(d) || !lcd_status(code).is_lcd) {
    throw std::logic_error("search_lcd: candidate failed re-verification");
  }
  result.code = std::move(code);
  result.restart = best->restart;
  result.iterations = best->iterations;
  return result;
}

std::optional<LinearCode> exhaustive_lcd(int n, int k, int d, const ClassifyOptions& options) {
  for (int dp = griesmer_dmax(n, k); dp >= d; --dp) {
    for (const auto& r : classify(n, k, dp, options).records) {
      LinearCode code(r.generator);
      if (lcd_status(code).is_lcd) return code;
    }
  }
  return std::nullopt;
}

}  // namespace lcd
