#pragma once

// Heuristic discovery of LCD [n,k,>=d] codes by hill climbing over column
// type multiplicities, plus an exhaustive check through classification.

#include <cstdint>
#include <optional>

#include "lcdlab/classify.hpp"
#include "lcdlab/code.hpp"

namespace lcd {

struct SearchBudget {
  // Total over all restarts.
  std::uint64_t max_iterations = 1'000'000;
  std::uint64_t rng_seed = 1;
  std::uint32_t restarts = 8;
};

struct SearchResult {
  std::optional<LinearCode> code;
  // Restart that produced the code, and moves it took.
  std::uint32_t restart = 0;
  std::uint64_t iterations = 0;
};

inline constexpr int kSearchMaxDim = 12;

// Returns a verified LCD [n,k,>=d] code or nothing; nothing proves nothing.
// Throws std::invalid_argument if d exceeds the Griesmer bound or k is out
// of range. Identical arguments give identical results for any `jobs`.
SearchResult search_lcd(int n, int k, int d, const SearchBudget& budget, int jobs = 1);

// Walks the classified [n,k,d'] levels for d' >= d; an empty result means no
// LCD [n,k,>=d] code exists.
std::optional<LinearCode> exhaustive_lcd(int n, int k, int d, const ClassifyOptions& options = {});

}  // namespace lcd
