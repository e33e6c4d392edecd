#pragma once

// Re-derives the published tables and reports one pass/fail line per item.

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lcd {

struct ReproduceCheck {
  std::string table;
  std::string item;
  bool pass = false;
  std::string detail;
};

struct ReproduceOptions {
  int jobs = 1;
  // Empty: classification levels are recomputed and not stored.
  std::filesystem::path db_dir;
  std::uint64_t seed = 1;
  // Called after each check, for progress output.
  std::function<void(const ReproduceCheck&)> on_check;
};

// Suites: dim4, dim5, bounds, classify, all. Throws std::invalid_argument for
// an unknown suite.
std::vector<ReproduceCheck> reproduce(const std::string& suite, const ReproduceOptions& options = {});

const std::vector<std::string>& reproduce_suites();

// {"suite", "pass", "tables": {table: {"pass", "passed", "failed", "failures": [...]}}}
nlohmann::json reproduce_matrix(const std::string& suite, const std::vector<ReproduceCheck>& checks);

}  // namespace lcd
