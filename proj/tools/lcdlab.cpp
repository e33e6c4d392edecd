// lcdlab: command-line front end for the LCD code library.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdlab/bounds.hpp"
#include "lcdlab/classify.hpp"
#include "lcdlab/families.hpp"
#include "lcdlab/paperio.hpp"
#include "lcdlab/reference.hpp"
#include "lcdlab/reproduce.hpp"
#include "lcdlab/search.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Globals {
  int jobs = 1;
  std::string db = "./lcddb";
  bool json = false;
  std::uint64_t seed = 1;
  std::string manifest;
};

std::string db_dir(const Globals& g) {
  if (const char* env = std::getenv("LCDLAB_DB"); env != nullptr && *env != '\0') return env;
  return g.db;
}

std::string iso_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// FNV-1a over the canonical JSON dump of the result.
std::string digest(const json& result) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : result.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// "path: value" lines; string arrays (generator rows) one element per line.
void print_text(const json& j, const std::string& path) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) print_text(value, path.empty() ? key : path + "." + key);
  } else if (j.is_array()) {
    if (j.empty()) {
      std::cout << path << ": -\n";
    } else if (j.front().is_structured()) {
      for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], path + "[" + std::to_string(i + 1) + "]");
    } else if (j.front().is_string()) {
      std::cout << path << ":\n";
      for (const auto& v : j) std::cout << "  " << v.get<std::string>() << '\n';
    } else {
      std::cout << path << ":";
      for (const auto& v : j) std::cout << ' ' << v.dump();
      std::cout << '\n';
    }
  } else {
    std::cout << path << ": " << (j.is_string() ? j.get<std::string>() : j.is_null() ? "-" : j.dump())
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lcdlab: construct, verify, search and classify binary LCD codes"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--db", g.db, "Classification database directory (LCDLAB_DB overrides)");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Random seed for search");
  app.add_option("--manifest", g.manifest, "Write a run manifest (JSON) to this file");

  int k = 0, s = 0, n = 0, d = 0;
  std::int64_t t = 0;
  std::string emit = "all";
  auto* family = app.add_subcommand("family", "Instantiate a family code C_{15t+s} / D_{31t+s}");
  family->add_option("--k", k, "Dimension (4 or 5)")->required()->check(CLI::IsMember({4, 5}));
  family->add_option("--s", s, "Residue s")->required();
  family->add_option("--t", t, "Parameter t")->required();
  family->add_option("--emit", emit, "we | det | code | all")
      ->check(CLI::IsMember({"we", "det", "code", "all"}));

  auto* bounds = app.add_subcommand("bounds", "Griesmer bound and known d(n,k) for LCD codes");
  bounds->add_option("--n", n)->required();
  bounds->add_option("--k", k)->required();

  std::string method = "lift";
  auto* classify = app.add_subcommand("classify", "Classify all [n,k,d] codes up to equivalence");
  auto* census = app.add_subcommand("census", "Classify [n,k,d] codes and count the LCD ones");
  for (auto* sub : {classify, census}) {
    sub->add_option("--n", n)->required();
    sub->add_option("--k", k)->required();
    sub->add_option("--d", d)->required();
    sub->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);
    sub->add_option("--db", g.db);
    sub->add_option("--method", method, "lift | coset")->check(CLI::IsMember({"lift", "coset"}));
  }

  std::uint64_t iters = 1'000'000;
  std::uint32_t restarts = 8;
  auto* search = app.add_subcommand("search", "Heuristic search for an LCD [n,k,>=d] code");
  search->add_option("--n", n)->required();
  search->add_option("--k", k)->required();
  search->add_option("--d", d)->required();
  search->add_option("--seed", g.seed);
  search->add_option("--iters", iters, "Total move budget");
  search->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  search->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);

  std::string table;
  bool all_fixtures = false;
  int index = 0;
  auto* verify = app.add_subcommand("verify-octal", "Decode and verify the generator fixtures");
  verify->add_option("--table", table, "dim4 | dim5 | m-table")
      ->required()
      ->check(CLI::IsMember({"dim4", "dim5", "m-table"}));
  auto* all_flag = verify->add_flag("--all", all_fixtures, "Every fixture of the table");
  verify->add_option("--index", index, "Only the fixture at this position (1-based)")
      ->excludes(all_flag);

  std::string suite = "all";
  auto* repro = app.add_subcommand("reproduce", "Re-derive the published tables");
  repro->add_option("--suite", suite)->check(CLI::IsMember(lcd::reproduce_suites()));
  repro->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);
  repro->add_option("--db", g.db);
  repro->add_flag("--json", g.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string started = iso_now();
  const auto print = [&g](const json& j) {
    if (g.json) {
      std::cout << j.dump(2) << '\n';
    } else {
      print_text(j, "");
    }
  };
  json params;
  json result;
  int status = kExitOk;
  try {
    if (family->parsed()) {
      params = {{"k", k}, {"s", s}, {"t", t}, {"emit", emit}};
      json report = lcd::family_report(k, s, t);
      if (emit == "we") {
        result = {{"params", report["params"]},
                  {"symbolic_weight_enumerator", report["family"]["symbolic_weight_enumerator"]},
                  {"weight_enumerator", report["measured"]["weight_enumerator"]}};
      } else if (emit == "det") {
        result = {{"params", report["params"]}, {"gram_det", report["family"]["gram_det"]}};
      } else if (emit == "code") {
        result = {{"params", report["params"]},
                  {"generator", report["generator"]},
                  {"measured", report["measured"]},
                  {"claimed", report["claimed"]},
                  {"match", report["match"]}};
      } else {
        result = std::move(report);
      }
      print(result);
      if (result.contains("match") && result["match"] != true) status = kExitMismatch;
    } else if (bounds->parsed()) {
      params = {{"n", n}, {"k", k}};
      result = lcd::bounds_report(n, k);
      print(result);
    } else if (classify->parsed() || census->parsed()) {
      params = {{"n", n}, {"k", k}, {"d", d}, {"method", method}};
      lcd::ClassifyOptions opts;
      opts.jobs = g.jobs;
      opts.db_dir = db_dir(g);
      opts.method = method == "coset" ? lcd::ExtendMethod::kCosetScan : lcd::ExtendMethod::kTypeLift;
      if (!g.json) {
        opts.on_level = [](const lcd::CodeDb& db, bool from_disk) {
          std::cerr << "  [" << db.n << ',' << db.k << ',' << db.d << "] N = " << db.count()
                    << (from_disk ? " (cached)" : "") << '\n';
        };
      }
      const lcd::CodeDb db = lcd::classify(n, k, d, opts);
      const lcd::Census c = lcd::lcd_census(db);
      result = {{"params", params},
                {"N", c.total},
                {"N_lcd", c.lcd},
                {"db_file", lcd::codedb_path(opts.db_dir, n, k, d).string()}};
      if (census->parsed()) {
        json keys = json::array();
        for (const auto& key : c.lcd_keys) keys.push_back(key.hex());
        result["lcd_keys"] = keys;
      } else {
        json recs = json::array();
        for (const auto& r : db.records) {
          recs.push_back({{"key", r.key.hex()}, {"generator", lcd::generator_json(r.generator)}});
        }
        result["codes"] = recs;
      }
      print(result);
    } else if (search->parsed()) {
      params = {{"n", n}, {"k", k}, {"d", d}, {"seed", g.seed}, {"iters", iters}, {"restarts", restarts}};
      const auto r = lcd::search_lcd(n, k, d, lcd::SearchBudget{iters, g.seed, restarts}, g.jobs);
      if (r.code) {
        result = lcd::code_report(*r.code, std::nullopt, params);
        result["found"] = true;
        result["restart"] = r.restart;
        result["iterations"] = r.iterations;
        result["generator"] = lcd::generator_json(r.code->generator());
      } else {
        result = {{"params", params}, {"found", false}};
        status = kExitMismatch;
      }
      print(result);
    } else if (verify->parsed()) {
      params = {{"table", table}, {"index", index}};
      result = {{"table", table}, {"fixtures", json::array()}};
      bool ok = true;
      auto record = [&](const std::string& label, const lcd::LinearCode& code, lcd::CodeClaim claim,
                        const std::string& text) {
        json rep = lcd::code_report(code, claim, {{"label", label}});
        if (!text.empty()) rep["text"] = text;
        ok = ok && rep["match"] == true;
        result["fixtures"].push_back(std::move(rep));
      };
      if (table == "m-table") {
        const auto fixtures = lcd::ref::binary_fixtures();
        for (std::size_t i = 0; i < fixtures.size(); ++i) {
          if (index != 0 && static_cast<std::size_t>(index) != i + 1) continue;
          const auto& f = fixtures[i];
          const lcd::LinearCode code(lcd::systematic(lcd::parse_binary_rows(f.rows, 5)));
          record(f.label(), code,
                 {static_cast<std::size_t>(f.n), 5, static_cast<std::size_t>(f.d), true}, "");
        }
      } else {
        const auto tbl = table == "dim4" ? lcd::ref::FixtureTable::kDim4 : lcd::ref::FixtureTable::kDim5;
        const auto fixtures = lcd::ref::octal_fixtures(tbl);
        for (std::size_t i = 0; i < fixtures.size(); ++i) {
          if (index != 0 && static_cast<std::size_t>(index) != i + 1) continue;
          const auto& f = fixtures[i];
          const auto m = lcd::decode_octal(f.text, static_cast<std::size_t>(f.n), static_cast<std::size_t>(f.k));
          const lcd::LinearCode code(lcd::systematic(m));
          if (lcd::encode_octal(m) != f.text) ok = false;
          record(f.label(), code,
                 {static_cast<std::size_t>(f.n), static_cast<std::size_t>(f.k),
                  static_cast<std::size_t>(f.d), false},
                 f.text);
        }
      }
      if (result["fixtures"].empty()) throw std::invalid_argument("no fixture at that index");
      result["pass"] = ok;
      print(result);
      if (!ok) status = kExitMismatch;
    } else if (repro->parsed()) {
      params = {{"suite", suite}};
      lcd::ReproduceOptions opts;
      opts.jobs = g.jobs;
      opts.db_dir = db_dir(g);
      opts.seed = g.seed;
      if (!g.json) {
        opts.on_check = [](const lcd::ReproduceCheck& c) {
          std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.table << " | " << c.item;
          if (!c.pass && !c.detail.empty()) std::cout << "  (" << c.detail << ')';
          std::cout << '\n';
        };
      }
      const auto checks = lcd::reproduce(suite, opts);
      result = lcd::reproduce_matrix(suite, checks);
      if (g.json) {
        print(result);
      } else {
        std::cout << "\nsummary:\n";
        for (const auto& [name, tbl] : result["tables"].items()) {
          std::cout << (tbl["pass"] == true ? "  PASS  " : "  FAIL  ") << name << "  ("
                    << tbl["passed"].get<int>() << " passed, " << tbl["failed"].get<int>()
                    << " failed)\n";
        }
      }
      if (result["pass"] != true) status = kExitMismatch;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "lcdlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "lcdlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lcdlab: " << e.what() << '\n';
    return kExitMismatch;
  }

  if (!g.manifest.empty()) {
    const json manifest = {{"command", app.get_subcommands().front()->get_name()},
                           {"parameters", params},
                           {"seed", g.seed},
                           {"start", started},
                           {"end", iso_now()},
                           {"exit_code", status},
                           {"result_digest", digest(result)}};
    std::ofstream(g.manifest) << manifest.dump(2) << '\n';
  }
  return status;
}
