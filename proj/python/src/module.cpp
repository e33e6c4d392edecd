#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "lcdlab/bounds.hpp"
#include "lcdlab/classify.hpp"
#include "lcdlab/code.hpp"
#include "lcdlab/families.hpp"
#include "lcdlab/paperio.hpp"
#include "lcdlab/reproduce.hpp"
#include "lcdlab/search.hpp"

namespace py = pybind11;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::string> rows_of(const lcd::BitMatrix& m) {
  std::vector<std::string> rows(m.rows(), std::string(m.cols(), '0'));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) rows[r][c] = '1';
    }
  }
  return rows;
}

lcd::ExtendMethod parse_method(const std::string& method) {
  if (method == "lift") return lcd::ExtendMethod::kTypeLift;
  if (method == "coset") return lcd::ExtendMethod::kCosetScan;
  throw std::invalid_argument("method must be 'lift' or 'coset'");
}

lcd::ClassifyOptions classify_options(int jobs, const std::optional<std::filesystem::path>& db,
                                      const std::string& method) {
  lcd::ClassifyOptions o;
  o.jobs = jobs;
  if (db) o.db_dir = *db;
  o.method = parse_method(method);
  return o;
}

}  // namespace

PYBIND11_MODULE(_lcdlab, m) {
  m.doc() = "Binary LCD codes: families, bounds, classification and search";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const lcd::FamilyRangeError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<lcd::LinearCode>(m, "Code")
      .def(py::init([](const std::vector<std::string>& rows) {
             return lcd::LinearCode(lcd::BitMatrix::from_strings(rows));
           }),
           py::arg("rows"), "Row space of a generator given as '0'/'1' strings.")
      .def_property_readonly("n", &lcd::LinearCode::length)
      .def_property_readonly("k", &lcd::LinearCode::dimension)
      .def_property_readonly("generator",
                             [](const lcd::LinearCode& c) { return rows_of(c.generator()); })
      .def("min_weight", &lcd::LinearCode::min_weight)
      .def("weight_distribution",
           [](const lcd::LinearCode& c) { return c.weight_enumerator().counts(); })
      .def("hull_dim", [](const lcd::LinearCode& c) { return c.hull().hull_dim; })
      .def("is_lcd", [](const lcd::LinearCode& c) { return c.hull().is_lcd; })
      .def("dual", [](const lcd::LinearCode& c) { return lcd::dual(c); })
      .def("shorten", [](const lcd::LinearCode& c, std::size_t i) { return lcd::shorten(c, i); },
           py::arg("coordinate"))
      .def("canonical_key", [](const lcd::LinearCode& c) { return lcd::canonical_key(c).hex(); })
      .def("equivalent", [](const lcd::LinearCode& a, const lcd::LinearCode& b) {
        return lcd::equivalent(a, b);
      })
      .def("report",
           [](const lcd::LinearCode& c) { return to_python(lcd::code_report(c, std::nullopt)); })
      .def("__eq__", [](const lcd::LinearCode& a, const lcd::LinearCode& b) { return a == b; })
      .def("__repr__", [](const lcd::LinearCode& c) {
        return "<Code [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]>";
      });

  m.def("family_code", [](int k, int s, std::int64_t t) { return lcd::family_code(k, s, t).code; },
        py::arg("k"), py::arg("s"), py::arg("t"));
  m.def("family_report",
        [](int k, int s, std::int64_t t) { return to_python(lcd::family_report(k, s, t)); },
        py::arg("k"), py::arg("s"), py::arg("t"));
  m.def("symbolic_weight_enumerator",
        [](int k, int s) {
          return lcd::symbolic_weight_enumerator(k, lcd::family_affine_vector(k, s)).to_string();
        },
        py::arg("k"), py::arg("s"));
  m.def("gram_det",
        [](int k, int s) { return lcd::symbolic_gram_det(k, lcd::family_affine_vector(k, s)).coeffs(); },
        py::arg("k"), py::arg("s"), "Coefficients of det(G G^T) in t, constant term first.");

  m.def("griesmer_dmax", &lcd::griesmer_dmax, py::arg("n"), py::arg("k"));
  m.def("closed_form_bound", &lcd::closed_form_bound, py::arg("n"), py::arg("k"));
  m.def("bounds", [](int n, int k) { return to_python(lcd::bounds_report(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("decode_octal",
        [](const std::string& text, std::size_t n, std::size_t k) {
          return lcd::LinearCode(lcd::systematic(lcd::decode_octal(text, n, k)));
        },
        py::arg("text"), py::arg("n"), py::arg("k"));

  m.def("classify",
        [](int n, int k, int d, int jobs, std::optional<std::filesystem::path> db,
           const std::string& method) {
          const auto options = classify_options(jobs, db, method);
          lcd::CodeDb result;
          {
            py::gil_scoped_release release;
            result = lcd::classify(n, k, d, options);
          }
          std::vector<lcd::LinearCode> codes;
          for (const auto& r : result.records) codes.emplace_back(r.generator);
          return codes;
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("jobs") = 1, py::arg("db") = py::none(),
        py::arg("method") = "lift", "Representatives of all [n,k,d] codes up to equivalence.");
  m.def("census",
        [](int n, int k, int d, int jobs, std::optional<std::filesystem::path> db,
           const std::string& method) {
          const auto options = classify_options(jobs, db, method);
          lcd::Census c;
          {
            py::gil_scoped_release release;
            c = lcd::lcd_census(lcd::classify(n, k, d, options));
          }
          std::vector<std::string> keys;
          for (const auto& key : c.lcd_keys) keys.push_back(key.hex());
          py::dict out;
          out["total"] = c.total;
          out["lcd"] = c.lcd;
          out["lcd_keys"] = keys;
          return out;
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("jobs") = 1, py::arg("db") = py::none(),
        py::arg("method") = "lift");

  m.def("search_lcd",
        [](int n, int k, int d, std::uint64_t iters, std::uint64_t seed, std::uint32_t restarts,
           int jobs) -> std::optional<lcd::LinearCode> {
          py::gil_scoped_release release;
          const lcd::SearchBudget budget{iters, seed, restarts};
          return lcd::search_lcd(n, k, d, budget, jobs).code;
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("iters") = 1'000'000,
        py::arg("seed") = 1, py::arg("restarts") = 8, py::arg("jobs") = 1);

  m.def("reproduce",
        [](const std::string& suite, int jobs, std::optional<std::filesystem::path> db,
           std::uint64_t seed) {
          lcd::ReproduceOptions options;
          options.jobs = jobs;
          if (db) options.db_dir = *db;
          options.seed = seed;
          std::vector<lcd::ReproduceCheck> checks;
          {
            py::gil_scoped_release release;
            checks = lcd::reproduce(suite, options);
          }
          return to_python(lcd::reproduce_matrix(suite, checks));
        },
        py::arg("suite") = "all", py::arg("jobs") = 1, py::arg("db") = py::none(),
        py::arg("seed") = 1);
}
