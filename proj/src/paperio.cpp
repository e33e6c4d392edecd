#include "lcdlab/paperio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lcdlab/bounds.hpp"

namespace lcd {

namespace {

constexpr char kHex[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::runtime_error("codedb: expected an integer, got '" + std::string(s) + "'");
}

}  // namespace

BitMatrix decode_octal(std::string_view text, std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw std::invalid_argument("decode_octal: need 1 <= k <= n");
  const std::size_t cols = n - k;
  const std::size_t bits = k * cols;
  const std::size_t letters = bits % 3;
  if (text.size() != bits / 3 + letters) {
    throw std::invalid_argument("decode_octal: " + std::to_string(text.size()) +
                                " symbols do not encode a " + std::to_string(k) + " x " +
                                std::to_string(cols) + " matrix");
  }
  BitMatrix m(k, cols);
  std::size_t pos = 0;
  auto put = [&](bool bit) {
    if (bit) m.set(pos / cols, pos % cols, true);
    ++pos;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool is_letter_slot = i >= bits / 3;
    if (!is_letter_slot && c >= '0' && c <= '7') {
      const int v = c - '0';
      put(v & 4);
      put(v & 2);
      put(v & 1);
    } else if (is_letter_slot && (c == 'a' || c == 'b')) {
      put(c == 'b');
    } else {
      throw std::invalid_argument(std::string("decode_octal: unexpected symbol '") + c +
                                  "' at position " + std::to_string(i));
    }
  }
  return m;
}

std::string encode_octal(const BitMatrix& redundancy) {
  const std::size_t cols = redundancy.cols();
  const std::size_t bits = redundancy.rows() * cols;
  auto bit = [&](std::size_t p) { return redundancy.get(p / cols, p % cols); };
  std::string out;
  std::size_t p = 0;
  for (; p + 3 <= bits; p += 3) {
    out += static_cast<char>('0' + (bit(p) << 2 | bit(p + 1) << 1 | bit(p + 2)));
  }
  for (; p < bits; ++p) out += bit(p) ? 'b' : 'a';
  return out;
}

BitMatrix parse_binary_rows(std::span<const std::string> rows, std::size_t k) {
  if (rows.size() != k) {
    throw std::invalid_argument("parse_binary_rows: expected " + std::to_string(k) + " rows, got " +
                                std::to_string(rows.size()));
  }
  return BitMatrix::from_strings(rows);
}

BitMatrix systematic(const BitMatrix& redundancy) {
  return hconcat(BitMatrix::identity(redundancy.rows()), redundancy);
}

std::string row_hex(const BitMatrix& m, std::size_t row) {
  const auto words = m.row(row);
  const std::size_t bytes = (m.cols() + 7) / 8;
  std::string out;
  out.reserve(2 * bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    const unsigned v = static_cast<unsigned>(words[b / 8] >> (8 * (b % 8))) & 0xffu;
    out += kHex[v >> 4];
    out += kHex[v & 15];
  }
  return out;
}

void parse_row_hex(std::string_view hex, BitMatrix& m, std::size_t row) {
  const std::size_t bytes = (m.cols() + 7) / 8;
  if (hex.size() != 2 * bytes) throw std::runtime_error("codedb: row has the wrong width");
  auto words = m.row(row);
  for (std::size_t b = 0; b < bytes; ++b) {
    const int hi = hex_value(hex[2 * b]);
    const int lo = hex_value(hex[2 * b + 1]);
    if (hi < 0 || lo < 0) throw std::runtime_error("codedb: bad hex digit in row");
    words[b / 8] |= static_cast<BitMatrix::Word>(hi << 4 | lo) << (8 * (b % 8));
  }
  if (m.cols() % BitMatrix::kWordBits != 0 && !words.empty() &&
      (words.back() >> (m.cols() % BitMatrix::kWordBits)) != 0) {
    throw std::runtime_error("codedb: row has bits past its length");
  }
}

std::string emit_codedb(const CodeDb& db) {
  std::string out = std::to_string(db.n) + ' ' + std::to_string(db.k) + ' ' +
                    std::to_string(db.d) + ' ' + std::to_string(db.count()) + ' ' +
                    (db.method.empty() ? "-" : db.method) + '\n';
  for (const auto& rec : db.records) {
    out += rec.key.hex();
    out += ':';
    for (std::size_t r = 0; r < rec.generator.rows(); ++r) {
      out += ' ';
      out += row_hex(rec.generator, r);
    }
    out += '\n';
  }
  return out;
}

CodeDb parse_codedb(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t j = text.find('\n', i);
    if (j == std::string_view::npos) j = text.size();
    if (j > i) lines.push_back(text.substr(i, j - i));
    i = j + 1;
  }
  if (lines.empty()) throw std::runtime_error("codedb: empty file");
  const auto head = split_ws(lines[0]);
  if (head.size() != 5) throw std::runtime_error("codedb: header must be 'n k d count method'");
  CodeDb db;
  db.n = to_int(head[0]);
  db.k = to_int(head[1]);
  db.d = to_int(head[2]);
  const int count = to_int(head[3]);
  db.method = std::string(head[4]);
  if (db.n < 1 || db.k < 1 || db.k > db.n) throw std::runtime_error("codedb: bad (n, k)");
  if (count < 0 || static_cast<std::size_t>(count) != lines.size() - 1) {
    throw std::runtime_error("codedb: header count does not match the records");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t colon = lines[i].find(':');
    if (colon == std::string_view::npos) throw std::runtime_error("codedb: record without ':'");
    CodeRecord rec;
    try {
      rec.key = CanonicalKey::from_hex(lines[i].substr(0, colon));
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("codedb: bad key: ") + e.what());
    }
    const auto rows = split_ws(lines[i].substr(colon + 1));
    if (rows.size() != static_cast<std::size_t>(db.k)) {
      throw std::runtime_error("codedb: record has the wrong number of rows");
    }
    rec.generator = BitMatrix(rows.size(), static_cast<std::size_t>(db.n));
    for (std::size_t r = 0; r < rows.size(); ++r) parse_row_hex(rows[r], rec.generator, r);
    if (!db.records.empty() && !(db.records.back().key < rec.key)) {
      throw std::runtime_error("codedb: keys are not strictly increasing");
    }
    db.records.push_back(std::move(rec));
  }
  return db;
}

void write_codedb(const std::filesystem::path& path, const CodeDb& db) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << emit_codedb(db);
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CodeDb read_codedb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_codedb(ss.str());
}

nlohmann::json generator_json(const BitMatrix& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::string s(g.cols(), '0');
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g.get(r, c)) s[c] = '1';
    }
    rows.push_back(s);
  }
  return rows;
}

nlohmann::json code_report(const LinearCode& code, const std::optional<CodeClaim>& claim,
                           nlohmann::json params) {
  const HullInfo hull = lcd_status(code);
  nlohmann::json measured = {
      {"n", code.length()},
      {"k", code.dimension()},
      {"d", code.min_weight()},
      {"hull_dim", hull.hull_dim},
      {"is_lcd", hull.is_lcd},
      {"weight_enumerator", code.weight_enumerator().to_string()},
  };
  nlohmann::json report = {{"params", std::move(params)}, {"measured", measured}};
  if (claim) {
    nlohmann::json c = {{"n", claim->n}, {"k", claim->k}, {"d", claim->d}};
    bool match = claim->n == code.length() && claim->k == code.dimension() &&
                 claim->d == code.min_weight();
    if (claim->is_lcd) {
      c["is_lcd"] = *claim->is_lcd;
      match = match && *claim->is_lcd == hull.is_lcd;
    } else {
      c["is_lcd"] = nullptr;
    }
    report["claimed"] = std::move(c);
    report["match"] = match;
  } else {
    report["claimed"] = nullptr;
    report["match"] = nullptr;
  }
  return report;
}

nlohmann::json family_report(int k, int s, std::int64_t t) {
  const FamilyVerdict v = family_code(k, s, t);
  const AffineVec av = family_affine_vector(k, s);
  const CodeClaim claim{v.claimed.n, v.claimed.k, v.claimed.d, v.claimed.is_lcd};
  nlohmann::json report = code_report(v.code, claim, {{"k", k}, {"s", s}, {"t", t}});
  report["family"] = {
      {"symbolic_weight_enumerator", symbolic_weight_enumerator(k, av).to_string()},
      {"gram_det", symbolic_gram_det(k, av).to_string()},
      {"a", family_a_vector(k, s, t)},
  };
  report["generator"] = generator_json(v.code.generator());
  return report;
}

nlohmann::json bounds_report(int n, int k) {
  nlohmann::json report = {{"params", {{"n", n}, {"k", k}}}, {"griesmer", griesmer_dmax(n, k)}};
  if ((k == 4 || k == 5) && n >= k) {
    report["closed_form"] = closed_form_bound(n, k);
  } else {
    report["closed_form"] = nullptr;
  }
  const DTableEntry e = known_lcd_d(n, k);
  report["lcd_status"] = to_string(e.status);
  if (e.status == DStatus::kExact) {
    report["lcd_known"] = e.value();
  } else {
    report["lcd_known"] = nullptr;
  }
  report["lcd_candidates"] = e.candidates;
  report["provenance"] = e.provenance;
  return report;
}

}  // namespace lcd
