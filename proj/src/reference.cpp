#include "lcdlab/reference.hpp"

#include <stdexcept>
#include <utility>

namespace lcd::ref {

namespace {

struct WeRow {
  int s;
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
};

struct DetRow {
  int s;
  std::vector<std::int64_t> coeffs;
};

const std::vector<WeRow> kWe4 = {
    {0, {{1, -2}, {4, -1}, {5, 0}, {4, 1}, {1, 2}}},
    {1, {{3, -1}, {5, 0}, {4, 1}, {2, 2}, {1, 3}}},
    {2, {{8, 0}, {6, 2}, {1, 4}}},
    {3, {{2, 0}, {6, 1}, {4, 2}, {2, 3}, {1, 4}}},
    {4, {{4, 1}, {6, 2}, {4, 3}, {1, 4}}},
    {5, {{10, 2}, {5, 4}}},
    {6, {{6, 2}, {9, 4}}},
    {7, {{4, 2}, {2, 3}, {3, 4}, {6, 5}}},
    {8, {{4, 3}, {5, 4}, {4, 5}, {2, 6}}},
    {9, {{9, 4}, {6, 6}}},
    {10, {{7, 4}, {6, 6}, {2, 8}}},
    {11, {{6, 4}, {5, 6}, {3, 8}, {1, 10}}},
    {12, {{6, 5}, {4, 6}, {1, 7}, {3, 8}, {1, 11}}},
    {13, {{10, 6}, {4, 8}, {1, 12}}},
    {14, {{8, 6}, {4, 8}, {2, 10}, {1, 12}}},
};

const std::vector<WeRow> kWe5 = {
    {0, {{3, -2}, {9, -1}, {9, 0}, {6, 1}, {3, 2}, {1, 3}}},
    {1, {{9, -1}, {8, 0}, {6, 1}, {6, 2}, {1, 3}, {1, 4}}},
    {2, {{3, -1}, {8, 0}, {10, 1}, {6, 2}, {3, 3}, {1, 4}}},
    {3, {{8, 0}, {9, 1}, {6, 2}, {6, 3}, {1, 4}, {1, 5}}},
    {4, {{2, 0}, {9, 1}, {10, 2}, {6, 3}, {3, 4}, {1, 5}}},
    {5, {{5, 1}, {10, 2}, {10, 3}, {5, 4}, {1, 5}}},
    {6, {{3, 1}, {6, 2}, {10, 3}, {9, 4}, {3, 5}}},
    {7, {{6, 2}, {9, 3}, {9, 4}, {6, 5}, {1, 7}}},
    {8, {{4, 2}, {9, 3}, {7, 4}, {6, 5}, {2, 6}, {1, 7}, {2, 8}}},
    {9, {{6, 3}, {9, 4}, {9, 5}, {6, 6}, {1, 9}}},
    {10, {{6, 3}, {8, 4}, {5, 5}, {5, 6}, {4, 7}, {1, 8}, {1, 9}, {1, 10}}},
    {11, {{7, 4}, {9, 5}, {6, 6}, {6, 7}, {2, 8}, {1, 9}}},
    {12, {{6, 4}, {8, 5}, {5, 6}, {5, 7}, {3, 8}, {2, 9}, {1, 10}, {1, 11}}},
    {13, {{8, 5}, {9, 6}, {5, 7}, {5, 8}, {2, 9}, {1, 10}, {1, 11}}},
    {14, {{4, 5}, {5, 6}, {9, 7}, {9, 8}, {2, 9}, {1, 10}, {1, 11}}},
    {15, {{8, 6}, {9, 7}, {4, 8}, {6, 9}, {2, 10}, {1, 11}, {1, 12}}},
    {16, {{6, 6}, {7, 7}, {4, 8}, {6, 9}, {4, 10}, {3, 11}, {1, 12}}},
    {17, {{9, 7}, {8, 8}, {4, 9}, {6, 10}, {1, 11}, {1, 12}, {2, 13}}},
    {18, {{6, 7}, {7, 8}, {6, 9}, {5, 10}, {3, 11}, {2, 12}, {1, 14}, {1, 15}}},
    {19, {{8, 8}, {8, 9}, {6, 10}, {6, 11}, {1, 12}, {1, 13}, {1, 17}}},
    {20, {{10, 9}, {10, 10}, {5, 11}, {5, 12}, {1, 15}}},
    {21, {{6, 9}, {6, 10}, {9, 11}, {9, 12}, {1, 15}}},
    {22, {{10, 10}, {10, 11}, {5, 12}, {5, 13}, {1, 17}}},
    {23, {{4, 10}, {9, 11}, {9, 12}, {6, 13}, {2, 14}, {1, 15}}},
    {24, {{9, 11}, {9, 12}, {6, 13}, {6, 14}, {1, 15}}},
    {25, {{7, 11}, {7, 12}, {6, 13}, {6, 14}, {3, 15}, {2, 16}}},
    {26, {{9, 12}, {9, 13}, {6, 14}, {6, 15}, {1, 17}}},
    {27, {{4, 12}, {9, 13}, {9, 14}, {6, 15}, {1, 16}, {1, 17}, {1, 18}}},
    {28, {{9, 13}, {9, 14}, {6, 15}, {5, 16}, {1, 17}, {1, 18}}},
    {29, {{5, 13}, {5, 14}, {10, 15}, {9, 16}, {1, 17}, {1, 18}}},
    {30, {{9, 14}, {9, 15}, {5, 16}, {6, 17}, {1, 18}, {1, 19}}},
};

const std::vector<DetRow> kDet4 = {
    {0, {1, 8, -80, -256, 1280}},
    {1, {1, 0, -80, 0, 1280}},
    {2, {1, -32, -96, 512, 1280}},
    {3, {-1, -8, 64, 640, 1280}},
    {4, {1, 32, 288, 1024, 1280}},
    {5, {5, 104, 688, 1664, 1280}},
    {6, {9, 144, 800, 1792, 1280}},
    {7, {15, 216, 1056, 2048, 1280}},
    {8, {45, 480, 1760, 2560, 1280}},
    {9, {129, 976, 2656, 3072, 1280}},
    {10, {153, 1152, 3040, 3328, 1280}},
    {11, {161, 1240, 3248, 3456, 1280}},
    {12, {339, 2064, 4496, 4096, 1280}},
    {13, {493, 2744, 5424, 4480, 1280}},
    {14, {597, 3208, 6064, 4736, 1280}},
};

const std::vector<DetRow> kDet5 = {
    {0, {-1, 16, 640, -4096, -36864, 196608}},
    {1, {-1, 64, 64, -9216, 8192, 196608}},
    {2, {1, 16, -320, -4096, 16384, 196608}},
    {3, {1, -48, -1280, -1024, 61440, 196608}},
    {4, {-1, -32, 0, 7168, 69632, 196608}},
    {5, {1, 80, 1920, 20480, 102400, 196608}},
    {6, {3, 192, 3840, 33792, 135168, 196608}},
    {7, {15, 640, 9856, 66560, 192512, 196608}},
    {8, {23, 1008, 14144, 82944, 212992, 196608}},
    {9, {81, 2448, 25728, 118784, 249856, 196608}},
    {10, {91, 3088, 33984, 150528, 286720, 196608}},
    {11, {301, 6704, 53888, 195584, 323584, 196608}},
    {12, {349, 9472, 73344, 240640, 356352, 196608}},
    {13, {803, 15792, 101568, 291840, 389120, 196608}},
    {14, {1167, 21808, 129536, 343040, 421888, 196608}},
    {15, {1797, 30496, 166464, 405504, 458752, 196608}},
    {16, {2589, 35248, 179328, 424960, 471040, 196608}},
    {17, {3575, 54080, 256256, 539648, 528384, 196608}},
    {18, {4555, 70368, 316928, 624640, 569344, 196608}},
    {19, {9697, 97904, 374656, 683008, 593920, 196608}},
    {20, {29875, 220400, 647040, 944128, 684032, 196608}},
    {21, {15015, 139264, 484544, 802816, 638976, 196608}},
    {22, {38125, 270000, 758400, 1054720, 724992, 196608}},
    {23, {27811, 220560, 670912, 986112, 704512, 196608}},
    {24, {41999, 296032, 819264, 1114112, 745472, 196608}},
    {25, {41751, 298688, 832448, 1132544, 753664, 196608}},
    {26, {91385, 541296, 1271168, 1480704, 856064, 196608}},
    {27, {66915, 430352, 1085376, 1344512, 819200, 196608}},
    {28, {93971, 552592, 1290112, 1495040, 860160, 196608}},
    {29, {104319, 606016, 1390528, 1576960, 884736, 196608}},
    {30, {129085, 709760, 1552448, 1688576, 913408, 196608}},
};

struct OctalRaw {
  int n;
  int index;
  const char* text;
};

const std::vector<OctalRaw> kOctal4 = {
    {22, 1, "617170773600001777475345"},
    {22, 2, "633330767460001777475345"},
    {23, 1, "7066743767400003777533415b"},
    {26, 1, "74607433743630000077774773714a"},
    {26, 2, "63653061761714000077771676540b"},
    {27, 1, "760663616177700000177775750755ba"},
    {30, 1, "7074633617703754000007777766174433ab"},
    {30, 2, "3746066317361730000003777767251176ab"},
    {30, 3, "5147543306363674000003777767251176ab"},
    {30, 4, "7436630317741714000003777751676754ba"},
    {30, 5, "7306663617773600000003777764564745aa"},
    {30, 6, "3615263617767700000003777764564745aa"},
    {30, 7, "7314633617743740000003777764564745aa"},
    {30, 8, "7707043617363614000003777764564745aa"},
    {30, 9, "7317063617761714000003777764564745aa"},
    {30, 10, "3615700757303746000003777764564745aa"},
    {31, 1, "554633154717077600000077777672511762"},
    {31, 2, "730661730777077000000077777137753663"},
    {31, 3, "347474036774170660000077777516767544"},
    {31, 4, "760374630777633000000077777172511762"},
    {31, 5, "547433154774077600000077777172511762"},
};

const std::vector<OctalRaw> kOctal5 = {
    {25, 1, "273153117315434776000007777760547b"},
    {25, 2, "546617117315434776000007777760547b"},
    {25, 3, "323615531466634773000007777760547b"},
    {25, 4, "465630761547437636000007777266633a"},
    {25, 5, "466530761547437636000007777266633a"},
    {25, 6, "236363174077037770000007776616632b"},
    {25, 7, "073663166617037336000007776616632b"},
    {25, 8, "263531530747437336000007776616632b"},
    {27, 1, "263663176303615761714000037776375746aa"},
    {28, 1, "43663307741547434377600000377773721733a"},
    {29, 1, "4365154676031760775570000001777732725475"},
    {29, 2, "1627171457614660775670000001777732725475"},
    {29, 3, "7303615454636660775554000001777732725475"},
    {29, 4, "7155415454770660774374000001777732725475"},
    {29, 5, "7164314676154360774374000001777732725475"},
    {29, 6, "4367714654754360774176000001777732725475"},
    {29, 7, "5317606654746630774155400001777732725475"},
    {29, 8, "4353606654636630774155400001777732725475"},
    {29, 9, "5317606654636630774155400001777732725475"},
    {30, 1, "45571433147570361760776000001777747566530bb"},
};

struct BinaryRaw {
  int n;
  std::vector<std::string> rows;
};

const std::vector<BinaryRaw> kMTable = {
    {19, {"00000001111111", "01110011101110", "01011100111110", "10011001010101", "11101100100101"}},
    {20, {"000000011111111", "000111101001110", "101011011100101", "110111010001001", "011101100111111"}},
    {22, {"00000000111111111", "10111101010011010", "10100110011100011", "11001011101110010", "11110010110110101"}},
    {26, {"000000000011111111111", "100111111011111001100", "011101111101101111000", "010010011111000101011", "111100001010001011110"}},
};

int octal_d(FixtureTable table, int n, int index) {
  if (table == FixtureTable::kDim4) {
    switch (n) {
      case 22: return 11;
      case 23: return 12;
      case 26: return 13;
      case 27: return 14;
      case 30: return index == 1 ? 16 : 15;
      case 31: return 16;
    }
  } else {
    switch (n) {
      case 25: return 12;
      case 27: return 13;
      case 28: return 14;
      case 29: return 14;
      case 30: return 15;
    }
  }
  throw std::logic_error("octal fixture without a tabulated minimum weight");
}

int m_table_d(int n) {
  switch (n) {
    case 19: return 8;
    case 20: return 9;
    case 22: return 10;
    case 26: return 12;
  }
  throw std::logic_error("M-table fixture without a tabulated minimum weight");
}

std::vector<OctalFixture> build_octal(FixtureTable table, const std::vector<OctalRaw>& raw, int k) {
  std::vector<OctalFixture> out;
  for (const auto& r : raw) {
    out.push_back({table, r.n, k, r.index, r.text, octal_d(table, r.n, r.index)});
  }
  return out;
}

// Count tables, one entry per (row, column); a dash is stored as 0.
struct CountRow {
  int dim_offset;  // n - n_row
  int k;
  int d_offset;
  std::vector<int> values;
};

struct CountTable {
  int table_k;
  std::vector<std::pair<int, int>> columns;
  std::vector<CountRow> rows;
};

const CountTable kCounts4 = {
    4,
    {{22, 11}, {23, 12}, {26, 13}, {27, 14}, {30, 16}, {30, 15}, {31, 16}},
    {
        {0, 4, 0, {2, 1, 2, 1, 1, 9, 5}},
        {1, 3, 0, {6, 4, 13, 7, 4, 27, 16}},
        {1, 3, 1, {1, 0, 1, 0, 0, 4, 0}},
        {2, 2, 0, {10, 10, 15, 15, 15, 21, 21}},
        {2, 2, 1, {6, 3, 10, 6, 6, 15, 10}},
        {2, 2, 2, {1, 1, 3, 3, 3, 6, 6}},
        {2, 2, 3, {0, 0, 1, 0, 0, 3, 1}},
    },
};

const CountTable kCounts5 = {
    5,
    {{25, 12}, {27, 13}, {28, 14}, {29, 14}, {30, 15}},
    {
        {0, 5, 0, {8, 1, 1, 9, 1}},
        {1, 4, 0, {11, 2, 1, 13, 1}},
        {2, 3, 0, {16, 13, 7, 28, 6}},
        {2, 3, 1, {0, 1, 0, 1, 1}},
        {3, 2, 0, {15, 15, 15, 21, 15}},
        {3, 2, 1, {6, 10, 6, 10, 10}},
        {3, 2, 2, {3, 3, 3, 6, 3}},
        {3, 2, 3, {0, 1, 0, 1, 1}},
    },
};

std::vector<CountCell> build_counts(const CountTable& table) {
  std::vector<CountCell> out;
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const auto [cn, cd] = table.columns[c];
      out.push_back({table.table_k, cn, cd, cn - row.dim_offset, row.k, cd + row.d_offset,
                     static_cast<std::uint64_t>(row.values[c])});
    }
  }
  return out;
}

template <typename Row>
const Row& find_row(const std::vector<Row>& rows, int k, int s) {
  for (const auto& r : rows) {
    if (r.s == s) return r;
  }
  throw std::invalid_argument("no tabulated row for k = " + std::to_string(k) +
                              ", s = " + std::to_string(s));
}

}  // namespace

SymbolicWE weight_enumerator(int k, int s) {
  if (k != 4 && k != 5) throw std::invalid_argument("weight enumerator tables exist for k = 4, 5");
  const auto& row = find_row(k == 4 ? kWe4 : kWe5, k, s);
  const std::int64_t slope = std::int64_t{1} << (k - 1);
  SymbolicWE we;
  for (const auto& [mult, c0] : row.terms) we.terms.push_back({mult, AffineForm{c0, slope}});
  return we;
}

IntPoly gram_det(int k, int s) {
  if (k != 4 && k != 5) throw std::invalid_argument("determinant tables exist for k = 4, 5");
  return IntPoly(find_row(k == 4 ? kDet4 : kDet5, k, s).coeffs);
}

const char* to_string(FixtureTable table) {
  switch (table) {
    case FixtureTable::kDim4:
      return "dim4";
    case FixtureTable::kDim5:
      return "dim5";
    case FixtureTable::kMTable:
      return "m-table";
  }
  return "?";
}

std::string OctalFixture::label() const {
  return "M_{" + std::to_string(n) + "," + std::to_string(index) + "}";
}

std::span<const OctalFixture> octal_fixtures(FixtureTable table) {
  static const std::vector<OctalFixture> dim4 = build_octal(FixtureTable::kDim4, kOctal4, 4);
  static const std::vector<OctalFixture> dim5 = build_octal(FixtureTable::kDim5, kOctal5, 5);
  switch (table) {
    case FixtureTable::kDim4:
      return dim4;
    case FixtureTable::kDim5:
      return dim5;
    case FixtureTable::kMTable:
      break;
  }
  throw std::invalid_argument("the M-table is binary, not octal");
}

std::string BinaryFixture::label() const { return "M_" + std::to_string(n); }

std::span<const BinaryFixture> binary_fixtures() {
  static const std::vector<BinaryFixture> fixtures = [] {
    std::vector<BinaryFixture> out;
    for (const auto& r : kMTable) out.push_back({r.n, 5, r.rows, m_table_d(r.n)});
    return out;
  }();
  return fixtures;
}

std::string CountCell::label() const {
  return "N_{" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) +
         "} (col " + std::to_string(col_n) + "," + std::to_string(col_d) + ")";
}

std::span<const CountCell> count_cells(int table_k) {
  static const std::vector<CountCell> c4 = build_counts(kCounts4);
  static const std::vector<CountCell> c5 = build_counts(kCounts5);
  if (table_k == 4) return c4;
  if (table_k == 5) return c5;
  throw std::invalid_argument("count tables exist for k = 4, 5");
}

}  // namespace lcd::ref
