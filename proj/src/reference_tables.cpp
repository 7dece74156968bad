#include "landau/reference_tables.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace landau {

double print_half_step(const char* text) {
  int decimals = 0;
  int exponent = 0;
  bool in_fraction = false;
  for (const char* p = text; *p; ++p) {
    if (*p == '.') {
      in_fraction = true;
    } else if (*p == 'e' || *p == 'E') {
      exponent = std::atoi(p + 1);
      break;
    } else if (in_fraction && *p >= '0' && *p <= '9') {
      ++decimals;
    }
  }
  return 0.5 * std::pow(10.0, exponent - decimals);
}

namespace {

constexpr const char* kA[5] = {"1.001", "1.01", "1.1", "1.2", "2"};

ReferenceCell cell(std::string row, std::string col, const char* text,
                   bool gate, double tol, bool threshold = false) {
  ReferenceCell c;
  c.row_label = std::move(row);
  c.col_label = std::move(col);
  c.text = text;
  c.value = std::strtod(text, nullptr);
  c.gate = gate;
  c.threshold = threshold;
  c.rel_tol = tol;
  c.half_step = print_half_step(text);
  return c;
}

// near-zero artifact cells: 10%; |value| >= 1: 0.5%; a = 1.001: report-only
void push_minreal_row(ReferenceTable& t, const std::string& row,
                      const char* (&vals)[5]) {
  for (int j = 0; j < 5; ++j) {
    const double v = std::strtod(vals[j], nullptr);
    const bool report_only = j == 0;
    t.cells.push_back(cell(row, kA[j], vals[j], !report_only,
                           std::abs(v) >= 1.0 ? 0.005 : 0.10));
  }
}

ReferenceTable make_table1() {
  ReferenceTable t;
  t.id = 1;
  t.title = "Minimum of real parts of eigenvalues, zero mode";
  const char* r100[5] = {"-4.3375e+06", "-526.5826", "-0.4929", "-0.1113", "-0.0066"};
  const char* r320[5] = {"-4.9314e+04", "-19.8387", "-0.0465", "-0.0108", "-6.5386e-04"};
  const char* r640[5] = {"-5.9662e+03", "-4.0271", "-0.0116", "-0.0027", "-1.6395e-04"};
  const char* r900[5] = {"-0.24404e+03", "-1.9419", "-0.0059", "-0.0014", "-8.2981e-05"};
  push_minreal_row(t, "100", r100);
  push_minreal_row(t, "320", r320);
  push_minreal_row(t, "640", r640);
  push_minreal_row(t, "900", r900);
  return t;
}

ReferenceTable make_table2() {
  ReferenceTable t;
  t.id = 2;
  t.title = "Second minimum of real parts of eigenvalues, zero mode";
  const char* rows[3] = {"100", "320", "640"};
  const char* vals[3][5] = {
      {"11.9690", "11.7248", "18.7715", "20.3521", "23.0242"},
      {"11.9535", "13.3592", "19.1610", "20.4829", "23.0448"},
      {"11.9611", "14.9310", "19.1929", "20.4937", "23.0465"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j)
      t.cells.push_back(cell(rows[i], kA[j], vals[i][j], true, 0.005));
  return t;
}

ReferenceTable make_table3() {
  ReferenceTable t;
  t.id = 3;
  t.title = "Cosine of angle between kernel eigenvector and d_a Psi, N = 640";
  // thresholds: >= 0.998 at a = 1.001, >= 0.9999 elsewhere
  const char* vals[5] = {"0.998", "0.9999", "0.9999", "0.9999", "0.9999"};
  for (int j = 0; j < 5; ++j)
    t.cells.push_back(cell("640", kA[j], vals[j], true, 0.0, true));
  return t;
}

ReferenceTable make_table4() {
  ReferenceTable t;
  t.id = 4;
  t.title = "Minimum of real parts of eigenvalues, mode 1, N = 640";
  const char* a8[8] = {"1.001", "1.01", "1.1", "1.2", "1.5", "2", "5", "10"};
  const char* sig[6] = {"0.001", "0.01", "0.1", "1", "10", "50"};
  const char* vals[6][8] = {
      {"-5931.5", "-2.8719", "-0.0101", "-0.0025", "-0.0005", "-0.00015",
       "-0.00001", "0.000001"},
      {"-0.0030", "11.9444", "0.1391", "0.0209", "0.0025", "0.00091",
       "0.00053", "0.00051"},
      {"12.0776", "11.9809", "11.7450", "2.5152", "0.2995", "0.1077",
       "0.0546", "0.0511"},
      {"21.9890", "22.0544", "21.6837", "20.8485", "17.5098", "10.5236",
       "6.3884", "6.0898"},
      {"10911", "10913", "10975", "11013", "11048", "11024", "10706",
       "10547"},
      {"6272600", "6273900", "6281400", "6285600", "6291300", "6293900",
       "6288200", "6279700"}};
  for (int i = 0; i < 6; ++i) {
    const bool small_sigma = i < 2;
    for (int j = 0; j < 8; ++j) {
      bool gate;
      double tol;
      if (small_sigma) {
        gate = j >= 2;  // a >= 1.1
        tol = 0.10;
      } else {
        gate = true;
        tol = 0.005;
      }
      t.cells.push_back(cell(sig[i], a8[j], vals[i][j], gate, tol));
    }
  }
  return t;
}

ReferenceTable make_table5() {
  ReferenceTable t;
  t.id = 5;
  t.title = "Values of Re(mu_2)";
  const char* a7[7] = {"1.001", "1.01", "1.1", "1.2", "2", "10", "100"};
  const char* rows[5] = {"320", "640", "1000", "2000", "3000"};
  const char* vals[5][7] = {
      {"40.4784", "13.2605", "6.8694", "6.0795", "5.2064", "5.0067", "5.0001"},
      {"34.7380", "13.1886", "6.8677", "6.0790", "5.2063", "5.0067", "5.0001"},
      {"33.9805", "13.1748", "6.8674", "6.0788", "5.2063", "5.0067", "5.0001"},
      {"33.6191", "13.1677", "6.8673", "6.0788", "5.2063", "5.0067", "5.0001"},
      {"33.5545", "13.1664", "6.8672", "6.0788", "5.2063", "5.0067", "5.0001"}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 7; ++j)
      t.cells.push_back(cell(rows[i], a7[j], vals[i][j], j != 0, 0.002));
  return t;
}

ReferenceTable make_table6() {
  ReferenceTable t;
  t.id = 6;
  t.title = "Minimum of real parts: zero mode vs mode 1 at sigma = 0.001";
  const char* rows[4] = {"n=0 N=640", "n=0 N=900", "n=1 s=0.001 N=640",
                         "n=1 s=0.001 N=900"};
  const char* vals[4][5] = {
      {"-5.9662e+03", "-4.0271", "-0.0116", "-0.0027", "-1.6395e-04"},
      {"-0.24404e+03", "-1.9419", "-0.0059", "-0.0014", "-8.2981e-05"},
      {"-5.9315e+03", "-2.8719", "-0.0101", "-0.0025", "-0.00015"},
      {"-2.3882e+03", "-0.5854", "-0.0044", "-0.001", "-7.2192e-05"}};
  for (int i = 0; i < 4; ++i) {
    const char* (&row)[5] = vals[i];
    for (int j = 0; j < 5; ++j) {
      const double v = std::strtod(row[j], nullptr);
      t.cells.push_back(cell(rows[i], kA[j], row[j], j != 0,
                             std::abs(v) >= 1.0 ? 0.005 : 0.10));
    }
  }
  return t;
}

}  // namespace

const ReferenceTable& reference_table(int id) {
  static const ReferenceTable tables[6] = {make_table1(), make_table2(),
                                           make_table3(), make_table4(),
                                           make_table5(), make_table6()};
  if (id < 1 || id > 6)
    throw std::invalid_argument("reference_table: id must be 1..6");
  return tables[id - 1];
}

}  // namespace landau
