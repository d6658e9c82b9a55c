#ifndef VMR_TABLE_HPP
#define VMR_TABLE_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "vmr/error.hpp"

namespace vmr {

/// Measured carrier concentration versus applied voltage.  Voltages are
/// strictly increasing; concentrations are positive but need not be
/// monotone (measured data is kept verbatim).
struct ConcentrationTable {
  struct Row {
    double voltage;        ///< applied voltage across the sample (V)
    double concentration;  ///< Hall carrier concentration (cm^-3)
  };
  std::vector<Row> rows;
};

inline constexpr const char* concentration_csv_header = "voltage_v,concentration_cm3";

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses two-column (voltage, concentration) text: one row per line,
/// comma- or whitespace-separated, '#' comments and blank lines ignored,
/// an optional leading header line equal to concentration_csv_header.
/// Throws InvalidInput with the offending line number on parse errors,
/// non-increasing voltages, or non-positive concentrations.
inline ConcentrationTable load_concentration_table(std::istream& in,
                                                   const std::string& source = "<input>") {
  ConcentrationTable table;
  std::string line;
  int line_no = 0;
  bool seen_data = false;
  int prev_line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!seen_data && body == concentration_csv_header) continue;
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream row_in(body);
    double v = 0, n = 0;
    std::string extra;
    if (!(row_in >> v >> n) || (row_in >> extra)) {
      throw InvalidInput(source + ":" + std::to_string(line_no) +
                         ": expected two numeric columns (voltage, concentration)");
    }
    if (!std::isfinite(v) || !std::isfinite(n))
      throw InvalidInput(source + ":" + std::to_string(line_no) + ": non-finite value");
    if (n <= 0)
      throw InvalidInput(source + ":" + std::to_string(line_no) +
                         ": concentration must be positive");
    if (!table.rows.empty() && v <= table.rows.back().voltage)
      throw InvalidInput(source + ":" + std::to_string(line_no) +
                         ": voltages must be strictly increasing (previous row at line " +
                         std::to_string(prev_line_no) + ")");
    table.rows.push_back({v, n});
    prev_line_no = line_no;
    seen_data = true;
  }
  if (table.rows.empty()) throw InvalidInput(source + ": no data rows");
  return table;
}

inline ConcentrationTable load_concentration_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open table file: " + path.string());
  return load_concentration_table(in, path.string());
}

/// The bundled n-Ge dataset: Hall concentration against applied voltage
/// at helium temperature.  The drop from 30 V to 45 V is kept verbatim
/// from the measurement record.
inline const ConcentrationTable& ge_default_table() {
  static const ConcentrationTable table{{
      {2, 3.21e9},
      {3, 7e9},
      {4, 2.8e12},
      {5, 1.41e13},
      {9, 9.3e13},
      {15, 1.7e14},
      {30, 6.7e14},
      {45, 2.3e14},
  }};
  return table;
}

/// Concentration at voltage `v` by interpolation that is linear in
/// log(n): the measured concentrations span five decades, so linear
/// interpolation of n itself would be meaningless.  Exact at the nodes;
/// no extrapolation (the impurity-breakdown regime outside the table is
/// not modeled).
inline double interpolate_concentration(const ConcentrationTable& table, double v) {
  if (table.rows.empty()) throw InvalidInput("interpolate_concentration: empty table");
  if (!std::isfinite(v) || v < table.rows.front().voltage || v > table.rows.back().voltage) {
    std::ostringstream msg;
    msg << "interpolate_concentration: voltage " << v << " outside table range ["
        << table.rows.front().voltage << ", " << table.rows.back().voltage << "]";
    throw InvalidInput(msg.str());
  }
  auto hi = std::lower_bound(table.rows.begin(), table.rows.end(), v,
                             [](const ConcentrationTable::Row& r, double x) { return r.voltage < x; });
  if (hi->voltage == v) return hi->concentration;
  auto lo = hi - 1;
  const double t = (v - lo->voltage) / (hi->voltage - lo->voltage);
  return std::exp(std::log(lo->concentration) +
                  t * (std::log(hi->concentration) - std::log(lo->concentration)));
}

}  // namespace vmr

#endif  // VMR_TABLE_HPP
