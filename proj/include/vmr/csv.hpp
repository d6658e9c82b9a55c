#ifndef VMR_CSV_HPP
#define VMR_CSV_HPP

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include "vmr/error.hpp"
#include "vmr/sweep.hpp"
#include "vmr/table.hpp"

namespace vmr {

/// Scientific notation with 17 significant digits: locale-independent,
/// byte-stable, and exact under round-trip back to double.
inline std::string format_full(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

inline std::string csv_of(const ConcentrationTable& table) {
  std::string out = std::string(concentration_csv_header) + "\n";
  for (const auto& row : table.rows)
    out += format_full(row.voltage) + "," + format_full(row.concentration) + "\n";
  return out;
}

inline constexpr const char* sweep_csv_header =
    "e_vpcm,h_gauss,j0_statamp_cm2,dj2_statamp_cm2,ratio,omega_tau,weak_field";

inline std::string csv_of(const std::vector<SweepRow>& rows) {
  std::string out = std::string(sweep_csv_header) + "\n";
  for (const auto& r : rows) {
    out += format_full(r.e_vpcm) + "," + format_full(r.h_gauss) + "," + format_full(r.j0) + "," +
           format_full(r.dj2) + "," + format_full(r.ratio) + "," + format_full(r.omega_tau) + "," +
           (r.weak_field ? "1" : "0") + "\n";
  }
  return out;
}

inline constexpr const char* iv_csv_header =
    "voltage_v,n_cm3,j0_statamp_cm2,j_h_statamp_cm2,ratio,h_gauss";

inline std::string csv_of(const std::vector<IvRow>& rows) {
  std::string out = std::string(iv_csv_header) + "\n";
  for (const auto& r : rows) {
    out += format_full(r.voltage) + "," + format_full(r.n) + "," + format_full(r.j0) + "," +
           format_full(r.j_h) + "," + format_full(r.ratio) + "," + format_full(r.h_gauss) + "\n";
  }
  return out;
}

/// Header plus full-precision numeric rows, as written by csv_of.
struct NumericCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline NumericCsv read_numeric_csv(std::istream& in, const std::string& source = "<csv>") {
  NumericCsv csv;
  std::string line;
  int line_no = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      cells.push_back(s.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto cells = split(body);
    if (csv.header.empty()) {
      csv.header = cells;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      double v = 0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
        throw InvalidInput(source + ":" + std::to_string(line_no) + ": bad numeric cell '" + cell +
                           "'");
      row.push_back(v);
    }
    if (row.size() != csv.header.size())
      throw InvalidInput(source + ":" + std::to_string(line_no) + ": column count mismatch");
    csv.rows.push_back(std::move(row));
  }
  if (csv.header.empty()) throw InvalidInput(source + ": empty csv");
  return csv;
}

/// Writes text to `path`, failing with the path in the message.
inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file: " + path.string());
  out << text;
  if (!out) throw InvalidInput("write failed: " + path.string());
}

}  // namespace vmr

#endif  // VMR_CSV_HPP
