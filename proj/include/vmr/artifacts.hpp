#ifndef VMR_ARTIFACTS_HPP
#define VMR_ARTIFACTS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "vmr/csv.hpp"
#include "vmr/error.hpp"
#include "vmr/svg.hpp"
#include "vmr/sweep.hpp"

namespace vmr {

/// SVG for a magnetoresistance sweep: ratio against H, one line per E.
inline std::string svg_of(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw InvalidInput("svg_of: no sweep rows");
  std::map<double, PlotSeries> by_e;
  for (const auto& r : rows) {
    auto& s = by_e[r.e_vpcm];
    if (s.label.empty()) s.label = "E = " + detail::tick_label(r.e_vpcm) + " V/cm";
    s.points.push_back({r.h_gauss, r.ratio});
  }
  std::vector<PlotSeries> series;
  for (auto& [e, s] : by_e) series.push_back(std::move(s));
  return render_line_plot("Longitudinal magnetoresistance", "H (Gs)", "dJ2 / J0", series);
}

/// SVG for an I-V reconstruction: current against voltage with and
/// without the field, log scale (the currents span several decades).
inline std::string svg_of(const std::vector<IvRow>& rows) {
  if (rows.empty()) throw InvalidInput("svg_of: no iv rows");
  PlotSeries base{"H = 0", {}};
  std::map<double, PlotSeries> with_h;
  for (const auto& r : rows) {
    if (base.points.empty() || base.points.back()[0] != r.voltage)
      base.points.push_back({r.voltage, r.j0});
    auto& s = with_h[r.h_gauss];
    if (s.label.empty()) s.label = "H = " + detail::tick_label(r.h_gauss) + " Gs";
    s.points.push_back({r.voltage, r.j_h});
  }
  std::vector<PlotSeries> series{std::move(base)};
  for (auto& [h, s] : with_h) series.push_back(std::move(s));
  return render_line_plot("Reconstructed current-voltage curve", "V (volt)", "J (statamp/cm^2)",
                          series, /*log_y=*/true);
}

/// Writes the CSV and/or SVG artifacts for a result set.  Empty result
/// sets are refused; an empty path skips that artifact.
template <class Rows>
void emit_artifacts(const Rows& rows, const std::filesystem::path& csv_path,
                    const std::filesystem::path& svg_path) {
  if (rows.empty()) throw InvalidInput("emit_artifacts: refusing to write an empty result set");
  if (!csv_path.empty()) write_text_file(csv_path, csv_of(rows));
  if (!svg_path.empty()) write_text_file(svg_path, svg_of(rows));
}

}  // namespace vmr

#endif  // VMR_ARTIFACTS_HPP
