#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>

#include "pqcbench/errors.hpp"
#include "pqcbench/report.hpp"

namespace pqcb {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

std::string_view series_color(Operation op) {
  switch (op) {
    case Operation::Keypair: return "#4c72b0";
    case Operation::Sign: return "#dd8452";
    case Operation::Verify: break;
  }
  return "#55a868";
}

std::size_t catalog_position(const std::string& variant) {
  const auto entries = catalog();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].variant == variant) return i;
  }
  return entries.size();
}

/// 1, 2 or 5 times a power of ten, at least v.
double nice_ceiling(double v) {
  if (v <= 0.0) return 1.0;
  const double p = std::pow(10.0, std::floor(std::log10(v)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * p >= v * (1.0 - 1e-12)) return m * p;
  }
  return 10.0 * p;
}

class YAxis {
 public:
  YAxis(bool log, double lo, double hi, double top, double bottom)
      : log_(log), lo_(lo), hi_(hi), top_(top), bottom_(bottom) {}

  double operator()(double v) const {
    double t;
    if (log_) {
      const double c = std::max(v, lo_);
      t = (std::log10(c) - std::log10(lo_)) / (std::log10(hi_) - std::log10(lo_));
    } else {
      t = std::max(v, 0.0) / hi_;
    }
    t = std::clamp(t, 0.0, 1.0);
    return bottom_ - t * (bottom_ - top_);
  }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log_) {
      for (double v = lo_; v <= hi_ * (1.0 + 1e-9); v *= 10.0) out.push_back(v);
    } else {
      for (int k = 0; k <= 5; ++k) out.push_back(hi_ * k / 5.0);
    }
    return out;
  }

 private:
  bool log_;
  double lo_, hi_, top_, bottom_;
};

}  // namespace

std::vector<ReportRow> select_rows(const ReportDataset& dataset, const ChartSpec& spec) {
  std::vector<ReportRow> out;
  for (const auto& r : dataset.rows) {
    if (level_group(r.level) != spec.level_group) continue;
    if (r.stage != spec.stage) continue;
    if (spec.model && r.model != spec.model) continue;
    if (spec.machine && r.machine != *spec.machine) continue;
    if (std::find(spec.series.begin(), spec.series.end(), r.operation) == spec.series.end()) continue;
    out.push_back(r);
  }
  return out;
}

bool needs_log_scale(std::span<const ReportRow> rows) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& r : rows) {
    if (r.mean_ms > 0.0) lo = std::min(lo, r.mean_ms);
    hi = std::max(hi, r.mean_ms);
  }
  return std::isfinite(lo) && hi / lo > 100.0;
}

std::string render_bar_chart_svg(const ReportDataset& dataset, const ChartSpec& spec) {
  if (spec.series.empty()) throw Error(ErrorCode::InvalidArgument, "chart needs at least one series");
  const auto rows = select_rows(dataset, spec);
  if (rows.empty()) {
    throw Error(ErrorCode::EmptySelection, "no rows match chart '" + spec.title + "'");
  }

  // Group key: variant, plus machine when several machines are selected.
  std::vector<std::string> machines;
  for (const auto& r : rows) {
    if (std::find(machines.begin(), machines.end(), r.machine) == machines.end()) {
      machines.push_back(r.machine);
    }
  }
  const bool tag_machine = machines.size() > 1;
  struct Group {
    std::string label;
    std::map<Operation, const ReportRow*> bars;
  };
  using GroupKey = std::tuple<std::size_t, std::string, std::string>;
  std::map<GroupKey, Group> groups;
  for (const auto& r : rows) {
    auto& g = groups[GroupKey{catalog_position(r.variant), r.variant, r.machine}];
    g.label = tag_machine ? r.variant + " (" + r.machine + ")" : r.variant;
    g.bars[r.operation] = &r;
  }

  const bool log_scale = spec.log_scale || needs_log_scale(rows);
  double max_v = 0.0;
  double min_pos = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    max_v = std::max(max_v, r.mean_ms + r.std_ms);
    if (r.mean_ms > 0.0) min_pos = std::min(min_pos, r.mean_ms);
    if (r.mean_ms - r.std_ms > 0.0) min_pos = std::min(min_pos, r.mean_ms - r.std_ms);
  }

  const double width = spec.width;
  const double height = spec.height;
  const double left = 90.0, right = 30.0, top = 70.0, bottom = 170.0;
  const double plot_w = width - left - right;
  const double plot_bottom = height - bottom;

  double lo = 0.0, hi;
  if (log_scale) {
    if (!std::isfinite(min_pos)) min_pos = 1e-3;
    lo = std::pow(10.0, std::floor(std::log10(min_pos)));
    hi = std::pow(10.0, std::ceil(std::log10(std::max(max_v, min_pos))));
    if (hi <= lo) hi = lo * 10.0;
  } else {
    hi = nice_ceiling(max_v);
  }
  const YAxis y(log_scale, lo, hi, top, plot_bottom);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + px(width) +
         "\" height=\"" + px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + px(width) + "\" height=\"" + px(height) +
         "\" fill=\"#ffffff\"/>\n";
  svg += "<text class=\"title\" x=\"" + px(width / 2) +
         "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
         xml_escape(spec.title) + "</text>\n";
  svg += "<text class=\"subtitle\" x=\"" + px(width / 2) +
         "\" y=\"48\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#555555\">Lower values indicate better results</text>\n";

  // Axes and grid.
  for (double t : y.ticks()) {
    const double ty = y(t);
    svg += "<line x1=\"" + px(left) + "\" y1=\"" + px(ty) + "\" x2=\"" + px(width - right) +
           "\" y2=\"" + px(ty) + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    svg += "<text class=\"tick\" x=\"" + px(left - 8) + "\" y=\"" + px(ty + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt("%g", t) +
           "</text>\n";
  }
  svg += "<line x1=\"" + px(left) + "\" y1=\"" + px(top) + "\" x2=\"" + px(left) + "\" y2=\"" +
         px(plot_bottom) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + px(left) + "\" y1=\"" + px(plot_bottom) + "\" x2=\"" + px(width - right) +
         "\" y2=\"" + px(plot_bottom) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  const double mid_y = (top + plot_bottom) / 2;
  svg += "<text class=\"axis-label\" x=\"20\" y=\"" + px(mid_y) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 20 " +
         px(mid_y) + ")\">" + (log_scale ? "Time (ms, log scale)" : "Time (ms)") + "</text>\n";

  // Bars.
  const double group_w = plot_w / static_cast<double>(groups.size());
  const double bar_w = group_w * 0.7 / static_cast<double>(spec.series.size());
  std::size_t gi = 0;
  for (const auto& [key, group] : groups) {
    const double gx = left + group_w * static_cast<double>(gi) + group_w * 0.15;
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
      auto it = group.bars.find(spec.series[si]);
      if (it == group.bars.end()) continue;
      const ReportRow& r = *it->second;
      const double x = gx + bar_w * static_cast<double>(si);
      const double bar_top = y(r.mean_ms);
      svg += "<rect class=\"bar\" x=\"" + px(x) + "\" y=\"" + px(bar_top) + "\" width=\"" +
             px(bar_w) + "\" height=\"" + px(plot_bottom - bar_top) + "\" fill=\"" +
             std::string(series_color(r.operation)) + "\"><title>" + xml_escape(r.variant) + " " +
             std::string(to_string(r.operation)) + ": " + fmt("%.4f", r.mean_ms) + " ± " +
             fmt("%.4f", r.std_ms) + " ms</title></rect>\n";
      const double cx = x + bar_w / 2;
      const double e_hi = y(r.mean_ms + r.std_ms);
      const double e_lo = y(r.mean_ms - r.std_ms);
      const double cap = std::min(bar_w / 4, 6.0);
      svg += "<path class=\"error-bar\" d=\"M" + px(cx) + " " + px(e_lo) + " L" + px(cx) + " " +
             px(e_hi) + " M" + px(cx - cap) + " " + px(e_hi) + " L" + px(cx + cap) + " " +
             px(e_hi) + " M" + px(cx - cap) + " " + px(e_lo) + " L" + px(cx + cap) + " " +
             px(e_lo) + "\" stroke=\"#222222\" stroke-width=\"1\" fill=\"none\"/>\n";
    }
    const double lx = left + group_w * (static_cast<double>(gi) + 0.5);
    const double ly = plot_bottom + 14;
    svg += "<text class=\"variant-label\" x=\"" + px(lx) + "\" y=\"" + px(ly) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" transform=\"rotate(-45 " +
           px(lx) + " " + px(ly) + ")\">" + xml_escape(group.label) + "</text>\n";
    ++gi;
  }

  // Legend.
  double lx = width - right - 110.0 * static_cast<double>(spec.series.size());
  for (Operation op : spec.series) {
    svg += "<rect x=\"" + px(lx) + "\" y=\"54\" width=\"12\" height=\"12\" fill=\"" +
           std::string(series_color(op)) + "\"/>\n";
    svg += "<text class=\"legend\" x=\"" + px(lx + 16) +
           "\" y=\"64\" font-family=\"sans-serif\" font-size=\"12\">" +
           std::string(to_string(op)) + "</text>\n";
    lx += 110.0;
  }
  svg += "</svg>\n";
  return svg;
}

std::size_t render_bar_chart(const ReportDataset& dataset, const ChartSpec& spec,
                             const std::filesystem::path& path) {
  const std::string svg = render_bar_chart_svg(dataset, spec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
  return svg.size();
}

}  // namespace pqcb
