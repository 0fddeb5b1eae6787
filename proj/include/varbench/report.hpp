#pragma once

// Report rendering: summary statistics as JSON, the bucket histogram as
// CSV, and a single self-contained HTML page with inline styling and
// inline SVG charts — no external assets, scripts, or network references.
//
// The HTML page embeds its own machine-readable payload in a
// <script type="application/json"> block so that every rendered report
// can be re-parsed by this module (parse_html_payload) without scraping
// markup.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "varbench/errors.hpp"
#include "varbench/model.hpp"
#include "varbench/stats.hpp"

namespace varbench {

// One row of the optional code-size section.
struct SizeDeltaRow {
  std::string baseline_id;
  std::string candidate_id;
  std::string backend_id;
  std::string size_unit;
  std::int64_t baseline_size = 0;
  std::int64_t candidate_size = 0;
  std::int64_t delta = 0;  // candidate - baseline
  std::optional<std::int64_t> reference_baseline;  // reference-host sizes,
  std::optional<std::int64_t> reference_candidate; // informational only

  json to_json() const {
    json out{{"baseline_id", baseline_id},
             {"candidate_id", candidate_id},
             {"backend_id", backend_id},
             {"size_unit", size_unit},
             {"baseline_size", baseline_size},
             {"candidate_size", candidate_size},
             {"delta", delta}};
    out["reference_baseline"] =
        reference_baseline ? json(*reference_baseline) : json(nullptr);
    out["reference_candidate"] =
        reference_candidate ? json(*reference_candidate) : json(nullptr);
    return out;
  }
};

// Everything one HTML report is rendered from.
struct ReportData {
  std::string title;
  std::string source;  // where the records came from (path or label)
  StatsSummary stats;
  std::vector<std::pair<double, double>> scatter;  // (t_baseline, g)
  std::optional<double> correlation_r;
  std::vector<SizeDeltaRow> sizes;
};

// Bucket holding the most measurements; lowest bucket wins ties.
inline std::int64_t peak_bucket(const StatsSummary& stats) {
  if (stats.histogram.empty())
    throw contract_error("peak_bucket: empty histogram");
  std::int64_t best_bucket = stats.histogram.begin()->first;
  std::int64_t best_count = stats.histogram.begin()->second;
  for (const auto& [bucket, count] : stats.histogram) {
    if (count > best_count) {
      best_bucket = bucket;
      best_count = count;
    }
  }
  return best_bucket;
}

inline std::string render_stats_json(const StatsSummary& stats) {
  return stats.to_json().dump(2) + "\n";
}

inline std::string render_histogram_csv(const StatsSummary& stats) {
  return stats.histogram_csv();
}

namespace detail {

inline std::string html_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string format_number(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

// JSON text destined for a <script> block: escape "</" so the payload can
// never terminate its container element.
inline std::string script_safe_json(const json& value) {
  std::string text = value.dump();
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '<' && i + 1 < text.size() && text[i + 1] == '/') {
      out += "<\\/";
      ++i;
    } else {
      out += text[i];
    }
  }
  return out;
}

// Histogram bars over the contiguous bucket range, zero-count buckets
// filled in so gaps are visible.
inline std::string render_bucket_chart(const StatsSummary& stats) {
  const std::int64_t lo = stats.histogram.begin()->first;
  const std::int64_t hi = stats.histogram.rbegin()->first;
  const std::int64_t buckets = hi - lo + 1;
  std::int64_t max_count = 1;
  for (const auto& [bucket, count] : stats.histogram)
    max_count = std::max(max_count, count);

  const double plot_w = 640.0;
  const double plot_h = 220.0;
  const double margin_left = 64.0;
  const double margin_bottom = 36.0;
  const double margin_top = 12.0;
  const double width = margin_left + plot_w + 16.0;
  const double height = margin_top + plot_h + margin_bottom;
  const double bar_w = plot_w / static_cast<double>(buckets);

  std::ostringstream svg;
  svg << "<svg role=\"img\" viewBox=\"0 0 " << width << " " << height
      << "\" xmlns=\"http://www.w3.org/2000/svg\">\n";

  // horizontal gridlines with count labels
  for (int line = 0; line <= 4; ++line) {
    const double frac = static_cast<double>(line) / 4.0;
    const double y = margin_top + plot_h * (1.0 - frac);
    const double label = frac * static_cast<double>(max_count);
    svg << "  <line x1=\"" << margin_left << "\" y1=\"" << y << "\" x2=\""
        << margin_left + plot_w << "\" y2=\"" << y
        << "\" stroke=\"#d5d5d5\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << margin_left - 6 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" class=\"tick\">"
        << static_cast<std::int64_t>(std::llround(label)) << "</text>\n";
  }

  // bars
  for (std::int64_t bucket = lo; bucket <= hi; ++bucket) {
    const auto it = stats.histogram.find(bucket);
    const std::int64_t count = it == stats.histogram.end() ? 0 : it->second;
    const double h =
        plot_h * static_cast<double>(count) / static_cast<double>(max_count);
    const double x =
        margin_left + bar_w * static_cast<double>(bucket - lo) + bar_w * 0.1;
    const double y = margin_top + plot_h - h;
    svg << "  <rect class=\"bar\" x=\"" << x << "\" y=\"" << y << "\" width=\""
        << bar_w * 0.8 << "\" height=\"" << h << "\"><title>bucket " << bucket
        << ": " << count << "</title></rect>\n";
  }

  // x-axis tick labels, thinned to roughly a dozen
  const std::int64_t step = std::max<std::int64_t>(1, buckets / 12);
  for (std::int64_t bucket = lo; bucket <= hi; bucket += step) {
    const double x =
        margin_left + bar_w * (static_cast<double>(bucket - lo) + 0.5);
    svg << "  <text x=\"" << x << "\" y=\"" << margin_top + plot_h + 16
        << "\" text-anchor=\"middle\" class=\"tick\">" << bucket
        << "</text>\n";
  }
  svg << "  <text x=\"" << margin_left + plot_w / 2 << "\" y=\""
      << height - 4 << "\" text-anchor=\"middle\" class=\"axis\">improvement "
      << "factor bucket (floor of g)</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

inline std::string render_scatter_chart(
    const std::vector<std::pair<double, double>>& scatter) {
  double min_t = scatter.front().first, max_t = scatter.front().first;
  double min_g = scatter.front().second, max_g = scatter.front().second;
  for (const auto& [t, g] : scatter) {
    min_t = std::min(min_t, t);
    max_t = std::max(max_t, t);
    min_g = std::min(min_g, g);
    max_g = std::max(max_g, g);
  }
  // degenerate ranges still need a visible span
  if (max_t <= min_t) max_t = min_t + (min_t == 0.0 ? 1.0 : min_t * 0.1);
  if (max_g <= min_g) max_g = min_g + (min_g == 0.0 ? 1.0 : min_g * 0.1);

  const double plot_w = 640.0;
  const double plot_h = 220.0;
  const double margin_left = 72.0;
  const double margin_bottom = 36.0;
  const double margin_top = 12.0;
  const double width = margin_left + plot_w + 16.0;
  const double height = margin_top + plot_h + margin_bottom;

  std::ostringstream svg;
  svg << "<svg role=\"img\" viewBox=\"0 0 " << width << " " << height
      << "\" xmlns=\"http://www.w3.org/2000/svg\">\n";
  svg << "  <rect x=\"" << margin_left << "\" y=\"" << margin_top
      << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#d5d5d5\"/>\n";
  for (const auto& [t, g] : scatter) {
    const double x = margin_left + plot_w * (t - min_t) / (max_t - min_t);
    const double y =
        margin_top + plot_h * (1.0 - (g - min_g) / (max_g - min_g));
    svg << "  <circle class=\"dot\" cx=\"" << x << "\" cy=\"" << y
        << "\" r=\"2.5\"/>\n";
  }
  svg << "  <text x=\"" << margin_left - 8 << "\" y=\"" << margin_top + 8
      << "\" text-anchor=\"end\" class=\"tick\">" << format_number(max_g)
      << "</text>\n";
  svg << "  <text x=\"" << margin_left - 8 << "\" y=\"" << margin_top + plot_h
      << "\" text-anchor=\"end\" class=\"tick\">" << format_number(min_g)
      << "</text>\n";
  svg << "  <text x=\"" << margin_left << "\" y=\"" << margin_top + plot_h + 16
      << "\" text-anchor=\"middle\" class=\"tick\">" << format_number(min_t)
      << "</text>\n";
  svg << "  <text x=\"" << margin_left + plot_w << "\" y=\""
      << margin_top + plot_h + 16 << "\" text-anchor=\"middle\" class=\"tick\">"
      << format_number(max_t) << "</text>\n";
  svg << "  <text x=\"" << margin_left + plot_w / 2 << "\" y=\"" << height - 4
      << "\" text-anchor=\"middle\" class=\"axis\">baseline run total t "
      << "(seconds) vs improvement factor g</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace detail

// Marker the embedded machine-readable payload is wrapped in.
inline constexpr const char* html_payload_open =
    "<script type=\"application/json\" id=\"varbench-report-data\">";
inline constexpr const char* html_payload_close = "</script>";

inline json report_payload(const ReportData& data) {
  json scatter_rows = json::array();
  for (const auto& [t, g] : data.scatter)
    scatter_rows.push_back(json::array({t, g}));
  json size_rows = json::array();
  for (const auto& row : data.sizes) size_rows.push_back(row.to_json());
  return json{{"title", data.title},
              {"source", data.source},
              {"stats", data.stats.to_json()},
              {"peak_bucket", peak_bucket(data.stats)},
              {"scatter", scatter_rows},
              {"correlation_r",
               data.correlation_r ? json(*data.correlation_r) : json(nullptr)},
              {"code_sizes", size_rows}};
}

inline std::string render_html(const ReportData& data) {
  using detail::format_number;
  using detail::html_escape;

  const std::int64_t peak = peak_bucket(data.stats);
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n"
      << "<meta charset=\"utf-8\">\n"
      << "<title>" << html_escape(data.title) << "</title>\n"
      << "<style>\n"
         "body { font-family: system-ui, sans-serif; margin: 2rem auto; "
         "max-width: 60rem; color: #222; }\n"
         "h1 { font-size: 1.4rem; }\n"
         "h2 { font-size: 1.1rem; margin-top: 2rem; }\n"
         "table { border-collapse: collapse; }\n"
         "td, th { border: 1px solid #ccc; padding: 0.3rem 0.7rem; "
         "text-align: right; }\n"
         "th { background: #f2f2f2; }\n"
         "td.name, th.name { text-align: left; }\n"
         ".bar { fill: #4a78b8; }\n"
         ".dot { fill: #b8504a; opacity: 0.7; }\n"
         ".tick { font-size: 10px; fill: #555; }\n"
         ".axis { font-size: 11px; fill: #333; }\n"
         "figure { margin: 0; }\n"
         ".note { color: #666; font-size: 0.85rem; }\n"
         "</style>\n</head>\n<body>\n";

  out << "<h1>" << html_escape(data.title) << "</h1>\n";
  out << "<p class=\"note\">source: " << html_escape(data.source)
      << "</p>\n";

  out << "<h2>Summary</h2>\n<table>\n"
      << "<tr><th class=\"name\">measurements</th><td>" << data.stats.count
      << "</td></tr>\n"
      << "<tr><th class=\"name\">mean g</th><td>"
      << format_number(data.stats.mean) << "</td></tr>\n"
      << "<tr><th class=\"name\">std g</th><td>"
      << format_number(data.stats.std_dev) << "</td></tr>\n"
      << "<tr><th class=\"name\">min g</th><td>"
      << format_number(data.stats.min_g) << "</td></tr>\n"
      << "<tr><th class=\"name\">max g</th><td>"
      << format_number(data.stats.max_g) << "</td></tr>\n"
      << "<tr><th class=\"name\">peak bucket</th><td>" << peak
      << "</td></tr>\n";
  if (data.correlation_r.has_value()) {
    out << "<tr><th class=\"name\">pearson r (t vs g)</th><td>"
        << format_number(*data.correlation_r) << "</td></tr>\n";
  }
  out << "</table>\n";

  out << "<h2>Improvement-factor distribution</h2>\n"
      << "<figure id=\"bucket-chart\" data-peak-bucket=\"" << peak << "\">\n"
      << detail::render_bucket_chart(data.stats) << "</figure>\n";

  if (!data.scatter.empty()) {
    out << "<h2>Baseline runtime vs improvement factor</h2>\n"
        << "<figure id=\"scatter-chart\">\n"
        << detail::render_scatter_chart(data.scatter) << "</figure>\n";
  }

  if (!data.sizes.empty()) {
    out << "<h2>Code size</h2>\n<table>\n"
        << "<tr><th class=\"name\">baseline</th><th class=\"name\">candidate"
        << "</th><th>unit</th><th>baseline size</th><th>candidate size</th>"
        << "<th>delta</th><th>reference sizes</th></tr>\n";
    for (const auto& row : data.sizes) {
      out << "<tr><td class=\"name\">" << html_escape(row.baseline_id)
          << "</td><td class=\"name\">" << html_escape(row.candidate_id)
          << "</td><td>" << html_escape(row.size_unit) << "</td><td>"
          << row.baseline_size << "</td><td>" << row.candidate_size
          << "</td><td>" << row.delta << "</td><td>";
      if (row.reference_baseline && row.reference_candidate) {
        out << *row.reference_baseline << " / " << *row.reference_candidate;
      } else {
        out << "&mdash;";
      }
      out << "</td></tr>\n";
    }
    out << "</table>\n"
        << "<p class=\"note\">Reference sizes were recorded on the catalog's "
           "original host runtime and are informational; sizes here use the "
           "declared backend's unit.</p>\n";
  }

  out << html_payload_open << detail::script_safe_json(report_payload(data))
      << html_payload_close << "\n";
  out << "</body>\n</html>\n";
  return out.str();
}

// Recovers the machine-readable payload embedded in a rendered HTML
// report.
inline json parse_html_payload(const std::string& html) {
  const std::string open = html_payload_open;
  const auto begin = html.find(open);
  if (begin == std::string::npos)
    throw parse_error("html report: missing embedded payload block");
  const auto payload_begin = begin + open.size();
  const auto end = html.find(html_payload_close, payload_begin);
  if (end == std::string::npos)
    throw parse_error("html report: unterminated payload block");
  const std::string payload = html.substr(payload_begin, end - payload_begin);
  try {
    return json::parse(payload);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("html report payload: ") + e.what());
  }
}

}  // namespace varbench
