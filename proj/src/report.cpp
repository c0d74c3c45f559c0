#include "horolab/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "horolab/errors.hpp"

namespace horolab {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void SuiteReport::add(CheckResult c) { checks.push_back(std::move(c)); }

void SuiteReport::constant(const std::string& name, const std::string& value,
                           const std::string& operation) {
  constants.push_back({name, value, operation});
}

ordered_json SuiteReport::to_json() const {
  ordered_json j;
  j["experiment"] = suite;
  j["seed"] = seed;
  j["params"] = params.is_null() ? ordered_json::object() : params;
  j["pass"] = pass();
  ordered_json cs = ordered_json::array();
  for (const auto& c : constants) {
    cs.push_back(ordered_json{{"name", c.name}, {"value", c.value}, {"operation", c.operation}});
  }
  j["measured_constants"] = cs;
  ordered_json ch = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["details"] = c.details.is_null() ? ordered_json::object() : c.details;
    e["timing_ms"] = c.ms;
    ch.push_back(std::move(e));
  }
  j["checks"] = ch;
  j["timing_ms"] = total_ms;
  return j;
}

std::string SuiteReport::checks_csv() const {
  std::ostringstream out;
  out << "check,pass,timing_ms\n";
  for (const auto& c : checks) out << c.name << "," << (c.pass ? 1 : 0) << "," << c.ms << "\n";
  return out.str();
}

std::string SuiteReport::constants_csv() const {
  std::ostringstream out;
  out << "name,value,operation\n";
  for (const auto& c : constants) out << c.name << "," << c.value << "," << c.operation << "\n";
  return out.str();
}

ordered_json strip_timing(const ordered_json& j) {
  if (j.is_object()) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : j.items()) {
      if (key == "timing_ms") continue;
      out[key] = strip_timing(value);
    }
    return out;
  }
  if (j.is_array()) {
    ordered_json out = ordered_json::array();
    for (const auto& value : j) out.push_back(strip_timing(value));
    return out;
  }
  return j;
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::ms() const {
  long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count();
  return static_cast<double>(now - start_ns_) / 1e6;
}

namespace {

constexpr int kW = 640, kH = 400, kPad = 56;

std::string svg_header(const std::string& title) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
      << "</text>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(errc::io_failure, "cannot write " + path);
  out << content;
}

}  // namespace

void write_line_chart_svg(const std::string& path, const std::string& title,
                          const std::string& xlabel, const std::string& ylabel,
                          const std::vector<SeriesPoint>& points) {
  std::ostringstream out;
  out << svg_header(title);
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!points.empty()) {
    xmin = xmax = points[0].x;
    ymin = ymax = points[0].y;
    for (const auto& p : points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  auto px = [&](double x) { return kPad + (x - xmin) / (xmax - xmin) * (kW - 2 * kPad); };
  auto py = [&](double y) { return kH - kPad - (y - ymin) / (ymax - ymin) * (kH - 2 * kPad); };

  out << "<line x1=\"" << kPad << "\" y1=\"" << kH - kPad << "\" x2=\"" << kW - kPad << "\" y2=\""
      << kH - kPad << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad << "\" y2=\""
      << kH - kPad << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12 << "\" text-anchor=\"middle\" font-size=\"12\">"
      << xlabel << "</text>\n";
  out << "<text x=\"16\" y=\"" << kH / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 "
      << kH / 2 << ")\" text-anchor=\"middle\">" << ylabel << "</text>\n";
  out << "<text x=\"" << kPad << "\" y=\"" << kH - kPad + 16 << "\" font-size=\"10\">" << xmin
      << "</text>\n";
  out << "<text x=\"" << kW - kPad << "\" y=\"" << kH - kPad + 16
      << "\" font-size=\"10\" text-anchor=\"end\">" << xmax << "</text>\n";
  out << "<text x=\"" << kPad - 4 << "\" y=\"" << kH - kPad << "\" font-size=\"10\" text-anchor=\"end\">"
      << ymin << "</text>\n";
  out << "<text x=\"" << kPad - 4 << "\" y=\"" << kPad + 4
      << "\" font-size=\"10\" text-anchor=\"end\">" << ymax << "</text>\n";

  if (!points.empty()) {
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& p : points) out << px(p.x) << "," << py(p.y) << " ";
    out << "\"/>\n";
    for (const auto& p : points)
      out << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y)
          << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  out << "</svg>\n";
  write_file(path, out.str());
}

void write_histogram_svg(const std::string& path, const std::string& title,
                         const std::string& xlabel, const std::vector<long long>& counts) {
  std::ostringstream out;
  out << svg_header(title);
  long long top = 1;
  for (long long c : counts) top = std::max(top, c);
  std::size_t n = std::max<std::size_t>(counts.size(), 1);
  double bar_w = static_cast<double>(kW - 2 * kPad) / static_cast<double>(n);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double h = static_cast<double>(counts[i]) / static_cast<double>(top) * (kH - 2 * kPad);
    out << "<rect x=\"" << kPad + bar_w * static_cast<double>(i) << "\" y=\"" << kH - kPad - h
        << "\" width=\"" << bar_w * 0.9 << "\" height=\"" << h << "\" fill=\"steelblue\"/>\n";
    out << "<text x=\"" << kPad + bar_w * (static_cast<double>(i) + 0.45) << "\" y=\""
        << kH - kPad + 14 << "\" font-size=\"10\" text-anchor=\"middle\">" << i << "</text>\n";
  }
  out << "<line x1=\"" << kPad << "\" y1=\"" << kH - kPad << "\" x2=\"" << kW - kPad << "\" y2=\""
      << kH - kPad << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12 << "\" text-anchor=\"middle\" font-size=\"12\">"
      << xlabel << "</text>\n";
  out << "</svg>\n";
  write_file(path, out.str());
}

}  // namespace horolab
