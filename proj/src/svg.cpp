// Copyright 2026 The ethent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ethent/svg.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "ethent/format.hpp"

namespace ethent {

namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

std::string fixed2(double v) {
  std::array<char, 48> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::fixed, 2);
  return std::string(buf.data(), ec == std::errc{} ? end : buf.data());
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

double axis_value(double v, const AxisRange& axis) {
  return axis.log10 ? std::log10(v) : v;
}

std::vector<double> ticks(const AxisRange& axis) {
  std::vector<double> out;
  if (axis.log10) {
    for (double e = std::ceil(std::log10(axis.min)); e <= std::log10(axis.max) + 1e-9;
         e += 1.0) {
      out.push_back(std::pow(10.0, e));
    }
    return out;
  }
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    out.push_back(axis.min + (axis.max - axis.min) * i / kTicks);
  }
  return out;
}

std::string tick_label(double v, const AxisRange& axis) {
  if (axis.log10) return "1e" + std::to_string(static_cast<int>(std::lround(std::log10(v))));
  const double rounded = std::round(v * 1000.0) / 1000.0;
  return format_double(rounded == 0.0 ? 0.0 : rounded);
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label,
                 AxisRange x, AxisRange y)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)),
      x_(x),
      y_(y) {}

double SvgPlot::px(double x) const {
  const double lo = axis_value(x_.min, x_);
  const double hi = axis_value(x_.max, x_);
  const double span = hi > lo ? hi - lo : 1.0;
  return kLeft + (axis_value(x, x_) - lo) / span * (kWidth - kLeft - kRight);
}

double SvgPlot::py(double y) const {
  const double lo = axis_value(y_.min, y_);
  const double hi = axis_value(y_.max, y_);
  const double span = hi > lo ? hi - lo : 1.0;
  return kHeight - kBottom - (axis_value(y, y_) - lo) / span * (kHeight - kTop - kBottom);
}

void SvgPlot::band(std::span<const double> x, std::span<const double> lo,
                   std::span<const double> hi, const std::string& color,
                   double opacity) {
  std::string points;
  for (std::size_t i = 0; i < x.size(); ++i) {
    points += fixed2(px(x[i])) + "," + fixed2(py(hi[i])) + " ";
  }
  for (std::size_t i = x.size(); i-- > 0;) {
    points += fixed2(px(x[i])) + "," + fixed2(py(lo[i])) + " ";
  }
  body_.push_back("<polygon points=\"" + points + "\" fill=\"" + color +
                  "\" fill-opacity=\"" + fixed2(opacity) + "\" stroke=\"none\"/>");
}

void SvgPlot::line(std::span<const double> x, std::span<const double> y,
                   const std::string& color, const std::string& label) {
  std::string points;
  for (std::size_t i = 0; i < x.size(); ++i) {
    points += fixed2(px(x[i])) + "," + fixed2(py(y[i])) + " ";
  }
  body_.push_back("<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" +
                  color + "\" stroke-width=\"2\"/>");
  if (!label.empty()) legend_.emplace_back(label, color);
}

void SvgPlot::rect(double x0, double x1, double y0, double y1,
                   const std::string& color, double opacity) {
  const double left = px(x0);
  const double right = px(x1);
  const double top = py(y1);
  const double bottom = py(y0);
  body_.push_back("<rect x=\"" + fixed2(left) + "\" y=\"" + fixed2(top) +
                  "\" width=\"" + fixed2(right - left) + "\" height=\"" +
                  fixed2(bottom - top) + "\" fill=\"" + color +
                  "\" fill-opacity=\"" + fixed2(opacity) + "\" stroke=\"none\"/>");
}

void SvgPlot::marker(double x, double y, const std::string& color,
                     const std::string& label) {
  const std::string cx = fixed2(px(x));
  const std::string cy = fixed2(py(y));
  body_.push_back("<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"6\" fill=\"" +
                  color + "\" stroke=\"black\"/>");
  body_.push_back("<text x=\"" + fixed2(px(x) + 10.0) + "\" y=\"" +
                  fixed2(py(y) - 10.0) + "\" font-size=\"13\">" + escape(label) +
                  "</text>");
}

std::string SvgPlot::render() const {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
      "viewBox=\"0 0 800 600\" font-family=\"sans-serif\">\n"
      "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"18\">" +
         escape(title_) + "</text>\n";
  out += "<clipPath id=\"plot\"><rect x=\"" + fixed2(kLeft) + "\" y=\"" + fixed2(kTop) +
         "\" width=\"" + fixed2(kWidth - kLeft - kRight) + "\" height=\"" +
         fixed2(kHeight - kTop - kBottom) + "\"/></clipPath>\n<g clip-path=\"url(#plot)\">\n";
  for (const std::string& element : body_) out += element + "\n";
  out += "</g>\n";

  const double x_axis = kHeight - kBottom;
  out += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(x_axis) + "\" x2=\"" +
         fixed2(kWidth - kRight) + "\" y2=\"" + fixed2(x_axis) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(kTop) + "\" x2=\"" +
         fixed2(kLeft) + "\" y2=\"" + fixed2(x_axis) + "\" stroke=\"black\"/>\n";
  for (double t : ticks(x_)) {
    const std::string x = fixed2(px(t));
    out += "<line x1=\"" + x + "\" y1=\"" + fixed2(x_axis) + "\" x2=\"" + x +
           "\" y2=\"" + fixed2(x_axis + 5.0) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + x + "\" y=\"" + fixed2(x_axis + 20.0) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + tick_label(t, x_) + "</text>\n";
  }
  for (double t : ticks(y_)) {
    const std::string y = fixed2(py(t));
    out += "<line x1=\"" + fixed2(kLeft - 5.0) + "\" y1=\"" + y + "\" x2=\"" +
           fixed2(kLeft) + "\" y2=\"" + y + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fixed2(kLeft - 8.0) + "\" y=\"" + fixed2(py(t) + 4.0) +
           "\" text-anchor=\"end\" font-size=\"12\">" + tick_label(t, y_) + "</text>\n";
  }
  out += "<text x=\"" + fixed2(kLeft + (kWidth - kLeft - kRight) / 2) + "\" y=\"" +
         fixed2(kHeight - 25.0) + "\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(x_label_) + "</text>\n";
  out += "<text x=\"20\" y=\"" + fixed2(kTop + (kHeight - kTop - kBottom) / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
         fixed2(kTop + (kHeight - kTop - kBottom) / 2) + ")\">" + escape(y_label_) +
         "</text>\n";
  double legend_y = kTop + 15.0;
  for (const auto& [label, color] : legend_) {
    out += "<rect x=\"" + fixed2(kWidth - kRight - 190.0) + "\" y=\"" +
           fixed2(legend_y - 10.0) + "\" width=\"14\" height=\"10\" fill=\"" + color +
           "\"/>\n";
    out += "<text x=\"" + fixed2(kWidth - kRight - 170.0) + "\" y=\"" +
           fixed2(legend_y) + "\" font-size=\"13\">" + escape(label) + "</text>\n";
    legend_y += 18.0;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ethent
