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

#pragma once

// Minimal static SVG charts with a fixed 800x600 viewport.

#include <span>
#include <string>
#include <vector>

namespace ethent {

struct AxisRange {
  double min = 0.0;
  double max = 1.0;
  bool log10 = false;
};

class SvgPlot {
 public:
  static constexpr double kWidth = 800.0;
  static constexpr double kHeight = 600.0;

  SvgPlot(std::string title, std::string x_label, std::string y_label,
          AxisRange x, AxisRange y);

  /// Filled region between `lo` and `hi` over `x`.
  void band(std::span<const double> x, std::span<const double> lo,
            std::span<const double> hi, const std::string& color, double opacity);
  void line(std::span<const double> x, std::span<const double> y,
            const std::string& color, const std::string& label = {});
  /// Axis-aligned rectangle in data coordinates.
  void rect(double x0, double x1, double y0, double y1, const std::string& color,
            double opacity);
  void marker(double x, double y, const std::string& color, const std::string& label);

  std::string render() const;

 private:
  double px(double x) const;
  double py(double y) const;

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  AxisRange x_;
  AxisRange y_;
  std::vector<std::string> body_;
  std::vector<std::pair<std::string, std::string>> legend_;
};

}  // namespace ethent
