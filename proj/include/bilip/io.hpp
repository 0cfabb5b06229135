// Copyright 2026 The bilip Authors
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

#ifndef BILIP_IO_HPP
#define BILIP_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "bilip/closed_curve.hpp"
#include "bilip/curve.hpp"

namespace bilip {

/// On-disk curve record. Numbers survive a round trip bit for bit (shortest
/// round-trip decimals).
struct CurveFile {
    std::string kind;  // "open" | "closed"
    std::vector<double> breakpoints;
    std::vector<Point2> points;
    nlohmann::json metadata = nlohmann::json::object();

    PLCurve open_curve() const;
    ClosedPLCurve closed_curve() const;
};

CurveFile to_curve_file(const PLCurve& curve,
                        nlohmann::json metadata = nlohmann::json::object());
CurveFile to_curve_file(const ClosedPLCurve& curve,
                        nlohmann::json metadata = nlohmann::json::object());

std::string serialize(const CurveFile& file);
CurveFile parse_curve_file(const std::string& text);

CurveFile read_curve_file(const std::string& path);
void write_curve_file(const std::string& path, const CurveFile& file);

/// Overlaid polylines with vertex markers, one color per input, in a fixed
/// viewBox computed from the joint bounding box with a 5% margin.
std::string render_svg(const std::vector<CurveFile>& curves, int width, int height);

}  // namespace bilip

#endif  // BILIP_IO_HPP
