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

#include "bilip/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bilip/errors.hpp"

namespace bilip {

using nlohmann::json;

PLCurve CurveFile::open_curve() const {
    if (kind != "open") throw DomainError("CurveFile: not an open curve");
    return PLCurve(breakpoints, points);
}

ClosedPLCurve CurveFile::closed_curve() const {
    if (kind != "closed") throw DomainError("CurveFile: not a closed curve");
    return ClosedPLCurve(breakpoints, points);
}

CurveFile to_curve_file(const PLCurve& curve, json metadata) {
    return {"open", curve.breakpoints(), curve.vertices(), std::move(metadata)};
}

CurveFile to_curve_file(const ClosedPLCurve& curve, json metadata) {
    return {"closed", curve.angles(), curve.vertices(), std::move(metadata)};
}

std::string serialize(const CurveFile& file) {
    json j;
    j["kind"] = file.kind;
    j["breakpoints"] = file.breakpoints;
    json pts = json::array();
    for (const auto& p : file.points) pts.push_back({p.x, p.y});
    j["points"] = std::move(pts);
    j["metadata"] = file.metadata;
    return j.dump(2) + "\n";
}

CurveFile parse_curve_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("curve file: ") + e.what());
    }
    CurveFile out;
    try {
        out.kind = j.at("kind").get<std::string>();
        out.breakpoints = j.at("breakpoints").get<std::vector<double>>();
        for (const auto& p : j.at("points")) {
            if (!p.is_array() || p.size() != 2)
                throw DomainError("curve file: field 'points' must hold [x, y] pairs");
            out.points.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        if (j.contains("metadata")) out.metadata = j.at("metadata");
    } catch (const json::exception& e) {
        throw DomainError(std::string("curve file: ") + e.what());
    }
    if (out.kind != "open" && out.kind != "closed")
        throw DomainError("curve file: field 'kind' must be \"open\" or \"closed\"");
    if (out.breakpoints.size() != out.points.size())
        throw DomainError("curve file: breakpoints and points must have equal length");
    return out;
}

CurveFile read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_file(buf.str());
}

void write_curve_file(const std::string& path, const CurveFile& file) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << serialize(file);
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

void fmt(std::ostringstream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    os << buf;
}

}  // namespace

std::string render_svg(const std::vector<CurveFile>& curves, int width, int height) {
    double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
    bool first = true;
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            if (first) {
                xlo = xhi = p.x;
                ylo = yhi = p.y;
                first = false;
            }
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
            ylo = std::min(ylo, p.y);
            yhi = std::max(yhi, p.y);
        }
    }
    const double mx = 0.05 * std::max(xhi - xlo, 1e-9);
    const double my = 0.05 * std::max(yhi - ylo, 1e-9);
    xlo -= mx;
    xhi += mx;
    ylo -= my;
    yhi += my;
    // flip y so the plane's orientation matches the picture
    const double ysum = ylo + yhi;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"";
    fmt(os, xlo);
    os << ' ';
    fmt(os, ylo);
    os << ' ';
    fmt(os, xhi - xlo);
    os << ' ';
    fmt(os, yhi - ylo);
    os << "\">\n";
    const double stroke = 0.004 * std::max(xhi - xlo, yhi - ylo);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
        os << "  <" << (c.kind == "closed" ? "polygon" : "polyline") << " points=\"";
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            if (k) os << ' ';
            fmt(os, c.points[k].x);
            os << ',';
            fmt(os, ysum - c.points[k].y);
        }
        os << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"";
        fmt(os, stroke);
        os << "\"/>\n";
        for (const auto& p : c.points) {
            os << "  <circle cx=\"";
            fmt(os, p.x);
            os << "\" cy=\"";
            fmt(os, ysum - p.y);
            os << "\" r=\"";
            fmt(os, 1.2 * stroke);
            os << "\" fill=\"" << color << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bilip
