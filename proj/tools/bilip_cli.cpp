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

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bilip/circle.hpp"
#include "bilip/errors.hpp"
#include "bilip/io.hpp"
#include "bilip/pipeline.hpp"
#include "bilip/testkit.hpp"
#include "bilip/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertification = 2;

// grid divisor: BILIP_GRID overrides the default 2048 subdivisions
double grid_divisions() {
    if (const char* env = std::getenv("BILIP_GRID")) {
        const double v = std::atof(env);
        if (v >= 2.0) return v;
    }
    return 2048.0;
}

json report_json(const bilip::BiLipReport& rep) {
    return json{{"lip_upper", rep.lip_upper},
                {"inv_lip_lower", rep.inv_lip_lower},
                {"constant", rep.inv_lip_lower > 0.0 ? rep.constant() : 0.0},
                {"witness_max", {rep.witness_max.p, rep.witness_max.q}},
                {"witness_min", {rep.witness_min.p, rep.witness_min.q}},
                {"grid_step", rep.grid_step}};
}

void emit(bool as_json, const json& record, const std::string& text) {
    if (as_json)
        std::cout << record.dump() << "\n";
    else
        std::cout << text;
}

struct VerifyArgs {
    std::string input;
    double L = 2.0;
    double grid = 0.0;  // absolute step; 0 = domain / BILIP_GRID
    double slack = 1e-6;
    bool as_json = false;
};

int cmd_verify(const VerifyArgs& a) {
    const bilip::CurveFile file = bilip::read_curve_file(a.input);
    bilip::CheckResult res;
    if (file.kind == "open") {
        const bilip::PLCurve c = file.open_curve();
        const double grid = a.grid > 0.0 ? a.grid : c.domain_length() / grid_divisions();
        res = bilip::check_bilip(c, a.L, grid, a.slack);
    } else {
        const bilip::ClosedPLCurve c = file.closed_curve();
        const double grid = a.grid > 0.0 ? a.grid : bilip::kTwoPi / grid_divisions();
        res = bilip::check_bilip_closed(c, a.L, grid, a.slack);
    }
    json rec = report_json(res.report);
    rec["cmd"] = "verify";
    rec["pass"] = res.pass;
    rec["L"] = a.L;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s: lip_upper=%.9g inv_lip_lower=%.9g witness_min=(%.9g, %.9g)\n",
                  res.pass ? "PASS" : "FAIL", res.report.lip_upper, res.report.inv_lip_lower,
                  res.report.witness_min.p, res.report.witness_min.q);
    emit(a.as_json, rec, buf);
    return res.pass ? kExitOk : kExitCertification;
}

struct ApproxArgs {
    std::string input, out;
    double L = 2.0;
    double eps = 0.25;
    bool dump_stages = false;
    bool as_json = false;
};

int cmd_approx(const ApproxArgs& a) {
    const bilip::CurveFile file = bilip::read_curve_file(a.input);
    const bilip::PLCurve c = file.open_curve();
    const bilip::ApproxResult res = bilip::approximate(c, a.L, a.eps);
    json meta{{"L", a.L},
              {"eps", a.eps},
              {"certified", res.certified},
              {"sup_distance", res.sup_dist},
              {"report", report_json(res.report)}};
    if (!a.out.empty()) bilip::write_curve_file(a.out, bilip::to_curve_file(res.output, meta));
    if (a.dump_stages && res.stages && !a.out.empty()) {
        const auto& st = *res.stages;
        bilip::write_curve_file(a.out + ".phi1.json", bilip::to_curve_file(st.phi1));
        bilip::write_curve_file(a.out + ".phi2.json", bilip::to_curve_file(st.phi2));
        bilip::write_curve_file(a.out + ".phi3.json", bilip::to_curve_file(st.phi3));
        bilip::write_curve_file(a.out + ".phi4.json", bilip::to_curve_file(st.phi4));
        json tc;
        if (st.tau) tc["tau"] = {{"knots", st.tau->knots()}, {"values", st.tau->values()}};
        if (st.tau_tilde)
            tc["tau_tilde"] = {{"knots", st.tau_tilde->knots()},
                               {"values", st.tau_tilde->values()}};
        tc["C"] = st.C;
        tc["C_prime"] = st.C_prime;
        std::ofstream(a.out + ".timechange.json") << tc.dump(2) << "\n";
    }
    json rec = meta;
    rec["cmd"] = "approx";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: sup_distance=%.9g constant=%.9g vertices=%zu\n",
                  res.certified ? "CERTIFIED" : "FAILED", res.sup_dist,
                  res.report.inv_lip_lower > 0 ? res.report.constant() : 0.0,
                  res.output.breakpoints().size());
    emit(a.as_json, rec, buf);
    if (!res.certified) {
        std::fprintf(stderr, "certification failed; witness_min=(%.12g, %.12g)\n",
                     res.report.witness_min.p, res.report.witness_min.q);
        return kExitCertification;
    }
    return kExitOk;
}

int cmd_approx_closed(const ApproxArgs& a) {
    const bilip::CurveFile file = bilip::read_curve_file(a.input);
    const bilip::ClosedPLCurve c = file.closed_curve();
    const bilip::ClosedApproxResult res = bilip::approximate_closed(c, a.L, a.eps);
    json meta{{"L", a.L},
              {"eps", a.eps},
              {"certified", res.certified},
              {"sup_distance", res.sup_dist},
              {"eps_prime", res.eps_prime},
              {"theta", res.theta},
              {"anchors", res.charts.size()},
              {"report", report_json(res.report)}};
    if (!a.out.empty()) bilip::write_curve_file(a.out, bilip::to_curve_file(res.output, meta));
    json rec = meta;
    rec["cmd"] = "approx-closed";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: sup_distance=%.9g constant=%.9g vertices=%zu\n",
                  res.certified ? "CERTIFIED" : "FAILED", res.sup_dist,
                  res.report.inv_lip_lower > 0 ? res.report.constant() : 0.0,
                  res.output.size());
    emit(a.as_json, rec, buf);
    if (!res.certified) {
        std::fprintf(stderr, "certification failed; witness_min=(%.12g, %.12g)\n",
                     res.report.witness_min.p, res.report.witness_min.q);
        return kExitCertification;
    }
    return kExitOk;
}

struct ShortenArgs {
    std::string input, out, trace;
    double a = 0.0, b = 1.0, L = 2.0;
    bool as_json = false;
};

int cmd_shorten(const ShortenArgs& a) {
    const bilip::CurveFile file = bilip::read_curve_file(a.input);
    const bilip::PLCurve c = file.open_curve();
    const double grid = c.domain_length() / grid_divisions();
    const bilip::ShortenResult res = bilip::shorten(c, a.a, a.b, a.L, grid);
    const bool ok = res.certificate.ok(a.L);
    json meta{{"a", a.a},
              {"b", a.b},
              {"L", a.L},
              {"b_prime", res.b_prime},
              {"fast", ok},
              {"speed_dev", res.certificate.speed_dev},
              {"mild_report", res.certificate.mild_report},
              {"accepted_steps", res.trace.accepted_count()}};
    if (!a.out.empty()) bilip::write_curve_file(a.out, bilip::to_curve_file(res.curve, meta));
    if (!a.trace.empty()) {
        json steps = json::array();
        for (const auto& it : res.trace.iterations)
            steps.push_back({{"r", it.r},
                             {"s", it.s},
                             {"s_plus", it.s_plus},
                             {"accepted", it.accepted},
                             {"b_prime_after", it.b_prime_after}});
        std::ofstream(a.trace) << json{{"iterations", steps},
                                       {"final_b_prime", res.trace.final_b_prime}}
                                      .dump(2)
                               << "\n";
    }
    json rec = meta;
    rec["cmd"] = "shorten";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: b_prime=%.12g accepted=%d\n", ok ? "FAST" : "NOT-FAST",
                  res.b_prime, res.trace.accepted_count());
    emit(a.as_json, rec, buf);
    return ok ? kExitOk : kExitCertification;
}

struct GenArgs {
    std::string out;
    std::uint64_t seed = 0;
    double L = 2.0;
    int n = 12;
    bool closed = false;
    bool as_json = false;
};

int cmd_gen(const GenArgs& a) {
    const bilip::GenSpec spec{a.seed, a.L, a.n, a.closed};
    json meta{{"seed", a.seed}, {"target_L", a.L}, {"vertex_count", a.n}};
    bilip::CurveFile file;
    if (a.closed) {
        const bilip::ClosedPLCurve c = bilip::gen_bilip_closed_curve(spec);
        meta["report"] = report_json(bilip::measure_closed(c, bilip::kTwoPi / grid_divisions()));
        file = bilip::to_curve_file(c, meta);
    } else {
        const bilip::PLCurve c = bilip::gen_bilip_curve(spec);
        const auto res =
            bilip::check_bilip(c, a.L, c.domain_length() / grid_divisions(), 0.0);
        meta["report"] = report_json(res.report);
        file = bilip::to_curve_file(c, meta);
    }
    if (!a.out.empty()) bilip::write_curve_file(a.out, file);
    json rec = meta;
    rec["cmd"] = "gen";
    char buf[128];
    std::snprintf(buf, sizeof buf, "generated %s curve with %zu vertices\n",
                  a.closed ? "closed" : "open", file.points.size());
    emit(a.as_json, rec, buf);
    return kExitOk;
}

struct RenderArgs {
    std::vector<std::string> inputs;
    std::string out;
    int width = 800, height = 600;
};

int cmd_render(const RenderArgs& a) {
    std::vector<bilip::CurveFile> files;
    for (const auto& path : a.inputs) files.push_back(bilip::read_curve_file(path));
    const std::string svg = bilip::render_svg(files, a.width, a.height);
    std::ofstream out(a.out);
    if (!out) throw bilip::DomainError("cannot write " + a.out);
    out << svg;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise-linear bi-Lipschitz curve approximation"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "measure and check a bi-Lipschitz constant");
    verify->add_option("input", va.input)->required();
    verify->add_option("--L", va.L)->required();
    verify->add_option("--grid", va.grid);
    verify->add_option("--slack", va.slack);
    verify->add_flag("--json", va.as_json);

    ApproxArgs aa;
    auto* approx = app.add_subcommand("approx", "approximate an open curve at L+eps");
    approx->add_option("input", aa.input)->required();
    approx->add_option("--L", aa.L)->required();
    approx->add_option("--eps", aa.eps)->required();
    approx->add_option("--out", aa.out);
    approx->add_flag("--dump-stages", aa.dump_stages);
    approx->add_flag("--json", aa.as_json);

    ApproxArgs ca;
    auto* aclosed = app.add_subcommand("approx-closed", "approximate a closed curve at L+eps");
    aclosed->add_option("input", ca.input)->required();
    aclosed->add_option("--L", ca.L)->required();
    aclosed->add_option("--eps", ca.eps)->required();
    aclosed->add_option("--out", ca.out);
    aclosed->add_flag("--json", ca.as_json);

    ShortenArgs sa;
    auto* shorten = app.add_subcommand("shorten", "speed-L shortening of one interval");
    shorten->add_option("input", sa.input)->required();
    shorten->add_option("--a", sa.a)->required();
    shorten->add_option("--b", sa.b)->required();
    shorten->add_option("--L", sa.L)->required();
    shorten->add_option("--out", sa.out);
    shorten->add_option("--trace", sa.trace);
    shorten->add_flag("--json", sa.as_json);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a seeded bi-Lipschitz test curve");
    gen->add_option("--seed", ga.seed);
    gen->add_option("--L", ga.L)->required();
    gen->add_option("--n", ga.n)->required();
    gen->add_flag("--closed", ga.closed);
    gen->add_option("--out", ga.out);
    gen->add_flag("--json", ga.as_json);

    RenderArgs ra;
    auto* render = app.add_subcommand("render", "render curves to SVG");
    render->add_option("inputs", ra.inputs)->required();
    render->add_option("--out", ra.out)->required();
    render->add_option("--width", ra.width);
    render->add_option("--height", ra.height);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(va);
        if (app.got_subcommand(approx)) return cmd_approx(aa);
        if (app.got_subcommand(aclosed)) return cmd_approx_closed(ca);
        if (app.got_subcommand(shorten)) return cmd_shorten(sa);
        if (app.got_subcommand(gen)) return cmd_gen(ga);
        if (app.got_subcommand(render)) return cmd_render(ra);
    } catch (const bilip::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
