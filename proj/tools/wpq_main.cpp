// Command-line surface over the wpq C API: exact invariants, Turaev-Viro
// color sums, hyperbolic geometry, asymptotic expansion data, and the named
// verification suites. Emits RFC-4180 CSV or JSON; logs and the run manifest
// go to stderr in CSV mode and into the JSON document otherwise.
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpq.h"

using nlohmann::json;

namespace {

struct Manifest {
    std::string command;
    json parameters = json::object();
    std::string precision_mode = "auto";
    double started;
    json finish(double total_s) const {
        return json{{"command", command},
                    {"parameters", parameters},
                    {"precision_mode", precision_mode},
                    {"versions", {{"wpq", wpq_version()}, {"schema", 1}}},
                    {"timings", {{"total_s", total_s}}}};
    }
};

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string f17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int fail(wpq_status st) {
    std::fprintf(stderr, "error: %s\n", wpq_last_error());
    return (int)st;
}

wpq_precision parse_precision(const std::string& s) {
    if (s == "double") return WPQ_PREC_DOUBLE;
    if (s == "extended") return WPQ_PREC_EXTENDED;
    return WPQ_PREC_AUTO;
}

std::string default_precision() {
    const char* env = std::getenv("WPQ_PRECISION");
    return env ? std::string(env) : std::string("auto");
}

void emit(const std::string& format, const std::string& csv, const json& doc,
          const Manifest& mf, double t0) {
    json out = doc;
    out["manifest"] = mf.finish(now_s() - t0);
    if (format == "json") {
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::fputs(csv.c_str(), stdout);
        std::fprintf(stderr, "manifest: %s\n", out["manifest"].dump().c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants and hyperbolic data of Whitehead-link surgeries W(p,q)"};
    app.require_subcommand(1);

    long long p = 1, q = 1;
    int N = 5, color = 0, xgrid = 0;
    std::string method = "reduced", format = "csv", precision = default_precision();
    std::string suite;
    uint64_t seed = 2026;

    auto add_slope = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "surgery numerator")->required();
        cmd->add_option("--q", q, "surgery denominator (nonzero, coprime to p)")->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--precision", precision, "auto|double|extended (env WPQ_PRECISION)")
            ->check(CLI::IsMember({"auto", "double", "extended"}));
    };

    auto* ci = app.add_subcommand("invariant", "relative Reshetikhin-Turaev invariants");
    add_slope(ci);
    ci->add_option("--N", N, "level parameter, r = 2N+1")->required();
    ci->add_option("--color", color, "single color m (default: all 1..N)");
    ci->add_option("--method", method, "brute|reduced|both")
        ->check(CLI::IsMember({"brute", "reduced", "both"}));
    add_common(ci);

    auto* ct = app.add_subcommand("tv", "Turaev-Viro invariant color sum");
    add_slope(ct);
    ct->add_option("--N", N, "level parameter, r = 2N+1")->required();
    add_common(ct);

    auto* cg = app.add_subcommand("geometry", "hyperbolic Dehn filling data");
    add_slope(cg);
    add_common(cg);

    auto* ca = app.add_subcommand("asymptotics", "saddle data, expansion constants");
    add_slope(ca);
    ca->add_option("--N", N, "level used for the C_N phase and estimates");
    ca->add_option("--x-grid", xgrid, "sample zeta(p,q;x) at k+1 points on [0, 0.01]");
    add_common(ca);

    auto* cv = app.add_subcommand("verify", "named verification suites");
    cv->add_option("--suite", suite,
                   "oracle|identities|regions|hessian|volume|convergence|all")
        ->required();
    cv->add_option("--seed", seed, "seed for the randomized geometry suite");

    CLI11_PARSE(app, argc, argv);

    Manifest mf;
    mf.precision_mode = precision;
    const double t0 = now_s();
    const wpq_precision prec = parse_precision(precision);

    if (ci->parsed()) {
        mf.command = "invariant";
        mf.parameters = {{"p", p}, {"q", q}, {"N", N}, {"color", color}, {"method", method}};
        wpq_method m = method == "brute" ? WPQ_METHOD_BRUTE
                       : method == "both" ? WPQ_METHOD_BOTH
                                          : WPQ_METHOD_REDUCED;
        wpq_invariants* h = nullptr;
        wpq_status st = wpq_invariants_compute(p, q, N, color, m, prec, &h);
        if (st != WPQ_OK) return fail(st);
        const bool both = (m == WPQ_METHOD_BOTH);
        std::string csv = "m,re_jbar,im_jbar,re_j,im_j,abs_j,growth";
        if (both) csv += ",residual";
        csv += "\r\n";
        json rows = json::array();
        for (int32_t i = 0; i < wpq_invariants_rows(h); ++i) {
            int32_t mm;
            double br, bi, jr, ji, gr;
            wpq_invariants_row(h, i, &mm, &br, &bi, &jr, &ji, &gr);
            double aj = std::hypot(jr, ji);
            csv += std::to_string(mm) + "," + f17(br) + "," + f17(bi) + "," + f17(jr) + "," +
                   f17(ji) + "," + f17(aj) + "," + f17(gr);
            json row = {{"m", mm},          {"jbar", {br, bi}}, {"j", {jr, ji}},
                        {"abs_j", aj},      {"growth", gr}};
            if (both) {
                double res = wpq_invariants_residual(h, i);
                csv += "," + f17(res);
                row["residual"] = res;
            }
            csv += "\r\n";
            rows.push_back(row);
        }
        json doc = {{"slope", {{"p", p}, {"q", q}, {"N", N}}},
                    {"rows", rows},
                    {"extended_precision", (bool)wpq_invariants_extended(h)}};
        wpq_invariants_free(h);
        emit(format, csv, doc, mf, t0);
        return 0;
    }

    if (ct->parsed()) {
        mf.command = "tv";
        mf.parameters = {{"p", p}, {"q", q}, {"N", N}};
        wpq_tv* h = nullptr;
        wpq_status st = wpq_tv_compute(p, q, N, prec, &h);
        if (st != WPQ_OK) return fail(st);
        double mu2, total, growth;
        wpq_tv_totals(h, &mu2, &total, &growth);
        std::string csv = "m,jbar_sq,partial_total,partial_growth\r\n";
        json rows = json::array();
        double run = 0.0;
        const double M = N + 0.5, kPi = 3.14159265358979323846;
        for (int32_t i = 0; i < wpq_tv_colors(h); ++i) {
            double v;
            wpq_tv_color(h, i, &v);
            run += v;
            double part = mu2 * run;
            double pg = kPi / M * std::log(part);
            csv += std::to_string(i + 1) + "," + f17(v) + "," + f17(part) + "," + f17(pg) +
                   "\r\n";
            rows.push_back({{"m", i + 1}, {"jbar_sq", v}, {"partial_total", part},
                            {"partial_growth", pg}});
        }
        json doc = {{"slope", {{"p", p}, {"q", q}, {"N", N}}},
                    {"rows", rows},
                    {"mu_r_sq", mu2},
                    {"total", total},
                    {"growth", growth}};
        wpq_tv_free(h);
        emit(format, csv, doc, mf, t0);
        return 0;
    }

    if (cg->parsed()) {
        mf.command = "geometry";
        mf.parameters = {{"p", p}, {"q", q}};
        wpq_geometry* h = nullptr;
        wpq_status st = wpq_geometry_solve(p, q, &h);
        if (st != WPQ_OK) return fail(st);
        double vol, cs, bound;
        int32_t vac, member;
        wpq_geometry_vol_cs(h, &vol, &cs);
        wpq_vol_lower_bound(p, q, &bound, &vac);
        wpq_in_set_S(p, q, &member);
        const char* fields[] = {"z0", "u", "v", "gamma", "z1", "z2"};
        std::string csv = "field,re,im\r\n";
        json doc = {{"slope", {{"p", p}, {"q", q}}}};
        json rows = json::array();
        for (const char* f : fields) {
            double re, im;
            wpq_geometry_field(h, f, &re, &im);
            csv += std::string(f) + "," + f17(re) + "," + f17(im) + "\r\n";
            rows.push_back({{"field", f}, {"re", re}, {"im", im}});
        }
        csv += "vol," + f17(vol) + ",0\r\ncs," + f17(cs) + ",0\r\n";
        csv += "vol_lower_bound," + f17(bound) + ",0\r\n";
        csv += "in_set_S," + std::to_string(member) + ",0\r\n";
        doc["rows"] = rows;
        doc["vol"] = vol;
        doc["cs"] = cs;
        doc["vol_lower_bound"] = bound;
        doc["vol_lower_bound_vacuous"] = (bool)vac;
        doc["in_set_S"] = (bool)member;
        wpq_geometry_free(h);
        emit(format, csv, doc, mf, t0);
        return 0;
    }

    if (ca->parsed()) {
        mf.command = "asymptotics";
        mf.parameters = {{"p", p}, {"q", q}, {"N", N}, {"x_grid", xgrid}};
        wpq_asymptotics* h = nullptr;
        wpq_status st = wpq_asymptotics_solve(p, q, &h);
        if (st != WPQ_OK) return fail(st);
        std::string csv = "field,re,im\r\n";
        json doc = {{"slope", {{"p", p}, {"q", q}}}};
        json rows = json::array();
        for (const char* f : {"theta1", "theta2", "z1", "z2", "zeta", "omega", "H", "V11",
                              "V12", "V22"}) {
            double re, im;
            wpq_asymptotics_field(h, f, &re, &im);
            csv += std::string(f) + "," + f17(re) + "," + f17(im) + "\r\n";
            rows.push_back({{"field", f}, {"re", re}, {"im", im}});
        }
        double cre, cim, ratio, coeff, tvest, zxx;
        wpq_asymptotics_cn(h, N, &cre, &cim);
        csv += "cn_phase," + f17(cre) + "," + f17(cim) + "\r\n";
        rows.push_back({{"field", "cn_phase"}, {"re", cre}, {"im", cim}, {"N", N}});
        double jre, jim;
        wpq_asymptotics_J(h, N, &jre, &jim);
        csv += "asymptotic_J," + f17(jre) + "," + f17(jim) + "\r\n";
        rows.push_back({{"field", "asymptotic_J"}, {"re", jre}, {"im", jim}, {"N", N}});
        wpq_asymptotics_tv_ratio(h, &ratio);
        wpq_asymptotics_tv_coeff(h, &coeff);
        wpq_asymptotics_tv(h, N, &tvest);
        wpq_asymptotics_zeta_xx0(h, &zxx);
        csv += "tv_ratio," + f17(ratio) + ",0\r\n";
        csv += "tv_coefficient," + f17(coeff) + ",0\r\n";
        csv += "tv_estimate," + f17(tvest) + ",0\r\n";
        csv += "zeta_xx0," + f17(zxx) + ",0\r\n";
        doc["tv_ratio"] = ratio;
        doc["tv_coefficient"] = coeff;
        doc["tv_estimate"] = tvest;
        doc["zeta_xx0"] = zxx;
        json xs = json::array();
        int32_t outside = 0;
        for (int k = 0; k <= xgrid; ++k) {
            if (xgrid == 0) break;
            double x = 0.01 * (double)k / xgrid, re, im;
            st = wpq_asymptotics_zeta_x(h, x, &re, &im, &outside);
            if (st != WPQ_OK) return fail(st);
            csv += "zeta_x@" + f17(x) + "," + f17(re) + "," + f17(im) + "\r\n";
            xs.push_back({{"x", x}, {"zeta", {re, im}}});
        }
        doc["rows"] = rows;
        doc["zeta_of_x"] = xs;
        doc["outside_x_regime"] = (bool)outside;
        wpq_asymptotics_free(h);
        emit(format, csv, doc, mf, t0);
        return 0;
    }

    if (cv->parsed()) {
        mf.command = "verify";
        mf.parameters = {{"suite", suite}, {"seed", seed}};
        wpq_report* h = nullptr;
        wpq_status st = wpq_verify_run(suite.c_str(), seed, &h);
        if (st != WPQ_OK) return fail(st);
        int failed = 0;
        for (int32_t i = 0; i < wpq_report_count(h); ++i) {
            const char *name, *detail;
            int32_t pass;
            double measured, tol;
            wpq_report_line(h, i, &name, &pass, &measured, &tol, &detail);
            std::printf("[%s] %s  measured=%.3e tol=%.3e\n    %s\n", pass ? "PASS" : "FAIL",
                        name, measured, tol, detail);
            if (!pass) ++failed;
        }
        std::fprintf(stderr, "manifest: %s\n", mf.finish(now_s() - t0).dump().c_str());
        wpq_report_free(h);
        return failed ? 1 : 0;
    }

    return 0;
}
