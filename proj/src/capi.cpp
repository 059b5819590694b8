#include "wpq.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "invariants.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

wpq_status set_error(const wpq::Error& e) {
    g_last_error = e.what();
    return (wpq_status)(int)e.kind();
}

wpq_status set_error(const std::exception& e) {
    g_last_error = e.what();
    return WPQ_ERROR;
}

template <class F>
wpq_status guarded(F&& f) {
    try {
        f();
        return WPQ_OK;
    } catch (const wpq::Error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        return set_error(e);
    }
}

wpq::InvariantOptions options_for(wpq_precision prec) {
    wpq::InvariantOptions opt;
    switch (prec) {
        case WPQ_PREC_DOUBLE: opt.precision = wpq::Precision::Double; break;
        case WPQ_PREC_EXTENDED: opt.precision = wpq::Precision::Extended; break;
        default: opt.precision = wpq::Precision::Auto; break;
    }
    return opt;
}

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

extern "C" {

struct wpq_invariants {
    wpq::InvariantResult result;
    std::vector<double> residual;  // per row, -1 when n/a
    double M;
};

struct wpq_tv {
    wpq::TVSeries tv;
    double M;
};

struct wpq_geometry {
    wpq::HyperbolicSolution sol;
};

struct wpq_asymptotics {
    wpq::AsymptoticProfile prof;
};

struct wpq_report {
    std::vector<wpq::verify::CheckResult> lines;
};

const char* wpq_version(void) { return "0.1.0"; }
const char* wpq_last_error(void) { return g_last_error.c_str(); }

wpq_status wpq_invariants_compute(int64_t p, int64_t q, int32_t N, int32_t color,
                                  wpq_method method, wpq_precision prec, wpq_invariants** out) {
    if (!out) return WPQ_DOMAIN_ERROR;
    *out = nullptr;
    return guarded([&] {
        auto sc = wpq::surgery_data(p, q);
        auto lv = wpq::make_level(N);
        auto opt = options_for(prec);
        auto h = std::make_unique<wpq_invariants>();
        h->M = lv.M();
        switch (method) {
            case WPQ_METHOD_BRUTE:
                h->result = wpq::rt_bruteforce(sc, lv, color, opt);
                h->residual.assign(h->result.samples.size(), -1.0);
                break;
            case WPQ_METHOD_BOTH: {
                auto red = wpq::rt_reduced(sc, lv, color, opt);
                auto bru = wpq::rt_bruteforce(sc, lv, color, opt);
                h->result = red;
                h->residual.resize(red.samples.size());
                for (size_t i = 0; i < red.samples.size(); ++i) {
                    double den = std::max(std::abs(red.samples[i].j_norm),
                                          std::abs(bru.samples[i].j_norm));
                    h->residual[i] =
                        den > 0.0
                            ? std::abs(red.samples[i].j_norm - bru.samples[i].j_norm) / den
                            : 0.0;
                }
                break;
            }
            case WPQ_METHOD_REDUCED:
            default:
                h->result = wpq::rt_reduced(sc, lv, color, opt);
                h->residual.assign(h->result.samples.size(), -1.0);
                break;
        }
        *out = h.release();
    });
}

int32_t wpq_invariants_rows(const wpq_invariants* h) {
    return h ? (int32_t)h->result.samples.size() : 0;
}

wpq_status wpq_invariants_row(const wpq_invariants* h, int32_t idx, int32_t* m, double* jbar_re,
                              double* jbar_im, double* j_re, double* j_im, double* growth) {
    if (!h || idx < 0 || idx >= (int32_t)h->result.samples.size()) {
        g_last_error = "wpq_invariants_row: index out of range";
        return WPQ_DOMAIN_ERROR;
    }
    const auto& s = h->result.samples[idx];
    if (m) *m = s.m;
    if (jbar_re) *jbar_re = s.j_bar.real();
    if (jbar_im) *jbar_im = s.j_bar.imag();
    if (j_re) *j_re = s.j_norm.real();
    if (j_im) *j_im = s.j_norm.imag();
    if (growth) *growth = 2.0 * kPi / h->M * std::log(std::abs(s.j_norm));
    return WPQ_OK;
}

double wpq_invariants_residual(const wpq_invariants* h, int32_t idx) {
    if (!h || idx < 0 || idx >= (int32_t)h->residual.size()) return -1.0;
    return h->residual[idx];
}

int32_t wpq_invariants_extended(const wpq_invariants* h) {
    return h && h->result.used == wpq::Precision::Extended ? 1 : 0;
}

void wpq_invariants_free(wpq_invariants* h) { delete h; }

wpq_status wpq_tv_compute(int64_t p, int64_t q, int32_t N, wpq_precision prec, wpq_tv** out) {
    if (!out) return WPQ_DOMAIN_ERROR;
    *out = nullptr;
    return guarded([&] {
        auto sc = wpq::surgery_data(p, q);
        auto lv = wpq::make_level(N);
        auto h = std::make_unique<wpq_tv>();
        h->tv = wpq::turaev_viro(sc, lv, options_for(prec));
        h->M = lv.M();
        *out = h.release();
    });
}

int32_t wpq_tv_colors(const wpq_tv* h) { return h ? (int32_t)h->tv.per_color.size() : 0; }

wpq_status wpq_tv_color(const wpq_tv* h, int32_t idx, double* jbar_sq) {
    if (!h || idx < 0 || idx >= (int32_t)h->tv.per_color.size()) {
        g_last_error = "wpq_tv_color: index out of range";
        return WPQ_DOMAIN_ERROR;
    }
    if (jbar_sq) *jbar_sq = h->tv.per_color[idx];
    return WPQ_OK;
}

wpq_status wpq_tv_totals(const wpq_tv* h, double* mu_r_sq, double* total, double* growth) {
    if (!h) return WPQ_DOMAIN_ERROR;
    if (mu_r_sq) *mu_r_sq = h->tv.mu_r_sq;
    if (total) *total = h->tv.total;
    if (growth) *growth = kPi / h->M * std::log(h->tv.total);
    return WPQ_OK;
}

void wpq_tv_free(wpq_tv* h) { delete h; }

wpq_status wpq_geometry_solve(int64_t p, int64_t q, wpq_geometry** out) {
    if (!out) return WPQ_DOMAIN_ERROR;
    *out = nullptr;
    return guarded([&] {
        auto h = std::make_unique<wpq_geometry>();
        h->sol = wpq::solve_filling(p, q);
        *out = h.release();
    });
}

wpq_status wpq_geometry_field(const wpq_geometry* h, const char* name, double* re, double* im) {
    if (!h || !name) return WPQ_DOMAIN_ERROR;
    wpq::cplx v;
    if (!std::strcmp(name, "z0")) v = h->sol.z0;
    else if (!std::strcmp(name, "u")) v = h->sol.u;
    else if (!std::strcmp(name, "v")) v = h->sol.v;
    else if (!std::strcmp(name, "gamma")) v = h->sol.gamma;
    else if (!std::strcmp(name, "z1")) v = h->sol.z1;
    else if (!std::strcmp(name, "z2")) v = h->sol.z2;
    else {
        g_last_error = std::string("wpq_geometry_field: unknown field '") + name + "'";
        return WPQ_DOMAIN_ERROR;
    }
    if (re) *re = v.real();
    if (im) *im = v.imag();
    return WPQ_OK;
}

wpq_status wpq_geometry_vol_cs(const wpq_geometry* h, double* vol, double* cs) {
    if (!h) return WPQ_DOMAIN_ERROR;
    if (vol) *vol = h->sol.vol;
    if (cs) *cs = h->sol.cs;
    return WPQ_OK;
}

void wpq_geometry_free(wpq_geometry* h) { delete h; }

wpq_status wpq_vol_lower_bound(int64_t p, int64_t q, double* bound, int32_t* vacuous) {
    return guarded([&] {
        bool vac = false;
        double b = wpq::vol_lower_bound(p, q, &vac);
        if (bound) *bound = b;
        if (vacuous) *vacuous = vac ? 1 : 0;
    });
}

wpq_status wpq_in_set_S(int64_t p, int64_t q, int32_t* member) {
    return guarded([&] {
        bool m = wpq::in_set_S(p, q);
        if (member) *member = m ? 1 : 0;
    });
}

double wpq_whitehead_volume(void) { return wpq::whitehead_volume(); }

wpq_status wpq_asymptotics_solve(int64_t p, int64_t q, wpq_asymptotics** out) {
    if (!out) return WPQ_DOMAIN_ERROR;
    *out = nullptr;
    return guarded([&] {
        auto h = std::make_unique<wpq_asymptotics>();
        h->prof = wpq::solve_critical(p, q);
        *out = h.release();
    });
}

wpq_status wpq_asymptotics_field(const wpq_asymptotics* h, const char* name, double* re,
                                 double* im) {
    if (!h || !name) return WPQ_DOMAIN_ERROR;
    wpq::cplx v;
    if (!std::strcmp(name, "theta1")) v = h->prof.theta1;
    else if (!std::strcmp(name, "theta2")) v = h->prof.theta2;
    else if (!std::strcmp(name, "z1")) v = h->prof.z1;
    else if (!std::strcmp(name, "z2")) v = h->prof.z2;
    else if (!std::strcmp(name, "zeta")) v = h->prof.zeta;
    else if (!std::strcmp(name, "omega")) v = h->prof.omega;
    else if (!std::strcmp(name, "H")) v = h->prof.H;
    else if (!std::strcmp(name, "V11")) v = h->prof.hessV[0];
    else if (!std::strcmp(name, "V12")) v = h->prof.hessV[1];
    else if (!std::strcmp(name, "V22")) v = h->prof.hessV[2];
    else {
        g_last_error = std::string("wpq_asymptotics_field: unknown field '") + name + "'";
        return WPQ_DOMAIN_ERROR;
    }
    if (re) *re = v.real();
    if (im) *im = v.imag();
    return WPQ_OK;
}

wpq_status wpq_asymptotics_cn(const wpq_asymptotics* h, int32_t N, double* re, double* im) {
    if (!h) return WPQ_DOMAIN_ERROR;
    return guarded([&] {
        auto lv = wpq::make_level(N);
        wpq::cplx c = wpq::cn_phase(h->prof.sc, lv);
        if (re) *re = c.real();
        if (im) *im = c.imag();
    });
}

wpq_status wpq_asymptotics_J(const wpq_asymptotics* h, int32_t N, double* re, double* im) {
    if (!h) return WPQ_DOMAIN_ERROR;
    return guarded([&] {
        auto lv = wpq::make_level(N);
        wpq::cplx v = wpq::asymptotic_J(h->prof, lv);
        if (re) *re = v.real();
        if (im) *im = v.imag();
    });
}

wpq_status wpq_asymptotics_tv_ratio(const wpq_asymptotics* h, double* ratio) {
    if (!h) return WPQ_DOMAIN_ERROR;
    return guarded([&] {
        double v = wpq::tv_ratio(h->prof);
        if (ratio) *ratio = v;
    });
}

wpq_status wpq_asymptotics_tv_coeff(const wpq_asymptotics* h, double* coeff) {
    if (!h) return WPQ_DOMAIN_ERROR;
    return guarded([&] {
        double c = wpq::tv_asymptotic_coefficient(h->prof);
        if (coeff) *coeff = c;
    });
}

wpq_status wpq_asymptotics_tv(const wpq_asymptotics* h, int32_t N, double* value) {
    if (!h) return WPQ_DOMAIN_ERROR;
    return guarded([&] {
        auto lv = wpq::make_level(N);
        double v = wpq::tv_asymptotic(h->prof, lv);
        if (value) *value = v;
    });
}

wpq_status wpq_asymptotics_zeta_x(const wpq_asymptotics* h, double x, double* re, double* im,
                                  int32_t* outside_regime) {
    if (!h) return WPQ_DOMAIN_ERROR;
    return guarded([&] {
        auto cx = wpq::critical_x(h->prof, x);
        if (re) *re = cx.zeta.real();
        if (im) *im = cx.zeta.imag();
        if (outside_regime) *outside_regime = h->prof.outside_x_regime ? 1 : 0;
    });
}

wpq_status wpq_asymptotics_zeta_xx0(const wpq_asymptotics* h, double* value) {
    if (!h) return WPQ_DOMAIN_ERROR;
    if (value) *value = h->prof.zeta_xx0;
    return WPQ_OK;
}

void wpq_asymptotics_free(wpq_asymptotics* h) { delete h; }

wpq_status wpq_verify_run(const char* suite, uint64_t seed, wpq_report** out) {
    if (!out || !suite) return WPQ_DOMAIN_ERROR;
    *out = nullptr;
    return guarded([&] {
        auto h = std::make_unique<wpq_report>();
        h->lines = wpq::verify::run_suite(suite, seed);
        *out = h.release();
    });
}

int32_t wpq_report_count(const wpq_report* h) { return h ? (int32_t)h->lines.size() : 0; }

wpq_status wpq_report_line(const wpq_report* h, int32_t idx, const char** name, int32_t* passed,
                           double* measured, double* tolerance, const char** detail) {
    if (!h || idx < 0 || idx >= (int32_t)h->lines.size()) {
        g_last_error = "wpq_report_line: index out of range";
        return WPQ_DOMAIN_ERROR;
    }
    const auto& ln = h->lines[idx];
    if (name) *name = ln.name.c_str();
    if (passed) *passed = ln.pass ? 1 : 0;
    if (measured) *measured = ln.measured;
    if (tolerance) *tolerance = ln.tolerance;
    if (detail) *detail = ln.detail.c_str();
    return WPQ_OK;
}

void wpq_report_free(wpq_report* h) { delete h; }

}  // extern "C"
