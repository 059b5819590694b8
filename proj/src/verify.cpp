#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "asymptotics.hpp"
#include "invariants.hpp"

namespace wpq::verify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const cplx kI{0.0, 1.0};

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

cplx E2(cplx th) { return std::exp(2.0 * kPi * kI * th); }

// reduce x modulo m into (-m/2, m/2]
double reduce_mod(double x, double m) {
    double y = std::fmod(x, m);
    if (y > 0.5 * m) y -= m;
    if (y <= -0.5 * m) y += m;
    return y;
}

// |(2 pi / M) Log J - 2 pi zeta| with the imaginary part compared modulo
// pi^2 (the CS ambiguity) and modulo 4 pi^2 / M (the principal-arg ambiguity
// of Log J scaled by 2 pi / M)
double growth_gap(cplx J, cplx zeta, double M) {
    const double re = (2.0 * kPi / M) * std::log(std::abs(J)) - 2.0 * kPi * zeta.real();
    const double d0 = (2.0 * kPi / M) * std::arg(J) - 2.0 * kPi * zeta.imag();
    double best = 1e300;
    for (int b = -4; b <= 4; ++b)
        best = std::min(best, std::fabs(reduce_mod(d0 + b * kPi * kPi, 4.0 * kPi * kPi / M)));
    return std::hypot(re, best);
}

CheckResult criterion_oracle() {
    CheckResult cr;
    cr.name = "1 oracle equivalence rt_reduced == rt_bruteforce";
    cr.tolerance = 1e-9;
    const double t0 = now_s();
    double worst = 0.0;
    for (auto [p, q] : {std::pair<long long, long long>{1, 1}, {5, 2}, {1, -2}, {3, 5}}) {
        auto sc = surgery_data(p, q);
        for (int N = 3; N <= 12; ++N) {
            auto lv = make_level(N);
            auto brute = rt_bruteforce(sc, lv);
            auto red = rt_reduced(sc, lv);
            double scale = 0.0;
            for (const auto& s : brute.samples) scale = std::max(scale, std::abs(s.j_norm));
            for (size_t i = 0; i < brute.samples.size(); ++i) {
                cplx a = brute.samples[i].j_norm, b = red.samples[i].j_norm;
                // identically vanishing colors (certain congruence classes)
                // sit at the double-precision noise floor of the brute-force
                // sum; they are compared absolutely at the table scale
                if (std::max(std::abs(a), std::abs(b)) < 1e-10 * scale) {
                    worst = std::max(worst, std::abs(a - b) / scale);
                    continue;
                }
                worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
            }
        }
    }
    const double dt = now_s() - t0;
    cr.measured = worst;
    cr.pass = worst < cr.tolerance && dt < 60.0;
    cr.detail = "worst rel err " + fmt(worst) + ", runtime " + fmt(dt) + " s (limit 60)";
    return cr;
}

CheckResult criterion_gauss() {
    CheckResult cr;
    cr.name = "2 gauss sum closed form vs direct summation";
    cr.tolerance = 1e-10;
    double worst = 0.0;
    for (auto [p, q] : {std::pair<long long, long long>{5, 2}, {1, -2}, {3, 5}, {7, 3},
                        {7, 1}, {4, -1}, {133, 62}, {-32, 17}}) {
        auto sc = surgery_data(p, q);
        for (int N = 2; N <= 6; ++N) {  // r in {5,...,13}
            auto lv = make_level(N);
            for (long long nl = 1; nl <= 2 * N; ++nl)
                worst = std::max(worst,
                                 std::abs(gauss_sum_S(nl, lv, sc) - gauss_sum_direct(nl, lv, sc)));
        }
    }
    cr.measured = worst;
    cr.pass = worst < cr.tolerance;
    cr.detail = "worst abs err " + fmt(worst) + " over l in {1,2,3}, r in {5..13}";
    return cr;
}

CheckResult criterion_example51() {
    CheckResult cr;
    cr.name = "3 reference values at (1,-2): critical point, 2 pi zeta";
    cr.tolerance = 1e-6;
    const double t0 = now_s();
    auto prof = solve_critical(1, -2);
    auto sol = solve_filling(1, -2);
    double w8 = 0.0;  // reference-digit checks
    w8 = std::max(w8, std::abs(prof.theta1 - cplx(-0.1038205182, 0.1790172070)));
    w8 = std::max(w8, std::abs(prof.theta2 - cplx(0.1308066000, 0.09218763785)));
    w8 = std::max(w8, std::abs(prof.z1 - cplx(0.2580453976, -0.19711501)));
    w8 = std::max(w8, std::abs(prof.z2 - cplx(0.3814962624, 0.4104006092)));
    w8 = std::max(w8, std::abs(sol.z0 - cplx(-0.6623589786, -0.5622795125)));
    cplx tpz = 2.0 * kPi * prof.zeta;
    double dre = std::fabs(tpz.real() - 2.828122086);
    double dim = std::fabs(reduce_mod(tpz.imag() - 6.845476024, kPi * kPi));
    const double dt = now_s() - t0;
    cr.measured = std::max({dre, dim});
    cr.pass = w8 < 1e-7 && dre < 1e-6 && dim < 1e-6 && dt < 1.0;
    cr.detail = "digits err " + fmt(w8) + ", 2 pi zeta err (" + fmt(dre) + ", " + fmt(dim) +
                " mod pi^2), runtime " + fmt(dt) + " s";
    return cr;
}

CheckResult criterion_example77() {
    CheckResult cr;
    cr.name = "4 reference values at (1,1): z2, TV coefficient";
    cr.tolerance = 1e-8;
    auto prof = solve_critical(1, 1);
    double dz2 = std::abs(prof.z2 - cplx(0.5, std::sqrt(3.0) / 2.0));
    cplx sarg = kPi * prof.theta1 - kPi;  // J(s+) = 1 at (1,1)
    double coeff = std::abs(std::sin(sarg) * std::sin(sarg) /
                            ((1.0 - prof.z2 * prof.z2) * prof.H));
    double dcoeff = std::fabs(coeff - 1.0 / (2.0 * std::sqrt(3.0)));
    double full = tv_asymptotic_coefficient(prof);
    double expect = 1.0 / (std::sqrt(2.0) * std::pow(3.0, 0.75));
    double dfull = std::fabs(full / expect - 1.0);
    cr.measured = std::max({dz2, dcoeff, dfull});
    cr.pass = dz2 < 1e-10 && dcoeff < 1e-8 && dfull < 1e-8;
    cr.detail = "z2 err " + fmt(dz2) + ", |sin^2/((1-z2^2)H)| err " + fmt(dcoeff) +
                ", full coefficient rel err " + fmt(dfull);
    return cr;
}

CheckResult criterion_constants() {
    CheckResult cr;
    cr.name = "5 region/appendix constants at c0 = 0.122532";
    cr.tolerance = 1e-6;
    const double c0 = 0.122532;
    double v1 = 2.0 * kPi * region_v(c0, 0.5 - c0);
    double d1 = std::fabs(v1 - 3.3744816);
    auto sc = surgery_data(1, 1);
    cplx th2 = theta2_of_c(c0);
    double v2 = 2.0 * kPi * potential_Vpm(sc, +1, cplx(c0), th2).real();
    double d2 = std::fabs(v2 - 3.3744812);
    double d3 = std::abs(th2 - cplx(0.1946407106, 0.1185471546));
    cr.measured = d3;
    cr.pass = d1 < 1e-6 && d2 < 1e-6 && d3 < 1e-8;
    cr.detail = "2 pi v(c0,1/2-c0) err " + fmt(d1) + ", 2 pi Re V+ err " + fmt(d2) +
                ", theta2(c0) vs reference digits err " + fmt(d3) +
                (d3 >= 1e-8 ? " [the reference digits satisfy the critical equation at"
                              " c = 0.122552, not at c0 = 0.122532 (digit transposition"
                              " upstream); theta2_of_c(c0) is exact to machine precision]"
                            : "");
    return cr;
}

CheckResult criterion_volume_convergence() {
    CheckResult cr;
    cr.name = "6 volume-conjecture convergence at (5,2)";
    auto prof = solve_critical(5, 2);
    auto sc = prof.sc;
    InvariantOptions opt;
    opt.precision = Precision::Extended;
    std::vector<double> E;
    for (int N : {51, 101, 201}) {
        auto lv = make_level(N);
        cplx J = rt_reduced(sc, lv, N, opt).samples[0].j_norm;
        E.push_back(growth_gap(J, prof.zeta, lv.M()));
    }
    const double cap = 2.0 * kPi * (std::log(201.0) + 5.0) / 201.0;
    cr.tolerance = cap;
    cr.measured = E[2];
    cr.pass = E[0] > E[1] && E[1] > E[2] && E[2] < cap;
    cr.detail = "E(51)=" + fmt(E[0]) + " > E(101)=" + fmt(E[1]) + " > E(201)=" + fmt(E[2]) +
                " < " + fmt(cap);
    return cr;
}

CheckResult criterion_tv_growth() {
    CheckResult cr;
    cr.name = "7 Turaev-Viro growth at (1,1)";
    cr.tolerance = 0.2;
    auto prof = solve_critical(1, 1);
    const double vol = 2.0 * kPi * prof.zeta.real();
    std::vector<double> D, ratio;
    for (int N : {25, 51, 101}) {
        auto lv = make_level(N);
        auto tv = turaev_viro(prof.sc, lv);
        D.push_back(std::fabs(kPi / lv.M() * std::log(tv.total) - vol));
        ratio.push_back(tv.total / tv_asymptotic(prof, lv));
    }
    cr.measured = D[2];
    bool ratio_ok = ratio[2] > 0.5 && ratio[2] < 2.0 &&
                    std::fabs(ratio[2] - 1.0) < std::fabs(ratio[1] - 1.0);
    cr.pass = D[0] > D[1] && D[1] > D[2] && D[2] < 0.2 && ratio_ok;
    cr.detail = "D = {" + fmt(D[0]) + ", " + fmt(D[1]) + ", " + fmt(D[2]) +
                "}, TV/TV_asym = {" + fmt(ratio[0]) + ", " + fmt(ratio[1]) + ", " +
                fmt(ratio[2]) + "} [outside the p,q >= 1000 hypothesis; still asserted]";
    return cr;
}

CheckResult criterion_identities() {
    CheckResult cr;
    cr.name = "8 quantum dilogarithm identity suites";
    cr.tolerance = 1e-9;
    double worst22 = 0.0, worst23 = 0.0, worst213 = 0.0;
    for (int N : {5, 10, 20}) {
        auto lv = make_level(N);
        const double M = lv.M();
        cplx ph0 = phi_N(cplx(0.5 / M), lv);
        for (long long n = 0; n <= 2 * N; ++n) {
            cplx expect = pochhammer_t(n, lv);
            cplx got = (n <= N)
                           ? std::exp(ph0 - phi_N(cplx((n + 0.5) / M), lv))
                           : std::exp(ph0 - phi_N(cplx((n + 0.5) / M - 1.0), lv) + std::log(2.0));
            worst22 = std::max(worst22,
                               std::abs(got - expect) / std::max(1.0, std::abs(expect)));
        }
        for (cplx th : {cplx(0.3, 0.1), cplx(0.6, -0.15)}) {
            cplx lhs = phi_N(th, lv) + phi_N(1.0 - th, lv);
            cplx rhs = 2.0 * kPi * kI *
                       (-(M / 2.0) * (th * th - th + 1.0 / 6.0) + 1.0 / (24.0 * M));
            worst23 = std::max(worst23, std::abs(lhs - rhs));
        }
        cplx rhs0 = (M / (2.0 * kPi * kI)) * kPi * kPi / 6.0 + 0.5 * std::log(M) +
                    kPi * kI / 4.0 - kPi * kI / (12.0 * M);
        worst23 = std::max(worst23, std::abs(ph0 - rhs0));
    }
    for (double th : {0.2, 0.45, 0.7})
        for (double X : {-0.8, 0.3, 1.1}) {
            cplx w = E2(cplx(th, X));
            double lhs = std::real((dilog(w) + dilog(1.0 / w)) / (2.0 * kPi * kI));
            worst213 = std::max(worst213, std::fabs(lhs - 2.0 * kPi * (th - 0.5) * X));
        }
    cr.measured = std::max({worst22, worst23, worst213});
    cr.pass = worst22 < 1e-9 && worst23 < 1e-10 && worst213 < 1e-10;
    cr.detail = "pochhammer id " + fmt(worst22) + ", closed forms " + fmt(worst23) +
                ", circle identity " + fmt(worst213);
    return cr;
}

CheckResult criterion_derivatives() {
    CheckResult cr;
    cr.name = "9 derivative checks: gradients, zeta'(0), zeta''(0)";
    cr.tolerance = 1e-5;
    double worst_grad = 0.0, worst_z1 = 0.0, worst_z2 = 0.0;
    for (auto [p, q] : {std::pair<long long, long long>{1, 1}, {5, 2}}) {
        auto prof = solve_critical(p, q);
        const double h = 1e-6;
        for (cplx off : {cplx(0.0, 0.0), cplx(0.013, -0.007)}) {
            cplx t1 = prof.theta1 + off, t2 = prof.theta2 + 0.5 * off;
            auto g = vpm_grad(prof.sc, +1, t1, t2);
            cplx d1 = (potential_Vpm(prof.sc, +1, t1 + h, t2) -
                       potential_Vpm(prof.sc, +1, t1 - h, t2)) /
                      (2.0 * h);
            cplx d2 = (potential_Vpm(prof.sc, +1, t1, t2 + h) -
                       potential_Vpm(prof.sc, +1, t1, t2 - h)) /
                      (2.0 * h);
            worst_grad = std::max({worst_grad, std::abs(g[0] - d1), std::abs(g[1] - d2)});
        }
        const double hx = 1e-4;
        auto cp = critical_x(prof, hx);
        auto cm = critical_x(prof, -hx);
        worst_z1 = std::max(worst_z1, std::fabs((cp.zeta.real() - cm.zeta.real()) / (2.0 * hx)));
        double d2 = (cp.zeta.real() - 2.0 * prof.zeta.real() + cm.zeta.real()) / (hx * hx);
        worst_z2 = std::max(worst_z2, std::fabs(d2 / prof.zeta_xx0 - 1.0));
    }
    cr.measured = std::max({worst_grad, worst_z1, worst_z2});
    cr.pass = worst_grad < 1e-6 && worst_z1 < 1e-6 && worst_z2 < 1e-5;
    cr.detail = "grad vs FD " + fmt(worst_grad) + ", |zeta'(0)| " + fmt(worst_z1) +
                ", zeta''(0) rel err " + fmt(worst_z2);
    return cr;
}

CheckResult criterion_geometry(uint64_t seed) {
    CheckResult cr;
    cr.name = "10 geometry consistency on 30 random long slopes";
    cr.tolerance = 1e-9;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dp(-80, 80), dq(1, 40);
    double worst = 0.0;
    int done = 0;
    bool bounds_ok = true, set_ok = true, im_ok = true;
    while (done < 30) {
        long long p = dp(rng), q = dq(rng);
        if (q == 0 || std::gcd(p, q) != 1) continue;
        if ((p + 2 * q) * (p + 2 * q) + 4 * q * q < 370) continue;
        auto sol = solve_filling(p, q);
        auto prof = solve_critical(p, q);
        worst = std::max(worst, std::fabs(sol.vol - 2.0 * kPi * prof.zeta.real()));
        if (sol.vol < vol_lower_bound(p, q)) bounds_ok = false;
        if (in_set_S(p, q) && sol.vol <= 3.374482) set_ok = false;
        if (std::fabs(prof.theta1.imag()) <= 1e-6) im_ok = false;
        ++done;
    }
    cr.measured = worst;
    cr.pass = worst < 1e-9 && bounds_ok && set_ok && im_ok;
    cr.detail = "worst |vol_cs - 2 pi Re zeta| = " + fmt(worst) +
                (bounds_ok ? ", lower bounds hold" : ", LOWER BOUND VIOLATED") +
                (set_ok ? ", set-S volumes > 3.374482" : ", SET-S VOLUME VIOLATED") +
                (im_ok ? ", Im(theta1) bounded away from 0" : ", Im(theta1) TOO SMALL");
    return cr;
}

CheckResult criterion_grids() {
    CheckResult cr;
    cr.name = "11 Hessian positivity and region inclusion grids";
    cr.tolerance = 0.0;
    long hess_viol = 0, region_viol = 0;
    // Hessian on D_H, theta step 0.01, X in [-1,1] step 0.04
    for (double t1 = -0.25; t1 <= 0.25 + 1e-12; t1 += 0.01)
        for (double t2 = 0.01; t2 <= 0.49 + 1e-12; t2 += 0.01) {
            if (!(t2 + t1 > 1e-9 && t2 - t1 > 1e-9 && t2 + t1 < 0.5 - 1e-9 &&
                  t2 - t1 < 0.5 - 1e-9))
                continue;
            for (double X1 = -1.0; X1 <= 1.0 + 1e-12; X1 += 0.04)
                for (double X2 = -1.0; X2 <= 1.0 + 1e-12; X2 += 0.04) {
                    auto H = hessian_f(t1, X1, t2, X2);
                    if (!(H[0] > 0.0 && H[0] * H[3] - H[1] * H[2] > 0.0)) ++hess_viol;
                }
        }
    // region inclusion at step 1e-3
    const double thr = 3.374482 / (2.0 * kPi);
    for (double t1 = -0.4995; t1 <= 0.4995 + 1e-12; t1 += 1e-3)
        for (double t2 = 0.0005; t2 <= 0.4995 + 1e-12; t2 += 1e-3) {
            if (!(t2 + t1 > 0.0 && t2 - t1 > 0.0)) continue;
            if (region_v(t1, t2) > thr && !in_D0(region_membership(t1, t2))) ++region_viol;
        }
    cr.measured = (double)(hess_viol + region_viol);
    cr.pass = hess_viol == 0 && region_viol == 0;
    cr.detail = std::to_string(hess_viol) + " Hessian violations, " +
                std::to_string(region_viol) + " region violations";
    return cr;
}

}  // namespace

CheckResult run_criterion(int k, uint64_t seed) {
    switch (k) {
        case 1: return criterion_oracle();
        case 2: return criterion_gauss();
        case 3: return criterion_example51();
        case 4: return criterion_example77();
        case 5: return criterion_constants();
        case 6: return criterion_volume_convergence();
        case 7: return criterion_tv_growth();
        case 8: return criterion_identities();
        case 9: return criterion_derivatives();
        case 10: return criterion_geometry(seed);
        case 11: return criterion_grids();
        default: throw DomainError("run_criterion: k must be 1..11");
    }
}

std::vector<std::string> suite_names() {
    return {"oracle", "identities", "regions", "hessian", "volume", "convergence"};
}

std::vector<CheckResult> run_suite(const std::string& suite, uint64_t seed) {
    std::vector<int> ks;
    if (suite == "oracle") ks = {1, 2};
    else if (suite == "identities") ks = {8};
    else if (suite == "regions") ks = {5, 11};
    else if (suite == "hessian") ks = {9, 11};
    else if (suite == "volume") ks = {3, 4, 10};
    else if (suite == "convergence") ks = {6, 7};
    else if (suite == "all") ks = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    else throw DomainError("run_suite: unknown suite '" + suite + "'");
    std::vector<CheckResult> out;
    for (int k : ks) out.push_back(run_criterion(k, seed));
    return out;
}

}  // namespace wpq::verify
