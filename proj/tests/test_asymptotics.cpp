#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "asymptotics.hpp"
#include "invariants.hpp"

using namespace wpq;

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx I{0.0, 1.0};
}  // namespace

TEST_CASE("critical point at the reference slope (1,-2)") {
    auto prof = solve_critical(1, -2);
    CHECK(prof.theta1.real() == doctest::Approx(-0.1038205182).epsilon(1e-8));
    CHECK(prof.theta1.imag() == doctest::Approx(0.1790172070).epsilon(1e-8));
    CHECK(prof.theta2.real() == doctest::Approx(0.1308066000).epsilon(1e-8));
    CHECK(prof.theta2.imag() == doctest::Approx(0.09218763785).epsilon(1e-8));
    CHECK(prof.z1.real() == doctest::Approx(0.2580453976).epsilon(1e-8));
    CHECK(prof.z1.imag() == doctest::Approx(-0.19711501).epsilon(1e-7));
    CHECK(prof.z2.real() == doctest::Approx(0.3814962624).epsilon(1e-8));
    CHECK(prof.z2.imag() == doctest::Approx(0.4104006092).epsilon(1e-8));
    // 2 pi zeta matches the reference complex volume
    CHECK(2.0 * kPi * prof.zeta.real() == doctest::Approx(2.828122086).epsilon(1e-7));
    // exponential form of the critical equations
    cplx lhs = std::pow(prof.z1, 1.0) *
               std::pow((prof.z1 - prof.z2) / (prof.z1 * prof.z2 - 1.0), -4.0);
    CHECK(std::abs(lhs - 1.0) < 1e-10);
}

TEST_CASE("critical equations residual and gradient cross-check") {
    for (auto [p, q] : {std::pair<long long, long long>{1, 1}, {5, 2}, {3, 5}, {1, -2}}) {
        auto prof = solve_critical(p, q);
        auto g = vpm_grad(prof.sc, +1, prof.theta1, prof.theta2);
        CHECK(std::abs(g[0]) < 1e-12);
        CHECK(std::abs(g[1]) < 1e-12);
        // V^+(th1, th2) = V^-(-th1, th2)
        cplx a = potential_Vpm(prof.sc, +1, prof.theta1, prof.theta2);
        cplx b = potential_Vpm(prof.sc, -1, -prof.theta1, prof.theta2);
        CHECK(std::abs(a - b) < 1e-13);
        // gradient of V^+ vs central differences
        const double h = 1e-6;
        cplx d1 = (potential_Vpm(prof.sc, +1, prof.theta1 + h, prof.theta2) -
                   potential_Vpm(prof.sc, +1, prof.theta1 - h, prof.theta2)) /
                  (2.0 * h);
        auto g2 = vpm_grad(prof.sc, +1, prof.theta1 + 0.01, prof.theta2 - 0.02);
        cplx d1b = (potential_Vpm(prof.sc, +1, prof.theta1 + 0.01 + h, prof.theta2 - 0.02) -
                    potential_Vpm(prof.sc, +1, prof.theta1 + 0.01 - h, prof.theta2 - 0.02)) /
                   (2.0 * h);
        CHECK(std::abs(d1) < 1e-6);
        CHECK(std::abs(g2[0] - d1b) < 1e-6);
    }
}

TEST_CASE("geometry route equals critical route") {
    for (auto [p, q] : {std::pair<long long, long long>{5, 2}, {3, 5}, {11, 2}, {7, 5}}) {
        auto prof = solve_critical(p, q);
        auto [vol, cs] = vol_cs(p, q);
        CHECK(2.0 * kPi * prof.zeta.real() == doctest::Approx(vol).epsilon(1e-10));
        double cs2 = std::fmod(2.0 * kPi * prof.zeta.imag(), kPi * kPi);
        if (cs2 < 0.0) cs2 += kPi * kPi;
        CHECK(cs2 == doctest::Approx(cs).epsilon(1e-9));
        // Im theta1 stays bounded away from zero (core length nonzero)
        CHECK(std::fabs(prof.theta1.imag()) > 1e-6);
    }
}

TEST_CASE("figure-eight expansion data") {
    auto prof = solve_critical(1, 1);
    CHECK(prof.z2.real() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(prof.z2.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-10));
    // sin^2(pi theta1) = 5/8 - (3 sqrt 3 / 8) i
    cplx s2 = std::sin(kPi * prof.theta1) * std::sin(kPi * prof.theta1);
    CHECK(s2.real() == doctest::Approx(0.625).epsilon(1e-9));
    CHECK(s2.imag() == doctest::Approx(-3.0 * std::sqrt(3.0) / 8.0).epsilon(1e-9));
    // H(1,1) = 1/2 + sqrt(3) i
    CHECK(prof.H.real() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(prof.H.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    // |sin^2(pi theta1 - pi J(s+)) / ((1-z2^2) H)| = 1/(2 sqrt 3)
    cplx num = std::sin(kPi * prof.theta1 - kPi) * std::sin(kPi * prof.theta1 - kPi);
    double coeff = std::abs(num / ((1.0 - prof.z2 * prof.z2) * prof.H));
    CHECK(coeff == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-10));
    // TV coefficient = 1/(sqrt 2 * 3^{3/4})
    CHECK(tv_asymptotic_coefficient(prof) ==
          doctest::Approx(1.0 / (std::sqrt(2.0) * std::pow(3.0, 0.75))).epsilon(1e-10));
    // Im(1/(1-z2)) = sqrt(3)/2
    CHECK(std::imag(1.0 / (1.0 - prof.z2)) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-10));
}

TEST_CASE("x-family: specialization, first and second derivative at 0") {
    for (auto [p, q] : {std::pair<long long, long long>{1, 1}, {5, 2}}) {
        auto prof = solve_critical(p, q);
        auto c0 = critical_x(prof, 0.0);
        CHECK(std::abs(c0.zeta - prof.zeta) < 1e-11);
        CHECK(std::abs(c0.theta1 - prof.theta1) < 1e-11);
        // d Re zeta / dx at 0 by central differences
        const double h = 1e-4;
        auto cp = critical_x(prof, h);
        auto cm = critical_x(prof, -h);
        double d1 = (cp.zeta.real() - cm.zeta.real()) / (2.0 * h);
        CHECK(std::fabs(d1) < 1e-6);
        double d2 = (cp.zeta.real() - 2.0 * c0.zeta.real() + cm.zeta.real()) / (h * h);
        CHECK(d2 == doctest::Approx(prof.zeta_xx0).epsilon(1e-5));
        CHECK(prof.zeta_xx0 < 0.0);
    }
}

TEST_CASE("x-family monotone decrease on [0, x0]") {
    auto prof = solve_critical(5, 2);
    auto samples = zeta_of_x(prof, 0.01, 5);
    for (size_t i = 1; i < samples.size(); ++i)
        CHECK(samples[i].zeta.real() < samples[i - 1].zeta.real());
    CHECK(prof.outside_x_regime);  // p,q < 1000: flagged
    CHECK_FALSE(solve_critical(1009, 2).outside_x_regime);
}

TEST_CASE("region function and membership") {
    // v(0, th2) = 5 Lam(th2) - Lam(2 th2) on the axis
    for (double t2 : {0.1, 0.21, 0.35, 0.45})
        CHECK(region_v(0.0, t2) ==
              doctest::Approx(5.0 * lobachevsky(t2) - lobachevsky(2.0 * t2)).epsilon(1e-13));
    // reference constant
    const double c0 = 0.122532;
    CHECK(2.0 * kPi * region_v(c0, 0.5 - c0) == doctest::Approx(3.3744816).epsilon(1e-6));
    CHECK(region_membership(0.05, 0.2) == Region::D0Prime);
    CHECK(region_membership(-0.05, 0.2) == Region::D0Prime);
    CHECK(region_membership(0.2, 0.45) == Region::D0DoublePrime);
    CHECK(region_membership(0.05, 0.49) == Region::D);
    CHECK(region_membership(0.3, 0.2) == Region::Outside);
    CHECK(region_membership(0.0, 0.6) == Region::Outside);
}

TEST_CASE("one-dimensional critical family") {
    // theta2(0) = log((1+2i)/5)/(2 pi i)
    cplx expect = std::log(cplx(1.0, 2.0) / 5.0) / (2.0 * kPi * I);
    CHECK(std::abs(theta2_of_c(0.0) - expect) < 1e-14);
    // solves the one-dimensional critical equation for several c
    auto sc = surgery_data(1, 1);
    for (double c : {0.0, 0.05, 0.122532, 0.2}) {
        cplx th2 = theta2_of_c(c);
        auto g = vpm_grad(sc, +1, cplx(c), th2);
        CHECK(std::abs(g[1]) < 1e-12);
        // derivative identity against central differences
        CHECK(std::fabs(dV_dc_numeric(sc, c + 0.01) - dV_dc_closed(c + 0.01)) < 1e-6);
    }
    // appendix constant: 2 pi Re V+(c0, theta2(c0)) (slope-independent)
    const double c0 = 0.122532;
    double v1 = 2.0 * kPi * potential_Vpm(sc, +1, cplx(c0), theta2_of_c(c0)).real();
    double v2 = 2.0 * kPi *
                potential_Vpm(surgery_data(5, 2), +1, cplx(c0), theta2_of_c(c0)).real();
    CHECK(v1 == doctest::Approx(3.3744812).epsilon(1e-6));
    CHECK(v1 == doctest::Approx(v2).epsilon(1e-13));
}

TEST_CASE("hessian positivity on the sampled grids") {
    // top-color form on D_H
    for (double t1 = -0.24; t1 <= 0.24; t1 += 0.04)
        for (double t2 = 0.02; t2 <= 0.48; t2 += 0.04) {
            if (!(t2 + t1 > 0.01 && t2 - t1 > 0.01 && t2 + t1 < 0.49 && t2 - t1 < 0.49)) continue;
            for (double X1 = -1.0; X1 <= 1.0; X1 += 0.4)
                for (double X2 = -1.0; X2 <= 1.0; X2 += 0.4) {
                    auto Hm = hessian_f(t1, X1, t2, X2);
                    CHECK(Hm[0] > 0.0);
                    CHECK(Hm[0] * Hm[3] - Hm[1] * Hm[2] > 0.0);
                }
        }
    // theta1 = 0, X1 = 0: off-diagonal vanishes by the a = b symmetry
    auto Hm = hessian_f(0.0, 0.0, 0.3, 0.7);
    CHECK(std::fabs(Hm[1]) < 1e-14);
    // x-family variant: positive definite under the stated x bound
    const double eps = 0.02;
    const double xmax =
        std::min(std::acos(std::sqrt((3.0 + std::sqrt(9.0 + 16.0 * std::pow(std::cos(2.0 * kPi * eps), 2))) / 8.0)) / kPi,
                 1.0 / 6.0);
    for (double x : {0.25 * xmax, 0.5 * xmax, 0.9 * xmax})
        for (double t1 = -0.2; t1 <= 0.2; t1 += 0.05)
            for (double t2 = eps; t2 <= 0.49; t2 += 0.05) {
                if (!(t2 + t1 >= 0.0 && t2 - t1 >= 0.0 && t2 + t1 <= 0.5 && t2 - t1 <= 0.5))
                    continue;
                for (double X2 : {-0.5, 0.0, 0.5}) {
                    auto Hx = hessian_f_x(x, t1, 0.1, t2, X2);
                    CHECK(Hx[0] > 0.0);
                    CHECK(Hx[0] * Hx[3] - Hx[1] * Hx[2] > 0.0);
                }
            }
    // pole proximity rejected
    CHECK_THROWS_AS(hessian_f(0.0, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("finite-N potential converges to the limit potential") {
    auto sc = surgery_data(5, 2);
    auto lv = make_level(60);
    PotentialParams par;
    par.s = sc.s_plus;
    par.m1 = 0;
    par.m2 = 0;
    double worst = 0.0;
    for (double t1 = -0.1; t1 <= 0.1; t1 += 0.05)
        for (double t2 = 0.12; t2 <= 0.35; t2 += 0.05) {
            cplx vn = potential_V_N(sc, lv, par, cplx(t1), cplx(t2));
            PotentialParams pl = par;
            cplx v = potential_V(sc, pl, cplx(t1), cplx(t2));
            worst = std::max(worst, std::abs(vn - v));
        }
    CHECK(worst < 5.0 / lv.M());
}

TEST_CASE("asymptotic estimate tracks the exact invariant") {
    auto prof = solve_critical(5, 2);
    auto sc = prof.sc;
    InvariantOptions opt;
    opt.precision = Precision::Extended;
    double prev_err = 1e9;
    for (int N : {15, 25, 35}) {
        auto lv = make_level(N);
        CHECK(std::abs(std::abs(cn_phase(sc, lv)) - 1.0) < 1e-13);
        cplx exact = rt_reduced(sc, lv, N, opt).samples[0].j_norm;
        cplx asym = asymptotic_J(prof, lv);
        double err = std::abs(exact / asym - 1.0);
        CHECK(err < prev_err + 0.02);  // shrinking up to small wobble
        prev_err = err;
    }
    CHECK(prev_err < 0.35);
}

TEST_CASE("potential branch errors") {
    auto sc = surgery_data(5, 2);
    // dilog arguments pushed onto the cut are flagged inside dilog; the
    // potential stays finite on the branch domain
    cplx v = potential_Vpm(sc, +1, cplx(0.05, 0.3), cplx(0.2, -0.1));
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
}

TEST_CASE("finite-N potential reproduces the exact summand term by term") {
    // exp(M V_N) against the brace-factorial form of the collapsed summand on
    // the default-region lattice, top color and a deformed color
    auto sc = surgery_data(5, 2);
    const int N = 15;
    auto lv = make_level(N);
    const double M = lv.M();
    const long long r = lv.r;
    const long long p = sc.slope.p, q = sc.slope.q;
    ContourSpec spec;
    spec.target_abs_err = 1e-13;
    for (long long a : {0LL, 3LL}) {
        for (int s = 0; s < (int)sc.abs_q(); ++s) {
            const double Ks = sc.K_table[s].to_double();
            const long long Is = sc.I_table[s];
            for (long long ti = std::max(1LL, 2 * a + 1); ti <= N; ti += 4) {      // 2i'
                for (long long tn = -ti + 2; tn <= ti - 2; tn += 6) {              // 2n'
                    if (tn % 2 == 0) continue;
                    cplx th1(tn / (2.0 * M)), th2(ti / (2.0 * M));
                    const double x = (a + 0.5) / M;
                    cplx vn = (a == 0)
                                  ? potential_V_N(sc, lv, PotentialParams{s, 0, 0, +1, 0.0},
                                                  th1, th2, spec)
                                  : potential_V_N_x(sc, lv, s, x, th1, th2, spec);
                    cplx lhs = std::exp(M * vn);
                    // E(s,n',i') * factorial ratio
                    double ex = -(double)r * Ks / 4.0 +
                                (double)(p * tn * tn) / (4.0 * q * r) -
                                (double)(Is * tn) / (2.0 * q) +
                                (double)(ti * ti - 2 * ti - 8) / (4.0 * r);
                    cplx E = std::polar(1.0, kPi * std::fmod(ex, 2.0));
                    cplx FR = brace_factorial((4 * N - 2 * a - ti - 1) / 2, lv) *
                              brace_factorial((4 * N - tn - ti) / 2, lv) *
                              brace_factorial((2 * N - ti - 1) / 2, lv) /
                              (brace_factorial((ti - 2 * a - 1) / 2, lv) *
                               brace_factorial((ti - tn) / 2, lv) *
                               brace_factorial(2 * N - ti, lv));
                    cplx rhs = E * FR;
                    CHECK(std::abs(lhs / rhs - 1.0) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("finite-N correction term of the uniform expansion") {
    // (V_N - V) * M approaches the explicit first-order coefficient
    auto sc = surgery_data(5, 2);
    PotentialParams par;
    par.s = sc.s_plus;
    par.m1 = sc.m_plus;
    par.m2 = 1;
    auto w1 = [&](cplx th1, cplx th2) {
        cplx e2 = std::exp(2.0 * kPi * I * th2), e4 = std::exp(4.0 * kPi * I * th2);
        cplx ep = std::exp(2.0 * kPi * I * (th2 + th1)), em = std::exp(2.0 * kPi * I * (th2 - th1));
        return kPi * I * (th2 - 2.0) + std::log(2.0) - 1.5 * std::log(1.0 - e2) -
               0.5 * std::log(1.0 - ep) - 0.5 * std::log(1.0 - em) + 0.5 * std::log(1.0 - e4);
    };
    double prev = 1e9;
    for (int N : {40, 80}) {
        auto lv = make_level(N);
        double worst = 0.0;
        for (double t1 : {-0.08, 0.05})
            for (double t2 : {0.15, 0.3}) {
                cplx vn = potential_V_N(sc, lv, par, cplx(t1), cplx(t2));
                cplx v = potential_V(sc, par, cplx(t1), cplx(t2));
                worst = std::max(worst, std::abs((vn - v) * lv.M() - w1(cplx(t1), cplx(t2))));
            }
        CHECK(worst < prev * 0.75);  // O(1/M) decay
        prev = worst;
    }
    CHECK(prev < 0.1);
}

TEST_CASE("x-family monotone decrease holds in the large-q regime") {
    auto prof = solve_critical(1, 1009);
    CHECK_FALSE(prof.outside_x_regime);
    auto samples = zeta_of_x(prof, 0.01, 5);
    for (size_t i = 1; i < samples.size(); ++i)
        CHECK(samples[i].zeta.real() < samples[i - 1].zeta.real());
}

TEST_CASE("finite-N potential: all four region cases against the summand") {
    // same identity as above, with lattice points picked in each of the four
    // real-part regions of the finite-N potential
    auto sc = surgery_data(5, 2);
    const int N = 9;
    auto lv = make_level(N);
    const double M = lv.M();
    const long long r = lv.r;
    const long long p = sc.slope.p, q = sc.slope.q;
    ContourSpec spec;
    spec.target_abs_err = 1e-13;
    const int s = sc.s_plus;
    const double Ks = sc.K_table[s].to_double();
    const long long Is = sc.I_table[s];
    // (ti, tn) = (2i', 2n') samples: case 1, 2, 3, 4 respectively
    const std::pair<long long, long long> pts[] = {
        {7, 3}, {7, -5}, {11, 1}, {13, -3}, {11, 9}, {13, 11}, {11, -9}, {13, -11}};
    for (auto [ti, tn] : pts) {
        cplx th1(tn / (2.0 * M)), th2(ti / (2.0 * M));
        cplx vn = potential_V_N(sc, lv, PotentialParams{s, 0, 0, +1, 0.0}, th1, th2, spec);
        double ex = -(double)r * Ks / 4.0 + (double)(p * tn * tn) / (4.0 * q * r) -
                    (double)(Is * tn) / (2.0 * q) + (double)(ti * ti - 2 * ti - 8) / (4.0 * r);
        cplx E = std::polar(1.0, kPi * std::fmod(ex, 2.0));
        cplx FR = brace_factorial((4 * N - ti - 1) / 2, lv) *
                  brace_factorial((4 * N - tn - ti) / 2, lv) *
                  brace_factorial((2 * N - ti - 1) / 2, lv) /
                  (brace_factorial((ti - 1) / 2, lv) * brace_factorial((ti - tn) / 2, lv) *
                   brace_factorial(2 * N - ti, lv));
        cplx lhs = std::exp(M * vn);
        CHECK(std::abs(lhs / (E * FR) - 1.0) < 1e-8);
    }
}

TEST_CASE("leading-estimate growth gap is the prefactor log") {
    auto prof = solve_critical(5, 2);
    double prev = 1e9;
    for (int N : {20, 40, 80}) {
        auto lv = make_level(N);
        cplx ja = asymptotic_J(prof, lv);
        double lhs = 2.0 * kPi / lv.M() * std::log(std::abs(ja)) - 2.0 * kPi * prof.zeta.real();
        double pref = std::abs(prof.omega) * std::sqrt((double)lv.r) /
                      (std::sin(kPi / (double)lv.r) * std::sqrt(2.0));
        double rhs = 2.0 * kPi / lv.M() * std::log(pref);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(lhs < prev);  // decays like log N / N
        prev = lhs;
    }
}
