#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "geometry.hpp"

using namespace wpq;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("complete structure root") {
    // u(z) = 0 iff z^2 = -1; the lower-half-plane root is -i
    cplx z{0.0, -1.0};
    CHECK(std::abs(holonomy_u(z)) < 1e-15);
    CHECK(std::abs(holonomy_v(z)) < 1e-15);
}

TEST_CASE("reference slope (1,-2)") {
    auto sol = solve_filling(1, -2);
    CHECK(sol.z0.real() == doctest::Approx(-0.6623589786).epsilon(1e-9));
    CHECK(sol.z0.imag() == doctest::Approx(-0.5622795125).epsilon(1e-9));
    // residual of the filling equation
    cplx res = 1.0 * holonomy_u(sol.z0) - 2.0 * holonomy_v(sol.z0) - cplx(0.0, 2.0 * kPi);
    CHECK(std::abs(res) < 1e-12);
    // Vol + i CS against the reference value
    CHECK(sol.vol == doctest::Approx(2.828122086).epsilon(1e-8));
    CHECK(sol.cs == doctest::Approx(6.845476024).epsilon(1e-8));
}

TEST_CASE("figure-eight slope (1,1)") {
    auto sol = solve_filling(1, 1);
    CHECK(sol.z2.real() == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(sol.z2.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-11));
    CHECK(sol.vol == doctest::Approx(2.029883213).epsilon(1e-8));
    // independent Lobachevsky route: Vol(S^3 - 4_1) = 6 pi Lambda(1/3)
    CHECK(sol.vol == doctest::Approx(6.0 * kPi * lobachevsky(1.0 / 3.0)).epsilon(1e-10));
}

TEST_CASE("volume below the Whitehead complement volume") {
    CHECK(whitehead_volume() == doctest::Approx(3.663862377).epsilon(1e-9));
    for (auto [p, q] : {std::pair<long long, long long>{1, 1}, {5, 2}, {1, -2}, {3, 5}, {9, 4}})
        CHECK(solve_filling(p, q).vol < whitehead_volume());
}

TEST_CASE("shape transform round trip") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ur(-1.5, 1.5);
    for (int i = 0; i < 200; ++i) {
        cplx z(ur(rng), -std::abs(ur(rng)) - 0.05);
        auto [z1, z2] = shape_transform(z);
        // first equation of the coupled system
        cplx lhs = z2 * z2 * (z1 + 1.0 / z1 + 3.0) - (z1 + 1.0 / z1) * z2 + 1.0;
        CHECK(std::abs(lhs) < 1e-10);
        CHECK(std::abs(shape_transform_inverse(z1, z2) - z) < 1e-12);
    }
}

TEST_CASE("holonomy data of the solution") {
    auto sol = solve_filling(5, 2);
    CHECK(std::abs(5.0 * sol.u + 2.0 * sol.v - cplx(0.0, 2.0 * kPi)) < 1e-12);
    // gamma = -q' u + p' v
    cplx g = -(double)sol.slope.q_star * sol.u + (double)sol.slope.p_star * sol.v;
    CHECK(std::abs(g - sol.gamma) < 1e-15);
    // 1/(1-z2) = 1 + 1/(z - 1/z) exactly; its imaginary part is positive
    // whenever Im z0 < 0. The simpler expression -1/(2 Im z0) agrees only
    // when |z0| = 1, i.e. near the complete structure.
    cplx lhs = 1.0 / (1.0 - sol.z2);
    cplx rhs = 1.0 + 1.0 / (sol.z0 - 1.0 / sol.z0);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(std::imag(lhs) > 0.0);
}

TEST_CASE("volume lower bound") {
    bool vac = false;
    double b = vol_lower_bound(1, -2, &vac);
    CHECK_FALSE(vac);
    CHECK(b == doctest::Approx(0.3537).epsilon(1e-3));
    // short slope: vacuous
    vol_lower_bound(1, 1, &vac);
    CHECK(vac);
    CHECK(vol_lower_bound(1, 1, &vac) == 0.0);
    // limit toward the Whitehead volume
    CHECK(vol_lower_bound(100000, 1) == doctest::Approx(whitehead_volume()).epsilon(1e-6));
}

TEST_CASE("threshold slope norms") {
    // (p+2q)^2 + 4q^2 >= 370 forces the bound above 3.374482
    for (long long p = -25; p <= 25; ++p)
        for (long long q = 1; q <= 10; ++q) {
            if (std::gcd(p, q) != 1) continue;
            long long L2 = (p + 2 * q) * (p + 2 * q) + 4 * q * q;
            if (L2 >= 370) CHECK(vol_lower_bound(p, q) > 3.374482);
        }
}

TEST_CASE("set S membership") {
    CHECK_FALSE(in_set_S(1, 1));
    CHECK_FALSE(in_set_S(-1, 2));
    CHECK_FALSE(in_set_S(1, -2));  // = (-1,2) after sign normalization
    CHECK(in_set_S(5, 2));
    CHECK(in_set_S(3, 5));
    CHECK_FALSE(in_set_S(-7, 4));
    CHECK_FALSE(in_set_S(7, -4));
    CHECK(in_set_S(11, 2));
    CHECK_THROWS_AS(in_set_S(2, 4), DomainError);
}

TEST_CASE("vol_cs equals the solution fields") {
    auto [v, c] = vol_cs(3, 5);
    auto sol = solve_filling(3, 5);
    CHECK(v == sol.vol);
    CHECK(c == sol.cs);
    CHECK(c >= 0.0);
    CHECK(c < kPi * kPi);
}

TEST_CASE("random long slopes solve cleanly") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> dp(-60, 60), dq(1, 40);
    int done = 0;
    while (done < 30) {
        long long p = dp(rng), q = dq(rng);
        if (std::gcd(p, q) != 1) continue;
        if ((p + 2 * q) * (p + 2 * q) + 4 * q * q < 370) continue;
        auto sol = solve_filling(p, q);
        CHECK(sol.z0.imag() < 0.0);
        CHECK(sol.vol > 3.374482);
        CHECK(sol.vol >= vol_lower_bound(p, q));
        ++done;
    }
}

TEST_CASE("figure-eight Chern-Simons vanishes mod pi^2") {
    auto sol = solve_filling(1, 1);
    double d = std::min(sol.cs, kPi * kPi - sol.cs);
    CHECK(d < 1e-10);
}

TEST_CASE("non-hyperbolic fillings are rejected") {
    // the exceptional integer slopes of the Whitehead link component
    for (long long p : {-4, -3, -2, -1, 0})
        CHECK_THROWS_AS(solve_filling(p, 1), DomainError);
    CHECK_THROWS_AS(solve_filling(1, 0), DomainError);   // q = 0
    CHECK_THROWS_AS(solve_filling(4, 2), DomainError);   // not coprime
    // neighbors of the exceptional interval are hyperbolic
    CHECK(solve_filling(-5, 1).vol > 0.0);
    CHECK(solve_filling(1, 1).vol > 0.0);
}

TEST_CASE("mixed-sign slopes solve and stay consistent") {
    for (auto [p, q] : {std::pair<long long, long long>{-9, 7}, {17, -13}, {-23, -9}, {12, -7}}) {
        auto sol = solve_filling(p, q);
        CHECK(sol.z0.imag() < 0.0);
        CHECK(sol.vol > 0.0);
        CHECK(sol.vol < whitehead_volume());
        cplx res = (double)p * sol.u + (double)q * sol.v - cplx(0.0, 2.0 * kPi);
        CHECK(std::abs(res) < 1e-10);
    }
}
