#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "wpq.h"

TEST_CASE("version and error strings") {
    CHECK(std::strlen(wpq_version()) > 0);
    CHECK(wpq_last_error() != nullptr);
}

TEST_CASE("invariants through the C surface") {
    wpq_invariants* h = nullptr;
    REQUIRE(wpq_invariants_compute(5, 2, 6, 0, WPQ_METHOD_BOTH, WPQ_PREC_AUTO, &h) == WPQ_OK);
    REQUIRE(h != nullptr);
    CHECK(wpq_invariants_rows(h) == 6);
    for (int32_t i = 0; i < wpq_invariants_rows(h); ++i) {
        int32_t m;
        double br, bi, jr, ji, gr;
        CHECK(wpq_invariants_row(h, i, &m, &br, &bi, &jr, &ji, &gr) == WPQ_OK);
        CHECK(m == i + 1);
        CHECK(std::isfinite(br));
        double res = wpq_invariants_residual(h, i);
        CHECK(res >= 0.0);
        CHECK(res < 1e-9);
    }
    CHECK(wpq_invariants_row(h, 99, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr) ==
          WPQ_DOMAIN_ERROR);
    wpq_invariants_free(h);
}

TEST_CASE("error taxonomy maps to status codes") {
    wpq_invariants* h = nullptr;
    // non-coprime slope: domain error
    CHECK(wpq_invariants_compute(2, 4, 5, 0, WPQ_METHOD_REDUCED, WPQ_PREC_AUTO, &h) ==
          WPQ_DOMAIN_ERROR);
    CHECK(h == nullptr);
    CHECK(std::strlen(wpq_last_error()) > 0);
    // brute force over budget: infeasible
    CHECK(wpq_invariants_compute(3, 5, 400, 1, WPQ_METHOD_BRUTE, WPQ_PREC_AUTO, &h) ==
          WPQ_INFEASIBLE);
    // non-hyperbolic slope in geometry: domain error
    wpq_geometry* g = nullptr;
    CHECK(wpq_geometry_solve(1, 0, &g) == WPQ_DOMAIN_ERROR);
}

TEST_CASE("turaev-viro series") {
    wpq_tv* h = nullptr;
    REQUIRE(wpq_tv_compute(1, 1, 8, WPQ_PREC_AUTO, &h) == WPQ_OK);
    CHECK(wpq_tv_colors(h) == 8);
    double mu2, total, growth, sum = 0.0;
    REQUIRE(wpq_tv_totals(h, &mu2, &total, &growth) == WPQ_OK);
    CHECK(total > 0.0);
    for (int32_t i = 0; i < 8; ++i) {
        double v;
        CHECK(wpq_tv_color(h, i, &v) == WPQ_OK);
        CHECK(v >= 0.0);
        sum += v;
    }
    CHECK(total == doctest::Approx(mu2 * sum));
    wpq_tv_free(h);
}

TEST_CASE("geometry handle and slope queries") {
    wpq_geometry* h = nullptr;
    REQUIRE(wpq_geometry_solve(1, -2, &h) == WPQ_OK);
    double re, im, vol, cs;
    REQUIRE(wpq_geometry_field(h, "z0", &re, &im) == WPQ_OK);
    CHECK(re == doctest::Approx(-0.6623589786).epsilon(1e-9));
    CHECK(im == doctest::Approx(-0.5622795125).epsilon(1e-9));
    REQUIRE(wpq_geometry_vol_cs(h, &vol, &cs) == WPQ_OK);
    CHECK(vol == doctest::Approx(2.828122086).epsilon(1e-8));
    CHECK(wpq_geometry_field(h, "bogus", &re, &im) == WPQ_DOMAIN_ERROR);
    wpq_geometry_free(h);

    double bound;
    int32_t vac, member;
    CHECK(wpq_vol_lower_bound(1, -2, &bound, &vac) == WPQ_OK);
    CHECK(bound == doctest::Approx(0.3537).epsilon(1e-3));
    CHECK(vac == 0);
    CHECK(wpq_in_set_S(5, 2, &member) == WPQ_OK);
    CHECK(member == 1);
    CHECK(wpq_in_set_S(1, 1, &member) == WPQ_OK);
    CHECK(member == 0);
    CHECK(wpq_whitehead_volume() == doctest::Approx(3.663862377).epsilon(1e-9));
}

TEST_CASE("asymptotics handle") {
    wpq_asymptotics* h = nullptr;
    REQUIRE(wpq_asymptotics_solve(1, 1, &h) == WPQ_OK);
    double re, im;
    REQUIRE(wpq_asymptotics_field(h, "z2", &re, &im) == WPQ_OK);
    CHECK(re == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(im == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-10));
    double coeff;
    REQUIRE(wpq_asymptotics_tv_coeff(h, &coeff) == WPQ_OK);
    CHECK(coeff == doctest::Approx(1.0 / (std::sqrt(2.0) * std::pow(3.0, 0.75))).epsilon(1e-10));
    REQUIRE(wpq_asymptotics_cn(h, 10, &re, &im) == WPQ_OK);
    CHECK(std::hypot(re, im) == doctest::Approx(1.0).epsilon(1e-12));
    int32_t outside = -1;
    REQUIRE(wpq_asymptotics_zeta_x(h, 0.005, &re, &im, &outside) == WPQ_OK);
    CHECK(outside == 1);  // (1,1) sits outside the p,q >= 1000 hypothesis
    double zeta_re;
    wpq_asymptotics_field(h, "zeta", &zeta_re, &im);
    CHECK(re < zeta_re);  // Re zeta decreases in x
    wpq_asymptotics_free(h);
}

TEST_CASE("verification report handle") {
    wpq_report* h = nullptr;
    REQUIRE(wpq_verify_run("identities", 1, &h) == WPQ_OK);
    REQUIRE(wpq_report_count(h) >= 1);
    const char *name, *detail;
    int32_t pass;
    double measured, tol;
    REQUIRE(wpq_report_line(h, 0, &name, &pass, &measured, &tol, &detail) == WPQ_OK);
    CHECK(pass == 1);
    CHECK(std::strlen(name) > 0);
    wpq_report_free(h);
    CHECK(wpq_verify_run("nonsense", 1, &h) == WPQ_DOMAIN_ERROR);
}
