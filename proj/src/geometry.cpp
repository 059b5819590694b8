#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "potentials.hpp"

namespace wpq {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
const cplx kI{0.0, 1.0};
const cplx kTwoPiI{0.0, 2.0 * kPi};
}  // namespace

cplx holonomy_u(cplx z) { return std::log(z) + std::log(z + 1.0) - std::log(z - 1.0); }
cplx holonomy_v(cplx z) { return 4.0 * std::log(z) + kTwoPiI; }

std::pair<cplx, cplx> shape_transform(cplx z) {
    return {z * (z + 1.0) / (z - 1.0), z / (z * z + z - 1.0)};
}

cplx shape_transform_inverse(cplx z1, cplx z2) { return z2 * (z1 + 1.0) / (z1 * z2 - 1.0); }

double whitehead_volume() { return 8.0 * kPi * lobachevsky(0.25); }

namespace {

// One Newton pass toward p u + q v = 2 pi i s, damped to keep Im z < 0.
// The residual floor scales with |p| + |q| (rounding in the logs is amplified
// by the slope), so the convergence test does too.
bool newton_target(long long p, long long q, double starget, cplx& z, double tol) {
    const double scale = (double)(std::llabs(p) + 4 * std::llabs(q)) + 1.0;
    for (int it = 0; it < 80; ++it) {
        cplx F = (double)p * holonomy_u(z) + (double)q * holonomy_v(z) - kTwoPiI * starget;
        if (std::abs(F) < tol * scale) return true;
        cplx dF = (double)p * (1.0 / z + 1.0 / (z + 1.0) - 1.0 / (z - 1.0)) + (double)q * 4.0 / z;
        cplx dz = -F / dF;
        if (std::abs(dz) < 1e-16 * (1.0 + std::abs(z)))
            return std::abs(F) < 1e-9 * scale;  // double-precision stagnation
        // step damping near the log branch points and the real axis
        double t = 1.0;
        if (std::abs(z - 1.0) < 1e-3 || std::abs(z + 1.0) < 1e-3) t = 0.5;
        while (t > 1e-8 && ((z + t * dz).imag() >= 0.0 || std::abs(t * dz) > 0.8)) t *= 0.5;
        if (t <= 1e-8) return false;
        z += t * dz;
    }
    return false;
}

}  // namespace

HyperbolicSolution solve_filling(long long p, long long q) {
    if (q == 0 || std::gcd(p, q) != 1) throw DomainError("solve_filling: need coprime p, q != 0");
    const double tol = 1e-13;
    cplx z{0.0, -1.0};
    bool ok = newton_target(p, q, 1.0, z, tol);
    if (!ok || z.imag() >= 0.0) {
        // continuation from the complete structure along the scaled target
        z = cplx(0.0, -1.0);
        ok = true;
        const int steps = 64;
        for (int k = 1; k <= steps && ok; ++k)
            ok = newton_target(p, q, (double)k / steps, z, tol);
    }
    if (!ok || z.imag() >= 0.0)
        throw DomainError("solve_filling: no lower-half-plane solution for (" +
                          std::to_string(p) + "," + std::to_string(q) +
                          "); filling not hyperbolic or branch failure");

    HyperbolicSolution sol;
    sol.slope = make_slope(p, q);
    sol.z0 = z;
    sol.u = holonomy_u(z);
    sol.v = holonomy_v(z);
    sol.gamma = -(double)sol.slope.q_star * sol.u + (double)sol.slope.p_star * sol.v;
    auto [z1, z2] = shape_transform(z);
    sol.z1 = z1;
    sol.z2 = z2;

    // branch selection: theta from principal logs, Re theta1 in (-1/2,1/2),
    // Re theta2 in (0,1/2); theta1 sign flipped if the V^- sheet was hit.
    SurgeryCombinatorics sc = build_combinatorics(expand_ncf(sol.slope), sol.slope);
    cplx th1 = std::log(z1) / kTwoPiI;
    cplx th2 = std::log(z2) / kTwoPiI;
    if (!(th2.real() > 0.0 && th2.real() < 0.5))
        throw DomainError("solve_filling: Re(theta2) outside (0,1/2); branch failure");
    auto res = vpm_grad(sc, +1, th1, th2);
    {
        auto alt = vpm_grad(sc, +1, -th1, th2);
        if (std::abs(alt[0]) + std::abs(alt[1]) < std::abs(res[0]) + std::abs(res[1])) {
            th1 = -th1;
            res = alt;
        }
    }
    const double gscale = 1.0 + std::fabs((double)p / (2.0 * (double)q));
    if (std::abs(res[0]) + std::abs(res[1]) > 1e-8 * gscale)
        throw DomainError("solve_filling: transformed point does not satisfy the critical"
                          " equations (branch failure or non-hyperbolic filling)");
    cplx zeta = potential_Vpm(sc, +1, th1, th2);
    sol.vol = 2.0 * kPi * zeta.real();
    // the exceptional fillings (integer slopes -4..0) degenerate to zero
    // volume with the shape collapsing toward the real axis
    if (sol.vol < 1e-9)
        throw DomainError("solve_filling: degenerate solution with zero volume for (" +
                          std::to_string(p) + "," + std::to_string(q) +
                          "); filling not hyperbolic");
    double cs = std::fmod(2.0 * kPi * zeta.imag(), kPi * kPi);
    if (cs < 0.0) cs += kPi * kPi;
    sol.cs = cs;
    return sol;
}

std::pair<double, double> vol_cs(long long p, long long q) {
    HyperbolicSolution sol = solve_filling(p, q);
    return {sol.vol, sol.cs};
}

double vol_lower_bound(long long p, long long q, bool* vacuous) {
    const double L2 = (double)((p + 2 * q) * (p + 2 * q) + 4 * q * q);
    if (vacuous) *vacuous = false;
    if (L2 <= 2.0 * kPi * kPi) {
        if (vacuous) *vacuous = true;
        return 0.0;
    }
    return std::pow(1.0 - 2.0 * kPi * kPi / L2, 1.5) * whitehead_volume();
}

bool in_set_S(long long p, long long q) {
    if (q == 0 || std::gcd(p, q) != 1) throw DomainError("in_set_S: need coprime p, q != 0");
    if (q < 0) { p = -p; q = -q; }
    static const std::pair<long long, long long> excluded[] = {
        // T1
        {-9, 1}, {-8, 1}, {-7, 1}, {-6, 1}, {-5, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1},
        // T2
        {-11, 2}, {-9, 2}, {-7, 2}, {-5, 2}, {-3, 2}, {-1, 2}, {1, 2}, {3, 2},
        // T3
        {-11, 3}, {-10, 3}, {-8, 3}, {-7, 3}, {-5, 3}, {-4, 3}, {-2, 3}, {-1, 3},
        // T4
        {-9, 4}, {-7, 4}};
    for (auto [ep, eq] : excluded)
        if (p == ep && q == eq) return false;
    return true;
}

}  // namespace wpq
