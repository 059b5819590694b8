#include "potentials.hpp"

#include <cmath>

namespace wpq {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
const cplx kI{0.0, 1.0};

cplx E2(cplx th) { return std::exp(2.0 * kPi * kI * th); }

double rat(const Rat& x) { return x.to_double(); }

// dilogarithm with the potential's branch contract: arguments landing on the
// cut (1, inf) are a branch failure rather than a silent limit
cplx dl(cplx z) {
    bool on_cut = false;
    cplx v = dilog(z, &on_cut);
    if (on_cut)
        throw DomainError("potential: dilogarithm argument crossed the cut (1, inf)");
    return v;
}

}  // namespace

cplx potential_V(const SurgeryCombinatorics& sc, const PotentialParams& par, cplx th1, cplx th2) {
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    const double Is = (double)sc.I_table[par.s];
    const double Ks = rat(sc.K_table[par.s]);
    const double x = par.x;
    cplx quad = 0.5 - 2.0 * th2 - 2.0 * x * th2 - 2.0 * th1 * th2 + 2.0 * th2 * th2 +
                (p / (2.0 * q)) * th1 * th1 - (Is / q) * th1 + 2.0 * (double)par.m1 * th1 +
                2.0 * (double)par.m2 * th2 - 0.5 * Ks;
    cplx dls = -dl(E2(-x - th2)) + dl(E2(th2 - x)) - dl(E2(-th1 - th2)) +
               dl(E2(th2 - th1)) - dl(E2(-th2)) + dl(E2(-2.0 * th2));
    return kI * kPi * quad + dls / (2.0 * kPi * kI);
}

cplx potential_Vpm(const SurgeryCombinatorics& sc, int sign, cplx th1, cplx th2) {
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    const double ps = (double)sc.slope.p_star;
    cplx quad = (p / (2.0 * q) + 1.0) * th1 * th1 - (double)sign * th1 / q + th2 * th2 - th2 +
                5.0 / 6.0 + ps / (2.0 * q);
    cplx dls = dl(E2(th1 + th2)) + dl(E2(th2 - th1)) + 3.0 * dl(E2(th2)) -
               dl(E2(2.0 * th2));
    return kI * kPi * quad + dls / (2.0 * kPi * kI);
}

std::array<cplx, 2> vpm_grad(const SurgeryCombinatorics& sc, int sign, cplx th1, cplx th2) {
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    cplx em = E2(th2 - th1), ep = E2(th2 + th1), e2 = E2(th2), e4 = E2(2.0 * th2);
    cplx g1 = kI * kPi * (2.0 * (p / (2.0 * q) + 1.0) * th1 - (double)sign / q) +
              std::log(1.0 - em) - std::log(1.0 - ep);
    cplx g2 = kI * kPi * (2.0 * th2 - 1.0) - std::log(1.0 - em) - std::log(1.0 - ep) -
              3.0 * std::log(1.0 - e2) + 2.0 * std::log(1.0 - e4);
    return {g1, g2};
}

std::array<cplx, 3> vpm_hess(const SurgeryCombinatorics& sc, int sign, cplx th1, cplx th2) {
    (void)sign;
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    cplx em = E2(th2 - th1), ep = E2(th2 + th1), e2 = E2(th2), e4 = E2(2.0 * th2);
    const cplx c = 2.0 * kPi * kI;
    cplx rm = em / (1.0 - em), rp = ep / (1.0 - ep);
    cplx V11 = c * ((p / (2.0 * q) + 1.0) + rm + rp);
    cplx V12 = c * (rp - rm);
    cplx V22 = c * (1.0 + rm + rp + 3.0 * e2 / (1.0 - e2) - 4.0 * e4 / (1.0 - e4));
    return {V11, V12, V22};
}

cplx potential_Vx(const SurgeryCombinatorics& sc, int sign, double x, cplx th1, cplx th2) {
    PotentialParams par;
    par.s = sign > 0 ? sc.s_plus : sc.s_minus;
    par.m1 = sign > 0 ? sc.m_plus : sc.m_minus;
    par.m2 = 1;
    par.x = x;
    cplx shift = kI * kPi * (0.5 * rat(sc.K_table[par.s]) +
                             (double)sc.slope.p_star / (2.0 * (double)sc.slope.q));
    return potential_V(sc, par, th1, th2) + shift;
}

std::array<cplx, 2> vx_grad(const SurgeryCombinatorics& sc, int sign, double x, cplx th1, cplx th2) {
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    cplx em = E2(th2 - th1), epn = E2(-th1 - th2);
    cplx exm = E2(th2 - x), exp_ = E2(-x - th2);
    cplx e2n = E2(-th2), e4n = E2(-2.0 * th2);
    cplx g1 = kI * kPi * (-(double)sign / q + 1.0 - 2.0 * th2 + (p / q) * th1) -
              std::log(1.0 - epn) + std::log(1.0 - em);
    cplx g2 = kI * kPi * (-2.0 * x - 2.0 * th1 + 4.0 * th2) - std::log(1.0 - exp_) -
              std::log(1.0 - exm) - std::log(1.0 - epn) - std::log(1.0 - em) -
              std::log(1.0 - e2n) + 2.0 * std::log(1.0 - e4n);
    return {g1, g2};
}

std::array<cplx, 3> vx_hess(const SurgeryCombinatorics& sc, int sign, double x, cplx th1, cplx th2) {
    (void)sign;
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    cplx z1 = E2(th1), z2 = E2(th2), ex = E2(cplx(x));
    const cplx c = 2.0 * kPi * kI;
    cplx V11 = c * (p / (2.0 * q) + 1.0 / (1.0 - z1 * z2) - 1.0 / (1.0 - z1 / z2));
    cplx V12 = c * (-1.0 + 1.0 / (1.0 - z1 * z2) + 1.0 / (1.0 - z1 / z2));
    cplx V22 = c * (2.0 + 1.0 / (1.0 - ex * z2) - 1.0 / (1.0 - ex / z2) + 1.0 / (1.0 - z1 * z2) -
                    1.0 / (1.0 - z1 / z2) + 1.0 / (1.0 - z2) - 4.0 / (1.0 - z2 * z2));
    return {V11, V12, V22};
}

// ---------------------------------------------------------------------------
// Finite-N potentials
// ---------------------------------------------------------------------------

cplx potential_V_N(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                   const PotentialParams& par, cplx th1, cplx th2, const ContourSpec& spec) {
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    const double Is = (double)sc.I_table[par.s];
    const double Ks = rat(sc.K_table[par.s]);
    const double eps = 1.0 / level.M();
    const double h = 0.5 * eps;
    const double t2 = th2.real(), tp = (th2 + th1).real(), tm = (th2 - th1).real();

    int region = 0;
    if (t2 < 0.5 && tp > 0.0 && tp < 1.0 && tm > 0.0 && tm < 1.0) region = 1;
    else if (t2 >= 0.5 && t2 < 1.0 && tp > 0.0 && tp < 1.0 && tm > 0.0 && tm < 1.0) region = 2;
    else if (t2 >= 0.5 && t2 < 1.0 && tp > 1.0 && tp < 2.0 && tm > 0.0 && tm < 1.0) region = 3;
    else if (t2 >= 0.5 && t2 < 1.0 && tp > 0.0 && tp < 1.0 && tm > 1.0 && tm < 2.0) region = 4;
    if (region == 0) region = 1;  // tie-break / boundary convention

    auto phi = [&](cplx th) { return phi_N(th, level, spec); };
    cplx quad = 0.5 - 2.0 * th2 + 2.0 * th2 * th2 - (Is / q) * th1 - 2.0 * th1 * th2 +
                (p / (2.0 * q)) * th1 * th1 - 0.5 * Ks - 0.5 * eps - th1 * eps - th2 * eps -
                1.5 * eps * eps;
    cplx acc = kI * kPi * quad;
    cplx phi_part = -phi(1.0 - th2 - eps) + phi(th2) - phi(1.0 - th2 - h);
    switch (region) {
        case 1:
            phi_part += std::log(2.0) - phi(1.0 - th1 - th2 - h) + phi(th2 - th1 + h) +
                        phi(1.0 - 2.0 * th2 - h);
            break;
        case 2:
            phi_part += std::log(4.0) - phi(1.0 - th1 - th2 - h) + phi(th2 - th1 + h) +
                        phi(2.0 - 2.0 * th2 - h);
            break;
        case 3:
            phi_part += std::log(2.0) - phi(2.0 - th1 - th2 - h) + phi(th2 - th1 + h) +
                        phi(2.0 - 2.0 * th2 - h);
            break;
        case 4:
            phi_part += std::log(2.0) - phi(1.0 - th1 - th2 - h) + phi(th2 - th1 - 1.0 + h) +
                        phi(2.0 - 2.0 * th2 - h);
            break;
    }
    acc += eps * phi_part;
    acc += 2.0 * kPi * kI * ((double)par.m1 * th1 + (double)par.m2 * th2);
    return acc;
}

cplx potential_V_N_x(const SurgeryCombinatorics& sc, const QuantumLevel& level, int s, double x,
                     cplx th1, cplx th2, const ContourSpec& spec) {
    const double p = (double)sc.slope.p, q = (double)sc.slope.q;
    const double Is = (double)sc.I_table[s];
    const double Ks = rat(sc.K_table[s]);
    const double eps = 1.0 / level.M();
    const double h = 0.5 * eps;
    auto phi = [&](cplx th) { return phi_N(th, level, spec); };
    cplx quad = 0.5 - 2.0 * th2 - 2.0 * x * th2 - 2.0 * th1 * th2 + 2.0 * th2 * th2 +
                (p / (2.0 * q)) * th1 * th1 - (Is / q) * th1 - 0.5 * Ks -
                (x + th1 + 0.5) * eps - eps * eps;
    cplx phi_part = std::log(2.0) - phi(1.0 - x - th2 - h) + phi(th2 - x + h) -
                    phi(1.0 - th1 - th2 - h) + phi(th2 - th1 + h) - phi(1.0 - th2 - h) +
                    phi(1.0 - 2.0 * th2 - h);
    return kI * kPi * quad + eps * phi_part;
}

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

double region_v(double th1, double th2) {
    return 3.0 * lobachevsky(th2) + lobachevsky(th2 + th1) + lobachevsky(th2 - th1) -
           lobachevsky(2.0 * th2);
}

Region region_membership(double th1, double th2) {
    const RegionSpec rs;
    const double a1 = std::fabs(th1);
    const bool inD = (th2 + th1 > 0.0) && (th2 - th1 > 0.0) && (th2 > 0.0) && (th2 < 0.5);
    if (!inD) return Region::Outside;
    if (a1 <= rs.c0 && a1 <= th2 && th2 <= 0.5 - a1) return Region::D0Prime;
    if (a1 >= rs.c0 && a1 <= 0.25 && a1 <= th2) return Region::D0DoublePrime;
    return Region::D;
}

bool in_D0(Region reg) { return reg == Region::D0Prime || reg == Region::D0DoublePrime; }

// ---------------------------------------------------------------------------
// Hessians
// ---------------------------------------------------------------------------

namespace {

double lorentz(double thR, double X, double sign_cos) {
    const double den = std::exp(2.0 * kPi * X) + std::exp(-2.0 * kPi * X) +
                       sign_cos * 2.0 * std::cos(2.0 * kPi * thR);
    if (std::fabs(den) < 1e-12)
        throw DomainError("hessian_f: pole proximity (denominator < 1e-12)");
    return std::sin(2.0 * kPi * thR) / den;
}

}  // namespace

std::array<double, 4> hessian_f(double th1R, double X1, double th2R, double X2) {
    const double a = lorentz(th2R - th1R, X2 - X1, -1.0);
    const double b = lorentz(th2R + th1R, X2 + X1, -1.0);
    const double c = lorentz(th2R, X2, -1.0);
    const double d = lorentz(th2R, X2, +1.0);
    const double s = 2.0 * kPi;
    return {s * (a + b), s * (b - a), s * (b - a), s * (a + b + c + 2.0 * d)};
}

std::array<double, 4> hessian_f_x(double x, double th1R, double X1, double th2R, double X2) {
    const double b = lorentz(th2R + th1R, X2 + X1, -1.0);
    const double c = lorentz(th2R - th1R, X2 - X1, -1.0);
    const cplx z2 = std::exp(2.0 * kPi * kI * cplx(th2R, X2));
    const double cx = std::cos(2.0 * kPi * x);
    const cplx den1 = 1.0 - 2.0 * cx * z2 + z2 * z2;
    const cplx den2 = 1.0 - z2;
    const cplx den3 = 1.0 - z2 * z2;
    if (std::abs(den1) < 1e-12 || std::abs(den2) < 1e-12 || std::abs(den3) < 1e-12)
        throw DomainError("hessian_f_x: pole proximity (denominator < 1e-12)");
    const double d = std::imag((2.0 - 2.0 * cx * z2) / den1 - 1.0 / den2 + (2.0 * z2 - 2.0) / den3);
    const double s = 2.0 * kPi;
    return {s * (b + c), s * (b - c), s * (b - c), s * (b + c + d)};
}

}  // namespace wpq
