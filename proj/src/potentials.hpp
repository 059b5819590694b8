#pragma once

#include <array>

#include "special_functions.hpp"
#include "surgery.hpp"

namespace wpq {

/// Parameter block for the general potential family
/// V(p,q;s,x,theta1,theta2;m1,m2): s indexes the Gauss-sum residue, (m1,m2)
/// the Fourier shift, x in [0,1) the color-ratio deformation (0 = top color).
struct PotentialParams {
    int s = 0;
    long long m1 = 0;
    long long m2 = 0;
    int sign = +1;  // +1 selects (s+, m+), -1 selects (s-, m-) in the sign-tagged forms
    double x = 0.0;
};

/// General limit potential; x = 0 is the top-color case.
cplx potential_V(const SurgeryCombinatorics& sc, const PotentialParams& par, cplx th1, cplx th2);

/// V^{+-}(p,q;theta1,theta2): the closed form whose critical value is
/// zeta(p,q). sign = +1 or -1.
cplx potential_Vpm(const SurgeryCombinatorics& sc, int sign, cplx th1, cplx th2);

/// Gradient (V_theta1, V_theta2) of potential_Vpm.
std::array<cplx, 2> vpm_grad(const SurgeryCombinatorics& sc, int sign, cplx th1, cplx th2);

/// Second derivatives (V11, V12, V22) of potential_Vpm.
std::array<cplx, 3> vpm_hess(const SurgeryCombinatorics& sc, int sign, cplx th1, cplx th2);

/// x-deformed potential V^{+-}(p,q;x,theta1,theta2) (the color-family form,
/// equal to potential_Vpm at x = 0 on the branch domain).
cplx potential_Vx(const SurgeryCombinatorics& sc, int sign, double x, cplx th1, cplx th2);
std::array<cplx, 2> vx_grad(const SurgeryCombinatorics& sc, int sign, double x, cplx th1, cplx th2);
std::array<cplx, 3> vx_hess(const SurgeryCombinatorics& sc, int sign, double x, cplx th1, cplx th2);

/// Finite-N potential via phi_N with the four real-part region cases; ties on
/// region boundaries resolve to the first case. Includes the Fourier shift
/// 2 pi i (m1 theta1 + m2 theta2).
cplx potential_V_N(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                   const PotentialParams& par, cplx th1, cplx th2,
                   const ContourSpec& spec = {});

/// Finite-N potential of the x-family, on the default region.
cplx potential_V_N_x(const SurgeryCombinatorics& sc, const QuantumLevel& level, int s, double x,
                     cplx th1, cplx th2, const ContourSpec& spec = {});

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

/// v(theta1,theta2) = 3 Lam(th2) + Lam(th2+th1) + Lam(th2-th1) - Lam(2 th2)
double region_v(double th1, double th2);

enum class Region { Outside, D, D0Prime, D0DoublePrime };

/// Classification against D and D0 = D0' u D0'' (c0 = 0.122532); points on
/// the shared boundary theta1 = c0 report D0Prime.
Region region_membership(double th1, double th2);
bool in_D0(Region reg);

struct RegionSpec {
    double c0 = 0.122532;
    double threshold = 3.374482;
    double epsilon = 1e-5;
    double x0 = 0.01;
};

// ---------------------------------------------------------------------------
// Hessians of f = Re V on vertical lines
// ---------------------------------------------------------------------------

/// 2x2 Hessian (row-major) of f(X1,X2) = Re V(theta1R + iX1, theta2R + iX2)
/// in the top-color form: 2pi [[a+b, b-a], [b-a, a+b+c+2d]].
std::array<double, 4> hessian_f(double th1R, double X1, double th2R, double X2);

/// The x-family variant: 2pi [[b+c, b-c], [b-c, b+c+d]].
std::array<double, 4> hessian_f_x(double x, double th1R, double X1, double th2R, double X2);

}  // namespace wpq
