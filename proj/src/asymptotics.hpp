#pragma once

#include <vector>

#include "geometry.hpp"
#include "potentials.hpp"
#include "precision.hpp"

namespace wpq {

/// Saddle data of the V^+ critical point: the expansion constants of the
/// leading-order invariant growth.
struct AsymptoticProfile {
    SurgeryCombinatorics sc;
    cplx theta1, theta2;      // critical point, Re parts in D0
    cplx z1, z2;
    cplx zeta;                // V^+(theta1, theta2); 2 pi zeta = Vol + i CS mod pi^2 i
    cplx omega;               // sin(pi theta1/q - J(s+) pi) / (sqrt(1-z2^2) sqrt(H))
    cplx H;                   // Hessian combination H(p,q; z1, z2)
    std::array<cplx, 3> hessV;  // V11, V12, V22 at the critical point
    double zeta_xx0 = 0.0;    // (Re zeta)''(0) = -4 pi Im(1/(1-z2))
    bool outside_x_regime = false;  // p < 1000 and q < 1000
    Region region = Region::Outside;  // classification of (Re theta1, Re theta2)
};

/// Newton on the V^+ gradient with analytic Jacobian, initialized from the
/// hyperbolic solution's shape transform; falls back to continuation in the
/// coefficients (p/2q, 1/q) from (1,1) if the direct solve leaves D0.
AsymptoticProfile solve_critical(long long p, long long q);

/// H(p,q; z1, z2) (the rescaled Hessian determinant entering omega).
cplx hessian_H(const SurgerySlope& slope, cplx z1, cplx z2);

/// Norm-1 phase C_N(p,q) of the leading-order expansion.
cplx cn_phase(const SurgeryCombinatorics& sc, const QuantumLevel& level);

/// Leading-order estimate of J_N from the expansion data.
cplx asymptotic_J(const AsymptoticProfile& prof, const QuantumLevel& level);

/// |sin^2(pi theta1/q - J(s+) pi) / (q (1 - z2^2) H)|
double tv_ratio(const AsymptoticProfile& prof);

/// N-independent coefficient of the Turaev-Viro asymptotics:
/// tv_ratio / sqrt(Im(1/(1-z2))).
double tv_asymptotic_coefficient(const AsymptoticProfile& prof);

/// Leading-order Turaev-Viro estimate coeff * sqrt(N+1/2) e^{(N+1/2)Vol/pi}.
double tv_asymptotic(const AsymptoticProfile& prof, const QuantumLevel& level);

/// One point of the x-deformed critical family.
struct CriticalX {
    double x = 0.0;
    cplx theta1, theta2;
    cplx zeta;  // V^+(p,q;x, theta1(x), theta2(x))
};

/// Newton continuation in x from the x = 0 critical point. x may be mildly
/// negative (used by the central-difference checks). Profiles outside the
/// p >= 1000 or q >= 1000 regime carry outside_x_regime on the base profile.
CriticalX critical_x(const AsymptoticProfile& base, double x);

/// Sampled zeta(p,q;x) on [0, x_hi] with count+1 equally spaced points.
std::vector<CriticalX> zeta_of_x(const AsymptoticProfile& base, double x_hi, int count);

/// Closed form of the one-dimensional critical family theta2(c), c in (-1/2,1/2).
cplx theta2_of_c(double c);

/// Closed form 2 log(sqrt(sin^2 pi c + 1) - sin pi c) of
/// d/dc Re V^+(p,q; c, theta2(c)).
double dV_dc_closed(double c);

/// The same derivative by central differences of Re potential_Vpm along the
/// one-dimensional family (for the identity check).
double dV_dc_numeric(const SurgeryCombinatorics& sc, double c, double h = 1e-5);

}  // namespace wpq
