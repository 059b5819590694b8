#pragma once

#include "special_functions.hpp"
#include "surgery.hpp"

namespace wpq {

/// Geometric data of the hyperbolic Dehn filling: the shape parameter z0 with
/// Im(z0) < 0 solving p*u + q*v = 2 pi i, the holonomies, the transformed
/// shapes, and Vol + i CS (CS reported mod pi^2 in [0, pi^2)).
struct HyperbolicSolution {
    SurgerySlope slope;
    cplx z0;
    cplx u, v, gamma;
    cplx z1, z2;
    double vol = 0.0;
    double cs = 0.0;
};

/// Newton solve of p (log z + log(z+1) - log(z-1)) + q (4 log z + 2 pi i)
/// = 2 pi i from z = -i (the complete structure), with continuation along the
/// scaled target 2 pi i s, s: 0 -> 1, when the direct solve leaves the lower
/// half-plane.
HyperbolicSolution solve_filling(long long p, long long q);

/// Vol + i CS through 2 pi V^+ at the transformed critical point (Prop-style
/// cross-check route). Returns {vol, cs mod pi^2}.
std::pair<double, double> vol_cs(long long p, long long q);

/// Volume lower bound (1 - 2 pi^2 / ((p+2q)^2 + 4 q^2))^{3/2} Vol(S^3 - W).
/// Slopes too short for the bound return 0 with *vacuous set.
double vol_lower_bound(long long p, long long q, bool* vacuous = nullptr);

/// Membership in the set S: coprime slopes minus the four explicit exclusion
/// lists, after normalizing (p,q) ~ (-p,-q) to q > 0.
bool in_set_S(long long p, long long q);

/// Vol(S^3 - W) = 8 pi Lambda(1/4) (two ideal octahedron halves).
double whitehead_volume();

/// Holonomy functions of the shape parameter.
///
/// For reference, the full two-cusp system behind them: the complement of the
/// Whitehead link carries tetrahedral shapes (w, x, y, z) subject to the edge
/// gluing equations
///
///     log w + log x + log y + log z = -2 pi i
///     log(1-w) + log(1-x) - log(1-y) - log(1-z) = 0
///
/// with meridian/longitude holonomies
///
///     u1 = log(w-1) + log x + log y - log(y-1) + pi i
///     u2 = log(w-1) + log x + log z - log(z-1) + pi i
///     v1 = 2 log x + 2 log y + 2 pi i
///     v2 = 2 log x + 2 log z + 2 pi i
///
/// and filling conditions p_k u_k + q_k v_k = +-2 pi i per cusp. Filling only
/// the first cusp (v1 = 0 and the first two equations) forces y = -1/x,
/// w = -1/z, z = x, which collapses everything to the single shape z below;
/// solving doubly-filled manifolds is out of scope here.
cplx holonomy_u(cplx z);
cplx holonomy_v(cplx z);

/// Shape transforms z -> (z1, z2) and the inverse.
std::pair<cplx, cplx> shape_transform(cplx z);
cplx shape_transform_inverse(cplx z1, cplx z2);

}  // namespace wpq
