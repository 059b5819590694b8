#pragma once

#include <complex>

#include "errors.hpp"

namespace wpq {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Quantum level
// ---------------------------------------------------------------------------

/// Odd level r = 2N+1 with root of unity t = e^{4 pi i / r}.
struct QuantumLevel {
    int N = 1;
    long long r = 3;
    cplx t;

    double M() const { return N + 0.5; }
};

QuantumLevel make_level(int N);

/// [n] = sin(2 pi n / r) / sin(2 pi / r); n may be a half-integer.
double quantum_integer(double n, const QuantumLevel& level);

/// {n} = t^{n/2} - t^{-n/2} = 2 i sin(2 pi n / r)
cplx brace(double n, const QuantumLevel& level);

/// {n}! for integer 0 <= n <= r-1
cplx brace_factorial(long long n, const QuantumLevel& level);

/// (t)_n = prod_{k<=n} (1 - t^k) for integer 0 <= n <= r-1
cplx pochhammer_t(long long n, const QuantumLevel& level);

// ---------------------------------------------------------------------------
// Dilogarithm and Lobachevsky function
// ---------------------------------------------------------------------------

/// Principal dilogarithm Li_2 on C \ (1,inf). Points on the cut are evaluated
/// as the limit from the lower half-plane; *on_cut is set when that happens.
cplx dilog(cplx z, bool* on_cut = nullptr);

/// Lobachevsky function Lambda(theta) = Re(Li_2(e^{2 pi i theta}) / (2 pi i)),
/// odd and 1-periodic; evaluated through the Clausen series to ~1e-15.
double lobachevsky(double theta);

/// zeta(2n) for n >= 1 (used by the series above; exposed for tests)
double zeta_even(int n);

// ---------------------------------------------------------------------------
// Quantum dilogarithm
// ---------------------------------------------------------------------------

/// Contour and accuracy controls for phi_N. tail_cutoff = 0 selects the
/// cutoff automatically from the analytic tail bound.
struct ContourSpec {
    double tail_cutoff = 0.0;
    int node_budget = 200000;
    double target_abs_err = 1e-12;
};

/// phi_N(theta) = int e^{(2 theta - 1) x} / (4 x sinh(x) sinh(x/(N+1/2))) dx
/// over (-inf,-1] + upper unit semicircle + [1,inf), for 0 < Re(theta) < 1.
cplx phi_N(cplx theta, const QuantumLevel& level, const ContourSpec& spec = {});

}  // namespace wpq
