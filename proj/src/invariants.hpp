#pragma once

#include <complex>
#include <vector>

#include "precision.hpp"
#include "special_functions.hpp"
#include "surgery.hpp"

namespace wpq {

/// One color's worth of invariant data. j_norm is the normalized invariant
/// J_m and j_bar the unnormalized one, related by
/// J_m = (-1)^{m-1} ({1}/{m}) Jbar_m.
struct InvariantSample {
    int m = 0;
    cplx j_bar;
    cplx j_norm;
};

struct InvariantOptions {
    Precision precision = Precision::Auto;
    int workers = 0;  // 0: pick from hardware; results do not depend on this
    /// Auto mode escalates to extended precision when
    /// max|partial sum| / |result| exceeds this ratio.
    double escalate_ratio = 1e6;
};

struct InvariantResult {
    std::vector<InvariantSample> samples;
    Precision used = Precision::Double;
    double cancellation = 0.0;  // worst max|partial|/|result| seen
};

/// Evaluation of the Whitehead link with both components cabled by skein
/// idempotents, <e_{m-1}, e_n>_W, as a finite sum of brace-factorial ratios.
cplx habiro_bracket(int m, long long n, const QuantumLevel& level);

/// Direct multi-sum over the l-component chain diagram: (r-1)^l terms.
/// The infeasibility guard rejects (r-1)^l > 1e8.
/// color = 0 computes all colors 1..N.
InvariantResult rt_bruteforce(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                              int color = 0, const InvariantOptions& opt = {});

/// Same values through the Gauss-sum-collapsed double sum over the
/// half-integer lattice; cost O(|q| N^2) per color.
InvariantResult rt_reduced(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                           int color = 0, const InvariantOptions& opt = {});

/// Closed form of the (l-1)-fold Gauss sum S(n_l) attached to the chain,
/// for 1 <= n_l <= 2N.
cplx gauss_sum_S(long long n_l, const QuantumLevel& level, const SurgeryCombinatorics& sc);

/// Brute-force evaluation of S(n_l) by direct summation (test oracle).
cplx gauss_sum_direct(long long n_l, const QuantumLevel& level, const SurgeryCombinatorics& sc);

/// mu_r normalization for the Turaev-Viro color sum. The sqrt(2) form is the
/// one the asymptotic coefficient is derived with; the plain form is the
/// Kirby-color normalization. They differ by a global factor of 2 in mu^2.
enum class MuConvention { SqrtTwoOverSqrtM, SinOverSqrtR };

struct TVSeries {
    long long r = 3;
    std::vector<double> per_color;  // |Jbar_m|^2 for m = 1..N
    double mu_r_sq = 0.0;
    double total = 0.0;
    Precision used = Precision::Double;
};

TVSeries turaev_viro(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                     const InvariantOptions& opt = {},
                     MuConvention mu = MuConvention::SqrtTwoOverSqrtM);

double mu_r_squared(const QuantumLevel& level, MuConvention mu);

/// Brute force with every phase conjugated (evaluation at t-bar); used by the
/// conjugation-symmetry test.
InvariantResult rt_bruteforce_conj(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                                   int color, const InvariantOptions& opt = {});

}  // namespace wpq
