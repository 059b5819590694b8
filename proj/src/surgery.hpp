#pragma once

#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wpq {

/// Surgery slope p/q together with a Bezout pair p_star*p + q_star*q = 1.
struct SurgerySlope {
    long long p = 1;
    long long q = 1;
    long long p_star = 1;
    long long q_star = 0;
};

/// gcd(p,q)=1 required; canonical representative has 0 <= p_star < |q| when |q| > 1.
std::pair<long long, long long> bezout(long long p, long long q);

SurgerySlope make_slope(long long p, long long q);

/// Negative continued fraction p/q = b_l - 1/(b_{l-1} - 1/(... - 1/b_1))
/// with the recursion data A_i = b_i A_{i-1} - C_{i-1}, C_i = A_{i-1},
/// A_0 = a0_sign, C_0 = 0, and A_l = p, C_l = q.
struct NegContinuedFraction {
    std::vector<long long> b;   // b[0] = b_1, ..., b[l-1] = b_l
    int a0_sign = 1;
    std::vector<long long> A;   // A[0..l]
    std::vector<long long> C;   // C[0..l]
    std::vector<Rat> K;         // K[i] is K_i for i = 1..l; K[0] unused (0)
    int sigma = 0;              // signature of the linking matrix
    bool singular = false;      // linking matrix has a zero eigenvalue

    int length() const { return (int)b.size(); }
    long long b_last() const { return b.back(); }
};

/// Greedy expansion with nearest-integer partial quotients (ties away from
/// zero); the result is validated against the recursion invariant, which is
/// the actual contract.
NegContinuedFraction expand_ncf(const SurgerySlope& slope);

/// Expansion from a user-supplied coefficient list (for cross-expansion
/// property tests); throws if no a0_sign makes A_l = p, C_l = q.
NegContinuedFraction ncf_from_coeffs(const SurgerySlope& slope, const std::vector<long long>& b);

/// Phase exponent phi of the Gauss-reciprocity square root attached to the
/// chain: the closed Gauss-sum forms carry e^{i pi phi} / sqrt(|q|) with
/// phi = -nu/2 + [a0 < 0], nu the number of sign changes along the
/// convergents C_1..C_l. (Equivalently, each reciprocity step contributes a
/// quarter phase oriented by sgn(C_i C_{i+1}).)
Rat reciprocity_phase(const NegContinuedFraction& ncf);

/// Signature of the symmetric tridiagonal matrix diag(b_1..b_l) with unit
/// off-diagonal, computed exactly from the Sturm sequence of leading minors.
/// singular is set when the matrix has a zero eigenvalue; the returned value
/// is then the signature of the nonzero spectrum.
int linking_signature(const std::vector<long long>& b, bool* singular = nullptr);

/// The index maps attached to a surgery presentation:
///   I(s) = -C_{l-1}(2s+1+K_{l-1}) mod 2|q|   into {0,...,2|q|-1}
///   I(s) + 2 P(s)|q| = -C_{l-1}(2s+1+K_{l-1})  (exact integer)
///   J(s) = (2s+1)/q + (-1)^l sum_{i<l} (-1)^{i+1} K_i / C_{i+1}
///   K(s) = C_{l-1}(2s+1+K_{l-1})^2/q + sum_{i<=l-2} C_i K_i^2 / C_{i+1}
/// together with the distinguished indices s+, s- and the integers m+, m-.
struct SurgeryCombinatorics {
    SurgerySlope slope;
    NegContinuedFraction ncf;
    int s_plus = 0, s_minus = 0;
    long long m_plus = 0, m_minus = 0;
    std::vector<long long> I_table;   // size |q|
    std::vector<long long> P_table;   // size |q|
    std::vector<Rat> J_table;         // size |q|
    std::vector<Rat> K_table;         // size |q|

    long long abs_q() const { return slope.q < 0 ? -slope.q : slope.q; }
};

SurgeryCombinatorics build_combinatorics(const NegContinuedFraction& ncf, const SurgerySlope& slope);

/// Convenience: slope -> expansion -> combinatorics in one step.
SurgeryCombinatorics surgery_data(long long p, long long q);

}  // namespace wpq
