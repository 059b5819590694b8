#include "surgery.hpp"

#include <numeric>

namespace wpq {

std::pair<long long, long long> bezout(long long p, long long q) {
    if (q == 0) throw DomainError("bezout: q must be nonzero");
    if (std::gcd(p, q) != 1)
        throw DomainError("bezout: p and q must be coprime, got gcd(" + std::to_string(p) +
                          "," + std::to_string(q) + ") != 1");
    long long r0 = p, r1 = q, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        s0 -= k * s1;
        std::swap(s0, s1);
    }
    long long ps = (r0 == 1) ? s0 : -s0;  // r0 = +-gcd = +-1
    long long aq = q < 0 ? -q : q;
    if (aq > 1) {
        ps %= aq;
        if (ps < 0) ps += aq;
    } else {
        ps = 1;  // representative used when q = +-1
    }
    long long qs = (1 - ps * p) / q;
    return {ps, qs};
}

SurgerySlope make_slope(long long p, long long q) {
    auto [ps, qs] = bezout(p, q);
    return SurgerySlope{p, q, ps, qs};
}

namespace {

// Nearest integer to p/q with ties rounded away from zero.
long long round_nearest(long long p, long long q) {
    if (q < 0) { p = -p; q = -q; }
    long long fl = p / q;
    if (p % q != 0 && (p < 0) != (q < 0)) --fl;  // floor
    long long rem2 = 2 * (p - fl * q);           // 2*q*frac in [0, 2q)
    if (rem2 > q) return fl + 1;
    if (rem2 < q) return fl;
    return (p >= 0) ? fl + 1 : fl;  // exact half
}

void fill_recursion(NegContinuedFraction& f, long long p, long long q) {
    const int l = f.length();
    for (int sign : {1, -1}) {
        f.A.assign(1, sign);
        f.C.assign(1, 0);
        for (int i = 1; i <= l; ++i) {
            f.A.push_back(f.b[i - 1] * f.A[i - 1] - f.C[i - 1]);
            f.C.push_back(f.A[i - 1]);
        }
        if (f.A[l] == p && f.C[l] == q) {
            f.a0_sign = sign;
            f.K.assign(1, Rat(0));
            long long acc = 0;
            for (int i = 1; i <= l; ++i) {
                acc += f.b[i - 1] * f.C[i];
                long long s = (i % 2 == 0) ? acc : -acc;
                if (f.C[i] == 0)
                    throw InternalError("expand_ncf: zero convergent C_" + std::to_string(i));
                f.K.push_back(Rat(s, f.C[i]));
            }
            f.sigma = linking_signature(f.b, &f.singular);
            return;
        }
    }
    throw InternalError("expand_ncf: recursion cannot reach A_l = p, C_l = q");
}

}  // namespace

NegContinuedFraction expand_ncf(const SurgerySlope& slope) {
    NegContinuedFraction f;
    std::vector<long long> rev;  // collected top-down: b_l first
    long long n = slope.p, d = slope.q;
    if (d < 0) { n = -n; d = -d; }
    while (true) {
        long long b = round_nearest(n, d);
        rev.push_back(b);
        long long rn = b * d - n;  // b - n/d = rn/d
        if (rn == 0) break;
        long long g = std::gcd(rn < 0 ? -rn : rn, d);
        long long nn = d / g, nd = rn / g;  // next value = 1/(b - n/d)
        if (nd < 0) { nn = -nn; nd = -nd; }
        n = nn;
        d = nd;
        if (d == 0) break;
        if ((int)rev.size() > 128) throw InternalError("expand_ncf: expansion does not terminate");
    }
    f.b.assign(rev.rbegin(), rev.rend());
    fill_recursion(f, slope.p, slope.q);
    return f;
}

NegContinuedFraction ncf_from_coeffs(const SurgerySlope& slope, const std::vector<long long>& b) {
    if (b.empty()) throw DomainError("ncf_from_coeffs: empty coefficient list");
    NegContinuedFraction f;
    f.b = b;
    fill_recursion(f, slope.p, slope.q);
    return f;
}

Rat reciprocity_phase(const NegContinuedFraction& ncf) {
    long long nu = 0;
    for (int i = 1; i < ncf.length(); ++i)
        if ((ncf.C[i] < 0) != (ncf.C[i + 1] < 0)) ++nu;
    return Rat(-nu, 2) + Rat(ncf.a0_sign < 0 ? 1 : 0);
}

int linking_signature(const std::vector<long long>& b, bool* singular) {
    if (b.empty()) throw DomainError("linking_signature: empty sequence");
    const int l = (int)b.size();
    // leading principal minors D_k = b_k D_{k-1} - D_{k-2}, D_0 = 1
    std::vector<__int128> D(l + 1);
    D[0] = 1;
    D[1] = b[0];
    for (int k = 2; k <= l; ++k) D[k] = (__int128)b[k - 1] * D[k - 1] - D[k - 2];
    // Sturm count of negative eigenvalues: sign changes, with a zero minor
    // taking the sign opposite to its predecessor (minors of an unreduced
    // tridiagonal never vanish twice in a row).
    int nneg = 0;
    int prev = 1;
    for (int k = 1; k <= l; ++k) {
        int cur = D[k] > 0 ? 1 : (D[k] < 0 ? -1 : -prev);
        if (cur != prev) ++nneg;
        prev = cur;
    }
    const int n0 = (D[l] == 0) ? 1 : 0;
    if (singular) *singular = (n0 != 0);
    return l - n0 - 2 * nneg;
}

SurgeryCombinatorics build_combinatorics(const NegContinuedFraction& ncf, const SurgerySlope& slope) {
    SurgeryCombinatorics sc;
    sc.slope = slope;
    sc.ncf = ncf;
    const int l = ncf.length();
    const long long q = slope.q;
    const long long aq = q < 0 ? -q : q;
    const long long Cl1 = ncf.C[l - 1];
    // C_{l-1} K_{l-1} = (-1)^{l-1} sum_{j<=l-1} b_j C_j, an exact integer
    long long SB = 0;
    for (int j = 1; j <= l - 1; ++j) SB += ncf.b[j - 1] * ncf.C[j];
    const long long CK = ((l - 1) % 2 == 0) ? SB : -SB;

    Rat Jtail(0);  // (-1)^l sum_{i<l} (-1)^{i+1} K_i / C_{i+1}
    for (int i = 1; i <= l - 1; ++i) {
        Rat term = ncf.K[i] / Rat(ncf.C[i + 1]);
        if (i % 2 == 0) term = -term;          // (-1)^{i+1}
        Jtail += term;
    }
    if (l % 2 != 0) Jtail = -Jtail;            // (-1)^l

    Rat Ktail(0);  // sum_{i<=l-2} C_i K_i^2 / C_{i+1}
    for (int i = 1; i <= l - 2; ++i)
        Ktail += Rat(ncf.C[i]) * ncf.K[i] * ncf.K[i] / Rat(ncf.C[i + 1]);

    sc.I_table.resize(aq);
    sc.P_table.resize(aq);
    sc.J_table.resize(aq);
    sc.K_table.resize(aq);
    int sp = -1, sm = -1;
    for (long long s = 0; s < aq; ++s) {
        const long long W = Cl1 * (2 * s + 1) + CK;  // C_{l-1}(2s+1+K_{l-1})
        long long I = (-W) % (2 * aq);
        if (I < 0) I += 2 * aq;
        sc.I_table[s] = I;
        sc.P_table[s] = (-W - I) / (2 * aq);
        sc.J_table[s] = Rat(2 * s + 1, q) + Jtail;
        sc.K_table[s] = (Cl1 == 0 ? Rat(0) : Rat(W, 1) * Rat(W, Cl1 * q)) + Ktail;
        if ((I - (1 - q)) % (2 * q) == 0) {
            sp = (int)s;
            sc.m_plus = (I - 1 + q) / (2 * q);
        }
        if ((I - (-1 - q)) % (2 * q) == 0) {
            sm = (int)s;
            sc.m_minus = (I + 1 + q) / (2 * q);
        }
    }
    if (sp < 0 || sm < 0)
        throw InternalError("build_combinatorics: no s+/s- index found (bad continued fraction)");
    sc.s_plus = sp;
    sc.s_minus = sm;
    return sc;
}

SurgeryCombinatorics surgery_data(long long p, long long q) {
    SurgerySlope slope = make_slope(p, q);
    return build_combinatorics(expand_ncf(slope), slope);
}

}  // namespace wpq
