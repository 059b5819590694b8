#include "invariants.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace wpq {

namespace {

long long checked_pow(long long base, int e, long long cap) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        v *= base;
        if (v > cap) return cap + 1;
    }
    return v;
}

template <class R>
R rat_to(const Rat& x) {
    return R(x.num()) / R(x.den());
}

/// e^{i pi x} with the rational exponent reduced mod 2 exactly first.
template <class R>
Cx<R> phase(const Rat& x) {
    return unit_phase(rat_to<R>(x.mod2()));
}

template <class R>
R sin_pi(const Rat& x) {
    using std::sin;
    return sin(pi_v<R>() * rat_to<R>(x.mod2()));
}

/// Deterministic pairwise tree reduction; also reports the largest magnitude
/// seen among inputs and intermediates (the cancellation witness).
template <class R>
Cx<R> pairwise_sum(std::vector<Cx<R>> v, R* max_mag) {
    using std::max;
    R mm(0);
    for (const auto& x : v) mm = max(mm, x.abs());
    while (v.size() > 1) {
        size_t h = (v.size() + 1) / 2;
        for (size_t i = 0; i + h < v.size(); ++i) {
            v[i] += v[i + h];
            mm = max(mm, v[i].abs());
        }
        v.resize(h);
    }
    if (max_mag) *max_mag = mm;
    return v.empty() ? Cx<R>{} : v[0];
}

template <class F>
void parallel_rows(size_t nrows, int workers, F&& body) {
    if (workers <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc ? (int)std::min<unsigned>(hc, 8) : 1;
    }
    workers = (int)std::min<size_t>((size_t)workers, nrows ? nrows : 1);
    if (workers <= 1) {
        for (size_t i = 0; i < nrows; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (nrows + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(nrows, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// Shared per-level tables
// ---------------------------------------------------------------------------

template <class R>
struct LevelTables {
    long long r;
    int N;
    R sin_unit;                  // sin(2 pi / r)
    std::vector<Cx<R>> bfact;    // {k}! for k = 0..r-1
    std::vector<Cx<R>> inv_bfact;
    std::vector<R> sin2pi;       // sin(2 pi k / r), k = 0..r-1

    explicit LevelTables(const QuantumLevel& lv) : r(lv.r), N(lv.N) {
        const R pi = pi_v<R>();
        using std::sin;
        sin2pi.resize(r);
        for (long long k = 0; k < r; ++k) sin2pi[k] = sin(R(2 * k) * pi / R(r));
        sin_unit = sin2pi[1];
        bfact.resize(r);
        bfact[0] = Cx<R>(R(1));
        for (long long k = 1; k < r; ++k)
            bfact[k] = bfact[k - 1] * Cx<R>(R(0), R(2) * sin2pi[k]);
        inv_bfact.resize(r);
        for (long long k = 0; k < r; ++k) inv_bfact[k] = Cx<R>(R(1)) / bfact[k];
    }

    R qint(long long k) const {  // [k] with k reduced mod r
        long long m = k % r;
        if (m < 0) m += r;
        return sin2pi[m] / sin_unit;
    }
};

// ---------------------------------------------------------------------------
// Reduced (collapsed) evaluation
// ---------------------------------------------------------------------------

template <class R>
struct ReducedEngine {
    const SurgeryCombinatorics& sc;
    const LevelTables<R>& T;
    long long r, aq;
    int N, l;
    Cx<R> kappa_pref;              // kappa_N * e^{i pi (3N/2 + 1/4 + b_l)} * sqrt(r)
    std::vector<Cx<R>> A;          // per (s, n') phase * sin factor
    std::vector<Cx<R>> B;          // per i' phase
    size_t ncols;                  // number of n' values = 2N

    ReducedEngine(const SurgeryCombinatorics& s, const LevelTables<R>& t) : sc(s), T(t) {
        using std::sqrt;
        r = T.r;
        N = T.N;
        aq = s.abs_q();
        l = s.ncf.length();
        const long long p = s.slope.p, q = s.slope.q;

        Rat kap_exp = Rat(s.ncf.b_last()) * Rat(6 * (long long)N + 3, 4);
        long long bsum = 0;
        for (long long bi : s.ncf.b) bsum += bi;
        kap_exp += Rat(bsum) + Rat(3 * (l + 1LL), 4);
        kap_exp += Rat(s.ncf.sigma) * (Rat(3, r) + Rat(r + 1, 4));        // e^{sigma(3/r+(r+1)/4) pi i}
        kap_exp += Rat(6 * (long long)N + 1, 4) + Rat(s.ncf.b_last());    // e^{i pi (3N/2 + 1/4 + b_l)}
        Rat exc = Rat(bsum);
        for (int i = 1; i <= l - 1; ++i) exc += Rat(1, s.ncf.C[i] * s.ncf.C[i + 1]);
        kap_exp -= exc / Rat(r);
        // 1/sqrt(q) is read with the chain's reciprocity phase (validated
        // against the direct sums across all convergent sign patterns)
        kap_exp += reciprocity_phase(s.ncf);
        kappa_pref = phase<R>(kap_exp) * Cx<R>(sqrt(R(r)) / (R(2 * r) * sqrt(R(s.abs_q()))));

        ncols = 2 * (size_t)N;
        A.resize(aq * ncols);
        B.resize((size_t)N);
        for (long long s_i = 0; s_i < aq; ++s_i) {
            Rat ks = Rat(-r) * sc.K_table[s_i] / Rat(4);
            Cx<R> ph_s = phase<R>(ks);
            if (sc.P_table[s_i] % 2 != 0) ph_s = Cx<R>(R(-1)) * ph_s;
            for (size_t c = 0; c < ncols; ++c) {
                long long tn = 2 * (long long)c - (2 * (long long)N - 1);  // 2n', odd
                Rat ex = Rat(p) * Rat(tn) * Rat(tn, 4 * q * r) - Rat(sc.I_table[s_i] * tn, 2 * q);
                R sn = sin_pi<R>(Rat(tn, r * q) - sc.J_table[s_i]);
                A[s_i * ncols + c] = ph_s * phase<R>(ex) * Cx<R>(sn);
            }
        }
        for (int k = 0; k < N; ++k) {
            long long ti = 2LL * k + 1;  // 2i', odd
            B[k] = phase<R>(Rat(ti * ti - 2 * ti - 8, 4 * r));
        }
    }

    /// J_m for color m = N - a; cancellation = max|partial|/|result|.
    Cx<R> color(int m, int workers, double* cancellation) const {
        using std::sin;
        const long long a = N - m;
        const size_t rows = (size_t)aq * ncols;
        std::vector<Cx<R>> partial(rows);
        const long long twoN = 2 * (long long)N;
        parallel_rows(rows, workers, [&](size_t row) {
            const size_t c = row % ncols;
            const long long tn = 2 * (long long)c - (twoN - 1);
            const long long lo_ti = std::max(std::max(tn, -tn), 2 * a + 1);
            Cx<R> acc{};
            for (long long ti = lo_ti; ti <= twoN - 1; ti += 2) {
                const long long a1 = (2 * twoN - 2 * a - ti - 1) / 2;  // 2N - a - i' - 1/2
                const long long a2 = (2 * twoN - tn - ti) / 2;         // 2N - n' - i'
                const long long a3 = (twoN - ti - 1) / 2;              // N - i' - 1/2
                const long long b1 = (ti - 2 * a - 1) / 2;             // i' - a - 1/2
                const long long b2 = (ti - tn) / 2;                    // i' - n'
                const long long b3 = twoN - ti;                        // 2N - 2i'
                Cx<R> fr = T.bfact[a1] * T.bfact[a2] * T.bfact[a3] * T.inv_bfact[b1] *
                           T.inv_bfact[b2] * T.inv_bfact[b3];
                acc += B[(size_t)((ti - 1) / 2)] * fr;
            }
            partial[row] = A[row] * acc;
        });
        R mm(0);
        Cx<R> tot = pairwise_sum(std::move(partial), &mm);
        const R pi = pi_v<R>();
        Cx<R> pref = kappa_pref * Cx<R>(R(1) / sin(R(2 * a + 1) * pi / R(r)));
        Cx<R> Jm = pref * tot;
        if (cancellation) {
            R ratio = (Jm.abs() > R(0)) ? mm / tot.abs() : R(0);
            *cancellation = (double)ratio;
        }
        return Jm;
    }

    Cx<R> jbar_from_j(int m, const Cx<R>& Jm) const {
        R f = T.sin2pi[m % r] / T.sin_unit;  // {m}/{1}
        Cx<R> v = Cx<R>(f) * Jm;
        return (m % 2 == 0) ? Cx<R>(R(-1)) * v : v;  // (-1)^{m-1}
    }
};

// ---------------------------------------------------------------------------
// Brute-force evaluation
// ---------------------------------------------------------------------------

template <class R>
struct BruteEngine {
    const SurgeryCombinatorics& sc;
    const LevelTables<R>& T;
    long long r;
    int N, l;
    bool conj;
    std::vector<Cx<R>> qphase;  // e^{+- i pi k / r}, k = 0..2r-1
    std::vector<Cx<R>> bf, inv_bf;  // brace factorials at t (or t-bar)

    BruteEngine(const SurgeryCombinatorics& s, const LevelTables<R>& t, bool conjugate)
        : sc(s), T(t), conj(conjugate) {
        r = T.r;
        N = T.N;
        l = s.ncf.length();
        qphase.resize(2 * r);
        for (long long k = 0; k < 2 * r; ++k) {
            Cx<R> ph = phase<R>(Rat(k, r));
            qphase[k] = conj ? ph.conj() : ph;
        }
        bf = T.bfact;
        inv_bf = T.inv_bfact;
        if (conj)
            for (long long k = 0; k < r; ++k) {
                bf[k] = bf[k].conj();
                inv_bf[k] = inv_bf[k].conj();
            }
    }

    Cx<R> phase_k(long long k) const {  // e^{+- i pi k / r}
        long long m = k % (2 * r);
        if (m < 0) m += 2 * r;
        return qphase[m];
    }

    /// <e_{m-1}, e_nu>_W
    Cx<R> habiro(int m, long long nu) const {
        Cx<R> tot{};
        const long long top = std::min<long long>(m - 1, nu);
        for (long long i = 0; i <= top; ++i) {
            if (nu + i + 1 >= r) continue;  // {nu+i+1}! contains {r} = 0
            Cx<R> term = phase_k(i * (i + 3)) * bf[m + i] * bf[nu + i + 1] * bf[i] *
                         inv_bf[m - 1 - i] * inv_bf[nu - i] * inv_bf[2 * i + 1];
            if (i % 2 != 0) term = Cx<R>(R(-1)) * term;
            tot += term;
        }
        if ((m - 1 + nu) % 2 != 0) tot = Cx<R>(R(-1)) * tot;
        Cx<R> inv_brace1 = Cx<R>(R(1)) / Cx<R>(R(0), R(2) * T.sin2pi[1]);
        return tot * (conj ? inv_brace1.conj() : inv_brace1);
    }

    Cx<R> jbar(int m) const {
        using std::pow;
        using std::sqrt;
        // sigma prefactor (sin(2pi/r)/sqrt r)^l e^{sigma(3/r + (r+1)/4) pi i}
        Rat sig = Rat(sc.ncf.sigma) * (Rat(3, r) + Rat(r + 1, 4));
        Cx<R> sig_ph = phase<R>(sig);
        if (conj) sig_ph = sig_ph.conj();
        Cx<R> pref = sig_ph;
        R amp = T.sin_unit / sqrt(R(r));
        for (int j = 0; j < l; ++j) pref = amp * pref;

        std::vector<Cx<R>> hab(r);
        for (long long n = 1; n < r; ++n) hab[n] = habiro(m, n - 1);
        // per-component weights w_j(n) = (-1)^{b_j (n-1)} t^{b_j (n^2-1)/4}
        std::vector<std::vector<Cx<R>>> w(l, std::vector<Cx<R>>(r));
        for (int j = 0; j < l; ++j) {
            const long long bj = sc.ncf.b[j];
            for (long long n = 1; n < r; ++n) {
                Cx<R> v = phase_k(bj * (n * n - 1));
                if ((bj * (n - 1)) % 2 != 0) v = Cx<R>(R(-1)) * v;
                w[j][n] = v;
            }
        }
        Cx<R> tot{};
        // l nested sums, innermost carries the (-1)^{n_l} twist eigenvalue sign
        auto rec = [&](auto&& self, int j, Cx<R> acc, long long prev) -> void {
            if (j == l) {
                Cx<R> term = acc * hab[prev];
                if (prev % 2 == 0) term = Cx<R>(R(-1)) * term;  // (-1)^{n_l} = (-1)^{n'_l - 1}
                tot += term;
                return;
            }
            for (long long n = 1; n < r; ++n) {
                Cx<R> a = acc * w[j][n];
                a = Cx<R>(j == 0 ? T.qint(n) : T.qint(prev * n)) * a;
                self(self, j + 1, a, n);
            }
        };
        rec(rec, 0, Cx<R>(R(1)), 0);
        return pref * tot;
    }

    Cx<R> j_from_jbar(int m, const Cx<R>& jb) const {
        R f = T.sin_unit / T.sin2pi[m % r];  // {1}/{m}
        Cx<R> v = Cx<R>(f) * jb;
        return (m % 2 == 0) ? Cx<R>(R(-1)) * v : v;
    }
};

// ---------------------------------------------------------------------------
// Drivers
// ---------------------------------------------------------------------------

template <class R>
InvariantResult run_reduced(const SurgeryCombinatorics& sc, const QuantumLevel& level, int color,
                            const InvariantOptions& opt) {
    LevelTables<R> T(level);
    ReducedEngine<R> eng(sc, T);
    InvariantResult out;
    out.used = std::is_same_v<R, double> ? Precision::Double : Precision::Extended;
    const int lo = color ? color : 1, hi = color ? color : level.N;
    for (int m = lo; m <= hi; ++m) {
        double canc = 0.0;
        Cx<R> Jm = eng.color(m, opt.workers, &canc);
        Cx<R> Jb = eng.jbar_from_j(m, Jm);
        out.samples.push_back({m, Jb.to_double(), Jm.to_double()});
        out.cancellation = std::max(out.cancellation, canc);
    }
    return out;
}

template <class R>
InvariantResult run_brute(const SurgeryCombinatorics& sc, const QuantumLevel& level, int color,
                          const InvariantOptions& opt, bool conj) {
    (void)opt;
    LevelTables<R> T(level);
    BruteEngine<R> eng(sc, T, conj);
    InvariantResult out;
    out.used = std::is_same_v<R, double> ? Precision::Double : Precision::Extended;
    const int lo = color ? color : 1, hi = color ? color : level.N;
    for (int m = lo; m <= hi; ++m) {
        Cx<R> Jb = eng.jbar(m);
        Cx<R> Jm = eng.j_from_jbar(m, Jb);
        out.samples.push_back({m, Jb.to_double(), Jm.to_double()});
    }
    return out;
}

}  // namespace

cplx habiro_bracket(int m, long long n, const QuantumLevel& level) {
    if (m < 1 || m > level.N)
        throw DomainError("habiro_bracket: need 1 <= m <= N");
    if (n < 0 || n > level.r - 2)
        throw DomainError("habiro_bracket: need 0 <= n <= r-2");
    LevelTables<double> T(level);
    SurgeryCombinatorics dummy;  // habiro needs no surgery data
    BruteEngine<double> eng(dummy, T, false);
    return eng.habiro(m, n).to_double();
}

InvariantResult rt_bruteforce(const SurgeryCombinatorics& sc, const QuantumLevel& level, int color,
                              const InvariantOptions& opt) {
    if (color != 0 && (color < 1 || color > level.N))
        throw DomainError("rt_bruteforce: need 1 <= color <= N");
    const long long budget = 100000000;
    long long cost = checked_pow(level.r - 1, sc.ncf.length(), budget);
    if (cost > budget)
        throw InfeasibleError("rt_bruteforce: (r-1)^l = " + std::to_string(level.r - 1) + "^" +
                              std::to_string(sc.ncf.length()) + " exceeds the 1e8 term budget");
    if (opt.precision == Precision::Extended)
        return run_brute<ext_float>(sc, level, color, opt, false);
    return run_brute<double>(sc, level, color, opt, false);
}

InvariantResult rt_bruteforce_conj(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                                   int color, const InvariantOptions& opt) {
    return run_brute<double>(sc, level, color, opt, true);
}

InvariantResult rt_reduced(const SurgeryCombinatorics& sc, const QuantumLevel& level, int color,
                           const InvariantOptions& opt) {
    if (color != 0 && (color < 1 || color > level.N))
        throw DomainError("rt_reduced: need 1 <= color <= N");
    switch (opt.precision) {
        case Precision::Double:
            return run_reduced<double>(sc, level, color, opt);
        case Precision::Extended:
            return run_reduced<ext_float>(sc, level, color, opt);
        case Precision::Auto:
        default: {
            if (level.N > 100) return run_reduced<ext_float>(sc, level, color, opt);
            InvariantResult res = run_reduced<double>(sc, level, color, opt);
            if (res.cancellation > opt.escalate_ratio)
                return run_reduced<ext_float>(sc, level, color, opt);
            return res;
        }
    }
}

cplx gauss_sum_S(long long n_l, const QuantumLevel& level, const SurgeryCombinatorics& sc) {
    if (n_l < 1 || n_l > 2 * level.N)
        throw DomainError("gauss_sum_S: need 1 <= n_l <= 2N");
    const long long r = level.r, q = sc.slope.q, aq = sc.abs_q();
    const int l = sc.ncf.length();
    const auto& C = sc.ncf.C;
    const auto& K = sc.ncf.K;
    // tau' with fractional powers of -1 read as e^{i pi x}
    Rat tex = Rat(l + 1, 4);
    for (int i = 1; i <= l - 1; ++i) tex -= Rat(1, C[i] * C[i + 1]) / Rat(r);
    for (int i = 1; i <= l - 2; ++i) tex -= Rat(r) * (Rat(C[i]) * K[i] * K[i] / Rat(C[i + 1])) / Rat(4);
    tex += reciprocity_phase(sc.ncf);  // the 1/sqrt(q) reciprocity phase
    Cx<double> tau = phase<double>(tex) *
                     Cx<double>(std::pow(2.0, l) * std::pow((double)r, 0.5 * (l - 1)) /
                                std::sqrt((double)aq));
    const Rat Klm1 = (l >= 2) ? K[l - 1] : Rat(0);
    Cx<double> tot{};
    for (long long s = 0; s < aq; ++s) {
        Rat base = Rat(n_l + s * r) + Klm1 * Rat(r, 2);
        Rat ee = -(Rat(C[l - 1], q) * base * base) / Rat(r);
        // sin(-pi ((-1)^l (2 n_l + 2 s r)/(r q) - sum_i (-1)^i K_i / C_{i+1}))
        Rat sarg = Rat((l % 2 == 0) ? -(2 * n_l + 2 * s * r) : (2 * n_l + 2 * s * r), r * q);
        for (int i = 1; i <= l - 1; ++i) {
            Rat term = K[i] / Rat(C[i + 1]);
            sarg += (i % 2 == 0) ? term : -term;
        }
        tot += phase<double>(ee) * Cx<double>(sin_pi<double>(sarg));
    }
    return (tau * tot).to_double();
}

cplx gauss_sum_direct(long long n_l, const QuantumLevel& level, const SurgeryCombinatorics& sc) {
    const long long r = level.r;
    const int l = sc.ncf.length();
    LevelTables<double> T(level);
    BruteEngine<double> eng(sc, T, false);
    if (l == 1) return Cx<double>(0.0, 2.0 * T.sin2pi[n_l % r]).to_double();
    Cx<double> tot{};
    auto rec = [&](auto&& self, int j, Cx<double> acc, long long prev) -> void {
        if (j == l - 1) {
            tot += acc * Cx<double>(0.0, 2.0 * T.sin2pi[(prev * n_l) % r]);
            return;
        }
        for (long long n = 1; n < r; ++n) {
            Cx<double> a = acc * eng.phase_k(sc.ncf.b[j] * n * n);
            if ((sc.ncf.b[j] * n) % 2 != 0) a = Cx<double>(-1.0) * a;
            Cx<double> br(0.0, 2.0 * T.sin2pi[j == 0 ? n : (prev * n) % r]);
            self(self, j + 1, a * br, n);
        }
    };
    rec(rec, 0, Cx<double>(1.0), 0);
    return tot.to_double();
}

double mu_r_squared(const QuantumLevel& level, MuConvention mu) {
    const double s = std::sin(2.0 * pi_v<double>() / (double)level.r);
    if (mu == MuConvention::SinOverSqrtR) return s * s / (double)level.r;
    return 2.0 * s * s / level.M();
}

TVSeries turaev_viro(const SurgeryCombinatorics& sc, const QuantumLevel& level,
                     const InvariantOptions& opt, MuConvention mu) {
    TVSeries tv;
    tv.r = level.r;
    tv.mu_r_sq = mu_r_squared(level, mu);
    InvariantResult res = rt_reduced(sc, level, 0, opt);
    tv.used = res.used;
    tv.per_color.reserve(res.samples.size());
    double tot = 0.0;
    for (const auto& s : res.samples) {
        double v = std::norm(s.j_bar);
        tv.per_color.push_back(v);
        tot += v;
    }
    tv.total = tv.mu_r_sq * tot;
    return tv;
}

}  // namespace wpq
