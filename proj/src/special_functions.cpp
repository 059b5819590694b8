#include "special_functions.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace wpq {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

// ---------------------------------------------------------------------------
// Quantum level
// ---------------------------------------------------------------------------

QuantumLevel make_level(int N) {
    if (N < 1) throw DomainError("make_level: N must be >= 1");
    QuantumLevel lv;
    lv.N = N;
    lv.r = 2LL * N + 1;
    lv.t = std::polar(1.0, 4.0 * kPi / (double)lv.r);
    return lv;
}

double quantum_integer(double n, const QuantumLevel& level) {
    return std::sin(2.0 * kPi * n / (double)level.r) / std::sin(2.0 * kPi / (double)level.r);
}

cplx brace(double n, const QuantumLevel& level) {
    return {0.0, 2.0 * std::sin(2.0 * kPi * n / (double)level.r)};
}

cplx brace_factorial(long long n, const QuantumLevel& level) {
    if (n < 0 || n >= level.r)
        throw DomainError("brace_factorial: need 0 <= n <= r-1, got n=" + std::to_string(n));
    cplx acc = 1.0;
    for (long long k = 1; k <= n; ++k) acc *= brace((double)k, level);
    return acc;
}

cplx pochhammer_t(long long n, const QuantumLevel& level) {
    if (n < 0 || n >= level.r)
        throw DomainError("pochhammer_t: need 0 <= n <= r-1, got n=" + std::to_string(n));
    cplx acc = 1.0;
    for (long long k = 1; k <= n; ++k)
        acc *= 1.0 - std::polar(1.0, 4.0 * kPi * (double)k / (double)level.r);
    return acc;
}

// ---------------------------------------------------------------------------
// zeta(2n)
// ---------------------------------------------------------------------------

double zeta_even(int n) {
    if (n < 1) throw DomainError("zeta_even: n >= 1");
    static const double pi2 = kPi * kPi;
    switch (n) {
        case 1: return pi2 / 6.0;
        case 2: return pi2 * pi2 / 90.0;
        case 3: return pi2 * pi2 * pi2 / 945.0;
        case 4: return pi2 * pi2 * pi2 * pi2 / 9450.0;
        case 5: return pi2 * pi2 * pi2 * pi2 * pi2 / 93555.0;
        case 6: return 691.0 * std::pow(kPi, 12) / 638512875.0;
        default: break;
    }
    double s = 0.0;
    for (int k = 200; k >= 1; --k) s += std::pow((double)k, -2.0 * n);
    return s;
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------

namespace {

// Li2 power series for |z| <= 1/2
cplx li2_series(cplx z) {
    cplx zn = z, sum = z;
    for (int n = 2; n < 80; ++n) {
        zn *= z;
        cplx term = zn / (double)(n * n);
        sum += term;
        if (std::norm(term) < 1e-66 * std::norm(sum)) break;
    }
    return sum;
}

// Li2 via u = -log(1-z):  sum_{k} B_k u^{k+1}/(k+1)!  (odd Bernoullis vanish
// past B_1), valid for |u| < 2 pi; used when 1/2 < |z| <= 1, Re z <= 1/2.
cplx li2_log_series(cplx z) {
    static std::vector<double> coeff = [] {
        std::vector<double> c;  // c[k] multiplies u^{2k+1}, k >= 1
        for (int k = 1; k <= 32; ++k) {
            double v = 2.0 * zeta_even(k) / ((2.0 * k + 1.0) * std::pow(2.0 * kPi, 2.0 * k));
            c.push_back((k % 2 == 1) ? v : -v);
        }
        return c;
    }();
    const cplx u = -std::log(1.0 - z);
    const cplx u2 = u * u;
    cplx sum = u - 0.25 * u2;
    cplx upow = u * u2;
    for (size_t k = 0; k < coeff.size(); ++k) {
        cplx term = coeff[k] * upow;
        sum += term;
        if (std::norm(term) < 1e-66 * std::norm(sum)) break;
        upow *= u2;
    }
    return sum;
}

}  // namespace

cplx dilog(cplx z, bool* on_cut) {
    if (on_cut) *on_cut = false;
    if (z.imag() == 0.0 && z.real() > 1.0) {
        if (on_cut) *on_cut = true;
        z = cplx(z.real(), -0.0);  // limit from the lower half-plane
    }
    static const double pi2_6 = kPi * kPi / 6.0;
    if (z == cplx(0.0, 0.0)) return 0.0;
    if (z == cplx(1.0, 0.0)) return pi2_6;
    const double az = std::abs(z);
    if (az > 1.0 + 1e-14) {
        // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - (1/2) log^2(-z)
        cplx lmz = std::log(-z);
        return -dilog(1.0 / z) - pi2_6 - 0.5 * lmz * lmz;
    }
    if (z.real() > 0.5) {
        // reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
        return pi2_6 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);
    }
    if (az <= 0.5) return li2_series(z);
    return li2_log_series(z);
}

double lobachevsky(double theta) {
    // reduce to [0, 1/2] using oddness and period 1
    double th = theta - std::floor(theta);
    double sign = 1.0;
    if (th > 0.5) { th = 1.0 - th; sign = -1.0; }
    if (th == 0.0 || th == 0.5) return 0.0;
    // Clausen: Cl2(x) = x - x log x + sum zeta(2n)/(n(2n+1)) (x/2pi)^{2n} x
    const double x = 2.0 * kPi * th;
    const double w = x / (2.0 * kPi);
    const double w2 = w * w;
    double sum = 0.0, wp = w2;
    for (int n = 1; n <= 36; ++n) {
        double term = zeta_even(n) / (n * (2.0 * n + 1.0)) * wp;
        sum += term;
        if (term < 1e-18 * (1.0 + sum)) break;
        wp *= w2;
    }
    const double cl2 = x - x * std::log(x) + x * sum;
    return sign * cl2 / (2.0 * kPi);
}

// ---------------------------------------------------------------------------
// phi_N contour quadrature
// ---------------------------------------------------------------------------

namespace {

// Gauss-Kronrod 15(7) nodes/weights on [-1,1] (positive half).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct QuadResult {
    cplx value;
    double err;
    long evals;
};

template <class F>
QuadResult gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx resg = 0.0, resk = 0.0;
    for (int j = 0; j < 7; ++j) {
        cplx fv = f(c + h * kXgk[j]) + f(c - h * kXgk[j]);
        resk += kWgk[j] * fv;
        if (j % 2 == 1) resg += kWg[j / 2] * fv;
    }
    cplx f0 = f(c);
    resk += kWgk[7] * f0;
    resg += kWg[3] * f0;
    return {resk * h, std::abs(resk - resg) * std::abs(h), 15};
}

template <class F>
QuadResult adaptive(F&& f, double a, double b, double tol, long budget) {
    QuadResult whole = gk15(f, a, b);
    struct Seg { double a, b; cplx v; double e; };
    std::vector<Seg> stack{{a, b, whole.value, whole.err}};
    cplx total = 0.0;
    double err = 0.0;
    long evals = whole.evals;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.e <= tol * std::max(1e-3, (s.b - s.a) / (b - a)) || (s.b - s.a) < 1e-13 ||
            evals > budget) {
            total += s.v;
            err += s.e;
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        QuadResult L = gk15(f, s.a, m), R = gk15(f, m, s.b);
        evals += 30;
        stack.push_back({s.a, m, L.value, L.err});
        stack.push_back({m, s.b, R.value, R.err});
    }
    return {total, err, evals};
}

}  // namespace

cplx phi_N(cplx theta, const QuantumLevel& level, const ContourSpec& spec) {
    double re = theta.real();
    // boundary values Re = 0,1 still give convergent tails (rate 1/M from
    // the second sinh) and are needed by the Pochhammer identities at n = N;
    // lattice points landing on the boundary with rounding noise get snapped
    if (re < 0.0 && re > -1e-12) re = 0.0;
    if (re > 1.0 && re < 1.0 + 1e-12) re = 1.0;
    theta = cplx(re, theta.imag());
    if (!(re >= 0.0 && re <= 1.0))
        throw DomainError("phi_N: need 0 <= Re(theta) <= 1, got Re = " + std::to_string(re));
    const double M = level.M();
    const cplx s = 2.0 * theta - 1.0;
    auto f = [&](cplx x) { return std::exp(s * x) / (4.0 * x * std::sinh(x) * std::sinh(x / M)); };

    const double target = spec.target_abs_err;
    // tail bound for |x| >= max(1, M):
    // |f(x)| <= e^{-(alpha + 1/M)|x|} / (|x| (1-e^-2)^2)
    auto cutoff = [&](double alpha) {
        if (spec.tail_cutoff > 0.0) return spec.tail_cutoff;
        const double beta = alpha + 1.0 / M;
        const double c2 = (1.0 - std::exp(-2.0)) * (1.0 - std::exp(-2.0));
        double T = std::max(8.0, M);
        auto bound = [&](double TT) { return std::exp(-beta * TT) / (TT * c2 * beta); };
        while (bound(T) > 0.1 * target && T < 4e6) T *= 1.3;
        return T;
    };
    const double ap = 2.0 - 2.0 * re, am = 2.0 * re;
    const double Tp = cutoff(ap), Tm = cutoff(am);

    cplx total = 0.0;
    double err = 0.0;
    long evals = 0;
    auto add = [&](QuadResult r) {
        total += r.value;
        err += r.err;
        evals += r.evals;
    };
    // real tails in geometrically growing segments
    auto tail = [&](double T, int dir) {
        double lo = 1.0;
        while (lo < T) {
            double hi = std::min(T, lo * 2.0);
            add(adaptive([&](double x) { return f(cplx(dir * x, 0.0)); }, lo, hi,
                         0.2 * target / std::max(1.0, std::log2(T)), spec.node_budget));
            lo = hi;
        }
    };
    tail(Tp, +1);
    tail(Tm, -1);
    // upper unit semicircle from -1 to 1: x = e^{i(pi - a)}, a in [0, pi]
    add(adaptive(
        [&](double a) {
            cplx x = std::polar(1.0, kPi - a);
            return f(x) * cplx(0.0, -1.0) * x;
        },
        0.0, kPi, 0.2 * target, spec.node_budget));

    if (err > target * 50.0)
        throw AccuracyError("phi_N: quadrature achieved abs error estimate " + std::to_string(err) +
                            " above target " + std::to_string(target));
    return total;
}

}  // namespace wpq
