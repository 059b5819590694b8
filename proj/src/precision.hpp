#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <complex>

namespace wpq {

/// Extended working precision for the invariant sums (~166-bit significand).
/// The Gauss-sum cancellation in the collapsed color sums eats roughly
/// 0.38*(N+1/2) nats of precision, which exhausts a double near N ~ 90.
using ext_float = boost::multiprecision::cpp_bin_float_50;

enum class Precision { Auto, Double, Extended };

template <class R>
inline R pi_v() { return boost::math::constants::pi<R>(); }
template <>
inline double pi_v<double>() { return 3.14159265358979323846264338327950288; }

/// Minimal complex type usable with both double and multiprecision reals.
/// (std::complex is only specified for the builtin floating types.)
template <class R>
struct Cx {
    R re{}, im{};

    Cx() = default;
    Cx(const R& r) : re(r) {}
    Cx(const R& r, const R& i) : re(r), im(i) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const R& s, const Cx& a) { return {s * a.re, s * a.im}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx& operator+=(const Cx& b) { re += b.re; im += b.im; return *this; }
    Cx& operator*=(const Cx& b) { *this = *this * b; return *this; }
    Cx conj() const { return {re, -im}; }

    R abs2() const { return re * re + im * im; }
    R abs() const { using std::sqrt; return sqrt(abs2()); }

    std::complex<double> to_double() const { return {(double)re, (double)im}; }
};

/// e^{i pi x}
template <class R>
inline Cx<R> unit_phase(const R& x) {
    using std::cos;
    using std::sin;
    R a = pi_v<R>() * x;
    return {cos(a), sin(a)};
}

/// sqrt reading fractional powers of negative reals as phases:
/// sqrt(q) = e^{(1/2) log|q| + i pi/2} = i sqrt(|q|) for q < 0.
template <class R>
inline Cx<R> sqrt_signed(long long q) {
    using std::sqrt;
    if (q >= 0) return {sqrt(R(q)), R(0)};
    return {R(0), sqrt(R(-q))};
}

}  // namespace wpq
