#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace epchar {

// Exact scalar types used throughout: multiplicities are arbitrary-precision
// integers, form values and Clifford coefficients are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Int& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Int binomial(const Int& n, std::uint64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (Int(k) > n) return 0;
    Int r = 1;
    for (std::uint64_t j = 0; j < k; ++j) {
        r *= n - Int(j);
        r /= Int(j + 1);
    }
    return r;
}

// Renders p/q with the denominator suppressed when it is 1.
inline std::string rational_str(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

// Element of Q(i); enough structure for the Dirac-square block arithmetic.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i_times(const Rational& r) { return {Rational(0), r}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool operator==(const GaussianRational& o) const = default;
};

inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return rational_str(z.re);
    return rational_str(z.re) + (z.im > 0 ? "+" : "") + rational_str(z.im) + "i";
}

}  // namespace epchar
