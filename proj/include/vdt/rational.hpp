#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

namespace vdt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
/// Stored in lowest terms (cpp_rational normalizes on construction),
/// so equality is exact.
struct GaussianRational {
    BigRat re;
    BigRat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(BigRat r) : re(std::move(r)), im(0) {}
    GaussianRational(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(std::int64_t r) : re(r), im(0) {}
    GaussianRational(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    static GaussianRational i() { return {BigRat(0), BigRat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    BigRat norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        BigRat n2 = b.norm2();
        if (n2 == 0) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = a * b.conj();
        return {num.re / n2, num.im / n2};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.str();
    }
};

inline std::string GaussianRational::str() const {
    if (im == 0) return re.str();
    if (re == 0) return im.str() + "*i";
    std::string s = re.str();
    s += (im > 0) ? "+" : "";
    s += im.str() + "*i";
    return s;
}

/// a^e for integer e >= 0 (rational base).
inline BigRat pow_rat(const BigRat& a, unsigned long e) {
    BigRat r = 1, b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline GaussianRational pow_gr(const GaussianRational& a, unsigned long e) {
    GaussianRational r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace vdt
