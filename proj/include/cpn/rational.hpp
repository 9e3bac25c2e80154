#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "cpn/errors.hpp"

namespace cpn {

/// Exact complex rational a + b·i.  Arithmetic never rounds; the rational
/// components are arbitrary-precision (GMP).
struct GaussianRational {
    mpq_class re{0};
    mpq_class im{0};

    GaussianRational() = default;
    GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

    /// Parse from "p/q" strings (empty string means 0).
    static GaussianRational from_strings(const std::string& re_s, const std::string& im_s);
    static GaussianRational i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    /// |x|² = re² + im², an exact non-negative rational; zero iff x = 0.
    mpq_class norm_sq() const { return re * re + im * im; }
    GaussianRational inverse() const;

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string to_string() const;

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
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Element of the coefficient field Q(i, √2), stored as base + surd·√2 with
/// base, surd ∈ Q(i).  √2·√2 rewrites to 2; the field is closed under
/// inversion since √2 ∉ Q(i).  Plain Gaussian-rational values have surd = 0.
struct Coeff {
    GaussianRational base;
    GaussianRational surd;

    Coeff() = default;
    Coeff(long v) : base(v) {}  // NOLINT(google-explicit-constructor)
    Coeff(GaussianRational b) : base(std::move(b)) {}  // NOLINT(google-explicit-constructor)
    Coeff(GaussianRational b, GaussianRational s) : base(std::move(b)), surd(std::move(s)) {}

    static Coeff i() { return Coeff(GaussianRational::i()); }
    static Coeff sqrt2() { return {GaussianRational(0), GaussianRational(1)}; }

    bool is_zero() const { return base.is_zero() && surd.is_zero(); }
    bool is_gaussian() const { return surd.is_zero(); }
    /// Complex conjugation (√2 is real, so it fixes the surd tag).
    Coeff conj() const { return {base.conj(), surd.conj()}; }
    Coeff inverse() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    friend Coeff operator+(const Coeff& a, const Coeff& b) { return {a.base + b.base, a.surd + b.surd}; }
    friend Coeff operator-(const Coeff& a, const Coeff& b) { return {a.base - b.base, a.surd - b.surd}; }
    friend Coeff operator-(const Coeff& a) { return {-a.base, -a.surd}; }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        GaussianRational two(2);
        return {a.base * b.base + two * (a.surd * b.surd), a.base * b.surd + a.surd * b.base};
    }
    friend Coeff operator/(const Coeff& a, const Coeff& b) { return a * b.inverse(); }
    friend bool operator==(const Coeff& a, const Coeff& b) { return a.base == b.base && a.surd == b.surd; }
};

mpq_class rational_from_string(const std::string& s);

}  // namespace cpn
