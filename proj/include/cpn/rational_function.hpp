#pragma once

#include <complex>
#include <string>

#include "cpn/polynomial.hpp"

namespace cpn {

/// Ratio of bivariate polynomials in (ξ₊, ξ₋), kept in canonical form:
/// num/den reduced by their GCD, den monic under grlex, den ≠ 0.  Equality
/// of canonical forms is exact equality of values.
class RationalFunction {
  public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Coeff c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(GaussianRational g) : num_(Coeff(std::move(g))), den_(1) {}  // NOLINT
    RationalFunction(BiPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(BiPolynomial num, BiPolynomial den);

    static RationalFunction xi_plus() { return RationalFunction(BiPolynomial::xi_plus()); }
    static RationalFunction xi_minus() { return RationalFunction(BiPolynomial::xi_minus()); }
    static RationalFunction i() { return RationalFunction(Coeff::i()); }

    const BiPolynomial& num() const { return num_; }
    const BiPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == BiPolynomial(1) && den_ == BiPolynomial(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant rational function; throws otherwise.
    Coeff constant_value() const;

    RationalFunction d_plus() const;
    RationalFunction d_minus() const;
    /// Conjugate coefficients and swap ξ₊ ↔ ξ₋ (Hermitian conjugation of a
    /// scalar field on the real slice ξ₋ = conj ξ₊).
    RationalFunction dagger() const;
    /// Substitute ξ± ← 1/w±  and clear denominators (inversion about the
    /// unit sphere); the result is again canonical, read in (w₊, w₋).
    RationalFunction invert_variables() const;
    RationalFunction inverse() const;

    /// Evaluate on the real slice at ξ₊ = z, ξ₋ = conj z.
    std::complex<double> eval(std::complex<double> z) const { return eval_at(z, std::conj(z)); }
    /// Formal bivariate evaluation at unrelated points (debugging only).
    std::complex<double> eval_at(std::complex<double> zp, std::complex<double> zm) const;

    std::string to_string() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    struct Canonical {};
    RationalFunction(BiPolynomial num, BiPolynomial den, Canonical)
        : num_(std::move(num)), den_(std::move(den)) {}
    static RationalFunction add_impl(const RationalFunction& a, const RationalFunction& b,
                                     bool negate);
    void canonicalize();
    BiPolynomial num_, den_;
};

}  // namespace cpn
