#include "cpn/rational_function.hpp"

#include <algorithm>
#include <cmath>

#include "cpn/errors.hpp"

namespace cpn {

RationalFunction::RationalFunction(BiPolynomial num, BiPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ValidationError("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = BiPolynomial(1);
        return;
    }
    BiPolynomial g = poly_gcd(num_, den_);
    if (!(g == BiPolynomial(1))) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Coeff lead = den_.leading_coeff();
    if (!(lead == Coeff(1))) {
        Coeff inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

Coeff RationalFunction::constant_value() const {
    if (!is_constant()) throw Error("constant_value() of non-constant rational function");
    return num_.constant_term();  // canonical den is the monic constant 1
}

namespace {

// Quotient rule with the common factor of (numerator, den) split off before
// the general reduction; the leftover gcd is almost always 1.
RationalFunction quotient_rule(const BiPolynomial& t, const BiPolynomial& den) {
    if (t.is_zero()) return {};
    BiPolynomial g = poly_gcd(t, den);
    if (g == BiPolynomial(1)) return {t, den * den};
    return {exact_div(t, g), exact_div(den, g) * den};
}

}  // namespace

RationalFunction RationalFunction::d_plus() const {
    return quotient_rule(num_.d_plus() * den_ - num_ * den_.d_plus(), den_);
}

RationalFunction RationalFunction::d_minus() const {
    return quotient_rule(num_.d_minus() * den_ - num_ * den_.d_minus(), den_);
}

RationalFunction RationalFunction::dagger() const { return {num_.dagger(), den_.dagger()}; }

RationalFunction RationalFunction::invert_variables() const {
    long dp = std::max(num_.degree_plus(), den_.degree_plus());
    long dm = std::max(num_.degree_minus(), den_.degree_minus());
    auto flip = [&](const BiPolynomial& p) {
        BiPolynomial r;
        for (const auto& [m, c] : p.terms()) r.set_term({dp - m.dp, dm - m.dm}, c);
        return r;
    };
    return {flip(num_), flip(den_)};
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ValidationError("division by the zero rational function");
    return {den_, num_};
}

std::complex<double> RationalFunction::eval_at(std::complex<double> zp, std::complex<double> zm) const {
    std::complex<double> d = den_.eval(zp, zm);
    if (std::abs(d) < 1e-300) throw NumericsError("rational function evaluated at a pole");
    return num_.eval(zp, zm) / d;
}

std::string RationalFunction::to_string() const {
    if (den_ == BiPolynomial(1)) {
        if (num_.term_count() <= 1) return num_.to_string();
        return "(" + num_.to_string() + ")";
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

const BiPolynomial& poly_one() {
    static const BiPolynomial one(1);
    return one;
}

}  // namespace

// Both inputs are canonical, so the sum needs gcd work only against the
// common denominator factor (Knuth 4.5.1): with g = gcd(d₁,d₂) and
// t = n₁(d₂/g) + n₂(d₁/g), h = gcd(t,g), the result (t/h)/((d₁/g)(d₂/h))
// is already reduced, and stays monic because gcds and quotients of monic
// polynomials are monic under grlex.
RationalFunction RationalFunction::add_impl(const RationalFunction& a, const RationalFunction& b,
                                            bool negate) {
    const BiPolynomial& n1 = a.num_;
    const BiPolynomial& d1 = a.den_;
    BiPolynomial n2 = negate ? -b.num_ : b.num_;
    const BiPolynomial& d2 = b.den_;
    if (n1.is_zero()) return {std::move(n2), d2, Canonical{}};
    if (n2.is_zero()) return a;
    BiPolynomial g = poly_gcd(d1, d2);
    if (g == poly_one()) {
        BiPolynomial t = n1 * d2 + n2 * d1;
        if (t.is_zero()) return {};
        return {std::move(t), d1 * d2, Canonical{}};
    }
    BiPolynomial t = n1 * exact_div(d2, g) + n2 * exact_div(d1, g);
    if (t.is_zero()) return {};
    BiPolynomial h = poly_gcd(t, g);
    if (h == poly_one()) return {std::move(t), exact_div(d1, g) * d2, Canonical{}};
    return {exact_div(t, h), exact_div(d1, g) * exact_div(d2, h), Canonical{}};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::add_impl(a, b, false);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::add_impl(a, b, true);
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
}

// Cross-reduction: with canonical inputs, (n₁/g₁)(n₂/g₂) over
// (d₁/g₂)(d₂/g₁) is canonical outright, g₁ = gcd(n₁,d₂), g₂ = gcd(n₂,d₁).
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    BiPolynomial g1 = poly_gcd(a.num_, b.den_);
    BiPolynomial g2 = poly_gcd(b.num_, a.den_);
    const bool t1 = g1 == poly_one(), t2 = g2 == poly_one();
    BiPolynomial num = (t1 ? a.num_ : exact_div(a.num_, g1)) *
                       (t2 ? b.num_ : exact_div(b.num_, g2));
    BiPolynomial den = (t2 ? a.den_ : exact_div(a.den_, g2)) *
                       (t1 ? b.den_ : exact_div(b.den_, g1));
    Coeff lead = den.leading_coeff();
    if (!(lead == Coeff(1))) {
        Coeff inv = lead.inverse();
        num = inv * num;
        den = inv * den;
    }
    return {std::move(num), std::move(den), RationalFunction::Canonical{}};  // NOLINT
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ValidationError("division by the zero rational function");
    return a * b.inverse();
}

}  // namespace cpn
