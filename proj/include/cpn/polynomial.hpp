#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "cpn/rational.hpp"

namespace cpn {

/// Exponent pair of a monomial ξ₊^dp · ξ₋^dm.
struct Monomial {
    long dp = 0;
    long dm = 0;
    friend bool operator==(Monomial a, Monomial b) { return a.dp == b.dp && a.dm == b.dm; }
};

/// Graded lexicographic order with ξ₊ > ξ₋: total degree first, then dp.
struct GrlexLess {
    bool operator()(Monomial a, Monomial b) const {
        long ta = a.dp + a.dm, tb = b.dp + b.dm;
        if (ta != tb) return ta < tb;
        return a.dp < b.dp;
    }
};

/// Sparse bivariate polynomial in the commuting formal variables ξ₊, ξ₋ over
/// Q(i, √2).  Canonical form: no stored zero coefficients; the zero
/// polynomial has an empty term map.
class BiPolynomial {
  public:
    using TermMap = std::map<Monomial, Coeff, GrlexLess>;

    BiPolynomial() = default;
    BiPolynomial(long v) { set_term({0, 0}, Coeff(v)); }  // NOLINT(google-explicit-constructor)
    BiPolynomial(const Coeff& c) { set_term({0, 0}, c); }  // NOLINT(google-explicit-constructor)

    static BiPolynomial monomial(const Coeff& c, long dp, long dm);
    static BiPolynomial xi_plus() { return monomial(Coeff(1), 1, 0); }
    static BiPolynomial xi_minus() { return monomial(Coeff(1), 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Coeff constant_term() const;
    long degree_plus() const;   // max dp
    long degree_minus() const;  // max dm
    long total_degree() const;  // max dp+dm, -1 for zero
    std::size_t term_count() const { return terms_.size(); }

    /// Leading monomial/coefficient under grlex; polynomial must be nonzero.
    Monomial leading_monomial() const;
    const Coeff& leading_coeff() const;

    void set_term(Monomial m, const Coeff& c);
    void add_term(Monomial m, const Coeff& c);

    BiPolynomial d_plus() const;
    BiPolynomial d_minus() const;
    /// Conjugate coefficients and swap ξ₊ ↔ ξ₋.
    BiPolynomial dagger() const;
    BiPolynomial pow(long n) const;

    std::complex<double> eval(std::complex<double> zp, std::complex<double> zm) const;

    std::string to_string() const;

    friend BiPolynomial operator+(const BiPolynomial& a, const BiPolynomial& b);
    friend BiPolynomial operator-(const BiPolynomial& a, const BiPolynomial& b);
    friend BiPolynomial operator-(const BiPolynomial& a);
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
    friend BiPolynomial operator*(const Coeff& c, const BiPolynomial& a);
    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.terms_ == b.terms_; }

  private:
    TermMap terms_;
};

/// Exact division a / b; throws Error if b does not divide a.
BiPolynomial exact_div(const BiPolynomial& a, const BiPolynomial& b);

/// GCD over Q(i,√2)[ξ₊, ξ₋], monic under grlex.  ξ₋ is treated as the outer
/// variable with content/primitive-part recursion over Q(i,√2)[ξ₊].
BiPolynomial poly_gcd(const BiPolynomial& a, const BiPolynomial& b);

}  // namespace cpn
