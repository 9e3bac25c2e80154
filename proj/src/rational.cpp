#include "cpn/rational.hpp"

#include <cmath>

namespace cpn {

mpq_class rational_from_string(const std::string& s) {
    if (s.empty()) return mpq_class(0);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::from_strings(const std::string& re_s, const std::string& im_s) {
    return {rational_from_string(re_s), rational_from_string(im_s)};
}

GaussianRational GaussianRational::inverse() const {
    mpq_class n = norm_sq();
    if (n == 0) throw ValidationError("division by zero Gaussian rational");
    return {re / n, -im / n};
}

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (im == 0) return re.get_str();
    if (re != 0) {
        s = re.get_str();
        if (im > 0) s += "+";
    }
    if (im == 1)
        s += "i";
    else if (im == -1)
        s += "-i";
    else
        s += im.get_str() + "*i";
    return s;
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw ValidationError("division by zero coefficient");
    // (a + b√2)⁻¹ = (a − b√2)/(a² − 2b²); a² − 2b² = 0 over Q(i) forces a = b = 0.
    GaussianRational den = base * base - GaussianRational(2) * (surd * surd);
    GaussianRational den_inv = den.inverse();
    return {base * den_inv, -surd * den_inv};
}

std::complex<double> Coeff::to_complex() const {
    static const double kSqrt2 = std::sqrt(2.0);
    return base.to_complex() + kSqrt2 * surd.to_complex();
}

std::string Coeff::to_string() const {
    if (is_zero()) return "0";
    if (surd.is_zero()) return base.to_string();
    std::string s;
    if (!base.is_zero()) s = base.to_string() + "+";
    if (surd == GaussianRational(1))
        s += "sqrt2";
    else
        s += "(" + surd.to_string() + ")*sqrt2";
    return s;
}

}  // namespace cpn
