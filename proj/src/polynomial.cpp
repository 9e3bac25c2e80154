#include "cpn/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "cpn/errors.hpp"

namespace cpn {

BiPolynomial BiPolynomial::monomial(const Coeff& c, long dp, long dm) {
    BiPolynomial p;
    p.set_term({dp, dm}, c);
    return p;
}

bool BiPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Coeff BiPolynomial::constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Coeff() : it->second;
}

long BiPolynomial::degree_plus() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dp);
    return d;
}

long BiPolynomial::degree_minus() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dm);
    return d;
}

long BiPolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    auto m = terms_.rbegin()->first;  // grlex maximum has maximal total degree
    return m.dp + m.dm;
}

Monomial BiPolynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Coeff& BiPolynomial::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void BiPolynomial::set_term(Monomial m, const Coeff& c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void BiPolynomial::add_term(Monomial m, const Coeff& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPolynomial BiPolynomial::d_plus() const {
    BiPolynomial r;
    for (const auto& [m, c] : terms_)
        if (m.dp > 0) r.add_term({m.dp - 1, m.dm}, Coeff(GaussianRational(m.dp)) * c);
    return r;
}

BiPolynomial BiPolynomial::d_minus() const {
    BiPolynomial r;
    for (const auto& [m, c] : terms_)
        if (m.dm > 0) r.add_term({m.dp, m.dm - 1}, Coeff(GaussianRational(m.dm)) * c);
    return r;
}

BiPolynomial BiPolynomial::dagger() const {
    BiPolynomial r;
    for (const auto& [m, c] : terms_) r.set_term({m.dm, m.dp}, c.conj());
    return r;
}

BiPolynomial BiPolynomial::pow(long n) const {
    if (n < 0) throw Error("negative polynomial power");
    BiPolynomial r(1);
    BiPolynomial b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

std::complex<double> BiPolynomial::eval(std::complex<double> zp, std::complex<double> zm) const {
    // Power tables beat repeated std::pow for the small degrees seen here.
    long maxp = degree_plus(), maxm = degree_minus();
    std::vector<std::complex<double>> pp(maxp + 1), pm(maxm + 1);
    pp[0] = pm[0] = 1.0;
    for (long k = 1; k <= maxp; ++k) pp[k] = pp[k - 1] * zp;
    for (long k = 1; k <= maxm; ++k) pm[k] = pm[k - 1] * zm;
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) acc += c.to_complex() * pp[m.dp] * pm[m.dm];
    return acc;
}

std::string BiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool unit = (cs == "1") && !(m.dp == 0 && m.dm == 0);
        if (!unit) {
            bool atom = cs.find_first_of("+-") == std::string::npos ||
                        (cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos);
            os << (atom ? cs : "(" + cs + ")");
            if (m.dp > 0 || m.dm > 0) os << "*";
        }
        if (m.dp > 0) os << "xp" << (m.dp > 1 ? "^" + std::to_string(m.dp) : "");
        if (m.dp > 0 && m.dm > 0) os << "*";
        if (m.dm > 0) os << "xm" << (m.dm > 1 ? "^" + std::to_string(m.dm) : "");
    }
    return os.str();
}

BiPolynomial operator+(const BiPolynomial& a, const BiPolynomial& b) {
    BiPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

BiPolynomial operator-(const BiPolynomial& a, const BiPolynomial& b) {
    BiPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

BiPolynomial operator-(const BiPolynomial& a) {
    BiPolynomial r;
    for (const auto& [m, c] : a.terms_) r.set_term(m, -c);
    return r;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    BiPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.dp + mb.dp, ma.dm + mb.dm}, ca * cb);
    return r;
}

BiPolynomial operator*(const Coeff& c, const BiPolynomial& a) {
    BiPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : a.terms_) r.set_term(m, c * cc);
    return r;
}

BiPolynomial exact_div(const BiPolynomial& a, const BiPolynomial& b) {
    if (b.is_zero()) throw Error("exact division by zero polynomial");
    BiPolynomial rem = a, quot;
    Monomial lb = b.leading_monomial();
    Coeff lb_inv = b.leading_coeff().inverse();
    while (!rem.is_zero()) {
        Monomial lr = rem.leading_monomial();
        if (lr.dp < lb.dp || lr.dm < lb.dm) throw Error("non-exact polynomial division");
        Monomial q{lr.dp - lb.dp, lr.dm - lb.dm};
        Coeff qc = rem.leading_coeff() * lb_inv;
        quot.add_term(q, qc);
        rem = rem - BiPolynomial::monomial(qc, q.dp, q.dm) * b;
    }
    return quot;
}

namespace {

// ---- dense univariate layer over Q(i,√2) (variable-agnostic) ----

using Univar = std::vector<Coeff>;  // u[k] = coeff of x^k

void trim(Univar& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

void make_monic(Univar& u) {
    trim(u);
    if (u.empty() || u.back() == Coeff(1)) return;
    Coeff inv = u.back().inverse();
    for (auto& c : u) c = inv * c;
}

// a := a mod g with g monic.
void uni_mod_monic(Univar& a, const Univar& g) {
    while (!g.empty() && a.size() >= g.size()) {
        Coeff f = a.back();
        std::size_t shift = a.size() - g.size();
        for (std::size_t k = 0; k + 1 < g.size(); ++k) a[shift + k] = a[shift + k] - f * g[k];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
}

// Monic-remainder Euclid; monic normalization of every remainder keeps
// coefficient growth subresultant-bounded.
Univar uni_gcd(Univar a, Univar b) {
    make_monic(a);
    make_monic(b);
    while (!b.empty()) {
        uni_mod_monic(a, b);
        std::swap(a, b);
        make_monic(b);
    }
    return a;
}

Coeff uni_eval(const Univar& u, const Coeff& t) {
    Coeff acc;
    for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc * t + *it;
    return acc;
}

// ---- views of a bivariate polynomial ----

Univar univar_in_plus(const BiPolynomial& p) {
    Univar u(p.is_zero() ? 0 : p.degree_plus() + 1);
    for (const auto& [m, c] : p.terms()) u[m.dp] = c;
    return u;
}

Univar univar_in_minus(const BiPolynomial& p) {
    Univar u(p.is_zero() ? 0 : p.degree_minus() + 1);
    for (const auto& [m, c] : p.terms()) u[m.dm] = c;
    return u;
}

BiPolynomial from_univar_plus(const Univar& u) {
    BiPolynomial p;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) p.set_term({static_cast<long>(k), 0}, u[k]);
    return p;
}

BiPolynomial from_univar_minus(const Univar& u) {
    BiPolynomial p;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) p.set_term({0, static_cast<long>(k)}, u[k]);
    return p;
}

// Coefficients of ξ₊^j as dense polynomials in ξ₋.
std::vector<Univar> plus_coefficients(const BiPolynomial& p) {
    std::vector<Univar> rows(p.degree_plus() + 1);
    long dm = p.degree_minus();
    for (auto& r : rows) r.assign(dm + 1, Coeff());
    for (const auto& [m, c] : p.terms()) rows[m.dp][m.dm] = c;
    for (auto& r : rows) trim(r);
    return rows;
}

// Content of p as a polynomial in ξ₊ over Q(i,√2)[ξ₋].
Univar content_in_minus(const BiPolynomial& p) {
    Univar g;
    for (auto& row : plus_coefficients(p)) {
        if (row.empty()) continue;
        g = uni_gcd(std::move(g), row);
        if (g.size() == 1) return g;  // unit content
    }
    return g;
}

// Evaluate p at ξ₋ = t: a dense polynomial in ξ₊.
Univar eval_minus(const BiPolynomial& p, const Coeff& t) {
    Univar u(p.is_zero() ? 0 : p.degree_plus() + 1);
    long maxm = p.degree_minus();
    std::vector<Coeff> tp(maxm + 1);
    tp[0] = Coeff(1);
    for (long k = 1; k <= maxm; ++k) tp[k] = tp[k - 1] * t;
    for (const auto& [m, c] : p.terms()) u[m.dp] = u[m.dp] + c * tp[m.dm];
    trim(u);
    return u;
}

bool divides(const BiPolynomial& d, const BiPolynomial& a) {
    if (a.is_zero()) return true;
    try {
        exact_div(a, d);
        return true;
    } catch (const Error&) {
        return false;
    }
}

BiPolynomial monic_grlex(BiPolynomial p) {
    if (p.is_zero()) return p;
    Coeff inv = p.leading_coeff().inverse();
    if (inv == Coeff(1)) return p;
    return inv * p;
}

}  // namespace

namespace {

Monomial monomial_content(const BiPolynomial& p) {
    Monomial m{-1, -1};
    for (const auto& [mm, c] : p.terms()) {
        m.dp = m.dp < 0 ? mm.dp : std::min(m.dp, mm.dp);
        m.dm = m.dm < 0 ? mm.dm : std::min(m.dm, mm.dm);
    }
    return m;
}

BiPolynomial shift_down(const BiPolynomial& p, Monomial m) {
    if (m.dp == 0 && m.dm == 0) return p;
    BiPolynomial r;
    for (const auto& [mm, c] : p.terms()) r.set_term({mm.dp - m.dp, mm.dm - m.dm}, c);
    return r;
}

}  // namespace

// Brown-style evaluation/interpolation GCD: contents off, gcd images at
// ξ₋ = t by monic univariate Euclid, leading coefficients imposed via
// γ = gcd(lc_A, lc_B), Lagrange interpolation, certified by trial division.
BiPolynomial poly_gcd(const BiPolynomial& a_in, const BiPolynomial& b_in) {
    if (a_in.is_zero()) return monic_grlex(b_in);
    if (b_in.is_zero()) return monic_grlex(a_in);
    if (a_in.is_constant() || b_in.is_constant()) return BiPolynomial(1);
    if (a_in == b_in) return monic_grlex(a_in);

    // Split off the common monomial factor; it is prime to the stripped parts.
    Monomial ma = monomial_content(a_in), mb = monomial_content(b_in);
    Monomial common{std::min(ma.dp, mb.dp), std::min(ma.dm, mb.dm)};
    BiPolynomial a = shift_down(a_in, ma), b = shift_down(b_in, mb);
    BiPolynomial common_mono = BiPolynomial::monomial(Coeff(1), common.dp, common.dm);
    if (a.is_constant() || b.is_constant()) return common_mono;

    auto finish = [&common, &common_mono](BiPolynomial g) {
        if (common.dp == 0 && common.dm == 0) return g;
        return g * common_mono;
    };
    if (a.degree_minus() == 0 && b.degree_minus() == 0)
        return finish(from_univar_plus(uni_gcd(univar_in_plus(a), univar_in_plus(b))));
    if (a.degree_plus() == 0 && b.degree_plus() == 0)
        return finish(from_univar_minus(uni_gcd(univar_in_minus(a), univar_in_minus(b))));

    Univar cont_a = content_in_minus(a), cont_b = content_in_minus(b);
    BiPolynomial cont_gcd = from_univar_minus(uni_gcd(cont_a, cont_b));
    BiPolynomial pa = exact_div(a, from_univar_minus(cont_a));
    BiPolynomial pb = exact_div(b, from_univar_minus(cont_b));

    auto rows_a = plus_coefficients(pa);
    auto rows_b = plus_coefficients(pb);
    Univar gamma = uni_gcd(rows_a.back(), rows_b.back());  // imposed leading coefficient
    long bound = static_cast<long>(gamma.size()) - 1 +
                 std::min(pa.degree_minus(), pb.degree_minus());

    std::vector<Coeff> points;
    std::vector<Univar> images;  // γ(t)·monic gcd image at ξ₋ = t
    long image_deg = -1;

    for (long trial = 0; trial < 512; ++trial) {
        // 0, 1, -1, 2, -2, ...
        long v = (trial + 1) / 2 * ((trial % 2) ? 1 : -1);
        Coeff t{GaussianRational(mpq_class(v))};
        Coeff gt = uni_eval(gamma, t);
        if (gt.is_zero()) continue;
        Univar at = eval_minus(pa, t), bt = eval_minus(pb, t);
        if (at.size() != rows_a.size() || bt.size() != rows_b.size()) continue;  // lc vanished
        Univar g = uni_gcd(std::move(at), std::move(bt));
        long d = static_cast<long>(g.size()) - 1;
        if (d == 0) return finish(monic_grlex(cont_gcd));  // primitive parts coprime
        if (image_deg >= 0 && d > image_deg) continue;  // unlucky point
        if (image_deg < 0 || d < image_deg) {
            image_deg = d;
            points.clear();
            images.clear();
        }
        for (auto& c : g) c = gt * c;
        points.push_back(t);
        images.push_back(std::move(g));
        if (static_cast<long>(points.size()) < bound + 1) continue;

        // Lagrange interpolation of each ξ₊-coefficient through the points.
        std::size_t npts = points.size();
        BiPolynomial h;
        for (long j = 0; j <= image_deg; ++j) {
            Univar coeff_poly;  // polynomial in ξ₋
            for (std::size_t i = 0; i < npts; ++i) {
                Coeff yi = (static_cast<long>(images[i].size()) > j) ? images[i][j] : Coeff();
                if (yi.is_zero()) continue;
                Univar basis{Coeff(1)};
                Coeff denom(1);
                for (std::size_t l = 0; l < npts; ++l) {
                    if (l == i) continue;
                    Univar next(basis.size() + 1);
                    for (std::size_t k = 0; k < basis.size(); ++k) {
                        next[k + 1] = next[k + 1] + basis[k];
                        next[k] = next[k] - points[l] * basis[k];
                    }
                    basis = std::move(next);
                    denom = denom * (points[i] - points[l]);
                }
                Coeff scale = yi * denom.inverse();
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if (basis[k].is_zero()) continue;
                    h.add_term({j, static_cast<long>(k)}, scale * basis[k]);
                }
            }
        }
        if (h.is_zero()) continue;
        Univar hc = content_in_minus(h);
        BiPolynomial candidate = exact_div(h, from_univar_minus(hc));
        if (divides(candidate, pa) && divides(candidate, pb))
            return finish(monic_grlex(cont_gcd * candidate));
        ++bound;  // insufficient points; gather one more and retry
    }
    throw Error("bivariate gcd did not stabilize");
}

}  // namespace cpn
