#include "cpn/surface.hpp"

#include <string>
#include <utility>

#include "cpn/errors.hpp"

namespace cpn {

namespace {

const RationalFunction kI = RationalFunction::i();

RationalFunction grat(const GaussianRational& g) { return RationalFunction(g); }

MatrixField shifted(const MatrixField& f, const GaussianRational& shift) {
    // F − i·shift·I
    MatrixField s = f;
    RationalFunction d = kI * grat(shift);
    for (int i = 0; i < f.rows(); ++i) s.at(i, i) = s.at(i, i) - d;
    return s;
}

}  // namespace

GaussianRational surface_constant(int k, int n) {
    mpq_class c(1 + 2 * k, n);
    c.canonicalize();
    return GaussianRational(c);
}

SurfaceField surface_from_tower(const ProjectorTower& tower, int k) {
    if (k < 0 || k >= tower.length())
        throw ValidationError("surface index k out of tower range");
    int n = tower.dim();
    GaussianRational ck = surface_constant(k, n);
    MatrixField acc = tower.elements[k].mat();
    for (int j = 0; j < k; ++j) acc = acc + RationalFunction(2) * tower.elements[j].mat();
    acc = acc - grat(ck) * MatrixField::identity(n);
    SurfaceField s{-kI * acc, k, ck};

    if (!(s.f.dagger() == -s.f) || !s.f.trace().is_zero())
        throw CertificateError("surface is not skew-Hermitian traceless");
    const MatrixField& pk = tower.elements[k].mat();
    if (!(s.f.d_plus() == -kI * commutator(pk.d_plus(), pk)) ||
        !(s.f.d_minus() == kI * commutator(pk.d_minus(), pk)))
        throw CertificateError("surface differential does not match ∓i[∂±P, P]");
    CertificateReport certs = certify_polynomials(s, tower.elements[k]);
    if (!certs.all()) throw CertificateError("surface polynomial certificates failed");
    return s;
}

RationalFunction killing_product(const MatrixField& a, const MatrixField& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
        throw ValidationError("killing product needs equal square matrices");
    RationalFunction half(BiPolynomial(1), BiPolynomial(Coeff(GaussianRational(2))));
    return -(half * (a * b).trace());
}

MatrixField tangent_plus(const Projector& p) {
    return -kI * commutator(p.mat().d_plus(), p.mat());
}

MatrixField tangent_minus(const Projector& p) {
    return kI * commutator(p.mat().d_minus(), p.mat());
}

RationalFunction log_lagrangian_mixed_derivative(const Projector& p) {
    RationalFunction L = lagrangian(p);
    if (L.is_zero()) throw ValidationError("undefined curvature: L is identically zero");
    return (L * L.d_plus().d_minus() - L.d_plus() * L.d_minus()) / (L * L);
}

RationalFunction gauss_curvature(const Projector& p) {
    RationalFunction L = lagrangian(p);
    if (L.is_zero()) throw ValidationError("undefined curvature: L is identically zero");
    return RationalFunction(-2) * log_lagrangian_mixed_derivative(p) / L;
}

RationalFunction gauss_curvature_covariant(const Projector& p, const VectorField& e, Dir dir) {
    MatrixField dP = cov_d(dir, p.mat(), p, e);
    MatrixField d2P = cov_d(dir, dP, p, e);
    RationalFunction n1 = sesq(dP, dP, p, e);
    if (n1.is_zero()) throw ValidationError("undefined curvature: ||DP||² is identically zero");
    RationalFunction n2 = sesq(d2P, d2P, p, e);
    RationalFunction ip = sesq(dP, d2P, p, e);
    return RationalFunction(4) -
           RationalFunction(2) * (n2 * n1 - ip * ip.dagger()) / (n1 * n1 * n1);
}

std::pair<MatrixField, RationalFunction> mean_curvature(const Projector& p) {
    RationalFunction L = lagrangian(p);
    if (L.is_zero()) throw ValidationError("undefined mean curvature: L is identically zero");
    MatrixField h = (RationalFunction(-4) * kI / L) * commutator(p.mat().d_plus(), p.mat().d_minus());
    if (!h.trace().is_zero()) throw CertificateError("mean curvature vector is not traceless");
    RationalFunction direct = killing_product(h, h);
    RationalFunction q = charge_density(p);
    RationalFunction closed = RationalFunction(4) * (L * L + RationalFunction(3) * q * q) / (L * L);
    if (!(direct == closed))
        throw CertificateError("mean curvature norm identity (H,H) = 4(L²+3q²)/L² violated");
    return {std::move(h), direct};
}

std::pair<RationalFunction, RationalFunction> christoffel(const Projector& p) {
    RationalFunction L = lagrangian(p);
    if (L.is_zero()) throw ValidationError("undefined Christoffel symbols: L is identically zero");
    RationalFunction gp = L.d_plus() / L, gm = L.d_minus() / L;
    if (!(gp.dagger() == gm)) throw CertificateError("Christoffel symbols are not conjugate");
    return {gp, gm};
}

Normals second_fundamental_normals(const Projector& p) {
    auto [gp, gm] = christoffel(p);
    MatrixField fp = tangent_plus(p), fm = tangent_minus(p);
    Normals n;
    n.npp = fp.d_plus() - gp * fp;
    n.npm = fm.d_plus();
    n.nmm = fm.d_minus() - gm * fm;
    for (const MatrixField* nn : {&n.npp, &n.npm, &n.nmm})
        if (!killing_product(*nn, fp).is_zero() || !killing_product(*nn, fm).is_zero())
            throw CertificateError("second fundamental normal is not orthogonal to the tangents");
    return n;
}

std::vector<GaussianRational> expected_char_poly(int k, int n) {
    GaussianRational ck = surface_constant(k, n);
    GaussianRational i01 = GaussianRational::i();
    std::vector<GaussianRational> roots;
    for (int j = 0; j < n - k - 1; ++j) roots.push_back(i01 * ck);
    roots.push_back(i01 * (ck - GaussianRational(1)));
    for (int j = 0; j < k; ++j) roots.push_back(i01 * (ck - GaussianRational(2)));

    std::vector<GaussianRational> coeffs{GaussianRational(1)};  // ascending after reverse
    for (const auto& r : roots) {
        std::vector<GaussianRational> next(coeffs.size() + 1);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] = next[j + 1] + coeffs[j];
            next[j] = next[j] - r * coeffs[j];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

CertificateReport certify_polynomials(const SurfaceField& s, const Projector& pk) {
    CertificateReport r;
    int n = s.f.rows();
    GaussianRational i01 = GaussianRational::i();

    auto cp = s.f.char_poly();
    auto expected = expected_char_poly(s.k, n);
    r.char_poly_ok = cp.size() == expected.size();
    if (r.char_poly_ok)
        for (std::size_t j = 0; j < cp.size(); ++j)
            if (!(cp[j] == grat(expected[j]))) {
                r.char_poly_ok = false;
                break;
            }

    MatrixField id = MatrixField::identity(n);
    // Minimal polynomial: degree 2 at the (anti-)holomorphic ends, degree 3
    // for mixed k; the cubic in (F − i(c_k−1)) annihilates every F_k.
    MatrixField s1 = shifted(s.f, s.c_k - GaussianRational(1));
    r.cubic_ok = (s1 * s1 * s1 + s1).is_zero();
    if (s.k == 0) {
        MatrixField t = shifted(s.f, s.c_k);
        r.min_poly_ok = (t * t + kI * t).is_zero();
    } else if (s.k == n - 1) {
        MatrixField t = shifted(s.f, s.c_k - GaussianRational(2));
        r.min_poly_ok = (t * t - kI * t).is_zero();
    } else {
        r.min_poly_ok = r.cubic_ok;
    }

    r.reconstruction_ok = (s1 * s1 + id == pk.mat());
    return r;
}

Classification classify_surface(const MatrixField& f) {
    Classification out;
    if (!f.is_square() || f.rows() == 0) {
        out.diagnostic = "input is not a nonempty square matrix";
        return out;
    }
    int n = f.rows();
    if (!(f.dagger() == -f)) {
        out.diagnostic = "matrix is not skew-Hermitian";
        return out;
    }

    RationalFunction det = f.determinant();
    if (!det.is_constant()) {
        out.diagnostic = "det certificate failed: determinant is not constant";
        return out;
    }
    Coeff detc = det.constant_value();
    if (!detc.is_gaussian()) {
        out.diagnostic = "det certificate failed: determinant is not in Q(i)";
        return out;
    }

    RationalFunction tr = f.trace();
    if (!tr.is_constant()) {
        out.diagnostic = "trace is not constant";
        return out;
    }
    Coeff trc = tr.constant_value();
    if (!trc.is_gaussian() || trc.base.re != 0) {
        out.diagnostic = "trace is not purely imaginary";
        return out;
    }
    mpq_class tau = trc.base.im;  // tr F = i·τ with τ real rational

    GaussianRational ipow(1);
    for (int j = 0; j < n; ++j) ipow = ipow * GaussianRational::i();

    std::string failures;
    for (int k = 0; k < n; ++k) {
        // The candidate spectrum {iλ ×(N−k−1), i(λ−1), i(λ−2) ×k} fixes λ
        // from the trace: τ = Nλ − (1+2k).
        mpq_class lambda_q = (tau + 1 + 2 * k);
        lambda_q /= n;
        GaussianRational lambda(lambda_q);
        bool canonical = lambda == surface_constant(k, n);

        GaussianRational expect = ipow;
        for (int j = 0; j < n - k - 1; ++j) expect = expect * lambda;
        expect = expect * (lambda - GaussianRational(1));
        for (int j = 0; j < k; ++j) expect = expect * (lambda - GaussianRational(2));
        if (!(detc.base == expect) ) {
            failures += "[k=" + std::to_string(k) + "] det mismatch; ";
            continue;
        }

        MatrixField g = shifted(f, lambda - GaussianRational(1));
        g = g * g;
        if (!(f.d_plus() == -kI * commutator(g.d_plus(), g)) ||
            !(f.d_minus() == kI * commutator(g.d_minus(), g))) {
            failures += "[k=" + std::to_string(k) + "] differential identity failed; ";
            continue;
        }
        MatrixField pmat = g + MatrixField::identity(n);
        try {
            Projector p(pmat);
            if (!is_el_solution(p).satisfied) {
                failures += "[k=" + std::to_string(k) + "] reconstructed P is not an E-L solution; ";
                continue;
            }
            out.accepted = true;
            out.k = k;
            out.lambda = lambda;
            out.canonical_lambda = canonical;
            out.projector = std::move(p);
            out.diagnostic = "accepted";
            return out;
        } catch (const CertificateError& err) {
            failures += "[k=" + std::to_string(k) + "] reconstructed P: " + err.what() + "; ";
            continue;
        }
    }
    out.diagnostic = failures.empty() ? "no candidate matched" : "det certificate failed: " + failures;
    if (failures.find("det mismatch") == std::string::npos && !failures.empty())
        out.diagnostic = failures;
    return out;
}

}  // namespace cpn
