#include "cpn/projector.hpp"

#include <string>

#include "cpn/errors.hpp"

namespace cpn {

Projector::Projector(MatrixField m) : mat_(std::move(m)) {
    if (!mat_.is_square()) throw ValidationError("projector matrix must be square");
    if (!(mat_ * mat_ == mat_)) throw CertificateError("projector law P^2 = P violated");
    if (!(mat_.dagger() == mat_)) throw CertificateError("projector law P† = P violated");
    if (!(mat_.trace() == RationalFunction(1))) throw CertificateError("projector law tr P = 1 violated");
}

Projector projector_from_vector(const VectorField& f) {
    if (f.size() == 0 || f.is_zero()) throw ValidationError("projector from zero vector");
    // Scale-invariance lets us clear denominators and strip the common
    // polynomial factor, keeping entry degrees minimal.
    BiPolynomial common_den(1);
    for (const auto& c : f.comps)
        common_den = exact_div(common_den * c.den(), poly_gcd(common_den, c.den()));
    std::vector<BiPolynomial> comp(f.size());
    BiPolynomial g(0);
    for (int i = 0; i < f.size(); ++i) {
        comp[i] = f[i].num() * exact_div(common_den, f[i].den());
        g = poly_gcd(g, comp[i]);
    }
    VectorField reduced(f.size());
    for (int i = 0; i < f.size(); ++i) reduced[i] = RationalFunction(exact_div(comp[i], g));

    RationalFunction ff;
    for (int i = 0; i < f.size(); ++i) ff = ff + reduced[i].dagger() * reduced[i];
    MatrixField p = ff.inverse() * outer_product(reduced, reduced);
    return Projector(std::move(p));
}

namespace {

bool serves_all(std::span<const Projector> ps, const VectorField& e) {
    for (const auto& p : ps)
        if (mat_vec(p.mat(), e).is_zero()) return false;
    return true;
}

}  // namespace

VectorField choose_reference(std::span<const Projector> ps) {
    if (ps.empty()) throw ValidationError("choose_reference on empty set");
    int n = ps.front().dim();
    for (int j = 0; j < n; ++j) {
        VectorField e(n);
        e[j] = RationalFunction(1);
        if (serves_all(ps, e)) return e;
    }
    // Deterministic small Gaussian-integer fallbacks.
    long seq[8][2] = {{1, 1}, {1, -1}, {2, 1}, {1, 2}, {2, -1}, {3, 1}, {1, 3}, {3, 2}};
    for (auto& [a, b] : seq) {
        VectorField e(n);
        for (int j = 0; j < n; ++j)
            e[j] = RationalFunction(GaussianRational(a + j * b, (a * b + j) % 3));
        if (serves_all(ps, e)) return e;
    }
    throw ValidationError("no reference vector found with P e != 0 for all tower elements");
}

VectorField choose_reference(const Projector& p) { return choose_reference(std::span(&p, 1)); }

RationalFunction sesq(const MatrixField& x, const MatrixField& y, const Projector& p,
                      const VectorField& e) {
    RationalFunction epe = sandwich(e, p.mat(), e);
    if (epe.is_zero()) throw ValidationError("sesquilinear product needs e† P e != 0");
    // e† X† Y e = (Xe)† (Ye): two matrix-vector products instead of X†Y.
    VectorField xe = mat_vec(x, e), ye = mat_vec(y, e);
    RationalFunction num;
    for (int i = 0; i < xe.size(); ++i) num = num + xe[i].dagger() * ye[i];
    return num / epe;
}

MatrixField cov_d(Dir mu, const MatrixField& x, const Projector& p, const VectorField& e) {
    MatrixField dP = (mu == Dir::Plus) ? p.mat().d_plus() : p.mat().d_minus();
    MatrixField dX = (mu == Dir::Plus) ? x.d_plus() : x.d_minus();
    return dX - sesq(p.mat(), dP, p, e) * x;
}

std::pair<RationalFunction, RationalFunction> norms(const Projector& p, const VectorField& e) {
    MatrixField dp = p.mat().d_plus(), dm = p.mat().d_minus();
    RationalFunction plus_tr = (dp * p.mat() * dm).trace();
    RationalFunction minus_tr = (dm * p.mat() * dp).trace();
    MatrixField Dp = cov_d(Dir::Plus, p.mat(), p, e);
    MatrixField Dm = cov_d(Dir::Minus, p.mat(), p, e);
    if (!(sesq(Dp, Dp, p, e) == plus_tr) || !(sesq(Dm, Dm, p, e) == minus_tr))
        throw CertificateError("norm identity tr(∂±P P ∂∓P) = ||D±P||² violated");
    return {plus_tr, minus_tr};
}

RationalFunction lagrangian(const Projector& p) {
    return (p.mat().d_plus() * p.mat().d_minus()).trace();
}

RationalFunction lagrangian_norm_form(const Projector& p, const VectorField& e) {
    auto [np, nm] = norms(p, e);
    return np + nm;
}

RationalFunction charge_density(const Projector& p) {
    MatrixField dp = p.mat().d_plus(), dm = p.mat().d_minus();
    return (p.mat() * dm * dp - p.mat() * dp * dm).trace();
}

ElReport is_el_solution(const Projector& p) {
    ElReport r;
    r.residual = commutator(p.mat().d_plus().d_minus(), p.mat());
    r.satisfied = r.residual.is_zero();
    return r;
}

ElReport is_el_solution(const Projector& p, const VectorField& e) {
    ElReport r = is_el_solution(p);
    MatrixField Dm = cov_d(Dir::Minus, p.mat(), p, e);
    MatrixField DpDm = cov_d(Dir::Plus, Dm, p, e);
    RationalFunction nm = (p.mat().d_minus() * p.mat() * p.mat().d_plus()).trace();
    VectorField el3 = mat_vec(DpDm + nm * p.mat(), e);
    if (r.satisfied != el3.is_zero())
        throw CertificateError("E-L forms disagree: [∂₊∂₋P,P] vs (D₊D₋P + ||D₋P||²P)e");
    return r;
}

namespace {

std::optional<Projector> ladder(const Projector& x, Dir dir) {
    const MatrixField& X = x.mat();
    MatrixField da = (dir == Dir::Plus) ? X.d_plus() : X.d_minus();
    MatrixField db = (dir == Dir::Plus) ? X.d_minus() : X.d_plus();
    MatrixField num = da * X * db;
    if (num.is_zero()) return std::nullopt;
    RationalFunction tr = num.trace();
    if (tr.is_zero()) throw CertificateError("ladder operator: zero trace with nonzero numerator");
    return Projector(tr.inverse() * num);
}

}  // namespace

std::optional<Projector> raise_projector(const Projector& x) { return ladder(x, Dir::Plus); }
std::optional<Projector> lower_projector(const Projector& x) { return ladder(x, Dir::Minus); }

bool is_holomorphic(const Projector& x) {
    const MatrixField& X = x.mat();
    return (X * X.d_plus()).is_zero() && (X.d_minus() * X).is_zero();
}

bool is_antiholomorphic(const Projector& x) {
    const MatrixField& X = x.mat();
    return (X * X.d_minus()).is_zero() && (X.d_plus() * X).is_zero();
}

namespace {

void verify_tower(const ProjectorTower& t) {
    int len = t.length(), n = t.dim();
    if (len > n) throw CertificateError("tower longer than N");
    if (!is_holomorphic(t.elements.front()))
        throw CertificateError("tower head is not holomorphic");
    if (!is_antiholomorphic(t.elements.back()))
        throw CertificateError("tower tail is not anti-holomorphic");
    if (lower_projector(t.elements.front()).has_value())
        throw CertificateError("Π₋P₀ != 0 at tower head");
    if (raise_projector(t.elements.back()).has_value())
        throw CertificateError("Π₊P_{n+m} != 0 at tower tail");

    MatrixField sum = MatrixField::zero(n, n);
    for (int i = 0; i < len; ++i) {
        const MatrixField& pi = t.elements[i].mat();
        if (!is_el_solution(t.elements[i], t.e).satisfied)
            throw CertificateError("tower element " + std::to_string(i) + " is not an E-L solution");
        for (int j = i + 1; j < len; ++j)
            if (!(pi * t.elements[j].mat()).is_zero())
                throw CertificateError("tower elements " + std::to_string(i) + "," +
                                       std::to_string(j) + " not orthogonal");
        sum = sum + pi;
    }
    // Σ P_i projects onto H ∪ H⊥: a constant Hermitian projector of rank len,
    // the identity exactly when the tower is maximal.
    if (!sum.d_plus().is_zero() || !sum.d_minus().is_zero() || !(sum * sum == sum) ||
        !(sum.dagger() == sum) || !(sum.trace() == RationalFunction(len)))
        throw CertificateError("tower sum is not a constant rank-(n+m+1) projector");
    if (len == n && !(sum == MatrixField::identity(n)))
        throw CertificateError("maximal tower sum is not the identity");

    // Theorem on mutual inverses, plus the reference-vector form of Π±
    // (its e-independence is asserted, not assumed).
    for (int i = 0; i < len; ++i) {
        const MatrixField& X = t.elements[i].mat();
        if (i + 1 < len) {
            auto up = raise_projector(t.elements[i]);
            if (!up || !(up->mat() == t.elements[i + 1].mat()))
                throw CertificateError("raise does not step the tower at " + std::to_string(i));
            auto back = lower_projector(*up);
            if (!back || !(back->mat() == X))
                throw CertificateError("Π₋Π₊P != P at " + std::to_string(i));
        }
        for (Dir dir : {Dir::Plus, Dir::Minus}) {
            MatrixField da = (dir == Dir::Plus) ? X.d_plus() : X.d_minus();
            MatrixField db = (dir == Dir::Plus) ? X.d_minus() : X.d_plus();
            MatrixField num = da * X * db;
            VectorField u = mat_vec(da * X, t.e);
            VectorField v = mat_vec((X * db).dagger(), t.e);
            RationalFunction scale = sandwich(t.e, X * db * da * X, t.e);
            if (num.is_zero()) {
                if (!scale.is_zero() || !u.is_zero())
                    throw CertificateError("annihilated ladder with nonzero vector form");
                continue;
            }
            MatrixField lhs = scale * (num.trace().inverse() * num);
            if (!(lhs == outer_product(u, v)))
                throw CertificateError("Π± trace form and reference-vector form disagree");
        }
    }
}

}  // namespace

ProjectorTower build_tower(const Projector& p) {
    if (!is_el_solution(p).satisfied)
        throw ValidationError("build_tower requires an exact E-L solution");
    int n = p.dim();

    std::vector<Projector> down{p};
    while (!is_holomorphic(down.back())) {
        auto lower = lower_projector(down.back());
        if (!lower)
            throw CertificateError("lowering annihilated a non-holomorphic projector");
        if (static_cast<int>(down.size()) >= n)
            throw CertificateError("tower did not terminate within N-1 lowering steps");
        down.push_back(std::move(*lower));
    }

    ProjectorTower t;
    t.hol_index = static_cast<int>(down.size()) - 1;
    for (auto it = down.rbegin(); it != down.rend(); ++it) t.elements.push_back(std::move(*it));
    while (!is_antiholomorphic(t.elements.back())) {
        auto up = raise_projector(t.elements.back());
        if (!up) throw CertificateError("raising annihilated a non-anti-holomorphic projector");
        if (t.length() >= n)
            throw CertificateError("tower did not terminate within N-1 raising steps");
        t.elements.push_back(std::move(*up));
    }
    t.antihol_index = t.length() - 1 - t.hol_index;
    t.e = choose_reference(std::span<const Projector>(t.elements));
    verify_tower(t);
    return t;
}

std::vector<std::vector<RationalFunction>> orthogonality_table(const Projector& p,
                                                               const VectorField& e, int kmax,
                                                               int sum_cap) {
    std::vector<MatrixField> dplus{p.mat()}, dminus{p.mat()};
    for (int k = 1; k <= kmax; ++k) {
        dplus.push_back(cov_d(Dir::Plus, dplus.back(), p, e));
        dminus.push_back(cov_d(Dir::Minus, dminus.back(), p, e));
    }
    std::vector<std::vector<RationalFunction>> table(kmax + 1,
                                                     std::vector<RationalFunction>(kmax + 1));
    for (int i = 0; i <= kmax; ++i)
        for (int j = 0; j <= kmax; ++j) {
            if (sum_cap >= 0 && i + j > sum_cap) continue;
            table[i][j] = sesq(dminus[i], dplus[j], p, e);
        }
    return table;
}

Projector invert_projector(const Projector& p) {
    Projector hat(p.mat().invert_variables());
    if (is_el_solution(p).satisfied && !is_el_solution(hat).satisfied)
        throw CertificateError("inversion of an E-L solution failed to solve E-L");
    return hat;
}

}  // namespace cpn
