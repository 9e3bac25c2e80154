// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line per criterion.  Exit code 0 iff all pass.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpn/quadrature.hpp"
#include "cpn/surface.hpp"
#include "test_support.hpp"

using namespace cpn;
using namespace cpn::test;

namespace {

constexpr double kPi = std::numbers::pi;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

void require_close(double value, double expected, double rel_tol, const std::string& what) {
    double scale = std::max(std::abs(expected), 1e-30);
    if (std::abs(value - expected) > rel_tol * scale)
        throw Failure(what + ": got " + std::to_string(value) + ", expected " +
                      std::to_string(expected));
}

RationalFunction one_plus_u() { return RationalFunction(1) + u(); }

RationalFunction mono(long c, long dp, long dm) {
    return RationalFunction(BiPolynomial::monomial(Coeff(c), dp, dm));
}

const ProjectorTower& veronese() {
    static const ProjectorTower t = build_tower(projector_from_vector(veronese_vector()));
    return t;
}

/// Large-|ξ| limit of a rational function along the real-slice diagonal
/// ξ₊ = ξ₋ = t: the ratio of the top diagonal coefficients (degrees must
/// match for a finite limit).
GaussianRational diagonal_asymptote(const RationalFunction& f) {
    auto top = [](const BiPolynomial& p) {
        long best = -1;
        Coeff lead;
        for (const auto& [m, c] : p.terms()) {
            long d = m.dp + m.dm;
            if (d > best) {
                best = d;
                lead = Coeff();
            }
            if (d == best) lead = lead + c;
        }
        return std::pair<long, Coeff>(best, lead);
    };
    auto [dn, cn] = top(f.num());
    auto [dd, cd] = top(f.den());
    require(dn == dd && !cd.is_zero(), "no finite diagonal asymptote");
    Coeff ratio = cn * cd.inverse();
    require(ratio.is_gaussian(), "asymptote is not a Gaussian rational");
    return ratio.base;
}

// ---- criterion 1: exact tower construction and structure ----
void criterion_1() {
    ProjectorTower t = build_tower(projector_from_vector(veronese_vector()));
    require(t.length() == 3, "tower length != 3");
    MatrixField id = MatrixField::identity(3);
    MatrixField sum = MatrixField::zero(3, 3);
    for (int i = 0; i < 3; ++i) {
        const MatrixField& p = t.elements[i].mat();
        require(p * p == p, "P^2 != P");
        require(p.dagger() == p, "P dagger != P");
        require(p.trace() == RationalFunction(1), "tr P != 1");
        require(commutator(p.d_plus().d_minus(), p).is_zero(), "[d+d-P, P] != 0");
        for (int j = i + 1; j < 3; ++j)
            require((p * t.elements[j].mat()).is_zero(), "P_i P_j != 0");
        sum = sum + p;
    }
    require(sum == id, "P0+P1+P2 != I3");
    require(!lower_projector(t.elements[0]).has_value(), "lower(P0) != 0");
    require(!raise_projector(t.elements[2]).has_value(), "raise(P2) != 0");
    for (int i = 0; i < 3; ++i) {
        if (i + 1 < 3) {
            auto up = raise_projector(t.elements[i]);
            require(up && up->mat() == t.elements[i + 1].mat(), "raise does not step tower");
            auto back = lower_projector(*up);
            require(back && back->mat() == t.elements[i].mat(), "lower(raise(P)) != P");
        }
        if (i > 0) {
            auto down = lower_projector(t.elements[i]);
            require(down && down->mat() == t.elements[i - 1].mat(), "lower does not step tower");
            auto back = raise_projector(*down);
            require(back && back->mat() == t.elements[i].mat(), "raise(lower(P)) != P");
        }
    }
}

// ---- criterion 2: the orthogonality table ----
void criterion_2() {
    const ProjectorTower& t = veronese();
    auto table = orthogonality_table(t.elements[0], t.e, 4, 4);
    require(table[0][0].is_one(), "A00 != 1");
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            if (i + j == 0 || i + j > 4) continue;
            require(table[i][j].is_zero(),
                    "A_{" + std::to_string(i) + "," + std::to_string(j) + "} != 0");
        }
}

// ---- criterion 3: exact geometry of the constant-curvature surface ----
void criterion_3() {
    const ProjectorTower& t = veronese();
    const Projector& p0 = t.elements[0];
    require(gauss_curvature(p0) == RationalFunction(2), "K != 2");
    auto [h, hh] = mean_curvature(p0);
    require(hh == RationalFunction(16), "(H,H) != 16");
    require(killing_product(tangent_plus(p0), tangent_plus(p0)).is_zero(), "g++ != 0");
    require(killing_product(tangent_minus(p0), tangent_minus(p0)).is_zero(), "g-- != 0");
    require(lagrangian(p0) == charge_density(p0), "L != q for the holomorphic generator");
}

// ---- criterion 4: numeric invariants of the constant-curvature surface ----
void criterion_4() {
    const ProjectorTower& t = veronese();
    IntegralResult s = action(t.elements[0]);
    IntegralResult a = area(t, 0);
    require_close(s.value, 2.0 * kPi, 1e-6, "S");
    require_close(a.value, 2.0 * kPi, 1e-6, "A");
    IntegralResult q = charge(t.elements[0]);
    require(q.integer_snap && *q.integer_snap == 2, "Q snap != 2");
    require(q.snap_deviation < 1e-6, "Q snap deviation");
    IntegralResult d = euler_poincare(t.elements[0]);
    require(d.integer_snap && *d.integer_snap == 2, "Delta snap != 2");
    require(d.snap_deviation < 1e-6, "Delta snap deviation");
    require_close(willmore(t, 0).value, 4.0 * kPi, 1e-6, "W");
}

// ---- criterion 5: numeric invariants of the varying-curvature surface ----
void criterion_5() {
    ProjectorTower t = build_tower(projector_from_vector(negative_curvature_vector()));
    require_close(area(t, 0).value, 2.0 * kPi, 1e-5, "A");
    IntegralResult d = euler_poincare(t.elements[0]);
    require(d.integer_snap && *d.integer_snap == 2 && d.snap_deviation < 1e-5, "Delta != 2");
    require_close(willmore(t, 0).value, 4.0 * kPi, 1e-5, "W");
    IntegralResult q = charge(t.elements[0]);
    require(q.integer_snap && *q.integer_snap == 2 && q.snap_deviation < 1e-5, "Q != 2");

    // independent curvature pipeline vs the printed closed form, at the
    // origin and in the large-|ξ| limit
    RationalFunction k = gauss_curvature(t.elements[0]);
    RationalFunction den = mono(4, 2, 2) + mono(16, 1, 1) + RationalFunction(1);
    RationalFunction printed = RationalFunction(-4) *
                               (mono(448, 6, 6) - mono(384, 5, 5) - mono(2640, 4, 4) -
                                mono(4280, 3, 3) - mono(660, 2, 2) - mono(24, 1, 1) +
                                RationalFunction(7)) /
                               (den * den * den);
    std::complex<double> k0 = k.eval(0.0);
    std::complex<double> p0 = printed.eval(0.0);
    require(std::abs(k0.real() + 28.0) < 1e-12, "pipeline K(0) != -28");
    require(std::abs(p0.real() + 28.0) < 1e-12, "printed K(0) != -28");
    require(std::abs(k0 - p0) < 1e-12, "pipeline and printed K disagree at the origin");
    require(k == printed, "pipeline K != printed closed form as a rational identity");
    require(diagonal_asymptote(k) == grat(-28), "pipeline K asymptote != -28");
    require(diagonal_asymptote(printed) == grat(-28), "printed K asymptote != -28");
}

// ---- criterion 6: polynomial certificates ----
void criterion_6() {
    const ProjectorTower& t = veronese();
    MatrixField alt = MatrixField::zero(3, 3);
    for (int k = 0; k < 3; ++k) {
        SurfaceField s = surface_from_tower(t, k);
        CertificateReport c = certify_polynomials(s, t.elements[k]);
        require(c.char_poly_ok, "char poly mismatch at k=" + std::to_string(k));
        require(c.min_poly_ok,
                "minimal polynomial does not annihilate at k=" + std::to_string(k));
        require(c.reconstruction_ok, "reconstruction failed at k=" + std::to_string(k));
        alt = (k % 2 == 0) ? alt + s.f : alt - s.f;
    }
    require(alt.is_zero(), "F0 - F1 + F2 != 0");
}

// ---- criterion 7: classifier round trip and rejection ----
void criterion_7() {
    const ProjectorTower& t = veronese();
    for (int k = 0; k < 3; ++k) {
        Classification c = classify_surface(surface_from_tower(t, k).f);
        require(c.accepted, "surface rejected at k=" + std::to_string(k));
        require(c.k == k, "recovered wrong k");
        require(c.lambda == surface_constant(k, 3), "recovered wrong lambda");
        require(c.projector && c.projector->mat() == t.elements[k].mat(),
                "recovered wrong projector");
    }
    MatrixField f = surface_from_tower(t, 0).f;
    RationalFunction bump = u() / one_plus_u();
    f.at(0, 0) = f.at(0, 0) + RationalFunction::i() * bump;
    f.at(2, 2) = f.at(2, 2) - RationalFunction::i() * bump;
    require(f.dagger() == -f, "perturbation must stay skew-Hermitian");
    Classification c = classify_surface(f);
    require(!c.accepted, "perturbed surface must be rejected");
    require(c.diagnostic.find("det") != std::string::npos,
            "rejection must cite the det certificate");
}

// ---- criterion 8: inversion covariance ----
void criterion_8() {
    const ProjectorTower& t = veronese();
    Projector hat = invert_projector(t.elements[0]);
    require(is_el_solution(hat).satisfied, "inverted projector is not an E-L solution");
    // change of variables: (w+ w-)^2 L(hat P)(w) = L(P)(1/w+, 1/w-)
    require(u() * u() * lagrangian(hat) == lagrangian(t.elements[0]).invert_variables(),
            "inversion identity for L failed");
}

// ---- criterion 9: randomized property suites ----
void criterion_9() {
    std::mt19937_64 rng(2026);
    const ProjectorTower& t = veronese();
    const Projector& p = t.elements[0];
    const VectorField& e = t.e;
    const MatrixField& pm = p.mat();
    RationalFunction q = charge_density(p);

    for (int it = 0; it < 1000; ++it) {
        RationalFunction x = random_rf(rng, 2, 2), y = random_rf(rng, 2, 2),
                         z = random_rf(rng, 2, 2);
        require((x + y) + z == x + (y + z), "additive associativity");
        require((x * y) * z == x * (y * z), "multiplicative associativity");
        require(x * (y + z) == x * y + x * z, "distributivity");
        if (!x.is_zero()) require((x / x).is_one(), "multiplicative inverse");
        require((x * y).d_plus() == x.d_plus() * y + x * y.d_plus(), "Leibniz d+");
        require((x * y).d_minus() == x.d_minus() * y + x * y.d_minus(), "Leibniz d-");
        require((x * y).dagger() == x.dagger() * y.dagger(), "dagger multiplicativity");
        require(x.dagger().dagger() == x, "dagger involution");
    }
    std::uniform_int_distribution<long> small(-3, 3);
    for (int it = 0; it < 1000; ++it) {
        MatrixField a = random_matrix(rng, 3, 3, 1, 1);
        MatrixField b = random_matrix(rng, 3, 3, 1, 1);
        require((a * b).dagger() == b.dagger() * a.dagger(), "matrix dagger anti-homomorphism");
        require(pm * a * pm == (pm * a).trace() * pm, "P A P = tr(P A) P");
        VectorField ev(3);
        for (int i = 0; i < 3; ++i) ev[i] = RationalFunction(grat(small(rng), small(rng)));
        VectorField pe = mat_vec(pm, ev);
        if (!pe.is_zero())
            require(outer_product(pe, pe) == sandwich(ev, pm, ev) * pm,
                    "P e (P e) dagger = (e P e) P");
    }
    for (int it = 0; it < 1000; ++it) {
        MatrixField x = random_matrix(rng, 3, 3, 1, 1);
        MatrixField y = random_matrix(rng, 3, 3, 1, 1);
        RationalFunction ip = sesq(x, y, p, e);
        require(ip.d_plus() == sesq(cov_d(Dir::Minus, x, p, e), y, p, e) +
                                   sesq(x, cov_d(Dir::Plus, y, p, e), p, e),
                "compatibility in the + direction");
        MatrixField lhs = cov_d(Dir::Plus, cov_d(Dir::Minus, x, p, e), p, e) -
                          cov_d(Dir::Minus, cov_d(Dir::Plus, x, p, e), p, e);
        require(lhs == q * x, "[D+,D-]X = q X");
    }
    int checked = 0;
    while (checked < 100) {
        MatrixField x = random_matrix(rng, 3, 3, 2, 1);
        MatrixField y = random_matrix(rng, 3, 3, 2, 1);
        RationalFunction xy = sesq(x, y, p, e);
        RationalFunction xx = sesq(x, x, p, e), yy = sesq(y, y, p, e);
        RationalFunction ss = sesq(x + y, x + y, p, e);
        std::complex<double> zpt = random_point(rng);
        try {
            double nx = std::sqrt(std::max(0.0, xx.eval(zpt).real()));
            double ny = std::sqrt(std::max(0.0, yy.eval(zpt).real()));
            double ns = std::sqrt(std::max(0.0, ss.eval(zpt).real()));
            require(std::abs(xy.eval(zpt)) <= nx * ny + 1e-10, "Cauchy-Schwarz");
            require(ns <= nx + ny + 1e-10, "triangle inequality");
            ++checked;
        } catch (const NumericsError&) {
        }
    }
}

// ---- criterion 10: the degree-1 map ----
void criterion_10() {
    ProjectorTower t = build_tower(projector_from_vector(degree_one_vector()));
    IntegralResult s = action(t.elements[0]);
    // the degree convention counts both derivative directions (the vector
    // form of the action), which is twice the projector action
    require_close(2.0 * s.value, 2.0 * kPi, 1e-6, "vector action 2S");
    require_close(s.value, kPi, 1e-6, "projector action S");
    IntegralResult q = charge(t.elements[0]);
    require(q.integer_snap && *q.integer_snap == 1 && q.snap_deviation < 1e-6,
            "charge != degree");
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<void()> fn;
        double budget_s;  // 0 = no runtime bound
    };
    std::vector<Entry> criteria = {
        {1, "exact tower construction and structure", criterion_1, 10.0},
        {2, "orthogonality table A00 = 1, Aij = 0 for 1 <= i+j <= 4", criterion_2, 0.0},
        {3, "exact geometry: K = 2, (H,H) = 16, g++ = g-- = 0, L = q", criterion_3, 0.0},
        {4, "numerics, constant-curvature surface: A = S = 2pi, Q = 2, Delta = 2, W = 4pi",
         criterion_4, 30.0},
        {5, "numerics, varying-curvature surface: A, Delta, W, Q and the K certificates",
         criterion_5, 0.0},
        {6, "polynomial certificates and the alternating sum", criterion_6, 0.0},
        {7, "classifier round trip and det rejection", criterion_7, 0.0},
        {8, "inversion covariance", criterion_8, 0.0},
        {9, "randomized property suites (1000 cases each)", criterion_9, 0.0},
        {10, "degree-1 map action and charge", criterion_10, 0.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.fn();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (error.empty() && c.budget_s > 0 && dt > c.budget_s)
            error = "runtime " + std::to_string(dt) + "s exceeds " + std::to_string(c.budget_s) +
                    "s target";
        if (error.empty()) {
            std::printf("[PASS] criterion %2d: %s (%.2fs)\n", c.id, c.title, dt);
        } else {
            std::printf("[FAIL] criterion %2d: %s (%.2fs) -- %s\n", c.id, c.title, dt,
                        error.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures == 0) std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
