#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cpn/errors.hpp"
#include "cpn/quadrature.hpp"
#include "test_support.hpp"

using namespace cpn;
using namespace cpn::test;

namespace {

constexpr double kPi = std::numbers::pi;

RationalFunction one_plus_u() { return RationalFunction(1) + u(); }

RationalFunction mono(long c, long dp, long dm) {
    return RationalFunction(BiPolynomial::monomial(Coeff(c), dp, dm));
}

const ProjectorTower& veronese_tower() {
    static const ProjectorTower t = build_tower(projector_from_vector(veronese_vector()));
    return t;
}

}  // namespace

TEST_CASE("gauss-legendre nodes") {
    std::vector<double> x, w;
    gauss_legendre(16, x, w);
    double sum = 0.0, quad = 0.0;
    for (int i = 0; i < 16; ++i) {
        sum += w[i];
        quad += w[i] * x[i] * x[i];
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(quad == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("integrate_plane") {
    SUBCASE("2/(1+u)^2 integrates to 2 pi") {
        RationalFunction f = RationalFunction(2) / (one_plus_u() * one_plus_u());
        IntegralResult r = integrate_plane(f);
        CHECK(r.value == doctest::Approx(2.0 * kPi).epsilon(1e-10));
        CHECK(r.error_estimate < 1e-8 * r.value);
    }
    SUBCASE("zero integrand") {
        IntegralResult r = integrate_plane(RationalFunction(0));
        CHECK(r.value == 0.0);
    }
    SUBCASE("second example's Lagrangian also integrates to 2 pi") {
        RationalFunction den = RationalFunction(1) + u() + mono(4, 2, 2);
        RationalFunction f =
            (mono(4, 2, 2) + mono(16, 1, 1) + RationalFunction(1)) / (den * den);
        IntegralResult r = integrate_plane(f);
        CHECK(r.value == doctest::Approx(2.0 * kPi).epsilon(1e-8));
    }
    SUBCASE("non-integrable input is rejected by the pole probe") {
        CHECK_THROWS_AS(integrate_plane(RationalFunction(1)), NumericsError);
        RationalFunction g = RationalFunction(1) / (RationalFunction(1) - u());
        CHECK_THROWS_AS(integrate_plane(g), NumericsError);
    }
    SUBCASE("complex-valued integrand violates the contract") {
        CHECK_THROWS_AS(integrate_plane(RationalFunction::i() * lagrangian(veronese_tower().elements[0])),
                        ValidationError);
    }
    SUBCASE("split agrees with a large-radius direct polar integral") {
        // integrand decaying faster than |xi|^-4 (exact value pi/2)
        RationalFunction f =
            RationalFunction(1) / (one_plus_u() * one_plus_u() * one_plus_u());
        IntegralResult split = integrate_plane(f);
        CHECK(split.value == doctest::Approx(kPi / 2.0).epsilon(1e-9));
        std::vector<double> xr, wr, xt, wt;
        gauss_legendre(400, xr, wr);
        gauss_legendre(200, xt, wt);
        double direct = 0.0, radius = 60.0;
        for (int i = 0; i < 400; ++i) {
            double r = 0.5 * radius * (xr[i] + 1.0);
            double wrad = 0.5 * radius * wr[i];
            for (int j = 0; j < 200; ++j) {
                double th = kPi * (xt[j] + 1.0);
                double wth = kPi * wt[j];
                direct += f.eval(std::polar(r, th)).real() * r * wrad * wth;
            }
        }
        CHECK(std::abs(split.value - direct) < 1e-4 * std::abs(direct));
    }
}

TEST_CASE("global invariants for the constant-curvature example") {
    const ProjectorTower& t = veronese_tower();
    IntegralResult s = action(t.elements[0]);
    IntegralResult a = area(t, 0);
    CHECK(s.value == doctest::Approx(2.0 * kPi).epsilon(1e-8));
    CHECK(a.value == doctest::Approx(2.0 * kPi).epsilon(1e-8));
    CHECK(std::abs(s.value - a.value) <= s.error_estimate + a.error_estimate + 1e-12);

    IntegralResult q = charge(t.elements[0]);
    REQUIRE(q.integer_snap.has_value());
    CHECK(*q.integer_snap == 2);
    CHECK(q.snap_deviation < 1e-6);

    IntegralResult d = euler_poincare(t.elements[0]);
    REQUIRE(d.integer_snap.has_value());
    CHECK(*d.integer_snap == 2);
    CHECK(d.snap_deviation < 1e-6);

    IntegralResult w = willmore(t, 0);
    CHECK(w.value == doctest::Approx(4.0 * kPi).epsilon(1e-8));

    SUBCASE("holomorphic relations W = 2S and Q = S/pi") {
        CHECK(std::abs(w.value - 2.0 * s.value) <=
              w.error_estimate + 2.0 * s.error_estimate + 1e-9);
        CHECK(std::abs(kPi * q.value - s.value) <= 1e-6);
    }
    SUBCASE("mixed element: S = 4pi, Q = 0, W = 2pi, Delta = 2") {
        CHECK(action(t.elements[1]).value == doctest::Approx(4.0 * kPi).epsilon(1e-8));
        IntegralResult q1 = charge(t.elements[1]);
        CHECK(*q1.integer_snap == 0);
        CHECK(q1.snap_deviation < 1e-8);
        CHECK(willmore(t, 1).value == doctest::Approx(2.0 * kPi).epsilon(1e-8));
        CHECK(*euler_poincare(t.elements[1]).integer_snap == 2);
    }
    SUBCASE("constant projector: everything vanishes") {
        ProjectorTower tc = build_tower(projector_from_vector(basis_vector(3, 0)));
        CHECK(action(tc.elements[0]).value == 0.0);
        CHECK(charge(tc.elements[0]).value == 0.0);
        CHECK(*charge(tc.elements[0]).integer_snap == 0);
    }
}

TEST_CASE("global invariants for the varying-curvature example") {
    ProjectorTower t = build_tower(projector_from_vector(negative_curvature_vector()));
    CHECK(action(t.elements[0]).value == doctest::Approx(2.0 * kPi).epsilon(1e-6));
    CHECK(area(t, 0).value == doctest::Approx(2.0 * kPi).epsilon(1e-6));
    IntegralResult q = charge(t.elements[0]);
    CHECK(*q.integer_snap == 2);
    CHECK(q.snap_deviation < 1e-5);
    IntegralResult d = euler_poincare(t.elements[0]);
    CHECK(*d.integer_snap == 2);
    CHECK(d.snap_deviation < 1e-5);
    CHECK(willmore(t, 0).value == doctest::Approx(4.0 * kPi).epsilon(1e-6));
}

TEST_CASE("degree-1 map: projector action pi, vector action 2 pi, charge 1") {
    ProjectorTower t = build_tower(projector_from_vector(degree_one_vector()));
    IntegralResult s = action(t.elements[0]);
    CHECK(s.value == doctest::Approx(kPi).epsilon(1e-8));
    CHECK(2.0 * s.value == doctest::Approx(2.0 * kPi).epsilon(1e-8));
    IntegralResult q = charge(t.elements[0]);
    CHECK(*q.integer_snap == 1);
    CHECK(q.snap_deviation < 1e-8);
}

TEST_CASE("inversion preserves the action") {
    const ProjectorTower& t = veronese_tower();
    Projector hat = invert_projector(t.elements[0]);
    IntegralResult s = action(t.elements[0]);
    IntegralResult sh = action(hat);
    CHECK(std::abs(s.value - sh.value) <= s.error_estimate + sh.error_estimate + 1e-10);
}
