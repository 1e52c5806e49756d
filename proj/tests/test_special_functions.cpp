#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ads_spin1/special_functions.hpp"

using namespace ads;
using doctest::Approx;

TEST_CASE("hyp2f1 elementary values") {
    CHECK(hyp2f1({0.3, 0.7, 1.9}, 0.0) == 1.0);
    CHECK(hyp2f1({-1.0, 2.0, 1.5}, -0.25) == Approx(4.0 / 3.0).epsilon(1e-15));
    // Degree-2 polynomial against its explicit three-term sum.
    const double b = 3.3, c = 1.7, z = -1.0;
    const double sum = 1.0 + (-2.0 * b / c) * z + (-2.0 * -1.0 * b * (b + 1.0)) / (c * (c + 1.0) * 2.0) * z * z;
    CHECK(hyp2f1({-2.0, b, c}, z) == Approx(sum).epsilon(1e-14));
}

TEST_CASE("hyp2f1 against high-precision reference values") {
    CHECK(hyp2f1({0.3, 0.7, 1.9}, -0.5) == Approx(0.95312243674087472743).epsilon(1e-13));
    CHECK(hyp2f1({1.2, -0.4, 0.8}, -0.9) == Approx(1.4220575501868060147).epsilon(1e-12));
    CHECK(hyp2f1({-3.0, 4.1, 2.5}, -50.0) == Approx(423093.66666666657697).epsilon(1e-13));
    // Terminating after the z/(z−1) transformation.
    CHECK(hyp2f1({2.3, 4.5, 2.5}, -20.0) == Approx(3.1295616365144782703e-5).epsilon(1e-12));
}

TEST_CASE("hyp2f1 derivatives") {
    const Hyp2F1Params p{0.3, 0.7, 1.9};
    CHECK(hyp2f1_derivative(p, 0.0) == Approx(0.3 * 0.7 / 1.9).epsilon(1e-15));
    CHECK(hyp2f1_derivative({-1.0, 2.0, 1.5}, -3.7) == Approx(-4.0 / 3.0).epsilon(1e-15));
    CHECK(hyp2f1_derivative(p, -0.5) == Approx(0.080291091431088969517).epsilon(1e-12));
    CHECK(hyp2f1_nth_derivative(p, -0.5, 2) == Approx(0.043584604579432439448).epsilon(1e-11));
    CHECK(hyp2f1_nth_derivative({2.3, 4.5, 2.5}, -20.0, 3) == Approx(1.52661200984848885e-7).epsilon(1e-10));
    const double h = 1e-5;
    const double fd = (hyp2f1(p, -0.5 + h) - hyp2f1(p, -0.5 - h)) / (2 * h);
    CHECK(std::abs(fd / hyp2f1_derivative(p, -0.5) - 1.0) < 1e-8);
}

TEST_CASE("hyp2f1 jet chains through z = -r^2") {
    const Hyp2F1Params p{0.3, 0.7, 1.9};
    const double r = 0.6;
    const Jet x = Jet::variable(r);
    const Jet F = hyp2f1_jet(p, -(x * x));
    CHECK(F.d(0).real() == Approx(hyp2f1(p, -r * r)).epsilon(1e-15));
    CHECK(F.d(1).real() == Approx(-2.0 * r * hyp2f1_derivative(p, -r * r)).epsilon(1e-14));
    const double d2 = -2.0 * hyp2f1_derivative(p, -r * r) + 4.0 * r * r * hyp2f1_nth_derivative(p, -r * r, 2);
    CHECK(F.d(2).real() == Approx(d2).epsilon(1e-13));
}

TEST_CASE("polynomial detection and coefficients") {
    CHECK(Hyp2F1Params{-2.0, 3.0, 1.5}.polynomial_degree() == 2);
    CHECK(Hyp2F1Params{3.0, -1.0 + 1e-12, 1.5}.polynomial_degree() == 1);
    CHECK_FALSE(Hyp2F1Params{0.5, 3.0, 1.5}.is_polynomial());
    const auto c = hyp2f1_polynomial_coefficients({-2.0, 3.0, 1.5});
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == Approx(-2.0 * 3.0 / 1.5));
    CHECK(c[2] == Approx(-2.0 * -1.0 * 3.0 * 4.0 / (1.5 * 2.5 * 2.0)));
    CHECK(c[3] == 0.0);
    CHECK_THROWS(hyp2f1_polynomial_coefficients({0.5, 3.0, 1.5}));
}

TEST_CASE("sign changes") {
    const std::vector<double> v{1.0, -2.0, 0.0, -1.0, 3.0, 4.0, -0.1};
    CHECK(count_sign_changes(v) == 3);
}

TEST_CASE("wigner d") {
    for (double th : {0.3, 1.2, 2.9}) CHECK(wigner_d(1, 0, 0, th) == Approx(std::cos(th)).epsilon(1e-15));
    CHECK(wigner_d(1, 1, 0, 0.8) == Approx(-std::sin(0.8) / std::sqrt(2.0)).epsilon(1e-15));
    for (int mp = -2; mp <= 2; ++mp)
        for (int m = -2; m <= 2; ++m) {
            CHECK(wigner_d(2, mp, m, 0.0) == (mp == m ? 1.0 : 0.0));
            const double expect = mp == -m ? ((2 - m) % 2 == 0 ? 1.0 : -1.0) : 0.0;
            CHECK(wigner_d(2, mp, m, std::numbers::pi) == Approx(expect).epsilon(1e-14));
        }
    // Jacobi-polynomial reference values.
    CHECK(wigner_d(3, -1, 2, 1.1) == Approx(0.45442227011035656937).epsilon(1e-13));
    CHECK(wigner_d(2, 0, 1, 0.7) == Approx(0.60346225140879640908).epsilon(1e-13));
    CHECK(wigner_d(6, 2, 4, 2.3) == Approx(0.16063521136782530018).epsilon(1e-12));
    CHECK(wigner_d(5, -3, 3, 0.4) == Approx(0.0015512183622374917446).epsilon(1e-11));
}

TEST_CASE("D functions of the ansatz") {
    const cplx D = d_sigma(2, 1, 0, 0.5, 0.9);
    CHECK(std::abs(D - std::polar(1.0, 0.5) * wigner_d(2, -1, 0, 0.9)) < 1e-15);
    CHECK(d_sigma(0, 0, 1, 0.5, 0.9) == cplx(0.0));
}

TEST_CASE("Clebsch-Gordan coefficients") {
    CHECK(clebsch_gordan(1, 0, 1, 1, 2, 1) == Approx(0.70710678118654752440));
    CHECK(clebsch_gordan(2, 1, 1, -1, 2, 0) == Approx(0.70710678118654752440));
    CHECK(clebsch_gordan(3, -2, 1, 1, 3, -1) == Approx(-0.64549722436790281420));
    CHECK(clebsch_gordan(2, 2, 1, -1, 1, 1) == Approx(0.77459666924148337704));
    CHECK(clebsch_gordan(4, 3, 1, 0, 5, 3) == Approx(0.59628479399994391904));
    CHECK(clebsch_gordan(1, 1, 1, 1, 2, 1) == 0.0);
}

TEST_CASE("spherical harmonics") {
    const cplx y = spherical_harmonic(3, 2, 0.9, 0.4);
    CHECK(std::abs(y - cplx(0.2715806224691589, 0.2796298802419845)) < 1e-14);
    const cplx y2 = spherical_harmonic(2, -1, 2.1, 1.3);
    CHECK(std::abs(y2 - cplx(-0.09005809126408507, 0.32439847100168445)) < 1e-14);
}

namespace {
// ∫|Y|² dΩ with Gauss–Legendre in cos θ (via a fine midpoint rule) × uniform φ.
double vsh_norm(int nu, int j, int m) {
    const int nt = 400, np = 64;
    double s = 0.0;
    for (int a = 0; a < nt; ++a) {
        const double th = std::numbers::pi * (a + 0.5) / nt;
        for (int b = 0; b < np; ++b) {
            const double ph = 2 * std::numbers::pi * b / np;
            const CVec3 v = vector_spherical_harmonic(nu, j, m, th, ph);
            s += (std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2])) * std::sin(th);
        }
    }
    return s * (std::numbers::pi / nt) * (2 * std::numbers::pi / np);
}
}  // namespace

TEST_CASE("vector spherical harmonics are normalized") {
    CHECK(vsh_norm(1, 0, 0) == Approx(1.0).epsilon(1e-4));
    CHECK(vsh_norm(2, 1, 1) == Approx(1.0).epsilon(1e-4));
    CHECK(vsh_norm(2, 3, -2) == Approx(1.0).epsilon(1e-4));
    CHECK(vsh_norm(3, 3, 3) == Approx(1.0).epsilon(1e-4));
}

TEST_CASE("vector spherical harmonics: l^2 eigenvalue and rotation phase") {
    // Each Cartesian component of Y^ν is a combination of Y_{ν μ}, so the
    // angular Laplacian returns −ν(ν+1) componentwise.
    const int nu = 1, j = 0, m = 0;
    const double th = 1.1, ph = 0.6, h = 1e-3;
    auto comp = [&](double t, double p, int k) { return vector_spherical_harmonic(nu, j, m, t, p)[k]; };
    for (int k = 0; k < 3; ++k) {
        const cplx f = comp(th, ph, k);
        const cplx ftt = (comp(th + h, ph, k) - 2.0 * f + comp(th - h, ph, k)) / (h * h);
        const cplx ft = (comp(th + h, ph, k) - comp(th - h, ph, k)) / (2 * h);
        const cplx fpp = (comp(th, ph + h, k) - 2.0 * f + comp(th, ph - h, k)) / (h * h);
        const cplx lap = ftt + std::cos(th) / std::sin(th) * ft + fpp / std::pow(std::sin(th), 2);
        CHECK(std::abs(lap + 2.0 * f) < 1e-5);
    }
    // Rotating the point by δ about z and co-rotating the frame gives e^{imδ}.
    const int j2 = 2, m2 = 1;
    const double d = 0.37;
    const CVec3 a = vector_spherical_harmonic(2, j2, m2, th, ph);
    const CVec3 b = vector_spherical_harmonic(2, j2, m2, th, ph + d);
    const double c = std::cos(d), s = std::sin(d);
    const std::array<cplx, 3> rot{c * a[0] - s * a[1], s * a[0] + c * a[1], a[2]};
    for (int k = 0; k < 3; ++k) CHECK(std::abs(b[k] - std::polar(1.0, m2 * d) * rot[k]) < 1e-13);
}

TEST_CASE("theta recursions of the D functions") {
    const auto th = interior_theta_grid(50);
    CHECK(th.size() == 50);
    const ResidualReport r10 = verify_recursions(1, 0, th);
    CHECK(r10.entries.size() == 6);
    CHECK(r10.max() < 1e-8);
    CHECK(verify_recursions(3, 2, th).max() < 1e-7);
    // Explicit j = 1 relation ∂θ D0 = (ν/2)(D−1 − D+1), ν = √2.
    const double t = 0.8, phi = 0.3;
    const double h = 1e-5;
    const cplx dD0 = (d_sigma(1, 0, 0, phi, t + h) - d_sigma(1, 0, 0, phi, t - h)) / (2 * h);
    const cplx rhs = std::sqrt(2.0) / 2.0 * (d_sigma(1, 0, -1, phi, t) - d_sigma(1, 0, 1, phi, t));
    CHECK(std::abs(dD0 - rhs) < 1e-9);
}
