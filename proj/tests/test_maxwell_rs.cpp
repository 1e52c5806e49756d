#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ads_spin1/maxwell_rs.hpp"
#include "ads_spin1/verifier.hpp"

using namespace ads;
using doctest::Approx;

namespace {
const cplx I{0.0, 1.0};
double dev(const auto& a, const auto& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("cyclic basis matrices") {
    const RSMatrices m = build_rs_matrices();
    CHECK(dev(m.U * m.U.adjoint(), Matrix3c::Identity()) < 1e-15);
    Matrix3c d = Matrix3c::Zero();
    d(0, 0) = -I;
    d(2, 2) = I;
    CHECK(dev(m.U * m.tau[2].cast<cplx>() * m.U_inv, d) < 1e-15);
    const Matrix3c c = m.s_cyclic[0] * m.s_cyclic[1] - m.s_cyclic[1] * m.s_cyclic[0];
    CHECK(dev(c, m.s_cyclic[2]) < 1e-15);
    CHECK(dev(m.tau[0] * m.tau[1] - m.tau[1] * m.tau[0], m.tau[2]) == 0.0);
    CHECK(dev(m.U_inv, reference_U_inv()) < 1e-15);
    const auto a = reference_alpha_cyclic();
    for (int k = 0; k < 3; ++k) CHECK(dev(m.alpha_cyclic[k], a[k]) < 1e-14);
    const ResidualReport r = verify_rs_matrices(m);
    CHECK(r.entries.size() == 14);
    CHECK(r.max() < 1e-14);
}

TEST_CASE("photon mode n = 0, j = 1 in closed form") {
    const PhotonMode p = build_photon_mode(0, 1);
    CHECK(p.omega == 2.0);
    CHECK(p.params.alpha == 0.0);
    for (double r : {0.01, 0.5, 1.0, 7.0}) {
        CHECK(p.bundle.eval("G", r).value().real() == Approx(r * r / (1 + r * r)).epsilon(1e-14));
        // F = Φ G'/(iω) = −i r/(1 + r²).
        CHECK(std::abs(p.bundle.eval("F", r).value() - (-I * r / (1 + r * r))) < 1e-14);
    }
}

TEST_CASE("photon mode n = 1, j = 2 in closed form") {
    // a = 3/2, b = −5/2: F(−1, −1/2; 7/2; −r²) = 1 − r²/7.
    const PhotonMode p = build_photon_mode(1, 2, -1);
    CHECK(p.omega == 5.0);
    CHECK(p.a == 1.5);
    CHECK(p.b == -2.5);
    CHECK(p.params.gamma == 3.5);
    for (double r : {0.2, 1.5, 9.0}) {
        const double G = std::pow(r, 3) * std::pow(1 + r * r, -2.5) * (1 - r * r / 7.0);
        CHECK(p.bundle.eval("G", r).value().real() == Approx(G).epsilon(1e-13));
        CHECK(std::abs(p.bundle.eval("f2", r).value() - I * std::sqrt(6.0) / 5.0 * G / (r * r)) < 1e-14);
    }
}

TEST_CASE("photon residuals") {
    const auto g = Grid{}.nodes();
    for (int n = 0; n <= 3; ++n)
        for (int j = 1; j <= 4; ++j) {
            const PhotonMode p = build_photon_mode(n, j);
            CHECK(p.omega == 2.0 * n + j + 1.0);
            CHECK(p.params.polynomial_degree() == n);
            CHECK(residual_system(p.bundle, EquationId::ODE_3_14, g).max() < 1e-9);
            CHECK(rs_system_residual(p, g).max() < 1e-8);
            CHECK(verify_all(p.bundle, g).max() < 1e-8);
        }
    const ResidualReport r = rs_system_residual(build_photon_mode(0, 1), g);
    CHECK(r.entries.size() == 7);
    CHECK_THROWS(build_photon_mode(0, 0));
    CHECK_THROWS(build_photon_mode(-1, 1));
}

TEST_CASE("homogeneity of the first-order system") {
    const auto g = Grid{}.nodes();
    PhotonMode p = build_photon_mode(1, 2);
    p.bundle = p.bundle.perturbed("f3", [](double r) { return 1.0 + 0.05 * Jet::variable(r); });
    PhotonMode q = p;
    q.bundle = p.bundle.scaled(7.0);
    const ResidualReport a = rs_system_residual(p, g), b = rs_system_residual(q, g);
    CHECK(a.max() > 1e-3);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        CHECK(std::abs(b.entries[i].max_residual - a.entries[i].max_residual) <=
              1e-12 * a.entries[i].max_residual + 1e-14);
}

TEST_CASE("equation (1) follows from the other three") {
    const auto g = Grid{}.nodes();
    for (int j = 1; j <= 4; ++j) CHECK(rs_dependence_check(j, 2.0 * j + 1.3, g).max() < 1e-11);
}

TEST_CASE("angular action of the spin operator") {
    const auto th = interior_theta_grid(50);
    CHECK(angular_action_check(1, 0, th).max() < 1e-7);
    CHECK(angular_action_check(4, 3, th).max() < 1e-6);
    CHECK(angular_action_check(2, -2, th).max() < 1e-6);
    CHECK_THROWS(angular_action_check(0, 0, th));
    const std::vector<double> pole{0.0};
    CHECK_THROWS(angular_action_check(1, 0, pole));
}

TEST_CASE("branch selection") {
    const int j = 2, n = 1;
    const double w = 2.0 * n + j + 1.0;
    // Principal branch vanishes like r^{j+1}.
    const RadialFunction G = photon_branch(w, (j + 1) / 2.0, -w / 2.0);
    const double slope = std::log(G(2e-4).value().real() / G(1e-4).value().real()) / std::log(2.0);
    CHECK(slope == Approx(j + 1.0).epsilon(0.01));
    // The other root of the indicial equation blows up at the origin.
    const RadialFunction bad = photon_branch(w, -j / 2.0, -w / 2.0);
    CHECK(std::abs(bad(1e-3).value()) > 1e5);
    // b = +ω/2: the prefactor grows without bound at large r, while the chosen
    // branch keeps G bounded and the reduced amplitudes fall off like r^-2.
    CHECK(std::pow(50.0, j + 1.0) * std::pow(1 + 50.0 * 50.0, w / 2.0) > 1e10);
    CHECK(std::abs(G(50.0).value()) < 10.0);
    const PhotonMode p = build_photon_mode(n, j);
    CHECK(decay_exponent(p.bundle, "f1") == Approx(-2.0).epsilon(0.01));
    CHECK(decay_exponent(p.bundle, "f2") == Approx(-2.0).epsilon(0.01));
}

TEST_CASE("electromagnetic back-transform is finite") {
    const ElectroMagnetic f = electromagnetic_field(build_photon_mode(0, 1, 1), 0.3, 0.8, 1.0, 0.4);
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += f.E[k] * f.E[k] + f.B[k] * f.B[k];
    CHECK(std::isfinite(s));
    CHECK(s > 0.0);
}
