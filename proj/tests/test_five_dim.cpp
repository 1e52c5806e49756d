#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ads_spin1/five_dim.hpp"
#include "ads_spin1/verifier.hpp"

using namespace ads;
using doctest::Approx;

TEST_CASE("conformal chart") {
    const EmbeddingPoint o = conformal_to_embedding({0, 0, 0, 0});
    CHECK(o.xi == std::array<double, 5>{0, 0, 0, 0, 1});
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int used = 0;
    while (used < 500) {
        const Conformal4 x{u(rng), u(rng), u(rng), u(rng)};
        const double x2 = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
        if (std::abs(1.0 + x2) <= 0.1) continue;
        ++used;
        const EmbeddingPoint p = conformal_to_embedding(x);
        CHECK(std::abs(p.constraint() - 1.0) < 1e-13 * std::max(1.0, p.xi[0] * p.xi[0]));
        const Conformal4 y = embedding_to_conformal(p);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(y[k] - x[k]) < 1e-14 * std::max(1.0, std::abs(x[k])) * 10);
    }
    CHECK_THROWS_AS(conformal_to_embedding({1.0, 0.0, 0.0, std::sqrt(2.0)}), std::domain_error);
}

TEST_CASE("static chart") {
    const EmbeddingPoint o = static_to_embedding(0, 0, 0.3, 0.2);
    CHECK(o.xi == std::array<double, 5>{0, 0, 0, 0, 1});
    const EmbeddingPoint p = static_to_embedding(std::numbers::pi / 2, 1.0, std::numbers::pi / 2, 0.0);
    CHECK(p.xi[0] == Approx(std::sqrt(2.0)));
    CHECK(p.xi[1] == Approx(1.0));
    CHECK(std::abs(p.xi[2]) < 1e-16);
    CHECK(std::abs(p.xi[3]) < 1e-16);
    CHECK(std::abs(p.xi[4]) < 1e-15);
    for (const auto& q : random_static_points(1000, 5)) CHECK(std::abs(q.constraint() - 1.0) < 1e-13);
    const StaticCoords s = embedding_to_static(static_to_embedding(4.0, 2.5, 0.7, 5.5));
    CHECK(s.t == Approx(4.0));
    CHECK(s.r == Approx(2.5));
    CHECK(s.theta == Approx(0.7));
    CHECK(s.phi == Approx(5.5));
    CHECK_THROWS(static_to_embedding(0, -1, 0, 0));
}

TEST_CASE("rotation in the 0-5 plane is a time shift") {
    const EmbeddingPoint p = static_to_embedding(0.4, 1.2, 1.0, 2.0);
    const StaticCoords s = embedding_to_static(rotate_05(p, 0.3));
    CHECK(s.t == Approx(0.7));
    CHECK(s.r == Approx(1.2));
}

TEST_CASE("field components") {
    const FiveVectorField jf(build_5d_mode(2.0, 1, 2, WaveType::J), 1);
    for (const auto& p : random_static_points(20, 3)) {
        const Vec5c a = jf(p);
        CHECK(a[0] == cplx(0.0));
        CHECK(a[4] == cplx(0.0));
    }
    const RadialBundle b = build_5d_mode(2.0, 1, 1, WaveType::J_PLUS);
    const int m = 1;
    const double r = 0.9, th = 1.0, ph = 0.3, eps = b.spec.epsilon;
    const cplx I{0.0, 1.0};
    const cplx Y = spherical_harmonic(1, m, th, ph);
    for (double t : {0.0, 0.8, 2.1}) {
        const Vec5c a = evaluate_5d_field(b, m, t, r, th, ph);
        const cplx lower = 0.5 * (a[0] - I * a[4]);
        const cplx upper = 0.5 * (a[0] + I * a[4]);
        CHECK(std::abs(lower - b.eval("F", r).value() * std::polar(1.0, -(eps - 1.0) * t) * Y) < 1e-14);
        CHECK(std::abs(upper - I * b.eval("G", r).value() * std::polar(1.0, -(eps + 1.0) * t) * Y) < 1e-14);
    }
    CHECK_THROWS(FiveVectorField(build_j_wave(2.0, 0, 1), 0));
    CHECK_THROWS(FiveVectorField(b, 2));
}

TEST_CASE("transversality") {
    const auto pts = random_static_points(100, 17);
    for (WaveType t : {WaveType::J, WaveType::J_PLUS, WaveType::J_MINUS})
        for (int j = 1; j <= 3; ++j) {
            const FiveVectorField f(build_5d_mode(0.75, 1, j, t), j - 1);
            CHECK(transversality_check(f, pts).max() < 1e-10);
        }
    const FiveVectorField f0(build_5d_mode(6.0, 2, 0, WaveType::J_PLUS), 0);
    CHECK(transversality_check(f0, pts).max() < 1e-10);
}

TEST_CASE("J50 eigenvalue") {
    const auto pts = random_static_points(20, 23);
    const FiveVectorField j0(build_5d_mode(2.0, 0, 0, WaveType::J_PLUS), 0);
    CHECK(j50_eigen_check(j0, pts).max() < 1e-6);
    const FiveVectorField jt(build_5d_mode(2.0, 1, 2, WaveType::J), -2);
    CHECK(j50_eigen_check(jt, pts).max() < 1e-6);
    const FiveVectorField jm(build_5d_mode(6.0, 1, 3, WaveType::J_MINUS), 2);
    CHECK(j50_eigen_check(jm, pts).max() < 1e-6);
    // Central difference: halving the step divides the error by four.
    const double e1 = j50_eigen_check(jm, pts, 2e-2).max(), e2 = j50_eigen_check(jm, pts, 1e-2).max();
    CHECK(e1 / e2 == Approx(4.0).epsilon(0.02));
    CHECK_THROWS(j50_eigen_check(jm, pts, 0.0));
}

TEST_CASE("relations between the 5D amplitudes") {
    const auto g = Grid{}.nodes();
    const ResidualReport z = verify_2_10_relations(build_5d_mode(2.0, 0, 1, WaveType::J), g);
    CHECK(z.max() == 0.0);
    for (const auto& e : z.entries) CHECK(e.degenerate);
    CHECK(verify_2_10_relations(build_5d_mode(2.0, 0, 1, WaveType::J_PLUS), g).max() < 1e-8);
    CHECK(verify_2_10_relations(build_5d_mode(2.0, 0, 2, WaveType::J_MINUS), g).max() < 1e-8);
}
