#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ads_spin1/verifier.hpp"
#include "support/mode_catalog.hpp"

using namespace ads;
using doctest::Approx;

namespace {
RadialBundle zeroed(const RadialBundle& b) {
    RadialBundle z = b;
    for (auto& c : z.components) c.second = [](double) { return Jet(0.0); };
    return z;
}
}  // namespace

TEST_CASE("default grid") {
    const auto g = Grid{}.nodes();
    CHECK(g.size() == 60);
    CHECK(g.front() == Approx(1e-3));
    CHECK(g.back() == Approx(50.0));
}

TEST_CASE("j-wave satisfies its first-order system") {
    const RadialBundle b = build_j_wave(2.0, 1, 2);
    const ResidualReport r = residual_system(b, EquationId::SYS_1_5a);
    CHECK(r.entries.size() == 4);
    CHECK(r.max() < 1e-8);
    CHECK(r.passed());
    CHECK(r.grid.size() == 60);
}

TEST_CASE("zero bundle gives zero, flagged degenerate") {
    const RadialBundle z = zeroed(build_jplus_wave(2.0, 0, 1));
    for (EquationId id : {EquationId::SYS_1_5b, EquationId::ODE_2_6a, EquationId::SYS_2_4a}) {
        const ResidualReport r = residual_system(z, id);
        CHECK(r.max() == 0.0);
        for (const auto& e : r.entries) CHECK(e.degenerate);
    }
}

TEST_CASE("corrupted bundle is detected") {
    const RadialBundle b = build_j_wave(2.0, 0, 1);
    CHECK(residual_system(b, EquationId::ODE_2_1b).max() < 1e-8);
    const RadialBundle bad = b.perturbed("f2", [](double r) { return 1.0 + 0.01 * Jet::variable(r); });
    CHECK(residual_system(bad, EquationId::ODE_2_1b).max() > 1e-3);
}

TEST_CASE("residuals are invariant under complex rescaling") {
    // A non-solution keeps the residuals well above roundoff.
    const RadialBundle b =
        build_jminus_wave(6.0, 2, 3).perturbed("f1", [](double r) { return 1.0 + 0.01 * Jet::variable(r); });
    const ResidualReport r1 = verify_all(b), r2 = verify_all(b.scaled(cplx(2.0, -3.0)));
    REQUIRE(r1.entries.size() == r2.entries.size());
    CHECK(r1.max() > 1e-4);
    for (std::size_t i = 0; i < r1.entries.size(); ++i) {
        // Equations not touching f1 stay at roundoff, where only closeness is meaningful.
        CHECK(std::abs(r2.entries[i].max_residual - r1.entries[i].max_residual) <=
              1e-9 * r1.entries[i].max_residual + 1e-10);
        CHECK(r2.entries[i].label == r1.entries[i].label);
    }
}

TEST_CASE("Lorentz conditions") {
    const ResidualReport j = lorentz_residual(build_j_wave(2.0, 1, 2), LorentzVariant::FORM_2_5a);
    CHECK(j.max() == 0.0);
    CHECK(lorentz_residual(build_jplus_wave(2.0, 1, 2), LorentzVariant::FORM_I).max() < 1e-8);
    CHECK(lorentz_residual(build_jplus_wave(2.0, 1, 2), LorentzVariant::FORM_2_5a).max() < 1e-8);
    CHECK(lorentz_residual(build_jminus_wave(2.0, 1, 2), LorentzVariant::FORM_II).max() < 1e-8);
    // The forms are not interchangeable.
    CHECK(lorentz_residual(build_jminus_wave(2.0, 1, 2), LorentzVariant::FORM_I).max() > 1e-4);
}

TEST_CASE("every constructed class passes its applicable equations") {
    for (const auto& [name, b] : catalog::representatives()) {
        INFO(name);
        const auto ids = applicable_equations(b);
        CHECK_FALSE(ids.empty());
        const ResidualReport r = verify_all(b);
        CHECK(r.max() < 1e-8);
    }
}

TEST_CASE("1% perturbation of any non-trivial component is detected") {
    const auto grid = Grid{}.nodes();
    for (const auto& [name, b] : catalog::representatives()) {
        for (const auto& label : b.labels()) {
            if (catalog::identically_zero(b.component(label), grid)) continue;
            INFO(name << " / " << label);
            const RadialBundle bad = b.perturbed(label, [](double) { return Jet(1.01); });
            CHECK(verify_all(bad, grid).max() > 1e-4);
        }
    }
}

TEST_CASE("usage errors") {
    const RadialBundle b = build_j_wave(2.0, 0, 1);
    const std::vector<double> empty;
    CHECK_THROWS_AS(residual_system(b, EquationId::SYS_1_5a, std::span<const double>(empty)), std::invalid_argument);
    CHECK_THROWS_AS(residual_system(b, EquationId::ODE_3_14), std::invalid_argument);
    CHECK_THROWS_AS(residual_system(b, EquationId::ALG_IDENTITY), std::invalid_argument);
    RadialBundle missing = b;
    std::erase_if(missing.components, [](const auto& c) { return c.first == "f9"; });
    CHECK_THROWS_AS(residual_system(missing, EquationId::SYS_1_5a), std::out_of_range);
}

TEST_CASE("decay exponents") {
    const double eps = energy_massive(2.0, 1, 2, WaveType::J);
    CHECK(decay_exponent(u_radial(eps, 2, 2.0)) == Approx(-3.0).epsilon(0.01));
    CHECK(decay_exponent(u_radial(2 * 1 + 2 + 2.0, 2, 0.0)) == Approx(-2.0).epsilon(0.01));
    CHECK(decay_exponent([](double r) { return pow(Jet::variable(r), -3.7); }) == Approx(-3.7).epsilon(1e-10));
    CHECK(decay_exponent(build_j_wave(6.0, 0, 1), "f2") == Approx(-1.5 - 2.5).epsilon(0.01));
    CHECK_THROWS_AS(decay_exponent([](double) { return Jet(0.0); }), std::domain_error);
}

TEST_CASE("cross-formalism comparison") {
    CHECK(cross_formalism_compare(ModeSpec::massive(2.0, 0, 1, WaveType::J)).max() < 1e-10);
    CHECK(cross_formalism_compare(ModeSpec::massive(2.0, 0, 0, WaveType::J_PLUS)).max() < 1e-10);
    CHECK(cross_formalism_compare(ModeSpec::massive(0.75, 2, 3, WaveType::J_MINUS)).max() < 1e-10);
    const auto g = Grid{}.nodes();
    CHECK_THROWS_AS(cross_formalism_compare(build_j_wave(2.0, 0, 1), build_5d_mode(2.0, 0, 1, WaveType::J_PLUS), g),
                    std::invalid_argument);
    CHECK_THROWS_AS(cross_formalism_compare(build_j_wave(2.0, 0, 1), build_5d_mode(2.0, 1, 1, WaveType::J), g),
                    std::invalid_argument);
}

TEST_CASE("equation names round-trip") {
    for (EquationId id : all_equation_ids()) CHECK(equation_from_string(to_string(id)) == id);
    CHECK_THROWS(equation_from_string("SYS_9_9"));
}
