#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ads_spin1/jet.hpp"
#include "ads_spin1/spectrum.hpp"
#include "ads_spin1/special_functions.hpp"

namespace ads {

enum class Formalism { DKP, FIVE_DIM, RS };

enum class ModeClass {
    DKP_J,
    DKP_J_PLUS,
    DKP_J_MINUS,
    DKP_J0,
    DKP_GAUGE_J0,
    FIVE_DIM_J,
    FIVE_DIM_J_PLUS,
    FIVE_DIM_J_MINUS,
    RS_PHOTON,
};

std::string_view to_string(Formalism f);
std::string_view to_string(ModeClass c);

using RadialFunction = std::function<Jet(double)>;

struct RadialBundle {
    Formalism formalism = Formalism::DKP;
    ModeClass mode_class = ModeClass::DKP_J;
    ModeSpec spec;
    // Mass coefficients of the vector and tensor rows: (m, m) for Proca,
    // (0, 1) after the massless substitution m√Φ → P6√Φ.
    double m_vector = 0.0;
    double m_tensor = 0.0;
    std::vector<std::pair<std::string, RadialFunction>> components;

    bool has(std::string_view label) const;
    const RadialFunction& component(std::string_view label) const;
    Jet eval(std::string_view label, double r) const { return component(label)(r); }
    std::vector<std::string> labels() const;

    RadialBundle with_component(std::string_view label, RadialFunction fn) const;
    RadialBundle scaled(cplx factor) const;
    // Multiply one component by a function of r (mutation testing).
    RadialBundle perturbed(std::string_view label, RadialFunction factor) const;
};

double nu_dkp(int j);  // √(j(j+1)/2), the angular factor of the DKP radial systems

Hyp2F1Params u_params(double epsilon, int j, double mass_sq);
// U_{ε,j} = r^j (1+r²)^{-ε/2} F(α, β, γ; -r²).
RadialFunction u_radial(double epsilon, int j, double mass_sq);

RadialBundle build_j_wave(double mass_sq, int n, int j);
RadialBundle build_jplus_wave(double mass_sq, int n, int j);
RadialBundle build_jminus_wave(double mass_sq, int n, int j);
RadialBundle build_j0_mode(double mass_sq, int n);
RadialBundle build_dkp_wave(const ModeSpec& spec);
RadialBundle build_massless_wave(WaveType type, int n, int j);

double gauge_j0_epsilon(int n);  // polynomial condition of the j=0 gauge scalar: ε = 2n + 3
RadialBundle build_massless_gauge_j0(double epsilon);

RadialBundle build_5d_mode(double mass_sq, int n, int j, WaveType type);

// Parameters (a, b, c) of the (j-1) branch and the 5D coefficients G0, F0.
struct BranchCoefficients {
    double a, b, c;
    double G0, F0_imag;  // F0 = i · F0_imag
};
BranchCoefficients five_dim_coefficients(double mass_sq, int n, int j, WaveType type);

using WaveFunction10 = std::array<cplx, 10>;
WaveFunction10 evaluate_wavefunction(const RadialBundle& bundle, double t, double r, double theta, double phi,
                                     int m);

// σ index of the D_σ multiplying each DKP component in the ansatz.
inline constexpr std::array<int, 10> kDkpSigma{0, -1, 0, +1, -1, 0, +1, -1, 0, +1};

std::vector<double> log_grid(double r_min, double r_max, int points);

}  // namespace ads
