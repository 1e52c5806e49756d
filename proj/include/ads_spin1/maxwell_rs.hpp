#pragma once

#include <array>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "ads_spin1/radial_modes.hpp"
#include "ads_spin1/residual.hpp"

namespace ads {

using Matrix3c = Eigen::Matrix<cplx, 3, 3>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;

struct RSMatrices {
    std::array<Eigen::Matrix3d, 3> tau;       // real spin-1 generators, [τ1, τ2] = τ3
    std::array<Matrix4c, 3> s;                // 0 ⊕ τ_k
    std::array<Matrix4c, 3> alpha;            // lab-basis α^k
    Matrix3c U, U_inv;                        // cyclic basis change
    Matrix4c U4, U4_inv;                      // 1 ⊕ U
    std::array<Matrix3c, 3> s_cyclic;         // τ'_k = U τ_k U⁻¹
    std::array<Matrix4c, 3> s_cyclic4;        // 0 ⊕ τ'_k
    std::array<Matrix4c, 3> alpha_cyclic;     // α'^k = U4 α^k U4⁻¹
};

RSMatrices build_rs_matrices();

// Reference matrices, entered independently of the construction above.
Matrix3c reference_U();
Matrix3c reference_U_inv();
std::array<Matrix3c, 3> reference_tau_cyclic();
std::array<Matrix4c, 3> reference_alpha_cyclic();

// Entrywise deviations between the constructed and reference matrices plus the
// unitarity and commutator identities.
ResidualReport verify_rs_matrices(const RSMatrices& m);

struct PhotonMode {
    int n = 0, j = 1, m = 0;
    double omega = 0.0;
    double a = 0.0, b = 0.0;  // G = r^{2a} (1+r²)^b F(α, β; γ; −r²)
    Hyp2F1Params params;
    RadialBundle bundle;      // components G, F, f1, f2, f3
};

double nu_rs(int j);  // √(j(j+1))

PhotonMode build_photon_mode(int n, int j, int m = 0);

// G for an arbitrary branch choice (a, b) of the indicial analysis.
RadialFunction photon_branch(double omega, double a, double b);
Hyp2F1Params photon_params(double a, double b);

ResidualReport rs_system_residual(const PhotonMode& mode, std::span<const double> grid);

// Σ'_{θφ} applied to the angular ansatz with constant radial factors,
// compared with the closed-form action.
ResidualReport angular_action_check(int j, int m, std::span<const double> thetas);

// Equation (1) of the first-order system is a combination of (2)–(4) and the
// derivative of (3); checked on random smooth (non-solution) triples.
ResidualReport rs_dependence_check(int j, double omega, std::span<const double> grid, std::uint64_t seed = 7,
                                   int trials = 8);

struct ElectroMagnetic {
    std::array<double, 3> E, B;  // Cartesian components at the sample point (c = 1)
};
// Back-transform of the cyclic-basis spinor Ψ' to the lab basis, split into
// real and imaginary parts. Frame components; not separately verified.
ElectroMagnetic electromagnetic_field(const PhotonMode& mode, double t, double r, double theta, double phi);

}  // namespace ads
