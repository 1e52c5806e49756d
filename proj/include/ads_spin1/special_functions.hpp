#pragma once

#include <array>
#include <span>
#include <vector>

#include "ads_spin1/jet.hpp"
#include "ads_spin1/residual.hpp"

namespace ads {

struct Hyp2F1Params {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;

    // Degree of the terminating series, or -1 when neither α nor β is a
    // non-positive integer (within 1e-9).
    int polynomial_degree() const;
    bool is_polynomial() const { return polynomial_degree() >= 0; }
};

double hyp2f1(const Hyp2F1Params& p, double z);
double hyp2f1_derivative(const Hyp2F1Params& p, double z);
double hyp2f1_nth_derivative(const Hyp2F1Params& p, double z, int k);

// F(α, β; γ; z(r)) as a jet, chained through the jet of z.
Jet hyp2f1_jet(const Hyp2F1Params& p, const Jet& z);

// Power-series coefficients c_k of z^k (terminating series only).
std::vector<double> hyp2f1_polynomial_coefficients(const Hyp2F1Params& p);

int count_sign_changes(std::span<const double> values);

// Wigner small-d, explicit sum formula.
double wigner_d(int j, int mp, int m, double theta);
// D^j_{mp,m}(φ, θ, 0) = e^{-i mp φ} d^j_{mp,m}(θ).
cplx wigner_D(int j, int mp, int m, double phi, double theta);
// The ansatz functions D_σ = D^j_{-m,σ}(φ, θ, 0); zero when |σ| > j.
cplx d_sigma(int j, int m, int sigma, double phi, double theta);

double clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M);
cplx spherical_harmonic(int l, int m, double theta, double phi);

using CVec3 = std::array<cplx, 3>;
// Y^ν_{jm} in the Cartesian frame.
CVec3 vector_spherical_harmonic(int nu, int j, int m, double theta, double phi);

// Six θ-relations of the D_σ functions, with a finite-difference ∂_θ.
ResidualReport verify_recursions(int j, int m, std::span<const double> thetas);
std::vector<double> interior_theta_grid(int points);

}  // namespace ads
