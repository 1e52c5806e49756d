#pragma once

#include <span>
#include <vector>

#include "ads_spin1/radial_modes.hpp"
#include "ads_spin1/residual.hpp"

namespace ads {

struct Grid {
    double r_min = 1e-3;
    double r_max = 50.0;
    int points = 60;

    std::vector<double> nodes() const { return log_grid(r_min, r_max, points); }
};

ResidualReport residual_system(const RadialBundle& bundle, EquationId id, std::span<const double> grid);
ResidualReport residual_system(const RadialBundle& bundle, EquationId id, const Grid& grid = {});

enum class LorentzVariant { FORM_2_5a, FORM_I, FORM_II };
ResidualReport lorentz_residual(const RadialBundle& bundle, LorentzVariant variant, const Grid& grid = {});

// Equations that the bundle's mode class is expected to satisfy.
std::vector<EquationId> applicable_equations(const RadialBundle& bundle);

// Runs every applicable equation (plus the cross-formalism comparison for 5D
// bundles) and merges the reports.
ResidualReport verify_all(const RadialBundle& bundle, std::span<const double> grid);
ResidualReport verify_all(const RadialBundle& bundle, const Grid& grid = {});

struct FitWindow {
    double r_min = 20.0;
    double r_max = 50.0;
    int points = 40;
};

// Least-squares slope of log|f| against log r.
double decay_exponent(const RadialFunction& f, const FitWindow& window = {});
double decay_exponent(const RadialBundle& bundle, std::string_view component, const FitWindow& window = {});

// Pointwise relative difference between matched DKP and 5D radial profiles.
ResidualReport cross_formalism_compare(const ModeSpec& spec, const Grid& grid = {});
ResidualReport cross_formalism_compare(const RadialBundle& dkp, const RadialBundle& five, std::span<const double> grid);

}  // namespace ads
