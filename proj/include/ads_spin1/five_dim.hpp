#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ads_spin1/radial_modes.hpp"
#include "ads_spin1/residual.hpp"

namespace ads {

// ξ = (ξ0, ξ1, ξ2, ξ3, ξ5) on (ξ0)² − |ξ|² + (ξ5)² = 1.
struct EmbeddingPoint {
    std::array<double, 5> xi{0.0, 0.0, 0.0, 0.0, 1.0};
    double constraint() const;  // value of the quadratic form (should be 1)
};

struct StaticCoords {
    double t, r, theta, phi;
};

using Conformal4 = std::array<double, 4>;
using Vec5c = std::array<cplx, 5>;

inline constexpr std::array<double, 5> kMetric5{+1.0, -1.0, -1.0, -1.0, +1.0};

EmbeddingPoint conformal_to_embedding(const Conformal4& x);
Conformal4 embedding_to_conformal(const EmbeddingPoint& p);
EmbeddingPoint static_to_embedding(double t, double r, double theta, double phi);
StaticCoords embedding_to_static(const EmbeddingPoint& p);

// Rotation by angle w in the 0–5 plane, the flow generated by L50.
EmbeddingPoint rotate_05(const EmbeddingPoint& p, double w);

class FiveVectorField {
public:
    FiveVectorField(RadialBundle bundle, int m);

    Vec5c at_static(double t, double r, double theta, double phi) const;
    Vec5c operator()(const EmbeddingPoint& p) const;
    double epsilon() const { return bundle_.spec.epsilon; }
    const RadialBundle& bundle() const { return bundle_; }

private:
    RadialBundle bundle_;
    int m_;
};

Vec5c evaluate_5d_field(const RadialBundle& bundle, int m, double t, double r, double theta, double phi);

// A^a ξ_a with the (+,−,−,−,+) metric.
cplx contract(const Vec5c& a, const EmbeddingPoint& p);

std::vector<EmbeddingPoint> random_static_points(std::size_t count, std::uint64_t seed, double r_max = 3.0);

ResidualReport transversality_check(const FiveVectorField& field, std::span<const EmbeddingPoint> points);
ResidualReport j50_eigen_check(const FiveVectorField& field, std::span<const EmbeddingPoint> points,
                               double step = 1e-4);
ResidualReport verify_2_10_relations(const RadialBundle& bundle, std::span<const double> grid);

}  // namespace ads
