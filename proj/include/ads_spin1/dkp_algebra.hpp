#pragma once

#include <array>
#include <utility>

#include <Eigen/Dense>

#include "ads_spin1/residual.hpp"

namespace ads {

// Component order: (Φ0, Φ1, Φ2, Φ3; Φ01, Φ02, Φ03, Φ23, Φ31, Φ12).
using Matrix10 = Eigen::Matrix<cplx, 10, 10>;

inline constexpr std::array<std::pair<int, int>, 6> kTensorPairs{
    {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

struct MetricSignature {
    static constexpr std::array<double, 4> g{+1.0, -1.0, -1.0, -1.0};
    static double at(int a, int b) { return a == b ? g.at(a) : 0.0; }
};

Matrix10 build_beta(int a);
Matrix10 build_generator(int a, int b);
Matrix10 build_massless_projector();

// Closed-form blocks of β^c β^a β^b (vector→tensor block λκλ-type and
// tensor→vector block κλκ-type), assembled into a 10×10 matrix.
Matrix10 block_product(int c, int a, int b);

bool is_block_diagonal(const Matrix10& m, double tol = 0.0);
bool is_block_off_diagonal(const Matrix10& m, double tol = 0.0);

ResidualReport verify_trilinear(double tolerance = 1e-12);
ResidualReport verify_commutators(double tolerance = 1e-12);
ResidualReport verify_block_products(double tolerance = 1e-12);

}  // namespace ads
