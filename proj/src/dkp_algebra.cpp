#include "ads_spin1/dkp_algebra.hpp"

#include <stdexcept>
#include <string>

namespace ads {

namespace {

const cplx I{0.0, 1.0};

void check_index(int a) {
    if (a < 0 || a > 3) throw std::out_of_range("tetrad index out of range: " + std::to_string(a));
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }
double g(int a, int b) { return MetricSignature::at(a, b); }

// δ^{cj}_{mn}
double delta2(int c, int j, int m, int n) { return delta(c, m) * delta(j, n) - delta(c, n) * delta(j, m); }

double max_abs(const Matrix10& m) { return m.cwiseAbs().maxCoeff(); }

const std::array<Matrix10, 4>& betas() {
    static const std::array<Matrix10, 4> b{build_beta(0), build_beta(1), build_beta(2), build_beta(3)};
    return b;
}

}  // namespace

Matrix10 build_beta(int a) {
    check_index(a);
    Matrix10 b = Matrix10::Zero();
    for (int j = 0; j < 4; ++j) {
        for (int p = 0; p < 6; ++p) {
            const auto [m, n] = kTensorPairs[p];
            b(j, 4 + p) = -I * (delta(m, j) * g(n, a) - delta(n, j) * g(m, a));
            b(4 + p, j) = -I * delta2(a, j, m, n);
        }
    }
    return b;
}

Matrix10 build_generator(int a, int b) {
    check_index(a);
    check_index(b);
    const Matrix10 ba = build_beta(a), bb = build_beta(b);
    return ba * bb - bb * ba;
}

Matrix10 build_massless_projector() {
    Matrix10 p = Matrix10::Zero();
    for (int k = 4; k < 10; ++k) p(k, k) = 1.0;
    return p;
}

Matrix10 block_product(int c, int a, int b) {
    check_index(c);
    check_index(a);
    check_index(b);
    Matrix10 out = Matrix10::Zero();
    for (int p = 0; p < 6; ++p) {
        const auto [m, n] = kTensorPairs[p];
        for (int j = 0; j < 4; ++j) {
            // λ^c κ^a λ^b
            out(4 + p, j) = I * (delta2(c, b, m, n) * g(a, j) - delta2(c, j, m, n) * g(a, b));
            // κ^c λ^a κ^b
            out(j, 4 + p) = I * (delta(a, j) * (g(c, m) * g(b, n) - g(c, n) * g(b, m)) +
                                 g(a, c) * (delta(n, j) * g(m, b) - delta(m, j) * g(n, b)));
        }
    }
    return out;
}

bool is_block_diagonal(const Matrix10& m, double tol) {
    return m.topRightCorner<4, 6>().cwiseAbs().maxCoeff() <= tol &&
           m.bottomLeftCorner<6, 4>().cwiseAbs().maxCoeff() <= tol;
}

bool is_block_off_diagonal(const Matrix10& m, double tol) {
    return m.topLeftCorner<4, 4>().cwiseAbs().maxCoeff() <= tol &&
           m.bottomRightCorner<6, 6>().cwiseAbs().maxCoeff() <= tol;
}

ResidualReport verify_trilinear(double tolerance) {
    const auto& B = betas();
    ResidualReport r;
    r.scale = "absolute entrywise";
    r.tolerance = tolerance;
    for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const Matrix10 lhs = B[c] * B[a] * B[b] + B[b] * B[a] * B[c];
                const Matrix10 rhs = B[c] * g(a, b) + B[b] * g(a, c);
                EntryBuilder eb(EquationId::ALG_IDENTITY,
                                "trilinear (" + std::to_string(c) + "," + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
                eb.add(max_abs(lhs - rhs), 1.0, 16 * c + 4 * a + b);
                r.entries.push_back(eb.finish());
            }
    return r;
}

ResidualReport verify_commutators(double tolerance) {
    const auto& B = betas();
    std::array<std::array<Matrix10, 4>, 4> J;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) J[a][b] = B[a] * B[b] - B[b] * B[a];

    EntryBuilder beta_j(EquationId::ALG_IDENTITY, "[beta,j]");
    for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const Matrix10 lhs = B[c] * J[a][b] - J[a][b] * B[c];
                const Matrix10 rhs = g(c, a) * B[b] - g(c, b) * B[a];
                beta_j.add(max_abs(lhs - rhs), 1.0, 16 * c + 4 * a + b);
            }

    EntryBuilder j_j(EquationId::ALG_IDENTITY, "[j,j]");
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    const Matrix10 lhs = J[m][n] * J[a][b] - J[a][b] * J[m][n];
                    const Matrix10 rhs = (g(n, a) * J[m][b] - g(n, b) * J[m][a]) -
                                         (g(m, a) * J[n][b] - g(m, b) * J[n][a]);
                    j_j.add(max_abs(lhs - rhs), 1.0, 64 * m + 16 * n + 4 * a + b);
                }

    ResidualReport r;
    r.scale = "absolute entrywise";
    r.tolerance = tolerance;
    r.entries.push_back(beta_j.finish());
    r.entries.push_back(j_j.finish());
    return r;
}

ResidualReport verify_block_products(double tolerance) {
    const auto& B = betas();
    EntryBuilder eb(EquationId::ALG_IDENTITY, "block products");
    for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                eb.add(max_abs(B[c] * B[a] * B[b] - block_product(c, a, b)), 1.0, 16 * c + 4 * a + b);
    ResidualReport r;
    r.scale = "absolute entrywise";
    r.tolerance = tolerance;
    r.entries.push_back(eb.finish());
    return r;
}

}  // namespace ads
