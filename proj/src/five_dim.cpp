#include "ads_spin1/five_dim.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "ads_spin1/verifier.hpp"

namespace ads {

namespace {
const cplx I{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double EmbeddingPoint::constraint() const {
    double s = 0.0;
    for (int a = 0; a < 5; ++a) s += kMetric5[a] * xi[a] * xi[a];
    return s;
}

EmbeddingPoint conformal_to_embedding(const Conformal4& x) {
    const double x2 = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    if (std::abs(1.0 + x2) < 1e-12) throw std::domain_error("conformal point on the boundary (1 + x² = 0)");
    const double Phi = (1.0 + x2) / 2.0;
    return {{x[0] / Phi, x[1] / Phi, x[2] / Phi, x[3] / Phi, (1.0 - x2) / (1.0 + x2)}};
}

Conformal4 embedding_to_conformal(const EmbeddingPoint& p) {
    const double d = 1.0 + p.xi[4];
    if (std::abs(d) < 1e-12) throw std::domain_error("embedding point outside the conformal chart (ξ5 = −1)");
    return {p.xi[0] / d, p.xi[1] / d, p.xi[2] / d, p.xi[3] / d};
}

EmbeddingPoint static_to_embedding(double t, double r, double theta, double phi) {
    if (r < 0.0) throw std::invalid_argument("static_to_embedding: r must be non-negative");
    const double s = std::sqrt(1.0 + r * r);
    return {{std::sin(t) * s, r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi),
             r * std::cos(theta), std::cos(t) * s}};
}

StaticCoords embedding_to_static(const EmbeddingPoint& p) {
    const auto& x = p.xi;
    double t = std::atan2(x[0], x[4]);
    if (t < 0.0) t += kTwoPi;
    const double rho = std::hypot(x[1], x[2]);
    const double r = std::hypot(rho, x[3]);
    double phi = std::atan2(x[2], x[1]);
    if (phi < 0.0) phi += kTwoPi;
    return {t, r, std::atan2(rho, x[3]), phi};
}

EmbeddingPoint rotate_05(const EmbeddingPoint& p, double w) {
    EmbeddingPoint q = p;
    const double c = std::cos(w), s = std::sin(w);
    q.xi[0] = c * p.xi[0] + s * p.xi[4];
    q.xi[4] = -s * p.xi[0] + c * p.xi[4];
    return q;
}

FiveVectorField::FiveVectorField(RadialBundle bundle, int m) : bundle_(std::move(bundle)), m_(m) {
    if (bundle_.formalism != Formalism::FIVE_DIM) throw std::invalid_argument("FiveVectorField: FIVE_DIM bundle required");
    if (std::abs(m) > bundle_.spec.j) throw std::invalid_argument("FiveVectorField: |m| > j");
}

Vec5c FiveVectorField::at_static(double t, double r, double theta, double phi) const {
    if (std::sin(theta) == 0.0) throw std::domain_error("5D field: angular singularity");
    const int j = bundle_.spec.j;
    const double eps = bundle_.spec.epsilon;
    auto val = [&](const char* l) { return bundle_.eval(l, r).value(); };
    const cplx e0 = std::polar(1.0, -eps * t), em = std::polar(1.0, -(eps - 1.0) * t),
               ep = std::polar(1.0, -(eps + 1.0) * t);
    CVec3 vec{};
    auto add = [&](int nu, cplx amp) {
        if (amp == cplx(0.0)) return;
        const CVec3 y = vector_spherical_harmonic(nu, j, m_, theta, phi);
        for (int k = 0; k < 3; ++k) vec[k] += amp * y[k];
    };
    add(j + 1, std::sqrt((2.0 * j + 1.0) / (j + 1.0)) * val("f"));
    if (j >= 1) {
        add(j - 1, std::sqrt((2.0 * j + 1.0) / j) * val("g"));
        add(j, val("h"));
    }
    const cplx Y = spherical_harmonic(j, m_, theta, phi);
    const cplx F = val("F"), G = val("G");
    return {(em * F + I * ep * G) * Y, e0 * vec[0], e0 * vec[1], e0 * vec[2], (I * em * F + ep * G) * Y};
}

Vec5c FiveVectorField::operator()(const EmbeddingPoint& p) const {
    const StaticCoords s = embedding_to_static(p);
    return at_static(s.t, s.r, s.theta, s.phi);
}

Vec5c evaluate_5d_field(const RadialBundle& bundle, int m, double t, double r, double theta, double phi) {
    return FiveVectorField(bundle, m).at_static(t, r, theta, phi);
}

cplx contract(const Vec5c& a, const EmbeddingPoint& p) {
    cplx s = 0.0;
    for (int k = 0; k < 5; ++k) s += kMetric5[k] * a[k] * p.xi[k];
    return s;
}

std::vector<EmbeddingPoint> random_static_points(std::size_t count, std::uint64_t seed, double r_max) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> t(0.0, kTwoPi), r(0.05, r_max), th(0.2, std::numbers::pi - 0.2),
        ph(0.0, kTwoPi);
    std::vector<EmbeddingPoint> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double a = t(rng), b = r(rng), c = th(rng), d = ph(rng);
        pts.push_back(static_to_embedding(a, b, c, d));
    }
    return pts;
}

ResidualReport transversality_check(const FiveVectorField& field, std::span<const EmbeddingPoint> points) {
    EntryBuilder eb(EquationId::TRANSVERSALITY, "A.xi = 0");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Vec5c A = field(points[i]);
        TermSum t;
        for (int k = 0; k < 5; ++k) t += kMetric5[k] * A[k] * points[i].xi[k];
        eb.add(t, static_cast<double>(i));
    }
    ResidualReport rep;
    rep.scale = "per-point max |A^a xi_a term|";
    rep.entries.push_back(eb.finish());
    return rep;
}

ResidualReport j50_eigen_check(const FiveVectorField& field, std::span<const EmbeddingPoint> points, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("j50_eigen_check: step must be positive");
    const double eps = field.epsilon();
    EntryBuilder eb(EquationId::J50_EIGEN, "i J50 A = eps A");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const EmbeddingPoint& p = points[i];
        const Vec5c A = field(p);
        const Vec5c Ap = field(rotate_05(p, step)), Am = field(rotate_05(p, -step));
        double num = 0.0, den = 0.0;
        for (int k = 0; k < 5; ++k) {
            cplx J = (Ap[k] - Am[k]) / (2.0 * step);
            if (k == 0) J -= A[4];
            if (k == 4) J += A[0];
            num += std::norm(I * J - eps * A[k]);
            den += std::norm(eps * A[k]);
        }
        if (std::sqrt(den) < 1e-12) throw std::domain_error("j50_eigen_check: field vanishes at sample point");
        eb.add(std::sqrt(num / den), std::sqrt(den), static_cast<double>(i));
    }
    ResidualReport rep;
    rep.scale = "relative to |eps A|";
    rep.entries.push_back(eb.finish());
    return rep;
}

ResidualReport verify_2_10_relations(const RadialBundle& bundle, std::span<const double> grid) {
    return residual_system(bundle, EquationId::REL_2_10prime, grid);
}

}  // namespace ads
