#include "ads_spin1/maxwell_rs.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "ads_spin1/verifier.hpp"

namespace ads {

namespace {

const cplx I{0.0, 1.0};
const double S = 1.0 / std::sqrt(2.0);

double max_abs(const auto& m) { return m.cwiseAbs().maxCoeff(); }

Matrix4c embed(const Matrix3c& m) {
    Matrix4c out = Matrix4c::Zero();
    out.block<3, 3>(1, 1) = m;
    return out;
}

// Sixth-order central difference in θ.
template <class F>
cplx d_theta(F&& f, double theta, double h = 1e-3) {
    return (-f(theta - 3 * h) + 9.0 * f(theta - 2 * h) - 45.0 * f(theta - h) + 45.0 * f(theta + h) -
            9.0 * f(theta + 2 * h) + f(theta + 3 * h)) /
           (60.0 * h);
}

}  // namespace

double nu_rs(int j) { return std::sqrt(j * (j + 1.0)); }

Matrix3c reference_U() {
    Matrix3c u;
    u << -S, I * S, 0.0,
         0.0, 0.0, 1.0,
         S, I * S, 0.0;
    return u;
}

Matrix3c reference_U_inv() {
    Matrix3c u;
    u << -S, 0.0, S,
         -I * S, 0.0, -I * S,
         0.0, 1.0, 0.0;
    return u;
}

std::array<Matrix3c, 3> reference_tau_cyclic() {
    std::array<Matrix3c, 3> t;
    t[0] << 0.0, -I, 0.0,
            -I, 0.0, -I,
            0.0, -I, 0.0;
    t[0] *= S;
    t[1] << 0.0, -1.0, 0.0,
            1.0, 0.0, -1.0,
            0.0, 1.0, 0.0;
    t[1] *= S;
    t[2] << 1.0, 0.0, 0.0,
            0.0, 0.0, 0.0,
            0.0, 0.0, -1.0;
    t[2] *= -I;
    return t;
}

std::array<Matrix4c, 3> reference_alpha_cyclic() {
    std::array<Matrix4c, 3> a;
    a[0] << 0.0, -1.0, 0.0, 1.0,
            1.0, 0.0, -I, 0.0,
            0.0, -I, 0.0, -I,
            -1.0, 0.0, -I, 0.0;
    a[0] *= S;
    a[1] << 0.0, -I, 0.0, -I,
            -I, 0.0, -1.0, 0.0,
            0.0, 1.0, 0.0, -1.0,
            -I, 0.0, 1.0, 0.0;
    a[1] *= S;
    a[2] << 0.0, 0.0, 1.0, 0.0,
            0.0, -I, 0.0, 0.0,
            -1.0, 0.0, 0.0, 0.0,
            0.0, 0.0, 0.0, I;
    return a;
}

RSMatrices build_rs_matrices() {
    RSMatrices m;
    m.tau[0] << 0, 0, 0, 0, 0, -1, 0, 1, 0;
    m.tau[1] << 0, 0, 1, 0, 0, 0, -1, 0, 0;
    m.tau[2] << 0, -1, 0, 1, 0, 0, 0, 0, 0;
    m.U = reference_U();
    m.U_inv = m.U.inverse();
    m.U4 = embed(m.U);
    m.U4(0, 0) = 1.0;
    m.U4_inv = m.U4.inverse();
    for (int k = 0; k < 3; ++k) {
        const Matrix3c tk = m.tau[k].cast<cplx>();
        m.s[k] = embed(tk);
        m.alpha[k] = m.s[k];
        m.alpha[k](0, k + 1) = 1.0;
        m.alpha[k](k + 1, 0) = -1.0;
        m.s_cyclic[k] = m.U * tk * m.U_inv;
        m.s_cyclic4[k] = embed(m.s_cyclic[k]);
        m.alpha_cyclic[k] = m.U4 * m.alpha[k] * m.U4_inv;
    }
    return m;
}

ResidualReport verify_rs_matrices(const RSMatrices& m) {
    ResidualReport rep;
    rep.scale = "max entrywise deviation";
    auto entry = [&](std::string label, double dev) {
        EntryBuilder eb(EquationId::ALG_IDENTITY, std::move(label));
        eb.add(dev, 1.0, 0.0);
        rep.entries.push_back(eb.finish());
    };
    entry("U U^dagger = 1", max_abs(m.U * m.U.adjoint() - Matrix3c::Identity()));
    entry("U^-1 reference", max_abs(m.U_inv - reference_U_inv()));
    const auto tp = reference_tau_cyclic();
    const auto ap = reference_alpha_cyclic();
    for (int k = 0; k < 3; ++k) {
        const std::string n = std::to_string(k + 1);
        entry("U tau_" + n + " U^-1 reference", max_abs(m.s_cyclic[k] - tp[k]));
        entry("alpha'^" + n + " reference", max_abs(m.alpha_cyclic[k] - ap[k]));
        const int a = k, b = (k + 1) % 3, c = (k + 2) % 3;
        entry("[tau_" + std::to_string(a + 1) + ", tau_" + std::to_string(b + 1) + "] = tau_" + std::to_string(c + 1),
              max_abs(m.tau[a] * m.tau[b] - m.tau[b] * m.tau[a] - m.tau[c]));
        entry("[tau'_" + std::to_string(a + 1) + ", tau'_" + std::to_string(b + 1) + "] = tau'_" +
                  std::to_string(c + 1),
              max_abs(m.s_cyclic[a] * m.s_cyclic[b] - m.s_cyclic[b] * m.s_cyclic[a] - m.s_cyclic[c]));
    }
    return rep;
}

Hyp2F1Params photon_params(double a, double b) { return {a + b, a + b + 0.5, 2.0 * a + 0.5}; }

RadialFunction photon_branch(double /*omega*/, double a, double b) {
    const Hyp2F1Params p = photon_params(a, b);
    return [p, a, b](double r) {
        const Jet x = Jet::variable(r);
        const Jet phi = 1.0 + x * x;
        return pow(x, 2.0 * a) * pow(phi, b) * hyp2f1_jet(p, -(x * x));
    };
}

PhotonMode build_photon_mode(int n, int j, int m) {
    if (n < 0) throw std::invalid_argument("photon mode: n must be non-negative");
    if (j < 1) throw std::invalid_argument("photon mode: j must be at least 1");
    if (std::abs(m) > j) throw std::invalid_argument("photon mode: |m| > j");
    PhotonMode pm;
    pm.n = n;
    pm.j = j;
    pm.m = m;
    pm.omega = energy_photon_rs(n, j);
    pm.a = (j + 1) / 2.0;
    pm.b = -pm.omega / 2.0;
    pm.params = photon_params(pm.a, pm.b);

    const double w = pm.omega, nu = nu_rs(j), s2 = std::sqrt(2.0);
    const RadialFunction G = photon_branch(w, pm.a, pm.b);
    // F = Φ G' / (iω); its jet loses one order, so F is rebuilt from G's jet.
    RadialFunction F = [G, w](double r) {
        const Jet x = Jet::variable(r);
        return (1.0 + x * x) * G(r).derivative() / (I * w);
    };
    auto reduced = [](RadialFunction h) {
        return [h](double r) {
            const Jet x = Jet::variable(r);
            return h(r) / (x * sqrt(1.0 + x * x));
        };
    };
    const RadialFunction f = reduced(F), g = reduced(G);

    RadialBundle& bd = pm.bundle;
    bd.formalism = Formalism::RS;
    bd.mode_class = ModeClass::RS_PHOTON;
    bd.spec.n = n;
    bd.spec.j = j;
    bd.spec.m = m;
    bd.spec.type = WaveType::J;
    bd.spec.mass_sq = 0.0;
    bd.spec.massless = true;
    bd.spec.epsilon = w;
    bd.components = {
        {"G", G},
        {"F", F},
        {"f1", [f, g, s2](double r) { return (f(r) + g(r)) / s2; }},
        {"f2", [G, nu, w](double r) {
             const Jet x = Jet::variable(r);
             return I * nu / w * G(r) / (x * x);
         }},
        {"f3", [f, g, s2](double r) { return (f(r) - g(r)) / s2; }},
    };
    return pm;
}

ResidualReport rs_system_residual(const PhotonMode& mode, std::span<const double> grid) {
    ResidualReport rep = residual_system(mode.bundle, EquationId::SYS_5_5prime, grid);
    rep.merge(residual_system(mode.bundle, EquationId::SYS_3_10prime, grid));
    return rep;
}

ResidualReport angular_action_check(int j, int m, std::span<const double> thetas) {
    if (j < 1) throw std::invalid_argument("angular action: j must be at least 1");
    if (std::abs(m) > j) throw std::invalid_argument("angular action: |m| > j");
    const RSMatrices mats = build_rs_matrices();
    const double k = nu_rs(j) / std::sqrt(2.0);
    const cplx f1 = 0.7, f2 = 1.3, f3 = -0.4;
    const double phi = 0.37;
    auto D = [&](int sigma, double th) { return d_sigma(j, m, sigma, phi, th); };
    auto psi = [&](double th) {
        Eigen::Matrix<cplx, 4, 1> v;
        v << 0.0, f1 * D(-1, th), f2 * D(0, th), f3 * D(+1, th);
        return v;
    };
    const Matrix4c s3 = mats.s_cyclic4[2];

    std::array<EntryBuilder, 4> eb{EntryBuilder(EquationId::ANGULAR_ACTION, "component 0"),
                                   EntryBuilder(EquationId::ANGULAR_ACTION, "component 1"),
                                   EntryBuilder(EquationId::ANGULAR_ACTION, "component 2"),
                                   EntryBuilder(EquationId::ANGULAR_ACTION, "component 3")};
    for (double th : thetas) {
        const double st = std::sin(th);
        if (std::abs(st) < 1e-12) throw std::domain_error("angular action: θ at a pole");
        Eigen::Matrix<cplx, 4, 1> dpsi;
        for (int c = 0; c < 4; ++c) dpsi(c) = d_theta([&](double x) { return psi(x)(c); }, th);
        const Eigen::Matrix<cplx, 4, 1> v = psi(th);
        const Eigen::Matrix<cplx, 4, 1> ang = (I * double(m) * v + std::cos(th) * (s3 * v)) / st;
        const Eigen::Matrix<cplx, 4, 1> a1 = mats.alpha_cyclic[0] * dpsi;
        const Eigen::Matrix<cplx, 4, 1> a2 = mats.alpha_cyclic[1] * ang;
        std::array<cplx, 4> expect{k * (f1 + f3) * D(0, th), -I * k * f2 * D(-1, th), I * k * (f1 - f3) * D(0, th),
                                   I * k * f2 * D(+1, th)};
        for (int c = 0; c < 4; ++c) {
            TermSum t;
            t += a1(c);
            t += a2(c);
            t -= expect[c];
            eb[c].add(t, th);
        }
    }
    ResidualReport rep;
    rep.grid.assign(thetas.begin(), thetas.end());
    for (auto& e : eb) rep.entries.push_back(e.finish());
    return rep;
}

ResidualReport rs_dependence_check(int j, double omega, std::span<const double> grid, std::uint64_t seed,
                                   int trials) {
    if (j < 1) throw std::invalid_argument("dependence check: j must be at least 1");
    const double k = nu_rs(j) / std::sqrt(2.0), w = omega;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    EntryBuilder eb(EquationId::SYS_5_5prime, "(1) from (2)-(4)");
    for (int trial = 0; trial < trials; ++trial) {
        std::array<std::array<cplx, 4>, 3> c{};
        for (auto& row : c)
            for (auto& x : row) x = cplx(coef(rng), coef(rng));
        // f_i = (c0 + c1 r + c2 r² + c3 r³) / (1 + r²)²
        auto trial_fn = [&](int i, const Jet& x) {
            const Jet p = c[i][0] + c[i][1] * x + c[i][2] * x * x + c[i][3] * x * x * x;
            const Jet q = 1.0 + x * x;
            return p / (q * q);
        };
        for (double r : grid) {
            const Jet x = Jet::variable(r);
            const Jet f1 = trial_fn(0, x), f2 = trial_fn(1, x), f3 = trial_fn(2, x);
            const Jet sP = sqrt(1.0 + x * x);
            const double s = sP.value().real();
            const cplx E1 = s * f2.d(1) + 2.0 * s / r * f2.value() + k / r * (f1.value() + f3.value());
            const cplx E2 = -w / s * f1.value() - I * s * f1.d(1) - I * s / r * f1.value() -
                            I * r / s * f1.value() - I * k / r * f2.value();
            const cplx E4 = -w / s * f3.value() + I * s * f3.d(1) + I * s / r * f3.value() +
                            I * r / s * f3.value() + I * k / r * f2.value();
            // r·E3 as a jet, so its derivative is exact.
            const Jet rE3 = x * (-w * f2 / sP + (I * k) * (f1 - f3) / x);
            TermSum t;
            t += w * r / (k * s) * E1;
            t += E2;
            t += E4;
            t += (s * rE3.d(1) + s / r * rE3.value() + r / s * rE3.value()) / k;
            eb.add(t, r);
        }
    }
    ResidualReport rep;
    rep.grid.assign(grid.begin(), grid.end());
    rep.entries.push_back(eb.finish());
    return rep;
}

ElectroMagnetic electromagnetic_field(const PhotonMode& mode, double t, double r, double theta, double phi) {
    const RSMatrices mats = build_rs_matrices();
    const cplx ph = std::polar(1.0, -mode.omega * t);
    Eigen::Matrix<cplx, 4, 1> v;
    v << 0.0, mode.bundle.eval("f1", r).value() * d_sigma(mode.j, mode.m, -1, phi, theta),
        mode.bundle.eval("f2", r).value() * d_sigma(mode.j, mode.m, 0, phi, theta),
        mode.bundle.eval("f3", r).value() * d_sigma(mode.j, mode.m, +1, phi, theta);
    const Eigen::Matrix<cplx, 4, 1> lab = mats.U4_inv * (ph * v);
    ElectroMagnetic out{};
    for (int k = 0; k < 3; ++k) {
        out.E[k] = lab(k + 1).real();
        out.B[k] = lab(k + 1).imag();
    }
    return out;
}

}  // namespace ads
