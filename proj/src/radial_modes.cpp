#include "ads_spin1/radial_modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ads {

namespace {

const cplx I{0.0, 1.0};

Jet r_jet(double r) { return Jet::variable(r); }
Jet phi_jet(double r) {
    const Jet x = r_jet(r);
    return 1.0 + x * x;
}

RadialFunction zero() {
    return [](double) { return Jet(0.0); };
}

struct Couplings {
    double mv, mt;
};

Couplings couplings(const ModeSpec& s) {
    if (s.massless) return {0.0, 1.0};
    const double m = std::sqrt(s.mass_sq);
    return {m, m};
}

RadialBundle make_dkp(const ModeSpec& spec, ModeClass cls) {
    RadialBundle b;
    b.formalism = Formalism::DKP;
    b.mode_class = cls;
    b.spec = spec;
    const Couplings c = couplings(spec);
    b.m_vector = c.mv;
    b.m_tensor = c.mt;
    return b;
}

void set_components(RadialBundle& b, std::array<RadialFunction, 10> f) {
    b.components.clear();
    for (int k = 0; k < 10; ++k) b.components.emplace_back("f" + std::to_string(k + 1), std::move(f[k]));
}

// Tensor components of the P = (-1)^j sector from the last three lines of the
// second-order-free system in F-variables (F1 = √Φ f1, F2 = f2, F3 = √Φ f3).
void complete_parity_even(RadialBundle& b, RadialFunction f1, RadialFunction f2, RadialFunction f3) {
    const double eps = b.spec.epsilon, mt = b.m_tensor, nu = nu_dkp(b.spec.j);
    auto F1 = [f1](double r) { return sqrt(phi_jet(r)) * f1(r); };
    auto F3 = [f3](double r) { return sqrt(phi_jet(r)) * f3(r); };
    RadialFunction f5 = [=](double r) {
        const Jet x = r_jet(r);
        const Jet F5 = (-I * eps * f2(r) + nu * F1(r) / x) / mt;
        return F5 / sqrt(phi_jet(r));
    };
    RadialFunction f6 = [=](double r) {
        const Jet P = phi_jet(r);
        return -(I * eps * F3(r) + P * F1(r).derivative()) / (mt * P);
    };
    RadialFunction f8 = [=](double r) {
        const Jet x = r_jet(r), P = phi_jet(r);
        const Jet F2 = f2(r);
        const Jet F8 = -(I * P * (F2.derivative() + F2 / x) + I * nu * F3(r) / x) / mt;
        return F8 / sqrt(P);
    };
    RadialFunction f7 = f5;
    RadialFunction f10 = [f8](double r) { return -f8(r); };
    set_components(b, {f1, f2, f3, f2, f5, f6, f7, f8, zero(), f10});
}

double sqrt_shift(const ModeSpec& s) { return std::sqrt(s.mass_sq + 0.25); }

RadialBundle jplus_from_spec(const ModeSpec& spec) {
    RadialBundle b = make_dkp(spec, ModeClass::DKP_J_PLUS);
    const int j = spec.j;
    const double eps = spec.epsilon;
    const RadialFunction Up = u_radial(eps, j + 1, spec.mass_sq);
    const RadialFunction Um = u_radial(eps - 1.0, j, spec.mass_sq);
    const double sj1 = std::sqrt(j + 1.0), sjh = std::sqrt(j / 2.0);
    RadialFunction f1 = [=](double r) {
        return sj1 * (r_jet(r) / sqrt(phi_jet(r)) * Up(r) - (2.0 * j + 3.0) / eps * Um(r));
    };
    RadialFunction f2 = [=](double r) { return I * sjh * Up(r); };
    RadialFunction f3 = [=](double r) { return I * sj1 * Up(r) / sqrt(phi_jet(r)); };
    complete_parity_even(b, f1, f2, f3);
    return b;
}

RadialBundle jminus_from_spec(const ModeSpec& spec) {
    RadialBundle b = make_dkp(spec, ModeClass::DKP_J_MINUS);
    const int j = spec.j;
    const double eps = spec.epsilon, s = sqrt_shift(spec);
    const double a = (1.5 + (j - 1) - eps + s) / 2.0, bb = (1.5 + (j - 1) - eps - s) / 2.0, c = j - 1 + 1.5;
    const RadialFunction Uq = u_radial(eps, j - 1, spec.mass_sq);
    const RadialFunction Um = u_radial(eps - 1.0, j, spec.mass_sq);
    const double sj = std::sqrt(double(j)), sjh = std::sqrt((j + 1.0) / 2.0);
    const double k = 2.0 / eps * a * bb / c;
    RadialFunction f1 = [=](double r) { return sj * (-r_jet(r) / sqrt(phi_jet(r)) * Uq(r) - k * Um(r)); };
    RadialFunction f2 = [=](double r) { return I * sjh * Uq(r); };
    RadialFunction f3 = [=](double r) { return -I * sj * Uq(r) / sqrt(phi_jet(r)); };
    complete_parity_even(b, f1, f2, f3);
    return b;
}

RadialBundle j_from_spec(const ModeSpec& spec) {
    RadialBundle b = make_dkp(spec, ModeClass::DKP_J);
    const double eps = spec.epsilon, mt = b.m_tensor, nu = nu_dkp(spec.j);
    const RadialFunction f2 = u_radial(eps, spec.j, spec.mass_sq);
    RadialFunction f4 = [f2](double r) { return -f2(r); };
    RadialFunction f5 = [=](double r) { return I * eps * f2(r) / (mt * sqrt(phi_jet(r))); };
    RadialFunction f7 = [f5](double r) { return -f5(r); };
    RadialFunction f8 = [=](double r) {
        const Jet F = f2(r);
        return -(I / mt) * sqrt(phi_jet(r)) * (F.derivative() + F / r_jet(r));
    };
    RadialFunction f9 = [=](double r) { return (I / mt) * (2.0 * nu) * f2(r) / r_jet(r); };
    set_components(b, {zero(), f2, zero(), f4, f5, zero(), f7, f8, f9, f8});
    return b;
}

}  // namespace

std::string_view to_string(Formalism f) {
    switch (f) {
        case Formalism::DKP: return "DKP";
        case Formalism::FIVE_DIM: return "FIVE_DIM";
        case Formalism::RS: return "RS";
    }
    return "?";
}

std::string_view to_string(ModeClass c) {
    switch (c) {
        case ModeClass::DKP_J: return "dkp-j";
        case ModeClass::DKP_J_PLUS: return "dkp-j+1";
        case ModeClass::DKP_J_MINUS: return "dkp-j-1";
        case ModeClass::DKP_J0: return "dkp-j0";
        case ModeClass::DKP_GAUGE_J0: return "gauge-j0";
        case ModeClass::FIVE_DIM_J: return "5d-j";
        case ModeClass::FIVE_DIM_J_PLUS: return "5d-j+1";
        case ModeClass::FIVE_DIM_J_MINUS: return "5d-j-1";
        case ModeClass::RS_PHOTON: return "rs-photon";
    }
    return "?";
}

bool RadialBundle::has(std::string_view label) const {
    for (const auto& [l, f] : components)
        if (l == label) return true;
    return false;
}

const RadialFunction& RadialBundle::component(std::string_view label) const {
    for (const auto& [l, f] : components)
        if (l == label) return f;
    throw std::out_of_range("bundle has no component '" + std::string(label) + "'");
}

std::vector<std::string> RadialBundle::labels() const {
    std::vector<std::string> out;
    for (const auto& [l, f] : components) out.push_back(l);
    return out;
}

RadialBundle RadialBundle::with_component(std::string_view label, RadialFunction fn) const {
    RadialBundle b = *this;
    for (auto& [l, f] : b.components)
        if (l == label) {
            f = std::move(fn);
            return b;
        }
    throw std::out_of_range("bundle has no component '" + std::string(label) + "'");
}

RadialBundle RadialBundle::scaled(cplx factor) const {
    RadialBundle b = *this;
    for (auto& [l, f] : b.components) f = [g = f, factor](double r) { return g(r) * factor; };
    return b;
}

RadialBundle RadialBundle::perturbed(std::string_view label, RadialFunction factor) const {
    const RadialFunction orig = component(label);
    return with_component(label, [orig, factor](double r) { return orig(r) * factor(r); });
}

double nu_dkp(int j) { return std::sqrt(j * (j + 1.0) / 2.0); }

Hyp2F1Params u_params(double epsilon, int j, double mass_sq) {
    const double s = std::sqrt(mass_sq + 0.25);
    return {(1.5 + j - epsilon + s) / 2.0, (1.5 + j - epsilon - s) / 2.0, j + 1.5};
}

RadialFunction u_radial(double epsilon, int j, double mass_sq) {
    if (j < 0) throw std::invalid_argument("u_radial: j must be non-negative");
    const Hyp2F1Params p = u_params(epsilon, j, mass_sq);
    return [p, epsilon, j](double r) {
        const Jet x = r_jet(r);
        const Jet z = -(x * x);
        return pow(x, double(j)) * pow(1.0 - z, -epsilon / 2.0) * hyp2f1_jet(p, z);
    };
}

RadialBundle build_j_wave(double mass_sq, int n, int j) {
    if (mass_sq <= 0.0) throw std::invalid_argument("build_j_wave: massive construction needs mass_sq > 0");
    return j_from_spec(ModeSpec::massive(mass_sq, n, j, WaveType::J));
}

RadialBundle build_jplus_wave(double mass_sq, int n, int j) {
    if (mass_sq <= 0.0) throw std::invalid_argument("build_jplus_wave: needs mass_sq > 0");
    return jplus_from_spec(ModeSpec::massive(mass_sq, n, j, WaveType::J_PLUS));
}

RadialBundle build_jminus_wave(double mass_sq, int n, int j) {
    if (mass_sq <= 0.0) throw std::invalid_argument("build_jminus_wave: needs mass_sq > 0");
    return jminus_from_spec(ModeSpec::massive(mass_sq, n, j, WaveType::J_MINUS));
}

RadialBundle build_dkp_wave(const ModeSpec& spec) {
    switch (spec.type) {
        case WaveType::J: return j_from_spec(spec);
        case WaveType::J_PLUS: return jplus_from_spec(spec);
        case WaveType::J_MINUS: return jminus_from_spec(spec);
    }
    throw std::invalid_argument("unknown wave type");
}

RadialBundle build_massless_wave(WaveType type, int n, int j) {
    return build_dkp_wave(ModeSpec::massless_dkp(n, j, type));
}

RadialBundle build_j0_mode(double mass_sq, int n) {
    if (mass_sq <= 0.0) throw std::invalid_argument("build_j0_mode: massless j=0 is the gauge sector");
    ModeSpec spec = ModeSpec::massive(mass_sq, n, 0, WaveType::J_PLUS);
    RadialBundle b = make_dkp(spec, ModeClass::DKP_J0);
    const double eps = spec.epsilon, m = b.m_vector;
    const RadialFunction f6 = u_radial(eps, 1, mass_sq);
    RadialFunction f3 = [=](double r) { return I * eps * f6(r) / (m * sqrt(phi_jet(r))); };
    RadialFunction f1 = [=](double r) {
        const Jet P = phi_jet(r), F = f6(r);
        return -(P * (F.derivative() + 2.0 * F / r_jet(r))) / (m * sqrt(P));
    };
    set_components(b, {f1, zero(), f3, zero(), zero(), f6, zero(), zero(), zero(), zero()});
    return b;
}

double gauge_j0_epsilon(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return 2.0 * n + 3.0;
}

RadialBundle build_massless_gauge_j0(double epsilon) {
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    ModeSpec spec;
    spec.n = std::max(0, static_cast<int>(std::lround((epsilon - 3.0) / 2.0)));
    spec.j = 0;
    spec.type = WaveType::J_PLUS;
    spec.mass_sq = 0.0;
    spec.massless = true;
    spec.epsilon = epsilon;
    RadialBundle b = make_dkp(spec, ModeClass::DKP_GAUGE_J0);
    // The scalar equation is the j=0 radial equation with m² - 2 = 0.
    const RadialFunction F1 = u_radial(epsilon, 0, 2.0);
    RadialFunction f1 = [=](double r) { return F1(r) / sqrt(phi_jet(r)); };
    RadialFunction f3 = [=](double r) {
        const Jet P = phi_jet(r);
        return I * P * F1(r).derivative() / (epsilon * sqrt(P));
    };
    set_components(b, {f1, zero(), f3, zero(), zero(), zero(), zero(), zero(), zero(), zero()});
    return b;
}

BranchCoefficients five_dim_coefficients(double mass_sq, int n, int j, WaveType type) {
    const double eps = energy_massive(mass_sq, n, j, type);
    const double s = std::sqrt(mass_sq + 0.25);
    BranchCoefficients k{};
    if (type == WaveType::J_PLUS) {
        const Hyp2F1Params p = u_params(eps, j + 1, mass_sq);
        k = {p.alpha, p.beta, p.gamma, (j + 1.5) / eps, (j + 1.5) / eps};
    } else if (type == WaveType::J_MINUS) {
        const double a = (1.5 + (j - 1) - eps + s) / 2.0, b = (1.5 + (j - 1) - eps - s) / 2.0, c = j - 1 + 1.5;
        k = {a, b, c, (a - c) * (b - c) / (eps * c), a * b / (eps * c)};
    } else {
        const Hyp2F1Params p = u_params(eps, j, mass_sq);
        k = {p.alpha, p.beta, p.gamma, 0.0, 0.0};
    }
    return k;
}

RadialBundle build_5d_mode(double mass_sq, int n, int j, WaveType type) {
    if (mass_sq <= 0.0) throw std::invalid_argument("build_5d_mode: needs mass_sq > 0");
    const ModeSpec spec = ModeSpec::massive(mass_sq, n, j, type);
    RadialBundle b;
    b.formalism = Formalism::FIVE_DIM;
    b.spec = spec;
    b.m_vector = b.m_tensor = std::sqrt(mass_sq);
    const double eps = spec.epsilon;
    const BranchCoefficients k = five_dim_coefficients(mass_sq, n, j, type);
    RadialFunction f = zero(), g = zero(), h = zero(), F = zero(), G = zero();
    switch (type) {
        case WaveType::J:
            b.mode_class = ModeClass::FIVE_DIM_J;
            h = u_radial(eps, j, mass_sq);
            break;
        case WaveType::J_PLUS:
        case WaveType::J_MINUS: {
            b.mode_class = type == WaveType::J_PLUS ? ModeClass::FIVE_DIM_J_PLUS : ModeClass::FIVE_DIM_J_MINUS;
            (type == WaveType::J_PLUS ? f : g) = u_radial(eps, orbital_index(type, j), mass_sq);
            const RadialFunction up = u_radial(eps + 1.0, j, mass_sq), dn = u_radial(eps - 1.0, j, mass_sq);
            G = [up, c = k.G0](double r) { return c * up(r); };
            F = [dn, c = k.F0_imag](double r) { return (I * c) * dn(r); };
            break;
        }
    }
    b.components = {{"f", f}, {"g", g}, {"h", h}, {"F", F}, {"G", G}};
    return b;
}

WaveFunction10 evaluate_wavefunction(const RadialBundle& bundle, double t, double r, double theta, double phi,
                                     int m) {
    if (bundle.formalism != Formalism::DKP) throw std::invalid_argument("evaluate_wavefunction: DKP bundle required");
    if (r <= 0.0) throw std::domain_error("evaluate_wavefunction: r must be positive");
    if (std::sin(theta) == 0.0 || theta <= 0.0 || theta >= std::numbers::pi)
        throw std::domain_error("evaluate_wavefunction: angular singularity at theta = 0 or pi");
    const int j = bundle.spec.j;
    if (std::abs(m) > j) throw std::invalid_argument("evaluate_wavefunction: |m| > j");
    const cplx phase = std::polar(1.0, -bundle.spec.epsilon * t);
    WaveFunction10 out{};
    for (int k = 0; k < 10; ++k) {
        const cplx fk = bundle.eval("f" + std::to_string(k + 1), r).value();
        out[k] = phase * fk * d_sigma(j, m, kDkpSigma[k], phi, theta);
    }
    return out;
}

std::vector<double> log_grid(double r_min, double r_max, int points) {
    if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) throw std::invalid_argument("log_grid: need 0 < r_min < r_max, points >= 2");
    std::vector<double> g(points);
    const double a = std::log(r_min), b = std::log(r_max);
    for (int i = 0; i < points; ++i) g[i] = std::exp(a + (b - a) * i / (points - 1));
    g.front() = r_min;
    g.back() = r_max;
    return g;
}

}  // namespace ads
