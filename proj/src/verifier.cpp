#include "ads_spin1/verifier.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ads {

namespace {

const cplx I{0.0, 1.0};

struct Line {
    std::string label;
    TermSum t;
};
using Lines = std::vector<Line>;

// Shorthand for the radial geometry at one point.
struct Pt {
    double r, P, sP, dP;
    explicit Pt(double rr) : r(rr), P(1.0 + rr * rr), sP(std::sqrt(1.0 + rr * rr)), dP(2.0 * rr) {}
};

Jet phi_jet(double r) {
    const Jet x = Jet::variable(r);
    return 1.0 + x * x;
}

double mass_sq(const RadialBundle& b) { return b.m_vector * b.m_tensor; }

Jet comp(const RadialBundle& b, const char* label, double r) { return b.eval(label, r); }

void require_formalism(const RadialBundle& b, Formalism f, EquationId id) {
    if (b.formalism != f)
        throw std::invalid_argument(std::string(to_string(id)) + " needs a " + std::string(to_string(f)) +
                                    " bundle");
}

// f'' + 2(1+2r²)/(r(1+r²)) f' + [Λ²/Φ² − (m²−2)/Φ − L/(r²Φ)] f
TermSum radial_ode(const Jet& f, double lambda, double L, double m2, const Pt& p) {
    TermSum t;
    t += f.d(2);
    t += 2.0 * (1.0 + 2.0 * p.r * p.r) / (p.r * p.P) * f.d(1);
    t += lambda * lambda / (p.P * p.P) * f.value();
    t -= (m2 - 2.0) / p.P * f.value();
    t -= L / (p.r * p.r * p.P) * f.value();
    return t;
}

// ---- DKP ----

Lines sys_1_5a(const RadialBundle& b, double r) {
    const Pt p(r);
    const double eps = b.spec.epsilon, nu = nu_dkp(b.spec.j), mv = b.m_vector, mt = b.m_tensor;
    const Jet f2 = comp(b, "f2", r), f5 = comp(b, "f5", r), f8 = comp(b, "f8", r), f9 = comp(b, "f9", r);
    Lines L(4);
    L[0].label = "line 1";
    L[0].t += -I * eps * f5.value();
    L[0].t += I * p.P * f8.d(1);
    L[0].t += I * p.P / r * f8.value();
    L[0].t += I * p.dP / 2.0 * f8.value();
    L[0].t += I * nu * p.sP / r * f9.value();
    L[0].t -= mv * p.sP * f2.value();
    L[1].label = "line 2";
    L[1].t += I * eps * f2.value();
    L[1].t -= mt * p.sP * f5.value();
    L[2].label = "line 3";
    L[2].t += -I * p.P * f2.d(1);
    L[2].t += -I * p.P / r * f2.value();
    L[2].t -= mt * p.sP * f8.value();
    L[3].label = "line 4";
    L[3].t += 2.0 * I * nu * p.sP / r * f2.value();
    L[3].t -= mt * p.sP * f9.value();
    return L;
}

struct FVars {
    Jet F1, F2, F3, F5, F6, F8;
};

FVars f_vars(const RadialBundle& b, double r) {
    const Jet s = sqrt(phi_jet(r));
    return {s * comp(b, "f1", r), comp(b, "f2", r), s * comp(b, "f3", r),
            s * comp(b, "f5", r), comp(b, "f6", r), s * comp(b, "f8", r)};
}

Lines sys_1_5b(const RadialBundle& b, double r) {
    const Pt p(r);
    const double eps = b.spec.epsilon, nu = nu_dkp(b.spec.j), mv = b.m_vector, mt = b.m_tensor;
    const FVars F = f_vars(b, r);
    Lines L(6);
    for (int k = 0; k < 6; ++k) L[k].label = "line " + std::to_string(k + 1);
    L[0].t += p.P * F.F6.d(1);
    L[0].t += 2.0 * p.P / r * F.F6.value();
    L[0].t += 2.0 * nu / r * F.F5.value();
    L[0].t += mv * F.F1.value();

    L[1].t += I * eps * F.F5.value();
    L[1].t += I * p.P * F.F8.d(1);
    L[1].t += I * p.P / r * F.F8.value();
    L[1].t -= mv * p.P * F.F2.value();

    L[2].t += I * eps * F.F6.value();
    L[2].t -= I * 2.0 * nu / r * F.F8.value();
    L[2].t -= mv * F.F3.value();

    L[3].t += -I * eps * F.F2.value();
    L[3].t += nu / r * F.F1.value();
    L[3].t -= mt * F.F5.value();

    L[4].t += I * eps * F.F3.value();
    L[4].t += p.P * F.F1.d(1);
    L[4].t += mt * p.P * F.F6.value();

    L[5].t += I * p.P * F.F2.d(1);
    L[5].t += I * p.P / r * F.F2.value();
    L[5].t += I * nu / r * F.F3.value();
    L[5].t += mt * F.F8.value();
    return L;
}

Lines sys_1_6c(const RadialBundle& b, double r) {
    const Pt p(r);
    const double eps = b.spec.epsilon, mv = b.m_vector, mt = b.m_tensor;
    const Jet f1 = comp(b, "f1", r), f3 = comp(b, "f3", r), f6 = comp(b, "f6", r), f9 = comp(b, "f9", r);
    Lines L(4);
    L[0].label = "line 1";
    L[0].t += -p.P * f6.d(1);
    L[0].t += -2.0 * p.P / r * f6.value();
    L[0].t -= mv * p.sP * f1.value();
    L[1].label = "line 2";
    L[1].t += I * eps * f6.value();
    L[1].t -= mv * p.sP * f3.value();
    L[2].label = "line 3";
    L[2].t += -I * eps * f3.value();
    L[2].t -= p.P * f1.d(1);
    L[2].t -= p.dP / 2.0 * f1.value();
    L[2].t -= mt * p.sP * f6.value();
    L[3].label = "f9 = 0";
    L[3].t += f9.value();
    return L;
}

Lines ode_1_8(const RadialBundle& b, double r) {
    return {{"f6", radial_ode(comp(b, "f6", r), b.spec.epsilon, 2.0, mass_sq(b), Pt(r))}};
}

Lines ode_2_1b(const RadialBundle& b, double r) {
    const int j = b.spec.j;
    return {{"f2", radial_ode(comp(b, "f2", r), b.spec.epsilon, j * (j + 1.0), mass_sq(b), Pt(r))}};
}

Lines lorentz_2_5a(const RadialBundle& b, double r) {
    const Pt p(r);
    const double eps = b.spec.epsilon, nu = nu_dkp(b.spec.j);
    const Jet f1 = comp(b, "f1", r), f3 = comp(b, "f3", r);
    const cplx f2 = comp(b, "f2", r).value(), f4 = comp(b, "f4", r).value();
    TermSum t;
    t += -I * eps / p.sP * f1.value();
    t -= p.sP * f3.d(1);
    t -= 2.0 * p.sP / r * f3.value();
    t -= p.dP / (2.0 * p.sP) * f3.value();
    t -= nu / r * f2;
    t -= nu / r * f4;
    return {{"2.5a", t}};
}

Lines parity_1_4(const RadialBundle& b, double r) {
    auto v = [&](const char* l) { return comp(b, l, r).value(); };
    Lines L;
    auto zero_line = [&](const char* l) {
        TermSum t;
        t += v(l);
        L.push_back({std::string(l) + " = 0", t});
    };
    auto pair_line = [&](const char* a, const char* c, double sign, const std::string& label) {
        TermSum t;
        t += v(a);
        t -= sign * v(c);
        L.push_back({label, t});
    };
    if (b.spec.type == WaveType::J && b.mode_class == ModeClass::DKP_J) {
        zero_line("f1");
        zero_line("f3");
        zero_line("f6");
        pair_line("f4", "f2", -1.0, "f4 = -f2");
        pair_line("f7", "f5", -1.0, "f7 = -f5");
        pair_line("f10", "f8", +1.0, "f10 = +f8");
    } else {
        zero_line("f9");
        pair_line("f4", "f2", +1.0, "f4 = +f2");
        pair_line("f7", "f5", +1.0, "f7 = +f5");
        pair_line("f10", "f8", -1.0, "f10 = -f8");
        if (b.spec.j == 0)
            for (const char* l : {"f2", "f4", "f5", "f7", "f8", "f10"}) zero_line(l);
    }
    return L;
}

// G-variables of the two parity-(-1)^j substitutions.
struct GVars {
    Jet G1, G2, G3;
    bool type_one;
};

GVars g_vars(const RadialBundle& b, double r) {
    const int j = b.spec.j;
    const FVars F = f_vars(b, r);
    const bool one = b.spec.type == WaveType::J_PLUS;
    GVars g;
    g.type_one = one;
    if (one) {
        const double k = std::sqrt(j + 1.0);
        g.G1 = F.F1 / k;
        g.G3 = F.F3 / (I * k);
        g.G2 = j > 0 ? F.F2 / (I * std::sqrt(j / 2.0)) : g.G3;
    } else {
        if (j < 1) throw std::invalid_argument("(j-1) substitution needs j >= 1");
        g.G1 = F.F1 / std::sqrt(double(j));
        g.G2 = F.F2 / (I * std::sqrt((j + 1.0) / 2.0));
        g.G3 = F.F3 / (I * std::sqrt(double(j)));
    }
    return g;
}

TermSum lorentz_2_5c(const GVars& g, const RadialBundle& b, double r, bool form_one) {
    const Pt p(r);
    const int j = b.spec.j;
    const double A = form_one ? j : j + 1.0;
    TermSum t;
    t += b.spec.epsilon * g.G1.value() / p.P;
    t += A / r * g.G2.value();
    t += g.G3.d(1);
    t += 2.0 / r * g.G3.value();
    return t;
}

// G'' + (2/r + Φ'/Φ) G' + extra·G
void op_terms(TermSum& t, const Jet& G, double extra, const Pt& p) {
    t += G.d(2);
    t += (2.0 / p.r + p.dP / p.P) * G.d(1);
    t += extra * G.value();
}

Lines ode_2_6(const RadialBundle& b, double r, bool form_one) {
    const Pt p(r);
    const GVars g = g_vars(b, r);
    const int j = b.spec.j;
    const double eps = b.spec.epsilon, m2 = mass_sq(b), r2 = r * r;
    const double base = eps * eps / (p.P * p.P) - m2 / p.P - j * (j + 1.0) / (p.P * r2);
    const double c1 = form_one ? 2.0 * (j + 1.0) : 2.0 * j, c2 = form_one ? 2.0 * j : 2.0 * (j + 1.0);
    TermSum s1, s2;
    op_terms(s1, g.G2, p.dP / (r * p.P) + base, p);
    s1 -= c1 / (r2 * p.P) * g.G3.value();
    op_terms(s2, g.G3, 2.0 * p.dP / (r * p.P) - 2.0 / r2 + base, p);
    s2 -= c2 / (r2 * p.P) * g.G2.value();
    return {{"G2", s1}, {"G3", s2}};
}

Lines ode_2_7(const RadialBundle& b, double r, bool form_one) {
    const Pt p(r);
    const GVars g = g_vars(b, r);
    const int j = b.spec.j;
    const double eps = b.spec.epsilon, m2 = mass_sq(b), r2 = r * r;
    const double base = eps * eps / (p.P * p.P) - m2 / p.P - j * (j + 1.0) / (p.P * r2);
    // With G3 = ±G2 the coupling folds into the G2 coefficient.
    const double fold = form_one ? -2.0 * (j + 1.0) : 2.0 * j;
    Lines L;
    for (const auto& [label, G, sgn] : {std::tuple{"G2", g.G2, 1.0}, std::tuple{"G3", g.G3, form_one ? 1.0 : -1.0}}) {
        TermSum t;
        op_terms(t, G * sgn, p.dP / (r * p.P) + base, p);
        t += fold / (r2 * p.P) * (G * sgn).value();
        L.push_back({label, t});
    }
    return L;
}

Lines sys_2_4(const RadialBundle& b, double r, bool form_one) {
    const Pt p(r);
    const GVars g = g_vars(b, r);
    const int j = b.spec.j;
    const double eps = b.spec.epsilon, m2 = mass_sq(b), r2 = r * r, jj = j * (j + 1.0);
    const double A = form_one ? j : j + 1.0, B = form_one ? j + 1.0 : j, C = form_one ? j : j + 1.0;
    const Jet P = phi_jet(r), x = Jet::variable(r);
    const Jet G3overP = g.G3 / P;
    const Jet inner = P * (g.G2.derivative() + g.G2 / x);
    Lines L(3);
    L[0].label = "line 1";
    L[0].t += (jj / r2 + m2) * g.G1.value();
    L[0].t -= p.P * g.G1.d(2);
    L[0].t -= 2.0 * p.P / r * g.G1.d(1);
    L[0].t += eps * A / r * g.G2.value();
    L[0].t += eps * p.P * G3overP.d(1);
    L[0].t += 2.0 * eps * p.P / r * G3overP.value();
    L[1].label = "line 2";
    L[1].t += eps * eps * g.G2.value();
    L[1].t -= m2 * p.P * g.G2.value();
    L[1].t += p.P * inner.d(1);
    L[1].t += p.P / r * inner.value();
    L[1].t += eps * B / r * g.G1.value();
    L[1].t += p.P * B / r * g.G3.d(1);
    L[2].label = "line 3";
    L[2].t += eps * eps / p.P * g.G3.value();
    L[2].t -= jj / r2 * g.G3.value();
    L[2].t -= m2 * g.G3.value();
    L[2].t -= eps * g.G1.d(1);
    L[2].t -= C / r * p.P * g.G2.d(1);
    L[2].t -= C / r * p.P / r * g.G2.value();
    return L;
}

Lines sys_3_6(const RadialBundle& b, double r) {
    const Pt p(r);
    const double eps = b.spec.epsilon;
    const Jet s = sqrt(phi_jet(r));
    const Jet F1 = s * comp(b, "f1", r), F3 = s * comp(b, "f3", r);
    Lines L(3);
    L[0].label = "line 1";
    L[0].t += -I * eps / p.P * F3.value();
    L[0].t -= F1.d(1);
    L[1].label = "line 2";
    L[1].t += -I * eps / p.P * F1.value();
    L[1].t -= F3.d(1);
    L[1].t -= 2.0 / r * F3.value();
    L[2].label = "scalar F1";
    L[2].t += F1.d(2);
    L[2].t += 2.0 * (1.0 + 2.0 * r * r) / (r * p.P) * F1.d(1);
    L[2].t += eps * eps / (p.P * p.P) * F1.value();
    return L;
}

// ---- 5D ----

Lines ode_2_7prime(const RadialBundle& b, double r) {
    const Pt p(r);
    const int j = b.spec.j;
    const double eps = b.spec.epsilon, m2 = mass_sq(b);
    Lines L;
    auto add = [&](const char* label, double lambda, int nu) {
        L.push_back({label, radial_ode(comp(b, label, r), lambda, nu * (nu + 1.0), m2, p)});
    };
    add("f", eps, j + 1);
    if (j >= 1) add("g", eps, j - 1);
    add("h", eps, j);
    add("F", eps - 1.0, j);
    add("G", eps + 1.0, j);
    return L;
}

Lines rel_2_10prime(const RadialBundle& b, double r) {
    const Pt p(r);
    const int j = b.spec.j;
    const double eps = b.spec.epsilon;
    const Jet f = comp(b, "f", r), g = comp(b, "g", r);
    const cplx F = comp(b, "F", r).value(), G = comp(b, "G", r).value();
    Lines L(2);
    L[0].label = "G - iF";
    L[0].t += G;
    L[0].t -= I * F;
    L[0].t -= p.sP / eps * f.d(1);
    L[0].t -= p.sP / eps * (j + 2.0) / r * f.value();
    L[0].t += p.sP / eps * g.d(1);
    L[0].t -= p.sP / eps * (j - 1.0) / r * g.value();
    L[1].label = "G + iF";
    L[1].t += G;
    L[1].t += I * F;
    L[1].t += r / p.sP * f.value();
    L[1].t -= r / p.sP * g.value();
    return L;
}

// ---- RS ----

double rs_nu(int j) { return std::sqrt(j * (j + 1.0)); }

Lines ode_3_14(const RadialBundle& b, double r) {
    const Pt p(r);
    const double w = b.spec.epsilon, nu = rs_nu(b.spec.j);
    const Jet G = comp(b, "G", r);
    TermSum t;
    t += p.P * G.d(2);
    t += 2.0 * r * G.d(1);
    t += w * w / p.P * G.value();
    t -= nu * nu / (r * r) * G.value();
    return {{"G", t}};
}

Lines sys_5_5prime(const RadialBundle& b, double r) {
    const Pt p(r);
    const double w = b.spec.epsilon, k = rs_nu(b.spec.j) / std::sqrt(2.0);
    const Jet f1 = comp(b, "f1", r), f2 = comp(b, "f2", r), f3 = comp(b, "f3", r);
    Lines L(4);
    for (int i = 0; i < 4; ++i) L[i].label = "(" + std::to_string(i + 1) + ")";
    L[0].t += p.sP * f2.d(1);
    L[0].t += 2.0 * p.sP / r * f2.value();
    L[0].t += k / r * f1.value();
    L[0].t += k / r * f3.value();

    L[1].t += -w / p.sP * f1.value();
    L[1].t -= I * p.sP * f1.d(1);
    L[1].t -= I * p.sP / r * f1.value();
    L[1].t -= I * r / p.sP * f1.value();
    L[1].t -= I * k / r * f2.value();

    L[2].t += -w / p.sP * f2.value();
    L[2].t += I * k / r * f1.value();
    L[2].t -= I * k / r * f3.value();

    L[3].t += -w / p.sP * f3.value();
    L[3].t += I * p.sP * f3.d(1);
    L[3].t += I * p.sP / r * f3.value();
    L[3].t += I * r / p.sP * f3.value();
    L[3].t += I * k / r * f2.value();
    return L;
}

Lines sys_3_10prime(const RadialBundle& b, double r) {
    const Pt p(r);
    const double w = b.spec.epsilon, k = rs_nu(b.spec.j) / std::sqrt(2.0);
    const Jet f1 = comp(b, "f1", r), f2 = comp(b, "f2", r), f3 = comp(b, "f3", r);
    const Jet sum = f1 + f3, diff = f1 - f3;
    Lines L(3);
    L[0].label = "line 1";
    L[0].t += -w / p.sP * f2.value();
    L[0].t += I * k / r * diff.value();
    L[1].label = "line 2";
    L[1].t += -w / p.sP * sum.value();
    L[1].t -= I * p.sP * diff.d(1);
    L[1].t -= I * p.sP / r * diff.value();
    L[1].t -= I * r / p.sP * diff.value();
    L[2].label = "line 3";
    L[2].t += -w / p.sP * diff.value();
    L[2].t -= I * p.sP * sum.d(1);
    L[2].t -= I * p.sP / r * sum.value();
    L[2].t -= I * r / p.sP * sum.value();
    L[2].t -= 2.0 * I * k / r * f2.value();
    return L;
}

Lines sys_3_12prime(const RadialBundle& b, double r) {
    const Pt p(r);
    const double w = b.spec.epsilon, nu = rs_nu(b.spec.j), s2 = std::sqrt(2.0);
    const Jet f1 = comp(b, "f1", r), f2 = comp(b, "f2", r), f3 = comp(b, "f3", r);
    const Jet f = (f1 + f3) / s2, g = (f1 - f3) / s2;
    Lines L(3);
    L[0].label = "f2";
    L[0].t += f2.value();
    L[0].t -= I * nu / w * p.sP / r * g.value();
    L[1].label = "line 2";
    L[1].t += -w / p.P * f.value();
    L[1].t -= I * g.d(1);
    L[1].t -= I / r * g.value();
    L[1].t -= I * r / p.P * g.value();
    L[2].label = "line 3";
    L[2].t += -w * w / p.P * g.value();
    L[2].t -= I * w * f.d(1);
    L[2].t -= I * w / r * f.value();
    L[2].t -= I * w * r / p.P * f.value();
    L[2].t += nu * nu / (r * r) * g.value();
    return L;
}

Lines rel_3_13prime(const RadialBundle& b, double r) {
    const Pt p(r);
    const double w = b.spec.epsilon, nu = rs_nu(b.spec.j), s2 = std::sqrt(2.0);
    const Jet f1 = comp(b, "f1", r), f2 = comp(b, "f2", r), f3 = comp(b, "f3", r);
    const Jet G = comp(b, "G", r), F = comp(b, "F", r);
    const cplx f = (f1.value() + f3.value()) / s2, g = (f1.value() - f3.value()) / s2;
    Lines L(5);
    L[0].label = "g = G/(r sqrt(Phi))";
    L[0].t += g;
    L[0].t -= G.value() / (r * p.sP);
    L[1].label = "f = F/(r sqrt(Phi))";
    L[1].t += f;
    L[1].t -= F.value() / (r * p.sP);
    L[2].label = "i w F = Phi G'";
    L[2].t += I * w * F.value();
    L[2].t -= p.P * G.d(1);
    L[3].label = "i w F' + ...";
    L[3].t += I * w * F.d(1);
    L[3].t += w * w / p.P * G.value();
    L[3].t -= nu * nu / (r * r) * G.value();
    L[4].label = "f2 = i nu G/(w r^2)";
    L[4].t += f2.value();
    L[4].t -= I * nu / (w * r * r) * G.value();
    return L;
}

Lines evaluate(const RadialBundle& b, EquationId id, double r) {
    switch (id) {
        case EquationId::SYS_1_5a: require_formalism(b, Formalism::DKP, id); return sys_1_5a(b, r);
        case EquationId::SYS_1_5b: require_formalism(b, Formalism::DKP, id); return sys_1_5b(b, r);
        case EquationId::SYS_1_6c: require_formalism(b, Formalism::DKP, id); return sys_1_6c(b, r);
        case EquationId::ODE_1_8: require_formalism(b, Formalism::DKP, id); return ode_1_8(b, r);
        case EquationId::ODE_2_1b: require_formalism(b, Formalism::DKP, id); return ode_2_1b(b, r);
        case EquationId::ODE_2_6a: require_formalism(b, Formalism::DKP, id); return ode_2_6(b, r, true);
        case EquationId::ODE_2_6b: require_formalism(b, Formalism::DKP, id); return ode_2_6(b, r, false);
        case EquationId::ODE_2_7a: require_formalism(b, Formalism::DKP, id); return ode_2_7(b, r, true);
        case EquationId::ODE_2_7b: require_formalism(b, Formalism::DKP, id); return ode_2_7(b, r, false);
        case EquationId::SYS_2_4a: require_formalism(b, Formalism::DKP, id); return sys_2_4(b, r, true);
        case EquationId::SYS_2_4b: require_formalism(b, Formalism::DKP, id); return sys_2_4(b, r, false);
        case EquationId::SYS_3_6: require_formalism(b, Formalism::DKP, id); return sys_3_6(b, r);
        case EquationId::LORENTZ_2_5a: require_formalism(b, Formalism::DKP, id); return lorentz_2_5a(b, r);
        case EquationId::LORENTZ_2_5c_I:
            require_formalism(b, Formalism::DKP, id);
            return {{"form I", lorentz_2_5c(g_vars(b, r), b, r, true)}};
        case EquationId::LORENTZ_2_5c_II:
            require_formalism(b, Formalism::DKP, id);
            return {{"form II", lorentz_2_5c(g_vars(b, r), b, r, false)}};
        case EquationId::PARITY_1_4: require_formalism(b, Formalism::DKP, id); return parity_1_4(b, r);
        case EquationId::ODE_2_7prime: require_formalism(b, Formalism::FIVE_DIM, id); return ode_2_7prime(b, r);
        case EquationId::REL_2_10prime: require_formalism(b, Formalism::FIVE_DIM, id); return rel_2_10prime(b, r);
        case EquationId::ODE_3_14: require_formalism(b, Formalism::RS, id); return ode_3_14(b, r);
        case EquationId::SYS_5_5prime: require_formalism(b, Formalism::RS, id); return sys_5_5prime(b, r);
        case EquationId::SYS_3_10prime: require_formalism(b, Formalism::RS, id); return sys_3_10prime(b, r);
        case EquationId::SYS_3_12prime: require_formalism(b, Formalism::RS, id); return sys_3_12prime(b, r);
        case EquationId::REL_3_13prime: require_formalism(b, Formalism::RS, id); return rel_3_13prime(b, r);
        default: break;
    }
    throw std::invalid_argument(std::string(to_string(id)) + " is not a radial equation");
}

}  // namespace

ResidualReport residual_system(const RadialBundle& bundle, EquationId id, std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("residual_system: empty grid");
    std::vector<EntryBuilder> builders;
    std::map<std::string, std::size_t> index;
    for (double r : grid) {
        if (!(r > 0.0)) throw std::invalid_argument("residual_system: grid points must be positive");
        for (auto& line : evaluate(bundle, id, r)) {
            auto [it, fresh] = index.try_emplace(line.label, builders.size());
            if (fresh) builders.emplace_back(id, std::string(to_string(id)) + " " + line.label);
            builders[it->second].add(line.t, r);
        }
    }
    ResidualReport rep;
    rep.grid.assign(grid.begin(), grid.end());
    for (const auto& b : builders) rep.entries.push_back(b.finish());
    return rep;
}

ResidualReport residual_system(const RadialBundle& bundle, EquationId id, const Grid& grid) {
    const auto nodes = grid.nodes();
    return residual_system(bundle, id, std::span<const double>(nodes));
}

ResidualReport lorentz_residual(const RadialBundle& bundle, LorentzVariant variant, const Grid& grid) {
    switch (variant) {
        case LorentzVariant::FORM_2_5a: return residual_system(bundle, EquationId::LORENTZ_2_5a, grid);
        case LorentzVariant::FORM_I: return residual_system(bundle, EquationId::LORENTZ_2_5c_I, grid);
        case LorentzVariant::FORM_II: return residual_system(bundle, EquationId::LORENTZ_2_5c_II, grid);
    }
    throw std::invalid_argument("unknown Lorentz variant");
}

std::vector<EquationId> applicable_equations(const RadialBundle& b) {
    using E = EquationId;
    const int j = b.spec.j;
    switch (b.mode_class) {
        case ModeClass::DKP_J: return {E::SYS_1_5a, E::ODE_2_1b, E::LORENTZ_2_5a, E::PARITY_1_4};
        case ModeClass::DKP_J_PLUS:
            if (j == 0)
                return {E::SYS_1_5b, E::SYS_1_6c, E::ODE_1_8, E::LORENTZ_2_5a, E::LORENTZ_2_5c_I,
                        E::ODE_2_6a, E::ODE_2_7a, E::PARITY_1_4};
            return {E::SYS_1_5b, E::SYS_2_4a, E::LORENTZ_2_5a, E::LORENTZ_2_5c_I,
                    E::ODE_2_6a, E::ODE_2_7a, E::PARITY_1_4};
        case ModeClass::DKP_J_MINUS:
            return {E::SYS_1_5b, E::SYS_2_4b, E::LORENTZ_2_5a, E::LORENTZ_2_5c_II,
                    E::ODE_2_6b, E::ODE_2_7b, E::PARITY_1_4};
        case ModeClass::DKP_J0:
            return {E::SYS_1_6c, E::ODE_1_8, E::SYS_1_5b, E::LORENTZ_2_5a, E::LORENTZ_2_5c_I,
                    E::ODE_2_6a, E::ODE_2_7a, E::PARITY_1_4};
        case ModeClass::DKP_GAUGE_J0: return {E::SYS_3_6, E::SYS_1_6c, E::LORENTZ_2_5a, E::PARITY_1_4};
        case ModeClass::FIVE_DIM_J:
        case ModeClass::FIVE_DIM_J_PLUS:
        case ModeClass::FIVE_DIM_J_MINUS: return {E::ODE_2_7prime, E::REL_2_10prime};
        case ModeClass::RS_PHOTON:
            return {E::ODE_3_14, E::SYS_5_5prime, E::SYS_3_10prime, E::SYS_3_12prime, E::REL_3_13prime};
    }
    return {};
}

ResidualReport verify_all(const RadialBundle& bundle, std::span<const double> grid) {
    ResidualReport rep;
    for (EquationId id : applicable_equations(bundle)) rep.merge(residual_system(bundle, id, grid));
    if (bundle.formalism == Formalism::FIVE_DIM) {
        const ModeSpec& s = bundle.spec;
        rep.merge(cross_formalism_compare(build_dkp_wave(ModeSpec::massive(s.mass_sq, s.n, s.j, s.type)), bundle,
                                          grid));
    }
    rep.grid.assign(grid.begin(), grid.end());
    return rep;
}

ResidualReport verify_all(const RadialBundle& bundle, const Grid& grid) {
    const auto nodes = grid.nodes();
    return verify_all(bundle, std::span<const double>(nodes));
}

double decay_exponent(const RadialFunction& f, const FitWindow& w) {
    if (w.points < 2 || !(w.r_min > 0.0) || !(w.r_max > w.r_min)) throw std::invalid_argument("decay_exponent: bad window");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double r : log_grid(w.r_min, w.r_max, w.points)) {
        const double a = std::abs(f(r).value());
        if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("decay_exponent: component vanishes on the window");
        const double x = std::log(r), y = std::log(a);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double n = w.points;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double decay_exponent(const RadialBundle& bundle, std::string_view component, const FitWindow& window) {
    return decay_exponent(bundle.component(component), window);
}

namespace {

// Reduced profile that both formalisms share, with the component weights removed.
RadialFunction shared_profile_dkp(const RadialBundle& dkp) {
    const int j = dkp.spec.j;
    switch (dkp.spec.type) {
        case WaveType::J: return dkp.component("f2");
        case WaveType::J_PLUS: {
            const RadialFunction f3 = dkp.component("f3");
            return [f3, j](double r) { return f3(r) * sqrt(phi_jet(r)) / (I * std::sqrt(j + 1.0)); };
        }
        case WaveType::J_MINUS: {
            const RadialFunction f3 = dkp.component("f3");
            return [f3, j](double r) { return f3(r) * sqrt(phi_jet(r)) / (-I * std::sqrt(double(j))); };
        }
    }
    throw std::invalid_argument("unknown wave type");
}

const char* shared_profile_5d(WaveType t) {
    switch (t) {
        case WaveType::J: return "h";
        case WaveType::J_PLUS: return "f";
        case WaveType::J_MINUS: return "g";
    }
    return "h";
}

}  // namespace

ResidualReport cross_formalism_compare(const RadialBundle& dkp, const RadialBundle& five, std::span<const double> grid) {
    if (dkp.formalism != Formalism::DKP || five.formalism != Formalism::FIVE_DIM)
        throw std::invalid_argument("cross_formalism_compare: need a DKP and a FIVE_DIM bundle");
    if (dkp.spec.type != five.spec.type || dkp.spec.j != five.spec.j || dkp.spec.n != five.spec.n ||
        dkp.spec.mass_sq != five.spec.mass_sq)
        throw std::invalid_argument("cross_formalism_compare: mode mismatch");
    const RadialFunction a = shared_profile_dkp(dkp);
    const RadialFunction b = five.component(shared_profile_5d(five.spec.type));
    EntryBuilder eb(EquationId::CROSS_FORMALISM,
                    std::string("CROSS_FORMALISM ") + std::string(to_string(dkp.spec.type)));
    for (double r : grid) {
        const cplx x = a(r).value(), y = b(r).value();
        const double scale = std::max(std::abs(x), std::abs(y));
        eb.add(std::abs(x - y) / std::max(scale, 1e-300), scale, r);
    }
    ResidualReport rep;
    rep.grid.assign(grid.begin(), grid.end());
    rep.scale = "pointwise relative difference";
    rep.entries.push_back(eb.finish());
    return rep;
}

ResidualReport cross_formalism_compare(const ModeSpec& spec, const Grid& grid) {
    if (spec.massless) throw std::invalid_argument("cross_formalism_compare: massive modes only");
    const auto nodes = grid.nodes();
    return cross_formalism_compare(build_dkp_wave(spec), build_5d_mode(spec.mass_sq, spec.n, spec.j, spec.type),
                                   std::span<const double>(nodes));
}

}  // namespace ads
