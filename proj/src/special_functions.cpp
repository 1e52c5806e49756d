#include "ads_spin1/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ads {

namespace {

constexpr double kPolyTol = 1e-9;
constexpr double kSeriesCutoff = 1e-16;
constexpr int kMaxSeriesTerms = 2'000'000;

// Nearest non-positive integer n with |x + n| < tol, or -1.
int nonpositive_integer(double x) {
    const double r = std::round(x);
    if (r <= 0.0 && std::abs(x - r) < kPolyTol) return static_cast<int>(-r);
    return -1;
}

void check_gamma(double gamma) {
    if (nonpositive_integer(gamma) >= 0)
        throw std::domain_error("hyp2f1: gamma is a non-positive integer (" + std::to_string(gamma) + ")");
}

double polynomial_sum(double a, double b, double c, int n, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
    }
    return sum;
}

double series(double a, double b, double c, double w) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
        term *= ratio;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) < kSeriesCutoff * std::abs(sum) && std::abs(ratio) < 1.0) return sum;
    }
    throw std::runtime_error("hyp2f1: series did not converge (w = " + std::to_string(w) +
                             " too close to 1)");
}

double snap(double x) {
    const int n = nonpositive_integer(x);
    return n >= 0 ? -static_cast<double>(n) : x;
}

double pochhammer(double x, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= x + i;
    return p;
}

double factorial(int n) {
    static const std::array<double, 64> table = [] {
        std::array<double, 64> t{};
        t[0] = 1.0;
        for (int i = 1; i < 64; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n >= 64) throw std::out_of_range("factorial argument out of range");
    return table[n];
}

}  // namespace

int Hyp2F1Params::polynomial_degree() const {
    const int na = nonpositive_integer(alpha), nb = nonpositive_integer(beta);
    if (na >= 0 && nb >= 0) return std::min(na, nb);
    return na >= 0 ? na : nb;
}

double hyp2f1(const Hyp2F1Params& p, double z) {
    check_gamma(p.gamma);
    if (z > 0.0) throw std::domain_error("hyp2f1: only z <= 0 is supported");
    if (z == 0.0) return 1.0;
    const int n = p.polynomial_degree();
    if (n >= 0) return polynomial_sum(snap(p.alpha), snap(p.beta), p.gamma, n, z);

    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), and the a<->b mirror.
    const double w = z / (z - 1.0);
    const double cb = p.gamma - p.beta, ca = p.gamma - p.alpha;
    if (nonpositive_integer(ca) >= 0 && nonpositive_integer(cb) < 0)
        return std::pow(1.0 - z, -p.beta) * series(snap(ca), p.beta, p.gamma, w);
    return std::pow(1.0 - z, -p.alpha) * series(p.alpha, snap(cb), p.gamma, w);
}

double hyp2f1_nth_derivative(const Hyp2F1Params& p, double z, int k) {
    if (k < 0) throw std::invalid_argument("hyp2f1: negative derivative order");
    const double a = snap(p.alpha), b = snap(p.beta);
    const double coef = pochhammer(a, k) * pochhammer(b, k) / pochhammer(p.gamma, k);
    if (coef == 0.0) return 0.0;
    return coef * hyp2f1({a + k, b + k, p.gamma + k}, z);
}

double hyp2f1_derivative(const Hyp2F1Params& p, double z) { return hyp2f1_nth_derivative(p, z, 1); }

Jet hyp2f1_jet(const Hyp2F1Params& p, const Jet& z) {
    const double z0 = z.value().real();
    std::array<cplx, 4> f{};
    for (int k = 0; k <= z.order && k < 4; ++k) f[k] = hyp2f1_nth_derivative(p, z0, k);
    return compose(z, f);
}

std::vector<double> hyp2f1_polynomial_coefficients(const Hyp2F1Params& p) {
    const int n = p.polynomial_degree();
    if (n < 0) throw std::domain_error("hyp2f1: series does not terminate");
    const double a = snap(p.alpha), b = snap(p.beta);
    std::vector<double> c{1.0};
    // One extra coefficient so callers can see the exact zero past degree n.
    for (int k = 0; k <= n; ++k) c.push_back(c.back() * (a + k) * (b + k) / ((p.gamma + k) * (k + 1.0)));
    return c;
}

int count_sign_changes(std::span<const double> values) {
    int changes = 0;
    double last = 0.0;
    for (double v : values) {
        if (v == 0.0) continue;
        if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
        last = v;
    }
    return changes;
}

double wigner_d(int j, int mp, int m, double theta) {
    if (j < 0 || std::abs(mp) > j || std::abs(m) > j)
        throw std::out_of_range("wigner_d: index out of range");
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const double pref = std::sqrt(factorial(j + mp) * factorial(j - mp) * factorial(j + m) * factorial(j - m));
    double sum = 0.0;
    for (int k = std::max(0, m - mp); k <= std::min(j + m, j - mp); ++k) {
        const double denom = factorial(j + m - k) * factorial(k) * factorial(mp - m + k) * factorial(j - mp - k);
        const double sign = ((mp - m + k) % 2 == 0) ? 1.0 : -1.0;
        sum += sign / denom * std::pow(c, 2 * j + m - mp - 2 * k) * std::pow(s, mp - m + 2 * k);
    }
    return pref * sum;
}

cplx wigner_D(int j, int mp, int m, double phi, double theta) {
    return std::polar(1.0, -mp * phi) * wigner_d(j, mp, m, theta);
}

cplx d_sigma(int j, int m, int sigma, double phi, double theta) {
    if (std::abs(sigma) > j) return 0.0;
    return wigner_D(j, -m, sigma, phi, theta);
}

double clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M) {
    if (m1 + m2 != M || std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return 0.0;
    if (J < std::abs(j1 - j2) || J > j1 + j2) return 0.0;
    const double pre = std::sqrt((2.0 * J + 1.0) * factorial(J + j1 - j2) * factorial(J - j1 + j2) *
                                 factorial(j1 + j2 - J) / factorial(j1 + j2 + J + 1)) *
                       std::sqrt(factorial(J + M) * factorial(J - M) * factorial(j1 - m1) *
                                 factorial(j1 + m1) * factorial(j2 - m2) * factorial(j2 + m2));
    double sum = 0.0;
    for (int k = 0; k <= j1 + j2 - J; ++k) {
        const int a = j1 + j2 - J - k, b = j1 - m1 - k, c = j2 + m2 - k, d = J - j2 + m1 + k,
                  e = J - j1 - m2 + k;
        if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0) continue;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign / (factorial(k) * factorial(a) * factorial(b) * factorial(c) * factorial(d) * factorial(e));
    }
    return pre * sum;
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) return 0.0;
    return std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi)) * std::polar(1.0, m * phi) *
           wigner_d(l, m, 0, theta);
}

CVec3 vector_spherical_harmonic(int nu, int j, int m, double theta, double phi) {
    if (j < 0 || std::abs(m) > j) throw std::out_of_range("vector harmonic: |m| > j");
    if (nu < 0 || nu < j - 1 || nu > j + 1 || (j == 0 && nu != 1))
        throw std::invalid_argument("vector harmonic: nu must be j-1, j or j+1 (got " + std::to_string(nu) + ")");
    const double s = 1.0 / std::sqrt(2.0);
    const cplx I{0.0, 1.0};
    const std::array<CVec3, 3> e{{
        {cplx(s), -I * s, 0.0},     // σ = -1
        {0.0, 0.0, 1.0},            // σ = 0
        {cplx(-s), -I * s, 0.0},    // σ = +1
    }};
    CVec3 out{};
    for (int sigma = -1; sigma <= 1; ++sigma) {
        const int mu = m - sigma;
        if (std::abs(mu) > nu) continue;
        const cplx w = clebsch_gordan(nu, mu, 1, sigma, j, m) * spherical_harmonic(nu, mu, theta, phi);
        for (int k = 0; k < 3; ++k) out[k] += w * e[sigma + 1][k];
    }
    return out;
}

std::vector<double> interior_theta_grid(int points) {
    std::vector<double> t(points);
    for (int i = 0; i < points; ++i) t[i] = std::numbers::pi * (i + 0.5) / points;
    return t;
}

ResidualReport verify_recursions(int j, int m, std::span<const double> thetas) {
    if (j < 1 || std::abs(m) > j) throw std::out_of_range("verify_recursions: need j >= 1, |m| <= j");
    const double nu = std::sqrt(j * (j + 1.0)), a = std::sqrt((j - 1.0) * (j + 2.0));
    auto D = [&](int sigma, double th) { return std::abs(sigma) > j ? 0.0 : wigner_d(j, -m, sigma, th); };
    constexpr double h = 1e-3;
    auto dD = [&](int sigma, double th) {
        return (-D(sigma, th - 3 * h) + 9 * D(sigma, th - 2 * h) - 45 * D(sigma, th - h) +
                45 * D(sigma, th + h) - 9 * D(sigma, th + 2 * h) + D(sigma, th + 3 * h)) /
               (60 * h);
    };

    std::array<EntryBuilder, 6> eb{
        EntryBuilder(EquationId::WIGNER_RECURSION, "d_theta D-1"),
        EntryBuilder(EquationId::WIGNER_RECURSION, "(m-cos)/sin D-1"),
        EntryBuilder(EquationId::WIGNER_RECURSION, "d_theta D0"),
        EntryBuilder(EquationId::WIGNER_RECURSION, "m/sin D0"),
        EntryBuilder(EquationId::WIGNER_RECURSION, "d_theta D+1"),
        EntryBuilder(EquationId::WIGNER_RECURSION, "(m+cos)/sin D+1"),
    };
    for (double th : thetas) {
        const double s = std::sin(th), c = std::cos(th);
        const double Dm2 = D(-2, th), Dm1 = D(-1, th), D0 = D(0, th), Dp1 = D(1, th), Dp2 = D(2, th);
        std::array<TermSum, 6> t;
        t[0] += dD(-1, th), t[0] -= 0.5 * a * Dm2, t[0] += 0.5 * nu * D0;
        t[1] += (m - c) / s * Dm1, t[1] -= 0.5 * a * Dm2, t[1] -= 0.5 * nu * D0;
        t[2] += dD(0, th), t[2] -= 0.5 * nu * Dm1, t[2] += 0.5 * nu * Dp1;
        t[3] += m / s * D0, t[3] -= 0.5 * nu * Dm1, t[3] -= 0.5 * nu * Dp1;
        t[4] += dD(1, th), t[4] -= 0.5 * nu * D0, t[4] += 0.5 * a * Dp2;
        t[5] += (m + c) / s * Dp1, t[5] -= 0.5 * nu * D0, t[5] -= 0.5 * a * Dp2;
        for (int k = 0; k < 6; ++k) eb[k].add(t[k], th);
    }
    ResidualReport r;
    r.grid.assign(thetas.begin(), thetas.end());
    for (auto& e : eb) r.entries.push_back(e.finish());
    return r;
}

}  // namespace ads
