#include "ads_spin1/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ads {

namespace {
constexpr std::array<WaveType, 3> kTypes{WaveType::J, WaveType::J_PLUS, WaveType::J_MINUS};
}

std::string_view to_string(WaveType t) {
    switch (t) {
        case WaveType::J: return "J";
        case WaveType::J_PLUS: return "J_PLUS";
        case WaveType::J_MINUS: return "J_MINUS";
    }
    return "?";
}

WaveType wave_type_from_string(std::string_view s) {
    if (s == "J" || s == "j") return WaveType::J;
    if (s == "J_PLUS" || s == "j+1" || s == "jplus" || s == "plus") return WaveType::J_PLUS;
    if (s == "J_MINUS" || s == "j-1" || s == "jminus" || s == "minus") return WaveType::J_MINUS;
    throw std::invalid_argument("unknown wave type: " + std::string(s));
}

int orbital_index(WaveType t, int j) {
    switch (t) {
        case WaveType::J: return j;
        case WaveType::J_PLUS: return j + 1;
        case WaveType::J_MINUS: return j - 1;
    }
    return j;
}

int parity(WaveType t, int j) {
    const int p = (j % 2 == 0) ? 1 : -1;
    return t == WaveType::J ? -p : p;
}

void validate_mode(int n, int j, WaveType type) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (j < 0) throw std::invalid_argument("j must be non-negative");
    if (j == 0 && type != WaveType::J_PLUS)
        throw std::invalid_argument(std::string(to_string(type)) + " wave requires j >= 1");
}

double energy_massive(double mass_sq, int n, int j, WaveType type) {
    validate_mode(n, j, type);
    if (mass_sq < 0.0) throw std::invalid_argument("mass_sq must be non-negative");
    return 2.0 * n + orbital_index(type, j) + 1.5 + std::sqrt(mass_sq + 0.25);
}

double energy_massless_dkp(int n, int j) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (j < 1) throw std::invalid_argument("j = 0 electromagnetic sector is pure gauge");
    return 2.0 * n + j + 2.0;
}

double energy_photon_rs(int n, int j) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (j < 1) throw std::invalid_argument("photon modes require j >= 1");
    return 2.0 * n + j + 1.0;
}

double energy_photon_rs_symmetric(int n, int j) { return energy_photon_rs(n, j) + 1.0; }

ModeSpec ModeSpec::massive(double mass_sq, int n, int j, WaveType type, int m) {
    if (std::abs(m) > j) throw std::invalid_argument("|m| must not exceed j");
    ModeSpec s{n, j, m, type, mass_sq, false, energy_massive(mass_sq, n, j, type)};
    return s;
}

ModeSpec ModeSpec::massless_dkp(int n, int j, WaveType type, int m) {
    if (std::abs(m) > j) throw std::invalid_argument("|m| must not exceed j");
    validate_mode(n, j, type);
    ModeSpec s{n, j, m, type, 0.0, true, 2.0 * n + orbital_index(type, j) + 2.0};
    return s;
}

std::vector<LevelRow> LevelTable::cell(int N, WaveType type) const {
    std::vector<LevelRow> out;
    for (const auto& r : rows)
        if (r.N == N && r.type == type) out.push_back(r);
    return out;
}

LevelTable build_level_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("N_max must be >= 1");
    LevelTable t;
    for (int N = 0; N <= n_max; ++N)
        for (WaveType type : kTypes)
            for (int n = 0; 2 * n <= N + 1; ++n) {
                const int j = N - 2 * n - (orbital_index(type, 0));
                if (j < 0 || (j == 0 && type != WaveType::J_PLUS)) continue;
                if (2 * n + orbital_index(type, j) != N) continue;
                t.rows.push_back({N, type, n, j});
            }
    return t;
}

std::string format_level_table(const LevelTable& t) {
    std::ostringstream os;
    int maxN = 0;
    for (const auto& r : t.rows) maxN = std::max(maxN, r.N);
    for (int N = 1; N <= maxN; ++N)
        for (WaveType type : kTypes) {
            os << "N=" << N << ' ' << to_string(type);
            for (const auto& r : t.cell(N, type)) os << " (" << r.n << ',' << r.j << ')';
            os << '\n';
        }
    return os.str();
}

}  // namespace ads
