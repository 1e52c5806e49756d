#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ads {

enum class WaveType { J, J_PLUS, J_MINUS };

std::string_view to_string(WaveType t);
WaveType wave_type_from_string(std::string_view s);

// Orbital index ℓ of the wave type: j, j+1, j-1.
int orbital_index(WaveType t, int j);
// Parity sector: J has P = (-1)^{j+1}, J_PLUS / J_MINUS have P = (-1)^j.
int parity(WaveType t, int j);

struct ModeSpec {
    int n = 0;
    int j = 1;
    int m = 0;
    WaveType type = WaveType::J;
    double mass_sq = 2.0;
    bool massless = false;
    double epsilon = 0.0;

    int ell() const { return orbital_index(type, j); }
    int N() const { return 2 * n + ell(); }

    static ModeSpec massive(double mass_sq, int n, int j, WaveType type, int m = 0);
    static ModeSpec massless_dkp(int n, int j, WaveType type, int m = 0);
};

void validate_mode(int n, int j, WaveType type);

double energy_massive(double mass_sq, int n, int j, WaveType type);
double energy_massless_dkp(int n, int j);
double energy_photon_rs(int n, int j);
double energy_photon_rs_symmetric(int n, int j);

struct LevelRow {
    int N;
    WaveType type;
    int n;
    int j;
    bool operator==(const LevelRow&) const = default;
};

struct LevelTable {
    std::vector<LevelRow> rows;
    std::vector<LevelRow> cell(int N, WaveType type) const;
};

LevelTable build_level_table(int n_max);

// One line per (N, type) cell: "N=6 J_MINUS (0,7) (1,5) (2,3) (3,1)".
std::string format_level_table(const LevelTable& t);

}  // namespace ads
