#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ads_spin1/spectrum.hpp"
#include "support/reference_table.hpp"

using namespace ads;
using doctest::Approx;

TEST_CASE("wave type names") {
    CHECK(wave_type_from_string("j") == WaveType::J);
    CHECK(wave_type_from_string("j+1") == WaveType::J_PLUS);
    CHECK(wave_type_from_string("J_MINUS") == WaveType::J_MINUS);
    CHECK(wave_type_from_string("jminus") == WaveType::J_MINUS);
    CHECK_THROWS_AS(wave_type_from_string("k"), std::invalid_argument);
    CHECK(to_string(WaveType::J_PLUS) == "J_PLUS");
}

TEST_CASE("orbital index and parity") {
    CHECK(orbital_index(WaveType::J, 3) == 3);
    CHECK(orbital_index(WaveType::J_PLUS, 3) == 4);
    CHECK(orbital_index(WaveType::J_MINUS, 3) == 2);
    CHECK(parity(WaveType::J, 1) == 1);
    CHECK(parity(WaveType::J_PLUS, 1) == -1);
    CHECK(parity(WaveType::J_MINUS, 2) == 1);
}

TEST_CASE("massive energies") {
    CHECK(energy_massive(2.0, 0, 1, WaveType::J) == 4.0);
    for (int n = 0; n <= 3; ++n)
        for (int j = 1; j <= 4; ++j) {
            CHECK(energy_massive(0.0, n, j, WaveType::J) == Approx(2.0 * n + j + 2.0));
            CHECK(energy_massive(0.0, n, j, WaveType::J_PLUS) == Approx(2.0 * n + j + 3.0));
        }
    CHECK(energy_massive(0.75, 0, 2, WaveType::J_MINUS) == energy_massive(0.75, 0, 0, WaveType::J_PLUS));
    CHECK(energy_massive(6.0, 1, 2, WaveType::J_PLUS) == Approx(2 + 3 + 1.5 + 2.5));
    CHECK_THROWS_AS(energy_massive(2.0, -1, 1, WaveType::J), std::invalid_argument);
    CHECK_THROWS_AS(energy_massive(2.0, 0, 0, WaveType::J), std::invalid_argument);
    CHECK_THROWS_AS(energy_massive(2.0, 0, 0, WaveType::J_MINUS), std::invalid_argument);
    CHECK_THROWS_AS(energy_massive(-1.0, 0, 1, WaveType::J), std::invalid_argument);
    CHECK(energy_massive(2.0, 0, 0, WaveType::J_PLUS) > 0.0);
}

TEST_CASE("massless and photon energies") {
    CHECK(energy_massless_dkp(0, 1) == 3.0);
    CHECK(energy_massless_dkp(1, 1) == 5.0);
    CHECK_THROWS_WITH_AS(energy_massless_dkp(0, 0), doctest::Contains("pure gauge"), std::invalid_argument);
    CHECK(energy_photon_rs(0, 1) == 2.0);
    CHECK(energy_photon_rs(2, 3) == 8.0);
    CHECK(energy_photon_rs_symmetric(0, 1) == 3.0);
    for (int n = 0; n < 5; ++n) CHECK(energy_photon_rs(n + 1, 2) - energy_photon_rs(n, 2) == 2.0);
    CHECK_THROWS(energy_photon_rs(0, 0));
}

TEST_CASE("mode spec") {
    const ModeSpec s = ModeSpec::massive(2.0, 1, 2, WaveType::J_MINUS, -1);
    CHECK(s.ell() == 1);
    CHECK(s.N() == 3);
    CHECK(s.epsilon == Approx(3 + 1.5 + 1.5));
    CHECK_THROWS(ModeSpec::massive(2.0, 0, 1, WaveType::J, 2));
    const ModeSpec z = ModeSpec::massless_dkp(1, 2, WaveType::J_PLUS);
    CHECK(z.massless);
    CHECK(z.epsilon == 2 + 3 + 2);
}

TEST_CASE("level table: generated rows obey N = 2n + l") {
    const LevelTable t = build_level_table(8);
    for (const auto& r : t.rows) CHECK(2 * r.n + orbital_index(r.type, r.j) == r.N);
    // Every admissible (n, j, type) with N ≤ 8 appears exactly once.
    int admissible = 0;
    for (int n = 0; n <= 4; ++n)
        for (int j = 0; j <= 9; ++j)
            for (WaveType w : {WaveType::J, WaveType::J_PLUS, WaveType::J_MINUS}) {
                if (j == 0 && w != WaveType::J_PLUS) continue;
                const int N = 2 * n + orbital_index(w, j);
                if (N < 0 || N > 8) continue;
                ++admissible;
                int hits = 0;
                for (const auto& r : t.rows) hits += r == LevelRow{N, w, n, j};
                CHECK(hits == 1);
            }
    CHECK(static_cast<int>(t.rows.size()) == admissible);
    CHECK_THROWS(build_level_table(0));
}

TEST_CASE("level table: selected cells") {
    const LevelTable t = build_level_table(8);
    using reference::Cell;
    CHECK(reference::generated_cell(t, 1, WaveType::J) == Cell{{0, 1}});
    CHECK(reference::generated_cell(t, 1, WaveType::J_MINUS) == Cell{{0, 2}});
    CHECK(reference::generated_cell(t, 1, WaveType::J_PLUS) == Cell{{0, 0}});
    CHECK(reference::generated_cell(t, 6, WaveType::J_MINUS) == Cell{{0, 7}, {1, 5}, {2, 3}, {3, 1}});
    CHECK(reference::generated_cell(t, 5, WaveType::J_PLUS) == Cell{{0, 4}, {1, 2}, {2, 0}});
}

TEST_CASE("level table against the reference table") {
    const auto cmp = reference::compare(build_level_table(8));
    CHECK(cmp.exact_cells == 22);
    CHECK(cmp.mismatched_cells == 0);
    CHECK(cmp.errata_resolved);
}

TEST_CASE("level table formatting") {
    const std::string s = format_level_table(build_level_table(8));
    CHECK(s.find("N=6 J_MINUS (0,7) (1,5) (2,3) (3,1)\n") != std::string::npos);
    CHECK(s.find("N=1 J (0,1)\nN=1 J_PLUS (0,0)\nN=1 J_MINUS (0,2)\n") == 0);
    int lines = 0;
    for (char c : s) lines += c == '\n';
    CHECK(lines == 24);
}
