#include "ads_spin1/residual.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace ads {

namespace {

constexpr std::array<std::pair<EquationId, std::string_view>, 29> kNames{{
    {EquationId::SYS_1_5a, "SYS_1_5a"},
    {EquationId::SYS_1_5b, "SYS_1_5b"},
    {EquationId::SYS_1_6c, "SYS_1_6c"},
    {EquationId::ODE_1_8, "ODE_1_8"},
    {EquationId::ODE_2_1b, "ODE_2_1b"},
    {EquationId::ODE_2_6a, "ODE_2_6a"},
    {EquationId::ODE_2_6b, "ODE_2_6b"},
    {EquationId::ODE_2_7a, "ODE_2_7a"},
    {EquationId::ODE_2_7b, "ODE_2_7b"},
    {EquationId::ODE_2_7prime, "ODE_2_7prime"},
    {EquationId::ODE_3_14, "ODE_3_14"},
    {EquationId::SYS_3_6, "SYS_3_6"},
    {EquationId::SYS_5_5prime, "SYS_5_5prime"},
    {EquationId::SYS_3_10prime, "SYS_3_10prime"},
    {EquationId::SYS_3_12prime, "SYS_3_12prime"},
    {EquationId::REL_3_13prime, "REL_3_13prime"},
    {EquationId::SYS_2_4a, "SYS_2_4a"},
    {EquationId::SYS_2_4b, "SYS_2_4b"},
    {EquationId::LORENTZ_2_5a, "LORENTZ_2_5a"},
    {EquationId::LORENTZ_2_5c_I, "LORENTZ_2_5c_I"},
    {EquationId::LORENTZ_2_5c_II, "LORENTZ_2_5c_II"},
    {EquationId::REL_2_10prime, "REL_2_10prime"},
    {EquationId::PARITY_1_4, "PARITY_1_4"},
    {EquationId::ALG_IDENTITY, "ALG_IDENTITY"},
    {EquationId::WIGNER_RECURSION, "WIGNER_RECURSION"},
    {EquationId::ANGULAR_ACTION, "ANGULAR_ACTION"},
    {EquationId::TRANSVERSALITY, "TRANSVERSALITY"},
    {EquationId::J50_EIGEN, "J50_EIGEN"},
    {EquationId::CROSS_FORMALISM, "CROSS_FORMALISM"},
}};

}  // namespace

std::string_view to_string(EquationId id) {
    for (const auto& [k, name] : kNames)
        if (k == id) return name;
    return "UNKNOWN";
}

EquationId equation_from_string(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown equation id: " + std::string(name));
}

const std::vector<EquationId>& all_equation_ids() {
    static const std::vector<EquationId> ids = [] {
        std::vector<EquationId> v;
        for (const auto& [k, name] : kNames) v.push_back(k);
        return v;
    }();
    return ids;
}

double ResidualReport::max() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, e.max_residual);
    return m;
}

const ResidualEntry* ResidualReport::find(std::string_view label) const {
    for (const auto& e : entries)
        if (e.label == label) return &e;
    return nullptr;
}

double ResidualReport::max_of(EquationId id) const {
    double m = 0.0;
    for (const auto& e : entries)
        if (e.id == id) m = std::max(m, e.max_residual);
    return m;
}

void ResidualReport::merge(const ResidualReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    if (grid.empty()) grid = other.grid;
}

}  // namespace ads
