#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ads_spin1/jet.hpp"

namespace ads {

enum class EquationId {
    SYS_1_5a,
    SYS_1_5b,
    SYS_1_6c,
    ODE_1_8,
    ODE_2_1b,
    ODE_2_6a,
    ODE_2_6b,
    ODE_2_7a,
    ODE_2_7b,
    ODE_2_7prime,
    ODE_3_14,
    SYS_3_6,
    SYS_5_5prime,
    SYS_3_10prime,
    SYS_3_12prime,
    REL_3_13prime,
    SYS_2_4a,
    SYS_2_4b,
    LORENTZ_2_5a,
    LORENTZ_2_5c_I,
    LORENTZ_2_5c_II,
    REL_2_10prime,
    PARITY_1_4,
    ALG_IDENTITY,
    WIGNER_RECURSION,
    ANGULAR_ACTION,
    TRANSVERSALITY,
    J50_EIGEN,
    CROSS_FORMALISM,
};

std::string_view to_string(EquationId id);
EquationId equation_from_string(std::string_view name);
const std::vector<EquationId>& all_equation_ids();

// One line of a check: the largest scaled residual found and where.
struct ResidualEntry {
    EquationId id;
    std::string label;
    double max_residual = 0.0;
    double at = 0.0;          // grid coordinate of the maximum
    bool degenerate = false;  // every term vanished at every point
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;
    std::vector<double> grid;
    std::string scale = "per-point max |term|";
    double tolerance = 1e-7;

    double max() const;
    bool passed() const { return max() <= tolerance; }
    bool passed(double tol) const { return max() <= tol; }
    const ResidualEntry* find(std::string_view label) const;
    double max_of(EquationId id) const;
    void merge(const ResidualReport& other);
};

// Accumulates the additive terms of one equation at one point and returns
// |sum| / max |term|; the floor keeps identically vanishing equations at zero.
class TermSum {
public:
    TermSum& operator+=(cplx t) {
        sum_ += t;
        scale_ = std::max(scale_, std::abs(t));
        return *this;
    }
    TermSum& operator-=(cplx t) { return *this += -t; }
    double scaled() const { return std::abs(sum_) / std::max(scale_, 1e-300); }
    double scale() const { return scale_; }
    cplx sum() const { return sum_; }

private:
    cplx sum_{0.0};
    double scale_ = 0.0;
};

// Collects point residuals for one labelled equation across a grid.
class EntryBuilder {
public:
    EntryBuilder(EquationId id, std::string label) : entry_{id, std::move(label)} {}
    void add(const TermSum& t, double x) { add(t.scaled(), t.scale(), x); }
    void add(double residual, double scale, double x) {
        if (scale > 1e-300) any_scale_ = true;
        if (residual > entry_.max_residual || first_) {
            entry_.max_residual = residual;
            entry_.at = x;
            first_ = false;
        }
    }
    ResidualEntry finish() const {
        ResidualEntry e = entry_;
        e.degenerate = !any_scale_;
        return e;
    }

private:
    ResidualEntry entry_;
    bool any_scale_ = false;
    bool first_ = true;
};

}  // namespace ads
