#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ads_spin1/radial_modes.hpp"

namespace ads {

// Complex radial profiles sampled on a strictly increasing r grid.
struct RadialTable {
    std::vector<double> r;
    std::vector<std::pair<std::string, std::vector<cplx>>> columns;
};

RadialTable tabulate(const RadialBundle& bundle, const std::vector<double>& r);

// Header "r,<label>.re,<label>.im,..." followed by one row per node,
// floats in shortest round-trip form.
void write_csv(std::ostream& os, const RadialTable& t);
RadialTable read_csv(std::istream& is);

std::string format_double(double x);

// Local 5-point Lagrange interpolation; derivatives up to third order come
// from the interpolating quartic.
RadialFunction tabulated_function(std::vector<double> r, std::vector<cplx> values);

// Replaces every component of `meta` present in the table by its tabulated version.
RadialBundle tabulated_bundle(const RadialBundle& meta, const RadialTable& t);

}  // namespace ads
