#include "ads_spin1/tabulated.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace ads {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    while (b < e && *b == ' ') ++b;
    const auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc() || res.ptr != e) throw std::invalid_argument("csv: bad number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

RadialTable tabulate(const RadialBundle& bundle, const std::vector<double>& r) {
    RadialTable t;
    t.r = r;
    for (const auto& [label, fn] : bundle.components) {
        std::vector<cplx> v;
        v.reserve(r.size());
        for (double x : r) v.push_back(fn(x).value());
        t.columns.emplace_back(label, std::move(v));
    }
    return t;
}

void write_csv(std::ostream& os, const RadialTable& t) {
    os << "r";
    for (const auto& c : t.columns) os << ',' << c.first << ".re," << c.first << ".im";
    os << '\n';
    for (std::size_t i = 0; i < t.r.size(); ++i) {
        os << format_double(t.r[i]);
        for (const auto& c : t.columns)
            os << ',' << format_double(c.second[i].real()) << ',' << format_double(c.second[i].imag());
        os << '\n';
    }
}

RadialTable read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("csv: empty input");
    const auto head = split(line);
    if (head.empty() || head[0] != "r" || head.size() % 2 != 1) throw std::invalid_argument("csv: bad header");
    RadialTable t;
    for (std::size_t k = 1; k < head.size(); k += 2) {
        const std::string& re = head[k];
        if (re.size() < 4 || re.substr(re.size() - 3) != ".re" || head[k + 1] != re.substr(0, re.size() - 3) + ".im")
            throw std::invalid_argument("csv: columns must come in <label>.re,<label>.im pairs");
        t.columns.emplace_back(re.substr(0, re.size() - 3), std::vector<cplx>{});
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != head.size()) throw std::invalid_argument("csv: ragged row");
        t.r.push_back(parse_double(cells[0]));
        for (std::size_t k = 0; k < t.columns.size(); ++k)
            t.columns[k].second.emplace_back(parse_double(cells[1 + 2 * k]), parse_double(cells[2 + 2 * k]));
    }
    if (t.r.size() < 5) throw std::invalid_argument("csv: need at least 5 rows");
    if (!std::is_sorted(t.r.begin(), t.r.end())) throw std::invalid_argument("csv: r must be increasing");
    return t;
}

RadialFunction tabulated_function(std::vector<double> r, std::vector<cplx> values) {
    if (r.size() != values.size() || r.size() < 5) throw std::invalid_argument("tabulated: need >= 5 matching nodes");
    auto rr = std::make_shared<const std::vector<double>>(std::move(r));
    auto vv = std::make_shared<const std::vector<cplx>>(std::move(values));
    return [rr, vv](double x) {
        const auto& R = *rr;
        if (x < R.front() || x > R.back()) throw std::domain_error("tabulated: r outside the table");
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(R.size());
        std::ptrdiff_t i = std::lower_bound(R.begin(), R.end(), x) - R.begin();
        const std::ptrdiff_t lo = std::clamp<std::ptrdiff_t>(i - 2, 0, n - 5);
        const double h = R[lo + 4] - R[lo];
        Eigen::Matrix<double, 5, 5> V;
        Eigen::Matrix<cplx, 5, 1> y;
        for (int a = 0; a < 5; ++a) {
            const double u = (R[lo + a] - x) / h;
            double p = 1.0;
            for (int b = 0; b < 5; ++b, p *= u) V(a, b) = p;
            y(a) = (*vv)[lo + a];
        }
        const Eigen::Matrix<cplx, 5, 1> c = V.cast<cplx>().fullPivLu().solve(y);
        Jet out;
        out.c[0] = c(0);
        out.c[1] = c(1) / h;
        out.c[2] = 2.0 * c(2) / (h * h);
        out.c[3] = 6.0 * c(3) / (h * h * h);
        return out;
    };
}

RadialBundle tabulated_bundle(const RadialBundle& meta, const RadialTable& t) {
    RadialBundle out = meta;
    for (const auto& [label, values] : t.columns) {
        if (!meta.has(label)) throw std::invalid_argument("tabulated: unknown component '" + label + "'");
        out = out.with_component(label, tabulated_function(t.r, values));
    }
    return out;
}

}  // namespace ads
