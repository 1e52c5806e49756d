#include "ads_spin1/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "ads_spin1/dkp_algebra.hpp"
#include "ads_spin1/five_dim.hpp"
#include "ads_spin1/maxwell_rs.hpp"
#include "ads_spin1/special_functions.hpp"
#include "ads_spin1/spectrum.hpp"
#include "ads_spin1/tabulated.hpp"
#include "ads_spin1/verifier.hpp"

namespace ads {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    double mass_sq = 2.0;
    int n = 0, j = 1, m = 0;
    std::string type = "j";
    std::string grid = "0.001,50,60";
    double tol = 1e-7;
    bool tol_given = false;  // --tol or ADS_SPIN1_TOL
    std::string format;
    double curvature_radius = 1.0;
    std::uint64_t seed = 20240611;
    int n_max = 8;
    std::string mode = "dkp";
    std::string equations = "all";
    std::string csv;
    int points = 1000;
    double step = 1e-4;
};

double default_tolerance() {
    const char* env = std::getenv("ADS_SPIN1_TOL");
    if (!env || !*env) return 1e-7;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (*end != '\0' || !(v > 0.0)) throw UsageError("ADS_SPIN1_TOL must be a positive number");
    return v;
}

Grid parse_grid(const std::string& s) {
    Grid g;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> g.r_min >> c1 >> g.r_max >> c2 >> g.points) || c1 != ',' || c2 != ',' || !is.eof())
        throw UsageError("--grid expects r_min,r_max,points");
    if (!(g.r_min > 0.0) || !(g.r_max > g.r_min) || g.points < 2)
        throw UsageError("--grid needs 0 < r_min < r_max and points >= 2");
    return g;
}

std::string fmt_e(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

RadialBundle build_bundle(const RunConfig& c) {
    const WaveType t = wave_type_from_string(c.type);
    if (c.mass_sq < 0.0) throw UsageError("--mass-sq must be non-negative");
    if (c.mode == "dkp") {
        if (c.mass_sq == 0.0) {
            if (c.j == 0) return build_massless_gauge_j0(gauge_j0_epsilon(c.n));
            return build_massless_wave(t, c.n, c.j);
        }
        return build_dkp_wave(ModeSpec::massive(c.mass_sq, c.n, c.j, t, c.m));
    }
    if (c.mode == "dkp-j0") return build_j0_mode(c.mass_sq, c.n);
    if (c.mode == "gauge-j0") return build_massless_gauge_j0(gauge_j0_epsilon(c.n));
    if (c.mode == "5d") return build_5d_mode(c.mass_sq, c.n, c.j, t);
    if (c.mode == "photon") return build_photon_mode(c.n, c.j, c.m).bundle;
    throw UsageError("--mode must be one of dkp, dkp-j0, gauge-j0, 5d, photon");
}

json mode_json(const RadialBundle& b) {
    return json{{"formalism", to_string(b.formalism)},
                {"class", to_string(b.mode_class)},
                {"mass_sq", b.spec.mass_sq},
                {"type", to_string(b.spec.type)},
                {"n", b.spec.n},
                {"j", b.spec.j},
                {"m", b.spec.m},
                {"epsilon", b.spec.epsilon}};
}

json report_json(const ResidualReport& rep, double tol) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"equation", to_string(e.id)},
                           {"label", e.label},
                           {"max_residual", e.max_residual},
                           {"at", e.at},
                           {"degenerate", e.degenerate},
                           {"passed", e.max_residual <= tol}});
    return json{{"tolerance", tol}, {"passed", rep.passed(tol)}, {"max_residual", rep.max()},
                {"scale", rep.scale}, {"entries", entries}};
}

void write_report_csv(std::ostream& out, const ResidualReport& rep, double tol) {
    out << "equation,label,max_residual,at,degenerate,passed\n";
    for (const auto& e : rep.entries)
        out << to_string(e.id) << ",\"" << e.label << "\"," << format_double(e.max_residual) << ','
            << format_double(e.at) << ',' << (e.degenerate ? "true" : "false") << ','
            << (e.max_residual <= tol ? "true" : "false") << '\n';
}

json table_json(const RadialTable& t) {
    json comps = json::object();
    for (const auto& [label, v] : t.columns) {
        json re = json::array(), im = json::array();
        for (const cplx& z : v) {
            re.push_back(z.real());
            im.push_back(z.imag());
        }
        comps[label] = {{"re", re}, {"im", im}};
    }
    return json{{"r", t.r}, {"components", comps}};
}

// A named scalar check: passes when value <= threshold.
struct Check {
    std::string name;
    double value;
    double threshold;
    bool passed() const { return value <= threshold; }
};

void print_checks(std::ostream& out, const std::vector<Check>& checks, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        bool ok = true;
        for (const auto& c : checks) {
            arr.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"passed", c.passed()}});
            ok = ok && c.passed();
        }
        out << json{{"schema", 1}, {"passed", ok}, {"checks", arr}}.dump(2) << '\n';
    } else {
        out << "name,value,threshold,passed\n";
        for (const auto& c : checks)
            out << '"' << c.name << "\"," << format_double(c.value) << ',' << format_double(c.threshold) << ','
                << (c.passed() ? "true" : "false") << '\n';
    }
}

bool all_passed(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

std::vector<Check> geometry_checks(const RadialBundle& five, int m, std::uint64_t seed, int count, double step) {
    std::vector<Check> checks;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-0.5, 0.5);
    double dev = 0.0, round = 0.0;
    for (int i = 0; i < count; ++i) {
        const Conformal4 x{box(rng), box(rng), box(rng), box(rng)};
        const EmbeddingPoint p = conformal_to_embedding(x);
        dev = std::max(dev, std::abs(p.constraint() - 1.0));
        const Conformal4 y = embedding_to_conformal(p);
        for (int k = 0; k < 4; ++k) round = std::max(round, std::abs(y[k] - x[k]));
    }
    checks.push_back({"hyperboloid constraint (conformal chart)", dev, 1e-12});
    checks.push_back({"conformal chart round trip", round, 1e-12});

    const auto pts = random_static_points(static_cast<std::size_t>(count), seed);
    double sdev = 0.0;
    for (const auto& p : pts) sdev = std::max(sdev, std::abs(p.constraint() - 1.0));
    checks.push_back({"hyperboloid constraint (static chart)", sdev, 1e-12});

    const FiveVectorField field(five, m);
    const std::vector<EmbeddingPoint> few(pts.begin(), pts.begin() + std::min<std::size_t>(pts.size(), 200));
    checks.push_back({"transversality A.xi", transversality_check(field, few).max(), 1e-10});
    checks.push_back({"J50 eigencheck", j50_eigen_check(field, few, step).max(), 1e-6});
    const double e1 = j50_eigen_check(field, few, 2e-2).max(), e2 = j50_eigen_check(field, few, 1e-2).max();
    checks.push_back({"J50 convergence order deviation from 2", std::abs(std::log2(e1 / e2) - 2.0), 0.1});
    const auto nodes = Grid{}.nodes();
    checks.push_back({"relations between F, G and f, g, h", verify_2_10_relations(five, nodes).max(), 1e-8});
    return checks;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--mass-sq", c.mass_sq, "squared mass in units of the inverse curvature radius");
    sub->add_option("--type", c.type, "wave type: j, j+1 (jplus), j-1 (jminus)");
    sub->add_option("--n", c.n, "radial quantum number");
    sub->add_option("--j", c.j, "total angular momentum");
    sub->add_option("--m", c.m, "magnetic quantum number");
    sub->add_option("--mode", c.mode, "dkp, dkp-j0, gauge-j0, 5d or photon");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    if (!(c.curvature_radius > 0.0)) throw UsageError("--curvature-radius must be positive");
    const WaveType t = wave_type_from_string(c.type);
    if (c.mass_sq < 0.0) throw UsageError("--mass-sq must be non-negative");
    double eps = 0.0;
    if (c.mode == "photon") eps = energy_photon_rs(c.n, c.j);
    else if (c.mass_sq == 0.0) eps = ModeSpec::massless_dkp(c.n, c.j, t).epsilon;
    else eps = energy_massive(c.mass_sq, c.n, c.j, t);
    const int ell = orbital_index(t, c.j);
    if (c.format == "json") {
        out << json{{"schema", 1},          {"mass_sq", c.mass_sq}, {"type", to_string(t)},
                    {"n", c.n},             {"j", c.j},             {"N", 2 * c.n + ell},
                    {"ell", ell},           {"parity", parity(t, c.j)}, {"epsilon", eps},
                    {"energy", eps / c.curvature_radius}}
                   .dump(2)
            << '\n';
    } else {
        out << "mass_sq,type,n,j,N,ell,parity,epsilon,energy\n"
            << format_double(c.mass_sq) << ',' << to_string(t) << ',' << c.n << ',' << c.j << ',' << 2 * c.n + ell
            << ',' << ell << ',' << parity(t, c.j) << ',' << format_double(eps) << ','
            << format_double(eps / c.curvature_radius) << '\n';
    }
    return 0;
}

int cmd_table(const RunConfig& c, std::ostream& out) {
    const LevelTable t = build_level_table(c.n_max);
    if (c.format == "json") {
        json cells = json::array();
        for (int N = 1; N <= c.n_max; ++N)
            for (WaveType w : {WaveType::J, WaveType::J_PLUS, WaveType::J_MINUS}) {
                json modes = json::array();
                for (const auto& r : t.cell(N, w)) modes.push_back({r.n, r.j});
                cells.push_back({{"N", N}, {"type", to_string(w)}, {"modes", modes}});
            }
        out << json{{"schema", 1}, {"n_max", c.n_max}, {"cells", cells}}.dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "N,type,n,j\n";
        for (const auto& r : t.rows)
            if (r.N >= 1) out << r.N << ',' << to_string(r.type) << ',' << r.n << ',' << r.j << '\n';
    } else {
        out << format_level_table(t);
    }
    return 0;
}

void emit_profile(const RadialTable& tab, const json& meta, const RunConfig& c, std::ostream& out,
                  std::ostream& err) {
    if (!c.csv.empty()) {
        std::ofstream f(c.csv);
        if (!f) throw UsageError("cannot write " + c.csv);
        write_csv(f, tab);
    }
    if (c.format == "json") {
        json doc{{"schema", 1}};
        doc.update(meta);
        doc["profile"] = table_json(tab);
        out << doc.dump(2) << '\n';
    } else if (!c.csv.empty()) {
        out << meta.dump() << '\n';
    } else {
        err << meta.dump() << '\n';
        write_csv(out, tab);
    }
}

int cmd_mode(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const RadialBundle b = build_bundle(c);
    const RadialTable tab = tabulate(b, parse_grid(c.grid).nodes());
    emit_profile(tab, json{{"mode", mode_json(b)}}, c, out, err);
    return 0;
}

int cmd_photon(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PhotonMode pm = build_photon_mode(c.n, c.j, c.m);
    const RadialTable tab = tabulate(pm.bundle, parse_grid(c.grid).nodes());
    const json meta{{"n", pm.n},   {"j", pm.j},    {"m", pm.m},
                    {"omega", pm.omega}, {"alpha", pm.params.alpha}, {"beta", pm.params.beta},
                    {"gamma", pm.params.gamma}, {"a", pm.a}, {"b", pm.b}};
    emit_profile(tab, meta, c, out, err);
    return 0;
}

std::vector<EquationId> parse_equations(const std::string& s) {
    std::vector<EquationId> ids;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            ids.push_back(equation_from_string(item));
        } catch (const std::exception&) {
            throw UsageError("unknown equation id '" + item + "'");
        }
    }
    if (ids.empty()) throw UsageError("--equations is empty");
    return ids;
}

int cmd_verify(RunConfig c, std::ostream& out) {
    RadialBundle b = build_bundle(c);
    std::vector<double> nodes = parse_grid(c.grid).nodes();
    if (!c.csv.empty()) {
        std::ifstream f(c.csv);
        if (!f) throw UsageError("cannot read " + c.csv);
        const RadialTable t = read_csv(f);
        b = tabulated_bundle(b, t);
        // Keep centred interpolation stencils: skip the two outermost table nodes.
        const double lo = t.r[2], hi = t.r[t.r.size() - 3];
        std::erase_if(nodes, [&](double r) { return r < lo || r > hi; });
        if (nodes.empty()) throw UsageError("grid does not overlap the tabulated range");
        // Finite-difference derivatives of tabulated data cannot reach the analytic threshold.
        if (!c.tol_given) c.tol = 1e-4;
    }
    ResidualReport rep;
    if (c.equations == "all") {
        rep = verify_all(b, nodes);
    } else {
        for (EquationId id : parse_equations(c.equations)) rep.merge(residual_system(b, id, nodes));
    }
    if (c.format == "csv") {
        write_report_csv(out, rep, c.tol);
    } else {
        json doc{{"schema", 1}, {"mode", mode_json(b)}};
        doc["tabulated"] = !c.csv.empty();
        doc.update(report_json(rep, c.tol));
        out << doc.dump(2) << '\n';
    }
    return rep.passed(c.tol) ? 0 : 1;
}

int cmd_embed(const RunConfig& c, std::ostream& out) {
    if (c.points < 1) throw UsageError("--points must be positive");
    if (!(c.step > 0.0)) throw UsageError("--step must be positive");
    const RadialBundle five = build_5d_mode(c.mass_sq, c.n, c.j, wave_type_from_string(c.type));
    if (std::abs(c.m) > c.j) throw UsageError("|m| must not exceed j");
    const auto checks = geometry_checks(five, c.m, c.seed, c.points, c.step);
    print_checks(out, checks, c.format);
    return all_passed(checks) ? 0 : 1;
}

void dump_matrix(json& doc, std::ostream* csv, const std::string& name, const auto& mat) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < mat.rows(); ++i) {
        json rr = json::array(), ri = json::array();
        for (int k = 0; k < mat.cols(); ++k) {
            const cplx z = mat(i, k);
            rr.push_back(z.real());
            ri.push_back(z.imag());
            if (csv && z != cplx(0.0))
                *csv << name << ',' << i << ',' << k << ',' << format_double(z.real()) << ','
                     << format_double(z.imag()) << '\n';
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    doc[name] = {{"re", re}, {"im", im}};
}

int cmd_dump_algebra(const RunConfig& c, std::ostream& out) {
    std::ostringstream csv;
    std::ostream* cp = c.format == "json" ? nullptr : &csv;
    json mats = json::object();
    for (int a = 0; a < 4; ++a) dump_matrix(mats, cp, "beta" + std::to_string(a), build_beta(a));
    const char* names = "0123";
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            dump_matrix(mats, cp, std::string("J") + names[a] + names[b], build_generator(a, b));
    dump_matrix(mats, cp, "P_massless", build_massless_projector());
    const RSMatrices rs = build_rs_matrices();
    for (int k = 0; k < 3; ++k) {
        const std::string s = std::to_string(k + 1);
        dump_matrix(mats, cp, "tau" + s, rs.tau[k].cast<cplx>().eval());
        dump_matrix(mats, cp, "tau_cyclic" + s, rs.s_cyclic[k]);
        dump_matrix(mats, cp, "alpha" + s, rs.alpha[k]);
        dump_matrix(mats, cp, "alpha_cyclic" + s, rs.alpha_cyclic[k]);
    }
    dump_matrix(mats, cp, "U", rs.U);
    dump_matrix(mats, cp, "U_inv", rs.U_inv);
    if (c.format == "json") {
        out << json{{"schema", 1}, {"matrices", mats}}.dump() << '\n';
    } else {
        out << "matrix,row,col,re,im\n" << csv.str();
    }
    return 0;
}

int cmd_selftest(std::ostream& out) {
    bool ok = false;
    out << selftest_report(ok);
    return ok ? 0 : 1;
}

}  // namespace

std::string selftest_report(bool& ok) {
    std::vector<Check> checks;
    const double tol = 1e-7;
    checks.push_back({"DKP trilinear identity", verify_trilinear().max(), 1e-12});
    checks.push_back({"DKP commutators", verify_commutators().max(), 1e-12});
    checks.push_back({"DKP block products", verify_block_products().max(), 1e-12});
    checks.push_back({"RS matrices", verify_rs_matrices(build_rs_matrices()).max(), 1e-14});
    {
        const auto th = interior_theta_grid(50);
        double w = 0.0;
        for (int j = 1; j <= 6; ++j)
            for (int m = -j; m <= j; ++m) w = std::max(w, verify_recursions(j, m, th).max());
        checks.push_back({"Wigner recursions j<=6", w, tol});
        double a = 0.0;
        for (int j = 1; j <= 4; ++j)
            for (int m = -j; m <= j; ++m) a = std::max(a, angular_action_check(j, m, th).max());
        checks.push_back({"RS angular action j<=4", a, 1e-6});
    }
    {
        const LevelTable t = build_level_table(8);
        double bad = 0.0;
        for (const auto& r : t.rows)
            if (2 * r.n + orbital_index(r.type, r.j) != r.N) bad += 1.0;
        checks.push_back({"level table rule N = 2n + l", bad, 0.0});
    }
    const auto nodes = Grid{}.nodes();
    for (double ms : {0.75, 2.0, 6.0}) {
        double dkp = 0.0, five = 0.0, quant = 0.0;
        for (int n = 0; n <= 2; ++n) {
            for (int j = 0; j <= 3; ++j)
                for (WaveType t : {WaveType::J, WaveType::J_PLUS, WaveType::J_MINUS}) {
                    if (j == 0 && t != WaveType::J_PLUS) continue;
                    const ModeSpec s = ModeSpec::massive(ms, n, j, t);
                    dkp = std::max(dkp, verify_all(build_dkp_wave(s), nodes).max());
                    const double expect = 2.0 * n + orbital_index(t, j) + 1.5 + std::sqrt(ms + 0.25);
                    quant = std::max(quant, std::abs(s.epsilon - expect));
                    if (j >= 1 || t == WaveType::J_PLUS)
                        five = std::max(five, verify_all(build_5d_mode(ms, n, j, t), nodes).max());
                }
            dkp = std::max(dkp, verify_all(build_j0_mode(ms, n), nodes).max());
        }
        checks.push_back({"DKP mode residuals mass_sq=" + format_double(ms), dkp, tol});
        checks.push_back({"5D mode residuals mass_sq=" + format_double(ms), five, tol});
        checks.push_back({"quantization mass_sq=" + format_double(ms), quant, 1e-12});
    }
    {
        double ml = 0.0;
        for (int n = 0; n <= 2; ++n) {
            for (int j = 1; j <= 3; ++j)
                for (WaveType t : {WaveType::J, WaveType::J_PLUS, WaveType::J_MINUS})
                    ml = std::max(ml, verify_all(build_massless_wave(t, n, j), nodes).max());
            ml = std::max(ml, verify_all(build_massless_gauge_j0(gauge_j0_epsilon(n)), nodes).max());
        }
        checks.push_back({"massless DKP residuals", ml, tol});
    }
    {
        double rs = 0.0, dep = 0.0;
        for (int n = 0; n <= 3; ++n)
            for (int j = 1; j <= 4; ++j) {
                const PhotonMode pm = build_photon_mode(n, j);
                rs = std::max(rs, verify_all(pm.bundle, nodes).max());
                dep = std::max(dep, rs_dependence_check(j, pm.omega, nodes).max());
            }
        checks.push_back({"photon residuals", rs, 1e-8});
        checks.push_back({"photon equation (1) dependence", dep, 1e-10});
    }
    for (const auto& c : geometry_checks(build_5d_mode(2.0, 1, 2, WaveType::J_PLUS), 1, 20240611, 1000, 1e-4))
        checks.push_back(c);

    std::ostringstream os;
    int passed = 0;
    for (const auto& c : checks) {
        os << (c.passed() ? "PASS  " : "FAIL  ") << c.name << "  max=" << fmt_e(c.value)
           << "  limit=" << fmt_e(c.threshold) << '\n';
        passed += c.passed();
    }
    os << "selftest: " << passed << '/' << checks.size() << " passed\n";
    ok = passed == static_cast<int>(checks.size());
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    try {
        c.tol = default_tolerance();
        c.tol_given = std::getenv("ADS_SPIN1_TOL") && *std::getenv("ADS_SPIN1_TOL");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    CLI::App app{"Spin-1 fields on anti de Sitter space: spectra, modes and residual checks", "ads-spin1"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "energy eigenvalue of one mode");
    add_common(spectrum, c);
    spectrum->add_option("--curvature-radius", c.curvature_radius, "curvature radius for dimensionful energies");

    auto* table = app.add_subcommand("table", "degeneracy table of the levels N = 2n + l");
    table->add_option("--n-max", c.n_max, "largest N")->check(CLI::Range(1, 1000));
    table->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* mode = app.add_subcommand("mode", "tabulate the radial components of a mode");
    add_common(mode, c);
    mode->add_option("--grid", c.grid, "r_min,r_max,points (log spaced)");
    mode->add_option("--csv", c.csv, "also write the profile CSV to this file");

    auto* photon = app.add_subcommand("photon", "photon mode of the complex Maxwell system");
    photon->add_option("--n", c.n, "radial quantum number");
    photon->add_option("--j", c.j, "total angular momentum (>= 1)");
    photon->add_option("--m", c.m, "magnetic quantum number");
    photon->add_option("--grid", c.grid, "r_min,r_max,points (log spaced)");
    photon->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    photon->add_option("--csv", c.csv, "also write the profile CSV to this file");

    auto* verify = app.add_subcommand("verify", "residuals of the radial equations for one mode");
    add_common(verify, c);
    verify->add_option("--equations", c.equations, "all or a comma-separated list of equation ids");
    verify->add_option("--grid", c.grid, "r_min,r_max,points (log spaced)");
    auto* tol_opt = verify->add_option("--tol", c.tol, "pass threshold (default 1e-7, 1e-4 with --csv)")
                        ->check(CLI::PositiveNumber);
    verify->add_option("--csv", c.csv, "verify tabulated values read from this CSV");

    auto* embed = app.add_subcommand("embed", "5D embedding checks for a 5D vector mode");
    add_common(embed, c);
    embed->add_option("--seed", c.seed, "seed of the random sample points");
    embed->add_option("--points", c.points, "number of random points");
    embed->add_option("--step", c.step, "finite-difference step of the J50 check");

    auto* dump = app.add_subcommand("dump-algebra", "print the DKP and Riemann-Silberstein matrices");
    dump->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* selftest = app.add_subcommand("selftest", "run the full invariant suite");

    std::vector<const char*> argv{"ads-spin1"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*spectrum) return cmd_spectrum(c, out);
        if (*table) return cmd_table(c, out);
        if (*mode) return cmd_mode(c, out, err);
        if (*photon) return cmd_photon(c, out, err);
        if (*verify) {
            if (tol_opt->count() > 0) c.tol_given = true;
            return cmd_verify(c, out);
        }
        if (*embed) return cmd_embed(c, out);
        if (*dump) return cmd_dump_algebra(c, out);
        if (*selftest) return cmd_selftest(out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace ads
