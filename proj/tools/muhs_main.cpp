// Command-line front end: parses flags (optionally merged over a JSON
// config file), dispatches to the library, and emits CSV fields plus a
// JSON run report.  No numerics live here.

#include "muhs/halfline_ops.hpp"
#include "muhs/io.hpp"
#include "muhs/oracle.hpp"
#include "muhs/profiles.hpp"
#include "muhs/solvers.hpp"
#include "muhs/symbol.hpp"
#include "muhs/traces.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using muhs::cplx;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::set<std::string> known_keys = {
    "a",          "sigma",      "grid_n",     "grid_l",      "f_spec",
    "phi",        "psi",        "g_spec",     "strategy",    "out",
    "format",     "seed",       "tail_tol",   "window_lo",   "window_hi",
    "resolutions","symbol",     "mu",         "dimension",   "fd_step",
    "tol",        "m",          "circumference", "kind",     "boundary_spec",
    "box_points", "nodes_used"};

std::string flag_to_key(const std::string& flag) {
    std::string key = flag.substr(2);
    for (char& c : key)
        if (c == '-') c = '_';
    return key;
}

struct RawConfig {
    std::string command;
    std::map<std::string, std::string> kv;

    bool has(const std::string& key) const { return kv.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback) const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    }
};

double parse_real_literal(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("invalid number for " + what + ": '" + s + "'");
    }
}

double parse_real(const RawConfig& cfg, const std::string& key, double fallback) {
    if (!cfg.has(key)) return fallback;
    return parse_real_literal(cfg.kv.at(key), "--" + key);
}

int parse_int(const RawConfig& cfg, const std::string& key, int fallback) {
    if (!cfg.has(key)) return fallback;
    const std::string& s = cfg.kv.at(key);
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("invalid integer for --" + key + ": '" + s + "'");
    }
}

cplx parse_complex_flag(const RawConfig& cfg, const std::string& key, cplx fallback) {
    if (!cfg.has(key)) return fallback;
    try {
        return muhs::parse_complex(cfg.kv.at(key));
    } catch (const std::exception& e) {
        throw UsageError(std::string(e.what()) + " (for --" + key + ")");
    }
}

cplx parse_order(const RawConfig& cfg) {
    cplx a = parse_complex_flag(cfg, "a", cplx(0.5, 0.0));
    if (!(a.real() > 0.0) || !(a.real() < 1.0))
        throw UsageError("--a " + cfg.get("a", "0.5") +
                         ": order outside (0,1) strip");
    return a;
}

muhs::Profile parse_profile_flag(const RawConfig& cfg, const std::string& key,
                                 const std::string& fallback) {
    try {
        return muhs::Profile::parse(cfg.get(key, fallback));
    } catch (const std::exception& e) {
        throw UsageError(std::string(e.what()) + " (for --" + key + ")");
    }
}

muhs::HalfLineGrid make_grid(const RawConfig& cfg, double sigma) {
    int n = parse_int(cfg, "grid_n", 1024);
    std::string l = cfg.get("grid_l", "auto");
    if (l == "auto") return muhs::HalfLineGrid::auto_sized(sigma, n);
    return muhs::HalfLineGrid::with_length(n, parse_real_literal(l, "--grid-l"));
}

RawConfig load_config(int argc, char** argv) {
    RawConfig cfg;
    if (argc < 2) throw UsageError("missing command");
    cfg.command = argv[1];

    std::map<std::string, std::string> flags;
    std::string config_path;
    for (int i = 2; i < argc; ++i) {
        std::string flag = argv[i];
        if (flag.rfind("--", 0) != 0)
            throw UsageError("unexpected argument '" + flag + "'");
        if (i + 1 >= argc) throw UsageError("flag " + flag + " needs a value");
        std::string value = argv[++i];
        if (flag == "--config") {
            config_path = value;
            continue;
        }
        std::string key = flag_to_key(flag);
        if (!known_keys.count(key))
            throw UsageError("unknown flag " + flag);
        flags[key] = value;
    }

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw UsageError("cannot open config file '" + config_path + "'");
        json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw UsageError("config file parse error: " + std::string(e.what()));
        }
        if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (!known_keys.count(it.key()))
                throw UsageError("unknown config key '" + it.key() + "'");
            if (it.value().is_string())
                cfg.kv[it.key()] = it.value().get<std::string>();
            else if (it.value().is_number_integer())
                cfg.kv[it.key()] = std::to_string(it.value().get<long long>());
            else if (it.value().is_number())
                cfg.kv[it.key()] = muhs::format_complex(it.value().get<double>());
            else
                throw UsageError("config key '" + it.key() +
                                 "' must be a string or number");
        }
    }
    for (const auto& [k, v] : flags) cfg.kv[k] = v; // flags win
    return cfg;
}

json trace_json(const muhs::TraceFit& t) {
    json j;
    j["value_re"] = t.value.real();
    j["value_im"] = t.value.imag();
    j["slope_re"] = t.slope.real();
    j["slope_im"] = t.slope.imag();
    j["fit_residual"] = t.fit_residual;
    j["nodes_used"] = t.nodes_used;
    return j;
}

json exponent_json(const muhs::ExponentFit& f) {
    json j;
    j["exponent"] = f.exponent;
    j["coefficient_re"] = f.coefficient.real();
    j["coefficient_im"] = f.coefficient.imag();
    j["r_squared"] = f.r_squared;
    j["window_lo"] = f.window_lo;
    j["window_hi"] = f.window_hi;
    return j;
}

json config_echo(const RawConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    for (const auto& key :
         {"a", "sigma", "grid_n", "grid_l", "f_spec", "phi", "psi", "g_spec",
          "strategy", "out", "format", "seed", "tail_tol", "window_lo",
          "window_hi", "resolutions", "symbol", "mu", "dimension", "fd_step",
          "tol", "m", "circumference", "kind", "boundary_spec", "box_points",
          "nodes_used"})
        if (cfg.has(key)) j[key] = cfg.kv.at(key);
    return j;
}

// || forward(u - k gamma0(u)) - f || / || f || over the interior window;
// removing the kernel part (its coefficient is validated by the traces)
// keeps the quadrature noise of the boundary singularity out of the metric.
double interior_residual(const muhs::GridFn& u, const muhs::GridFn& f,
                         const muhs::ModeParams& mode) {
    cplx coef = muhs::gamma0_weighted(u, mode).value;
    muhs::GridFn deflated =
        u - coef * muhs::poisson_dirichlet(1.0, mode, u.grid);
    muhs::GridFn fwd = muhs::forward_op(deflated, mode);
    const double length = u.grid.length();
    double num = 0.0, den = 0.0;
    for (int i = 0; i < u.grid.n; ++i) {
        double x = u.grid.x(i);
        if (x < 0.05 * length || x >= 0.95 * length) continue;
        num += std::norm(fwd.values[i] - f.values[i]);
        den += std::norm(f.values[i]);
    }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

// Default fit window: from the first node out to 12 spacings (at least
// 1% of the box), staying inside the region where the boundary power law
// dominates the smooth remainder.
std::optional<muhs::ExponentFit> try_exponent_fit(const muhs::GridFn& u,
                                                  const RawConfig& cfg) {
    double lo = parse_real(cfg, "window_lo", u.grid.h);
    double hi = parse_real(
        cfg, "window_hi",
        std::max(12.0 * u.grid.h, 0.01 * u.grid.length()));
    try {
        return muhs::fit_boundary_exponent(u, lo, hi);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

void emit(const RawConfig& cfg, json& report, const muhs::GridFn* field,
          std::chrono::steady_clock::time_point t0) {
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    report["wall_time_ms"] = ms;

    std::string out = cfg.get("out", "");
    if (!out.empty()) {
        if (field) muhs::write_gridfn_csv(out + ".csv", *field);
        std::ofstream jf(out + ".json");
        jf << report.dump(2) << "\n";
    }

    std::string format = cfg.get("format", "json");
    if (format == "csv") {
        if (field) muhs::write_gridfn_csv(std::cout, *field);
    } else if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        throw UsageError("unknown format '" + format + "'");
    }
}

int cmd_solve_dirichlet(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cplx a = parse_order(cfg);
    double sigma = parse_real(cfg, "sigma", 1.0);
    muhs::ModeParams mode(a, sigma);
    auto grid = make_grid(cfg, sigma);
    muhs::GridFn f = muhs::sample_profile(
        parse_profile_flag(cfg, "f_spec", "const:0"), grid);
    cplx phi = parse_complex_flag(cfg, "phi", cplx(0.0, 0.0));
    double tail_tol = parse_real(cfg, "tail_tol", 1e-10);

    double tail_bound = 0.0;
    muhs::GridFn u =
        muhs::solve_dirichlet_nonhom(f, phi, mode, tail_tol, &tail_bound);

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    report["tail_bound"] = tail_bound;
    report["forward_residual"] = interior_residual(u, f, mode);
    auto g0 = muhs::gamma0_weighted(u, mode);
    auto g1 = muhs::gamma1_weighted(u, mode);
    report["trace_values"] = {{"gamma0", trace_json(g0)}, {"gamma1", trace_json(g1)}};
    if (auto fit = try_exponent_fit(u, cfg)) report["exponent_fit"] = exponent_json(*fit);
    if (g0.ill_conditioned || g1.ill_conditioned)
        report["warnings"] = json::array({"trace fit residual above threshold"});

    emit(cfg, report, &u, t0);
    return 0;
}

int cmd_solve_neumann(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cplx a = parse_order(cfg);
    double sigma = parse_real(cfg, "sigma", 1.0);
    muhs::ModeParams mode(a, sigma);
    auto grid = make_grid(cfg, sigma);
    muhs::GridFn f = muhs::sample_profile(
        parse_profile_flag(cfg, "f_spec", "const:0"), grid);
    cplx psi = parse_complex_flag(cfg, "psi", cplx(0.0, 0.0));
    double tail_tol = parse_real(cfg, "tail_tol", 1e-10);

    double tail_bound = 0.0;
    muhs::GridFn u = muhs::solve_neumann(f, psi, mode, tail_tol, &tail_bound);

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    report["tail_bound"] = tail_bound;
    report["forward_residual"] = interior_residual(u, f, mode);
    auto g0 = muhs::gamma0_weighted(u, mode);
    auto g1 = muhs::gamma1_weighted(u, mode);
    report["trace_values"] = {{"gamma0", trace_json(g0)}, {"gamma1", trace_json(g1)}};
    if (auto fit = try_exponent_fit(u, cfg)) report["exponent_fit"] = exponent_json(*fit);

    emit(cfg, report, &u, t0);
    return 0;
}

int cmd_solve_exterior(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cplx a = parse_order(cfg);
    double sigma = parse_real(cfg, "sigma", 1.0);
    muhs::ModeParams mode(a, sigma);
    auto grid = make_grid(cfg, sigma);

    muhs::ExteriorData data{
        muhs::sample_profile(parse_profile_flag(cfg, "f_spec", "const:0"), grid),
        muhs::sample_profile(parse_profile_flag(cfg, "g_spec", "const:0"), grid),
        muhs::ExteriorData::Strategy::zero};
    std::string strategy = cfg.get("strategy", "zero");
    if (strategy == "reflection")
        data.strategy = muhs::ExteriorData::Strategy::reflection;
    else if (strategy != "zero")
        throw UsageError("unknown strategy '" + strategy + "'");
    double tail_tol = parse_real(cfg, "tail_tol", 1e-10);

    muhs::GridFn U = muhs::solve_exterior(data, mode, tail_tol);

    // interior residual of the whole-line solution after removing the
    // kernel carried by its interior part
    muhs::GridFn u_int = muhs::restrict_plus(U);
    cplx coef = muhs::gamma0_weighted(u_int, mode).value;
    muhs::GridFn deflated =
        U - muhs::extend_by_zero(coef * muhs::poisson_dirichlet(1.0, mode, grid));
    muhs::GridFn fwd = muhs::restrict_plus(muhs::forward_op_wholeline(deflated, mode));
    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        double x = grid.x(i);
        if (x < 0.05 * grid.length() || x >= 0.95 * grid.length()) continue;
        num += std::norm(fwd.values[i] - data.f.values[i]);
        den += std::norm(data.f.values[i]);
    }

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    report["forward_residual"] = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    auto g0 = muhs::gamma0_weighted(u_int, mode);
    report["trace_values"] = {{"gamma0", trace_json(g0)}};
    if (auto fit = try_exponent_fit(u_int, cfg))
        report["exponent_fit"] = exponent_json(*fit);

    emit(cfg, report, &U, t0);
    return 0;
}

int cmd_solve_halfplane(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    muhs::HalfPlaneProblem prob;
    prob.order = parse_order(cfg);
    int m = parse_int(cfg, "m", 16);
    if (m <= 0) throw UsageError("--m must be positive");
    double circ = parse_real(cfg, "circumference", 6.283185307179586);
    auto grid = make_grid(cfg, 1.0); // modes start at sigma = 1
    prob.grid = muhs::HalfPlaneGrid{m, circ / m, grid};
    prob.tail_tol = parse_real(cfg, "tail_tol", 1e-10);

    std::string kind = cfg.get("kind", "hom");
    if (kind == "hom")
        prob.kind = muhs::HalfPlaneKind::dirichlet_hom;
    else if (kind == "dirichlet")
        prob.kind = muhs::HalfPlaneKind::dirichlet_nonhom;
    else if (kind == "neumann")
        prob.kind = muhs::HalfPlaneKind::neumann;
    else
        throw UsageError("unknown kind '" + kind + "'");

    if (cfg.has("f_spec")) {
        muhs::GridFn shape =
            muhs::sample_profile(parse_profile_flag(cfg, "f_spec", "const:0"), grid);
        prob.interior_data.resize(static_cast<size_t>(m) * grid.n);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < grid.n; ++k)
                prob.interior_data[static_cast<size_t>(i) * grid.n + k] =
                    shape.values[k];
    }
    if (cfg.has("boundary_spec")) {
        muhs::Profile bp = parse_profile_flag(cfg, "boundary_spec", "const:0");
        prob.boundary_data.resize(m);
        for (int i = 0; i < m; ++i)
            prob.boundary_data[i] = bp(i * prob.grid.h_tangential);
    }

    muhs::HalfPlaneField field = muhs::solve_halfplane(prob);

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    report["modes"] = m;
    report["normal_points"] = grid.n;

    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    report["wall_time_ms"] = ms;

    std::string out = cfg.get("out", "");
    if (!out.empty()) {
        muhs::write_halfplane_csv(out + "_re.csv", out + "_im.csv", field);
        std::ofstream jf(out + ".json");
        jf << report.dump(2) << "\n";
    }
    if (cfg.get("format", "json") == "json") std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_dtn(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cplx a = parse_order(cfg);
    double sigma = parse_real(cfg, "sigma", 1.0);
    muhs::ModeParams mode(a, sigma);
    cplx value = muhs::dtn_symbol(mode);

    if (cfg.get("format", "plain") == "json") {
        json report;
        report["command"] = cfg.command;
        report["config"] = config_echo(cfg);
        report["dtn_re"] = value.real();
        report["dtn_im"] = value.imag();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        report["wall_time_ms"] = ms;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << muhs::format_complex(value) << "\n";
    }
    return 0;
}

muhs::SymbolSpec parse_symbol(const std::string& text, int dimension) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "abs2a") {
        if (arg.empty()) throw UsageError("symbol abs2a needs a parameter, e.g. abs2a:0.3");
        return muhs::SymbolSpec::abs2a(muhs::parse_complex(arg), dimension);
    }
    if (name == "halfplane_plus") return muhs::SymbolSpec::halfplane_plus(dimension);
    if (name == "halfplane_minus") return muhs::SymbolSpec::halfplane_minus(dimension);
    throw UsageError("unknown symbol '" + text + "'");
}

int cmd_check_transmission(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (!cfg.has("symbol")) throw UsageError("check-transmission needs --symbol");
    if (!cfg.has("mu")) throw UsageError("check-transmission needs --mu");
    int dimension = parse_int(cfg, "dimension", 2);
    muhs::SymbolSpec spec = parse_symbol(cfg.kv.at("symbol"), dimension);
    cplx mu = parse_complex_flag(cfg, "mu", cplx(0.0, 0.0));
    double fd_step = parse_real(cfg, "fd_step", 1e-4);
    double tol = parse_real(cfg, "tol", 1e-6);

    std::vector<double> normal(dimension, 0.0);
    normal.back() = 1.0;
    muhs::TransmissionReport rep =
        muhs::check_mu_transmission(spec, mu, normal, fd_step, tol);

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    report["passes"] = rep.passes;
    report["tolerance_used"] = rep.tolerance_used;
    json rows = json::array();
    for (const auto& e : rep.residuals) {
        json row;
        row["degree_j"] = e.degree_j;
        row["alpha"] = e.alpha;
        row["residual"] = e.residual;
        rows.push_back(row);
    }
    report["residuals"] = rows;

    if (cfg.get("format", "plain") == "json") {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        report["wall_time_ms"] = ms;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << (rep.passes ? "PASS" : "FAIL") << "\n";
        for (const auto& e : rep.residuals) {
            std::cout << "  term " << e.degree_j << " alpha (";
            for (size_t i = 0; i < e.alpha.size(); ++i)
                std::cout << e.alpha[i] << (i + 1 < e.alpha.size() ? "," : "");
            std::cout << ") residual " << e.residual << "\n";
        }
    }
    return 0;
}

int cmd_fit_exponent(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cplx a = parse_order(cfg);
    double sigma = parse_real(cfg, "sigma", 1.0);
    muhs::ModeParams mode(a, sigma);
    auto grid = make_grid(cfg, sigma);
    muhs::GridFn f = muhs::sample_profile(
        parse_profile_flag(cfg, "f_spec", "const:0"), grid);
    double tail_tol = parse_real(cfg, "tail_tol", 1e-10);
    muhs::GridFn u = muhs::solve_dirichlet_hom(f, mode, tail_tol);

    double lo = parse_real(cfg, "window_lo", grid.h);
    double hi = parse_real(cfg, "window_hi",
                           std::max(12.0 * grid.h, 0.01 * grid.length()));
    muhs::ExponentFit fit = muhs::fit_boundary_exponent(u, lo, hi);

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    report["exponent_fit"] = exponent_json(fit);
    emit(cfg, report, &u, t0);
    return 0;
}

int cmd_oracle_compare(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cplx a = parse_order(cfg);
    double sigma = parse_real(cfg, "sigma", 1.0);
    muhs::ModeParams mode(a, sigma);
    auto grid = make_grid(cfg, sigma);
    muhs::GridFn f = muhs::sample_profile(
        parse_profile_flag(cfg, "f_spec", "const:0"), grid);
    double tail_tol = parse_real(cfg, "tail_tol", 1e-10);
    int box_points = parse_int(cfg, "box_points", 0);

    muhs::GridFn u = muhs::solve_dirichlet_hom(f, mode, tail_tol);
    double cond = 0.0;
    muhs::GridFn ref = muhs::dense_oracle_dirichlet(f, mode, box_points, &cond);

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    report["oracle_error"] = muhs::relative_l2_error(u, ref);
    report["condition_estimate"] = cond;
    emit(cfg, report, &u, t0);
    return 0;
}

int cmd_convergence(const RawConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cplx a = parse_order(cfg);
    double sigma = parse_real(cfg, "sigma", 1.0);
    muhs::ModeParams mode(a, sigma);
    muhs::Profile prof = parse_profile_flag(cfg, "f_spec", "gaussian:1,9");
    double tail_tol = parse_real(cfg, "tail_tol", 1e-10);

    std::string l = cfg.get("grid_l", "auto");
    double length = l == "auto" ? 36.0 / sigma : parse_real_literal(l, "--grid-l");

    std::vector<int> resolutions;
    std::stringstream ss(cfg.get("resolutions", "256,512,1024"));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            resolutions.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("invalid resolution '" + tok + "'");
        }
    }

    auto solve_at = [&](const muhs::HalfLineGrid& g) {
        return muhs::solve_dirichlet_hom(muhs::sample_profile(prof, g), mode,
                                         tail_tol);
    };
    muhs::ConvergenceStudy study =
        muhs::convergence_study(solve_at, length, resolutions);

    json report;
    report["command"] = cfg.command;
    report["config"] = config_echo(cfg);
    json rows = json::array();
    for (const auto& r : study.rows) {
        json row;
        row["n_points"] = r.n_points;
        row["error_vs_finest"] = r.error_vs_finest;
        row["observed_order"] = r.observed_order;
        rows.push_back(row);
    }
    report["rows"] = rows;
    report["monotone"] = study.monotone;
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    report["wall_time_ms"] = ms;
    std::string out = cfg.get("out", "");
    if (!out.empty()) {
        std::ofstream jf(out + ".json");
        jf << report.dump(2) << "\n";
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

void print_usage() {
    std::cerr <<
        "usage: muhs <command> [--flag value ...] [--config file.json]\n"
        "commands:\n"
        "  solve-dirichlet   --a A --sigma S [--grid-n N] [--grid-l L|auto]\n"
        "                    [--f-spec P] [--phi C] [--tail-tol T] [--out STEM]\n"
        "  solve-neumann     like solve-dirichlet with --psi C\n"
        "  solve-exterior    adds --g-spec P --strategy zero|reflection\n"
        "  solve-halfplane   --m M --circumference C --kind hom|dirichlet|neumann\n"
        "                    [--f-spec P] [--boundary-spec P]\n"
        "  dtn               --a A --sigma S\n"
        "  check-transmission --symbol abs2a:A|halfplane_plus|halfplane_minus --mu C\n"
        "  fit-exponent      like solve-dirichlet plus --window-lo/--window-hi\n"
        "  oracle-compare    like solve-dirichlet plus --box-points N\n"
        "  convergence       --resolutions 256,512,1024 [--f-spec P]\n"
        "profiles: exp:c | gaussian:c,x0 | const:v | poly:k\n"
        "complex literals: RE or RE+IMi (no spaces), e.g. 0.5+0.2i\n";
}

} // namespace

int main(int argc, char** argv) {
    try {
        RawConfig cfg = load_config(argc, argv);
        if (cfg.command == "solve-dirichlet") return cmd_solve_dirichlet(cfg);
        if (cfg.command == "solve-neumann") return cmd_solve_neumann(cfg);
        if (cfg.command == "solve-exterior") return cmd_solve_exterior(cfg);
        if (cfg.command == "solve-halfplane") return cmd_solve_halfplane(cfg);
        if (cfg.command == "dtn") return cmd_dtn(cfg);
        if (cfg.command == "check-transmission") return cmd_check_transmission(cfg);
        if (cfg.command == "fit-exponent") return cmd_fit_exponent(cfg);
        if (cfg.command == "oracle-compare") return cmd_oracle_compare(cfg);
        if (cfg.command == "convergence") return cmd_convergence(cfg);
        if (cfg.command == "--help" || cfg.command == "help") {
            print_usage();
            return 0;
        }
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_usage();
        return 1;
    } catch (const muhs::truncation_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const muhs::oracle_failure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
