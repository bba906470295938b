#include "muhs/symbol.hpp"
#include "muhs/special.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace muhs {

namespace {

const double pi = 3.14159265358979323846;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

std::vector<std::vector<double>> homogeneity_sample_points(int n) {
    // Fixed-seed samples away from the origin; construction-time check only.
    std::mt19937 rng(12345u);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<std::vector<double>> pts;
    while (pts.size() < 4) {
        std::vector<double> p(n);
        for (double& c : p) c = unif(rng);
        if (norm2(p) > 0.3) pts.push_back(std::move(p));
    }
    return pts;
}

} // namespace

cplx plus_symbol(double sigma, double xi_n, cplx mu) {
    if (!(sigma >= 1.0))
        throw std::domain_error("plus_symbol: sigma must be >= 1");
    return complex_power(cplx(sigma, xi_n), mu);
}

cplx minus_symbol(double sigma, double xi_n, cplx mu) {
    if (!(sigma >= 1.0))
        throw std::domain_error("minus_symbol: sigma must be >= 1");
    return complex_power(cplx(sigma, -xi_n), mu);
}

SymbolSpec::SymbolSpec(cplx order_m, std::vector<Term> terms, int dimension_n)
    : order_m_(order_m), terms_(std::move(terms)), dimension_n_(dimension_n) {
    if (dimension_n_ < 1)
        throw std::invalid_argument("SymbolSpec: dimension must be positive");
    if (terms_.empty())
        throw std::invalid_argument("SymbolSpec: at least one term required");

    auto pts = homogeneity_sample_points(dimension_n_);
    for (const auto& term : terms_) {
        if (term.degree_j < 0)
            throw std::invalid_argument("SymbolSpec: term degree must be nonnegative");
        if (!term.evaluator)
            throw std::invalid_argument("SymbolSpec: missing evaluator");
        cplx deg = order_m_ - static_cast<double>(term.degree_j);
        for (const auto& p : pts) {
            cplx base = term.evaluator(p);
            for (double t : {2.0, 3.0}) {
                std::vector<double> tp(p);
                for (double& c : tp) c *= t;
                cplx lhs = term.evaluator(tp);
                cplx rhs = complex_power(t, deg) * base;
                if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(rhs))) {
                    std::ostringstream os;
                    os << "SymbolSpec: term with degree index " << term.degree_j
                       << " is not homogeneous of the declared degree";
                    throw std::invalid_argument(os.str());
                }
            }
        }
    }
}

SymbolSpec SymbolSpec::abs2a(cplx a, int dimension_n) {
    Term t;
    t.degree_j = 0;
    t.evaluator = [a](const std::vector<double>& xi) {
        double s = 0.0;
        for (double c : xi) s += c * c;
        return complex_power(cplx(s, 0.0), a);
    };
    return SymbolSpec(2.0 * a, {t}, dimension_n);
}

SymbolSpec SymbolSpec::halfplane_plus(int dimension_n) {
    Term t;
    t.degree_j = 0;
    t.evaluator = [](const std::vector<double>& xi) {
        double s = 0.0;
        for (size_t i = 0; i + 1 < xi.size(); ++i) s += xi[i] * xi[i];
        return cplx(std::sqrt(s), xi.back());
    };
    return SymbolSpec(1.0, {t}, dimension_n);
}

SymbolSpec SymbolSpec::halfplane_minus(int dimension_n) {
    Term t;
    t.degree_j = 0;
    t.evaluator = [](const std::vector<double>& xi) {
        double s = 0.0;
        for (size_t i = 0; i + 1 < xi.size(); ++i) s += xi[i] * xi[i];
        return cplx(std::sqrt(s), -xi.back());
    };
    return SymbolSpec(1.0, {t}, dimension_n);
}

namespace {

cplx eval_or_report(const SymbolSpec::Term& term, const std::vector<double>& xi,
                    int j, const std::vector<int>& alpha) {
    try {
        return term.evaluator(xi);
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "check_mu_transmission: evaluator failed for term " << j
           << ", alpha = (";
        for (size_t i = 0; i < alpha.size(); ++i)
            os << alpha[i] << (i + 1 < alpha.size() ? "," : "");
        os << "): " << e.what();
        throw std::runtime_error(os.str());
    }
}

// Central finite difference of the term along component `dir` (dir < 0
// means no derivative).
cplx term_derivative(const SymbolSpec::Term& term, const std::vector<double>& at,
                     int dir, double fd_step, int j, const std::vector<int>& alpha) {
    if (dir < 0) return eval_or_report(term, at, j, alpha);
    std::vector<double> lo(at), hi(at);
    lo[dir] -= fd_step;
    hi[dir] += fd_step;
    return (eval_or_report(term, hi, j, alpha) - eval_or_report(term, lo, j, alpha)) /
           (2.0 * fd_step);
}

} // namespace

TransmissionReport check_mu_transmission(const SymbolSpec& spec, cplx mu,
                                         const std::vector<double>& normal,
                                         double fd_step, double tol) {
    const int n = spec.dimension_n();
    if (static_cast<int>(normal.size()) != n)
        throw std::invalid_argument("check_mu_transmission: normal has wrong dimension");
    if (std::abs(norm2(normal) - 1.0) > 1e-9)
        throw std::invalid_argument("check_mu_transmission: normal must be a unit vector");
    if (!(fd_step > 0.0) || !(tol > 0.0))
        throw std::invalid_argument("check_mu_transmission: fd_step and tol must be positive");

    std::vector<double> minus_normal(normal);
    for (double& c : minus_normal) c = -c;

    TransmissionReport report;
    report.tolerance_used = tol;
    report.passes = true;

    for (const auto& term : spec.terms()) {
        // alpha = 0 first, then each first derivative
        for (int dir = -1; dir < n; ++dir) {
            std::vector<int> alpha(n, 0);
            int alpha_order = 0;
            if (dir >= 0) {
                alpha[dir] = 1;
                alpha_order = 1;
            }
            cplx at_plus = term_derivative(term, normal, dir, fd_step,
                                           term.degree_j, alpha);
            cplx at_minus = term_derivative(term, minus_normal, dir, fd_step,
                                            term.degree_j, alpha);
            cplx phase = std::exp(cplx(0.0, pi) *
                                  (spec.order_m() - 2.0 * mu -
                                   static_cast<double>(term.degree_j) -
                                   static_cast<double>(alpha_order)));
            double residual = std::abs(at_minus - phase * at_plus) /
                              std::max(1.0, std::abs(at_plus));
            report.residuals.push_back({term.degree_j, alpha, residual});
            if (residual > tol) report.passes = false;
        }
    }
    return report;
}

} // namespace muhs
