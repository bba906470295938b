// Acceptance gate: ten end-to-end properties of the factorization solver.
// Each criterion prints exactly one pass/fail line with the measured
// quantities; the process exit code is the number of failing criteria.

#include "muhs/io.hpp"
#include "muhs/oracle.hpp"
#include "muhs/profiles.hpp"
#include "muhs/solvers.hpp"
#include "muhs/special.hpp"
#include "muhs/symbol.hpp"
#include "muhs/traces.hpp"

#include "quadrature_oracle.hpp"
#include "test_util.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using muhs::cplx;

namespace {

int failures = 0;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

void report(int index, bool ok, const std::string& name,
            const std::string& details) {
    std::printf("criterion %2d [%s] %s: %s\n", index, ok ? "pass" : "fail",
                name.c_str(), details.c_str());
    if (!ok) ++failures;
}

void run_criterion(int index, const std::string& name,
                   const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, details] = body();
        report(index, ok, name, details);
    } catch (const std::exception& e) {
        report(index, false, name, std::string("exception: ") + e.what());
    }
}

// Causal order reduction of exponential data has the closed form
//   u(x) = e^{-c x} (sigma - c)^{-a} P(a, (sigma - c) x),
// valid for c < sigma.
cplx closed_causal(cplx a, double sigma, double c, double x) {
    double s = sigma - c;
    return std::exp(-c * x) * muhs::complex_power(cplx(s, 0.0), -a) *
           muhs::lower_gamma_regularized(a, s * x);
}

muhs::GridFn sample_closed_causal(cplx a, double sigma, double c,
                                  const muhs::HalfLineGrid& grid) {
    std::vector<cplx> vals(grid.n);
    for (int i = 0; i < grid.n; ++i) vals[i] = closed_causal(a, sigma, c, grid.x(i));
    return muhs::GridFn(grid, muhs::GridFn::Support::plus, std::move(vals));
}

// --- 1: pointwise factorization identity of the one-sided symbols --------

std::pair<bool, std::string> factorization_identity() {
    std::mt19937 rng(20260819u);
    std::uniform_real_distribution<double> sig(1.0, 12.0);
    std::uniform_real_distribution<double> xi(-20.0, 20.0);
    std::uniform_real_distribution<double> re(0.05, 0.95);
    std::uniform_real_distribution<double> im(-0.5, 0.5);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        double sigma = sig(rng), xin = xi(rng);
        cplx a(re(rng), im(rng));
        cplx prod = muhs::plus_symbol(sigma, xin, a) *
                    muhs::minus_symbol(sigma, xin, a);
        cplx want =
            muhs::complex_power(cplx(sigma * sigma + xin * xin, 0.0), a);
        worst = std::max(worst, std::abs(prod - want) / std::abs(want));
    }
    return {worst <= 1e-12,
            "max relative deviation " + sci(worst) + " over 1000 samples (tol 1e-12)"};
}

// --- 2: causal order reduction matches its closed form and refines -------

std::pair<bool, std::string> closed_form_refinement() {
    const double sigma = 2.0, c = 0.01, length = 18.0;
    const std::vector<int> ns = {256, 512, 1024, 2048};
    bool ok = true;
    double worst_final = 0.0, worst_order = 10.0, worst_quad = 0.0;
    for (double a : {0.25, 0.5, 0.75}) {
        muhs::ModeParams mode(a, sigma);

        // independent quadrature check of the closed form itself
        double x0 = 1.0;
        cplx g = muhs::gamma_cplx(cplx(a, 0.0));
        cplx quad = muhs_test::tanh_sinh(
            [&](double t, double, double dhi) {
                return std::pow(dhi, a - 1.0) * std::exp(-sigma * dhi) *
                       std::exp(-c * t) / g;
            },
            0.0, x0, 1e-13);
        double qdev = std::abs(quad - closed_causal(a, sigma, c, x0)) /
                      std::abs(closed_causal(a, sigma, c, x0));
        worst_quad = std::max(worst_quad, qdev);
        if (qdev > 1e-10) ok = false;

        std::vector<double> errs;
        for (int n : ns) {
            auto grid = muhs::HalfLineGrid::with_length(n, length);
            muhs::GridFn f =
                muhs::sample_profile(muhs::Profile::parse("exp:0.01"), grid);
            muhs::GridFn u = muhs::xi_plus_neg(f, mode);
            errs.push_back(
                muhs::relative_l2_error(u, sample_closed_causal(a, sigma, c, grid)));
        }
        for (size_t i = 0; i + 1 < errs.size(); ++i) {
            if (!(errs[i + 1] < errs[i])) ok = false;
            worst_order = std::min(worst_order, std::log2(errs[i] / errs[i + 1]));
        }
        worst_final = std::max(worst_final, errs.back());
    }
    ok = ok && worst_order >= 1.5 && worst_final <= 1e-5;
    return {ok, "finest relative error " + sci(worst_final) +
                    " (tol 1e-5), slowest observed order " + sci(worst_order) +
                    " (need 1.5), closed form vs quadrature " + sci(worst_quad)};
}

// --- 3: factorization solver against the dense spectral reference --------

std::pair<bool, std::string> oracle_agreement() {
    const double length = 18.0;
    const int n = 1024;
    double worst_gauss = 0.0, worst_exp = 0.0;
    for (double sigma : {1.0, 2.0})
        for (double a : {0.25, 0.5, 0.75}) {
            muhs::ModeParams mode(a, sigma);
            auto grid = muhs::HalfLineGrid::with_length(n, length);
            for (const char* spec : {"gaussian:1,4.5", "exp:2"}) {
                muhs::GridFn f =
                    muhs::sample_profile(muhs::Profile::parse(spec), grid);
                muhs::GridFn u = muhs::solve_dirichlet_hom(f, mode);
                muhs::GridFn ref = muhs::dense_oracle_dirichlet(f, mode);
                double err = muhs::relative_l2_error(u, ref);
                if (spec[0] == 'g')
                    worst_gauss = std::max(worst_gauss, err);
                else
                    worst_exp = std::max(worst_exp, err);
            }
        }
    bool ok = worst_gauss <= 1e-3 && worst_exp <= 1e-3;
    return {ok, "max relative gap, smooth rhs " + sci(worst_gauss) +
                    ", boundary-supported rhs " + sci(worst_exp) +
                    " (tol 1e-3; the reference resolves the x^a boundary "
                    "layer only at first order, see README)"};
}

// --- 4: forward operator reproduces the data on the interior -------------

std::pair<bool, std::string> forward_roundtrip() {
    const double sigma = 1.0, length = 36.0;
    muhs::ModeParams mode(0.5, sigma);
    std::vector<double> resids;
    for (int n : {512, 1024, 2048}) {
        auto grid = muhs::HalfLineGrid::with_length(n, length);
        muhs::GridFn f =
            muhs::sample_profile(muhs::Profile::parse("gaussian:1,9"), grid);
        muhs::GridFn u = muhs::solve_dirichlet_hom(f, mode);
        resids.push_back(muhs_test::deflated_interior_residual(u, f, mode));
    }
    double worst_order = 10.0;
    for (size_t i = 0; i + 1 < resids.size(); ++i)
        worst_order = std::min(worst_order, std::log2(resids[i] / resids[i + 1]));
    bool ok = resids[1] <= 1e-3 && worst_order >= 1.5;
    return {ok, "interior residual " + sci(resids[1]) +
                    " at n=1024 (tol 1e-3), slowest refinement order " +
                    sci(worst_order) + " (need 1.5)"};
}

// --- 5: weighted traces recover the explicit null-solution data ----------

std::pair<bool, std::string> trace_identities() {
    const cplx phi(0.8, -1.3);
    double worst0 = 0.0, worst1 = 0.0, worst_ratio = 0.0;
    for (double sigma : {1.0, 2.0, 5.0})
        for (double a : {0.25, 0.5, 0.75}) {
            muhs::ModeParams mode(a, sigma);
            auto grid = muhs::HalfLineGrid::auto_sized(sigma, 1024);
            muhs::GridFn z = muhs::poisson_dirichlet(phi, mode, grid);
            cplx g0 = muhs::gamma0_weighted(z, mode).value;
            cplx g1 = muhs::gamma1_weighted(z, mode).value;
            cplx dtn = muhs::dtn_symbol(mode);
            worst0 = std::max(worst0, std::abs(g0 - phi) / std::abs(phi));
            worst1 = std::max(worst1,
                              std::abs(g1 - dtn * phi) / std::abs(dtn * phi));
            worst_ratio =
                std::max(worst_ratio, std::abs(g1 / g0 - dtn) / std::abs(dtn));
        }
    bool ok = worst0 <= 1e-5 && worst1 <= 1e-3 && worst_ratio <= 1e-3;
    return {ok, "gamma0 error " + sci(worst0) + " (tol 1e-5), gamma1 error " +
                    sci(worst1) + " (tol 1e-3), ratio vs closed symbol " +
                    sci(worst_ratio) + " over 9 (sigma, a) pairs"};
}

// --- 6: Neumann solve hits the prescribed weighted slope -----------------

std::pair<bool, std::string> neumann_solve() {
    muhs::ModeParams mode(0.3, 1.5);
    auto grid = muhs::HalfLineGrid::auto_sized(1.5, 1024);
    double x0 = grid.length() / 4.0;
    muhs::GridFn f = muhs::sample_profile(
        muhs::Profile::parse("gaussian:1," + std::to_string(x0)), grid);
    cplx psi(2.0, -1.0);
    muhs::GridFn u = muhs::solve_neumann(f, psi, mode);
    cplx g1 = muhs::gamma1_weighted(u, mode).value;
    double trace_err = std::abs(g1 - psi) / std::abs(psi);
    double resid = muhs_test::deflated_interior_residual(u, f, mode);
    bool ok = trace_err <= 1e-3 && resid <= 1e-3;
    return {ok, "weighted slope error " + sci(trace_err) +
                    ", interior residual " + sci(resid) + " (tol 1e-3 each)"};
}

// --- 7: near-boundary exponent of solution and kernel --------------------

std::pair<bool, std::string> boundary_exponents() {
    double worst = 0.0;
    for (double a : {0.25, 0.5, 0.75}) {
        {
            // solutions grow like x^a from the boundary: short box, smooth
            // rhs; the loose tail tolerance is deliberate, only the window
            // next to x = 0 matters here
            muhs::ModeParams mode(a, 1.0);
            auto grid = muhs::HalfLineGrid::with_length(1024, 3.6);
            muhs::GridFn f =
                muhs::sample_profile(muhs::Profile::parse("const:1"), grid);
            muhs::GridFn u = muhs::solve_dirichlet_hom(f, mode, 2.0);
            auto fit =
                muhs::fit_boundary_exponent(u, 4.0 * grid.h, 0.02 * grid.length());
            worst = std::max(worst, std::abs(fit.exponent - a));
        }
        {
            // the explicit null solution blows up like x^{a-1}
            muhs::ModeParams mode(a, 1.0);
            auto grid = muhs::HalfLineGrid::with_length(1024, 0.25);
            muhs::GridFn z = muhs::poisson_dirichlet(1.0, mode, grid);
            auto fit = muhs::fit_boundary_exponent(z, 4.0 * grid.h, 0.025);
            worst = std::max(worst, std::abs(fit.exponent - (a - 1.0)));
        }
    }
    return {worst <= 0.02, "max exponent deviation " + sci(worst) +
                               " across solutions and kernels, three orders "
                               "(tol 0.02)"};
}

// --- 8: exterior-data problem ---------------------------------------------

std::pair<bool, std::string> exterior_problem() {
    muhs::ModeParams mode(0.5, 1.0);

    // the two extension strategies must agree on the solution
    auto grid = muhs::HalfLineGrid::with_length(1024, 36.0);
    muhs::ExteriorData data{
        muhs::sample_profile(muhs::Profile::parse("gaussian:1,9"), grid),
        muhs::sample_profile(muhs::Profile::parse("gaussian:0.5,5"), grid),
        muhs::ExteriorData::Strategy::zero};
    muhs::GridFn uz = muhs::solve_exterior(data, mode);
    data.strategy = muhs::ExteriorData::Strategy::reflection;
    muhs::GridFn ur = muhs::solve_exterior(data, mode);
    double gap = muhs::relative_l2_error(ur, uz);

    // with the exterior datum far from the boundary the interior trace
    // still opens with the x^a power
    auto grid2 = muhs::HalfLineGrid::with_length(2048, 12.0);
    muhs::ExteriorData far{
        muhs::sample_profile(muhs::Profile::parse("gaussian:1,3"), grid2),
        muhs::sample_profile(muhs::Profile::parse("gaussian:4,9"), grid2),
        muhs::ExteriorData::Strategy::zero};
    muhs::GridFn U = muhs::solve_exterior(far, mode, 1e-8);
    // fit inside x <= 0.15, before the interior bump at x = 3 bends the
    // log-log slope away from the boundary power law
    auto fit = muhs::fit_boundary_exponent(muhs::restrict_plus(U), 4.0 * grid2.h,
                                           0.15);
    double dev = std::abs(fit.exponent - 0.5);

    bool ok = gap <= 1e-3 && dev <= 0.1;
    return {ok, "strategy gap " + sci(gap) + " (tol 1e-3), far-datum boundary "
                    "exponent deviation " + sci(dev) + " (tol 0.1)"};
}

// --- 9: transmission parity check ------------------------------------------

std::pair<bool, std::string> transmission_checks() {
    std::vector<double> normal = {0.0, 1.0};
    auto match = muhs::check_mu_transmission(muhs::SymbolSpec::abs2a(0.3), 0.3,
                                             normal);
    auto classical =
        muhs::check_mu_transmission(muhs::SymbolSpec::halfplane_plus(), 0.0,
                                    normal);
    auto mismatch = muhs::check_mu_transmission(muhs::SymbolSpec::abs2a(0.3),
                                                0.6, normal);
    // expected parity defect of |xi|^{0.6} probed at the wrong mu:
    // |1 - e^{-0.6 i pi}| = 2 sin(0.3 pi)
    double want = 2.0 * std::sin(0.3 * M_PI);
    double got = 0.0;
    for (const auto& e : mismatch.residuals)
        if (e.degree_j == 0 && e.alpha == std::vector<int>{0, 0}) got = e.residual;
    bool ok = match.passes && classical.passes && !mismatch.passes &&
              std::abs(got - want) <= 0.05 * want;
    return {ok, std::string("matching mu ") + (match.passes ? "passes" : "FAILS") +
                    ", classical factor " +
                    (classical.passes ? "passes" : "FAILS") +
                    ", mismatched mu defect " + sci(got) + " vs expected " +
                    sci(want)};
}

// --- 10: complex order, relaxed tolerances ---------------------------------

std::pair<bool, std::string> complex_order() {
    const cplx a(0.5, 0.2);

    // closed form of the causal factor
    muhs::ModeParams mode2(a, 2.0);
    auto grid = muhs::HalfLineGrid::with_length(2048, 18.0);
    muhs::GridFn f =
        muhs::sample_profile(muhs::Profile::parse("exp:0.01"), grid);
    double closed_err = muhs::relative_l2_error(
        muhs::xi_plus_neg(f, mode2), sample_closed_causal(a, 2.0, 0.01, grid));

    // forward roundtrip
    muhs::ModeParams mode1(a, 1.0);
    auto grid4 = muhs::HalfLineGrid::with_length(1024, 36.0);
    muhs::GridFn f4 =
        muhs::sample_profile(muhs::Profile::parse("gaussian:1,9"), grid4);
    muhs::GridFn u = muhs::solve_dirichlet_hom(f4, mode1);
    double resid = muhs_test::deflated_interior_residual(u, f4, mode1);

    // trace identity on the explicit kernel
    cplx phi(0.8, -1.3);
    muhs::GridFn z = muhs::poisson_dirichlet(phi, mode2, grid);
    cplx g0 = muhs::gamma0_weighted(z, mode2).value;
    cplx g1 = muhs::gamma1_weighted(z, mode2).value;
    cplx dtn = muhs::dtn_symbol(mode2);
    double t0 = std::abs(g0 - phi) / std::abs(phi);
    double t1 = std::abs(g1 / g0 - dtn) / std::abs(dtn);

    bool ok = closed_err <= 1e-5 && resid <= 1e-2 && t0 <= 1e-4 && t1 <= 1e-2;
    return {ok, "closed-form error " + sci(closed_err) +
                    " (tol 1e-5), interior residual " + sci(resid) +
                    " (tol 1e-2), trace errors " + sci(t0) + ", " + sci(t1)};
}

} // namespace

int main() {
    std::printf("acceptance run, Re a in (0,1) factorization solver\n");
    run_criterion(1, "one-sided symbol factorization", factorization_identity);
    run_criterion(2, "causal closed form and refinement", closed_form_refinement);
    run_criterion(3, "dense reference agreement", oracle_agreement);
    run_criterion(4, "forward roundtrip on the interior", forward_roundtrip);
    run_criterion(5, "weighted trace identities", trace_identities);
    run_criterion(6, "Neumann solve", neumann_solve);
    run_criterion(7, "boundary exponents", boundary_exponents);
    run_criterion(8, "exterior data problem", exterior_problem);
    run_criterion(9, "transmission parity", transmission_checks);
    run_criterion(10, "complex order", complex_order);
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
