#include "doctest.h"
#include "muhs/halfline_ops.hpp"
#include "muhs/profiles.hpp"
#include "muhs/special.hpp"
#include "muhs/traces.hpp"

#include <cmath>
#include <stdexcept>

using muhs::cplx;
using muhs::GridFn;
using muhs::HalfLineGrid;
using muhs::ModeParams;

TEST_CASE("dirichlet trace recovers the kernel coefficient") {
    auto g = HalfLineGrid::auto_sized(2.0); // N = 1024
    ModeParams mode(0.5, 2.0);
    GridFn z = muhs::poisson_dirichlet(1.0, mode, g);
    auto t = muhs::gamma0_weighted(z, mode);
    CHECK(std::abs(t.value - 1.0) < 1e-6); // observed ~1e-15
    CHECK(t.nodes_used == 8);
    CHECK(!t.ill_conditioned);
    CHECK(t.fit_residual < 1e-12);
}

TEST_CASE("traces on the model powers x^{a-1} and x^a") {
    auto g = HalfLineGrid::auto_sized(1.0);
    for (double a : {0.3, 0.5, 0.7}) {
        ModeParams mode(a, 1.0);

        // damped powers: the fitted profile is exactly polynomial, so the
        // traces come out at machine precision
        GridFn pa(g, GridFn::Support::plus);
        GridFn pam1(g, GridFn::Support::plus);
        for (int i = 0; i < g.n; ++i) {
            double x = g.x(i);
            pa.values[i] = std::pow(x, a) * std::exp(-x);
            pam1.values[i] = std::pow(x, a - 1.0) * std::exp(-x);
        }
        auto t0 = muhs::gamma0_weighted(pa, mode);
        CHECK(std::abs(t0.value) < 1e-10);
        auto t1 = muhs::gamma1_weighted(pa, mode);
        cplx want = muhs::gamma_cplx(a + 1.0);
        CHECK(std::abs(t1.value - want) < 1e-10 * std::abs(want));
        // the damping contributes slope -sigma to the weighted profile
        auto s1 = muhs::gamma1_weighted(pam1, mode);
        CHECK(std::abs(s1.value + want) < 1e-10 * std::abs(want));
        auto s0 = muhs::gamma0_weighted(pam1, mode);
        CHECK(std::abs(s0.value - muhs::gamma_cplx(a)) < 1e-10);

        // undamped powers: the exponential preconditioner introduces a
        // small quartic bias over the 8-node fit window, nothing more
        GridFn qa(g, GridFn::Support::plus);
        GridFn qam1(g, GridFn::Support::plus);
        for (int i = 0; i < g.n; ++i) {
            double x = g.x(i);
            qa.values[i] = std::pow(x, a);
            qam1.values[i] = std::pow(x, a - 1.0);
        }
        auto u0 = muhs::gamma0_weighted(qa, mode);
        CHECK(std::abs(u0.value) < 2e-3);
        auto u1 = muhs::gamma1_weighted(qa, mode);
        CHECK(std::abs(u1.value - want) < 2e-3 * std::abs(want));
        auto v1 = muhs::gamma1_weighted(qam1, mode);
        CHECK(std::abs(v1.value) < 2e-3);
    }
}

TEST_CASE("dirichlet poisson operator is a right inverse of gamma0") {
    auto g = HalfLineGrid::auto_sized(3.0);
    ModeParams mode(0.7, 3.0);
    const cplx phi(2.0, 1.0);
    GridFn z = muhs::poisson_dirichlet(phi, mode, g);
    auto t = muhs::gamma0_weighted(z, mode);
    CHECK(std::abs(t.value - phi) < 1e-5);

    // and across a parameter sweep
    for (double sigma : {1.0, 2.0, 5.0}) {
        for (double a : {0.25, 0.5, 0.75}) {
            ModeParams m(a, sigma);
            auto gr = HalfLineGrid::auto_sized(sigma);
            GridFn k = muhs::poisson_dirichlet(phi, m, gr);
            auto tr = muhs::gamma0_weighted(k, m);
            CHECK(std::abs(tr.value - phi) < 1e-5 * std::abs(phi));
        }
    }
}

TEST_CASE("neumann trace of the kernel gives the dtn multiple") {
    // gamma1 poisson_dirichlet(phi) = -a sigma phi; at phi = 1, a = 0.5,
    // sigma = 2 this is exactly -1
    auto g = HalfLineGrid::auto_sized(2.0);
    ModeParams mode(0.5, 2.0);
    GridFn z = muhs::poisson_dirichlet(1.0, mode, g);
    auto t1 = muhs::gamma1_weighted(z, mode);
    CHECK(std::abs(t1.value - cplx(-1.0)) < 1e-3); // observed ~1e-13
    CHECK(muhs::dtn_symbol(mode) == cplx(-1.0));
}

TEST_CASE("dtn ratio holds across the parameter grid") {
    const cplx phi(0.8, -1.3);
    for (double sigma : {1.0, 2.0, 5.0}) {
        for (double a : {0.25, 0.5, 0.75}) {
            ModeParams mode(a, sigma);
            auto g = HalfLineGrid::auto_sized(sigma);
            GridFn z = muhs::poisson_dirichlet(phi, mode, g);
            auto t0 = muhs::gamma0_weighted(z, mode);
            auto t1 = muhs::gamma1_weighted(z, mode);
            cplx ratio = t1.value / t0.value;
            CHECK(std::abs(ratio - muhs::dtn_symbol(mode)) <
                  1e-3 * std::abs(muhs::dtn_symbol(mode)));
        }
    }
}

TEST_CASE("neumann poisson operator is a right inverse of gamma1") {
    auto g = HalfLineGrid::auto_sized(2.0);
    ModeParams mode(0.5, 2.0);
    const cplx psi(1.0, 0.0);
    GridFn k = muhs::poisson_neumann(psi, mode, g);
    auto t1 = muhs::gamma1_weighted(k, mode);
    CHECK(std::abs(t1.value - psi) < 1e-3);
    // its dirichlet trace is -psi / (a sigma) = -1
    auto t0 = muhs::gamma0_weighted(k, mode);
    CHECK(std::abs(t0.value - cplx(-1.0)) < 1e-5);
}

TEST_CASE("poisson kernel reduces to the exponential at a = 1") {
    auto g = HalfLineGrid::auto_sized(3.0);
    ModeParams mode(1.0, 3.0);
    const cplx phi(1.5, -0.25);
    GridFn z = muhs::poisson_dirichlet(phi, mode, g);
    for (int i = 0; i < g.n; i += 111) {
        cplx want = phi * std::exp(-3.0 * g.x(i));
        CHECK(std::abs(z.values[i] - want) <= 1e-14 * std::abs(phi));
    }
}

TEST_CASE("kernel is a null solution of the forward operator") {
    // forward residual of the pure kernel, measured away from the boundary
    // layer and the far end, relative to the global kernel size
    auto g = HalfLineGrid::auto_sized(2.0, 2048);
    ModeParams mode(0.5, 2.0);
    GridFn z = muhs::poisson_dirichlet(1.0, mode, g);
    GridFn fz = muhs::forward_op(z, mode);
    double num = 0.0;
    int count = 0;
    for (int i = 0; i < g.n; ++i) {
        double x = g.x(i);
        if (x < 0.2 * g.length() || x > 0.95 * g.length()) continue;
        num += std::norm(fz.values[i]);
        ++count;
    }
    double resid = std::sqrt(num / count) / (muhs::l2_norm(z) / std::sqrt(g.n));
    CHECK(resid < 1e-3); // observed ~8.4e-4
}

TEST_CASE("traces are linear") {
    auto g = HalfLineGrid::auto_sized(1.5);
    ModeParams mode(0.4, 1.5);
    GridFn z1 = muhs::poisson_dirichlet(cplx(1.0, 2.0), mode, g);
    GridFn z2(g, GridFn::Support::plus);
    for (int i = 0; i < g.n; ++i)
        z2.values[i] = std::pow(g.x(i), 0.4) * std::exp(-1.5 * g.x(i));
    const cplx al(0.3, -0.8), be(2.0, 0.5);
    auto lhs0 = muhs::gamma0_weighted(al * z1 + be * z2, mode);
    auto a0 = muhs::gamma0_weighted(z1, mode);
    auto b0 = muhs::gamma0_weighted(z2, mode);
    CHECK(std::abs(lhs0.value - (al * a0.value + be * b0.value)) < 1e-10);
    auto lhs1 = muhs::gamma1_weighted(al * z1 + be * z2, mode);
    auto a1 = muhs::gamma1_weighted(z1, mode);
    auto b1 = muhs::gamma1_weighted(z2, mode);
    CHECK(std::abs(lhs1.value - (al * a1.value + be * b1.value)) < 1e-8);
}

TEST_CASE("trace fit flags data without the assumed boundary structure") {
    auto g = HalfLineGrid::auto_sized(1.0);
    ModeParams mode(0.5, 1.0);
    // u ~ x^{a-2} blows up faster than any admissible solution; the weighted
    // profile is 1/x, which no cubic can follow
    GridFn bad(g, GridFn::Support::plus);
    for (int i = 0; i < g.n; ++i)
        bad.values[i] = std::pow(g.x(i), -1.5) * std::exp(-g.x(i));
    auto t = muhs::gamma0_weighted(bad, mode);
    CHECK(t.ill_conditioned);
    CHECK(t.fit_residual > 0.0);
}

TEST_CASE("trace validation") {
    auto g = HalfLineGrid::auto_sized(1.0, 16);
    ModeParams mode(0.5, 1.0);
    GridFn z = muhs::poisson_dirichlet(1.0, mode, g);
    CHECK_THROWS_AS(muhs::gamma0_weighted(z, mode, 2), std::invalid_argument);
    CHECK_THROWS_AS(muhs::gamma0_weighted(z, mode, 17), std::invalid_argument);
    GridFn w = muhs::extend_by_zero(z);
    CHECK_THROWS_AS(muhs::gamma0_weighted(w, mode), std::invalid_argument);
    // fewer nodes than the default still fits (reduced degree)
    auto t = muhs::gamma0_weighted(z, mode, 4);
    CHECK(std::abs(t.value - 1.0) < 1e-5);
    CHECK(t.nodes_used == 4);
}
