#pragma once

#include "muhs/grid.hpp"

#include <functional>

namespace muhs {

// Brute-force reference for the homogeneous Dirichlet problem: the periodic
// spectral multiplier on a box of box_points (default 2N) nodes is
// materialized as a circulant matrix via an explicit inverse transform,
// the principal submatrix over the positive nodes is solved densely, and
// the pivot magnitudes of the LU factorization provide a condition
// estimate (above 1e12 the solve is reported as failed).  This path shares
// no numerics with the factorization solver.
GridFn dense_oracle_dirichlet(const GridFn& f, const ModeParams& mode,
                              int box_points = 0,
                              double* condition_out = nullptr);

// Log-log regression of |u| on a node window.
struct ExponentFit {
    double exponent = 0.0;
    cplx coefficient{0.0, 0.0};
    double r_squared = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

// Fits log|u(x_k)| = log|coefficient| + exponent * log x_k over the nodes
// with x_lo <= x_k <= x_hi (at least 8 required).  Zeros or sign changes
// of u inside the window reject the fit.
ExponentFit fit_boundary_exponent(const GridFn& u, double x_lo, double x_hi);

// Splits u into the blow-up and bounded boundary components,
//   u(x) = Gamma(a)^{-1} x^{a-1} v0 + Gamma(a)^{-1} x^a w(x),
// with v0 the weighted Dirichlet trace and w_fn the remainder profile;
// residual measures the deviation of w_fn from its linear fit near 0.
struct StructureDecomposition {
    cplx v0{0.0, 0.0};
    GridFn w_fn;
    double residual = 0.0;
};
StructureDecomposition structure_decompose(const GridFn& u, const ModeParams& mode);

// Self-convergence table: each resolution (strictly doubling, at least
// three) is compared against the finest run restricted to the coarse
// nodes.  A non-monotone error sequence only clears the monotone flag.
struct ConvergenceRow {
    int n_points = 0;
    double error_vs_finest = 0.0;
    double observed_order = 0.0;
};
struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    bool monotone = true;
};
ConvergenceStudy convergence_study(
    const std::function<GridFn(const HalfLineGrid&)>& solve_at, double length,
    const std::vector<int>& resolutions);

} // namespace muhs
