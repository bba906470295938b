#pragma once

#include "muhs/grid.hpp"

namespace muhs {

// Homogeneous Dirichlet solve per mode via the order-reducing factorization:
// u = xi_plus_neg(xi_minus_plus_neg(f)).  The optional tail_bound_out
// receives the truncation estimate reported by the anticausal factor.
GridFn solve_dirichlet_hom(const GridFn& f, const ModeParams& mode,
                           double tail_tol = 1e-10,
                           double* tail_bound_out = nullptr);

// Nonhomogeneous Dirichlet: homogeneous solve plus the explicit Poisson
// term carrying the boundary datum phi.
GridFn solve_dirichlet_nonhom(const GridFn& f, cplx phi, const ModeParams& mode,
                              double tail_tol = 1e-10,
                              double* tail_bound_out = nullptr);

// Neumann: u = R_D f + K_N (psi - gamma_{a-1,1} R_D f).  When psi equals
// the weighted Neumann trace of R_D f the correction vanishes identically.
GridFn solve_neumann(const GridFn& f, cplx psi, const ModeParams& mode,
                     double tail_tol = 1e-10, double* tail_bound_out = nullptr);

// Exterior-data problem on the whole line: r+ P U = f on x > 0, U = g on
// x <= 0.  g_reflected stores the exterior datum in the distance coordinate,
// g_reflected[k-1] = g(-x_k); the value at the boundary node x = 0 is filled
// by linear extrapolation of g.
struct ExteriorData {
    enum class Strategy { zero, reflection };

    GridFn f;
    GridFn g_reflected;
    Strategy strategy = Strategy::zero;
};

// Smooth transition used by the reflection extension: 1 on [0, L/8],
// 0 beyond L/4.
double eta_cutoff(double x, double length);

// Returns the whole-line solution U = extend_by_zero(u) + G where G is the
// strategy's extension of g and u solves the homogeneous problem with
// right-hand side f - r+ P G.
GridFn solve_exterior(const ExteriorData& data, const ModeParams& mode,
                      double tail_tol = 1e-10, int pad_factor = 4);

// Half-plane with one periodic tangential direction: x' on a circle of
// circumference m * h_tangential, x_n on the shared normal grid.
struct HalfPlaneGrid {
    int m = 1;
    double h_tangential = 1.0;
    HalfLineGrid normal{1, 1.0};

    double circumference() const { return m * h_tangential; }
};

// Row-major samples: row i = tangential node x'_i = i h', column k = normal
// node x_k.
struct HalfPlaneField {
    HalfPlaneField(HalfPlaneGrid grid);

    HalfPlaneGrid grid;
    std::vector<cplx> values;

    cplx& at(int i, int k) { return values[static_cast<size_t>(i) * grid.normal.n + k]; }
    const cplx& at(int i, int k) const {
        return values[static_cast<size_t>(i) * grid.normal.n + k];
    }
};

enum class HalfPlaneKind { dirichlet_hom, dirichlet_nonhom, neumann };

struct HalfPlaneProblem {
    HalfPlaneKind kind = HalfPlaneKind::dirichlet_hom;
    HalfPlaneGrid grid;
    cplx order{0.5, 0.0};
    // right-hand side samples, row-major m x n; empty means zero
    std::vector<cplx> interior_data;
    // phi or psi per tangential node; empty means zero
    std::vector<cplx> boundary_data;
    double tail_tol = 1e-10;
};

// Diagonalizes in the tangential direction, solves each mode at
// sigma_k = (1 + |xi'_k|^2)^{1/2}, transforms back.  Modes run in parallel
// up to the MUHS_THREADS cap (0 = sequential); results do not depend on
// the thread count.
HalfPlaneField solve_halfplane(const HalfPlaneProblem& problem);

} // namespace muhs
