#pragma once

#include "muhs/grid.hpp"

namespace muhs {

// Boundary fit of the weighted profile w(x) = x^{1-a} u(x) near x = 0.
// value carries the requested trace; slope is the linear coefficient of w
// at the boundary; fit_residual is the weighted RMS misfit of the model on
// the nodes used.  ill_conditioned is set when the misfit exceeds the
// warning threshold relative to max|w|, indicating that u does not have
// the x^{a-1}/x^a boundary structure the traces assume.
struct TraceFit {
    cplx value{0.0, 0.0};
    cplx slope{0.0, 0.0};
    double fit_residual = 0.0;
    int nodes_used = 0;
    bool ill_conditioned = false;
};

// gamma_{a-1,0} u = Gamma(a) * (boundary value of x^{1-a} u).
// The profile w is extrapolated to x = 0 from the first nodes_used nodes
// with weights 1/x_k after factoring out e^{-sigma x} (the known decay of
// every kernel in this family), which removes the dominant curvature and
// makes the fit exact on pure Poisson data.
TraceFit gamma0_weighted(const GridFn& u, const ModeParams& mode,
                         int nodes_used = 8, double warn_factor = 1e-3);

// gamma_{a-1,1} u = Gamma(a+1) * (boundary slope of x^{1-a} u).
TraceFit gamma1_weighted(const GridFn& u, const ModeParams& mode,
                         int nodes_used = 8, double warn_factor = 1e-3);

// Poisson operator for Dirichlet data: z(x) = phi x^{a-1} e^{-sigma x} / Gamma(a),
// the explicit null solution with gamma_{a-1,0} z = phi.
GridFn poisson_dirichlet(cplx phi, const ModeParams& mode, const HalfLineGrid& grid);

// Poisson operator for Neumann data: K_N psi = poisson_dirichlet(-psi / (a sigma)).
GridFn poisson_neumann(cplx psi, const ModeParams& mode, const HalfLineGrid& grid);

// Dirichlet-to-Neumann symbol of the model problem: -a sigma.
cplx dtn_symbol(const ModeParams& mode);

} // namespace muhs
