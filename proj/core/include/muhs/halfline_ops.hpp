#pragma once

#include "muhs/grid.hpp"

namespace muhs {

// Product-integration weights for the causal convolution with the kernel
// s^{a-1} e^{-sigma s} / Gamma(a): on each cell the data is replaced by its
// piecewise-linear interpolant and the kernel moments are evaluated exactly
// through lower incomplete gamma increments, so that
//   u_k = sum_{j=0}^{k-1} a_weights[j] f_{k-j} + b_weights[j] f_{k-j-1}.
struct ConvWeights {
    std::vector<cplx> a_weights;
    std::vector<cplx> b_weights;
};
ConvWeights product_integration_weights(const ModeParams& mode, double h, int n);

// u(x_k) = (1/Gamma(a)) int_0^{x_k} (x_k - t)^{a-1} e^{-sigma (x_k - t)} f(t) dt.
// The value f(0) required by the first cell is extrapolated from nodes 1, 2
// (and equals f(x_1) when only the first node contributes), which keeps the
// operator strictly causal: u(x_k) depends on f at nodes 1..k only.
GridFn xi_plus_neg(const GridFn& f, const ModeParams& mode);

// v(x_k) = (1/Gamma(a)) int_{x_k}^{L} (t - x_k)^{a-1} e^{-sigma (t - x_k)} f(t) dt
// plus a neglected tail beyond L.  tail_bound estimates that tail assuming
// |f| stays below |f(x_N)| past the end of the grid.
struct TailBounded {
    GridFn fn;
    double tail_bound;
};
TailBounded xi_minus_plus_neg(const GridFn& f, const ModeParams& mode,
                              double tail_tol = 1e-10);

// r+ (1 - Delta_n)^a e+ per mode: embeds the function in a periodic box of
// pad_factor * n points, applies the multiplier (sigma^2 + xi^2)^a, and
// restricts back.  `edge_ratio` is |u(x_N)| / max|u| (the zero-extension is
// only accurate for decayed data) and `wrap_ratio` measures the mass that
// leaked next to the data block; either above 1e-6 sets accuracy_warning.
struct ForwardInfo {
    double edge_ratio = 0.0;
    double wrap_ratio = 0.0;
    bool accuracy_warning = false;
};
GridFn forward_op(const GridFn& u, const ModeParams& mode, int pad_factor = 4,
                  ForwardInfo* info = nullptr);

// Same multiplier applied to a whole-line function (used by the exterior
// reduction, where the data does not vanish on the non-positive nodes).
GridFn forward_op_wholeline(const GridFn& u, const ModeParams& mode,
                            int pad_factor = 4, ForwardInfo* info = nullptr);

} // namespace muhs
