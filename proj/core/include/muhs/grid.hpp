#pragma once

#include "muhs/types.hpp"

#include <vector>

namespace muhs {

// Uniform grid on the half-line with nodes x_k = k h, k = 1..n (node 0 is
// excluded; boundary values are recovered by extrapolation in the trace
// operators).
struct HalfLineGrid {
    HalfLineGrid(int n_points, double spacing);

    // Grid with n_points nodes whose length satisfies sigma_min * L >= sigma_length.
    static HalfLineGrid auto_sized(double sigma_min, int n_points = 1024,
                                   double sigma_length = 36.0);
    static HalfLineGrid with_length(int n_points, double length);

    int n;
    double h;

    double length() const { return n * h; }
    // coordinate of the node stored at 0-based index i (node k = i + 1)
    double x(int i) const { return (i + 1) * h; }

    bool operator==(const HalfLineGrid& o) const { return n == o.n && h == o.h; }
    bool operator!=(const HalfLineGrid& o) const { return !(*this == o); }
};

// Complex samples over a grid.  support == plus: values live on the
// positive nodes x_k = k h, k = 1..n, and the function is understood as
// extended by zero to x <= 0.  support == whole_line: the grid has an even
// node count 2N and index i holds the value at x = (i - (N-1)) h, i.e. the
// uniform nodes k h for k = -(N-1)..N; the non-positive nodes form the
// first half.
struct GridFn {
    enum class Support { plus, whole_line };

    GridFn(HalfLineGrid grid, Support support, std::vector<cplx> values);
    // zero-initialized
    GridFn(HalfLineGrid grid, Support support);

    HalfLineGrid grid;
    Support support;
    std::vector<cplx> values;

    double x(int i) const;
    int half_points() const; // N for whole_line functions
};

// r+: keep exactly the positive nodes 1..N of a whole-line function.
GridFn restrict_plus(const GridFn& whole);

// e+: embed a half-line function into the whole line, zero on the
// non-positive nodes.
GridFn extend_by_zero(const GridFn& plus);

// A single tangential frequency: sigma = <xi'> >= 1 together with the
// operator order a, 0 < Re a <= 1.  Solver entry points that rely on the
// trace formulas additionally require Re a < 1; the closed boundary value
// Re a = 1 is admitted for the classical consistency checks.
struct ModeParams {
    ModeParams(cplx order, double sigma);

    cplx order;
    double sigma;
};

// elementwise arithmetic (grids and supports must match)
GridFn operator+(const GridFn& a, const GridFn& b);
GridFn operator-(const GridFn& a, const GridFn& b);
GridFn operator*(cplx scale, const GridFn& a);

double l2_norm(const GridFn& u);
// ||u - ref|| / ||ref|| over all stored nodes
double relative_l2_error(const GridFn& u, const GridFn& ref);

} // namespace muhs
