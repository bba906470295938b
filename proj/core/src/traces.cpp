#include "muhs/traces.hpp"
#include "muhs/special.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace muhs {

namespace {

struct BoundaryFit {
    cplx p0;          // extrapolated value of Gamma(a) w(x) e^{sigma x} at 0
    cplx dp0;         // its derivative at 0
    double residual;  // weighted RMS misfit in w coordinates
    double w_peak;    // max |w| over the nodes used
};

BoundaryFit fit_weighted_profile(const GridFn& u, const ModeParams& mode,
                                 int nodes_used) {
    if (u.support != GridFn::Support::plus)
        throw std::invalid_argument("trace fit: input must have plus support");
    if (nodes_used < 3)
        throw std::invalid_argument("trace fit: nodes_used must be >= 3");
    if (nodes_used > u.grid.n)
        throw std::invalid_argument("trace fit: nodes_used exceeds the grid");

    const cplx a = mode.order;
    const double sigma = mode.sigma;
    const int m = nodes_used;
    const int degree = std::min(3, m - 1);
    const double x_last = u.grid.x(m - 1);
    const cplx ga = gamma_cplx(a);

    Eigen::MatrixXcd design(m, degree + 1);
    Eigen::VectorXcd rhs(m);
    std::vector<double> lam(m), xs(m);
    std::vector<cplx> what(m);
    double w_peak = 0.0;
    for (int i = 0; i < m; ++i) {
        double x = u.grid.x(i);
        xs[i] = x;
        lam[i] = 1.0 / x;
        cplx w = std::exp((1.0 - a) * std::log(x)) * u.values[i];
        w_peak = std::max(w_peak, std::abs(w));
        what[i] = ga * w * std::exp(sigma * x);
        double sw = std::sqrt(lam[i]);
        double s = x / x_last;
        double col = 1.0;
        for (int d = 0; d <= degree; ++d) {
            design(i, d) = sw * col;
            col *= s;
        }
        rhs(i) = sw * what[i];
    }

    Eigen::VectorXcd coef = design.householderQr().solve(rhs);

    double num = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i) {
        cplx fitted(0.0, 0.0);
        double s = xs[i] / x_last, col = 1.0;
        for (int d = 0; d <= degree; ++d) {
            fitted += coef(d) * col;
            col *= s;
        }
        cplx miss = (what[i] - fitted) * std::exp(-sigma * xs[i]) / ga;
        num += lam[i] * std::norm(miss);
        den += lam[i];
    }

    BoundaryFit out;
    out.p0 = coef(0);
    out.dp0 = degree >= 1 ? coef(1) / x_last : cplx(0.0, 0.0);
    out.residual = std::sqrt(num / den);
    out.w_peak = w_peak;
    return out;
}

TraceFit assemble(const BoundaryFit& fit, const ModeParams& mode, int nodes_used,
                  double warn_factor, bool neumann) {
    const cplx ga = gamma_cplx(mode.order);
    cplx w_slope = (fit.dp0 - mode.sigma * fit.p0) / ga;
    TraceFit tf;
    tf.value = neumann ? mode.order * (fit.dp0 - mode.sigma * fit.p0) : fit.p0;
    tf.slope = w_slope;
    tf.fit_residual = fit.residual;
    tf.nodes_used = nodes_used;
    tf.ill_conditioned =
        !(fit.residual <= warn_factor * std::max(fit.w_peak, 1e-300));
    return tf;
}

} // namespace

TraceFit gamma0_weighted(const GridFn& u, const ModeParams& mode, int nodes_used,
                         double warn_factor) {
    return assemble(fit_weighted_profile(u, mode, nodes_used), mode, nodes_used,
                    warn_factor, false);
}

TraceFit gamma1_weighted(const GridFn& u, const ModeParams& mode, int nodes_used,
                         double warn_factor) {
    return assemble(fit_weighted_profile(u, mode, nodes_used), mode, nodes_used,
                    warn_factor, true);
}

GridFn poisson_dirichlet(cplx phi, const ModeParams& mode, const HalfLineGrid& grid) {
    const cplx a = mode.order;
    const cplx ga = gamma_cplx(a);
    GridFn z(grid, GridFn::Support::plus);
    for (int i = 0; i < grid.n; ++i) {
        double x = grid.x(i);
        z.values[i] = phi * std::exp((a - 1.0) * std::log(x) - mode.sigma * x) / ga;
    }
    return z;
}

GridFn poisson_neumann(cplx psi, const ModeParams& mode, const HalfLineGrid& grid) {
    return poisson_dirichlet(-psi / (mode.order * mode.sigma), mode, grid);
}

cplx dtn_symbol(const ModeParams& mode) { return -mode.order * mode.sigma; }

} // namespace muhs
