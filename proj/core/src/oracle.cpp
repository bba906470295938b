#include "muhs/oracle.hpp"
#include "muhs/special.hpp"
#include "muhs/traces.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace muhs {

GridFn dense_oracle_dirichlet(const GridFn& f, const ModeParams& mode,
                              int box_points, double* condition_out) {
    if (f.support != GridFn::Support::plus)
        throw std::invalid_argument("dense_oracle_dirichlet: input must have plus support");
    const int n = f.grid.n;
    const int nt = box_points > 0 ? box_points : 2 * n;
    if (nt % 2 != 0 || nt < 2 * n)
        throw std::invalid_argument(
            "dense_oracle_dirichlet: box_points must be even and cover both half-lines");

    // multiplier samples on the periodic box (frequencies folded to the
    // symmetric range; written out here so the oracle stays self-contained)
    const double two_pi_box = 6.28318530717958647692;
    std::vector<cplx> mult(nt);
    for (int j = 0; j < nt; ++j) {
        int folded = j <= (nt - 1) / 2 ? j : j - nt;
        double xi = two_pi_box * folded / (nt * f.grid.h);
        mult[j] = complex_power(cplx(mode.sigma * mode.sigma + xi * xi, 0.0),
                                mode.order);
    }

    // first circulant column by direct inverse transform (no FFT on purpose)
    const double two_pi = 6.28318530717958647692;
    std::vector<cplx> col(nt);
    for (int p = 0; p < nt; ++p) {
        double theta = two_pi * p / nt;
        cplx rot = std::polar(1.0, theta);
        cplx phase(1.0, 0.0);
        cplx acc(0.0, 0.0);
        for (int j = 0; j < nt; ++j) {
            acc += mult[j] * phase;
            phase *= rot;
        }
        col[p] = acc / static_cast<double>(nt);
    }

    Eigen::MatrixXcd a_plus(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a_plus(i, j) = col[((i - j) % nt + nt) % nt];

    Eigen::VectorXcd rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = f.values[i];

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a_plus);
    double umax = 0.0, umin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double d = std::abs(lu.matrixLU()(i, i));
        umax = std::max(umax, d);
        umin = std::min(umin, d);
    }
    double cond = umin > 0.0 ? umax / umin : std::numeric_limits<double>::infinity();
    if (condition_out) *condition_out = cond;
    if (!(cond <= 1e12))
        throw oracle_failure("dense_oracle_dirichlet: system condition estimate " +
                                 std::to_string(cond) + " exceeds 1e12",
                             cond);

    Eigen::VectorXcd sol = lu.solve(rhs);
    GridFn u(f.grid, GridFn::Support::plus);
    for (int i = 0; i < n; ++i) u.values[i] = sol(i);
    return u;
}

ExponentFit fit_boundary_exponent(const GridFn& u, double x_lo, double x_hi) {
    if (u.support != GridFn::Support::plus)
        throw std::invalid_argument("fit_boundary_exponent: input must have plus support");
    if (!(x_lo > 0.0) || !(x_hi > x_lo))
        throw std::invalid_argument("fit_boundary_exponent: window must satisfy 0 < x_lo < x_hi");

    std::vector<int> idx;
    for (int i = 0; i < u.grid.n; ++i) {
        double x = u.grid.x(i);
        if (x >= x_lo && x <= x_hi) idx.push_back(i);
    }
    if (idx.size() < 8)
        throw std::invalid_argument("fit_boundary_exponent: window contains fewer than 8 nodes");

    cplx ref = u.values[idx[idx.size() / 2]];
    for (int i : idx) {
        cplx v = u.values[i];
        if (std::abs(v) == 0.0)
            throw std::invalid_argument("fit_boundary_exponent: fit rejected, zero value at x = " +
                                        std::to_string(u.grid.x(i)));
        if ((v * std::conj(ref)).real() <= 0.0)
            throw std::invalid_argument(
                "fit_boundary_exponent: fit rejected, sign change inside the window near x = " +
                std::to_string(u.grid.x(i)));
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double count = static_cast<double>(idx.size());
    for (int i : idx) {
        double lx = std::log(u.grid.x(i));
        double ly = std::log(std::abs(u.values[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = count * sxx - sx * sx;
    double slope = (count * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / count;

    double ss_res = 0.0, ss_tot = 0.0;
    double mean = sy / count;
    for (int i : idx) {
        double lx = std::log(u.grid.x(i));
        double ly = std::log(std::abs(u.values[i]));
        double pred = intercept + slope * lx;
        ss_res += (ly - pred) * (ly - pred);
        ss_tot += (ly - mean) * (ly - mean);
    }

    ExponentFit fit;
    fit.exponent = slope;
    fit.coefficient = std::exp(intercept) * (ref / std::abs(ref));
    fit.r_squared = 1.0 - ss_res / std::max(ss_tot, 1e-300);
    fit.window_lo = x_lo;
    fit.window_hi = x_hi;
    return fit;
}

StructureDecomposition structure_decompose(const GridFn& u, const ModeParams& mode) {
    const cplx a = mode.order;
    const cplx ga = gamma_cplx(a);
    cplx v0 = gamma0_weighted(u, mode).value;

    GridFn w(u.grid, GridFn::Support::plus);
    for (int i = 0; i < u.grid.n; ++i) {
        double x = u.grid.x(i);
        w.values[i] =
            (ga * u.values[i] * std::exp((1.0 - a) * std::log(x)) - v0) / x;
    }

    // deviation of w from a straight line over the first nodes
    int m = std::min(8, u.grid.n);
    double sx = 0.0, sxx = 0.0;
    cplx sy(0.0, 0.0), sxy(0.0, 0.0);
    for (int i = 0; i < m; ++i) {
        double x = u.grid.x(i);
        sx += x;
        sxx += x * x;
        sy += w.values[i];
        sxy += x * w.values[i];
    }
    double denom = m * sxx - sx * sx;
    cplx slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
    cplx intercept = (sy - slope * sx) / static_cast<double>(m);
    double rss = 0.0;
    for (int i = 0; i < m; ++i) {
        double x = u.grid.x(i);
        rss += std::norm(w.values[i] - intercept - slope * x);
    }

    StructureDecomposition out{v0, std::move(w), std::sqrt(rss / m)};
    return out;
}

ConvergenceStudy convergence_study(
    const std::function<GridFn(const HalfLineGrid&)>& solve_at, double length,
    const std::vector<int>& resolutions) {
    if (resolutions.size() < 3)
        throw std::invalid_argument("convergence_study: need at least 3 resolutions");
    for (size_t i = 1; i < resolutions.size(); ++i)
        if (resolutions[i] != 2 * resolutions[i - 1])
            throw std::invalid_argument("convergence_study: resolutions must double");

    std::vector<GridFn> runs;
    runs.reserve(resolutions.size());
    for (int n : resolutions) runs.push_back(solve_at(HalfLineGrid::with_length(n, length)));

    const GridFn& fine = runs.back();
    const int n_fine = resolutions.back();

    ConvergenceStudy study;
    for (size_t r = 0; r + 1 < runs.size(); ++r) {
        int n_coarse = resolutions[r];
        int stride = n_fine / n_coarse;
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n_coarse; ++i) {
            cplx ref = fine.values[(i + 1) * stride - 1];
            num += std::norm(runs[r].values[i] - ref);
            den += std::norm(ref);
        }
        ConvergenceRow row;
        row.n_points = n_coarse;
        row.error_vs_finest = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
        study.rows.push_back(row);
    }
    for (size_t r = 0; r + 1 < study.rows.size(); ++r) {
        double e0 = study.rows[r].error_vs_finest;
        double e1 = study.rows[r + 1].error_vs_finest;
        study.rows[r + 1].observed_order = std::log2(e0 / e1);
        if (!(e1 < e0)) study.monotone = false;
    }
    return study;
}

} // namespace muhs
