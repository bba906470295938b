#include "muhs/solvers.hpp"
#include "muhs/fft.hpp"
#include "muhs/halfline_ops.hpp"
#include "muhs/traces.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace muhs {

GridFn solve_dirichlet_hom(const GridFn& f, const ModeParams& mode,
                           double tail_tol, double* tail_bound_out) {
    TailBounded v = xi_minus_plus_neg(f, mode, tail_tol);
    if (tail_bound_out) *tail_bound_out = v.tail_bound;
    return xi_plus_neg(v.fn, mode);
}

GridFn solve_dirichlet_nonhom(const GridFn& f, cplx phi, const ModeParams& mode,
                              double tail_tol, double* tail_bound_out) {
    GridFn u = solve_dirichlet_hom(f, mode, tail_tol, tail_bound_out);
    if (phi == cplx(0.0, 0.0)) return u;
    return u + poisson_dirichlet(phi, mode, f.grid);
}

GridFn solve_neumann(const GridFn& f, cplx psi, const ModeParams& mode,
                     double tail_tol, double* tail_bound_out) {
    GridFn u = solve_dirichlet_hom(f, mode, tail_tol, tail_bound_out);
    cplx neumann_trace = gamma1_weighted(u, mode).value;
    cplx defect = psi - neumann_trace;
    if (defect == cplx(0.0, 0.0)) return u;
    return u + poisson_neumann(defect, mode, f.grid);
}

double eta_cutoff(double x, double length) {
    double t = (x - length / 8.0) / (length / 8.0);
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    auto ramp = [](double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; };
    double up = ramp(1.0 - t);
    return up / (up + ramp(t));
}

GridFn solve_exterior(const ExteriorData& data, const ModeParams& mode,
                      double tail_tol, int pad_factor) {
    const GridFn& f = data.f;
    const GridFn& g = data.g_reflected;
    if (f.support != GridFn::Support::plus || g.support != GridFn::Support::plus)
        throw std::invalid_argument("solve_exterior: f and g must have plus support");
    if (f.grid != g.grid)
        throw std::invalid_argument("solve_exterior: f and g grids must match");
    const int n = f.grid.n;
    const double length = f.grid.length();

    // whole-line extension G: index i < n holds x = -(n-1-i) h, so the
    // exterior datum fills it in reversed order with the boundary node
    // x = 0 extrapolated from the two nearest samples.
    GridFn G(HalfLineGrid(2 * n, f.grid.h), GridFn::Support::whole_line);
    for (int k = 1; k <= n - 1; ++k) G.values[n - 1 - k] = g.values[k - 1];
    G.values[n - 1] = n >= 2 ? 2.0 * g.values[0] - g.values[1] : g.values[0];
    if (data.strategy == ExteriorData::Strategy::reflection) {
        for (int i = 0; i < n; ++i) {
            double x = f.grid.x(i);
            G.values[n + i] = g.values[i] * eta_cutoff(x, length);
        }
    }

    GridFn pg = restrict_plus(forward_op_wholeline(G, mode, pad_factor));
    GridFn u = solve_dirichlet_hom(f - pg, mode, tail_tol);
    return extend_by_zero(u) + G;
}

HalfPlaneField::HalfPlaneField(HalfPlaneGrid grid_)
    : grid(grid_),
      values(static_cast<size_t>(grid_.m) * grid_.normal.n, cplx(0.0, 0.0)) {
    if (grid.m <= 0 || !(grid.h_tangential > 0.0))
        throw std::invalid_argument("HalfPlaneField: bad tangential grid");
}

namespace {

int thread_budget(int modes) {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap <= 0) cap = 1;
    if (const char* env = std::getenv("MUHS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
            throw std::invalid_argument("MUHS_THREADS must be a nonnegative integer");
        cap = v == 0 ? 1 : static_cast<int>(std::min<long>(v, 64));
    }
    return std::max(1, std::min(cap, modes));
}

// DFT along the tangential index for every normal column (stride access).
void tangential_transform(std::vector<cplx>& field, int m, int n, bool inverse) {
    std::vector<cplx> col(m);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < m; ++i) col[i] = field[static_cast<size_t>(i) * n + k];
        if (inverse)
            dft_inverse(col);
        else
            dft_forward(col);
        for (int i = 0; i < m; ++i) field[static_cast<size_t>(i) * n + k] = col[i];
    }
}

} // namespace

HalfPlaneField solve_halfplane(const HalfPlaneProblem& problem) {
    const int m = problem.grid.m;
    const int n = problem.grid.normal.n;
    if (m <= 0 || !(problem.grid.h_tangential > 0.0))
        throw std::invalid_argument("solve_halfplane: bad tangential grid");
    if (!problem.interior_data.empty() &&
        problem.interior_data.size() != static_cast<size_t>(m) * n)
        throw std::invalid_argument("solve_halfplane: interior data must be m x n");
    if (!problem.boundary_data.empty() &&
        problem.boundary_data.size() != static_cast<size_t>(m))
        throw std::invalid_argument("solve_halfplane: boundary data must have one value per tangential node");

    std::vector<cplx> fhat = problem.interior_data;
    if (!fhat.empty()) tangential_transform(fhat, m, n, false);

    std::vector<cplx> bhat = problem.boundary_data;
    if (!bhat.empty()) dft_forward(bhat);

    HalfPlaneField out(problem.grid);

    std::mutex error_mutex;
    std::function<void()> pending_error;

    auto solve_mode = [&](int i) {
        double xi = dft_frequency(i, m, problem.grid.h_tangential);
        double sigma = std::sqrt(1.0 + xi * xi);
        ModeParams mode(problem.order, sigma);

        GridFn frow(problem.grid.normal, GridFn::Support::plus);
        if (!fhat.empty())
            for (int k = 0; k < n; ++k)
                frow.values[k] = fhat[static_cast<size_t>(i) * n + k];
        cplx bc = bhat.empty() ? cplx(0.0, 0.0) : bhat[i];

        GridFn urow = [&] {
            switch (problem.kind) {
            case HalfPlaneKind::dirichlet_hom:
                return solve_dirichlet_hom(frow, mode, problem.tail_tol);
            case HalfPlaneKind::dirichlet_nonhom:
                return solve_dirichlet_nonhom(frow, bc, mode, problem.tail_tol);
            case HalfPlaneKind::neumann:
                return solve_neumann(frow, bc, mode, problem.tail_tol);
            }
            throw std::invalid_argument("solve_halfplane: unknown problem kind");
        }();
        for (int k = 0; k < n; ++k) out.at(i, k) = urow.values[k];
    };

    auto guarded = [&](int i) {
        try {
            solve_mode(i);
        } catch (const truncation_error& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!pending_error) {
                std::string msg =
                    "tangential mode " + std::to_string(i) + ": " + e.what();
                double bound = e.bound;
                pending_error = [msg, bound] { throw truncation_error(msg, bound); };
            }
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!pending_error) {
                std::string msg =
                    "tangential mode " + std::to_string(i) + ": " + e.what();
                pending_error = [msg] { throw std::runtime_error(msg); };
            }
        }
    };

    int workers = thread_budget(m);
    if (workers == 1) {
        for (int i = 0; i < m; ++i) guarded(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (int i = t; i < m; i += workers) guarded(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    if (pending_error) pending_error();

    tangential_transform(out.values, m, n, true);
    return out;
}

} // namespace muhs
