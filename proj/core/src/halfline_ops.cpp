#include "muhs/halfline_ops.hpp"
#include "muhs/fft.hpp"
#include "muhs/special.hpp"

#include <cmath>
#include <sstream>

namespace muhs {

namespace {

void require_plus_finite(const GridFn& f, const char* who) {
    if (f.support != GridFn::Support::plus)
        throw std::invalid_argument(std::string(who) + ": input must have plus support");
    for (const auto& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument(std::string(who) + ": non-finite input value");
}

double rms(const cplx* p, int count) {
    double s = 0.0;
    for (int i = 0; i < count; ++i) s += std::norm(p[i]);
    return std::sqrt(s / std::max(count, 1));
}

// Increment P(a, t_{j+1}) - P(a, t_j) of the regularized lower incomplete
// gamma without cancellation: below the series/fraction switch both values
// are small and computed directly; above it, the complementary Q values
// are small and computed directly, and the increment is Q_j - Q_{j+1}.
struct GammaIncrements {
    GammaIncrements(cplx a, const std::vector<double>& t) {
        double cut = a.real() + 1.0;
        vals.reserve(t.size());
        low.reserve(t.size());
        for (double tj : t) {
            bool lo = tj < cut;
            vals.push_back(lo ? lower_gamma_regularized(a, tj)
                              : upper_gamma_regularized(a, tj));
            low.push_back(lo);
        }
    }
    cplx delta(size_t j) const {
        if (low[j] && low[j + 1]) return vals[j + 1] - vals[j];
        if (!low[j] && !low[j + 1]) return vals[j] - vals[j + 1];
        return (1.0 - vals[j + 1]) - vals[j];
    }
    std::vector<cplx> vals;
    std::vector<char> low;
};

} // namespace

ConvWeights product_integration_weights(const ModeParams& mode, double h, int n) {
    if (n <= 0 || !(h > 0.0))
        throw std::invalid_argument("product_integration_weights: bad grid");
    const cplx a = mode.order;
    const double sigma = mode.sigma;

    std::vector<double> t(n + 1);
    for (int j = 0; j <= n; ++j) t[j] = sigma * j * h;
    GammaIncrements inc0(a, t);
    GammaIncrements inc1(a + 1.0, t);

    // moments of the normalized kernel over cell [jh, (j+1)h]:
    //   m0_j = int s^{a-1} e^{-sigma s} ds / Gamma(a)
    //   m1_j = int s^{a}   e^{-sigma s} ds / Gamma(a)
    const cplx s_pow = complex_power(sigma, -a);
    const cplx s_pow1 = s_pow / sigma;
    ConvWeights w;
    w.a_weights.resize(n);
    w.b_weights.resize(n);
    for (int j = 0; j < n; ++j) {
        cplx m0 = s_pow * inc0.delta(j);
        cplx m1 = a * s_pow1 * inc1.delta(j);
        double jh = j * h;
        w.a_weights[j] = ((jh + h) * m0 - m1) / h;
        w.b_weights[j] = (m1 - jh * m0) / h;
    }
    return w;
}

GridFn xi_plus_neg(const GridFn& f, const ModeParams& mode) {
    require_plus_finite(f, "xi_plus_neg");
    const int n = f.grid.n;
    ConvWeights w = product_integration_weights(mode, f.grid.h, n);
    const auto& A = w.a_weights;
    const auto& B = w.b_weights;

    // node-indexed data with the extrapolated boundary value in slot 0
    std::vector<cplx> fa(n + 1);
    fa[0] = n == 1 ? f.values[0] : 2.0 * f.values[0] - f.values[1];
    for (int k = 1; k <= n; ++k) fa[k] = f.values[k - 1];

    GridFn u(f.grid, GridFn::Support::plus);
    for (int k = 1; k <= n; ++k) {
        cplx s(0.0, 0.0);
        for (int j = 0; j < k; ++j) s += A[j] * fa[k - j] + B[j] * fa[k - j - 1];
        u.values[k - 1] = s;
    }
    // the first cell has only node 1 available; use the flat one-point rule
    u.values[0] = (A[0] + B[0]) * f.values[0];
    return u;
}

TailBounded xi_minus_plus_neg(const GridFn& f, const ModeParams& mode,
                              double tail_tol) {
    require_plus_finite(f, "xi_minus_plus_neg");
    const int n = f.grid.n;
    ConvWeights w = product_integration_weights(mode, f.grid.h, n);
    const auto& A = w.a_weights;
    const auto& B = w.b_weights;

    // full-mass tail estimate at the last node, where the whole integral
    // beyond L is dropped: |f(x_N)| * Gamma(Re a) * sigma^{-Re a} / |Gamma(a)|
    double fa_re = mode.order.real();
    double bound = std::abs(f.values[n - 1]) * std::tgamma(fa_re) *
                   std::pow(mode.sigma, -fa_re) / std::abs(gamma_cplx(mode.order));
    if (bound > tail_tol) {
        std::ostringstream os;
        os << "xi_minus_plus_neg: neglected tail bound " << bound
           << " exceeds tail_tol " << tail_tol
           << " (data has not decayed at the end of the grid)";
        throw truncation_error(os.str(), bound);
    }

    GridFn v(f.grid, GridFn::Support::plus);
    for (int k = 1; k <= n; ++k) {
        cplx s(0.0, 0.0);
        for (int j = 0; j < n - k; ++j)
            s += A[j] * f.values[k + j - 1] + B[j] * f.values[k + j];
        v.values[k - 1] = s;
    }
    return {std::move(v), bound};
}

namespace {

GridFn apply_multiplier_padded(const GridFn& u, const ModeParams& mode,
                               int pad_factor, int data_offset_from_end,
                               ForwardInfo* info) {
    const int m = u.grid.n;
    if (pad_factor < 2)
        throw std::invalid_argument("forward_op: pad_factor must be >= 2");
    const int nt = pad_factor * m;
    const int start = nt - data_offset_from_end;

    std::vector<cplx> buf(nt, cplx(0.0, 0.0));
    for (int i = 0; i < m; ++i) buf[start + i] = u.values[i];

    dft_forward(buf);
    for (int j = 0; j < nt; ++j) {
        double xi = dft_frequency(j, nt, u.grid.h);
        buf[j] *= complex_power(cplx(mode.sigma * mode.sigma + xi * xi, 0.0),
                                mode.order);
    }
    dft_inverse(buf);

    GridFn out(u.grid, u.support);
    for (int i = 0; i < m; ++i) out.values[i] = buf[start + i];

    if (info) {
        double peak = 0.0;
        for (const auto& v : u.values) peak = std::max(peak, std::abs(v));
        double edge = u.support == GridFn::Support::plus
                          ? std::abs(u.values[m - 1])
                          : std::max(std::abs(u.values.front()),
                                     std::abs(u.values.back()));
        info->edge_ratio = peak > 0.0 ? edge / peak : 0.0;
        // periodic leakage sampled in the padding block next to the data
        double leak = start == 0 ? rms(buf.data() + m, std::min(m, nt - m))
                                 : rms(buf.data() + start - m, m);
        double data_rms = rms(buf.data() + start, m);
        info->wrap_ratio = data_rms > 0.0 ? leak / data_rms : 0.0;
        info->accuracy_warning = info->edge_ratio > 1e-6 || info->wrap_ratio > 1e-6;
    }
    return out;
}

} // namespace

GridFn forward_op(const GridFn& u, const ModeParams& mode, int pad_factor,
                  ForwardInfo* info) {
    require_plus_finite(u, "forward_op");
    // data occupies the first n slots of the box; the left zero-extension
    // wraps periodically at distance (pad_factor - 1) L
    return apply_multiplier_padded(u, mode, pad_factor, pad_factor * u.grid.n,
                                   info);
}

GridFn forward_op_wholeline(const GridFn& u, const ModeParams& mode,
                            int pad_factor, ForwardInfo* info) {
    if (u.support != GridFn::Support::whole_line)
        throw std::invalid_argument("forward_op_wholeline: input must be whole-line");
    for (const auto& v : u.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("forward_op_wholeline: non-finite input value");
    // data occupies the last 2N slots, so the padding lies to the left
    return apply_multiplier_padded(u, mode, pad_factor, u.grid.n, info);
}

} // namespace muhs
