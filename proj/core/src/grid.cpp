#include "muhs/grid.hpp"

#include <cmath>

namespace muhs {

HalfLineGrid::HalfLineGrid(int n_points, double spacing) : n(n_points), h(spacing) {
    if (n <= 0)
        throw std::invalid_argument("HalfLineGrid: node count must be positive");
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("HalfLineGrid: spacing must be positive and finite");
}

HalfLineGrid HalfLineGrid::auto_sized(double sigma_min, int n_points, double sigma_length) {
    if (!(sigma_min >= 1.0))
        throw std::invalid_argument("HalfLineGrid::auto_sized: sigma_min must be >= 1");
    double length = sigma_length / sigma_min;
    return HalfLineGrid(n_points, length / n_points);
}

HalfLineGrid HalfLineGrid::with_length(int n_points, double length) {
    if (!(length > 0.0))
        throw std::invalid_argument("HalfLineGrid::with_length: length must be positive");
    return HalfLineGrid(n_points, length / n_points);
}

GridFn::GridFn(HalfLineGrid grid_, Support support_, std::vector<cplx> values_)
    : grid(grid_), support(support_), values(std::move(values_)) {
    if (static_cast<int>(values.size()) != grid.n)
        throw std::invalid_argument("GridFn: values length must equal the node count");
    if (support == Support::whole_line && grid.n % 2 != 0)
        throw std::invalid_argument("GridFn: whole-line functions need an even node count");
}

GridFn::GridFn(HalfLineGrid grid_, Support support_)
    : GridFn(grid_, support_, std::vector<cplx>(grid_.n, cplx(0.0, 0.0))) {}

double GridFn::x(int i) const {
    if (support == Support::plus) return grid.x(i);
    return (i - (grid.n / 2 - 1)) * grid.h;
}

int GridFn::half_points() const {
    return support == Support::plus ? grid.n : grid.n / 2;
}

GridFn restrict_plus(const GridFn& whole) {
    if (whole.support != GridFn::Support::whole_line)
        throw std::invalid_argument("restrict_plus: input must be a whole-line function");
    int n = whole.grid.n / 2;
    std::vector<cplx> vals(whole.values.begin() + n, whole.values.end());
    return GridFn(HalfLineGrid(n, whole.grid.h), GridFn::Support::plus, std::move(vals));
}

GridFn extend_by_zero(const GridFn& plus) {
    if (plus.support != GridFn::Support::plus)
        throw std::invalid_argument("extend_by_zero: input must be a half-line function");
    int n = plus.grid.n;
    std::vector<cplx> vals(2 * n, cplx(0.0, 0.0));
    for (int i = 0; i < n; ++i) vals[n + i] = plus.values[i];
    return GridFn(HalfLineGrid(2 * n, plus.grid.h), GridFn::Support::whole_line,
                  std::move(vals));
}

ModeParams::ModeParams(cplx order_, double sigma_) : order(order_), sigma(sigma_) {
    if (!(sigma >= 1.0) || !std::isfinite(sigma))
        throw std::domain_error("ModeParams: sigma must be >= 1 and finite");
    if (!(order.real() > 0.0) || !(order.real() <= 1.0) || !std::isfinite(order.real()) ||
        !std::isfinite(order.imag()))
        throw std::domain_error("ModeParams: Re(order) must lie in (0, 1]");
}

namespace {
void require_compatible(const GridFn& a, const GridFn& b, const char* who) {
    if (a.grid != b.grid || a.support != b.support)
        throw std::invalid_argument(std::string(who) + ": incompatible grids");
}
} // namespace

GridFn operator+(const GridFn& a, const GridFn& b) {
    require_compatible(a, b, "GridFn operator+");
    GridFn out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

GridFn operator-(const GridFn& a, const GridFn& b) {
    require_compatible(a, b, "GridFn operator-");
    GridFn out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

GridFn operator*(cplx scale, const GridFn& a) {
    GridFn out = a;
    for (auto& v : out.values) v *= scale;
    return out;
}

double l2_norm(const GridFn& u) {
    double s = 0.0;
    for (const auto& v : u.values) s += std::norm(v);
    return std::sqrt(s);
}

double relative_l2_error(const GridFn& u, const GridFn& ref) {
    require_compatible(u, ref, "relative_l2_error");
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < u.values.size(); ++i) {
        num += std::norm(u.values[i] - ref.values[i]);
        den += std::norm(ref.values[i]);
    }
    if (den == 0.0)
        throw std::invalid_argument("relative_l2_error: reference is identically zero");
    return std::sqrt(num / den);
}

} // namespace muhs
