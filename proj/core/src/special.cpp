#include "muhs/special.hpp"

#include <cmath>
#include <limits>

namespace muhs {

namespace {

const double lanczos_g = 7.0;
const double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// P(a,x) by the standard ascending series, valid and fast for x < Re(a)+1.
cplx pseries(cplx a, double x) {
    cplx ap = a;
    cplx sum = 1.0 / a;
    cplx del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x)) / gamma_cplx(a);
}

// Q(a,x) by the Lentz continued fraction, good for x >= Re(a)+1.
cplx qcontfrac(cplx a, double x) {
    const double tiny = 1e-300;
    cplx b = x + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i <= 500; ++i) {
        cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * h / gamma_cplx(a);
}

} // namespace

cplx gamma_cplx(cplx z) {
    if (z.real() < 0.5) {
        // reflection Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const double pi = 3.14159265358979323846;
        return pi / (std::sin(pi * z) * gamma_cplx(1.0 - z));
    }
    z -= 1.0;
    cplx x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
    cplx t = z + lanczos_g + 0.5;
    const double sqrt2pi = 2.5066282746310005024;
    return sqrt2pi * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx lower_gamma_regularized(cplx a, double x) {
    if (!(a.real() > 0.0) || !std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw std::invalid_argument("lower_gamma_regularized: Re(a) must be positive and finite");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("lower_gamma_regularized: x must be finite and nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a.real() + 1.0) return pseries(a, x);
    return 1.0 - qcontfrac(a, x);
}

cplx upper_gamma_regularized(cplx a, double x) {
    if (!(a.real() > 0.0) || !std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw std::invalid_argument("upper_gamma_regularized: Re(a) must be positive and finite");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("upper_gamma_regularized: x must be finite and nonnegative");
    if (x == 0.0) return 1.0;
    if (x < a.real() + 1.0) return 1.0 - pseries(a, x);
    return qcontfrac(a, x);
}

cplx lower_gamma(cplx a, double x) {
    return lower_gamma_regularized(a, x) * gamma_cplx(a);
}

cplx complex_power(cplx base, cplx mu) {
    if (!std::isfinite(base.real()) || !std::isfinite(base.imag()) ||
        !std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
        throw std::invalid_argument("complex_power: non-finite input");
    return std::exp(mu * std::log(base));
}

} // namespace muhs
