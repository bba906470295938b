#pragma once

#include "muhs/types.hpp"

#include <functional>
#include <vector>

namespace muhs {

// One-sided factor symbols (sigma +- i xi_n)^mu with the principal branch.
// Requires sigma >= 1 so the base stays in the open right half-plane.
cplx plus_symbol(double sigma, double xi_n, cplx mu);
cplx minus_symbol(double sigma, double xi_n, cplx mu);

// A polyhomogeneous symbol given termwise: term j is positively homogeneous
// of degree order_m - degree_j in xi.  Homogeneity of every term is checked
// at construction (scaling by t = 2 and 3 at a few sample points, relative
// tolerance 1e-10); a violating evaluator is rejected immediately.
class SymbolSpec {
public:
    using Evaluator = std::function<cplx(const std::vector<double>& xi)>;

    struct Term {
        int degree_j = 0;
        Evaluator evaluator;
    };

    SymbolSpec(cplx order_m, std::vector<Term> terms, int dimension_n);

    cplx order_m() const { return order_m_; }
    int dimension_n() const { return dimension_n_; }
    const std::vector<Term>& terms() const { return terms_; }

    // Built-in families used throughout: |xi|^{2a}, and the half-plane
    // factors |xi'| + i xi_n, |xi'| - i xi_n (last coordinate is normal).
    static SymbolSpec abs2a(cplx a, int dimension_n = 2);
    static SymbolSpec halfplane_plus(int dimension_n = 2);
    static SymbolSpec halfplane_minus(int dimension_n = 2);

private:
    cplx order_m_;
    std::vector<Term> terms_;
    int dimension_n_;
};

// Result of the transmission parity check: one residual per (term, xi-
// derivative multi-index), where residual is
//   | d^alpha p_j(-N) - e^{i pi (m - 2 mu - j - |alpha|)} d^alpha p_j(N) |
// normalized by max(1, |d^alpha p_j(N)|).
struct TransmissionReport {
    struct Entry {
        int degree_j;
        std::vector<int> alpha;
        double residual;
    };
    std::vector<Entry> residuals;
    bool passes = false;
    double tolerance_used = 0.0;
};

// Checks the twisted parity of each homogeneous term across the boundary
// normal, for x-independent symbols, covering |alpha| <= 1 with central
// finite differences of step fd_step.
TransmissionReport check_mu_transmission(const SymbolSpec& spec, cplx mu,
                                         const std::vector<double>& normal,
                                         double fd_step = 1e-4,
                                         double tol = 1e-6);

} // namespace muhs
