#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "minsupp/grid_function.hpp"

namespace minsupp {

/// Symmetric tridiagonal matrix (P1 stiffness on a 1D grid).
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] couples node i and i+1

    std::size_t size() const { return diag.size(); }

    std::vector<double> apply(std::span<const double> x) const {
        std::vector<double> y(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            y[i] = diag[i] * x[i];
            if (i > 0) y[i] += off[i - 1] * x[i - 1];
            if (i + 1 < diag.size()) y[i] += off[i] * x[i + 1];
        }
        return y;
    }

    double quadratic_form(std::span<const double> x) const {
        double s = 0.0;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            s += diag[i] * x[i] * x[i];
            if (i + 1 < diag.size()) s += 2.0 * off[i] * x[i] * x[i + 1];
        }
        return s;
    }
};

/// P1 stiffness for -div(a grad .) with the measure rho^{n-1} drho; the weight
/// a is frozen at cell midpoints, the coordinate moment is exact.
inline Tridiag assemble_stiffness(const RadialGrid& g, const GridFunction* a = nullptr) {
    Tridiag A;
    A.diag.assign(g.size(), 0.0);
    A.off.assign(g.size() - 1, 0.0);
    for (std::size_t c = 0; c < g.cells(); ++c) {
        double am = a ? 0.5 * ((*a)[c] + (*a)[c + 1]) : 1.0;
        double k = am * g.cell_m0(c) / (g.spacing(c) * g.spacing(c));
        A.diag[c] += k;
        A.diag[c + 1] += k;
        A.off[c] -= k;
    }
    return A;
}

/// Free (non-Dirichlet) node range of a grid: the outer endpoint is always
/// constrained; the inner one is unless the domain is a ball (symmetry at 0).
inline std::pair<std::size_t, std::size_t> free_range(const RadialGrid& g) {
    std::size_t i0 = g.domain().inner_is_boundary() ? 1 : 0;
    return {i0, g.size() - 2};  // inclusive
}

/// Thomas solve of the tridiagonal system restricted to [i0, i1]; entries
/// outside the range are returned as 0 (homogeneous Dirichlet).
inline std::vector<double> dirichlet_solve(const Tridiag& A, const RadialGrid& g,
                                           std::span<const double> rhs) {
    auto [i0, i1] = free_range(g);
    const std::size_t m = i1 - i0 + 1;
    if (m < 1) throw std::invalid_argument("dirichlet_solve: no free nodes");
    std::vector<double> c(m), d(m);
    double beta = A.diag[i0];
    c[0] = (m > 1) ? A.off[i0] / beta : 0.0;
    d[0] = rhs[i0] / beta;
    for (std::size_t k = 1; k < m; ++k) {
        std::size_t i = i0 + k;
        beta = A.diag[i] - A.off[i - 1] * c[k - 1];
        c[k] = (k + 1 < m) ? A.off[i] / beta : 0.0;
        d[k] = (rhs[i] - A.off[i - 1] * d[k - 1]) / beta;
    }
    for (std::size_t k = m - 1; k-- > 0;) d[k] -= c[k] * d[k + 1];
    std::vector<double> x(g.size(), 0.0);
    for (std::size_t k = 0; k < m; ++k) x[i0 + k] = d[k];
    return x;
}

/// Lumped load weights quad_i * b_i (the discrete pairing int b f psi_i).
inline std::vector<double> lumped_mass(const RadialGrid& g, const GridFunction* b = nullptr) {
    std::vector<double> m = g.quad_weights();
    if (b)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] *= (*b)[i];
    return m;
}

}  // namespace minsupp
