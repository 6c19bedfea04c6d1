#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "minsupp/grid.hpp"

namespace minsupp {

/// Sampled radial profile on a grid, standing in for a member of W_0^{1,2,a}.
/// Boundary flags record which endpoints the function vanishes at; a set flag
/// forces the endpoint value to exactly 0.
class GridFunction {
public:
    GridFunction(GridPtr grid, std::vector<double> values, bool zero_inner, bool zero_outer)
        : grid_(std::move(grid)), values_(std::move(values)),
          zero_inner_(zero_inner), zero_outer_(zero_outer) {
        if (!grid_) throw std::invalid_argument("GridFunction: null grid");
        if (values_.size() != grid_->size())
            throw std::invalid_argument("GridFunction: value count != node count");
        if (zero_inner_) values_.front() = 0.0;
        if (zero_outer_) values_.back() = 0.0;
        for (double v : values_)
            if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite value");
    }

    static GridFunction sample(GridPtr grid, const std::function<double(double)>& f,
                               bool zero_inner, bool zero_outer) {
        std::vector<double> v(grid->size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid->node(i));
        return GridFunction(std::move(grid), std::move(v), zero_inner, zero_outer);
    }

    static GridFunction constant(GridPtr grid, double c) {
        return GridFunction(std::move(grid), std::vector<double>(grid ? grid->size() : 0, c),
                            false, false);
    }

    /// Vanishing where W_0 membership requires it: the outer boundary always,
    /// the inner one unless the domain is a ball.
    static GridFunction sample_dirichlet(GridPtr grid, const std::function<double(double)>& f) {
        bool inner = grid->domain().inner_is_boundary();
        return sample(std::move(grid), f, inner, true);
    }

    const RadialGrid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }
    bool zero_inner() const { return zero_inner_; }
    bool zero_outer() const { return zero_outer_; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Piecewise-linear interpolation.
    double interp(double rho) const {
        std::size_t c = grid_->locate(rho);
        double x0 = grid_->node(c), x1 = grid_->node(c + 1);
        double t = (rho - x0) / (x1 - x0);
        return (1.0 - t) * values_[c] + t * values_[c + 1];
    }

    GridFunction with_values(std::vector<double> v) const {
        return GridFunction(grid_, std::move(v), zero_inner_, zero_outer_);
    }

private:
    GridPtr grid_;
    std::vector<double> values_;
    bool zero_inner_, zero_outer_;
};

/// omega_n int a |u'|^2 rho^{n-1} drho, assembled cell-wise with the weight
/// frozen at cell midpoints (for n = 1 the plain Dirichlet integral).
double gradient_norm_sq(const GridFunction& u, const GridFunction* a = nullptr);

/// Radial Laplacian of u at the nodes (endpoints NaN; see fd_laplacian).
std::vector<double> laplacian(const GridFunction& u);

}  // namespace minsupp
