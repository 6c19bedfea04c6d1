#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "minsupp/domain.hpp"

namespace minsupp {

/// Mesh grading: uniform, or geometric clustering toward one radial endpoint.
struct Grading {
    enum class Kind { Uniform, ClusterInner, ClusterOuter };
    Kind kind = Kind::Uniform;
    double ratio = 1.05;  // geometric growth of cell widths away from the clustered end

    static Grading uniform() { return {}; }
    static Grading cluster_inner(double ratio = 1.05) { return {Kind::ClusterInner, ratio}; }
    static Grading cluster_outer(double ratio = 1.05) { return {Kind::ClusterOuter, ratio}; }
};

/// Graded 1D radial grid with quadrature weights for int f(rho) rho^{n-1} drho.
///
/// Balls are staggered: the first node sits at half the first cell width so the
/// coordinate factor rho^{n-1} never needs evaluation at rho = 0; the cap
/// [0, rho_0] enters the quadrature under the symmetry u'(0) = 0.
///
/// Quadrature weights come from exact moments of the hat basis against
/// rho^{n-1}, so polynomials of degree <= 1 are integrated exactly per cell.
class RadialGrid {
public:
    static std::shared_ptr<const RadialGrid> make(const Domain& domain, std::size_t size,
                                                  const Grading& grading = {});
    /// Build from an explicit strictly increasing node list spanning the
    /// domain's radial extent (balls: first node strictly inside).
    static std::shared_ptr<const RadialGrid> from_nodes(const Domain& domain,
                                                        std::vector<double> nodes);

    const Domain& domain() const { return domain_; }
    int dim() const { return domain_.dim(); }
    std::size_t size() const { return nodes_.size(); }
    std::size_t cells() const { return nodes_.size() - 1; }
    const std::vector<double>& nodes() const { return nodes_; }
    double node(std::size_t i) const { return nodes_[i]; }
    double spacing(std::size_t cell) const { return nodes_[cell + 1] - nodes_[cell]; }
    double max_spacing() const;

    /// Per-node quadrature weights (radial measure only, no angular factor).
    const std::vector<double>& quad_weights() const { return quad_; }

    /// int rho^{n-1} drho over cell i, exact.
    double cell_m0(std::size_t i) const { return m0_[i]; }
    /// Origin cap moment rho_0^n / n for balls, 0 otherwise.
    double cap_m0() const { return cap_m0_; }

    /// Nodal quadrature: sum_i w_i f_i.
    double integrate(std::span<const double> f) const;

    /// Cell-wise two-point Gauss quadrature of g(rho, u(rho)) rho^{n-1} drho,
    /// with u the piecewise-linear interpolant of `uvals`.  Used when an
    /// analytic evaluator is available so piecewise-defined integrands with
    /// breakpoints at nodes keep O(h^2) accuracy.
    double integrate_gauss(const std::function<double(double, double)>& g,
                           std::span<const double> uvals) const;
    double integrate_gauss(const std::function<double(double)>& f) const;

    /// Grid with every cell split at its midpoint (balls: the cap splits too,
    /// keeping the staggered structure).
    std::shared_ptr<const RadialGrid> refine() const;

    /// Index of the cell containing rho (clamped).
    std::size_t locate(double rho) const;

private:
    RadialGrid(const Domain& d, std::vector<double> nodes);
    void build_weights();

    Domain domain_;
    std::vector<double> nodes_;
    std::vector<double> quad_;
    std::vector<double> m0_, m1_;
    double cap_m0_ = 0.0;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Second-order finite-difference nodal gradient (one-sided at endpoints;
/// balls use the even-symmetry ghost at the origin).
std::vector<double> fd_gradient(const RadialGrid& grid, std::span<const double> u);

/// Radial Laplacian u_rr + (n-1)/rho u_r at the nodes.  Endpoint entries are
/// NaN (undefined), except the staggered first ball node which uses the
/// symmetry ghost.
std::vector<double> fd_laplacian(const RadialGrid& grid, std::span<const double> u);

}  // namespace minsupp
