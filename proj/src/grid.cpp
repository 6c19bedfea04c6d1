#include "minsupp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace minsupp {

namespace {

// Exact moments of rho^{n-1} over [x0, x1].  n = 1 uses weight 1 so signed
// coordinates (intervals) are fine.
double moment0(int n, double x0, double x1) {
    if (n == 1) return x1 - x0;
    return (std::pow(x1, n) - std::pow(x0, n)) / n;
}
double moment1(int n, double x0, double x1) {
    return (std::pow(x1, n + 1) - std::pow(x0, n + 1)) / (n + 1);
}

std::vector<double> breakpoints(double lo, double hi, std::size_t ncells, const Grading& g) {
    std::vector<double> bp(ncells + 1);
    if (g.kind == Grading::Kind::Uniform || g.ratio == 1.0) {
        for (std::size_t i = 0; i <= ncells; ++i)
            bp[i] = lo + (hi - lo) * double(i) / double(ncells);
    } else {
        if (!(g.ratio > 0) || !std::isfinite(g.ratio))
            throw std::invalid_argument("Grading: ratio must be positive and finite");
        // geometric cell widths w0 * ratio^i growing away from the clustered end
        double r = g.ratio;
        double sum = (std::pow(r, double(ncells)) - 1.0) / (r - 1.0);
        double w0 = (hi - lo) / sum;
        bp[0] = lo;
        if (g.kind == Grading::Kind::ClusterInner) {
            double w = w0;
            for (std::size_t i = 1; i <= ncells; ++i) { bp[i] = bp[i - 1] + w; w *= r; }
        } else {
            double w = w0 * std::pow(r, double(ncells - 1));
            for (std::size_t i = 1; i <= ncells; ++i) { bp[i] = bp[i - 1] + w; w /= r; }
        }
        bp[ncells] = hi;  // kill accumulated rounding
    }
    return bp;
}

}  // namespace

RadialGrid::RadialGrid(const Domain& d, std::vector<double> nodes)
    : domain_(d), nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw std::invalid_argument("RadialGrid: need at least 2 nodes");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw std::invalid_argument("RadialGrid: nodes must be strictly increasing");
    if (domain_.kind() == DomainKind::Ball) {
        if (!(nodes_.front() > 0.0))
            throw std::invalid_argument("RadialGrid: ball grids start strictly inside (staggered)");
    } else if (nodes_.front() != domain_.radial_lo()) {
        throw std::invalid_argument("RadialGrid: nodes must start at the inner radius");
    }
    if (nodes_.back() != domain_.radial_hi())
        throw std::invalid_argument("RadialGrid: nodes must end at the outer radius");
    build_weights();
}

void RadialGrid::build_weights() {
    const int n = dim();
    const std::size_t M = cells();
    m0_.resize(M);
    m1_.resize(M);
    quad_.assign(nodes_.size(), 0.0);
    for (std::size_t i = 0; i < M; ++i) {
        double x0 = nodes_[i], x1 = nodes_[i + 1], h = x1 - x0;
        m0_[i] = moment0(n, x0, x1);
        m1_[i] = moment1(n, x0, x1);
        // exact hat moments: int phi_left rho^{n-1}, int phi_right rho^{n-1}
        double wl = (x1 * m0_[i] - m1_[i]) / h;
        double wr = (m1_[i] - x0 * m0_[i]) / h;
        quad_[i] += wl;
        quad_[i + 1] += wr;
    }
    if (domain_.kind() == DomainKind::Ball) {
        // cap [0, rho_0]: u is even, u' (0) = 0, so freeze f at the first node
        cap_m0_ = std::pow(nodes_.front(), n) / n;
        quad_[0] += cap_m0_;
    }
    for (double w : quad_)
        if (!(w > 0)) throw std::logic_error("RadialGrid: nonpositive quadrature weight");
}

std::shared_ptr<const RadialGrid> RadialGrid::make(const Domain& domain, std::size_t size,
                                                   const Grading& grading) {
    if (size < 16) throw std::invalid_argument("RadialGrid::make: size must be >= 16");
    const bool ball = domain.kind() == DomainKind::Ball;
    // `size` counts nodes
    std::size_t ncells = size - 1;
    std::vector<double> bp =
        breakpoints(domain.radial_lo(), domain.radial_hi(), ncells, grading);
    std::vector<double> nodes;
    if (ball) {
        nodes.reserve(ncells + 1);
        nodes.push_back(0.5 * bp[1]);  // staggered first node
        nodes.insert(nodes.end(), bp.begin() + 1, bp.end());
    } else {
        nodes = std::move(bp);
    }
    return std::shared_ptr<const RadialGrid>(new RadialGrid(domain, std::move(nodes)));
}

std::shared_ptr<const RadialGrid> RadialGrid::from_nodes(const Domain& domain,
                                                         std::vector<double> nodes) {
    return std::shared_ptr<const RadialGrid>(new RadialGrid(domain, std::move(nodes)));
}

double RadialGrid::max_spacing() const {
    double h = 0.0;
    for (std::size_t i = 0; i < cells(); ++i) h = std::max(h, spacing(i));
    return h;
}

double RadialGrid::integrate(std::span<const double> f) const {
    if (f.size() != nodes_.size())
        throw std::invalid_argument("RadialGrid::integrate: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += quad_[i] * f[i];
    return s;
}

double RadialGrid::integrate_gauss(const std::function<double(double, double)>& g,
                                   std::span<const double> uvals) const {
    if (uvals.size() != nodes_.size())
        throw std::invalid_argument("RadialGrid::integrate_gauss: size mismatch");
    const int n = dim();
    const double gp = 0.5 / std::sqrt(3.0);
    double s = 0.0;
    for (std::size_t i = 0; i < cells(); ++i) {
        double x0 = nodes_[i], x1 = nodes_[i + 1], h = x1 - x0, xm = 0.5 * (x0 + x1);
        double ra = xm - gp * h, rb = xm + gp * h;
        double ta = (ra - x0) / h, tb = (rb - x0) / h;
        double ua = (1 - ta) * uvals[i] + ta * uvals[i + 1];
        double ub = (1 - tb) * uvals[i] + tb * uvals[i + 1];
        double wa = n == 1 ? 1.0 : std::pow(ra, n - 1);
        double wb = n == 1 ? 1.0 : std::pow(rb, n - 1);
        s += 0.5 * h * (g(ra, ua) * wa + g(rb, ub) * wb);
    }
    if (cap_m0_ > 0.0) s += cap_m0_ * g(nodes_.front(), uvals.front());
    return s;
}

double RadialGrid::integrate_gauss(const std::function<double(double)>& f) const {
    std::vector<double> zeros(nodes_.size(), 0.0);
    return integrate_gauss([&](double rho, double) { return f(rho); }, zeros);
}

std::shared_ptr<const RadialGrid> RadialGrid::refine() const {
    std::vector<double> nodes;
    nodes.reserve(2 * nodes_.size());
    if (domain_.kind() == DomainKind::Ball) nodes.push_back(0.5 * nodes_.front());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        nodes.push_back(nodes_[i]);
        if (i + 1 < nodes_.size()) nodes.push_back(0.5 * (nodes_[i] + nodes_[i + 1]));
    }
    return std::shared_ptr<const RadialGrid>(new RadialGrid(domain_, std::move(nodes)));
}

std::size_t RadialGrid::locate(double rho) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), rho);
    std::size_t i = it - nodes_.begin();
    if (i == 0) return 0;
    if (i >= nodes_.size()) return cells() - 1;
    return i - 1;
}

std::vector<double> fd_gradient(const RadialGrid& grid, std::span<const double> u) {
    const auto& x = grid.nodes();
    const std::size_t M = x.size();
    if (u.size() != M) throw std::invalid_argument("fd_gradient: size mismatch");
    std::vector<double> g(M);
    auto three_point = [&](double xm, double x0, double xp, double um, double u0, double up) {
        double hm = x0 - xm, hp = xp - x0;
        return (hm * hm * up - hp * hp * um - (hm * hm - hp * hp) * u0) /
               (hm * hp * (hm + hp));
    };
    for (std::size_t i = 1; i + 1 < M; ++i)
        g[i] = three_point(x[i - 1], x[i], x[i + 1], u[i - 1], u[i], u[i + 1]);
    if (grid.domain().kind() == DomainKind::Ball) {
        // even symmetry ghost at -rho_0 carries the same value
        g[0] = three_point(-x[0], x[0], x[1], u[0], u[0], u[1]);
    } else {
        g[0] = three_point(x[2], x[0], x[1], u[2], u[0], u[1]);  // one-sided
    }
    g[M - 1] = three_point(x[M - 3], x[M - 1], x[M - 2], u[M - 3], u[M - 1], u[M - 2]);
    return g;
}

std::vector<double> fd_laplacian(const RadialGrid& grid, std::span<const double> u) {
    const auto& x = grid.nodes();
    const std::size_t M = x.size();
    if (u.size() != M) throw std::invalid_argument("fd_laplacian: size mismatch");
    if (M < 3) throw std::invalid_argument("fd_laplacian: need at least 3 nodes");
    const int n = grid.dim();
    std::vector<double> lap(M, std::numeric_limits<double>::quiet_NaN());
    auto at = [&](double xm, double x0, double xp, double um, double u0, double up) {
        double hm = x0 - xm, hp = xp - x0;
        double upp = 2.0 * (hm * up + hp * um - (hm + hp) * u0) / (hm * hp * (hm + hp));
        double ur = (hm * hm * up - hp * hp * um - (hm * hm - hp * hp) * u0) /
                    (hm * hp * (hm + hp));
        return n == 1 ? upp : upp + (n - 1) / x0 * ur;
    };
    for (std::size_t i = 1; i + 1 < M; ++i)
        lap[i] = at(x[i - 1], x[i], x[i + 1], u[i - 1], u[i], u[i + 1]);
    if (grid.domain().kind() == DomainKind::Ball)
        lap[0] = at(-x[0], x[0], x[1], u[0], u[0], u[1]);
    return lap;
}

}  // namespace minsupp
