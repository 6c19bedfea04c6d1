#include "minsupp/extremals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "minsupp/fem.hpp"

namespace minsupp {

GridFunction WeightPair::sample(const std::function<double(double)>& f, GridPtr g) {
    if (!f) return GridFunction::constant(std::move(g), 1.0);
    GridFunction w = GridFunction::sample(std::move(g), f, false, false);
    for (double v : w.values())
        if (!(v > 0) || !std::isfinite(v))
            throw std::invalid_argument("WeightPair: weights must be positive and bounded");
    return w;
}

double rayleigh_quotient(const GridFunction& u, double q, const WeightPair& w) {
    GridFunction a = w.sample_a(u.grid_ptr());
    GridFunction b = w.sample_b(u.grid_ptr());
    double grad = gradient_norm_sq(u, &a);
    if (!(grad > 0)) throw std::invalid_argument("rayleigh_quotient: u has zero gradient norm");
    double num = q == kInf ? u.max_abs() : lebesgue_norm(u, 2.0 * q, &b);
    return num / std::sqrt(grad);
}

namespace {

double quotient(const GridFunction& u, double q, const Tridiag& A, const GridFunction& b,
                double angular) {
    double grad = angular * A.quadratic_form(u.values());
    double num = q == kInf ? u.max_abs() : lebesgue_norm(u, 2.0 * q, &b);
    return num / std::sqrt(grad);
}

ExtremalResult green_argmax_1d(GridPtr grid) {
    // q = inf on (lo, hi): sup |u(y)| / ||u'||_2 = sqrt(G(y,y)) with
    // G(y,y) = (y-lo)(hi-y)/(hi-lo), maximal at the midpoint.  The extremal is
    // the tent G(., y*).
    const Domain& d = grid->domain();
    if (d.dim() != 1)
        throw std::invalid_argument("maximize_constant: q = inf requires n = 1");
    double lo = d.radial_lo(), hi = d.radial_hi(), mid = 0.5 * (lo + hi);
    double slope = 1.0 / std::sqrt(hi - lo);  // normalizes ||u'||_2 = 1
    GridFunction u = GridFunction::sample_dirichlet(
        grid, [&](double x) { return slope * (x <= mid ? x - lo : hi - x); });
    double K = u.max_abs() / std::sqrt(gradient_norm_sq(u));
    return {K, u, 0, 0.0, std::numeric_limits<double>::quiet_NaN(), {K}};
}

ExtremalResult maximize_once(GridPtr grid, double q, const WeightPair& w,
                             const MaximizeOptions& opts) {
    if (q == kInf) {
        if (w.trivial()) return green_argmax_1d(std::move(grid));
        throw std::invalid_argument("maximize_constant: weighted q = inf is not supported");
    }
    const Domain& dom = grid->domain();
    double qbar = dom.dim() >= 3 ? double(dom.dim()) / (dom.dim() - 2) : kInf;
    if (!(q < qbar))
        throw std::invalid_argument(
            "maximize_constant: q must be strictly subcritical (no extremal at q_bar)");
    if (!(q >= 1.0)) throw std::invalid_argument("maximize_constant: q must be >= 1");

    GridFunction a = w.sample_a(grid);
    GridFunction b = w.sample_b(grid);
    Tridiag A = assemble_stiffness(*grid, &a);
    std::vector<double> mass = lumped_mass(*grid, &b);
    const double angular = dom.angular_factor();

    // init: first Dirichlet eigenfunction of the weighted Laplacian
    std::vector<double> v(grid->size(), 1.0);
    auto [i0, i1] = free_range(*grid);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i < i0 || i > i1) v[i] = 0.0;
    for (int it = 0; it < 30; ++it) {
        std::vector<double> rhs(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = mass[i] * v[i];
        v = dirichlet_solve(A, *grid, rhs);
        double nrm = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) nrm += mass[i] * v[i] * v[i];
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
    }
    GridFunction u(grid, v, i0 == 1, true);
    {
        double e = gradient_norm_sq(u, &a);
        std::vector<double> sv = u.values();
        for (double& x : sv) x /= std::sqrt(e);
        u = u.with_values(std::move(sv));
    }

    double Kq = quotient(u, q, A, b, angular);
    std::vector<double> history{Kq};
    int iters = 0;
    double change = 0.0;
    for (; iters < opts.max_iter; ++iters) {
        double unorm = lebesgue_norm(u, 2.0 * q, &b);
        std::vector<double> rhs(grid->size());
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            double ui = std::max(u[i], 0.0) / unorm;  // scale-free load
            rhs[i] = mass[i] * std::pow(ui, 2.0 * q - 1.0);
        }
        std::vector<double> next = dirichlet_solve(A, *grid, rhs);
        GridFunction un(grid, std::move(next), i0 == 1, true);
        double e = gradient_norm_sq(un, &a);
        std::vector<double> sv = un.values();
        for (double& x : sv) x /= std::sqrt(e);
        un = un.with_values(std::move(sv));

        double Knew = quotient(un, q, A, b, angular);
        change = std::abs(Knew - Kq) / Knew;
        u = std::move(un);
        Kq = Knew;
        history.push_back(Kq);
        if (change < opts.tol) { ++iters; break; }
    }
    if (change >= opts.tol)
        throw std::runtime_error("maximize_constant: no convergence within max_iter");
    return {Kq, u, iters, change, std::numeric_limits<double>::quiet_NaN(),
            std::move(history)};
}

}  // namespace

ExtremalResult maximize_constant_on(GridPtr grid, double q, const WeightPair& w,
                                    const MaximizeOptions& opts) {
    ExtremalResult res = maximize_once(grid, q, w, opts);
    if (opts.refine_levels >= 2) {
        std::vector<double> ks{res.K};
        GridPtr g = std::move(grid);
        for (int l = 0; l < opts.refine_levels; ++l) {
            g = g->refine();
            ks.push_back(maximize_once(g, q, w, opts).K);
        }
        double d1 = std::abs(ks[ks.size() - 2] - ks[ks.size() - 3]);
        double d2 = std::abs(ks[ks.size() - 1] - ks[ks.size() - 2]);
        if (d2 > 0) res.refinement_order = std::log2(d1 / d2);
    }
    return res;
}

ExtremalResult maximize_constant(const Domain& domain, double q, const WeightPair& w,
                                 const MaximizeOptions& opts) {
    return maximize_constant_on(RadialGrid::make(domain, opts.grid_size, opts.grading), q, w,
                                opts);
}

Potential euler_lagrange_potential(const ExtremalResult& res, double q, const WeightPair& w) {
    if (q == kInf)
        throw std::invalid_argument(
            "euler_lagrange_potential: no Euler-Lagrange form at q = inf (see hat_1d)");
    GridFunction a = w.sample_a(res.u.grid_ptr());
    GridFunction b = w.sample_b(res.u.grid_ptr());
    double grad = gradient_norm_sq(res.u, &a);
    double unorm = lebesgue_norm(res.u, 2.0 * q, &b);
    double c = grad / std::pow(unorm, 2.0 * q);
    std::vector<double> v(res.u.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = c * std::pow(std::abs(res.u[i]), 2.0 * q - 2.0);
    return Potential(GridFunction(res.u.grid_ptr(), std::move(v), false, false));
}

double talenti_constant(int n) {
    if (n < 3) throw std::invalid_argument("talenti_constant: requires n >= 3");
    double lg = (std::lgamma(double(n)) - std::lgamma(0.5 * n)) / n;
    return std::exp(lg) / std::sqrt(double(n) * (n - 2) * M_PI);
}

double radial_constant_relation(double K, double q, int n) {
    double omega = 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
    double expo = (q == kInf ? 0.0 : 1.0 / (2.0 * q)) - 0.5;
    return std::pow(omega, expo) * K;
}

double dilation_scale(double K, double t, int n, double q) {
    if (!(t > 0)) throw std::invalid_argument("dilation_scale: t must be > 0");
    double expo = 1.0 - 0.5 * n + (q == kInf ? 0.0 : 0.5 * n / q);
    return K * std::pow(t, expo);
}

double mt_functional(const GridFunction& u) {
    double grad = gradient_norm_sq(u);
    if (!(grad > 0)) throw std::invalid_argument("mt_functional: u has zero gradient norm");
    const RadialGrid& g = u.grid();
    double s = g.integrate_gauss(
        [&](double, double uv) { return std::expm1(4.0 * M_PI * uv * uv / grad); },
        u.values());
    return g.domain().angular_factor() * s / g.domain().volume();
}

MtExtremalPotential mt_extremal_potential(const GridFunction& u) {
    double grad = gradient_norm_sq(u);
    if (!(grad > 0)) throw std::invalid_argument("mt_extremal_potential: trivial u");
    std::vector<double> w = u.values();
    for (double& x : w) x /= std::sqrt(grad);
    const RadialGrid& g = u.grid();
    std::vector<double> e(w.size()), integrand(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        e[i] = std::exp(4.0 * M_PI * w[i] * w[i]);
        integrand[i] = w[i] * w[i] * e[i];
    }
    double denom = g.domain().angular_factor() * g.integrate(integrand);
    if (!(denom > std::numeric_limits<double>::min()))
        throw std::runtime_error("mt_extremal_potential: denominator underflow");
    for (double& x : e) x /= denom;
    Potential V(GridFunction(u.grid_ptr(), std::move(e), false, false));
    return {std::move(V), 1.0 / denom};
}

EigenResult first_eigenpair(GridPtr grid, const WeightPair& w) {
    GridFunction a = w.sample_a(grid);
    GridFunction b = w.sample_b(grid);
    Tridiag A = assemble_stiffness(*grid, &a);
    std::vector<double> mass = lumped_mass(*grid, &b);
    auto [i0, i1] = free_range(*grid);
    std::vector<double> v(grid->size(), 0.0);
    for (std::size_t i = i0; i <= i1; ++i) v[i] = 1.0;
    double lambda = 0.0;
    for (int it = 0; it < 500; ++it) {
        std::vector<double> rhs(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = mass[i] * v[i];
        std::vector<double> next = dirichlet_solve(A, *grid, rhs);
        double num = A.quadratic_form(next), den = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) den += mass[i] * next[i] * next[i];
        double lnew = num / den;
        double scale = 1.0 / std::sqrt(den);
        for (double& x : next) x *= scale;
        v = std::move(next);
        if (it > 2 && std::abs(lnew - lambda) <= 1e-14 * lnew) { lambda = lnew; break; }
        lambda = lnew;
    }
    return {lambda, GridFunction(std::move(grid), std::move(v), i0 == 1, true)};
}

}  // namespace minsupp
