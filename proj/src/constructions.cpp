#include "minsupp/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minsupp/fem.hpp"
#include "minsupp/norms.hpp"

namespace minsupp {

namespace {

// Append the open-ended linear/log partition (a, b] with m cells.
void append_lin(std::vector<double>& pts, double a, double b, std::size_t m) {
    for (std::size_t i = 1; i <= m; ++i) pts.push_back(a + (b - a) * double(i) / double(m));
    pts.back() = b;
}
void append_log(std::vector<double>& pts, double a, double b, std::size_t m) {
    if (!(a > 0)) throw std::invalid_argument("append_log: requires a > 0");
    double la = std::log(a), lb = std::log(b);
    for (std::size_t i = 1; i <= m; ++i)
        pts.push_back(std::exp(la + (lb - la) * double(i) / double(m)));
    pts.back() = b;
}

// Ball grid from breakpoints starting at 0: stagger the first node.
GridPtr ball_grid(const Domain& d, const std::vector<double>& bp) {
    std::vector<double> nodes;
    nodes.reserve(bp.size());
    nodes.push_back(0.5 * bp[1]);
    nodes.insert(nodes.end(), bp.begin() + 1, bp.end());
    return RadialGrid::from_nodes(d, std::move(nodes));
}

bool near(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); }

}  // namespace

// ---------------------------------------------------------------------------

ConstructionRecord talenti_bubble(int n, double rho_max, std::size_t size) {
    if (n < 3) throw std::invalid_argument("talenti_bubble: requires n >= 3");
    if (!(rho_max > 1.0)) throw std::invalid_argument("talenti_bubble: rho_max must exceed 1");
    Domain dom = Domain::ball(n, rho_max);
    std::vector<double> bp{0.0};
    std::size_t m1 = size / 2;
    append_lin(bp, 0.0, 1.0, m1);
    append_log(bp, 1.0, rho_max, size - m1);
    GridPtr grid = ball_grid(dom, bp);

    const double nn = double(n);
    auto ue = [nn](double rho) { return std::pow(1.0 + rho * rho, 0.5 * (2.0 - nn)); };
    auto ve = [nn](double rho) {
        double d = 1.0 + rho * rho;
        return nn * (nn - 2.0) / (d * d);
    };
    GridFunction u = GridFunction::sample(grid, ue, false, false);
    Potential V(GridFunction::sample(grid, ve, false, false), ve);

    ConstructionRecord rec{"talenti_bubble", dom, std::move(u), ue, std::move(V),
                           {{"n", nn}, {"rho_max", rho_max}},
                           {"critical"}};
    rec.q = n >= 3 ? nn / (nn - 2.0) : kInf;
    return rec;
}

double bubble_tail_bound(int n, double rho_max) {
    Domain d = Domain::ball(n, rho_max);
    return d.sphere_area() * std::pow(double(n) * (n - 2), 0.5 * n) *
           std::pow(rho_max, -double(n)) / n;
}

ConstructionRecord truncated_bubble(int n, double R, std::size_t size) {
    if (n < 3) throw std::invalid_argument("truncated_bubble: requires n >= 3");
    if (!(R >= 1.0)) throw std::invalid_argument("truncated_bubble: requires R >= 1");
    const double nn = double(n);
    const double s = std::pow(R * R + 1.0, -0.5 * nn);
    const double a = (2.0 - nn) * R * s;
    const double b = s * (R * R * (nn - 1.0) + 1.0);
    const double c = R * std::pow(R + 1.0, nn - 1.0) * s;
    const double d = ((1.0 - nn) * R + 1.0) * s;
    if (!(d < 0.0))
        throw std::invalid_argument("truncated_bubble: no zero crossing (R too small)");
    const double R_hat = std::pow(c / (-d), 1.0 / (nn - 2.0));

    Domain dom = Domain::ball(n, R_hat);
    std::vector<double> bp{0.0};
    std::size_t m = std::max<std::size_t>(size / 4, 32);
    append_lin(bp, 0.0, 1.0, m);
    append_log(bp, 1.0, R, m);
    append_lin(bp, R, R + 1.0, m);
    append_log(bp, R + 1.0, R_hat, m);
    GridPtr grid = ball_grid(dom, bp);

    auto ue = [=](double rho) {
        if (rho <= R) return std::pow(1.0 + rho * rho, 0.5 * (2.0 - nn));
        if (rho < R + 1.0) return a * rho + b;
        return c * std::pow(rho, 2.0 - nn) + d;
    };
    auto v_core = [nn](double rho) {
        double t = 1.0 + rho * rho;
        return nn * (nn - 2.0) / (t * t);
    };
    auto v_bridge = [=](double rho) { return -(nn - 1.0) * a / (rho * (a * rho + b)); };
    auto ve = [=](double rho) {
        if (rho < R) return v_core(rho);
        if (near(rho, R)) return 0.5 * (v_core(R) + v_bridge(R));
        if (rho < R + 1.0) return v_bridge(rho);
        if (near(rho, R + 1.0)) return 0.5 * v_bridge(R + 1.0);
        return 0.0;
    };
    GridFunction u = GridFunction::sample(grid, ue, false, true);
    Potential V(GridFunction::sample(grid, ve, false, false), ve);

    ConstructionRecord rec{"truncated_bubble", dom, std::move(u), ue, std::move(V),
                           {{"n", nn}, {"R", R}, {"a", a}, {"b", b}, {"c", c}, {"d", d},
                            {"R_hat", R_hat}},
                           {"critical"}};
    rec.q = nn / (nn - 2.0);
    return rec;
}

ConstructionRecord small_support_counterexample(int n, double eps, std::size_t size) {
    if (n < 2) throw std::invalid_argument("small_support_counterexample: requires n >= 2");
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("small_support_counterexample: eps must lie in (0, 1/2)");
    const double nn = double(n);
    double bcoef, acoef;
    std::function<double(double)> outer;
    if (n == 2) {
        bcoef = 0.5 / (eps * eps);
        acoef = 0.5 - std::log(eps);
        outer = [](double rho) { return -std::log(rho); };
    } else {
        bcoef = 0.5 * (nn - 2.0) * std::pow(eps, -nn);
        acoef = 0.5 * nn * std::pow(eps, 2.0 - nn) - 1.0;
        outer = [nn](double rho) { return std::pow(rho, 2.0 - nn) - 1.0; };
    }
    if (!(acoef > bcoef * eps * eps))
        throw std::invalid_argument("small_support_counterexample: cap positivity violated");

    Domain dom = Domain::ball(n, 1.0);
    std::vector<double> bp{0.0};
    std::size_t m = std::max<std::size_t>(size / 2, 32);
    append_lin(bp, 0.0, eps, m);
    append_log(bp, eps, 1.0, size - m);
    GridPtr grid = ball_grid(dom, bp);

    auto ue = [=](double rho) {
        return rho <= eps ? acoef - bcoef * rho * rho : outer(rho);
    };
    auto v_cap = [=](double rho) { return 2.0 * bcoef * nn / (acoef - bcoef * rho * rho); };
    auto ve = [=](double rho) {
        if (rho < eps) return v_cap(rho);
        if (near(rho, eps)) return 0.5 * v_cap(eps);
        return 0.0;
    };
    GridFunction u = GridFunction::sample(grid, ue, false, true);
    Potential V(GridFunction::sample(grid, ve, false, false), ve);

    ConstructionRecord rec{"small_support_counterexample", dom, std::move(u), ue, std::move(V),
                           {{"n", nn}, {"eps", eps}, {"a", acoef}, {"b", bcoef}},
                           {"main"}};
    rec.q = 2.0;  // paired with r = 2 > n/2 for n <= 4 by default
    return rec;
}

Potential hardy_potential(GridPtr grid, HardyKind kind, double margin) {
    if (!(margin > 0.0 && margin <= 1.0))
        throw std::invalid_argument("hardy_potential: margin must lie in (0, 1]");
    const Domain dom = grid->domain();
    std::function<double(double)> ve;
    if (kind == HardyKind::Origin) {
        for (double x : grid->nodes())
            if (!(std::abs(x) > 0))
                throw std::invalid_argument("hardy_potential: origin kind needs nodes off 0");
        double cst = margin * 0.25 * (dom.dim() - 2.0) * (dom.dim() - 2.0);
        ve = [cst](double rho) { return cst / (rho * rho); };
    } else {
        double cst = margin * 0.25;
        ve = [cst, dom](double rho) {
            double d = dom.boundary_distance(rho);
            return cst / (d * d);
        };
    }
    std::vector<double> vals(grid->size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double rho = grid->node(i);
        // boundary nodes of the distance potential are singular; store 0 there
        // (the evaluator keeps the exact values for interior quadrature points)
        if (kind == HardyKind::Boundary && dom.boundary_distance(rho) <= 0.0)
            vals[i] = 0.0;
        else
            vals[i] = ve(rho);
    }
    return Potential(GridFunction(std::move(grid), std::move(vals), false, false), ve);
}

ConstructionRecord hat_1d(double b, std::size_t size) {
    if (!(b > 0)) throw std::invalid_argument("hat_1d: b must be > 0");
    if (size % 2 == 0) ++size;  // keep a node exactly at the peak x = 0
    Domain dom = Domain::interval(b);
    GridPtr grid = RadialGrid::make(dom, size);
    auto ue = [b](double x) { return 1.0 - std::abs(x) / b; };
    GridFunction u = GridFunction::sample_dirichlet(grid, ue);
    Potential V = Potential::atoms_only({{0.0, 2.0 / b}});

    ConstructionRecord rec{"hat_1d", dom, std::move(u), ue, std::move(V),
                           {{"b", b}}, {"one_d_measure"}};
    rec.q = kInf;
    return rec;
}

ConstructionRecord mollified_hat(double b, double delta, std::size_t size) {
    if (!(b > 0) || !(delta > 0) || !(delta < b))
        throw std::invalid_argument("mollified_hat: need 0 < delta < b");
    Domain dom = Domain::interval(b);
    std::size_t m = std::max<std::size_t>(size / 3, 32);
    std::vector<double> nodes{-b};
    append_lin(nodes, -b, -delta, m);
    append_lin(nodes, -delta, delta, m);
    append_lin(nodes, delta, b, m);
    GridPtr grid = RadialGrid::from_nodes(dom, std::move(nodes));

    const double A = 1.0 - 0.5 * delta / b;
    auto ue = [=](double x) {
        double ax = std::abs(x);
        return ax >= delta ? 1.0 - ax / b : A - x * x / (2.0 * delta * b);
    };
    auto v_cap = [=](double x) { return (1.0 / (delta * b)) / ue(x); };
    auto ve = [=](double x) {
        double ax = std::abs(x);
        if (ax < delta) return v_cap(x);
        if (near(ax, delta)) return 0.5 * v_cap(delta);
        return 0.0;
    };
    GridFunction u = GridFunction::sample_dirichlet(grid, ue);
    Potential V(GridFunction::sample(grid, ve, false, false), ve);

    ConstructionRecord rec{"mollified_hat", dom, std::move(u), ue, std::move(V),
                           {{"b", b}, {"delta", delta}}, {"one_d_measure"}};
    rec.q = kInf;
    return rec;
}

ConstructionRecord manufactured_solution(const GridFunction& u, const ManufacturedOptions& opts) {
    GridPtr grid = u.grid_ptr();
    GridFunction a = opts.weights.sample_a(grid);
    GridFunction bw = opts.weights.sample_b(grid);
    Tridiag A = assemble_stiffness(*grid, &a);
    std::vector<double> mass = lumped_mass(*grid, &bw);
    std::vector<double> Au = A.apply(u.values());
    std::vector<double> g = fd_gradient(*grid, u.values());
    auto [i0, i1] = free_range(*grid);

    const double delta = opts.delta_rel * std::max(u.max_abs(), 1e-300);
    std::vector<double> v(grid->size(), 0.0);
    for (std::size_t i = i0; i <= i1; ++i) {
        double core = Au[i] / mass[i];
        if (opts.gradient_form) {
            double gb = std::pow(std::abs(g[i]), opts.beta);
            if (!(gb > delta * delta))
                throw std::domain_error("manufactured_solution: |grad u| below guard at node " +
                                        std::to_string(i));
            v[i] = core / gb;
        } else {
            if (opts.W) core -= opts.W(grid->node(i)) * g[i];
            core -= opts.E * u[i];
            if (!(std::abs(u[i]) > delta))
                throw std::domain_error("manufactured_solution: |u| below guard at node " +
                                        std::to_string(i));
            v[i] = core / (u[i] * std::pow(std::abs(u[i]), opts.beta - 1.0));
        }
    }
    Potential V(GridFunction(grid, std::move(v), false, false));

    std::string claim = "main";
    if (opts.gradient_form) claim = "gradient_power";
    else if (opts.W) claim = "first_order";
    else if (opts.beta != 1.0) claim = "nonlinear_power";
    else if (opts.E != 0.0) claim = "eigen_shift";

    ConstructionRecord rec{"manufactured", grid->domain(), u, nullptr, std::move(V),
                           {{"beta", opts.beta}, {"E", opts.E}}, {claim}};
    rec.W = opts.W;
    rec.divW = opts.divW;
    rec.E = opts.E;
    rec.beta = opts.beta;
    return rec;
}

ConstructionRecord nonlinear_equality_family(const Domain& domain, double beta, double q,
                                             const MaximizeOptions& opts) {
    if (!(beta >= 1.0)) throw std::invalid_argument("nonlinear_equality_family: beta >= 1");
    double q_hat = q * (beta + 1.0) / 2.0;
    ExtremalResult res = maximize_constant(domain, q_hat, {}, opts);
    double grad = gradient_norm_sq(res.u);
    double unorm = lebesgue_norm(res.u, 2.0 * q_hat);
    double c = grad / std::pow(unorm, 2.0 * q_hat);
    std::vector<double> v(res.u.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = c * std::pow(std::abs(res.u[i]), (q - 1.0) * (beta + 1.0));
    Potential V(GridFunction(res.u.grid_ptr(), std::move(v), false, false));

    ConstructionRecord rec{"nonlinear_equality_family", domain, res.u, nullptr, std::move(V),
                           {{"beta", beta}, {"q", q}, {"q_hat", q_hat}, {"c", c},
                            {"K", res.K}},
                           {"nonlinear_power"}};
    rec.beta = beta;
    rec.q = q;
    return rec;
}

ConstructionRecord moser_profile(double delta, std::size_t size) {
    if (!(delta > 0 && delta < 1))
        throw std::invalid_argument("moser_profile: delta must lie in (0, 1)");
    Domain dom = Domain::ball(2, 1.0);
    std::vector<double> bp{0.0};
    std::size_t m = std::max<std::size_t>(size / 4, 32);
    append_lin(bp, 0.0, delta, m);
    append_log(bp, delta, 1.0, size - m);
    GridPtr grid = ball_grid(dom, bp);

    const double L = std::log(1.0 / delta);
    const double s = std::sqrt(L / (2.0 * M_PI));
    auto ue = [=](double rho) {
        return rho <= delta ? s : s * std::log(1.0 / rho) / L;
    };
    GridFunction u = GridFunction::sample(grid, ue, false, true);
    // The record's potential is the discrete-exact one (so the pair is a true
    // weak solution); the exponential extremal potential of the same profile
    // is available separately through mt_extremal_potential.
    ConstructionRecord man = manufactured_solution(u);

    ConstructionRecord rec{"moser_profile", dom, std::move(u), ue, std::move(man.V),
                           {{"delta", delta}}, {"orlicz_lambda"}};
    rec.q = 1.0;
    return rec;
}

C2Estimate estimate_c2(std::size_t size) {
    C2Estimate best{0.0, 0.0};
    for (double delta : {0.5, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01}) {
        ConstructionRecord rec = moser_profile(delta, size);
        double val = mt_functional(rec.u);
        if (val > best.value) best = {val, delta};
    }
    return best;
}

// ---------------------------------------------------------------------------

std::vector<CatalogEntry> catalog() {
    return {
        {"hat_1d", "peak profile 1 - |x|/b with the point-mass potential (2/b) delta_0",
         {{"b", 1.0}}, {"one_d_measure"}},
        {"mollified_hat", "hat with a parabolic cap of half-width delta; bounded potential",
         {{"b", 1.0}, {"delta", 0.1}}, {"one_d_measure"}},
        {"moser_profile",
         "truncated-logarithm trial profile on the unit disk with its extremal potential",
         {{"delta", 0.1}}, {"orlicz_lambda"}},
        {"nonlinear_equality_family",
         "power-equation equality pair V = c u^{(q-1)(beta+1)} on (0,1)",
         {{"beta", 2.0}, {"q", 2.0}}, {"nonlinear_power"}},
        {"small_support_counterexample",
         "C^1 profile on the unit ball whose potential concentrates on B_eps",
         {{"n", 3.0}, {"eps", 0.1}}, {"main"}},
        {"talenti_bubble", "critical-equality bubble (1+rho^2)^{(2-n)/2} on a truncated ball",
         {{"n", 3.0}, {"rho_max", 50.0}}, {"critical"}},
        {"truncated_bubble",
         "bubble matched to a linear bridge and a harmonic tail vanishing at R_hat",
         {{"n", 3.0}, {"R", 10.0}}, {"critical"}},
    };
}

ConstructionRecord instantiate(const std::string& name,
                               const std::map<std::string, double>& params) {
    auto get = [&](const std::string& key, double dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    auto sz = [&](double dflt) { return std::size_t(get("size", dflt)); };
    if (name == "hat_1d") return hat_1d(get("b", 1.0), sz(257));
    if (name == "mollified_hat")
        return mollified_hat(get("b", 1.0), get("delta", 0.1), sz(1024));
    if (name == "moser_profile") return moser_profile(get("delta", 0.1), sz(1024));
    if (name == "nonlinear_equality_family") {
        Domain dom = Domain::segment(0.0, 1.0);
        MaximizeOptions mo;
        mo.grid_size = sz(double(mo.grid_size));
        return nonlinear_equality_family(dom, get("beta", 2.0), get("q", 2.0), mo);
    }
    if (name == "small_support_counterexample")
        return small_support_counterexample(int(get("n", 3.0)), get("eps", 0.1), sz(1024));
    if (name == "talenti_bubble")
        return talenti_bubble(int(get("n", 3.0)), get("rho_max", 50.0), sz(2048));
    if (name == "truncated_bubble")
        return truncated_bubble(int(get("n", 3.0)), get("R", 10.0), sz(2048));
    throw std::invalid_argument("instantiate: unknown construction '" + name + "'");
}

}  // namespace minsupp
