#include "minsupp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "minsupp/fem.hpp"
#include "minsupp/norms.hpp"

namespace minsupp {

namespace {

double part_plus(double v) { return std::max(v, 0.0); }

double pow_coord(double x, int n) { return n == 1 ? 1.0 : std::pow(x, n - 1); }

// Nodal density values of V (0 when V carries no density).
std::vector<double> density_values(const Potential& V, const RadialGrid& g) {
    if (!V.has_density()) return std::vector<double>(g.size(), 0.0);
    if (V.density().grid_ptr().get() != &g)
        throw std::invalid_argument("verify: potential sampled on a different grid");
    return V.density().values();
}

// int V u^2 b dmu (full n-dimensional) + atom masses * u(x0)^2.
double potential_u2_integral(const Potential& V, const GridFunction& u, const GridFunction* b,
                             bool positive_part) {
    const RadialGrid& g = u.grid();
    auto part = [&](double v) { return positive_part ? part_plus(v) : v; };
    double s = 0.0;
    if (V.has_density()) {
        if (V.has_evaluator() && !b) {
            s = g.integrate_gauss(
                [&](double rho, double uv) { return part(V.evaluate(rho)) * uv * uv; },
                u.values());
        } else {
            std::vector<double> f(g.size());
            std::vector<double> vd = density_values(V, g);
            for (std::size_t i = 0; i < f.size(); ++i)
                f[i] = part(vd[i]) * u[i] * u[i] * (b ? (*b)[i] : 1.0);
            s = g.integrate(f);
        }
    }
    s *= g.domain().angular_factor();
    for (const Atom& at : V.atoms()) {
        double uw = u.interp(at.location);
        s += part(at.mass) * uw * uw;
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

double pde_residual(const GridFunction& u, const Potential& V, const PdeForm& form) {
    GridPtr grid = u.grid_ptr();
    const bool weighted = form.kind == PdeForm::Kind::Weighted;
    GridFunction a = weighted ? form.w.sample_a(grid) : GridFunction::constant(grid, 1.0);
    GridFunction b = weighted ? form.w.sample_b(grid) : GridFunction::constant(grid, 1.0);
    Tridiag A = assemble_stiffness(*grid, &a);
    std::vector<double> mass = lumped_mass(*grid, &b);
    std::vector<double> vd = density_values(V, *grid);

    std::vector<double> g;
    if (form.kind == PdeForm::Kind::FirstOrder || form.kind == PdeForm::Kind::GradientPower)
        g = fd_gradient(*grid, u.values());

    std::vector<double> rhs(grid->size(), 0.0);

    // With an analytic density the V u load is assembled cell-wise against the
    // hat functions (2-pt Gauss): a lumped load loses an order at a potential
    // jump whose neighboring cells have unequal widths.
    const bool gauss_load = (form.kind == PdeForm::Kind::Plain ||
                             form.kind == PdeForm::Kind::Weighted) &&
                            V.has_density() && V.has_evaluator();
    if (gauss_load) {
        const int n = grid->dim();
        const auto& bf = form.w.b;
        constexpr double gx[2] = {0.21132486540518712, 0.78867513459481288};
        for (std::size_t c = 0; c < grid->cells(); ++c) {
            double x0 = grid->node(c), h = grid->spacing(c);
            for (double t : gx) {
                double rho = x0 + t * h;
                double uv = (1.0 - t) * u[c] + t * u[c + 1];
                double f = V.evaluate(rho) * uv * pow_coord(rho, n) *
                           (bf ? bf(rho) : 1.0) * 0.5 * h;
                rhs[c] += f * (1.0 - t);
                rhs[c + 1] += f * t;
            }
        }
        if (grid->cap_m0() > 0.0) {
            double rho0 = grid->node(0);
            for (double t : gx) {
                double rho = t * rho0;
                rhs[0] += V.evaluate(rho) * u[0] * pow_coord(rho, n) *
                          (bf ? bf(rho) : 1.0) * 0.5 * rho0;
            }
        }
        if (form.E != 0.0)
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += mass[i] * form.E * u[i];
    }

    for (std::size_t i = 0; !gauss_load && i < rhs.size(); ++i) {
        double t;
        switch (form.kind) {
            case PdeForm::Kind::Plain:
            case PdeForm::Kind::Weighted:
                t = vd[i] * u[i] + form.E * u[i];
                break;
            case PdeForm::Kind::FirstOrder:
                t = vd[i] * u[i] + (form.W ? form.W(grid->node(i)) * g[i] : 0.0) +
                    form.E * u[i];
                break;
            case PdeForm::Kind::Power:
                t = vd[i] * u[i] * std::pow(std::abs(u[i]), form.beta - 1.0);
                break;
            case PdeForm::Kind::GradientPower:
                t = vd[i] * std::pow(std::abs(g[i]), form.beta);
                break;
        }
        rhs[i] = mass[i] * t;
    }
    for (const Atom& at : V.atoms()) {
        std::size_t c = grid->locate(at.location);
        double x0 = grid->node(c), x1 = grid->node(c + 1);
        double lam = (at.location - x0) / (x1 - x0);
        double uw = u.interp(at.location);
        rhs[c] += at.mass * uw * (1.0 - lam);
        rhs[c + 1] += at.mass * uw * lam;
    }

    auto [i0, i1] = free_range(*grid);
    std::vector<double> Au = A.apply(u.values());
    std::vector<double> r(grid->size(), 0.0);
    for (std::size_t i = i0; i <= i1; ++i) r[i] = Au[i] - rhs[i];

    std::vector<double> z = dirichlet_solve(A, *grid, r);
    double num = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) num += r[i] * z[i];
    num = std::sqrt(std::max(num, 0.0));
    double den = std::sqrt(A.quadratic_form(u.values()));
    if (!(den > 0)) throw std::invalid_argument("pde_residual: u has zero gradient norm");
    return num / den;
}

double green_identity_gap(const GridFunction& u, const Potential& V, const PdeForm& form,
                          double residual_gate) {
    double res = pde_residual(u, V, form);
    if (!(res <= residual_gate))
        throw std::runtime_error("green_identity_gap: residual gate failed (residual = " +
                                 std::to_string(res) + ")");
    GridPtr grid = u.grid_ptr();
    const int n = grid->dim();
    const bool weighted = form.kind == PdeForm::Kind::Weighted;
    const WeightPair& w = form.w;
    GridFunction a = weighted ? w.sample_a(grid) : GridFunction::constant(grid, 1.0);
    GridFunction b = weighted ? w.sample_b(grid) : GridFunction::constant(grid, 1.0);
    double lhs = gradient_norm_sq(u, &a);
    double angular = grid->domain().angular_factor();

    // g(u) the potential term pairs u with, per weak form.
    double beta = form.beta;
    auto gpow = [beta](double uv) { return uv * std::pow(std::abs(uv), beta - 1.0); };
    const bool grad_form = form.kind == PdeForm::Kind::GradientPower;
    const bool power_form = form.kind == PdeForm::Kind::Power;

    double rhs = 0.0;
    if (V.has_density() && V.has_evaluator() && !grad_form) {
        auto bf = weighted ? w.b : std::function<double(double)>{};
        rhs = angular *
              grid->integrate_gauss(
                  [&](double rho, double uv) {
                      double g = power_form ? gpow(uv) : uv;
                      return V.evaluate(rho) * uv * g * (bf ? bf(rho) : 1.0);
                  },
                  u.values());
    } else if (V.has_density()) {
        // nodal pairing (also used for the gradient-power form, whose
        // discrete-exact pairs are defined through these nodal operators)
        std::vector<double> vd = density_values(V, *grid);
        std::vector<double> g;
        if (grad_form) g = fd_gradient(*grid, u.values());
        std::vector<double> f(grid->size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            double gi = grad_form ? std::pow(std::abs(g[i]), beta)
                                  : (power_form ? gpow(u[i]) : u[i]);
            f[i] = vd[i] * u[i] * gi * b[i];
        }
        rhs = angular * grid->integrate(f);
    }
    for (const Atom& at : V.atoms()) {
        double uw = u.interp(at.location);
        rhs += at.mass * uw * (power_form ? gpow(uw) : uw);
    }
    if (form.E != 0.0) {
        std::vector<double> f(grid->size());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = u[i] * u[i] * b[i];
        rhs += form.E * angular * grid->integrate(f);
    }
    if (form.kind == PdeForm::Kind::FirstOrder && form.W) {
        // int (W . grad u) u dx, cell-wise Gauss with the per-cell slope
        auto W = form.W;
        double sum = 0.0;
        const double gp = 0.5 / std::sqrt(3.0);
        for (std::size_t cell = 0; cell < grid->cells(); ++cell) {
            double x0 = grid->node(cell), x1 = grid->node(cell + 1), h = x1 - x0;
            double slope = (u[cell + 1] - u[cell]) / h;
            for (double xq : {0.5 * (x0 + x1) - gp * h, 0.5 * (x0 + x1) + gp * h}) {
                double t = (xq - x0) / h;
                double uv = (1.0 - t) * u[cell] + t * u[cell + 1];
                sum += 0.5 * h * W(xq) * slope * uv * pow_coord(xq, n);
            }
        }
        rhs += angular * sum;
    }

    // boundary flux omega a rho^{n-1} u u' for profiles that do not vanish at a
    // truncation radius (the ball origin carries no flux)
    std::vector<double> g = fd_gradient(*grid, u.values());
    std::size_t last = grid->size() - 1;
    if (u[last] != 0.0)
        rhs += angular * a[last] * pow_coord(grid->node(last), n) * u[last] * g[last];
    if (grid->domain().inner_is_boundary() && u[0] != 0.0)
        rhs -= angular * a[0] * pow_coord(grid->node(0), n) * u[0] * g[0];

    return std::abs(lhs - rhs);
}

double minigreen_gap(const GridFunction& u, const std::function<double(double)>& w,
                     const std::function<double(double)>& dw) {
    if (!w) return 0.0;
    if (!dw) throw std::invalid_argument("minigreen_gap: derivative of w required");
    const RadialGrid& g = u.grid();
    const int n = g.dim();
    const double gp = 0.5 / std::sqrt(3.0);

    double sum = 0.0;
    for (std::size_t c = 0; c < g.cells(); ++c) {
        double x0 = g.node(c), x1 = g.node(c + 1), h = x1 - x0;
        double slope = (u[c + 1] - u[c]) / h;
        for (double xq : {0.5 * (x0 + x1) - gp * h, 0.5 * (x0 + x1) + gp * h}) {
            double t = (xq - x0) / h;
            double uv = (1.0 - t) * u[c] + t * u[c + 1];
            double divW = dw(xq) + (n > 1 ? (n - 1) * w(xq) / xq : 0.0);
            sum += 0.5 * h * (2.0 * uv * slope * w(xq) + uv * uv * divW) *
                   pow_coord(xq, n);
        }
    }
    // ball cap [0, rho_0]: u is constant there, contributing u0^2 [w rho^{n-1}]
    if (!g.domain().inner_is_boundary())
        sum += u[0] * u[0] * w(g.node(0)) * pow_coord(g.node(0), n);

    std::size_t last = g.size() - 1;
    double boundary = u[last] * u[last] * w(g.node(last)) * pow_coord(g.node(last), n);
    if (g.domain().inner_is_boundary())
        boundary -= u[0] * u[0] * w(g.node(0)) * pow_coord(g.node(0), n);

    return g.domain().angular_factor() * std::abs(sum - boundary);
}

// ---------------------------------------------------------------------------

double Certificate::quantity(const std::string& name) const {
    for (const auto& [k, v] : quantities)
        if (k == name) return v;
    throw std::out_of_range("Certificate: no quantity named '" + name + "'");
}

const std::vector<std::string>& certificate_kinds() {
    static const std::vector<std::string> kinds{
        "annulus_radial", "critical",       "eigen_shift",    "exact_W",
        "first_order",    "first_order_rough", "gradient_power", "hardy",
        "main",           "nonlinear_power", "one_d_measure",  "orlicz_lambda",
        "orlicz_norm",    "volume",          "weighted"};
    return kinds;
}

std::pair<double, std::string> embedding_constant(const Domain& domain, double q,
                                                  const WeightPair& w,
                                                  const MaximizeOptions& opts) {
    const int n = domain.dim();
    if (q == kInf && n == 1 && w.trivial())
        return {std::sqrt(0.25 * (domain.radial_hi() - domain.radial_lo())),
                "closed_form_1d"};
    if (n >= 3 && q == double(n) / (n - 2) && w.trivial())
        return {talenti_constant(n), "talenti"};
    return {maximize_constant(domain, q, w, opts).K, "variational"};
}

namespace {

double conjugate_q(double r) {
    if (r == kInf) return 1.0;
    if (r == 1.0) return kInf;
    if (!(r > 1.0)) throw std::invalid_argument("verify: r must lie in (1, inf]");
    return r / (r - 1.0);
}

struct Ctx {
    const VerifyInput& in;
    const GridFunction& u;
    Domain domain;
    double gate;
    Certificate cert;

    void meta(const std::string& k, const std::string& v) {
        cert.metadata.emplace_back(k, v);
    }
    void qty(const std::string& k, double v) { cert.quantities.emplace_back(k, v); }
    void gate_residual(const Potential& V, const PdeForm& form) {
        double res = pde_residual(u, V, form);
        qty("residual", res);
        if (!(res <= gate)) {
            cert.vacuous = true;
            meta("vacuous", "residual exceeds gate " + std::to_string(gate));
        }
    }
    void finish(double lhs, double rhs, bool strict) {
        cert.lhs = lhs;
        cert.rhs = rhs;
        cert.slack = lhs - rhs;
        cert.tol = in.tol;
        cert.strict = strict;
        cert.pass = !cert.vacuous && cert.slack >= -in.tol;
        cert.sharp = strict && cert.slack > in.tol;
    }
};

// Shared Sobolev -> Green -> Hoelder chain: lhs = K^2 ||Veff_+||_{r, b}.
void chain_main(Ctx& c, const Potential& Veff, double r, double K,
                const std::string& Kprov, const WeightPair& normw, bool strict) {
    GridPtr grid = c.u.grid_ptr();
    double q = conjugate_q(r);
    GridFunction a = normw.sample_a(grid);
    GridFunction b = normw.sample_b(grid);
    const bool wtriv = normw.trivial();

    double grad = gradient_norm_sq(c.u, &a);
    double unorm = q == kInf ? c.u.max_abs() : lebesgue_norm(c.u, 2.0 * q, &b);
    double vnorm = potential_norm(Veff, r, Part::Plus, wtriv ? nullptr : &b);
    double int_signed = potential_u2_integral(Veff, c.u, wtriv ? nullptr : &b, false);
    double int_plus = potential_u2_integral(Veff, c.u, wtriv ? nullptr : &b, true);

    c.qty("K", K);
    c.qty("grad_norm_sq", grad);
    c.qty("u_norm_2q", unorm);
    c.qty("int_V_u2", int_signed);
    c.qty("int_Vplus_u2", int_plus);
    c.qty("V_plus_norm_r", vnorm);
    c.meta("K_provenance", Kprov);
    if (total_variation(Veff) == 0.0) c.meta("note", "vacuous-or-trivial: V is zero");
    c.finish(K * K * vnorm, 1.0, strict);
}

}  // namespace

GridFunction random_trial(GridPtr grid, unsigned seed, int modes) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> coef(modes);
    for (double& c : coef) c = gauss(rng);
    const Domain& d = grid->domain();
    double lo = d.radial_lo(), hi = d.radial_hi();
    const bool ball = !d.inner_is_boundary();
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double x = grid->node(i), s = 0.0;
        for (int k = 1; k <= modes; ++k) {
            if (ball)
                s += coef[k - 1] * std::cos((k - 0.5) * M_PI * x / hi);
            else
                s += coef[k - 1] * std::sin(k * M_PI * (x - lo) / (hi - lo));
        }
        v[i] = s;
    }
    return GridFunction(std::move(grid), std::move(v), !ball, true);
}

VerifyInput input_from_record(const ConstructionRecord& rec) {
    VerifyInput in;
    in.u = rec.u;
    in.V = rec.V;
    in.domain = rec.domain;
    in.beta = rec.beta;
    in.E = rec.E;
    in.W = rec.W;
    in.divW = rec.divW;
    double q = rec.q;
    in.r = q == 1.0 ? kInf : (q == kInf ? 1.0 : q / (q - 1.0));
    return in;
}

Certificate check_certificate(const std::string& kind, const VerifyInput& in) {
    if (!in.u) throw std::invalid_argument("check_certificate: scenario supplies no profile u");
    const GridFunction& u = *in.u;
    GridPtr grid = u.grid_ptr();
    Domain domain = in.domain.value_or(grid->domain());
    const int n = domain.dim();
    double h = grid->max_spacing();
    double gate = in.residual_gate.value_or(std::max(10.0 * h * h, 1e-8));

    Ctx c{in, u, domain, gate, {}};
    c.cert.kind = kind;
    c.meta("grid_size", std::to_string(grid->size()));
    c.meta("h_max", std::to_string(h));

    auto get_K = [&](double q, const WeightPair& w) -> std::pair<double, std::string> {
        if (in.K) return {*in.K, in.K_provenance};
        return embedding_constant(domain, q, w, in.mopts);
    };

    if (kind == "main" || kind == "first_order") {
        Potential Veff = in.V;
        if (kind == "first_order" && in.W) {
            if (!in.divW)
                throw std::invalid_argument("first_order: div W required alongside W");
            std::vector<double> vd = density_values(in.V, *grid);
            for (std::size_t i = 0; i < vd.size(); ++i)
                vd[i] -= 0.5 * in.divW(grid->node(i));
            std::function<double(double)> eval;
            if (in.V.has_evaluator()) {
                auto base = in.V.evaluator();
                auto dv = in.divW;
                eval = [base, dv](double rho) { return base(rho) - 0.5 * dv(rho); };
            }
            Veff = Potential(GridFunction(grid, std::move(vd), false, false), eval);
        }
        PdeForm form;
        if (kind == "first_order" && in.W) {
            form.kind = PdeForm::Kind::FirstOrder;
            form.W = in.W;
        }
        c.gate_residual(in.V, form);
        auto [K, prov] = get_K(conjugate_q(in.r), {});
        chain_main(c, Veff, in.r, K, prov, {}, false);
    } else if (kind == "volume") {
        PdeForm form;
        c.gate_residual(in.V, form);
        double q = conjugate_q(in.r);
        auto [K, prov] = get_K(q, {});
        double vol = domain.volume();
        double e = 1.0 - 0.5 * n + (q == kInf ? 0.0 : 0.5 * n / q);
        double K_star = K * std::pow(vol, -e / n);
        double vfac = std::pow(vol, 2.0 / n - (in.r == kInf ? 0.0 : 1.0 / in.r));
        double vnorm = potential_norm(in.V, in.r, Part::Plus);
        c.qty("K", K);
        c.qty("K_star", K_star);
        c.qty("volume_factor", vfac);
        c.qty("V_plus_norm_r", vnorm);
        c.meta("K_provenance", prov);
        c.finish(K_star * K_star * vfac * vnorm, 1.0, false);
    } else if (kind == "eigen_shift") {
        if (!(in.E <= 0.0)) throw std::invalid_argument("eigen_shift: requires E <= 0");
        PdeForm form;
        form.E = in.E;
        c.gate_residual(in.V, form);
        std::vector<double> vd = density_values(in.V, *grid);
        for (double& x : vd) x += in.E;
        std::function<double(double)> eval;
        if (in.V.has_evaluator()) {
            auto base = in.V.evaluator();
            double E = in.E;
            eval = [base, E](double rho) { return base(rho) + E; };
        }
        Potential Veff(GridFunction(grid, std::move(vd), false, false), eval);
        auto [K, prov] = get_K(conjugate_q(in.r), {});
        c.qty("E", in.E);
        chain_main(c, Veff, in.r, K, prov, {}, false);
    } else if (kind == "critical") {
        if (n < 3) throw std::invalid_argument("critical: requires n >= 3");
        double r = 0.5 * n;
        PdeForm form;
        c.gate_residual(in.V, form);
        auto [K, prov] = get_K(double(n) / (n - 2), {});
        chain_main(c, in.V, r, K, prov, {}, true);
        c.cert.quantities.emplace_back("K_pow_n_int_V",
                                       std::pow(c.cert.lhs, 0.5 * n));
    } else if (kind == "hardy") {
        Potential V = in.V;
        if (!V.has_density() && V.atoms().empty())
            V = hardy_potential(grid, in.hardy_kind, in.hardy_margin);
        double grad = gradient_norm_sq(u);
        double hint = potential_u2_integral(V, u, nullptr, false);
        double l2sq = std::pow(lebesgue_norm(u, 2.0), 2.0);
        double rhs = 0.0;
        if (in.hardy_kind == HardyKind::Boundary && in.hardy_margin == 1.0) {
            double diam = domain.diameter();
            rhs = l2sq / (4.0 * diam * diam);
        }
        c.qty("grad_norm_sq", grad);
        c.qty("hardy_integral", hint);
        c.qty("u_l2_sq", l2sq);
        c.meta("hardy_kind", in.hardy_kind == HardyKind::Origin ? "origin" : "boundary");
        c.finish(grad - hint, rhs, true);
    } else if (kind == "orlicz_lambda" || kind == "orlicz_norm") {
        if (n != 2) throw std::invalid_argument(kind + ": defined for planar domains");
        PdeForm form;
        c.gate_residual(in.V, form);
        double angular = domain.angular_factor();
        if (kind == "orlicz_lambda") {
            double grad = gradient_norm_sq(u);
            std::vector<double> U(grid->size()), Vp = density_values(in.V, *grid);
            for (double& x : Vp) x = part_plus(x);
            std::vector<double> MU(grid->size());
            for (std::size_t i = 0; i < U.size(); ++i) {
                U[i] = 4.0 * M_PI * u[i] * u[i] / grad;
                MU[i] = young_M(U[i]);
            }
            double intM = angular * grid->integrate(MU);
            std::vector<double> UV(grid->size());
            for (std::size_t i = 0; i < U.size(); ++i) UV[i] = U[i] * Vp[i];
            double intUV = angular * grid->integrate(UV);

            double l1 = angular * grid->integrate(Vp);
            double linf = *std::max_element(Vp.begin(), Vp.end());
            double lo = std::max(l1 / (std::exp(1.0) * domain.volume()), 1e-300) * 1e-2;
            double hi = std::max(linf, lo * 1e4) * 1e2;
            int m = std::max(in.lambda_scan, 2);
            double best = kInf, best_lam = lo;
            std::vector<double> NV(grid->size());
            for (int k = 0; k < m; ++k) {
                double lam = std::exp(std::log(lo) +
                                      (std::log(hi) - std::log(lo)) * k / double(m - 1));
                for (std::size_t i = 0; i < NV.size(); ++i) NV[i] = young_N(Vp[i] / lam);
                double val = lam * intM + lam * angular * grid->integrate(NV);
                if (val < best) { best = val; best_lam = lam; }
            }
            c.qty("int_M_U", intM);
            c.qty("int_U_Vplus", intUV);
            c.qty("lambda_argmin", best_lam);
            c.meta("lambda_scan", std::to_string(m));
            c.finish(best, 4.0 * M_PI, false);
        } else {
            double C2;
            if (in.C2) {
                C2 = *in.C2;
                c.meta("C2_provenance", "configured");
            } else {
                C2 = estimate_c2().value;
                c.meta("C2_provenance", "estimated_lower_bound (lhs may under-report)");
            }
            Potential Vp(in.V.positive_part());
            LuxemburgResult lux = luxemburg_norm(Vp, {domain, C2});
            c.qty("C2", C2);
            c.qty("luxemburg_norm", lux.value);
            c.qty("lambda_argmin", lux.lambda);
            c.finish(C2 * domain.volume() * lux.value / (4.0 * M_PI), 1.0, false);
        }
    } else if (kind == "weighted" || kind == "exact_W") {
        WeightPair w = in.weights;
        if (kind == "exact_W") {
            if (!in.phi) throw std::invalid_argument("exact_W: weight exponent phi required");
            auto phi = in.phi;
            auto ew = [phi](double rho) { return std::exp(phi(rho)); };
            w = WeightPair{ew, ew};
        }
        PdeForm form;
        form.kind = PdeForm::Kind::Weighted;
        form.w = w;
        c.gate_residual(in.V, form);
        auto [K, prov] = get_K(conjugate_q(in.r), w);
        chain_main(c, in.V, in.r, K, prov, w, false);
    } else if (kind == "annulus_radial") {
        if (domain.kind() != DomainKind::Annulus)
            throw std::invalid_argument("annulus_radial: requires an annulus domain");
        PdeForm form;
        c.gate_residual(in.V, form);
        double q = conjugate_q(in.r);
        double K;
        std::string prov;
        if (in.K) {
            K = *in.K;
            prov = in.K_provenance;
        } else {
            auto rw = [n](double rho) { return std::pow(rho, n - 1); };
            Domain seg = Domain::segment(domain.radial_lo(), domain.radial_hi());
            double K1 = maximize_constant(seg, q, WeightPair{rw, rw}, in.mopts).K;
            K = radial_constant_relation(K1, q, n);
            prov = "variational_radial";
            c.qty("K_1d_weighted", K1);
        }
        chain_main(c, in.V, in.r, K, prov, {}, false);
    } else if (kind == "first_order_rough") {
        PdeForm form;
        form.kind = PdeForm::Kind::FirstOrder;
        form.W = in.W;
        c.gate_residual(in.V, form);
        double r = in.r;
        double s = in.s == kInf ? 2.0 * r : in.s;
        if (!(s >= 2.0 * r) || !(2.0 * r >= n))
            throw std::invalid_argument("first_order_rough: need s >= 2r >= n");
        auto [K, prov] = get_K(conjugate_q(r), {});
        double vnorm = potential_norm(in.V, r, Part::Abs);
        double wnorm = 0.0;
        if (in.W) {
            auto W = in.W;
            GridFunction wa = GridFunction::sample(
                grid, [W](double rho) { return std::abs(W(rho)); }, false, false);
            wnorm = lebesgue_norm(wa, s);
        }
        double vfac = std::pow(domain.volume(), 0.5 / r - 1.0 / s);
        c.qty("K", K);
        c.qty("V_norm_r", vnorm);
        c.qty("W_norm_s", wnorm);
        c.qty("volume_factor", vfac);
        c.meta("K_provenance", prov);
        c.finish(K * (K * vnorm + vfac * wnorm), 1.0, false);
    } else if (kind == "nonlinear_power") {
        PdeForm form;
        form.kind = PdeForm::Kind::Power;
        form.beta = in.beta;
        c.gate_residual(in.V, form);
        double q = conjugate_q(in.r);
        double q_hat = q * (in.beta + 1.0) / 2.0;
        auto [K, prov] = get_K(q_hat, {});
        double vnorm = potential_norm(in.V, in.r, Part::Plus);
        double unorm = lebesgue_norm(u, 2.0 * q_hat);
        c.qty("K", K);
        c.qty("q_hat", q_hat);
        c.qty("V_plus_norm_r", vnorm);
        c.qty("u_norm_2qhat", unorm);
        c.meta("K_provenance", prov);
        c.finish(K * K * vnorm * std::pow(unorm, in.beta - 1.0), 1.0, false);
    } else if (kind == "gradient_power") {
        PdeForm form;
        form.kind = PdeForm::Kind::GradientPower;
        form.beta = in.beta;
        c.gate_residual(in.V, form);
        if (in.beta == 2.0) {
            std::vector<double> vd = density_values(in.V, *grid);
            double m = 0.0;
            for (std::size_t i = 0; i < vd.size(); ++i)
                m = std::max(m, std::abs(vd[i] * u[i]));
            c.qty("Vu_inf", m);
            c.finish(m, 1.0, false);
        } else {
            if (!(in.beta > 0.0 && in.beta < 2.0))
                throw std::invalid_argument("gradient_power: beta must lie in (0, 2]");
            double denom = 1.0 - 0.5 * in.beta - (in.r == kInf ? 0.0 : 1.0 / in.r);
            if (!(denom > 0.0))
                throw std::invalid_argument("gradient_power: exponents violate the scaling");
            double q = 0.5 / denom;
            auto [K, prov] = get_K(q, {});
            double grad = gradient_norm_sq(u);
            double vnorm = potential_norm(in.V, in.r, Part::Abs);
            c.qty("K", K);
            c.qty("q", q);
            c.qty("grad_norm", std::sqrt(grad));
            c.qty("V_norm_r", vnorm);
            c.meta("K_provenance", prov);
            c.finish(K * std::pow(grad, 0.5 * (in.beta - 1.0)) * vnorm, 1.0, false);
        }
    } else if (kind == "one_d_measure") {
        if (n != 1) throw std::invalid_argument("one_d_measure: requires dimension 1");
        PdeForm form;
        c.gate_residual(in.V, form);
        double bhalf = 0.5 * (domain.radial_hi() - domain.radial_lo());
        double tv = total_variation(in.V);
        c.qty("b", bhalf);
        c.qty("V_total_variation", tv);
        double lhs = bhalf * tv;
        bool atom_free = in.V.atoms().empty();
        double claim_slack = 0.0;
        if (atom_free && in.V.has_density()) {
            std::size_t peak = 0;
            bool tie = false;
            for (std::size_t i = 1; i < u.size(); ++i) {
                if (u[i] > u[peak]) { peak = i; tie = false; }
                else if (u[i] == u[peak]) tie = true;
            }
            if (tie) c.meta("peak", "tie resolved to the leftmost node");
            double cpos = grid->node(peak);
            double hi_end = domain.radial_hi();
            if (cpos < hi_end) {
                // int_c^b |V| via cell quadrature right of the peak
                double s = 0.0;
                std::vector<double> vd = density_values(in.V, *grid);
                for (std::size_t cell = peak; cell < grid->cells(); ++cell)
                    s += 0.5 * grid->spacing(cell) *
                         (std::abs(vd[cell]) + std::abs(vd[cell + 1]));
                double bound = 1.0 / (hi_end - cpos);
                c.qty("peak_location", cpos);
                c.qty("right_mass", s);
                c.qty("right_bound", bound);
                claim_slack = s - bound;
            }
        }
        c.finish(lhs, 2.0, atom_free);
        if (atom_free && claim_slack < -in.tol) {
            c.cert.pass = false;
            c.meta("note", "one-sided mass bound violated");
        }
    } else {
        throw std::invalid_argument("check_certificate: unknown kind '" + kind + "'");
    }
    return c.cert;
}

}  // namespace minsupp
