#include "minsupp/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minsupp {

namespace {

double apply_part(double v, Part part) {
    switch (part) {
        case Part::Signed: return v;
        case Part::Plus: return std::max(v, 0.0);
        case Part::Minus: return std::max(-v, 0.0);
        case Part::Abs: return std::abs(v);
    }
    return v;
}

}  // namespace

double lebesgue_norm(const GridFunction& f, double p, const GridFunction* b) {
    if (!(p >= 1.0)) throw std::invalid_argument("lebesgue_norm: p must be >= 1");
    const RadialGrid& g = f.grid();
    if (b && b->grid_ptr().get() != &g)
        throw std::invalid_argument("lebesgue_norm: weight on a different grid");
    if (p == kInf) return f.max_abs();
    std::vector<double> integrand(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        double bi = b ? (*b)[i] : 1.0;
        if (b && !(bi > 0)) throw std::invalid_argument("lebesgue_norm: weight must be positive");
        integrand[i] = std::pow(std::abs(f[i]), p) * bi;
    }
    double s = g.domain().angular_factor() * g.integrate(integrand);
    return std::pow(s, 1.0 / p);
}

double potential_norm(const Potential& V, double p, Part part, const GridFunction* b) {
    if (!V.atoms().empty())
        throw std::invalid_argument("potential_norm: Lebesgue norms are undefined with atoms");
    if (!V.has_density()) return 0.0;
    const GridFunction& d = V.density();
    if (p == kInf) {
        double m = 0.0;
        for (double v : d.values()) m = std::max(m, std::abs(apply_part(v, part)));
        return m;
    }
    const RadialGrid& g = d.grid();
    if (V.has_evaluator() && !b) {
        double s = g.integrate_gauss([&](double rho) {
            return std::pow(std::abs(apply_part(V.evaluate(rho), part)), p);
        });
        return std::pow(g.domain().angular_factor() * s, 1.0 / p);
    }
    std::vector<double> vals = d.values();
    for (double& v : vals) v = apply_part(v, part);
    GridFunction sliced = d.with_values(std::move(vals));
    return lebesgue_norm(sliced, p, b);
}

double total_variation(const Potential& V) {
    double s = 0.0;
    if (V.has_density()) {
        Potential density_only(V.density(),
                               V.has_evaluator() ? V.evaluator() : nullptr);
        s = potential_norm(density_only, 1.0, Part::Abs);
    }
    for (const Atom& a : V.atoms()) s += std::abs(a.mass);
    return s;
}

double young_M(double t) {
    if (t < 0) throw std::invalid_argument("young_M: negative input");
    return std::expm1(t);
}

double young_N(double y) {
    if (y < 0) throw std::invalid_argument("young_N: negative input");
    if (y <= 1.0) return 0.0;
    double e = y - 1.0;
    return y * std::log1p(e) - e;  // y log y - y + 1, cancellation-safe near 1
}

double young_gap(double U, double v) {
    if (U < 0 || v < 0) throw std::invalid_argument("young_gap: negative input");
    return young_M(U) + young_N(v) - U * v;
}

double F_of_lambda(const Potential& V, double lambda, Part part) {
    if (!(lambda > 0)) throw std::invalid_argument("F_of_lambda: lambda must be > 0");
    if (!V.atoms().empty())
        throw std::invalid_argument("F_of_lambda: Orlicz machinery is for function potentials");
    if (!V.has_density()) return 0.0;
    const RadialGrid& g = V.density().grid();
    double s;
    if (V.has_evaluator()) {
        s = g.integrate_gauss(
            [&](double rho) { return young_N(apply_part(V.evaluate(rho), part) / lambda); });
    } else {
        std::vector<double> integrand(V.density().size());
        for (std::size_t i = 0; i < integrand.size(); ++i)
            integrand[i] = young_N(apply_part(V.density()[i], part) / lambda);
        s = g.integrate(integrand);
    }
    return lambda * g.domain().angular_factor() * s;
}

LuxemburgResult luxemburg_norm(const Potential& V, const OrliczContext& ctx) {
    if (!(ctx.C2 > 0)) throw std::invalid_argument("luxemburg_norm: C2 must be > 0");
    if (!V.atoms().empty())
        throw std::invalid_argument("luxemburg_norm: atoms are not admitted");
    double vol = ctx.domain.volume();
    double l1 = V.has_density() ? potential_norm(V, 1.0, Part::Abs) : 0.0;
    if (l1 == 0.0) return {0.0, 0.0};
    double linf = potential_norm(V, kInf, Part::Abs);

    auto objective = [&](double lambda) {
        return lambda + F_of_lambda(V, lambda, Part::Abs) / (ctx.C2 * vol);
    };

    // minimizer scale lies between ||V||_1/(e |D|) and ||V||_inf; expand until
    // bracketed
    double lo = l1 / (std::exp(1.0) * vol);
    double hi = std::max(linf, lo * 2.0);
    for (int expand = 0; expand < 60; ++expand) {
        if (objective(lo * 0.5) > objective(lo) && objective(hi * 2.0) > objective(hi)) break;
        if (objective(lo * 0.5) <= objective(lo)) lo *= 0.5;
        if (objective(hi * 2.0) <= objective(hi)) hi *= 2.0;
        if (expand == 59)
            throw std::runtime_error("luxemburg_norm: failed to bracket the minimizer");
    }

    // golden section on log lambda
    double a = std::log(lo * 0.5), b = std::log(hi * 2.0);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = objective(std::exp(x1)), f2 = objective(std::exp(x2));
    for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a); f1 = objective(std::exp(x1));
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a); f2 = objective(std::exp(x2));
        }
    }
    double lam = std::exp(0.5 * (a + b));
    return {objective(lam), lam};
}

}  // namespace minsupp
