#pragma once

#include <map>
#include <string>
#include <vector>

#include "minsupp/extremals.hpp"

namespace minsupp {

/// A closed-form (u, V) pair together with the certificate kinds it is
/// expected to satisfy.  The exact-profile evaluators (when present) agree
/// with the sampled GridFunction at the nodes.
struct ConstructionRecord {
    std::string name;
    Domain domain;
    GridFunction u;
    std::function<double(double)> u_exact;  // null for discrete-only profiles
    Potential V;
    std::map<std::string, double> parameters;
    std::vector<std::string> claims;  // certificate kinds

    // optional extra scenario data consumed by the verify module
    std::function<double(double)> W, divW;  // radial first-order term w(rho)
    double E = 0.0;
    double beta = 1.0;
    double q = 1.0;  // natural Sobolev exponent for the claims
};

/// u = (1+rho^2)^{(2-n)/2} on Ball(n, rho_max) with V = n(n-2)/(1+rho^2)^2;
/// the pair attains equality in the critical Sobolev inequality on R^n.
ConstructionRecord talenti_bubble(int n, double rho_max = 50.0, std::size_t size = 2048);

/// Analytic bound for the mass of |V_bubble|^{n/2} beyond rho_max (full
/// n-dimensional integral): omega_n (n(n-2))^{n/2} rho_max^{-n} / n.
double bubble_tail_bound(int n, double rho_max);

/// Bubble matched to a linear bridge on (R, R+1) and a harmonic tail
/// c rho^{2-n} + d vanishing at R_hat; V = -Delta u / u is supported in
/// [0, R+1] and the critical product K^n int |V|^{n/2} exceeds 1 by O(1/R).
ConstructionRecord truncated_bubble(int n, double R, std::size_t size = 2048);

/// C^1 profile on Ball(n,1): u = rho^{2-n} - 1 (n >= 3; -ln rho for n = 2)
/// glued to a parabolic cap a - b rho^2 on [0, eps]; V is supported in B_eps
/// and ||V_eps||_r -> 0 for every r < n/2.
ConstructionRecord small_support_counterexample(int n, double eps, std::size_t size = 1024);

/// margin * ((n-2)/2)^2 |x|^{-2} (kind "origin") or margin * (1/4) dist^{-2}
/// (kind "boundary"); density at exact-boundary nodes is stored as 0 (the
/// evaluator keeps the exact singular values for interior quadrature points).
enum class HardyKind { Origin, Boundary };
Potential hardy_potential(GridPtr grid, HardyKind kind, double margin = 1.0);

/// u = 1 - |x|/b on (-b, b) with V = (2/b) delta_0; attains b ||V||_M = 2.
ConstructionRecord hat_1d(double b, std::size_t size = 257);

/// Hat with the corner replaced by a parabola on (-delta, delta); V is a
/// bounded density with b ||V||_1 > 2, decreasing to 2 as delta -> 0.
ConstructionRecord mollified_hat(double b, double delta, std::size_t size = 1024);

struct ManufacturedOptions {
    std::function<double(double)> W, divW;  // radial first-order term
    double E = 0.0;                         // eigenvalue shift, <= 0
    WeightPair weights;
    double beta = 1.0;
    bool gradient_form = false;  // -div(a grad u) = b V |grad u|^beta
    double delta_rel = 1e-6;     // division guard, relative to max |u|
};

/// Inverse-problem generator: V is defined through the same discrete
/// operators the residual checker uses, so pde_residual of the produced pair
/// vanishes to rounding, and V converges to the continuum potential at O(h^2).
ConstructionRecord manufactured_solution(const GridFunction& u,
                                         const ManufacturedOptions& opts = {});

/// Extremal pair of the nonlinear power equation -Delta u = V |u|^{beta-1} u:
/// u_* maximizes the quotient at q_hat = q(beta+1)/2 and
/// V = c u_*^{(q-1)(beta+1)} with c = ||grad u_*||^2 / ||u_*||_{2q_hat}^{2q_hat}.
ConstructionRecord nonlinear_equality_family(const Domain& domain, double beta, double q,
                                             const MaximizeOptions& opts = {});

/// Truncated-logarithm trial profile on the unit disk:
/// u = sqrt(ln(1/delta)/(2 pi)) min(1, ln(1/rho)/ln(1/delta)); ||grad u||_2 = 1.
ConstructionRecord moser_profile(double delta, std::size_t size = 1024);

/// Best exponential-functional lower bound over a fixed delta family of
/// truncated-logarithm profiles on the unit disk (an estimate from below of
/// the constant of the exponential-integrability inequality).
struct C2Estimate {
    double value;
    double best_delta;
};
C2Estimate estimate_c2(std::size_t size = 1024);

struct CatalogEntry {
    std::string name;
    std::string description;
    std::map<std::string, double> default_parameters;
    std::vector<std::string> claims;
};

/// Stable, alphabetized listing of the named constructions.
std::vector<CatalogEntry> catalog();

/// Instantiate a catalog construction by name; `params` overrides defaults.
ConstructionRecord instantiate(const std::string& name,
                               const std::map<std::string, double>& params = {});

}  // namespace minsupp
