#pragma once

#include <functional>
#include <optional>

#include "minsupp/norms.hpp"

namespace minsupp {

/// Positive weights (a, b) of the divergence-form problem, given as radial
/// profiles so they can be sampled on any grid.  Null means identically 1.
struct WeightPair {
    std::function<double(double)> a;
    std::function<double(double)> b;

    bool trivial() const { return !a && !b; }
    GridFunction sample_a(GridPtr g) const { return sample(a, std::move(g)); }
    GridFunction sample_b(GridPtr g) const { return sample(b, std::move(g)); }

private:
    static GridFunction sample(const std::function<double(double)>& f, GridPtr g);
};

struct ExtremalResult {
    double K;                  // estimated embedding constant
    GridFunction u;            // nonnegative maximizer, ||grad u||_{2,a} = 1
    int iterations;
    double residual;           // final relative change of the quotient
    double refinement_order;   // NaN unless a refinement study was requested
    std::vector<double> quotient_history;
};

struct MaximizeOptions {
    std::size_t grid_size = 513;
    Grading grading{};
    double tol = 1e-10;
    int max_iter = 10000;
    int refine_levels = 0;  // >=2 enables the convergence-order estimate
};

/// ||u||_{2q,b} / ||grad u||_{2,a}; scale invariant.
double rayleigh_quotient(const GridFunction& u, double q, const WeightPair& w = {});

/// Fixed-point maximization of the weighted Sobolev quotient: repeatedly solve
/// -div(a grad u_{k+1}) = b u_k^{2q-1} / ||u_k||_{2q,b}^{2q-1} and renormalize.
/// Requires q strictly subcritical, or (n = 1, q = inf) which uses the
/// closed-form Green-function argmax.
ExtremalResult maximize_constant(const Domain& domain, double q, const WeightPair& w = {},
                                 const MaximizeOptions& opts = {});
/// Same on a caller-supplied grid.
ExtremalResult maximize_constant_on(GridPtr grid, double q, const WeightPair& w = {},
                                    const MaximizeOptions& opts = {});

/// V = u_*^{2q-2} ||grad u_*||_{2,a}^2 / ||u_*||_{2q,b}^{2q}; the pair
/// (u_*, V) solves -div(a grad u) = b V u and gives K^2 ||V||_{r,b} = 1.
Potential euler_lagrange_potential(const ExtremalResult& res, double q,
                                   const WeightPair& w = {});

/// Talenti's sharp constant (n(n-2) pi)^{-1/2} (Gamma(n)/Gamma(n/2))^{1/n}, n >= 3.
double talenti_constant(int n);

/// K_{q,rad}(A) = omega_n^{1/(2q) - 1/2} K for the 1D weighted constant K.
double radial_constant_relation(double K, double q, int n);

/// Dilation law K -> K t^{1 - n/2 + n/(2q)}; the exponent vanishes at q = q_bar.
double dilation_scale(double K, double t, int n, double q);

/// int_D (e^{4 pi (u/||grad u||_2)^2} - 1) dx / |D|, a lower bound for the
/// Moser-Trudinger constant C2.  Scale invariant in u.
double mt_functional(const GridFunction& u);

/// V = e^{4 pi u^2} / int u^2 e^{4 pi u^2} dx after renormalizing
/// ||grad u||_2 = 1; satisfies int U V dx = 4 pi with U = 4 pi u^2, and
/// attains equality in Young's inequality at lambda = 1/int u^2 e^{4 pi u^2}.
struct MtExtremalPotential {
    Potential V;
    double lambda;  // the equality value of lambda
};
MtExtremalPotential mt_extremal_potential(const GridFunction& u);

struct EigenResult {
    double lambda;   // first eigenvalue of -div(a grad u) = lambda b u
    GridFunction u;  // positive eigenfunction
};
EigenResult first_eigenpair(GridPtr grid, const WeightPair& w = {});

}  // namespace minsupp
