#pragma once

#include "minsupp/domain.hpp"
#include "minsupp/exponents.hpp"
#include "minsupp/potential.hpp"

namespace minsupp {

/// Which signed slice of a potential a norm sees.
enum class Part { Signed, Plus, Minus, Abs };

/// Full n-dimensional weighted Lebesgue norm of a radial profile:
/// (omega_n int |f|^p b rho^{n-1} drho)^{1/p}; p = inf returns the node max.
double lebesgue_norm(const GridFunction& f, double p, const GridFunction* b = nullptr);

/// Same for a potential density (atoms rejected); uses the analytic evaluator
/// with cell-wise Gauss quadrature when one is attached.
double potential_norm(const Potential& V, double p, Part part = Part::Abs,
                      const GridFunction* b = nullptr);

/// ||V||_M = int |density| + sum |atom masses|.
double total_variation(const Potential& V);

/// The Orlicz pair: M(t) = e^t - 1 and N(y) = y log y - y + 1 for y >= 1,
/// 0 otherwise.
double young_M(double t);
double young_N(double y);

/// M(U) + N(v) - U v  (>= 0, zero iff v = e^U, or U = 0 with v <= 1).
double young_gap(double U, double v);

/// F(lambda) = lambda int_D N(V_+ / lambda) dx.
double F_of_lambda(const Potential& V, double lambda, Part part = Part::Plus);

struct OrliczContext {
    Domain domain;
    double C2;  // Moser-Trudinger constant (configured or estimated)
};

struct LuxemburgResult {
    double value;
    double lambda;  // argmin
};

/// ||V||_{N_D} = inf_lambda { lambda + lambda/(C2 |D|) int N(|V|/lambda) },
/// minimized by bracketing plus golden-section on log lambda.
LuxemburgResult luxemburg_norm(const Potential& V, const OrliczContext& ctx);

}  // namespace minsupp
