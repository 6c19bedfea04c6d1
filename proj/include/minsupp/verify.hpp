#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsupp/constructions.hpp"

namespace minsupp {

/// Weak form of the equation a residual is measured against.
struct PdeForm {
    enum class Kind { Plain, Weighted, FirstOrder, Power, GradientPower };
    Kind kind = Kind::Plain;
    WeightPair w;                        // Weighted
    std::function<double(double)> W;     // FirstOrder: radial component w(rho)
    double beta = 1.0;                   // Power / GradientPower
    double E = 0.0;                      // eigenvalue shift (<= 0)
};

/// Discrete weak residual of -div(a grad u) = rhs(V, u, ...) measured in the
/// dual (H^{-1}-type) norm sqrt(r^T A^{-1} r) and normalized by ||grad u||_a;
/// scale-free, O(h^2) for exact pairs, bounded away from 0 for wrong ones.
double pde_residual(const GridFunction& u, const Potential& V, const PdeForm& form = {});

/// Gap of the weak-form energy identity in the form's natural pairing:
/// |int a|grad u|^2 - int V u g(u) b - E int u^2 b - sum m u(x0)^2 - flux|
/// with g(u) = u (plain/weighted/first-order, the first-order form adding
/// int (W . grad u) u), g(u) = u|u|^{beta-1} (power), |grad u|^beta (gradient
/// power).  The flux term covers profiles that do not vanish at a truncation
/// radius.  Requires pde_residual in the same form below `residual_gate` (the
/// identity is only claimed for solutions) and throws with the measured
/// residual otherwise.
double green_identity_gap(const GridFunction& u, const Potential& V, const PdeForm& form = {},
                          double residual_gate = 0.05);

/// |int grad(u^2) . W + int u^2 div W - boundary term| for the radial field
/// W = w(rho) x/rho (n = 1: W = w(x) e_x); exact 0 when w is null.
double minigreen_gap(const GridFunction& u, const std::function<double(double)>& w,
                     const std::function<double(double)>& dw);

struct Certificate {
    std::string kind;
    std::vector<std::pair<std::string, double>> quantities;
    double lhs = 0.0, rhs = 0.0, slack = 0.0, tol = 0.0;
    bool pass = false;
    bool strict = false;   // the underlying inequality is strict
    bool sharp = false;    // strict certificates: slack > +tol
    bool vacuous = false;  // residual gate failed: hypothesis not established
    std::vector<std::pair<std::string, std::string>> metadata;

    double quantity(const std::string& name) const;
};

/// Everything a certificate kind may need; unused fields are ignored.
struct VerifyInput {
    std::optional<GridFunction> u;
    Potential V;
    std::optional<Domain> domain;  // defaults to u's grid domain
    double r = kInf;               // Lebesgue exponent for V (q = r*)
    double beta = 1.0;
    double E = 0.0;
    double s = kInf;  // first_order_rough exponent (default 2r)
    std::function<double(double)> W, divW;  // radial first-order term
    std::function<double(double)> phi;      // exact-W weight exponent
    WeightPair weights;
    std::optional<double> K;  // supplied embedding constant
    std::string K_provenance = "supplied";
    std::optional<double> C2;
    HardyKind hardy_kind = HardyKind::Origin;
    double hardy_margin = 1.0;
    double tol = 1e-6;
    std::optional<double> residual_gate;
    int lambda_scan = 50;
    MaximizeOptions mopts;
};

const std::vector<std::string>& certificate_kinds();

Certificate check_certificate(const std::string& kind, const VerifyInput& in);

/// Input prepopulated from a catalog record (u, V, domain, W, E, beta, q-implied r).
VerifyInput input_from_record(const ConstructionRecord& rec);

/// Embedding constant with provenance: closed form where available (1D q=inf,
/// Talenti at the critical index), variational otherwise.
std::pair<double, std::string> embedding_constant(const Domain& domain, double q,
                                                  const WeightPair& w = {},
                                                  const MaximizeOptions& opts = {});

/// Seeded random boundary-vanishing trial profile (a few low trigonometric
/// modes with Gaussian coefficients); deterministic for a fixed seed.
GridFunction random_trial(GridPtr grid, unsigned seed, int modes = 5);

}  // namespace minsupp
