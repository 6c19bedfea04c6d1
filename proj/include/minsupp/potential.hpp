#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "minsupp/grid_function.hpp"

namespace minsupp {

/// Point mass of a 1D measure potential.
struct Atom {
    double location;
    double mass;
};

/// Signed-measure potential: an absolutely continuous density plus (in one
/// dimension only) a finite list of atoms.  An optional analytic evaluator for
/// the density enables cell-wise Gauss quadrature of piecewise-smooth
/// integrands.
class Potential {
public:
    Potential() = default;

    explicit Potential(GridFunction density,
                       std::function<double(double)> evaluator = nullptr)
        : density_(std::move(density)), evaluator_(std::move(evaluator)) {}

    static Potential atoms_only(std::vector<Atom> atoms) {
        Potential p;
        p.set_atoms(std::move(atoms), 1);
        return p;
    }

    Potential with_atoms(std::vector<Atom> atoms) const {
        Potential p = *this;
        int n = density_ ? density_->grid().dim() : 1;
        p.set_atoms(std::move(atoms), n);
        return p;
    }

    bool has_density() const { return density_.has_value(); }
    const GridFunction& density() const { return *density_; }
    bool has_evaluator() const { return static_cast<bool>(evaluator_); }
    double evaluate(double rho) const { return evaluator_(rho); }
    const std::function<double(double)>& evaluator() const { return evaluator_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Nodal positive / negative parts of the density.
    GridFunction positive_part() const { return signed_part(+1); }
    GridFunction negative_part() const { return signed_part(-1); }

private:
    void set_atoms(std::vector<Atom> atoms, int n) {
        if (!atoms.empty() && n != 1)
            throw std::invalid_argument("Potential: atoms are admitted only in dimension 1");
        atoms_ = std::move(atoms);
    }
    GridFunction signed_part(int sign) const {
        if (!density_) throw std::logic_error("Potential: no density");
        std::vector<double> v = density_->values();
        for (double& x : v) x = sign > 0 ? std::max(x, 0.0) : std::max(-x, 0.0);
        return GridFunction(density_->grid_ptr(), std::move(v), false, false);
    }

    std::optional<GridFunction> density_;
    std::function<double(double)> evaluator_;
    std::vector<Atom> atoms_;
};

}  // namespace minsupp
