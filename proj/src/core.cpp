#include "minsupp/grid_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace minsupp {

std::string Domain::describe() const {
    auto num = [](double x) { return std::to_string(x); };
    switch (kind_) {
        case DomainKind::Interval:
            return "interval(" + num(lo_) + ", " + num(hi_) + ")";
        case DomainKind::Ball:
            return "ball(n=" + std::to_string(n_) + ", R=" + num(hi_) + ")";
        case DomainKind::Annulus:
            return "annulus(n=" + std::to_string(n_) + ", c=" + num(lo_) + ", d=" + num(hi_) +
                   ")";
    }
    throw std::logic_error("unreachable");
}

double gradient_norm_sq(const GridFunction& u, const GridFunction* a) {
    const RadialGrid& g = u.grid();
    if (a) {
        if (a->grid_ptr().get() != &g)
            throw std::invalid_argument("gradient_norm_sq: weight on a different grid");
        for (double v : a->values())
            if (!(v > 0)) throw std::invalid_argument("gradient_norm_sq: weight must be positive");
    }
    double s = 0.0;
    for (std::size_t c = 0; c < g.cells(); ++c) {
        double slope = (u[c + 1] - u[c]) / g.spacing(c);
        double am = a ? 0.5 * ((*a)[c] + (*a)[c + 1]) : 1.0;
        s += am * g.cell_m0(c) * slope * slope;
    }
    return g.domain().angular_factor() * s;
}

std::vector<double> laplacian(const GridFunction& u) {
    if (u.size() < 3) throw std::invalid_argument("laplacian: need at least 3 nodes");
    return fd_laplacian(u.grid(), u.values());
}

}  // namespace minsupp
