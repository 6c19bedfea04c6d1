#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace minsupp {

enum class DomainKind { Interval, Ball, Annulus };

/// Radial domain descriptor: an interval (-b,b), a ball B_R(0) in R^n, or an
/// annulus {c < |x| < d}.  All other geometry in the toolkit derives from the
/// radial extent [radial_lo, radial_hi] and the surface measure weight rho^{n-1}.
class Domain {
public:
    static Domain interval(double b) {
        if (!(b > 0)) throw std::invalid_argument("Domain::interval: b must be > 0");
        return Domain(DomainKind::Interval, 1, -b, b);
    }
    /// 1D segment (lo, hi); same machinery as interval, translated.
    static Domain segment(double lo, double hi) {
        if (!(lo < hi)) throw std::invalid_argument("Domain::segment: lo < hi required");
        return Domain(DomainKind::Interval, 1, lo, hi);
    }
    static Domain ball(int n, double R) {
        if (n < 1) throw std::invalid_argument("Domain::ball: dimension must be >= 1");
        if (!(R > 0)) throw std::invalid_argument("Domain::ball: radius must be > 0");
        return Domain(DomainKind::Ball, n, 0.0, R);
    }
    static Domain annulus(int n, double c, double d) {
        if (n < 2) throw std::invalid_argument("Domain::annulus: dimension must be >= 2");
        if (!(0 < c && c < d && std::isfinite(d)))
            throw std::invalid_argument("Domain::annulus: need 0 < c < d < inf");
        return Domain(DomainKind::Annulus, n, c, d);
    }

    DomainKind kind() const { return kind_; }
    int dim() const { return n_; }
    double radial_lo() const { return lo_; }
    double radial_hi() const { return hi_; }

    /// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2).
    double sphere_area() const {
        return 2.0 * std::pow(M_PI, 0.5 * n_) / std::tgamma(0.5 * n_);
    }
    /// Volume of the unit ball, omega_n / n.
    double unit_ball_volume() const { return sphere_area() / n_; }

    /// Angular factor applied when promoting a radial-profile integral
    /// int f rho^{n-1} drho to the full n-dimensional integral.  For 1D
    /// grids the profile already spans the whole interval, so the factor is 1.
    double angular_factor() const { return n_ == 1 ? 1.0 : sphere_area(); }

    double volume() const {
        switch (kind_) {
            case DomainKind::Interval: return hi_ - lo_;
            case DomainKind::Ball: return unit_ball_volume() * std::pow(hi_, n_);
            case DomainKind::Annulus:
                return (sphere_area() / n_) * (std::pow(hi_, n_) - std::pow(lo_, n_));
        }
        throw std::logic_error("unreachable");
    }
    double diameter() const {
        switch (kind_) {
            case DomainKind::Interval: return hi_ - lo_;
            case DomainKind::Ball: return 2.0 * hi_;
            case DomainKind::Annulus: return 2.0 * hi_;
        }
        throw std::logic_error("unreachable");
    }

    /// Distance from radius rho to the nearest boundary sphere / endpoint.
    double boundary_distance(double rho) const {
        switch (kind_) {
            case DomainKind::Interval: return std::min(rho - lo_, hi_ - rho);
            case DomainKind::Ball: return hi_ - rho;
            case DomainKind::Annulus: return std::min(rho - lo_, hi_ - rho);
        }
        throw std::logic_error("unreachable");
    }

    /// Whether the inner radial endpoint carries a Dirichlet condition for
    /// W_0^{1,2} membership (balls instead impose symmetry at the origin).
    bool inner_is_boundary() const { return kind_ != DomainKind::Ball; }

    std::string describe() const;

    bool operator==(const Domain&) const = default;

private:
    Domain(DomainKind k, int n, double lo, double hi) : kind_(k), n_(n), lo_(lo), hi_(hi) {}
    DomainKind kind_;
    int n_;
    double lo_, hi_;
};

}  // namespace minsupp
