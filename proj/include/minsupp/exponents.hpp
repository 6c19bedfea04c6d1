#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace minsupp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Holder-conjugate pair (r, q) with 1/q + 1/r = 1 (convention 1* = inf),
/// plus the critical index and the derived exponents used by the nonlinear
/// theorems.
class ExponentPair {
public:
    static ExponentPair from_r(double r, int n, std::optional<double> beta = {}) {
        if (!(r > 1.0) && !(r == kInf)) {
            if (r == 1.0) return ExponentPair(1.0, kInf, n, beta);  // 1* = inf
            throw std::invalid_argument("ExponentPair: r must lie in (1, inf]");
        }
        double q = (r == kInf) ? 1.0 : r / (r - 1.0);
        return ExponentPair(r, q, n, beta);
    }
    static ExponentPair from_q(double q, int n, std::optional<double> beta = {}) {
        if (!(q >= 1.0)) throw std::invalid_argument("ExponentPair: q must be >= 1");
        double r = (q == 1.0) ? kInf : (q == kInf ? 1.0 : q / (q - 1.0));
        return ExponentPair(r, q, n, beta);
    }

    double r() const { return r_; }
    double q() const { return q_; }
    int dim() const { return n_; }

    /// Critical index: n/(n-2) for n >= 3, infinity for n <= 2.
    double q_bar() const { return n_ >= 3 ? double(n_) / (n_ - 2) : kInf; }

    bool subcritical() const { return q_ < q_bar(); }
    bool critical() const { return n_ >= 3 && q_ == q_bar(); }

    std::optional<double> beta() const { return beta_; }
    /// q_hat = q (beta + 1) / 2 for the nonlinear power equation.
    double q_hat() const {
        if (!beta_) throw std::logic_error("ExponentPair: beta not set");
        return q_ * (*beta_ + 1.0) / 2.0;
    }

private:
    ExponentPair(double r, double q, int n, std::optional<double> beta)
        : r_(r), q_(q), n_(n), beta_(beta) {
        if (n < 1) throw std::invalid_argument("ExponentPair: dimension must be >= 1");
    }
    double r_, q_;
    int n_;
    std::optional<double> beta_;
};

}  // namespace minsupp
