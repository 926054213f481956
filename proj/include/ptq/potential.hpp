#ifndef PTQ_POTENTIAL_HPP
#define PTQ_POTENTIAL_HPP

#include <cmath>
#include <stdexcept>

#include "ptq/laurent.hpp"

namespace ptq {

/// Problem data for the quartic family V(x) = A x^4 + B x + C / x^2.
///
/// The sign of the quartic coefficient decides everything structural:
/// sigma = +1 gives real turning points and a real-line eigenvalue problem,
/// sigma = -1 pushes the decay sectors off the real axis.
struct PotentialSpec {
    double quartic = 0.0;  // A, real and nonzero
    cplx linear{};         // B
    cplx inv_square{};     // C
    double hbar = 1.0;

    int sigma() const {
        if (quartic == 0.0) throw std::domain_error("PotentialSpec: quartic coefficient must be nonzero");
        return quartic > 0.0 ? 1 : -1;
    }

    /// lambda = |A|^{1/4}, the coordinate rescaling unit.
    double scale() const { return std::pow(std::abs(quartic), 0.25); }

    /// h_hat = (hbar/i) * lambda, the expansion parameter of the recurrence.
    cplx h_hat() const { return cplx(0.0, -hbar) * scale(); }

    cplx potential(cplx x) const {
        cplx v = quartic * ipow(x, 4) + linear * x;
        if (inv_square != 0.0) v += inv_square / (x * x);
        return v;
    }

    /// p^2 - g x^4 + a / x^2 with g > 0.
    static PotentialSpec negative_quartic(double g, cplx a, double hbar = 1.0) {
        if (!(g > 0.0)) throw std::domain_error("negative_quartic: g must be positive");
        if (!(hbar > 0.0)) throw std::domain_error("negative_quartic: hbar must be positive");
        return {-g, 0.0, a, hbar};
    }

    /// p^2 + alpha x^4 + b x with alpha > 0.
    static PotentialSpec positive_quartic(double alpha, cplx b, double hbar = 1.0) {
        if (!(alpha > 0.0)) throw std::domain_error("positive_quartic: alpha must be positive");
        if (!(hbar > 0.0)) throw std::domain_error("positive_quartic: hbar must be positive");
        return {alpha, b, 0.0, hbar};
    }
};

} // namespace ptq

#endif
