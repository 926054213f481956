// Test-only reference implementations, deliberately independent of the
// library code paths they cross-check.
#ifndef PTQ_TEST_ORACLES_HPP
#define PTQ_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "ptq/potential.hpp"

namespace oracles {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Truncated Taylor series ("jet") arithmetic at a fixed expansion point.
// Supports evaluating the Riccati recurrence coefficients a_k(y0) purely
// numerically: derivatives come from the jet, not from symbolic algebra.
// ---------------------------------------------------------------------------
struct Jet {
    std::vector<cplx> c;  // c[i] = i-th Taylor coefficient

    explicit Jet(std::size_t order) : c(order + 1, cplx{}) {}
    std::size_t order() const { return c.size() - 1; }
};

inline Jet jet_const(cplx v, std::size_t order) {
    Jet j(order);
    j.c[0] = v;
    return j;
}

inline Jet jet_var(cplx y0, std::size_t order) {
    Jet j(order);
    j.c[0] = y0;
    if (order >= 1) j.c[1] = 1.0;
    return j;
}

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

inline Jet operator*(cplx s, const Jet& a) {
    Jet out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) out.c[i] = s * a.c[i];
    return out;
}

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i)
        for (std::size_t j = 0; i + j <= a.order(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

inline Jet jet_sqrt(const Jet& a) {
    Jet s(a.order());
    s.c[0] = std::sqrt(a.c[0]);
    for (std::size_t i = 1; i <= a.order(); ++i) {
        cplx acc = a.c[i];
        for (std::size_t j = 1; j < i; ++j) acc -= s.c[j] * s.c[i - j];
        s.c[i] = acc / (2.0 * s.c[0]);
    }
    return s;
}

inline Jet jet_reciprocal(const Jet& a) {
    Jet r(a.order());
    r.c[0] = 1.0 / a.c[0];
    for (std::size_t i = 1; i <= a.order(); ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 1; j <= i; ++j) acc += a.c[j] * r.c[i - j];
        r.c[i] = -acc * r.c[0];
    }
    return r;
}

inline Jet jet_derivative(const Jet& a) {
    Jet d(a.order());
    for (std::size_t i = 0; i + 1 <= a.order(); ++i) d.c[i] = double(i + 1) * a.c[i + 1];
    return d;
}

// a_k(y0) for k = 0..K by running the recurrence on jets. Uses the principal
// branch of sqrt at y0, so pick y0 with D(y0) away from the negative reals.
inline std::vector<cplx> recurrence_at_point(const ptq::PotentialSpec& spec, int K, cplx y0) {
    const std::size_t ord = static_cast<std::size_t>(K / 3 + 2);
    const int sigma = spec.sigma();
    const double lambda = spec.scale();
    const cplx hhat = spec.h_hat();

    const Jet y = jet_var(y0, ord);
    const Jet y2 = y * y;
    const Jet y3 = y2 * y;
    const Jet d = jet_const(1.0, ord) + (-double(sigma)) * (y2 * y2);

    std::vector<Jet> a;
    a.push_back(jet_sqrt(d));
    const Jet inv_denom = -0.5 * (jet_reciprocal(y2 * a[0]));

    for (int k = 1; k <= K; ++k) {
        Jet bracket(ord);
        for (int i = 1; i < k; ++i) bracket = bracket + a[i] * a[k - i];
        bracket = y2 * bracket;
        if (k >= 3) bracket = bracket + hhat * (y2 * jet_derivative(a[k - 3]));
        if (k == 3 && spec.linear != 0.0) bracket = bracket + (spec.linear / lambda) * y3;
        if (k == 6 && spec.inv_square != 0.0)
            bracket = bracket + jet_const(spec.inv_square * lambda * lambda, ord);
        a.push_back(inv_denom * bracket);
    }

    std::vector<cplx> vals(K + 1);
    for (int k = 0; k <= K; ++k) vals[k] = a[k].c[0];
    return vals;
}

// ---------------------------------------------------------------------------
// Explicit single-valued branch of sqrt(1 - sigma y^4) with cuts along the
// straight segments joining each branch pair, built from the standard
// two-point cut formula (y - c) sqrt(1 - (d/(y - c))^2). No phase tracking.
// ---------------------------------------------------------------------------
struct ExplicitSqrtWeight {
    int sigma;
    cplx phase;  // constant calibrated against the principal sqrt far away

    explicit ExplicitSqrtWeight(int sigma_) : sigma(sigma_) {
        const cplx ref = sigma == -1 ? cplx(2.0, 0.3) : cplx(2.4, 0.5);
        phase = std::sqrt(1.0 - double(sigma) * ref * ref * ref * ref) / raw(ref);
    }

    cplx pair_factor(cplx y, cplx c, cplx d) const {
        const cplx w = d / (y - c);
        return (y - c) * std::sqrt(1.0 - w * w);
    }

    cplx raw(cplx y) const {
        const double r = 1.0 / std::sqrt(2.0);
        if (sigma == -1) {
            // roots of 1 + y^4; cut segments join the upper and lower pairs
            return pair_factor(y, cplx(0, r), cplx(r, 0)) * pair_factor(y, cplx(0, -r), cplx(r, 0));
        }
        // roots of 1 - y^4: cut [-1, 1] plus vertical rays from +-i
        return pair_factor(y, 0.0, 1.0) * std::sqrt(1.0 + y * y);
    }

    cplx operator()(cplx y) const { return phase * raw(y); }
};

inline cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b, cplx fa,
                             cplx fb, cplx fm, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const cplx flm = f(lm), frm = f(rm);
    const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) return left + right;
    return adaptive_simpson(f, a, m, fa, fm, flm, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, tol / 2.0, depth - 1);
}

// (1/2pi) oint of the explicit-branch sqrt(D) over a circle about the
// enclosed branch pair, by adaptive Simpson; sign normalized positive real.
inline cplx sqrt_weight_moment(int sigma, double tol = 1e-13) {
    const ExplicitSqrtWeight w(sigma);
    const cplx center = sigma == -1 ? cplx(0.0, 1.0 / std::sqrt(2.0)) : cplx(0.0, 0.0);
    const double radius = sigma == -1 ? 0.9 : 0.0;

    std::function<cplx(double)> f;
    if (sigma == -1) {
        f = [&](double t) {
            const cplx y = center + radius * std::polar(1.0, t);
            const cplx dy = radius * cplx(0, 1) * std::polar(1.0, t);
            return w(y) * dy;
        };
    } else {
        f = [&](double t) {  // ellipse (1.3, 0.4) avoiding +-i and their cuts
            const cplx y(1.3 * std::cos(t), 0.4 * std::sin(t));
            const cplx dy(-1.3 * std::sin(t), 0.4 * std::cos(t));
            return w(y) * dy;
        };
    }
    const double a = 0.0, b = 2.0 * std::numbers::pi;
    const cplx I =
        adaptive_simpson(f, a, b, f(a), f(b), f(0.5 * (a + b)), tol, 40) / (2.0 * std::numbers::pi);
    return I.real() >= 0.0 ? I : -I;
}

} // namespace oracles

#endif
