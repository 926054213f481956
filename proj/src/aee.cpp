#include "ptq/aee.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ptq {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_pi(double x) {
    while (x > std::numbers::pi) x -= two_pi;
    while (x < -std::numbers::pi) x += two_pi;
    return x;
}
} // namespace

BranchContour default_branch_contour(int sigma) {
    if (sigma == -1) return {cplx(0.0, 1.0 / std::sqrt(2.0)), 1.05, 0.35, 0.0, 4096};
    if (sigma == +1) return {cplx(0.0, 0.0), 1.3, 0.4, 0.0, 4096};
    throw std::domain_error("default_branch_contour: sigma must be +1 or -1");
}

ContourQuad::ContourQuad(const BranchContour& contour, int sigma) : sigma_(sigma) {
    if (sigma != 1 && sigma != -1)
        throw std::domain_error("ContourQuad: sigma must be +1 or -1");
    if (contour.n_points < 256)
        throw std::domain_error("ContourQuad: need at least 256 points");

    const int n = contour.n_points;
    const cplx rot = std::polar(1.0, contour.rotation);
    y_.resize(n);
    dy_.resize(n);
    std::vector<cplx> d(n);
    for (int j = 0; j < n; ++j) {
        const double t = two_pi * j / n;
        const cplx e(contour.semi_major * std::cos(t), contour.semi_minor * std::sin(t));
        const cplx de(-contour.semi_major * std::sin(t), contour.semi_minor * std::cos(t));
        y_[j] = contour.center + rot * e;
        dy_[j] = rot * de * (two_pi / n);
        d[j] = 1.0 - double(sigma) * ipow(y_[j], 4);
        if (std::abs(d[j]) < 1e-8)
            throw ContourError("contour passes through a branch point of the weight");
    }

    // Continuous phase of D around the loop, seeded at the node of largest
    // real part with the principal argument.
    int j0 = 0;
    for (int j = 1; j < n; ++j)
        if (y_[j].real() > y_[j0].real()) j0 = j;

    std::vector<double> phase(n);
    phase[j0] = std::arg(d[j0]);
    double max_step = 0.0;
    for (int s = 1; s <= n; ++s) {
        const int prev = (j0 + s - 1) % n;
        const int cur = (j0 + s) % n;
        const double step = wrap_pi(std::arg(d[cur]) - std::arg(d[prev]));
        max_step = std::max(max_step, std::abs(step));
        if (s < n) phase[cur] = phase[prev] + step;
    }
    if (max_step > 0.9 * std::numbers::pi)
        throw ContourError("contour too close to a branch point: phase tracking unreliable");

    // Closure: total winding of D must be 2 (two enclosed simple roots).
    double total = 0.0;
    for (int s = 1; s <= n; ++s) {
        const int prev = (j0 + s - 1) % n;
        const int cur = (j0 + s) % n;
        total += wrap_pi(std::arg(d[cur]) - std::arg(d[prev]));
    }
    const long winding = std::lround(total / two_pi);
    if (winding != 2)
        throw ContourError("contour does not enclose exactly one branch pair (winding " +
                           std::to_string(winding) + ")");

    sqrt_d_.resize(n);
    for (int j = 0; j < n; ++j)
        sqrt_d_[j] = std::sqrt(std::abs(d[j])) * std::polar(1.0, 0.5 * phase[j]);

    // Global sign: the k = 0 moment (1/2pi) oint sqrt(D) dy is positive real.
    cplx m0 = 0.0;
    for (int j = 0; j < n; ++j) m0 += sqrt_d_[j] * dy_[j];
    if (m0.real() < 0.0)
        for (auto& s : sqrt_d_) s = -s;
}

cplx ContourQuad::integrate(const AlgebraicTerm& t) const {
    return integrate(AlgebraicSum::single(t));
}

cplx ContourQuad::integrate(const AlgebraicSum& s) const {
    return integrate_with_mass(s).value;
}

ContourQuad::Moment ContourQuad::integrate_with_mass(const AlgebraicSum& s) const {
    if (!s.is_zero() && s.sigma() != sigma_)
        throw std::domain_error("ContourQuad: sigma mismatch with integrand");
    cplx acc = 0.0;
    double mass = 0.0;
    const int n = points();
    for (int j = 0; j < n; ++j) {
        const cplx f = s.eval(y_[j], sqrt_d_[j]);
        acc += f * dy_[j];
        mass += std::abs(f) * std::abs(dy_[j]);
    }
    return {acc / two_pi, mass / two_pi};
}

std::vector<AlgebraicSum> build_coefficients(const PotentialSpec& spec, int K) {
    if (K < 0) throw std::domain_error("build_coefficients: K must be >= 0");
    const int sigma = spec.sigma();
    if (sigma == 1 && spec.inv_square != 0.0)
        throw std::domain_error(
            "build_coefficients: inverse-square term with positive quartic is unsupported "
            "(origin pole inside the real-pair contour)");

    const double lambda = spec.scale();
    const cplx hhat = spec.h_hat();

    std::vector<AlgebraicSum> a;
    a.reserve(K + 1);
    a.push_back(AlgebraicSum::single({LaurentPoly(1.0), -1, sigma}));

    for (int k = 1; k <= K; ++k) {
        AlgebraicSum bracket(sigma);
        if (k % 3 == 0) {  // structural: only multiples of 3 survive
            for (int i = 1; i < k; ++i) {
                if (a[i].is_zero() || a[k - i].is_zero()) continue;
                bracket += a[i] * a[k - i];
            }
            bracket = bracket.shifted(2);
            if (k >= 3 && !a[k - 3].is_zero())
                bracket += a[k - 3].derivative().shifted(2).scaled(hhat);
            if (k == 3 && spec.linear != 0.0)
                bracket += AlgebraicTerm{LaurentPoly::monomial(3, spec.linear / lambda), 0, sigma};
            if (k == 6 && spec.inv_square != 0.0)
                bracket += AlgebraicTerm{LaurentPoly(spec.inv_square * lambda * lambda), 0, sigma};
        }
        a.push_back(bracket.scaled(-0.5).shifted(-2).raised(1));
    }
    return a;
}

ActionSeries action_series(const PotentialSpec& spec, int K) {
    return action_series(spec, K, default_branch_contour(spec.sigma()));
}

ActionSeries action_series(const PotentialSpec& spec, int K, const BranchContour& contour) {
    const auto a = build_coefficients(spec, K);
    const ContourQuad quad(contour, spec.sigma());
    const double inv_lambda = 1.0 / spec.scale();

    ActionSeries out{spec, {}, {}};
    out.coeff.resize(K + 1, cplx{});
    out.mass.resize(K + 1, 0.0);
    for (int k = 0; k <= K; ++k) {
        if (a[k].is_zero()) continue;
        const auto m = quad.integrate_with_mass(a[k]);
        out.coeff[k] = inv_lambda * m.value;
        out.mass[k] = inv_lambda * m.mass;
    }
    return out;
}

JValue j_eval(const ActionSeries& series, double energy) {
    if (!(energy > 0.0))
        throw std::domain_error("j_eval: the asymptotic series is defined for E > 0 only");
    double j = 0.0, dj = 0.0;
    for (int k = 0; k <= series.order(); ++k) {
        const double b = series.coeff[k].real();
        if (b == 0.0) continue;
        const double expo = -(k - 3) / 4.0;
        const double p = std::pow(energy, expo);
        j += b * p;
        dj += b * expo * p / energy;
    }
    return {j, dj};
}

double solve_quantization(const ActionSeries& series, int n) {
    if (n < 0) throw std::domain_error("solve_quantization: n must be >= 0");
    const double hbar = series.spec.hbar;
    const double b0 = series.coeff.empty() ? 0.0 : series.coeff[0].real();
    if (!(b0 > 0.0)) throw SolverError("solve_quantization: leading coefficient not positive");

    const double target = n * hbar;
    const double e_init = std::pow((n + 0.5) * hbar / b0, 4.0 / 3.0);

    double e = e_init;
    for (int it = 0; it < 100; ++it) {
        const auto jv = j_eval(series, e);
        const double e_next = e - (jv.j - target) / jv.dj_dE;
        if (!(e_next > 0.0) || !std::isfinite(e_next)) break;
        if (std::abs(e_next - e) < 1e-12 * std::abs(e_next)) return e_next;
        e = e_next;
    }

    // Bisection fallback on a bracket around the leading-order seed.
    double lo = e_init / 10.0, hi = 10.0 * e_init;
    auto f = [&](double x) { return j_eval(series, x).j - target; };
    double flo = f(lo);
    if (flo * f(hi) > 0.0)
        throw SolverError("solve_quantization: no bracket around the seed for n = " +
                          std::to_string(n));
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<std::pair<int, double>> closed_form_coefficients(const PotentialSpec& spec) {
    const double hb = spec.hbar;
    const double g14 = gamma_fn(0.25);
    const double g34 = gamma_fn(0.75);
    const double spi = std::sqrt(std::numbers::pi);
    const double s2pi = std::sqrt(2.0 * std::numbers::pi);

    if (spec.sigma() == -1) {
        if (spec.linear != 0.0)
            throw std::domain_error("closed_form_coefficients: negative-quartic family requires B = 0");
        if (spec.inv_square.imag() != 0.0)
            throw std::domain_error("closed_form_coefficients: negative-quartic family requires real a");
        const double g = -spec.quartic;
        const double a = spec.inv_square.real();
        const double g0 = std::pow(g, 0.25);
        return {
            {0, g14 / (3.0 * g0 * s2pi * g34)},
            {3, -hb / 2.0},
            {6, g0 * (4.0 * a - hb * hb) * g34 / (4.0 * s2pi * g14)},
            {12, std::pow(g, 0.75) *
                     (80.0 * a * a - 200.0 * a * hb * hb - 11.0 * std::pow(hb, 4)) * g14 /
                     (1536.0 * s2pi * g34)},
            {18, -77.0 * std::pow(g, 1.25) *
                     (192.0 * std::pow(a, 3) - 1296.0 * a * a * hb * hb +
                      1860.0 * a * std::pow(hb, 4) + 61.0 * std::pow(hb, 6)) *
                     g34 / (30720.0 * s2pi * g14)},
            {24, -1105.0 * std::pow(g, 1.75) *
                     (256.0 * std::pow(a, 4) - 3328.0 * std::pow(a, 3) * hb * hb +
                      14432.0 * a * a * std::pow(hb, 4) - 17360.0 * a * std::pow(hb, 6) +
                      353.0 * std::pow(hb, 8)) *
                     g14 / (3670016.0 * s2pi * g34)},
        };
    }

    if (spec.inv_square != 0.0)
        throw std::domain_error("closed_form_coefficients: positive-quartic family requires C = 0");
    if (spec.linear.real() != 0.0 && spec.linear.imag() != 0.0)
        throw std::domain_error("closed_form_coefficients: linear coefficient must be real or pure imaginary");
    const double al = spec.quartic;
    // b enters only through even powers, so a pure-imaginary b keeps the
    // coefficients real: track b^2 as a real number.
    const double b2 = std::norm(spec.linear) * (spec.linear.real() != 0.0 ? 1.0 : -1.0);
    const double b4 = b2 * b2, b6 = b2 * b4, b8 = b4 * b4;
    const double h2 = hb * hb, h4 = h2 * h2, h6 = h2 * h4, h8 = h4 * h4;
    return {
        {0, g14 / (3.0 * spi * std::pow(al, 0.25) * g34)},
        {3, -hb / 2.0},
        {6, -(2.0 * h2 * al - b2) * g34 / (8.0 * spi * std::pow(al, 0.75) * g14)},
        {12, (44.0 * h4 * al * al - 60.0 * h2 * al * b2 + 5.0 * b4) * g14 /
                 (6144.0 * spi * std::pow(al, 1.25) * g34)},
        {18, 77.0 *
                 (488.0 * h6 * std::pow(al, 3) - 636.0 * h4 * al * al * b2 +
                  90.0 * h2 * al * b4 - 3.0 * b6) *
                 g34 / (245760.0 * spi * std::pow(al, 1.75) * g14)},
        {24, -1105.0 *
                 (5648.0 * h8 * std::pow(al, 4) - 6304.0 * h6 * std::pow(al, 3) * b2 +
                  1064.0 * h4 * al * al * b4 - 56.0 * h2 * al * b6 + b8) *
                 g14 / (58720256.0 * spi * std::pow(al, 2.25) * g34)},
    };
}

std::vector<GoldenRow> golden_validate(const PotentialSpec& spec) {
    const auto closed = closed_form_coefficients(spec);
    const auto series = action_series(spec, 24);
    std::vector<GoldenRow> rows;
    rows.reserve(closed.size());
    for (const auto& [k, ref] : closed) {
        const double computed = series.coeff[k].real();
        const double denom = std::max(std::abs(ref), 1e-300);
        rows.push_back({k, computed, ref, std::abs(series.coeff[k] - ref) / denom});
    }
    return rows;
}

} // namespace ptq
