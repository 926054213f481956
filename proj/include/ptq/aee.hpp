#ifndef PTQ_AEE_HPP
#define PTQ_AEE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ptq/laurent.hpp"
#include "ptq/potential.hpp"

namespace ptq {

struct ContourError : std::runtime_error {
    explicit ContourError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed ellipse in the rescaled y-plane enclosing one branch pair of
/// sqrt(1 - sigma y^4) and nothing else (no other root of the weight, and
/// for sigma = -1 not the origin).
struct BranchContour {
    cplx center{};
    double semi_major = 1.0;
    double semi_minor = 0.4;
    double rotation = 0.0;
    int n_points = 4096;
};

/// Default contours with maximal clearance from the excluded singularities:
/// sigma = -1: centered at i/sqrt(2), axes (1.05, 0.35), around e^{i pi/4}
///             and e^{3i pi/4}, origin excluded;
/// sigma = +1: centered at 0, axes (1.3, 0.4), around +-1, +-i excluded.
BranchContour default_branch_contour(int sigma);

/// Precomputed quadrature nodes on a BranchContour with the branch of
/// sqrt(D) tracked continuously around the loop.
///
/// The branch is seeded with the principal square root at the node of
/// largest real part and propagated by phase unwinding; the loop must close
/// with winding number two (a pair of enclosed simple roots), anything else
/// means the contour strayed too close to a branch point or encloses the
/// wrong set. A final global sign is fixed so the k = 0 moment comes out
/// positive real.
class ContourQuad {
public:
    ContourQuad(const BranchContour& contour, int sigma);

    int sigma() const { return sigma_; }
    int points() const { return static_cast<int>(y_.size()); }

    /// (1/2pi) times the closed contour integral of the term / sum.
    cplx integrate(const AlgebraicTerm& t) const;
    cplx integrate(const AlgebraicSum& s) const;

    struct Moment {
        cplx value;
        double mass;  // (1/2pi) * sum |f||dy|: cancellation scale of the integral
    };
    Moment integrate_with_mass(const AlgebraicSum& s) const;

private:
    int sigma_;
    std::vector<cplx> y_;       // nodes
    std::vector<cplx> dy_;      // y'(t) * dt weight
    std::vector<cplx> sqrt_d_;  // tracked branch of sqrt(D) at the nodes
};

/// Recurrence coefficients a_0..a_K of the rescaled Riccati expansion
///   a_k = -(1/(2 y^2 a_0)) [ y^2 sum_{i=1}^{k-1} a_i a_{k-i}
///          + h_hat y^2 a_{k-3}' + (B/lambda) y^3 delta_{k,3}
///          + C lambda^2 delta_{k,6} ],     a_0 = sqrt(1 - sigma y^4).
///
/// sigma = +1 together with C != 0 is rejected: the real-pair contour would
/// enclose the origin pole those terms carry.
std::vector<AlgebraicSum> build_coefficients(const PotentialSpec& spec, int K);

/// Truncated expansion J(E) = sum_k b_k E^{-(k-3)/4} of the quantum action
/// variable; coeff[k] includes the 1/lambda Jacobian of the y rescaling.
struct ActionSeries {
    PotentialSpec spec;
    std::vector<cplx> coeff;
    std::vector<double> mass;  // per-k quadrature cancellation scale
    int order() const { return static_cast<int>(coeff.size()) - 1; }
};

ActionSeries action_series(const PotentialSpec& spec, int K);
ActionSeries action_series(const PotentialSpec& spec, int K, const BranchContour& contour);

struct JValue {
    double j;
    double dj_dE;
};

/// Evaluate the truncated series and its E-derivative at real E > 0.
JValue j_eval(const ActionSeries& series, double energy);

/// Solve J(E) = n hbar by Newton iteration from the leading-order seed
/// E = ((n + 1/2) hbar / b_0)^{4/3}, with a bisection fallback if Newton
/// leaves (0, inf). Relative convergence 1e-12.
double solve_quantization(const ActionSeries& series, int n);

/// The six analytically known coefficients of each family, as (k, value):
/// sigma = -1 family in terms of (g, a), sigma = +1 in terms of (alpha, b).
/// Requires the spec to be exactly one of the two families.
std::vector<std::pair<int, double>> closed_form_coefficients(const PotentialSpec& spec);

struct GoldenRow {
    int k;
    double computed;
    double closed_form;
    double rel_dev;
};

/// Quadrature vs closed forms for the six known coefficients.
std::vector<GoldenRow> golden_validate(const PotentialSpec& spec);

} // namespace ptq

#endif
