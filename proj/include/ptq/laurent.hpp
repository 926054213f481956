#ifndef PTQ_LAURENT_HPP
#define PTQ_LAURENT_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace ptq {

using cplx = std::complex<double>;

/// Gamma function for positive real argument (libm tgamma, good to ~1 ulp).
/// Throws std::domain_error for z <= 0.
double gamma_fn(double z);

/// Integer power of a complex number by repeated squaring.
cplx ipow(cplx z, int n);

/// Finite Laurent polynomial in one variable with complex coefficients.
///
/// Kept in canonical form: coefficients whose magnitude falls below
/// 1e-14 times the largest coefficient magnitude are dropped, so exact
/// zeros produced by the recurrence do not accumulate as rounding dust.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(cplx constant);
    LaurentPoly(std::initializer_list<std::pair<int, cplx>> terms);

    static LaurentPoly monomial(int power, cplx coeff = 1.0);

    bool is_zero() const { return c_.empty(); }
    int min_power() const;
    int max_power() const;
    cplx coeff(int power) const;
    const std::map<int, cplx>& coeffs() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(cplx s, LaurentPoly p);

    /// Multiply by y^dp.
    LaurentPoly shifted(int dp) const;
    /// Term-wise power-rule derivative; the y^0 term vanishes.
    LaurentPoly derivative() const;
    cplx eval(cplx y) const;

    /// Coefficient-wise comparison within tol * max magnitude (test helper).
    bool almost_equal(const LaurentPoly& rhs, double tol = 1e-12) const;

private:
    std::map<int, cplx> c_;
    void trim();
};

/// One term N(y) * D(y)^{-m/2} of the recurrence algebra, where the weight
/// D(y) = 1 - sigma*y^4 carries the branch structure. m counts half-powers
/// of D; it may be negative (a_0 = sqrt(D) has m = -1).
struct AlgebraicTerm {
    LaurentPoly num;
    int m = 0;
    int sigma = -1;
};

/// The weight polynomial D(y) = 1 - sigma*y^4.
LaurentPoly weight_poly(int sigma);

/// Product: m values add, numerators convolve. Throws on sigma mismatch.
AlgebraicTerm at_mul(const AlgebraicTerm& u, const AlgebraicTerm& v);

/// Sum after padding the smaller-m numerator by D^{(dm)/2}. The m difference
/// must be even; an odd difference cannot share a denominator and throws.
AlgebraicTerm at_add(const AlgebraicTerm& u, const AlgebraicTerm& v);

/// d/dy [N * D^{-m/2}] = [N' D - (m/2) N D'] D^{-(m/2+1)},  D' = -4*sigma*y^3.
AlgebraicTerm at_diff(const AlgebraicTerm& u);

/// Numeric value with the principal branch of sqrt(D), or a caller-supplied
/// branch value (used by the contour quadrature, which tracks the branch).
cplx eval_term(const AlgebraicTerm& t, cplx y);
cplx eval_term(const AlgebraicTerm& t, cplx y, cplx sqrt_d);

/// Sum of algebraic terms, canonicalized to at most one term per parity of m
/// (same-parity terms always share a denominator after padding). The source
/// terms of the recurrence mix parities when a linear potential coefficient
/// is present, so a single AlgebraicTerm is not closed under the recurrence
/// but a two-bucket sum is.
class AlgebraicSum {
public:
    explicit AlgebraicSum(int sigma) : sigma_(sigma) {}
    static AlgebraicSum single(AlgebraicTerm t);

    bool is_zero() const { return terms_.empty(); }
    int sigma() const { return sigma_; }
    /// Terms sorted by decreasing m. At most two entries.
    const std::vector<AlgebraicTerm>& terms() const { return terms_; }
    /// Largest m over the stored terms; requires !is_zero().
    int max_m() const;

    AlgebraicSum& operator+=(const AlgebraicTerm& t);
    AlgebraicSum& operator+=(const AlgebraicSum& rhs);
    friend AlgebraicSum operator*(const AlgebraicSum& lhs, const AlgebraicSum& rhs);

    AlgebraicSum derivative() const;
    AlgebraicSum scaled(cplx s) const;
    AlgebraicSum shifted(int dp) const;
    /// Multiply by D^{-dm/2} (dm = 1 divides by sqrt(D)).
    AlgebraicSum raised(int dm) const;

    cplx eval(cplx y) const;
    cplx eval(cplx y, cplx sqrt_d) const;

private:
    int sigma_;
    std::vector<AlgebraicTerm> terms_;
};

} // namespace ptq

#endif
