#include "ptq/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace ptq {

double gamma_fn(double z) {
    if (!(z > 0.0))
        throw std::domain_error("gamma_fn: argument must be positive");
    return std::tgamma(z);
}

cplx ipow(cplx z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r = 1.0;
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

LaurentPoly::LaurentPoly(cplx constant) {
    if (constant != 0.0) c_[0] = constant;
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, cplx>> terms) {
    for (const auto& [p, c] : terms) c_[p] += c;
    trim();
}

LaurentPoly LaurentPoly::monomial(int power, cplx coeff) {
    LaurentPoly p;
    if (coeff != 0.0) p.c_[power] = coeff;
    return p;
}

int LaurentPoly::min_power() const {
    if (c_.empty()) throw std::logic_error("min_power of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_power() const {
    if (c_.empty()) throw std::logic_error("max_power of zero polynomial");
    return c_.rbegin()->first;
}

cplx LaurentPoly::coeff(int power) const {
    auto it = c_.find(power);
    return it == c_.end() ? cplx{} : it->second;
}

void LaurentPoly::trim() {
    double mx = 0.0;
    for (const auto& [p, c] : c_) mx = std::max(mx, std::abs(c));
    const double cutoff = 1e-14 * mx;
    for (auto it = c_.begin(); it != c_.end();) {
        if (std::abs(it->second) <= cutoff)
            it = c_.erase(it);
        else
            ++it;
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [p, c] : rhs.c_) c_[p] += c;
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [p, c] : rhs.c_) c_[p] -= c;
    trim();
    return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [p, a] : lhs.c_)
        for (const auto& [q, b] : rhs.c_) out.c_[p + q] += a * b;
    out.trim();
    return out;
}

LaurentPoly operator*(cplx s, LaurentPoly p) {
    if (s == 0.0) return LaurentPoly{};
    for (auto& [_, c] : p.c_) c *= s;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::shifted(int dp) const {
    LaurentPoly out;
    for (const auto& [p, c] : c_) out.c_[p + dp] = c;
    return out;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly out;
    for (const auto& [p, c] : c_)
        if (p != 0) out.c_[p - 1] = double(p) * c;
    out.trim();
    return out;
}

cplx LaurentPoly::eval(cplx y) const {
    cplx acc = 0.0;
    for (const auto& [p, c] : c_) acc += c * ipow(y, p);
    return acc;
}

bool LaurentPoly::almost_equal(const LaurentPoly& rhs, double tol) const {
    double mx = 0.0;
    for (const auto& [p, c] : c_) mx = std::max(mx, std::abs(c));
    for (const auto& [p, c] : rhs.c_) mx = std::max(mx, std::abs(c));
    LaurentPoly d = *this - rhs;
    for (const auto& [p, c] : d.c_)
        if (std::abs(c) > tol * std::max(mx, 1.0)) return false;
    return true;
}

LaurentPoly weight_poly(int sigma) {
    return LaurentPoly{{0, 1.0}, {4, -double(sigma)}};
}

AlgebraicTerm at_mul(const AlgebraicTerm& u, const AlgebraicTerm& v) {
    if (u.sigma != v.sigma)
        throw std::domain_error("at_mul: sigma mismatch");
    return {u.num * v.num, u.m + v.m, u.sigma};
}

AlgebraicTerm at_add(const AlgebraicTerm& u, const AlgebraicTerm& v) {
    if (u.sigma != v.sigma)
        throw std::domain_error("at_add: sigma mismatch");
    if ((u.m - v.m) % 2 != 0)
        throw std::domain_error("at_add: odd m difference has no common denominator");
    const AlgebraicTerm& hi = u.m >= v.m ? u : v;
    const AlgebraicTerm& lo = u.m >= v.m ? v : u;
    LaurentPoly pad = lo.num;
    const LaurentPoly d = weight_poly(u.sigma);
    for (int i = 0; i < (hi.m - lo.m) / 2; ++i) pad = pad * d;
    return {hi.num + pad, hi.m, u.sigma};
}

AlgebraicTerm at_diff(const AlgebraicTerm& u) {
    const LaurentPoly d = weight_poly(u.sigma);
    const LaurentPoly dprime = LaurentPoly::monomial(3, -4.0 * double(u.sigma));
    LaurentPoly num = u.num.derivative() * d - (0.5 * double(u.m)) * (u.num * dprime);
    return {num, u.m + 2, u.sigma};
}

cplx eval_term(const AlgebraicTerm& t, cplx y) {
    const cplx d = 1.0 - double(t.sigma) * ipow(y, 4);
    return eval_term(t, y, std::sqrt(d));
}

cplx eval_term(const AlgebraicTerm& t, cplx y, cplx sqrt_d) {
    return t.num.eval(y) * ipow(sqrt_d, -t.m);
}

AlgebraicSum AlgebraicSum::single(AlgebraicTerm t) {
    AlgebraicSum s(t.sigma);
    s += t;
    return s;
}

int AlgebraicSum::max_m() const {
    if (terms_.empty()) throw std::logic_error("max_m of zero sum");
    return terms_.front().m;
}

AlgebraicSum& AlgebraicSum::operator+=(const AlgebraicTerm& t) {
    if (t.sigma != sigma_)
        throw std::domain_error("AlgebraicSum: sigma mismatch");
    if (t.num.is_zero()) return *this;
    for (auto& mine : terms_) {
        if ((mine.m - t.m) % 2 == 0) {
            mine = at_add(mine, t);
            if (mine.num.is_zero()) {
                terms_.erase(terms_.begin() + (&mine - terms_.data()));
            }
            std::sort(terms_.begin(), terms_.end(),
                      [](const AlgebraicTerm& a, const AlgebraicTerm& b) { return a.m > b.m; });
            return *this;
        }
    }
    terms_.push_back(t);
    std::sort(terms_.begin(), terms_.end(),
              [](const AlgebraicTerm& a, const AlgebraicTerm& b) { return a.m > b.m; });
    return *this;
}

AlgebraicSum& AlgebraicSum::operator+=(const AlgebraicSum& rhs) {
    if (rhs.sigma_ != sigma_ && !rhs.is_zero())
        throw std::domain_error("AlgebraicSum: sigma mismatch");
    for (const auto& t : rhs.terms_) *this += t;
    return *this;
}

AlgebraicSum operator*(const AlgebraicSum& lhs, const AlgebraicSum& rhs) {
    AlgebraicSum out(lhs.sigma_);
    for (const auto& u : lhs.terms_)
        for (const auto& v : rhs.terms_) out += at_mul(u, v);
    return out;
}

AlgebraicSum AlgebraicSum::derivative() const {
    AlgebraicSum out(sigma_);
    for (const auto& t : terms_) out += at_diff(t);
    return out;
}

AlgebraicSum AlgebraicSum::scaled(cplx s) const {
    AlgebraicSum out(sigma_);
    for (const auto& t : terms_) out += AlgebraicTerm{s * t.num, t.m, t.sigma};
    return out;
}

AlgebraicSum AlgebraicSum::shifted(int dp) const {
    AlgebraicSum out(sigma_);
    for (const auto& t : terms_) out += AlgebraicTerm{t.num.shifted(dp), t.m, t.sigma};
    return out;
}

AlgebraicSum AlgebraicSum::raised(int dm) const {
    AlgebraicSum out(sigma_);
    for (const auto& t : terms_) out += AlgebraicTerm{t.num, t.m + dm, t.sigma};
    return out;
}

cplx AlgebraicSum::eval(cplx y) const {
    const cplx d = 1.0 - double(sigma_) * ipow(y, 4);
    return eval(y, std::sqrt(d));
}

cplx AlgebraicSum::eval(cplx y, cplx sqrt_d) const {
    cplx acc = 0.0;
    for (const auto& t : terms_) acc += eval_term(t, y, sqrt_d);
    return acc;
}

} // namespace ptq
