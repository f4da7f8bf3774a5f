#include "primegm/dd.hpp"

#include <cmath>
#include <stdexcept>

#include "primegm/compensated.hpp"

namespace primegm {

namespace {

// |a| >= |b| required.
inline void quick_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
}

// Veltkamp split, exact for |x| < 2^996.
inline void split(double x, double& h, double& l) {
    const double t = 134217729.0 * x; // 2^27 + 1
    h = t - (t - x);
    l = x - h;
}

// p + e == a * b exactly.
inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    double ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
}

inline DdReal renorm(double s, double e) {
    DdReal r;
    quick_two_sum(s, e, r.hi, r.lo);
    return r;
}

// Radius arithmetic: overestimate monotonically. A multiplicative nudge plus
// one denormal step dominates the rounding of the radius updates themselves.
inline double grow(double x) {
    return x * (1.0 + 0x1p-40) + 0x1p-1000;
}

const DdReal kLn2{6.93147180559945286e-01, 2.31904681384629956e-17};

} // namespace

DdReal dd_from(double x) { return {x, 0.0}; }

DdReal dd_add(DdReal a, DdReal b) {
    double s1, s2, t1, t2;
    two_sum(a.hi, b.hi, s1, s2);
    two_sum(a.lo, b.lo, t1, t2);
    s2 += t1;
    quick_two_sum(s1, s2, s1, s2);
    s2 += t2;
    return renorm(s1, s2);
}

DdReal dd_add(DdReal a, double b) {
    double s1, s2;
    two_sum(a.hi, b, s1, s2);
    s2 += a.lo;
    return renorm(s1, s2);
}

DdReal dd_sub(DdReal a, DdReal b) { return dd_add(a, DdReal{-b.hi, -b.lo}); }

DdReal dd_mul(DdReal a, DdReal b) {
    double p1, p2;
    two_prod(a.hi, b.hi, p1, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    return renorm(p1, p2);
}

DdReal dd_mul(DdReal a, double b) {
    double p1, p2;
    two_prod(a.hi, b, p1, p2);
    p2 += a.lo * b;
    return renorm(p1, p2);
}

DdReal dd_div(DdReal a, DdReal b) {
    const double q1 = a.hi / b.hi;
    DdReal r = dd_sub(a, dd_mul(b, q1));
    const double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    const double q3 = r.hi / b.hi;
    double s1, s2;
    quick_two_sum(q1, q2, s1, s2);
    return dd_add(DdReal{s1, s2}, q3);
}

DdReal dd_div(DdReal a, double b) { return dd_div(a, DdReal{b, 0.0}); }

DdReal dd_ldexp(DdReal a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }

DdReal dd_exp(DdReal a) {
    if (a.hi > 709.0) throw std::range_error("dd_exp: overflow");
    if (a.hi < -709.0) return {0.0, 0.0};

    // a = m*ln2 + r, |r| <= ln2/2; exp(r) by Taylor on r/512, then 9 squarings.
    const double m = std::floor(a.hi / kLn2.hi + 0.5);
    const DdReal r = dd_ldexp(dd_sub(a, dd_mul(kLn2, m)), -9);

    DdReal term = r;
    DdReal sum = dd_add(dd_from(1.0), r);
    double fact = 1.0;
    for (int i = 2; i <= 16; ++i) {
        fact *= i;
        term = dd_mul(term, r);
        const DdReal t = dd_div(term, fact);
        sum = dd_add(sum, t);
        if (std::fabs(t.hi) < 0x1p-115 * std::fabs(sum.hi)) break;
    }
    for (int i = 0; i < 9; ++i) sum = dd_mul(sum, sum);
    return dd_ldexp(sum, static_cast<int>(m));
}

DdReal dd_log_u64(std::uint64_t x) {
    if (x == 0) throw std::domain_error("dd_log_u64: log of zero");
    if (x == 1) return {0.0, 0.0};
    // log x < 32 keeps the Newton residual (2 ulp of the seed)^2/2 <= 2^-93,
    // a 4x margin under kDdLogAbs.
    if (x > (std::uint64_t{1} << 45)) throw std::domain_error("dd_log_u64: argument above 2^45");

    // Newton correction of the double seed: y1 = y0 + (x * exp(-y0) - 1).
    // The seed is faithful to ~1 ulp, so the residual is quadratically small
    // and one step lands well inside kDdLogAbs.
    const double y0 = std::log(static_cast<double>(x));
    const DdReal e = dd_exp(dd_from(y0));
    const DdReal q = dd_div(dd_from(static_cast<double>(x)), e);
    return dd_add(dd_add(q, -1.0), DdReal{y0, 0.0});
}

DdApprox DdApprox::from_u64(std::uint64_t x) {
    if (x <= (std::uint64_t{1} << 53)) return {dd_from(static_cast<double>(x)), 0.0};
    // Split exactly into two doubles.
    const double hi = static_cast<double>(x & ~std::uint64_t{0x7FF});
    const double lo = static_cast<double>(x & std::uint64_t{0x7FF});
    return {renorm(hi, lo), 0.0};
}

DdApprox DdApprox::from_ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("DdApprox::from_ratio: zero denominator");
    DdReal v = dd_div(dd_from(static_cast<double>(num)), static_cast<double>(den));
    return {v, grow(kDdArithRel * std::fabs(v.hi))};
}

DdApprox DdApprox::log_u64(std::uint64_t x) { return {dd_log_u64(x), kDdLogAbs}; }

DdApprox dd_add(DdApprox a, DdApprox b) {
    DdReal v = dd_add(a.value, b.value);
    return {v, grow(a.radius + b.radius + kDdArithRel * std::fabs(v.hi))};
}

DdApprox dd_sub(DdApprox a, DdApprox b) {
    DdReal v = dd_sub(a.value, b.value);
    return {v, grow(a.radius + b.radius + kDdArithRel * std::fabs(v.hi))};
}

DdApprox dd_mul(DdApprox a, DdApprox b) {
    DdReal v = dd_mul(a.value, b.value);
    const double ra = a.radius * (std::fabs(b.value.hi) + b.radius);
    const double rb = b.radius * std::fabs(a.value.hi);
    return {v, grow(ra + rb + kDdArithRel * std::fabs(v.hi))};
}

DdApprox dd_div(DdApprox a, DdApprox b) {
    const double bmag = std::fabs(b.value.hi);
    if (b.radius >= bmag) throw std::domain_error("dd_div: denominator not sign-definite");
    DdReal v = dd_div(a.value, b.value);
    // |a/b - a~/b~| <= (|a~|*rb + |b~|*ra) / (|b~| * (|b~| - rb))
    const double num = std::fabs(a.value.hi) * b.radius + bmag * a.radius + a.radius * b.radius;
    const double den = bmag * (bmag - b.radius);
    return {v, grow(num / den + kDdArithRel * std::fabs(v.hi))};
}

DdApprox dd_div_u64(DdApprox a, std::uint64_t n) {
    if (n == 0) throw std::domain_error("dd_div_u64: division by zero");
    if (n <= (std::uint64_t{1} << 53)) {
        DdReal v = dd_div(a.value, static_cast<double>(n));
        return {v, grow(a.radius / static_cast<double>(n) + kDdArithRel * std::fabs(v.hi))};
    }
    return dd_div(a, DdApprox::from_u64(n));
}

DdApprox dd_exp(DdApprox a) {
    DdReal v = dd_exp(a.value);
    // exp stretches the radius by at most exp(r)*|exp(v)|; r is tiny here.
    const double stretch = a.radius >= 1e-3 ? std::expm1(a.radius) * 2.0 : a.radius * 1.01;
    return {v, grow(std::fabs(v.hi) * (stretch + kDdExpRel))};
}

Interval to_interval(DdApprox a) {
    double s, e;
    two_sum(a.value.hi, a.value.lo, s, e);
    const double rad = grow(a.radius + std::fabs(e));
    return outward(s - rad, s + rad, 2);
}

} // namespace primegm
