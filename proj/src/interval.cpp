#include "primegm/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace primegm {

double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

Interval outward(double lo, double hi, int steps) {
    for (int i = 0; i < steps; ++i) {
        lo = next_down(lo);
        hi = next_up(hi);
    }
    return {lo, hi};
}

Interval Interval::make(double lo, double hi) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("interval endpoints must be finite with lo <= hi");
    return {lo, hi};
}

Interval Interval::from_u64(std::uint64_t x) {
    const double d = static_cast<double>(x);
    if (x <= (std::uint64_t{1} << 53)) return point(d);
    return outward(d, d, 1);
}

Interval Interval::from_ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("from_ratio: zero denominator");
    const double q = static_cast<double>(num) / static_cast<double>(den);
    // int64 -> double conversions are exact for |v| <= 2^53; our constants are
    // tiny. One rounding in the quotient, one step outward.
    return outward(q, q, 1);
}

Interval operator+(Interval a, Interval b) { return outward(a.lo + b.lo, a.hi + b.hi, 1); }

Interval operator-(Interval a, Interval b) { return outward(a.lo - b.hi, a.hi - b.lo, 1); }

Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

Interval operator*(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return outward(lo, hi, 1);
}

Interval operator/(Interval a, Interval b) {
    if (b.lo <= 0.0 && b.hi >= 0.0)
        throw std::domain_error("interval division by an interval containing zero");
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    const double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    const double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return outward(lo, hi, 1);
}

Interval div_u64(Interval x, std::uint64_t n) {
    if (n == 0) throw std::domain_error("division by zero");
    const double d = static_cast<double>(n);
    return outward(x.lo / d, x.hi / d, 1);
}

Interval abs(Interval a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return {-a.hi, -a.lo};
    return {0.0, std::max(-a.lo, a.hi)};
}

Interval min_by_lo(Interval a, Interval b) { return a.lo <= b.lo ? a : b; }

Interval interval_log(std::uint64_t x) {
    if (x == 0) throw std::domain_error("interval_log: log of zero");
    if (x == 1) return Interval::point(0.0);
    // x <= 2^53 converts exactly; the sieve never exceeds ~2^40.
    if (x > (std::uint64_t{1} << 53)) throw std::domain_error("interval_log: argument above 2^53");
    const double y = std::log(static_cast<double>(x));
    return outward(y, y, 2);
}

Interval interval_exp(Interval iv) {
    // exp(709.78) is the binary64 overflow edge.
    if (iv.hi > 709.0) throw std::range_error("interval_exp: upper endpoint overflows");
    Interval r = outward(std::exp(iv.lo), std::exp(iv.hi), 2);
    r.lo = std::max(r.lo, 0.0);
    return r;
}

Interval interval_expm1(Interval iv) {
    if (iv.hi > 709.0) throw std::range_error("interval_expm1: upper endpoint overflows");
    Interval r = outward(std::expm1(iv.lo), std::expm1(iv.hi), 2);
    r.lo = std::max(r.lo, -1.0);
    return r;
}

namespace {

std::string render_fixed(double v, unsigned places) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", static_cast<int>(places), v);
    std::string s(buf);
    if (s == "-0" || s.rfind("-0.", 0) == 0) {
        bool all_zero = true;
        for (char c : s)
            if (c != '-' && c != '0' && c != '.') { all_zero = false; break; }
        if (all_zero) s.erase(0, 1);
    }
    return s;
}

} // namespace

CertifiedDecimal certified_round(Interval iv, unsigned places) {
    if (places > 17) throw std::invalid_argument("certified_round: places > 17");
    const std::string lo = render_fixed(iv.lo, places);
    const std::string hi = render_fixed(iv.hi, places);
    if (lo == hi) return {lo, places, CertifiedDecimal::Status::Certified};
    return {lo + ".." + hi, places, CertifiedDecimal::Status::Indeterminate};
}

std::optional<std::uint64_t> certified_floor(Interval iv) {
    if (iv.lo < 0.0) throw std::domain_error("certified_floor: negative lower endpoint");
    const double flo = std::floor(iv.lo);
    const double fhi = std::floor(iv.hi);
    if (flo == fhi) return static_cast<std::uint64_t>(flo);
    return std::nullopt;
}

} // namespace primegm
