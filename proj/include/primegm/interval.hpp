#pragma once

#include <cfloat>
#include <cstdint>
#include <optional>
#include <string>

namespace primegm {

#if FLT_EVAL_METHOD != 0
#error "binary64 operations must round once (FLT_EVAL_METHOD == 0); build for SSE2/strict IEEE"
#endif

// Closed interval [lo, hi] of binary64 endpoints certifying a real value.
//
// Every producer guarantees containment: the exact real quantity the interval
// stands for lies in [lo, hi]. Arithmetic keeps that guarantee by outward
// rounding (nextafter steps around the rounded result; platform log/exp are
// assumed faithful within 1 ulp, and transcendental results are widened by
// 2 ulps per side to absorb that plus the absence of directed rounding).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double x) { return {x, x}; }
    static Interval make(double lo, double hi);
    // Exact integer as a point interval (widened when above 2^53).
    static Interval from_u64(std::uint64_t x);
    // The real number num/den, one outward-rounded division.
    static Interval from_ratio(std::int64_t num, std::int64_t den);

    double width() const { return hi - lo; }
    double mid() const { return lo + 0.5 * (hi - lo); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool strictly_positive() const { return lo > 0.0; }
};

Interval operator+(Interval a, Interval b);
Interval operator-(Interval a, Interval b);
Interval operator-(Interval a);
Interval operator*(Interval a, Interval b);
// Denominator must not contain zero.
Interval operator/(Interval a, Interval b);

// Outward-rounded x/n for exact x, n.
Interval div_u64(Interval x, std::uint64_t n);
// Fold to the magnitude: [max(0,...)...] when the interval straddles zero.
Interval abs(Interval a);
Interval min_by_lo(Interval a, Interval b);

// True when every point of a is below every point of b (certified a < b).
inline bool certainly_less(Interval a, Interval b) { return a.hi < b.lo; }
inline bool certainly_greater(Interval a, Interval b) { return a.lo > b.hi; }

// --- transcendental constructors ------------------------------------------

// Contains log x exactly; width <= 4 ulps of the midpoint. x >= 1.
Interval interval_log(std::uint64_t x);
// Contains exp of every point of iv; throws std::range_error on overflow.
Interval interval_exp(Interval iv);
// Contains exp(t)-1 for every t in iv (tight near 0).
Interval interval_expm1(Interval iv);

// --- certified decimal rendering -------------------------------------------

// Decimal rendering of an interval at a fixed number of places. Certified
// means every real in the source interval rounds (half-even) to `digits`.
struct CertifiedDecimal {
    enum class Status { Certified, Indeterminate };
    std::string digits;
    unsigned places = 0;
    Status status = Status::Indeterminate;

    bool certified() const { return status == Status::Certified; }
};

// Round-half-even at `places` decimals (places <= 17). Certified only when
// both endpoints render identically; rendering is monotone, so that pins
// every point in between.
CertifiedDecimal certified_round(Interval iv, unsigned places);

// floor when both endpoints agree, nullopt otherwise. Requires iv.lo >= 0.
std::optional<std::uint64_t> certified_floor(Interval iv);

// --- outward rounding helpers (shared with the double-double layer) --------

double next_down(double x);
double next_up(double x);
// n nextafter steps outward on both endpoints.
Interval outward(double lo, double hi, int steps);

} // namespace primegm
