#pragma once

#include <cstdint>

#include "primegm/interval.hpp"

namespace primegm {

// Double-double: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving
// ~106 bits of significand. This is the strict-mode backend used when plain
// binary64 intervals are too wide to certify a requested digit count.
struct DdReal {
    double hi = 0.0;
    double lo = 0.0;
};

DdReal dd_from(double x);
DdReal dd_add(DdReal a, DdReal b);
DdReal dd_add(DdReal a, double b);
DdReal dd_sub(DdReal a, DdReal b);
DdReal dd_mul(DdReal a, DdReal b);
DdReal dd_mul(DdReal a, double b);
DdReal dd_div(DdReal a, DdReal b);
DdReal dd_div(DdReal a, double b);
DdReal dd_ldexp(DdReal a, int k); // exact

// Certified per-operation relative rounding bound for the dd_* arithmetic
// above. The theoretical bound is ~2^-105; 2^-102 keeps headroom.
inline constexpr double kDdArithRel = 0x1p-102;
// exp: argument reduction + Taylor + 9 squarings; analytic estimate ~2^-95.
inline constexpr double kDdExpRel = 0x1p-93;
// log of an integer in [1, 2^53]: one Newton correction on top of dd_exp.
inline constexpr double kDdLogAbs = 0x1p-91;

// exp(a) for |a.hi| <= 709; relative error <= kDdExpRel.
DdReal dd_exp(DdReal a);
// log x for integer x in [1, 2^45]; absolute error <= kDdLogAbs.
DdReal dd_log_u64(std::uint64_t x);

// A dd midpoint with a certified absolute radius: the strict-mode analogue
// of Interval. Radius arithmetic always rounds up.
struct DdApprox {
    DdReal value;
    double radius = 0.0;

    static DdApprox exact(double x) { return {dd_from(x), 0.0}; }
    static DdApprox from_u64(std::uint64_t x);
    static DdApprox from_ratio(std::int64_t num, std::int64_t den);
    static DdApprox log_u64(std::uint64_t x);
};

DdApprox dd_add(DdApprox a, DdApprox b);
DdApprox dd_sub(DdApprox a, DdApprox b);
DdApprox dd_mul(DdApprox a, DdApprox b);
DdApprox dd_div(DdApprox a, DdApprox b);
DdApprox dd_div_u64(DdApprox a, std::uint64_t n);
DdApprox dd_exp(DdApprox a);

// Collapse to a plain certified interval (outward-rounded endpoints).
Interval to_interval(DdApprox a);

} // namespace primegm
