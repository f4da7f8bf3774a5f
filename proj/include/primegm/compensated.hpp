#pragma once

#include <cstdint>

#include "primegm/interval.hpp"

namespace primegm {

// Error-free transformation: s + e == a + b exactly, s = fl(a + b).
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

// Streaming sum of certified terms.
//
// principal + compensation tracks the sum of the term midpoints through an
// exact two-sum cascade; the only inexact step per add is folding the
// cascade residue into `compensation`, and that residue is itself captured
// by a second two-sum and charged to error_radius. error_radius additionally
// absorbs every input interval's distance from the midpoint, so the true sum
// of the certified reals stays inside
//     principal + compensation +/- error_radius.
struct CompensatedSum {
    double principal = 0.0;
    double compensation = 0.0;
    double error_radius = 0.0;
    std::uint64_t count = 0;
};

CompensatedSum accumulate_term(CompensatedSum sum, Interval term);

// [principal+compensation-error_radius, ...+error_radius], outward-rounded.
Interval as_interval(const CompensatedSum& sum);

// Associative combine for partial sums; containment is preserved under any
// merge order.
CompensatedSum merge(const CompensatedSum& a, const CompensatedSum& b);

} // namespace primegm
