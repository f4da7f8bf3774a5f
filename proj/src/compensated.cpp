#include "primegm/compensated.hpp"

#include <cmath>

namespace primegm {

namespace {

// a + b rounded up so the radius can only grow.
inline double add_up(double a, double b) {
    const double s = a + b;
    return (s == 0.0 && a == 0.0 && b == 0.0) ? 0.0 : next_up(s);
}

} // namespace

CompensatedSum accumulate_term(CompensatedSum sum, Interval term) {
    const double m = term.mid();
    // m sits inside [lo, hi]; charge the larger one-sided distance.
    const double dist = std::max(m - term.lo, term.hi - m);
    const double half = dist > 0.0 ? next_up(dist) : 0.0;

    double s, e, c, r;
    two_sum(sum.principal, m, s, e);
    two_sum(sum.compensation, e, c, r); // r: exact residue of the fold

    sum.principal = s;
    sum.compensation = c;
    if (half > 0.0) sum.error_radius = add_up(sum.error_radius, half);
    if (r != 0.0) sum.error_radius = add_up(sum.error_radius, std::fabs(r));
    sum.count += 1;
    return sum;
}

Interval as_interval(const CompensatedSum& sum) {
    double v, e;
    two_sum(sum.principal, sum.compensation, v, e);
    // Two inexact adds per endpoint; two outward steps cover them.
    return outward((v + e) - sum.error_radius, (v + e) + sum.error_radius, 2);
}

CompensatedSum merge(const CompensatedSum& a, const CompensatedSum& b) {
    CompensatedSum out;
    double s, e, c1, r1, c2, r2;
    two_sum(a.principal, b.principal, s, e);
    two_sum(a.compensation, b.compensation, c1, r1);
    two_sum(c1, e, c2, r2);
    out.principal = s;
    out.compensation = c2;
    out.error_radius = add_up(add_up(a.error_radius, b.error_radius),
                              add_up(std::fabs(r1), std::fabs(r2)));
    out.count = a.count + b.count;
    return out;
}

} // namespace primegm
