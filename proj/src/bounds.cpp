#include "primegm/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "primegm/errors.hpp"

namespace primegm {

namespace {

const Interval kOne = Interval::point(1.0);

// 1 + 1/L + c/L^2 on certified intervals.
Interval envelope_log(Interval log_p, Interval c) {
    const Interval l2 = log_p * log_p;
    return kOne + kOne / log_p + c / l2;
}

DdApprox envelope_log_dd(DdApprox log_p, DdApprox c) {
    const DdApprox one = DdApprox::exact(1.0);
    const DdApprox l2 = dd_mul(log_p, log_p);
    return dd_add(dd_add(one, dd_div(one, log_p)), dd_div(c, l2));
}

CheckVerdict classify(Interval margin) {
    if (margin.lo > 0.0) return CheckVerdict::Holds;
    if (margin.hi <= 0.0) return CheckVerdict::Fails;
    return CheckVerdict::Indeterminate;
}

struct MarginPair {
    Interval lower;
    Interval upper;
};

// Log-scale margins of the envelope at one prime: lower = log(p/s) - lower
// envelope, upper = upper envelope - log(p/s). Both must be positive.
MarginPair margins_at(std::uint64_t p, Interval log_s, const BoundSet& bs) {
    const Interval log_p = interval_log(p);
    const Interval log_ratio = log_p - log_s;
    return {log_ratio - envelope_log(log_p, bs.thm_lower_c.value),
            envelope_log(log_p, bs.thm_upper_c.value) - log_ratio};
}

// Double-double re-derivation of the same margins; the envelope constants
// are rebuilt as exact ratios so no width is inherited from the binary64 set.
MarginPair margins_at_strict(std::uint64_t p, DdApprox theta, std::uint64_t n) {
    const DdApprox log_p = DdApprox::log_u64(p);
    const DdApprox log_ratio = dd_sub(log_p, dd_div_u64(theta, n));
    const DdApprox low_c = DdApprox::from_ratio(162, 100);
    const DdApprox up_c = DdApprox::from_ratio(483, 100);
    return {to_interval(dd_sub(log_ratio, envelope_log_dd(log_p, low_c))),
            to_interval(dd_sub(envelope_log_dd(log_p, up_c), log_ratio))};
}

} // namespace

const BoundSet& BoundSet::standard() {
    static const BoundSet bs{
        {Interval::from_ratio(162, 100), "ratio envelope, lower constant (verified range p >= 32059)"},
        {Interval::from_ratio(483, 100), "ratio envelope, upper constant (verified range p >= 32059)"},
        {Interval::from_ratio(262, 100), "x/pi(x) upper envelope constant, x >= 10^8"},
        {Interval::from_ratio(383, 100), "x/pi(x) lower envelope constant, x >= 10^8"},
        89967803,  // |theta(x) - x| < x/log^3 x from here on
        5393,      // pi(x) > x/(log x - 1) from here on
        100000000, // both x/pi(x) envelope sides
        100000000, // combined |theta(x)-x|/pi(x) < 1/log^2 x
        32059,     // start of the verified ratio envelope
    };
    return bs;
}

std::pair<Interval, Interval> theorem_bounds_log(std::uint64_t p) {
    const BoundSet& bs = BoundSet::standard();
    const Interval log_p = interval_log(p);
    return {envelope_log(log_p, bs.thm_lower_c.value),
            envelope_log(log_p, bs.thm_upper_c.value)};
}

std::pair<Interval, Interval> theorem_bounds(std::uint64_t p) {
    auto [lo, hi] = theorem_bounds_log(p);
    return {interval_exp(lo), interval_exp(hi)};
}

BoundCheckReport reference_bound_report(const MeanSnapshot& snap) {
    const BoundSet& bs = BoundSet::standard();
    const std::uint64_t x = snap.p;
    BoundCheckReport report;
    report.x = x;
    report.n = snap.n;

    const Interval log_p = interval_log(x);
    const Interval l2 = log_p * log_p;
    const Interval l3 = l2 * log_p;
    const Interval xi = Interval::from_u64(x);
    const Interval theta_gap = abs(snap.theta - xi);
    const Interval x_over_n = div_u64(xi, snap.n);
    const Interval gap_over_n = div_u64(theta_gap, snap.n);

    auto add = [&report](std::string name, bool applicable, Interval margin) {
        BoundCheck c;
        c.name = std::move(name);
        c.applicable = applicable;
        if (applicable) {
            c.verdict = classify(margin);
            c.margin = margin;
        }
        report.checks.push_back(std::move(c));
    };

    // |theta(x) - x| < x / log^3 x
    add("dusart_theta_gap", x >= bs.dusart_theta_threshold, xi / l3 - theta_gap);
    // pi(x) > x / (log x - 1)
    add("dusart_pi_lower", x >= bs.dusart_pi_threshold,
        Interval::from_u64(snap.n) - xi / (log_p - kOne));
    // |theta(x) - x| / pi(x) < 1 / log^2 x
    add("lemma1", x >= bs.lemma1_threshold, kOne / l2 - gap_over_n);
    // x/pi(x) > log x - 1 - 1/log x - 3.83/log^2 x
    const Interval axler_low = log_p - kOne - kOne / log_p - bs.axler_lower_c.value / l2;
    add("axler_lower", x >= bs.axler_threshold, x_over_n - axler_low);
    // x/pi(x) < log x - 1 - 1/log x - 2.62/log^2 x
    const Interval axler_high = log_p - kOne - kOne / log_p - bs.axler_upper_c.value / l2;
    add("axler_upper", x >= bs.axler_threshold, axler_high - x_over_n);
    // 1 + 1/log x + 2.62/log^2 x < log x - x/pi(x) < 1 + 1/log x + 3.83/log^2 x
    const Interval pi_gap = log_p - x_over_n;
    add("pi_gap_lower", x >= bs.axler_threshold,
        pi_gap - envelope_log(log_p, bs.axler_upper_c.value));
    add("pi_gap_upper", x >= bs.axler_threshold,
        envelope_log(log_p, bs.axler_lower_c.value) - pi_gap);
    // 1 + 1/log x + 1.62/log^2 x < log x - theta(x)/pi(x) < ... 4.83/log^2 x
    const Interval theta_pi_gap = log_p - snap.log_s;
    add("theta_gap_lower", x >= bs.axler_threshold,
        theta_pi_gap - envelope_log(log_p, bs.thm_lower_c.value));
    add("theta_gap_upper", x >= bs.axler_threshold,
        envelope_log(log_p, bs.thm_upper_c.value) - theta_pi_gap);

    return report;
}

VerificationReport verify_theorem_range(std::uint64_t lo, std::uint64_t hi,
                                        const SieveConfig& cfg) {
    if (lo > hi) throw std::invalid_argument("verify_theorem_range: lo > hi");
    if (hi > 0 && hi - 1 > cfg.limit)
        throw capacity_error("verify_theorem_range: range end beyond sieve limit");

    const BoundSet& bs = BoundSet::standard();
    VerificationReport report;
    report.lo = lo;
    report.hi = hi;

    struct Suspect {
        std::uint64_t p;
        std::uint64_t n;
    };
    std::vector<Suspect> suspects;

    bool have_min = false;
    PrimeStream stream(cfg);
    CompensatedSum theta;
    while (auto ev = stream.next()) {
        theta = accumulate_term(theta, interval_log(ev->prime));
        if (ev->prime >= hi) break;
        if (ev->prime < lo) continue;

        report.primes_checked += 1;
        const Interval log_s = div_u64(as_interval(theta), ev->index);
        const MarginPair m = margins_at(ev->prime, log_s, bs);
        if (m.lower.lo > 0.0 && m.upper.lo > 0.0) {
            if (!have_min || m.lower.lo < report.min_lower_margin.lo) {
                report.min_lower_margin = m.lower;
                report.min_lower_margin_p = ev->prime;
            }
            if (!have_min || m.upper.lo < report.min_upper_margin.lo) {
                report.min_upper_margin = m.upper;
                report.min_upper_margin_p = ev->prime;
            }
            have_min = true;
        } else {
            suspects.push_back({ev->prime, ev->index});
        }
    }

    if (!suspects.empty()) {
        // One double-double sweep re-derives every suspect before anything
        // is declared a violation or left indeterminate.
        report.strict_escalations = suspects.size();
        PrimeStream strict_stream(cfg);
        StrictThetaState strict;
        std::size_t next = 0;
        while (auto ev = strict_stream.next()) {
            strict.add_prime(ev->prime);
            if (ev->prime != suspects[next].p) continue;
            const MarginPair m = margins_at_strict(ev->prime, strict.theta, ev->index);
            for (const auto side : {BoundSide::Lower, BoundSide::Upper}) {
                const Interval margin = side == BoundSide::Lower ? m.lower : m.upper;
                if (margin.lo > 0.0) continue;
                if (margin.hi <= 0.0)
                    report.violations.push_back({ev->prime, ev->index, side, margin});
                else if (std::find(report.indeterminate.begin(), report.indeterminate.end(),
                                   ev->prime) == report.indeterminate.end())
                    report.indeterminate.push_back(ev->prime);
            }
            if (!have_min || m.lower.lo < report.min_lower_margin.lo) {
                report.min_lower_margin = m.lower;
                report.min_lower_margin_p = ev->prime;
            }
            if (!have_min || m.upper.lo < report.min_upper_margin.lo) {
                report.min_upper_margin = m.upper;
                report.min_upper_margin_p = ev->prime;
            }
            have_min = true;
            if (++next == suspects.size()) break;
        }
    }
    return report;
}

SharpnessReport sharpness_scan(std::uint64_t below, const SieveConfig& cfg) {
    SharpnessReport report;
    report.sweep = verify_theorem_range(2, below, cfg);
    for (const Violation& v : report.sweep.violations)
        if (!report.largest || v.p > report.largest->p) report.largest = v;
    return report;
}

CheckVerdict sandor_check(std::uint64_t n, std::uint64_t p_prev, std::uint64_t p_n,
                          std::uint64_t p_next, const MeanSnapshot& snap) {
    if (n < 10) throw std::domain_error("sandor_check: the inequality is claimed for n >= 10");
    if (snap.n != n || snap.p != p_n)
        throw std::invalid_argument("sandor_check: snapshot does not match (n, p_n)");
    if (!(p_prev < p_n && p_n < p_next))
        throw std::invalid_argument("sandor_check: primes must ascend");

    // Both sides on the log scale: 1 < log(p_n/s_n) and
    // log(p_n/s_n) < log p_n - log p_prev + (pi(n)/n) log p_next.
    const Interval lhs_margin = snap.log_ratio - kOne;
    const std::uint64_t pi_n = prime_count(n);
    const Interval rhs = interval_log(p_n) - interval_log(p_prev) +
                         Interval::from_ratio(static_cast<std::int64_t>(pi_n),
                                              static_cast<std::int64_t>(n)) *
                             interval_log(p_next);
    const Interval rhs_margin = rhs - snap.log_ratio;

    const CheckVerdict a = classify(lhs_margin);
    const CheckVerdict b = classify(rhs_margin);
    if (a == CheckVerdict::Holds && b == CheckVerdict::Holds) return CheckVerdict::Holds;
    if (a == CheckVerdict::Fails || b == CheckVerdict::Fails) return CheckVerdict::Fails;
    return CheckVerdict::Indeterminate;
}

} // namespace primegm
