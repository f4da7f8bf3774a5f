#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primegm/interval.hpp"
#include "primegm/mean.hpp"
#include "primegm/sieve.hpp"

namespace primegm {

// A named constant with the statement it comes from.
struct BoundConstant {
    Interval value;
    const char* provenance;
};

// The constants and applicability thresholds of the inequality family:
// theta/pi envelopes, their combined ratio bounds, and the verified range.
struct BoundSet {
    BoundConstant thm_lower_c;   // 1.62
    BoundConstant thm_upper_c;   // 4.83
    BoundConstant axler_upper_c; // 2.62
    BoundConstant axler_lower_c; // 3.83

    std::uint64_t dusart_theta_threshold; // 89967803
    std::uint64_t dusart_pi_threshold;    // 5393
    std::uint64_t axler_threshold;        // 10^8
    std::uint64_t lemma1_threshold;       // 10^8
    std::uint64_t theorem_threshold;      // 32059

    static const BoundSet& standard();
};

enum class CheckVerdict { Holds, Fails, Indeterminate };

struct BoundCheck {
    std::string name;
    bool applicable = false;
    CheckVerdict verdict = CheckVerdict::Indeterminate;
    Interval margin; // certified; inequality holds iff margin > 0
};

struct BoundCheckReport {
    std::uint64_t x = 0; // the prime the snapshot ends at
    std::uint64_t n = 0; // pi(x)
    std::vector<BoundCheck> checks;
};

enum class BoundSide { Lower, Upper };

struct Violation {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    BoundSide side = BoundSide::Lower;
    Interval margin;
};

// Outcome of sweeping the ratio bounds over every prime in [lo, hi).
struct VerificationReport {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t primes_checked = 0;
    std::vector<Violation> violations;
    std::vector<std::uint64_t> indeterminate; // persist after strict retry
    std::uint64_t strict_escalations = 0;

    Interval min_lower_margin;
    std::uint64_t min_lower_margin_p = 0;
    Interval min_upper_margin;
    std::uint64_t min_upper_margin_p = 0;

    bool clean() const { return violations.empty() && indeterminate.empty(); }
};

struct SharpnessReport {
    VerificationReport sweep;
    std::optional<Violation> largest; // violation at the largest prime
};

// Certified intervals for both sides of the ratio envelope
//     exp(1 + 1/log p + c/log^2 p),  c in {1.62, 4.83}.
std::pair<Interval, Interval> theorem_bounds(std::uint64_t p);
// The same bounds on the log scale (no exponentiation).
std::pair<Interval, Interval> theorem_bounds_log(std::uint64_t p);

// Evaluate every applicable imported inequality at the snapshot's prime:
// Dusart theta gap and pi lower bound, both Axler sides, the combined
// theta/pi gap bound, and both sides of the derived envelopes.
BoundCheckReport reference_bound_report(const MeanSnapshot& snap);

// Sweep the log-scale envelope over every prime in [lo, hi); indeterminate
// or violating primes are re-evaluated in double-double before being
// reported. cfg.limit must reach hi.
VerificationReport verify_theorem_range(std::uint64_t lo, std::uint64_t hi,
                                        const SieveConfig& cfg);

// Exploratory scan below the verified threshold; reports the sweep plus the
// largest violating prime.
SharpnessReport sharpness_scan(std::uint64_t below, const SieveConfig& cfg);

// e < p_n/s_n < (p_n/p_prev) * p_next^(pi(n)/n), claimed for n >= 10.
// pi(n) is the prime count at the index n (not at p_n).
CheckVerdict sandor_check(std::uint64_t n, std::uint64_t p_prev, std::uint64_t p_n,
                          std::uint64_t p_next, const MeanSnapshot& snap);

} // namespace primegm
