#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primegm/bigint.hpp"
#include "primegm/interval.hpp"
#include "primegm/sieve.hpp"

namespace primegm {

// Coefficients of the ratio series exp(1 + k_1/log p + k_2/log^2 p + ...):
// k_j = j*j! - sum_{i=1}^{j-1} i! * k_{j-i}, anchored at 1, 3, 13 (the
// recurrence behind the pi(x) series these terms come from).
struct PanaitopolCoeffs {
    std::vector<BigInt> terms;
};

// order = number of 1/log powers used; order 0 is the bare constant e,
// order 2 is the standard two-term approximation.
struct ApproxSpec {
    unsigned order = 2;
};

struct ErrorScan {
    std::uint64_t floor_p = 0;
    std::uint64_t limit = 0;
    std::uint64_t primes_scanned = 0;
    // Certified enclosure of max |approx/ratio - 1| over the scanned primes.
    Interval max_rel_error;
    std::uint64_t argmax_p = 0;

    bool empty() const { return primes_scanned == 0; }
};

// First m coefficients, exact integers. The first three are validated
// against 1, 3, 13 once per process; a mismatch aborts via logic_error.
PanaitopolCoeffs panaitopol_coefficients(unsigned m);

// Certified exp(1 + sum_{j<=order} k_j / log^j p). p >= 3.
Interval approx_ratio(std::uint64_t p, ApproxSpec spec);

// Sweep every prime in (floor_p, limit], comparing the series value with the
// certified ratio on the log scale.
ErrorScan approx_error_scan(std::uint64_t limit, ApproxSpec spec, std::uint64_t floor_p,
                            const SieveConfig& cfg);
ErrorScan approx_error_scan(std::uint64_t limit, ApproxSpec spec, std::uint64_t floor_p);

} // namespace primegm
