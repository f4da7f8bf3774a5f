#pragma once

#include <cstdint>
#include <vector>

#include "primegm/compensated.hpp"
#include "primegm/dd.hpp"
#include "primegm/interval.hpp"
#include "primegm/sieve.hpp"

namespace primegm {

// Streaming accumulator for theta(p_n) = sum of log p over the first n primes.
struct MeanState {
    CompensatedSum theta;
    PrimeEvent last{0, 0};
};

// Certified view at index n: theta, log s_n = theta/n, s_n, and p_n/s_n.
struct MeanSnapshot {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    Interval theta;
    Interval log_s;
    Interval s;
    Interval ratio;
    // log(p_n/s_n) = log p_n - log s_n; the log-scale twin of `ratio`,
    // carried because every inequality check runs on this scale.
    Interval log_ratio;
};

// Feed the next prime event; events must arrive with index == count + 1.
MeanState accumulate(MeanState state, PrimeEvent event);

// Derive a snapshot from a certified theta interval (shared by the standard
// and strict paths).
MeanSnapshot snapshot_from_theta(std::uint64_t n, std::uint64_t p, Interval theta);
MeanSnapshot snapshot(const MeanState& state);

// Snapshots at the smallest prime >= each target, one sweep. Rows whose s or
// ratio cannot be certified at `places` decimals are re-derived in a second,
// double-double sweep.
std::vector<MeanSnapshot> rows_at_targets(const SieveConfig& cfg,
                                          const std::vector<std::uint64_t>& targets,
                                          unsigned places = 6);

// Double-double theta sweep capturing snapshots at the given primes
// (ascending, each must be prime and <= cfg.limit).
std::vector<MeanSnapshot> strict_snapshots_at(const SieveConfig& cfg,
                                              const std::vector<std::uint64_t>& primes_at);

// Strict accumulator, exposed for sweeps that escalate on the fly.
struct StrictThetaState {
    DdApprox theta;
    std::uint64_t count = 0;
    std::uint64_t last_prime = 0;

    void add_prime(std::uint64_t p);
    MeanSnapshot snapshot() const;
};

} // namespace primegm
