#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace primegm {

// One element of the ordered prime stream: prime(index) == the index-th
// prime, 1-based, so the first event is (1, 2).
struct PrimeEvent {
    std::uint64_t index = 0;
    std::uint64_t prime = 0;

    bool operator==(const PrimeEvent&) const = default;
};

struct SieveConfig {
    std::uint64_t limit = 2;                  // inclusive upper bound on primes
    std::uint64_t segment_size = 1u << 20;    // numbers per segment

    static SieveConfig with_limit(std::uint64_t limit) { return {limit, 1u << 20}; }

    // Throws empty_range_error / config_error; consults the memory budget
    // from PRIMEGM_MEMORY_BUDGET (bytes) when set.
    void validate() const;
};

// Pull-based segmented sieve over odd numbers. Cache-resident segments;
// base primes up to sqrt(limit) come from a simple sieve.
class PrimeStream {
public:
    explicit PrimeStream(SieveConfig cfg);

    // Next prime event in ascending order, or nullopt past the limit.
    std::optional<PrimeEvent> next();

    const SieveConfig& config() const { return cfg_; }

private:
    void fill_segment();

    SieveConfig cfg_;
    std::vector<std::uint64_t> base_;   // odd base primes
    std::vector<std::uint64_t> words_;  // segment bitmap, bit set = composite
    std::vector<std::uint64_t> buf_;    // primes of the current segment
    std::size_t buf_pos_ = 0;
    std::uint64_t seg_lo_ = 3;          // first odd candidate of the next segment
    std::uint64_t index_ = 0;
    bool emitted_two_ = false;
};

// p_n under an explicit capacity; throws capacity_error when cfg.limit < p_n.
std::uint64_t nth_prime(std::uint64_t n, const SieveConfig& cfg);
// p_n with a self-sized limit (Rosser-type upper bound).
std::uint64_t nth_prime(std::uint64_t n);
// pi(x): number of primes <= x.
std::uint64_t prime_count(std::uint64_t x);

// Upper bound on p_n: n (ln n + ln ln n) for n >= 6, exact small table below.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

} // namespace primegm
