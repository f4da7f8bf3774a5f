#include "primegm/sieve.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "primegm/errors.hpp"

namespace primegm {

namespace {

constexpr std::uint64_t kLimitCap = std::uint64_t{1} << 40;

std::uint64_t memory_budget_bytes() {
    if (const char* env = std::getenv("PRIMEGM_MEMORY_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw config_error("PRIMEGM_MEMORY_BUDGET must be a positive byte count");
    }
    return std::uint64_t{256} << 20; // 256 MiB default
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Simple odd-only sieve for the base primes.
std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 3) return out;
    const std::uint64_t half = (limit - 1) / 2; // candidates 3,5,...,limit
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; 2 * i + 1 <= limit / (2 * i + 1); ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
    }
    for (std::uint64_t i = 1; i <= half; ++i)
        if (!composite[i]) out.push_back(2 * i + 1);
    return out;
}

} // namespace

void SieveConfig::validate() const {
    if (limit < 2) throw empty_range_error("sieve limit must be at least 2");
    if (limit > kLimitCap) throw capacity_error("sieve limit above 2^40");
    if (segment_size < 2) throw config_error("segment size must be at least 2");
    // Bitmap (1 bit per odd) plus the prime buffer must fit the budget.
    const std::uint64_t bitmap = segment_size / 16 + 8;
    const std::uint64_t buffer = (segment_size / 2) * sizeof(std::uint64_t);
    if (bitmap + buffer > memory_budget_bytes())
        throw config_error("segment size " + std::to_string(segment_size) +
                           " exceeds the memory budget");
}

PrimeStream::PrimeStream(SieveConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    base_ = base_primes(isqrt(cfg_.limit));
}

std::optional<PrimeEvent> PrimeStream::next() {
    if (!emitted_two_) {
        emitted_two_ = true;
        return PrimeEvent{++index_, 2};
    }
    while (buf_pos_ >= buf_.size()) {
        if (seg_lo_ > cfg_.limit) return std::nullopt;
        fill_segment();
    }
    return PrimeEvent{++index_, buf_[buf_pos_++]};
}

void PrimeStream::fill_segment() {
    const std::uint64_t lo = seg_lo_; // odd
    const std::uint64_t hi = std::min(cfg_.limit, lo + (cfg_.segment_size - 1));
    const std::uint64_t n_odd = (hi - lo) / 2 + 1; // odds in [lo, hi]
    const std::uint64_t n_words = (n_odd + 63) / 64;

    words_.assign(n_words, 0);
    for (const std::uint64_t p : base_) {
        if (p * p > hi) break;
        std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        if (start % 2 == 0) start += p;
        if (start > hi) continue;
        for (std::uint64_t i = (start - lo) / 2; i < n_odd; i += p)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    buf_.clear();
    buf_pos_ = 0;
    for (std::uint64_t w = 0; w < n_words; ++w) {
        std::uint64_t bits = ~words_[w];
        if (w == n_words - 1 && (n_odd & 63) != 0)
            bits &= (std::uint64_t{1} << (n_odd & 63)) - 1;
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            buf_.push_back(lo + 2 * (64 * w + static_cast<std::uint64_t>(b)));
        }
    }
    seg_lo_ = hi + 1 + (hi & 1); // next odd past hi
}

std::uint64_t nth_prime(std::uint64_t n, const SieveConfig& cfg) {
    if (n == 0) throw std::invalid_argument("nth_prime: n must be positive");
    PrimeStream st(cfg);
    while (auto ev = st.next())
        if (ev->index == n) return ev->prime;
    throw capacity_error("nth_prime: index " + std::to_string(n) +
                         " beyond sieve limit " + std::to_string(cfg.limit));
}

std::uint64_t nth_prime(std::uint64_t n) {
    return nth_prime(n, SieveConfig::with_limit(nth_prime_upper_bound(n)));
}

std::uint64_t prime_count(std::uint64_t x) {
    if (x < 2) return 0;
    PrimeStream st(SieveConfig::with_limit(x));
    std::uint64_t count = 0;
    while (auto ev = st.next()) count = ev->index;
    return count;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
    if (n < 6) return 13;
    const double nd = static_cast<double>(n);
    const double bound = nd * (std::log(nd) + std::log(std::log(nd)));
    return static_cast<std::uint64_t>(bound) + 16;
}

} // namespace primegm
