#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "primegm/bigint.hpp"
#include "primegm/sieve.hpp"

namespace primegm {

enum class SequenceId { A062049, A002110, A233824 };

SequenceId sequence_from_name(const std::string& name);
std::string sequence_name(SequenceId id);

// Default cap for the exact big-integer paths; primorial(10^5) is ~1.9 Mbit.
inline constexpr std::uint64_t kExactCapacity = 100000;

// Exact product of the first n primes.
BigInt primorial(std::uint64_t n, std::uint64_t cap = kExactCapacity);

// Exact ordering facts behind floor(s_n) = m: m^n <= p_n# and p_n# < (m+1)^n.
struct FloorWitness {
    bool lower_ok = false; // m^n <= p_n#
    bool upper_ok = false; // p_n# < (m+1)^n
    bool holds() const { return lower_ok && upper_ok; }
};

FloorWitness exact_floor_witness(std::uint64_t n, std::uint64_t m,
                                 std::uint64_t cap = kExactCapacity);

// floor(s_n), certified: interval floor first, then a double-double retry,
// then the exact big-integer witness (mandatory within cap; a persistent
// indeterminate past cap is a capacity error, never a guess).
std::uint64_t a062049(std::uint64_t n);
std::vector<std::uint64_t> a062049_range(std::uint64_t lo, std::uint64_t hi);

// OEIS b-file text: one "n a(n)" line per index, ascending, no header.
std::string emit_bfile(SequenceId id, std::uint64_t lo, std::uint64_t hi);

// Inverse of emit_bfile for round-trip checks.
std::vector<std::pair<std::uint64_t, BigInt>> parse_bfile(const std::string& text);

} // namespace primegm
