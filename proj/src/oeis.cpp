#include "primegm/oeis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "primegm/approx.hpp"
#include "primegm/errors.hpp"
#include "primegm/mean.hpp"

namespace primegm {

SequenceId sequence_from_name(const std::string& name) {
    if (name == "A062049") return SequenceId::A062049;
    if (name == "A002110") return SequenceId::A002110;
    if (name == "A233824") return SequenceId::A233824;
    throw std::invalid_argument("unknown sequence id: " + name);
}

std::string sequence_name(SequenceId id) {
    switch (id) {
    case SequenceId::A062049: return "A062049";
    case SequenceId::A002110: return "A002110";
    case SequenceId::A233824: return "A233824";
    }
    throw std::logic_error("unreachable");
}

BigInt primorial(std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw std::invalid_argument("primorial: n must be positive");
    if (n > cap)
        throw capacity_error("primorial: n = " + std::to_string(n) + " beyond exact cap " +
                             std::to_string(cap));
    BigInt prod(std::uint64_t{1});
    PrimeStream stream(SieveConfig::with_limit(nth_prime_upper_bound(n)));
    while (auto ev = stream.next()) {
        prod *= ev->prime;
        if (ev->index == n) return prod;
    }
    throw capacity_error("primorial: prime stream ended early");
}

FloorWitness exact_floor_witness(std::uint64_t n, std::uint64_t m, std::uint64_t cap) {
    if (n == 0 || m == 0)
        throw std::invalid_argument("exact_floor_witness: n and m must be positive");
    const BigInt pn = primorial(n, cap);
    FloorWitness w;
    // Cheap log prefilter would suffice almost always; the exact comparison
    // is what certifies, so it always runs.
    w.lower_ok = BigInt::pow_u64(m, n) <= pn;
    w.upper_ok = pn < BigInt::pow_u64(m + 1, n);
    return w;
}

namespace {

std::uint64_t floor_from_witness(std::uint64_t n, Interval s, std::uint64_t cap) {
    // The interval straddles at least one integer; each candidate in
    // [floor(lo), floor(hi)] is tested exactly.
    const auto lo = static_cast<std::uint64_t>(std::floor(s.lo));
    const auto hi = static_cast<std::uint64_t>(std::floor(s.hi));
    for (std::uint64_t m = lo; m <= hi; ++m)
        if (m >= 1 && exact_floor_witness(n, m, cap).holds()) return m;
    throw std::logic_error("floor witness: no candidate satisfied the exact ordering");
}

} // namespace

std::vector<std::uint64_t> a062049_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) throw std::invalid_argument("a062049_range: need 1 <= lo <= hi");

    const SieveConfig cfg = SieveConfig::with_limit(nth_prime_upper_bound(hi));
    std::vector<std::uint64_t> values(hi - lo + 1, 0);

    struct Unresolved {
        std::uint64_t n;
        std::uint64_t p;
    };
    std::vector<Unresolved> retry;

    PrimeStream stream(cfg);
    MeanState state;
    while (auto ev = stream.next()) {
        state = accumulate(state, *ev);
        if (ev->index >= lo) {
            const MeanSnapshot snap = snapshot(state);
            if (auto m = certified_floor(snap.s))
                values[ev->index - lo] = *m;
            else
                retry.push_back({ev->index, ev->prime});
        }
        if (ev->index == hi) break;
    }
    if (state.theta.count < hi)
        throw capacity_error("a062049_range: sieve bound did not reach index " +
                             std::to_string(hi));

    if (!retry.empty()) {
        std::vector<std::uint64_t> primes_at;
        for (const Unresolved& u : retry) primes_at.push_back(u.p);
        const std::vector<MeanSnapshot> strict = strict_snapshots_at(cfg, primes_at);
        for (std::size_t i = 0; i < retry.size(); ++i) {
            if (auto m = certified_floor(strict[i].s))
                values[retry[i].n - lo] = *m;
            else
                values[retry[i].n - lo] =
                    floor_from_witness(retry[i].n, strict[i].s, kExactCapacity);
        }
    }
    return values;
}

std::uint64_t a062049(std::uint64_t n) { return a062049_range(n, n).front(); }

std::string emit_bfile(SequenceId id, std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) throw empty_range_error("emit_bfile: need 1 <= lo <= hi");
    std::ostringstream out;
    switch (id) {
    case SequenceId::A062049: {
        const std::vector<std::uint64_t> v = a062049_range(lo, hi);
        for (std::uint64_t n = lo; n <= hi; ++n)
            out << n << ' ' << v[n - lo] << '\n';
        break;
    }
    case SequenceId::A002110: {
        if (hi > kExactCapacity)
            throw capacity_error("emit_bfile: primorial range beyond exact cap");
        BigInt prod(std::uint64_t{1});
        PrimeStream stream(SieveConfig::with_limit(nth_prime_upper_bound(hi)));
        while (auto ev = stream.next()) {
            prod *= ev->prime;
            if (ev->index >= lo) out << ev->index << ' ' << prod.to_string() << '\n';
            if (ev->index == hi) break;
        }
        break;
    }
    case SequenceId::A233824: {
        if (hi > 10000) throw capacity_error("emit_bfile: coefficient range too large");
        const PanaitopolCoeffs coeffs = panaitopol_coefficients(static_cast<unsigned>(hi));
        for (std::uint64_t n = lo; n <= hi; ++n)
            out << n << ' ' << coeffs.terms[n - 1].to_string() << '\n';
        break;
    }
    }
    return out.str();
}

std::vector<std::pair<std::uint64_t, BigInt>> parse_bfile(const std::string& text) {
    std::vector<std::pair<std::uint64_t, BigInt>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) throw std::invalid_argument("parse_bfile: blank line");
        std::istringstream ls(line);
        std::uint64_t n = 0;
        std::string value;
        if (!(ls >> n >> value)) throw std::invalid_argument("parse_bfile: bad line: " + line);
        out.emplace_back(n, BigInt(value));
    }
    return out;
}

} // namespace primegm
