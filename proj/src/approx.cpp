#include "primegm/approx.hpp"

#include <stdexcept>

#include "primegm/compensated.hpp"
#include "primegm/errors.hpp"

namespace primegm {

namespace {

PanaitopolCoeffs compute_coefficients(unsigned m) {
    PanaitopolCoeffs out;
    std::vector<BigInt> factorial; // factorial[i] = i!
    factorial.emplace_back(std::uint64_t{1});
    for (unsigned j = 1; j <= m; ++j) {
        BigInt f = factorial.back();
        f *= j;
        factorial.push_back(f);

        BigInt k = f;
        k *= j; // j * j!
        for (unsigned i = 1; i < j; ++i) {
            BigInt t = factorial[i];
            t *= out.terms[j - i - 1];
            k -= t;
        }
        out.terms.push_back(std::move(k));
    }
    return out;
}

// The first three terms are pinned; a recurrence drift would silently poison
// every series evaluation, so refuse to run instead.
void validate_anchors() {
    static const bool ok = [] {
        const PanaitopolCoeffs c = compute_coefficients(3);
        return c.terms[0] == BigInt(1) && c.terms[1] == BigInt(3) && c.terms[2] == BigInt(13);
    }();
    if (!ok)
        throw std::logic_error("coefficient recurrence failed its 1, 3, 13 anchor check");
}

// Exact when the coefficient fits 53 bits, outward-rounded otherwise.
Interval coeff_interval(const BigInt& k) {
    if (k.bit_count() <= 53) return Interval::point(static_cast<double>(k.to_u64()));
    const double d = mpz_get_d(k.raw()); // truncates toward zero
    return {d, next_up(d)};
}

} // namespace

PanaitopolCoeffs panaitopol_coefficients(unsigned m) {
    if (m < 1) throw std::invalid_argument("panaitopol_coefficients: m must be positive");
    validate_anchors();
    return compute_coefficients(m);
}

Interval approx_ratio(std::uint64_t p, ApproxSpec spec) {
    if (p < 3) throw std::domain_error("approx_ratio: p must be at least 3");
    const Interval one = Interval::point(1.0);
    if (spec.order == 0) return interval_exp(one);

    const PanaitopolCoeffs coeffs = panaitopol_coefficients(spec.order);
    const Interval log_p = interval_log(p);
    Interval t = coeff_interval(coeffs.terms[spec.order - 1]);
    for (unsigned j = spec.order - 1; j >= 1; --j)
        t = coeff_interval(coeffs.terms[j - 1]) + t / log_p;
    return interval_exp(one + t / log_p);
}

ErrorScan approx_error_scan(std::uint64_t limit, ApproxSpec spec, std::uint64_t floor_p,
                            const SieveConfig& cfg) {
    if (floor_p >= limit) throw std::invalid_argument("approx_error_scan: floor_p must be < limit");
    if (limit > cfg.limit) throw capacity_error("approx_error_scan: limit beyond sieve capacity");

    // Precompute the series exponent pieces once; evaluate per prime on the
    // log scale and convert |approx/ratio - 1| through expm1.
    std::vector<Interval> ks;
    if (spec.order > 0) {
        const PanaitopolCoeffs coeffs = panaitopol_coefficients(spec.order);
        for (const BigInt& k : coeffs.terms) ks.push_back(coeff_interval(k));
    }
    const Interval one = Interval::point(1.0);

    ErrorScan scan;
    scan.floor_p = floor_p;
    scan.limit = limit;

    PrimeStream stream(cfg);
    CompensatedSum theta;
    while (auto ev = stream.next()) {
        if (ev->prime > limit) break;
        theta = accumulate_term(theta, interval_log(ev->prime));
        if (ev->prime <= floor_p) continue;

        const Interval log_p = interval_log(ev->prime);
        Interval series = one;
        if (!ks.empty()) {
            Interval t = ks.back();
            for (std::size_t j = ks.size() - 1; j >= 1; --j) t = ks[j - 1] + t / log_p;
            series = one + t / log_p;
        }
        const Interval log_ratio = log_p - div_u64(as_interval(theta), ev->index);
        const Interval rel = abs(interval_expm1(series - log_ratio));

        if (scan.primes_scanned == 0) {
            scan.max_rel_error = rel;
            scan.argmax_p = ev->prime;
        } else {
            if (rel.hi > scan.max_rel_error.hi) scan.argmax_p = ev->prime;
            scan.max_rel_error = {std::max(scan.max_rel_error.lo, rel.lo),
                                  std::max(scan.max_rel_error.hi, rel.hi)};
        }
        scan.primes_scanned += 1;
    }
    return scan;
}

ErrorScan approx_error_scan(std::uint64_t limit, ApproxSpec spec, std::uint64_t floor_p) {
    return approx_error_scan(limit, spec, floor_p, SieveConfig::with_limit(limit));
}

} // namespace primegm
