#include "primegm/mean.hpp"

#include <algorithm>
#include <string>

#include "primegm/errors.hpp"

namespace primegm {

MeanState accumulate(MeanState state, PrimeEvent event) {
    if (event.index != state.theta.count + 1)
        throw sequencing_error("accumulate: expected index " +
                               std::to_string(state.theta.count + 1) + ", got " +
                               std::to_string(event.index));
    state.theta = accumulate_term(state.theta, interval_log(event.prime));
    state.last = event;
    return state;
}

MeanSnapshot snapshot_from_theta(std::uint64_t n, std::uint64_t p, Interval theta) {
    MeanSnapshot snap;
    snap.n = n;
    snap.p = p;
    snap.theta = theta;
    snap.log_s = div_u64(theta, n);
    snap.s = interval_exp(snap.log_s);
    snap.log_ratio = interval_log(p) - snap.log_s;
    snap.ratio = Interval::from_u64(p) / snap.s;
    return snap;
}

MeanSnapshot snapshot(const MeanState& state) {
    if (state.theta.count == 0) throw sequencing_error("snapshot: empty accumulator");
    return snapshot_from_theta(state.last.index, state.last.prime, as_interval(state.theta));
}

void StrictThetaState::add_prime(std::uint64_t p) {
    theta = dd_add(theta, DdApprox::log_u64(p));
    count += 1;
    last_prime = p;
}

MeanSnapshot StrictThetaState::snapshot() const {
    MeanSnapshot snap;
    snap.n = count;
    snap.p = last_prime;
    snap.theta = to_interval(theta);
    const DdApprox log_s = dd_div_u64(theta, count);
    snap.log_s = to_interval(log_s);
    snap.s = to_interval(dd_exp(log_s));
    const DdApprox log_ratio = dd_sub(DdApprox::log_u64(last_prime), log_s);
    snap.log_ratio = to_interval(log_ratio);
    snap.ratio = to_interval(dd_exp(log_ratio));
    return snap;
}

std::vector<MeanSnapshot> strict_snapshots_at(const SieveConfig& cfg,
                                              const std::vector<std::uint64_t>& primes_at) {
    std::vector<MeanSnapshot> out;
    if (primes_at.empty()) return out;
    PrimeStream stream(cfg);
    StrictThetaState state;
    std::size_t next = 0;
    while (auto ev = stream.next()) {
        state.add_prime(ev->prime);
        while (next < primes_at.size() && primes_at[next] == ev->prime) {
            out.push_back(state.snapshot());
            ++next;
        }
        if (next == primes_at.size()) return out;
    }
    throw capacity_error("strict sweep: prime " + std::to_string(primes_at[next]) +
                         " not reached under limit " + std::to_string(cfg.limit));
}

std::vector<MeanSnapshot> rows_at_targets(const SieveConfig& cfg,
                                          const std::vector<std::uint64_t>& targets,
                                          unsigned places) {
    for (std::size_t i = 0; i + 1 < targets.size(); ++i)
        if (targets[i] > targets[i + 1])
            throw std::invalid_argument("rows_at_targets: targets must ascend");
    if (!targets.empty() && targets.back() > cfg.limit)
        throw capacity_error("rows_at_targets: target " + std::to_string(targets.back()) +
                             " beyond limit " + std::to_string(cfg.limit));

    std::vector<MeanSnapshot> rows;
    if (targets.empty()) return rows;

    PrimeStream stream(cfg);
    MeanState state;
    std::size_t next = 0;
    while (auto ev = stream.next()) {
        state = accumulate(state, *ev);
        while (next < targets.size() && ev->prime >= targets[next]) {
            rows.push_back(snapshot(state));
            ++next;
        }
        if (next == targets.size()) break;
    }
    if (next < targets.size())
        throw capacity_error("rows_at_targets: no prime >= " + std::to_string(targets[next]) +
                             " within limit");

    // Escalate rows that fail decimal certification of s or ratio.
    std::vector<std::uint64_t> retry;
    for (const MeanSnapshot& row : rows)
        if (!certified_round(row.s, places).certified() ||
            !certified_round(row.ratio, places).certified())
            retry.push_back(row.p);
    if (!retry.empty()) {
        const std::vector<MeanSnapshot> fixed = strict_snapshots_at(cfg, retry);
        std::size_t j = 0;
        for (MeanSnapshot& row : rows)
            if (j < fixed.size() && fixed[j].p == row.p && fixed[j].n == row.n) {
                row = fixed[j];
                ++j;
            }
    }
    return rows;
}

} // namespace primegm
