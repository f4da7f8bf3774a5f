#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primegm {

// Parsed command line. Exit codes: 0 success (for `verify`: clean), 1
// verify found a violation, 2 verify left an indeterminate, 64 usage
// error, 65 capacity error.
struct CliConfig {
    enum class Command { Table, Verify, Sharpness, Seq, Approx, Bounds };

    Command command = Command::Table;
    std::string format = "tsv"; // tsv | json | bfile (seq only)
    bool strict = false;        // force double-double precision
    unsigned places = 6;
    std::uint64_t segment_size = 1u << 20;

    std::uint64_t limit = 0;             // table
    std::vector<std::uint64_t> targets;  // table; empty = powers of ten
    std::uint64_t from = 0;              // verify / seq / approx
    std::uint64_t to = 0;                // verify / seq / approx
    std::uint64_t below = 32059;         // sharpness
    std::uint64_t at = 0;                // bounds
    unsigned order = 2;                  // approx
    std::string sequence = "A062049";    // seq
};

// Execute a parsed config; output on `out`, diagnostics on `err`.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Parse argv and run; maps usage errors to 64 and capacity errors to 65.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace primegm
