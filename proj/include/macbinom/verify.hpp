#pragma once

// Named verification suites driving every identity in the library, with
// per-case reporting, deterministic sampling, and acceptance-sized defaults.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "macbinom/mac.hpp"

namespace macbinom {

struct VerifyOptions {
    int max_size = -1;       // partition size bound; -1 = suite default
    int n = -1;              // variable count bound; -1 = suite default
    int order = -1;          // series truncation order; -1 = suite default
    bool sampled = false;    // sampled mode where a suite offers the choice
    std::uint64_t seed = 1;  // sampling seed, echoed in the report
};

struct VerifyReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // one rendered line per failing case
    bool ok() const { return failed == 0; }
};

// Suite names accepted by run_suite, in canonical order ("all" runs them all).
const std::vector<std::string>& suite_names();

// Runs one suite (or "all").  Per-case pass/fail lines and the suite summary
// go to `out`; wall time per suite goes to stderr so the stream stays
// byte-identical for fixed options.  Unknown suite -> contract_error.
VerifyReport run_suite(Ctx& ctx, const std::string& suite, const VerifyOptions& opt,
                       std::ostream& out);

}  // namespace macbinom
