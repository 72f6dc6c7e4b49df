#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace realclif {

struct CaseResult {
    std::string key;
    bool pass = true;
    std::string detail;  // operands and context on failure
};

/// Outcome of one verification suite; case keys are unique and reports are
/// sorted by key before emission so output is reproducible.
struct Report {
    std::string suite;
    std::vector<CaseResult> cases;

    void add(std::string key, bool pass, std::string detail = "");
    bool all_pass() const;
    std::size_t failed_count() const;
    void sort_cases();
};

/// JSON document for a batch of suites; schema version 1.  Deterministic for
/// fixed inputs (no timing data).
std::string render_json(const std::vector<Report>& reports, std::uint64_t seed);

void print_text(std::ostream& os, const Report& report, bool verbose);

} // namespace realclif
