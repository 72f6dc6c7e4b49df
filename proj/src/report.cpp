#include "realclif/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace realclif {

void Report::add(std::string key, bool pass, std::string detail) {
    cases.push_back(CaseResult{std::move(key), pass, std::move(detail)});
}

bool Report::all_pass() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseResult& c) { return c.pass; });
}

std::size_t Report::failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(),
                      [](const CaseResult& c) { return !c.pass; }));
}

void Report::sort_cases() {
    std::sort(cases.begin(), cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
}

std::string render_json(const std::vector<Report>& reports, std::uint64_t seed) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["seed"] = seed;
    nlohmann::json suites = nlohmann::json::array();
    for (const Report& r : reports) {
        nlohmann::json s;
        s["suite"] = r.suite;
        s["pass"] = r.all_pass();
        nlohmann::json cases = nlohmann::json::array();
        for (const CaseResult& c : r.cases) {
            nlohmann::json jc;
            jc["key"] = c.key;
            jc["status"] = c.pass ? "pass" : "fail";
            if (!c.detail.empty()) jc["detail"] = c.detail;
            cases.push_back(std::move(jc));
        }
        s["cases"] = std::move(cases);
        suites.push_back(std::move(s));
    }
    doc["suites"] = std::move(suites);
    return doc.dump(2) + "\n";
}

void print_text(std::ostream& os, const Report& report, bool verbose) {
    os << "suite " << report.suite << ": " << (report.cases.size() - report.failed_count())
       << "/" << report.cases.size() << " pass\n";
    for (const CaseResult& c : report.cases) {
        if (c.pass && !verbose) continue;
        os << "  " << (c.pass ? "pass" : "FAIL") << " " << c.key;
        if (!c.pass && !c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
}

} // namespace realclif
