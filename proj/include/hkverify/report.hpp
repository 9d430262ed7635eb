#pragma once

#include "hkverify/rational.hpp"

#include <string>
#include <vector>

namespace hkverify {

enum class Verdict { Pass, Fail, Discrepancy, Skipped };
enum class Provenance { Paper, Derived };

const char* to_string(Verdict v);
const char* to_string(Provenance p);

struct ClaimRecord {
    std::string claim_id;
    std::string computed;
    std::string stated;
    Verdict verdict = Verdict::Skipped;
    Provenance provenance = Provenance::Derived;
};

struct ReportConfig {
    long long abar_max = 3;  // abar in 1..abar_max
    long long d_span = 200;  // odd d from the ampleness threshold up to threshold + d_span
    long long m_max = 3;     // m in 1..m_max
    long long a_max = 50;    // a in 1..a_max
    long long md_max = 41;   // odd md in 9..md_max
    std::string only;        // claim-id prefix filter; empty keeps everything

    void validate() const;  // throws PreconditionError on non-positive ranges
};

struct ReportSummary {
    int pass = 0;
    int fail = 0;
    int discrepancy = 0;
    int skipped = 0;
};

struct Report {
    ReportConfig config;
    std::vector<ClaimRecord> records;  // sorted by claim_id
    ReportSummary summary() const;
};

std::vector<std::string> claim_ids();
Report run_report(const ReportConfig& config);

std::string to_json(const Report& report);
std::string to_markdown(const Report& report);

}  // namespace hkverify
