#pragma once

#include <span>
#include <string>
#include <vector>

namespace logconcave {

// One checked inequality instance: pass means slack = rhs - lhs >= -num_tol,
// equality means |slack| <= eq_tol (so equality implies pass).
struct InequalityReport {
    std::string suite;
    std::string instance;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    bool equality = false;

    double slack() const { return rhs - lhs; }
};

InequalityReport make_report(std::string suite, std::string instance, double lhs, double rhs,
                             double num_tol, double eq_tol);

struct ReportSummary {
    size_t total = 0;
    size_t failures = 0;
    size_t equalities = 0;
};

ReportSummary summarize(std::span<const InequalityReport> reports);

// JSON document {records: [...], summary: {...}} plus a timestamp field
// unless reproducible is set. Identical inputs yield byte-identical output
// when reproducible.
std::string to_json(std::span<const InequalityReport> reports, bool reproducible);

// CSV mirror: header suite,instance,lhs,rhs,slack,pass,equality and a
// trailing '#summary' comment line.
std::string to_csv(std::span<const InequalityReport> reports);

}  // namespace logconcave
