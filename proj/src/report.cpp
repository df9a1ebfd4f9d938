#include "logconcave/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

#include <json.hpp>

namespace logconcave {

InequalityReport make_report(std::string suite, std::string instance, double lhs, double rhs,
                             double num_tol, double eq_tol) {
    InequalityReport r;
    r.suite = std::move(suite);
    r.instance = std::move(instance);
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = (rhs - lhs) >= -num_tol;
    r.equality = std::abs(rhs - lhs) <= eq_tol;
    return r;
}

ReportSummary summarize(std::span<const InequalityReport> reports) {
    ReportSummary s;
    s.total = reports.size();
    for (const auto& r : reports) {
        if (!r.pass) ++s.failures;
        if (r.equality) ++s.equalities;
    }
    return s;
}

std::string to_json(std::span<const InequalityReport> reports, bool reproducible) {
    nlohmann::ordered_json doc;
    if (!reproducible) {
        const auto now = std::chrono::system_clock::now();
        const std::time_t tt = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
        doc["timestamp"] = buf;
    }
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json rec;
        rec["suite"] = r.suite;
        rec["instance"] = r.instance;
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["slack"] = r.slack();
        rec["pass"] = r.pass;
        rec["equality"] = r.equality;
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    const ReportSummary s = summarize(reports);
    doc["summary"] = {{"total", s.total}, {"failures", s.failures}, {"equalities", s.equalities}};
    return doc.dump(2) + "\n";
}

std::string to_csv(std::span<const InequalityReport> reports) {
    std::string out = "suite,instance,lhs,rhs,slack,pass,equality\n";
    char buf[512];
    for (const auto& r : reports) {
        std::string inst = r.instance;
        for (char& c : inst)
            if (c == ',') c = ';';
        std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%.17g,%.17g,%d,%d\n", r.suite.c_str(),
                      inst.c_str(), r.lhs, r.rhs, r.slack(), r.pass ? 1 : 0, r.equality ? 1 : 0);
        out += buf;
    }
    const ReportSummary s = summarize(reports);
    std::snprintf(buf, sizeof buf, "#summary total=%zu failures=%zu equalities=%zu\n", s.total,
                  s.failures, s.equalities);
    out += buf;
    return out;
}

}  // namespace logconcave
