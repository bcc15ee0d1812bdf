#include <cstdio>
#include <sstream>

#include "numrad/io.hpp"

namespace numrad::io {

namespace {

Json params_json(const bounds::BoundParams& p) {
    Json out = Json::object();
    if (p.alpha) out["alpha"] = *p.alpha;
    if (p.r) out["r"] = *p.r;
    if (p.sign) out["sign"] = *p.sign;
    return out;
}

Json descriptor_json(const harness::MatrixDescriptor& d) {
    return Json{{"family", harness::to_string(d.family)},
                {"n", d.n},
                {"index", d.index},
                {"seed", d.seed}};
}

std::string optional_cell(const std::optional<double>& v) { return v ? fmt12(*v) : ""; }

} // namespace

std::string fmt12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Json to_json(const bounds::BoundReport& report) {
    return Json{{"id", report.id},
                {"side", bounds::to_string(report.side)},
                {"target", bounds::to_string(report.target)},
                {"value", report.value},
                {"params", params_json(report.params)},
                {"anchor", report.anchor}};
}

Json to_json(const harness::CertReport& report, bool include_records) {
    const auto& c = report.config;
    Json families = Json::array();
    for (auto f : c.families) families.push_back(harness::to_string(f));

    Json doc;
    doc["suite"] = report.suite;
    doc["config"] = Json{{"families", families},
                         {"sizes", c.sizes},
                         {"count", c.count},
                         {"seed", c.seed},
                         {"r", c.r_values},
                         {"alpha_grid", c.alpha_grid},
                         {"lemma_trials", c.lemma_trials},
                         {"self_test_fail", c.self_test_fail},
                         {"numrad_tol", c.numrad.tol},
                         {"theta_grid", c.numrad.grid}};
    doc["matrices"] = report.matrices;
    doc["passed"] = report.passed();
    doc["failures"] = report.failures();

    Json summary = Json::array();
    for (const auto& s : report.summary) {
        summary.push_back(Json{{"check", s.check},
                               {"evaluated", s.evaluated},
                               {"failed", s.failed},
                               {"worst_slack", s.worst_slack},
                               {"tau", s.tau}});
    }
    doc["summary"] = std::move(summary);

    if (include_records) {
        Json records = Json::array();
        for (const auto& r : report.records) {
            Json row{{"check", r.check},
                     {"matrix", descriptor_json(r.matrix)},
                     {"lhs", r.lhs},
                     {"rhs", r.rhs},
                     {"slack", r.slack},
                     {"tau", r.tau},
                     {"pass", r.pass}};
            if (r.param) row["param"] = *r.param;
            records.push_back(std::move(row));
        }
        doc["records"] = std::move(records);
    }

    Json counterexamples = Json::array();
    for (const auto& ce : report.counterexamples) {
        counterexamples.push_back(Json{{"check", ce.check},
                                       {"matrix", descriptor_json(ce.matrix)},
                                       {"a", matrix_to_json(ce.a)},
                                       {"b", matrix_to_json(ce.b)}});
    }
    doc["counterexamples"] = std::move(counterexamples);
    return doc;
}

std::string reports_csv(const std::vector<bounds::BoundReport>& reports) {
    std::ostringstream out;
    out << "id,side,target,value,alpha,r,sign\n";
    for (const auto& rep : reports) {
        out << rep.id << ',' << bounds::to_string(rep.side) << ',' << bounds::to_string(rep.target)
            << ',' << fmt12(rep.value) << ',' << optional_cell(rep.params.alpha) << ','
            << optional_cell(rep.params.r) << ',';
        if (rep.params.sign) out << *rep.params.sign;
        out << '\n';
    }
    return out.str();
}

std::string summary_csv(const harness::CertReport& report) {
    std::ostringstream out;
    out << "check,evaluated,failed,worst_slack,tau\n";
    for (const auto& s : report.summary) {
        out << s.check << ',' << s.evaluated << ',' << s.failed << ',' << fmt12(s.worst_slack) << ','
            << fmt12(s.tau) << '\n';
    }
    return out.str();
}

} // namespace numrad::io
