#include "tidom/report.hpp"

#include <algorithm>

namespace tidom {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::skip:
            return "skip";
    }
    return "unknown";
}

void Report::add(Record record) {
    records_.push_back(std::move(record));
    if (sink_) sink_(records_.back());
}

void Report::append(const Report& other) {
    for (const Record& r : other.records()) add(r);
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [s](const Record& r) { return r.status == s; }));
}

nlohmann::json to_json(const Record& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["input"] = r.input;
    j["values"] = r.values;
    j["pass"] = r.status == Status::skip ? nlohmann::json(nullptr) : nlohmann::json(r.status == Status::pass);
    j["status"] = to_string(r.status);
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

nlohmann::json summary_json(const Report& report) {
    nlohmann::json j;
    j["records"] = report.records().size();
    j["passed"] = report.count(Status::pass);
    j["failed"] = report.count(Status::fail);
    j["skipped"] = report.count(Status::skip);
    j["pass"] = report.passed();
    j["metadata"] = report.metadata();
    return nlohmann::json{{"summary", j}};
}

}  // namespace tidom
