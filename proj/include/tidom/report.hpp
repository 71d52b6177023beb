#ifndef TIDOM_REPORT_HPP
#define TIDOM_REPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tidom {

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

/// One verified claim or computed value.
struct Record {
    std::string check;
    std::string input;
    nlohmann::json values = nlohmann::json::object();
    Status status = Status::pass;
    /// Digraph text plus witness that reproduces a failure; set on every failed record.
    std::optional<std::string> counterexample;
};

/**
 * Ordered list of records plus run metadata.
 *
 * A sink, when installed, sees every record as it is added so long sweeps can
 * stream progress. Records keep insertion order.
 */
class Report {
   public:
    using Sink = std::function<void(const Record&)>;

    void set_sink(Sink sink) { sink_ = std::move(sink); }

    void add(Record record);
    void append(const Report& other);

    const std::vector<Record>& records() const { return records_; }
    nlohmann::json& metadata() { return metadata_; }
    const nlohmann::json& metadata() const { return metadata_; }

    std::size_t count(Status s) const;
    /// No record failed. Skipped records do not count as failures.
    bool passed() const { return count(Status::fail) == 0; }

   private:
    std::vector<Record> records_;
    nlohmann::json metadata_ = nlohmann::json::object();
    Sink sink_;
};

/// JSON object of a record; "pass" is null for skipped records.
nlohmann::json to_json(const Record& r);

/// Summary object: record counts per status, overall pass flag, metadata.
nlohmann::json summary_json(const Report& report);

}  // namespace tidom

#endif
