#pragma once

// Structured verification reports. Output is JSON with a fixed key order;
// timings are left out unless asked for so that reports diff cleanly.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace skg {

using ojson = nlohmann::ordered_json;

enum class RecordStatus { pass, fail, timeout, observed };

inline const char* status_name(RecordStatus s)
{
    switch (s) {
    case RecordStatus::pass: return "pass";
    case RecordStatus::fail: return "fail";
    case RecordStatus::timeout: return "timeout";
    case RecordStatus::observed: return "observed";
    }
    return "?";
}

struct Record {
    std::string family;
    int n = 0;
    int k = 0;
    std::string statistic;
    ojson expected;
    ojson observed;
    RecordStatus status = RecordStatus::pass;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
    ojson detail;

    /// Observations carry no assertion, so they count as ok.
    bool ok() const noexcept { return status == RecordStatus::pass || status == RecordStatus::observed; }
};

struct ReportSummary {
    int pass = 0;
    int fail = 0;
    int timeout = 0;
    int observed = 0;
    double total_ms = 0.0;
};

struct VerificationReport {
    std::string campaign;
    ojson parameters = ojson::object();
    std::vector<Record> records;

    /// Compare expected against observed and append.
    Record& check(Record r)
    {
        r.status = r.expected == r.observed ? RecordStatus::pass : RecordStatus::fail;
        records.push_back(std::move(r));
        return records.back();
    }

    Record& add(Record r)
    {
        records.push_back(std::move(r));
        return records.back();
    }

    ReportSummary summary() const
    {
        ReportSummary s;
        for (const auto& r : records) {
            switch (r.status) {
            case RecordStatus::pass: ++s.pass; break;
            case RecordStatus::fail: ++s.fail; break;
            case RecordStatus::timeout: ++s.timeout; break;
            case RecordStatus::observed: ++s.observed; break;
            }
            s.total_ms += r.elapsed_ms;
        }
        return s;
    }

    bool passed() const { return summary().fail == 0; }

    ojson to_json(bool timings = false) const
    {
        ojson out;
        out["campaign"] = campaign;
        out["parameters"] = parameters;
        ojson recs = ojson::array();
        for (const auto& r : records) {
            ojson j;
            j["family"] = r.family;
            j["n"] = r.n;
            j["k"] = r.k;
            j["statistic"] = r.statistic;
            j["expected"] = r.expected;
            j["observed"] = r.observed;
            j["ok"] = r.ok();
            j["status"] = status_name(r.status);
            if (timings)
                j["elapsed_ms"] = r.elapsed_ms;
            j["seed"] = r.seed;
            if (!r.detail.is_null())
                j["detail"] = r.detail;
            recs.push_back(std::move(j));
        }
        out["records"] = std::move(recs);
        auto s = summary();
        ojson sum;
        sum["records"] = records.size();
        sum["pass"] = s.pass;
        sum["fail"] = s.fail;
        sum["timeout"] = s.timeout;
        sum["observed"] = s.observed;
        if (timings)
            sum["total_ms"] = s.total_ms;
        out["summary"] = std::move(sum);
        return out;
    }

    std::string dump(bool timings = false) const { return to_json(timings).dump(2) + "\n"; }
};

} // namespace skg
