#pragma once

#include <json.hpp>

#include "dcsym/domain.hpp"

namespace dcsym {

// Flat result record emitted by the CLI, one per verified subject.
struct VerificationReport {
    std::string subject;
    std::string status = "pass";  // pass | fail | skipped
    double max_residual = 0.0;
    int samples = 0;
    std::optional<Witness> witness;
    std::string notes;

    bool passed() const { return status == "pass"; }
};

inline VerificationReport to_report(const std::string& subject, bool pass,
                                    const ZeroCheck& z, const std::string& notes = "") {
    VerificationReport r;
    r.subject = subject;
    r.status = pass ? "pass" : "fail";
    r.max_residual = z.max_rel;
    r.samples = z.sampled;
    r.witness = z.witness;
    r.notes = notes;
    return r;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string to_text(const VerificationReport& r) {
    std::string line = (r.status == "pass" ? "[PASS] " : r.status == "fail" ? "[FAIL] " : "[SKIP] ");
    line += r.subject;
    line += "  residual=" + format_double(r.max_residual);
    line += " samples=" + std::to_string(r.samples);
    if (!r.notes.empty()) line += "  (" + r.notes + ")";
    if (r.witness) {
        line += "\n        witness:";
        for (const auto& [k, v] : r.witness->point)
            line += " " + k + "=" + format_double(v);
        line += " -> " + format_double(r.witness->residual);
    }
    return line;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["subject"] = r.subject;
    j["status"] = r.status;
    j["max_residual"] = r.max_residual;
    j["samples"] = r.samples;
    if (r.witness) {
        nlohmann::ordered_json w;
        for (const auto& [k, v] : r.witness->point) w["point"][k] = v;
        w["residual"] = r.witness->residual;
        j["witness"] = w;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

struct ReportStream {
    std::vector<VerificationReport> reports;

    void add(VerificationReport r) { reports.push_back(std::move(r)); }
    void add(const std::string& subject, bool pass, const ZeroCheck& z,
             const std::string& notes = "") {
        add(to_report(subject, pass, z, notes));
    }

    bool all_pass() const {
        for (const auto& r : reports)
            if (r.status == "fail") return false;
        return true;
    }

    int fail_count() const {
        int n = 0;
        for (const auto& r : reports) n += r.status == "fail";
        return n;
    }

    std::string emit_text() const {
        std::string out;
        // failures first, then the rest, both in insertion order
        for (const auto& r : reports)
            if (r.status == "fail") out += to_text(r) + "\n";
        for (const auto& r : reports)
            if (r.status != "fail") out += to_text(r) + "\n";
        out += "summary: " + std::to_string(reports.size() - fail_count()) + "/" +
               std::to_string(reports.size()) + " passed\n";
        return out;
    }

    std::string emit_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        nlohmann::ordered_json doc;
        doc["reports"] = arr;
        doc["total"] = reports.size();
        doc["failed"] = fail_count();
        return doc.dump(2) + "\n";
    }
};

} // namespace dcsym
