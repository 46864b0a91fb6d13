#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace trv {

/// Collects one JSON object per check and renders them as JSON lines or CSV,
/// deterministically: no timestamps, no addresses, keys in insertion order.
class ReportSink {
public:
    using line_t = nlohmann::ordered_json;

    line_t& add(const std::string& check) {
        lines_.emplace_back();
        lines_.back()["check"] = check;
        return lines_.back();
    }

    /// Residual-style check: pass iff value <= tol.
    bool add_residual(const std::string& check, double value, double tol) {
        line_t& l = add(check);
        l["max_residual"] = value;
        l["tolerance"] = tol;
        const bool ok = value <= tol;
        l["pass"] = ok;
        if (!ok) ++failures_;
        return ok;
    }

    void fail_last() { ++failures_; }

    bool all_pass() const { return failures_ == 0; }
    int failures() const { return failures_; }
    const std::vector<line_t>& lines() const { return lines_; }

    void write_json(std::ostream& os) const {
        for (const auto& l : lines_) os << l.dump() << "\n";
        line_t summary;
        summary["check"] = "summary";
        summary["total"] = lines_.size();
        summary["failed"] = failures_;
        summary["pass"] = failures_ == 0;
        os << summary.dump() << "\n";
    }

    /// Flattened CSV: the header is the union of keys in first-seen order.
    void write_csv(std::ostream& os) const {
        line_t summary;
        summary["check"] = "summary";
        summary["total"] = lines_.size();
        summary["failed"] = failures_;
        summary["pass"] = failures_ == 0;

        std::vector<std::string> keys;
        auto note = [&keys](const line_t& l) {
            for (auto it = l.begin(); it != l.end(); ++it) {
                if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
                    keys.push_back(it.key());
                }
            }
        };
        for (const auto& l : lines_) note(l);
        note(summary);
        for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
        os << "\n";
        auto row = [&](const line_t& l) {
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (i) os << ",";
                if (l.contains(keys[i])) {
                    const auto& v = l[keys[i]];
                    if (v.is_string()) {
                        os << v.get<std::string>();
                    } else {
                        os << v.dump();
                    }
                }
            }
            os << "\n";
        };
        for (const auto& l : lines_) row(l);
        row(summary);
    }

private:
    std::vector<line_t> lines_;
    int failures_ = 0;
};

} // namespace trv
