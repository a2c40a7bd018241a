#pragma once

/// @file report.hpp
/// @brief Structured pass/fail/not-applicable records shared by every checker.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

using Json = nlohmann::ordered_json;

/// Caller error: bad tags, malformed witnesses, schema violations.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A question the available machinery cannot decide (no solver, no enumeration).
class UndecidableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, not_applicable };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not-applicable";
    }
    return "?";
}

struct CheckEntry {
    std::string check;
    Status status = Status::pass;
    Json witnesses = Json::object();
    std::string lhs;
    std::string rhs;

    Json to_json() const {
        Json j;
        j["check"] = check;
        j["status"] = status_name(status);
        j["witnesses"] = witnesses;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        return j;
    }
};

class ViolationReport {
public:
    ViolationReport() = default;
    explicit ViolationReport(std::string subject) : subject_(std::move(subject)) {}

    const std::string& subject() const { return subject_; }
    void set_subject(std::string s) { subject_ = std::move(s); }

    CheckEntry& add(CheckEntry e) {
        entries_.push_back(std::move(e));
        return entries_.back();
    }

    CheckEntry& add(std::string check, Status status, Json witnesses = Json::object(),
                    std::string lhs = {}, std::string rhs = {}) {
        return add(CheckEntry{std::move(check), status, std::move(witnesses), std::move(lhs),
                              std::move(rhs)});
    }

    /// Records an equation check; pass iff the flag holds.
    CheckEntry& expect(std::string check, bool ok, Json witnesses = Json::object(),
                       std::string lhs = {}, std::string rhs = {}) {
        return add(std::move(check), ok ? Status::pass : Status::fail, std::move(witnesses),
                   std::move(lhs), std::move(rhs));
    }

    /// Appends all entries of another report, prefixing their check names.
    void merge(const ViolationReport& other, const std::string& prefix = {}) {
        for (const auto& e : other.entries_) {
            CheckEntry c = e;
            if (!prefix.empty()) c.check = prefix + "/" + c.check;
            entries_.push_back(std::move(c));
        }
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::size_t count(Status s) const {
        return static_cast<std::size_t>(std::count_if(
            entries_.begin(), entries_.end(), [s](const CheckEntry& e) { return e.status == s; }));
    }

    bool passed() const { return count(Status::fail) == 0; }

    const CheckEntry* first_failure() const {
        for (const auto& e : entries_)
            if (e.status == Status::fail) return &e;
        return nullptr;
    }

    const CheckEntry* find(const std::string& check) const {
        for (const auto& e : entries_)
            if (e.check == check) return &e;
        return nullptr;
    }

    Json to_json() const {
        Json j;
        j["subject"] = subject_;
        j["summary"] = {{"pass", count(Status::pass)},
                        {"fail", count(Status::fail)},
                        {"not-applicable", count(Status::not_applicable)}};
        Json arr = Json::array();
        for (const auto& e : entries_) arr.push_back(e.to_json());
        j["entries"] = std::move(arr);
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        if (!subject_.empty()) os << subject_ << "\n";
        for (const auto& e : entries_) {
            os << "  [" << status_name(e.status) << "] " << e.check;
            if (!e.lhs.empty() || !e.rhs.empty())
                os << "  " << e.lhs << (e.status == Status::fail ? " != " : " = ") << e.rhs;
            os << "\n";
        }
        os << "  pass " << count(Status::pass) << ", fail " << count(Status::fail)
           << ", not-applicable " << count(Status::not_applicable) << "\n";
        return os.str();
    }

private:
    std::string subject_;
    std::vector<CheckEntry> entries_;
};

}  // namespace tandim
