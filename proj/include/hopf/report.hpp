#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace hopf {

struct CheckRecord {
    std::string name;
    bool pass = true;
    std::string witness; // non-empty whenever pass is false
    double seconds = 0.0;
};

struct Report {
    std::vector<CheckRecord> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string witness = "", double seconds = 0.0) {
        checks.push_back({std::move(name), pass, std::move(witness), seconds});
    }

    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix + c.name, c.pass, c.witness, c.seconds});
    }

    const CheckRecord* firstFailure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

// Runs fn and appends one timed record; fn returns (pass, witness).
template <typename Fn>
void timedCheck(Report& rep, const std::string& name, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    std::pair<bool, std::string> r = fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.add(name, r.first, r.second, secs);
}

} // namespace hopf
