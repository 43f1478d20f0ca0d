#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace epgt {

/// Outcome of an exhaustive property check: a verdict, ordered facts, and
/// the first few counterexamples.
struct PropertyReport {
    std::string name;
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> failures;
    std::size_t failure_count = 0;

    static constexpr std::size_t kKeptFailures = 8;

    template <class T>
    void set(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        for (auto& [k, v] : facts)
            if (k == key) {
                v = os.str();
                return;
            }
        facts.emplace_back(key, os.str());
    }

    void fail(std::string what) {
        passed = false;
        ++failure_count;
        if (failures.size() < kKeptFailures) failures.push_back(std::move(what));
    }

    std::string get(const std::string& key) const {
        for (const auto& [k, v] : facts)
            if (k == key) return v;
        return {};
    }

    std::string text() const {
        std::ostringstream os;
        os << name << ": " << (passed ? "PASS" : "FAIL") << '\n';
        for (const auto& [k, v] : facts) os << "  " << k << ": " << v << '\n';
        for (const auto& f : failures) os << "  counterexample: " << f << '\n';
        if (failure_count > failures.size()) os << "  (" << failure_count - failures.size() << " more)\n";
        return os.str();
    }

    std::string key_values() const {
        std::ostringstream os;
        os << "check=" << name << '\n' << "result=" << (passed ? "pass" : "fail") << '\n';
        for (const auto& [k, v] : facts) os << k << '=' << v << '\n';
        os << "failures=" << failure_count << '\n';
        return os.str();
    }
};

} // namespace epgt
