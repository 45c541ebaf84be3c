#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace tamari {

/// One named check with its outcome; verification suites accumulate these.
struct CheckResult {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct VerifyReport {
    std::string title;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, std::string lhs, std::string rhs, bool pass) {
        checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
    }

    /// Convenience: record an equality check of two printable values.
    template <class T>
    void add_eq(std::string name, const T& lhs, const T& rhs) {
        std::ostringstream l, r;
        l << lhs;
        r << rhs;
        add(std::move(name), l.str(), r.str(), lhs == rhs);
    }

    std::string to_json() const {
        std::ostringstream os;
        os << "{\"title\":\"" << title << "\",\"pass\":" << (all_pass() ? "true" : "false")
           << ",\"checks\":[";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            os << (i ? "," : "") << "{\"name\":\"" << c.name << "\",\"lhs\":\"" << c.lhs
               << "\",\"rhs\":\"" << c.rhs << "\",\"pass\":" << (c.pass ? "true" : "false")
               << "}";
        }
        os << "]}";
        return os.str();
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& c : checks)
            os << (c.pass ? "PASS" : "FAIL") << " " << c.name
               << (c.pass ? "" : "  (" + c.lhs + " != " + c.rhs + ")") << "\n";
        return os.str();
    }
};

} // namespace tamari
