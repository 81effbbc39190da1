#ifndef IDG_REPORT_HPP
#define IDG_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace idg {

struct CheckRecord {
    std::string name;
    std::string rule;      // which identity or rule the check exercises
    bool ok = true;
    std::string witness;   // first counterexample, empty when fine
};

// Command outcome in stable, schema-versioned form. The exit code always
// matches the verdict: pass 0, fail 1, error 2.
struct Report {
    std::string schema = "report/1";
    std::string command;
    std::string verdict = "pass";
    std::string constants_field;   // finite stand-in for the constants field
    std::vector<CheckRecord> checks;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    void add_check(const std::string& name, const std::string& rule, bool ok,
                   const std::string& witness = "");
    void fail(const std::string& why);
    void error(const std::string& why);
    bool all_checks_ok() const;
    int exit_code() const;

    nlohmann::ordered_json to_json() const;
    static Report from_json(const nlohmann::ordered_json& j);
    std::string to_text() const;
};

}   // namespace idg

#endif
