#include "idg/report.hpp"

#include <sstream>

namespace idg {

void Report::add_check(const std::string& name, const std::string& rule, bool ok,
                       const std::string& witness) {
    checks.push_back(CheckRecord{name, rule, ok, witness});
    if (!ok && verdict == "pass") verdict = "fail";
}

void Report::fail(const std::string& why) {
    verdict = "fail";
    data["failure"] = why;
}

void Report::error(const std::string& why) {
    verdict = "error";
    data["error"] = why;
}

bool Report::all_checks_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

int Report::exit_code() const {
    if (verdict == "pass") return 0;
    if (verdict == "fail") return 1;
    return 2;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = schema;
    j["command"] = command;
    j["verdict"] = verdict;
    if (!constants_field.empty()) {
        j["constants_field"] = constants_field;
        j["constants_note"] = "finite stand-in for an algebraically closed constants field";
    }
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["rule"] = c.rule;
        jc["ok"] = c.ok;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        cs.push_back(jc);
    }
    j["checks"] = cs;
    j["data"] = data;
    return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
    Report r;
    r.schema = j.at("schema").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.constants_field = j.value("constants_field", std::string());
    for (const auto& jc : j.at("checks")) {
        CheckRecord c;
        c.name = jc.at("name").get<std::string>();
        c.rule = jc.at("rule").get<std::string>();
        c.ok = jc.at("ok").get<bool>();
        c.witness = jc.value("witness", std::string());
        r.checks.push_back(std::move(c));
    }
    r.data = j.value("data", nlohmann::ordered_json::object());
    return r;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.ok ? "  ok   " : "  FAIL ") << c.name << " [" << c.rule << "]";
        if (!c.witness.empty()) os << "  witness: " << c.witness;
        os << "\n";
    }
    for (auto it = data.begin(); it != data.end(); ++it) {
        if (it->is_string())
            os << "  " << it.key() << ": " << it->get<std::string>() << "\n";
        else if (it->is_number() || it->is_boolean())
            os << "  " << it.key() << ": " << it->dump() << "\n";
    }
    os << "verdict: " << verdict << "\n";
    return os.str();
}

}   // namespace idg
