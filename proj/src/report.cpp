#include "factorlab/report.hpp"

namespace factorlab {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::vacuous: return "vacuous";
        case CheckStatus::violation: return "VIOLATION";
    }
    return "?";
}

bool CheckReport::hypothesis(const std::string& k) const {
    for (const auto& [key, v] : hypotheses)
        if (key == k) return v;
    return false;
}

bool CheckReport::conclusion(const std::string& k) const {
    for (const auto& [key, v] : conclusions)
        if (key == k) return v;
    return false;
}

void CheckReport::settle() {
    if (conclusions.empty()) {
        status = CheckStatus::vacuous;
        return;
    }
    status = CheckStatus::holds;
    for (const auto& [key, v] : conclusions)
        if (!v) status = CheckStatus::violation;
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [k, v] : hypotheses) h[k] = v;
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [k, v] : conclusions) c[k] = v;
    return {{"schema_version", 1},
            {"name", name},
            {"instance", instance},
            {"hypothesis_flags", h},
            {"conclusion_flags", c},
            {"witnesses", witnesses},
            {"status", to_string(status)}};
}

nlohmann::json instance_json(const Module& M, const SatSet& S) {
    return {{"ring", M.ring()->to_json()},
            {"module", M.to_json()},
            {"S", S.to_json()}};
}

}  // namespace factorlab
