#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "factorlab/module.hpp"
#include "factorlab/satset.hpp"

namespace factorlab {

enum class CheckStatus { holds, vacuous, violation };
const char* to_string(CheckStatus s);

/// Outcome of running one theorem/proposition checker on one instance.
/// `violation` means a proven statement failed on a concrete instance — a
/// bug certificate, never an expected result.
struct CheckReport {
    std::string name;
    nlohmann::json instance;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::vector<std::pair<std::string, bool>> conclusions;
    std::vector<nlohmann::json> witnesses;
    CheckStatus status = CheckStatus::vacuous;

    bool hypothesis(const std::string& k) const;
    bool conclusion(const std::string& k) const;

    /// Marks vacuous/holds/violation from the recorded flags: vacuous when
    /// no conclusion was evaluated, violation when any evaluated conclusion
    /// is false.
    void settle();

    nlohmann::json to_json() const;
};

nlohmann::json instance_json(const Module& M, const SatSet& S);

}  // namespace factorlab
