#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilfocus/rational.hpp"

namespace nilfocus {

/// One named exact intermediate inside a certificate.
struct Witness {
    std::string name;
    Rational value;
};

/// A machine-checkable step. Two kinds:
///  - comparison: op in {lt, le, gt, ge, eq} between two operands, each either
///    a witness name or a rational literal;
///  - sum: target witness equals the signed sum of the listed witnesses.
struct Check {
    std::string op;  // "lt","le","gt","ge","eq" or "sum"
    std::string lhs, rhs;                             // comparison operands
    std::string target;                               // sum target
    std::vector<std::pair<int, std::string>> terms;   // sum terms (sign, name)
};

/// Serializable record of one inequality verification. Re-running the check
/// chain against the witness list reproduces the verdict without recomputing
/// any moment.
struct Certificate {
    std::string claim;
    int l = 0, k = 0;
    std::vector<Witness> witness;
    std::vector<Check> checks;
    bool verdict = false;
    std::string status = "ok";  // "ok" | "inconclusive" | "failed"
    double float_hint = 0;

    const Rational* find(const std::string& name) const;
    void add(const std::string& name, const Rational& value);
    void require(const std::string& op, const std::string& lhs, const std::string& rhs);
    void require_sum(const std::string& target, std::vector<std::pair<int, std::string>> terms);

    /// Evaluates every check against the witness list.
    bool reverify() const;
    /// Runs the checks and stores verdict/status.
    void settle();

    nlohmann::json to_json() const;
    static Certificate from_json(const nlohmann::json& j);
};

}  // namespace nilfocus
