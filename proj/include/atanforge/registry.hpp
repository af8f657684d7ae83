#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "atanforge/report.hpp"

namespace atanforge {

using ParamMap = std::map<std::string, std::string>;

struct ParamSpec {
    std::string name;
    enum Kind { Int, Real, Choice } kind = Real;
    std::string desc;
};

struct IdentityInfo {
    std::string id;
    std::string paper_anchor;
    std::vector<ParamSpec> params;
    std::function<IdentityReport(const ParamMap&, const PrecisionContext&)> eval;
};

const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo* find_identity(const std::string& id);

/// Parses a decimal string, optionally of the shape [coef]pi[/den],
/// [coef]e[/den], num/den or sqrt(x); anything else must be a plain decimal.
Scalar parse_scalar(const std::string& text);

long parse_int(const std::string& text);

}  // namespace atanforge
