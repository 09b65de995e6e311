#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vclab/set_system.hpp"

namespace vclab {

enum class CaseStatus { pass, fail, skipped };

struct VerificationCase {
    std::string name;
    std::string description;
    std::string expected;
    std::string observed;
    CaseStatus status = CaseStatus::fail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
};

std::vector<std::string> suite_names();

/// Runs a named suite; unknown names raise ParseError.
std::vector<VerificationCase> run_suite(const std::string& name, const VerifyOptions& options = {});

std::string to_string(CaseStatus status);

}  // namespace vclab
