#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wd {

enum class Status { pass, fail, excluded };

struct CriterionResult {
    int id = 0;
    std::string title;
    Status status = Status::fail;
    std::string summary;  // one line
    nlohmann::json detail;
    double seconds = 0;
};

struct VerifyConfig {
    std::uint64_t seed = 2024;
    std::string sl4_dir;  // optional directory of SL_4 web files (one per orbit)
};

// "all", "1".."10", or a named suite such as "duality-3-3".
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<CriterionResult> run_suite(const std::string& name, const VerifyConfig& cfg);

const char* status_str(Status s);
bool all_passed(const std::vector<CriterionResult>& rs);  // excluded entries do not fail
nlohmann::json report_json(const std::vector<CriterionResult>& rs, const VerifyConfig& cfg);
std::string report_table(const std::vector<CriterionResult>& rs);

}  // namespace wd
