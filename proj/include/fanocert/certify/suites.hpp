#pragma once

#include <string>
#include <vector>

#include "fanocert/certify/report.hpp"

namespace fanocert::certify {

const std::vector<std::string>& suite_names();

/// schubert, toric, veronese, hodge, numerology or all.
Report run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace fanocert::certify
