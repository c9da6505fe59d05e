#pragma once

#include <string>

#include "latmin/realization.hpp"
#include "latmin/report.hpp"

namespace latmin {

/// Targets: "paper-9d5", "paper-10d5", "all". Throws InvalidArgument otherwise.
VerifyDoc verify_target(const std::string& target, const RealizationOptions& opt = {});

}  // namespace latmin
