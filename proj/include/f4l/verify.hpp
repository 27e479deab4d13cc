#pragma once

#include <string>

#include "f4l/poly.hpp"

namespace f4l {

struct VerifyResult {
  Json report;
  bool hard_fail = false;
};

/// Run every table-matching and consistency check and assemble the findings
/// report. Documented discrepancies (the twisted E6 leading coefficient)
/// are report content, not failures.
VerifyResult run_verify();

std::string verify_text(const Json& report);

}  // namespace f4l
