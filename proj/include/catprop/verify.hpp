#pragma once

#include <string>
#include <vector>

#include "catprop/io.hpp"

namespace catprop {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Golden checks of the reference tables, sequent lists, failure models and
/// squares. Failures are reported as entries, never thrown.
std::vector<CheckResult> verify_paper();

json to_json(const std::vector<CheckResult>& results);

}  // namespace catprop
