#pragma once

// The full self-check battery: every computed object is compared against the
// built-in reference tables, and the cross-route identities (two
// decomposition routes, four dimension computations) are exercised.

#include <string>
#include <vector>

#include "reflect96/context.hpp"

namespace reflect96 {

struct CheckItem {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  std::vector<std::string> notes;  // reading notes on the reference text
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

CheckReport run_all_checks(const Context& ctx);
std::string report_json(const CheckReport& r);

}  // namespace reflect96
