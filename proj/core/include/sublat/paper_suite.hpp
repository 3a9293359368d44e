#pragma once

#include <functional>
#include <string>
#include <vector>

namespace sublat {

/// One reproducible claim.  run() throws (any sublat::Error) on failure; the
/// message becomes the failure detail.
struct SuiteItem {
  int criterion = 0;  // acceptance criterion 1..8 the item belongs to
  std::string id;
  std::function<std::string()> run;  // returns a short success note
};

struct SuiteItemResult {
  int criterion = 0;
  std::string id;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

const std::vector<SuiteItem>& paper_suite_items();

std::vector<SuiteItemResult> run_paper_suite();

}  // namespace sublat
