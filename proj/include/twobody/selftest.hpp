#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twobody {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  // fault injection: scales one relative normalization constant by 1.01
  bool corrupt_normalization = false;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const;
};

SelftestReport selftest(const SelftestOptions& opt = {}, std::ostream* log = nullptr);

}  // namespace twobody
