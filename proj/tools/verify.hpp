#pragma once

// Pinned reference values and structural identities checked by `verify-paper`.

#include <string>
#include <vector>

#include "fqdigits/classnum.hpp"

namespace fqd::cli {

struct Check {
  std::string group;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<std::string> groups;

  bool passed() const;
  /// First failing check, or nullptr.
  const Check* first_failure() const;
};

/// Runs every check. `conv` is exposed so tests can corrupt the digit
/// conventions and watch the harness fail.
VerifyReport verify_paper(DigitConventions conv = {});

/// One line per check, then a summary line; failures carry expected/actual.
std::string render_text(const VerifyReport& rep);

}  // namespace fqd::cli
