#pragma once

#include <optional>
#include <string>

#include "bsymb/bmetric.hpp"

namespace bsymb {

/// One embedded reference configuration with its expected verdicts. Entries
/// shorter than 2b+1 are validation-only.
struct Fixture {
  std::string name;  // table1-n3 .. table1-n7, table2-n4 .. table2-n15
  MatGF matrix;      // columns are the ordered points
  int b = 0;
  bool expect_validates = true;
  std::optional<int> expect_d_b;  // set for n >= 2b+1, together with MDS
  bool expect_mds = false;
};

/// All built-in fixtures: the PG(2,2) configurations for n in 3..7 (b = 2)
/// and the PG(3,2) configurations for n in 4..15 (explicit matrices for
/// n in {5,7,8,10,13,15}, prefixes of the 15-column matrix for
/// n in {4,6,9,11,12,14}; b = 3).
std::vector<Fixture> builtin_fixtures();

struct FixtureOutcome {
  std::string name;
  bool pass = false;
  bool validates = false;
  std::optional<CodeReport> report;
  std::string detail;
};

FixtureOutcome run_fixture(const Fixture& f);

}  // namespace bsymb
