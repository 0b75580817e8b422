#include "bsymb/fixtures.hpp"

#include "bsymb/geometry.hpp"
#include "bsymb/tables.hpp"

namespace bsymb {

namespace {

MatGF prefix_cols(const MatGF& m, int n) {
  MatGF out = MatGF::zero(m.field, m.rows, n);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

Fixture make_fixture(std::string name, MatGF matrix, int b) {
  Fixture f;
  f.name = std::move(name);
  f.b = b;
  int n = matrix.cols;
  f.matrix = std::move(matrix);
  if (n >= 2 * b + 1) {
    f.expect_d_b = 2 * b + 1;
    f.expect_mds = true;
  }
  return f;
}

}  // namespace

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;
  for (int n = 3; n <= 7; ++n)
    out.push_back(make_fixture("table1-n" + std::to_string(n), pg22_reference(n), 2));
  MatGF full = pg32_reference(15);
  for (int n = 4; n <= 15; ++n) {
    bool explicit_matrix = n == 5 || n == 7 || n == 8 || n == 10 || n == 13 || n == 15;
    MatGF m = explicit_matrix ? pg32_reference(n) : prefix_cols(full, n);
    out.push_back(make_fixture("table2-n" + std::to_string(n), std::move(m), 3));
  }
  return out;
}

FixtureOutcome run_fixture(const Fixture& f) {
  FixtureOutcome out;
  out.name = f.name;

  Ordering o;
  o.field = f.matrix.field;
  o.r = f.matrix.rows - 1;
  o.b = f.b;
  o.mode = OrderingMode::projective;
  for (int c = 0; c < f.matrix.cols; ++c) o.points.push_back(f.matrix.col(c));

  ValidationReport rep = validate_ordering(o);
  out.validates = rep.ok;
  if (rep.ok != f.expect_validates) {
    out.detail = "validation mismatch";
    return out;
  }

  if (f.expect_d_b) {
    LinearCode code = code_from_parity(f.matrix);
    CodeReport cr = mds_check(code, f.b, DistMethod::exhaustive);
    bool ok = cr.d_b == *f.expect_d_b && cr.is_mds == f.expect_mds && cr.certified;
    out.report = std::move(cr);
    if (!ok) {
      out.detail = "distance or MDS verdict mismatch";
      return out;
    }
  }
  out.pass = true;
  return out;
}

}  // namespace bsymb
