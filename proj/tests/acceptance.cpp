// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bsymb/constacyclic.hpp"
#include "bsymb/fixtures.hpp"
#include "bsymb/geometry.hpp"
#include "bsymb/tables.hpp"
#include "test_util.hpp"

using namespace bsymb;
using bsymb::test::rand_below;

namespace {

std::vector<CodeReport> g_reports;  // audited by the final criterion

const CodeReport& track(CodeReport&& r) {
  g_reports.push_back(std::move(r));
  return g_reports.back();
}

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Ordering ordering_of(const MatGF& m, int b) {
  Ordering o;
  o.field = m.field;
  o.r = m.rows - 1;
  o.b = b;
  o.mode = OrderingMode::projective;
  for (int c = 0; c < m.cols; ++c) o.points.push_back(m.col(c));
  return o;
}

MatGF prefix_cols(const MatGF& m, int n) {
  MatGF out = MatGF::zero(m.field, m.rows, n);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

// --- criterion 1: PG(2,2) reference configurations --------------------------

void criterion1(Check& c) {
  for (int n = 3; n <= 7; ++n) {
    MatGF m = pg22_reference(n);
    c.expect(validate_ordering(ordering_of(m, 2)).ok,
             "PG(2,2) n=" + std::to_string(n) + " fails window validation");
    if (n >= 5) {
      const CodeReport& r = track(mds_check(code_from_parity(m), 2, DistMethod::exhaustive));
      c.expect(r.d_b == 5 && r.is_mds && r.certified,
               "PG(2,2) n=" + std::to_string(n) + " is not a certified MDS (n,5) pair code");
    }
  }
}

// --- criterion 2: PG(3,2) reference configurations --------------------------

void criterion2(Check& c) {
  for (int n : {5, 7, 8, 10, 13}) {
    c.expect(validate_ordering(ordering_of(pg32_reference(n), 3)).ok,
             "PG(3,2) n=" + std::to_string(n) + " fails window validation");
  }
  MatGF full = pg32_reference(15);
  for (int n : {4, 6, 9, 11, 12, 14, 15}) {
    c.expect(validate_ordering(ordering_of(prefix_cols(full, n), 3)).ok,
             "PG(3,2) prefix n=" + std::to_string(n) + " fails window validation");
  }
  for (int n : {7, 8, 10, 13, 15}) {
    MatGF m = (n == 15) ? full : pg32_reference(n);
    const CodeReport& r = track(mds_check(code_from_parity(m), 3, DistMethod::exhaustive));
    c.expect(r.d_b == 7 && r.is_mds && r.certified,
             "PG(3,2) n=" + std::to_string(n) + " is not a certified MDS (n,7) 3-symbol code");
  }
}

// --- criterion 3: constacyclic instances ------------------------------------

void criterion3a(Check& c) {
  Theorem4Result r = build_mds_constacyclic(2, 4);
  c.expect(r.code.n == 31 && r.code.k == 26, "expected a [31,26] code");
  c.expect(r.report.has_value(), "certification did not complete");
  if (r.report) {
    const CodeReport& rep = track(CodeReport(*r.report));
    c.expect(rep.certified, "not certified");
    c.expect(rep.d_hamming == 3, "d_H != 3");
    c.expect(rep.d_b == 9, "d_4 != 9");
    c.expect(r.cert_weight == 5, "certification level is not W = 5");
    c.expect(rep.is_mds && rep.M.str() == "67108864", "M != 2^26 or not MDS");
  }
}

void criterion3b(Check& c) {
  Theorem4Result r = build_mds_constacyclic(2, 5);
  c.expect(r.code.n == 63 && r.code.k == 57, "expected a [63,57] code");
  c.expect(r.report.has_value(), "certification did not complete");
  if (r.report) {
    const CodeReport& rep = track(CodeReport(*r.report));
    c.expect(rep.certified && rep.d_b == 11 && rep.is_mds, "not a certified MDS d_5 = 11 code");
    c.expect(r.cert_weight <= 6, "certification level exceeds W = 6");
  }
}

// --- criterion 4: the lift theorem -------------------------------------------

void criterion4(Check& c) {
  LiftReport t1 = lift_check(code_from_parity(pg22_reference(7)), 2, DistMethod::exhaustive);
  track(CodeReport(t1.base));
  track(CodeReport(t1.lifted));
  c.expect(t1.lift_ok && t1.base.d_b == 5 && t1.lifted.d_b == 6,
           "(7,5) pair code does not lift to an MDS (7,6) 3-symbol code");

  LiftReport t2 = lift_check(code_from_parity(pg32_reference(15)), 3, DistMethod::exhaustive);
  track(CodeReport(t2.base));
  track(CodeReport(t2.lifted));
  c.expect(t2.lift_ok && t2.base.d_b == 7 && t2.lifted.d_b == 8,
           "(15,7) 3-symbol code does not lift to an MDS (15,8) 4-symbol code");
}

// --- criterion 5: metric properties ------------------------------------------

void criterion5(Check& c) {
  std::mt19937_64 gen(2026);
  const uint64_t qs[] = {2, 3, 4, 5};
  std::vector<FieldPtr> fields;
  for (uint64_t q : qs) fields.push_back(Field::of_order(q));

  auto random_vec = [&](const FieldPtr& f, int n) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = static_cast<uint32_t>(rand_below(gen, f->q()));
    return v;
  };

  // D_b(x, y) = wt_b(x - y) = Hamming distance of the read vectors
  for (int t = 0; t < 10000; ++t) {
    const FieldPtr& f = fields[rand_below(gen, 4)];
    int b = 1 + static_cast<int>(rand_below(gen, 6));
    int n = b + static_cast<int>(rand_below(gen, 64 - b + 1));
    auto x = random_vec(f, n), y = random_vec(f, n);
    std::vector<uint32_t> diff(n);
    for (int i = 0; i < n; ++i) diff[i] = f->sub(x[i], y[i]);
    auto rx = read_vector(x, b), ry = read_vector(y, b);
    int rv = 0;
    for (int i = 0; i < n; ++i) rv += rx[i] != ry[i];
    bool ok = dist_b(*f, x, y, b) == wt_b(diff, b) && dist_b(*f, x, y, b) == rv;
    c.expect(ok, "distance/read-vector identity violated");
    if (!ok) return;
  }

  // wt_H + b - 1 <= wt_b <= b wt_H for 0 < wt_H <= n - (b-1)
  for (int t = 0; t < 10000; ++t) {
    const FieldPtr& f = fields[rand_below(gen, 4)];
    int b = 1 + static_cast<int>(rand_below(gen, 6));
    int n = b + 1 + static_cast<int>(rand_below(gen, 64 - b));
    int w = 1 + static_cast<int>(rand_below(gen, n - b + 1));
    std::vector<uint32_t> x(n, 0);
    for (int placed = 0; placed < w;) {
      int pos = static_cast<int>(rand_below(gen, n));
      if (x[pos]) continue;
      x[pos] = 1 + static_cast<uint32_t>(rand_below(gen, f->q() - 1));
      ++placed;
    }
    int wb = wt_b(x, b);
    bool ok = w + b - 1 <= wb && wb <= b * w;
    c.expect(ok, "Hamming-weight sandwich violated");
    if (!ok) return;
  }

  // wt_{b+1} >= wt_b + 1 for nonzero x with wt_b < n
  for (int t = 0; t < 10000; ++t) {
    const FieldPtr& f = fields[rand_below(gen, 4)];
    int b = 1 + static_cast<int>(rand_below(gen, 6));
    int n = b + 1 + static_cast<int>(rand_below(gen, 64 - b));
    auto x = random_vec(f, n);
    int j = static_cast<int>(rand_below(gen, n));
    for (int i = 0; i < b; ++i) x[(j + i) % n] = 0;  // guarantee a zero window
    if (wt_hamming(x) == 0) x[(j + b) % n] = 1;
    int wb = wt_b(x, b);
    bool ok = wb < n && wt_b(x, b + 1) >= wb + 1;
    c.expect(ok, "window-growth inequality violated");
    if (!ok) return;
  }

  // wt_1 = wt_H, exhaustively over GF(2)^n for n <= 12
  FieldPtr f2 = fields[0];
  for (int n = 1; n <= 12; ++n) {
    for (uint64_t enc = 0; enc < (uint64_t(1) << n); ++enc) {
      std::vector<uint32_t> x(n);
      for (int i = 0; i < n; ++i) x[i] = (enc >> i) & 1;
      if (wt_b(x, 1) != wt_hamming(x)) {
        c.expect(false, "wt_1 != wt_H at n=" + std::to_string(n));
        return;
      }
    }
  }
}

// --- criterion 6: ordering constructions at full length ----------------------

void criterion6(Check& c) {
  // deterministic pencil interleaving
  for (auto [q, n] : std::vector<std::pair<uint64_t, int>>{{3, 13}, {4, 21}}) {
    Ordering o = order_pg2(Field::of_order(q), n);
    c.expect(static_cast<int>(o.points.size()) == n && validate_ordering(o).ok,
             "PG(2," + std::to_string(q) + ") ordering of length " + std::to_string(n) +
                 " failed");
  }
  // seeded search, budget 10^6 node expansions, seed 0 throughout
  struct Target {
    int r;
    uint64_t q;
    int n;
  };
  for (auto t : {Target{3, 2, 15}, Target{3, 3, 40}, Target{4, 3, 121}}) {
    Ordering o = greedy_order(t.r, Field::of_order(t.q), t.r, t.n, 0, 1000000);
    c.expect(static_cast<int>(o.points.size()) == t.n && validate_ordering(o).ok,
             "PG(" + std::to_string(t.r) + "," + std::to_string(t.q) + ") search to n=" +
                 std::to_string(t.n) + " failed");
  }
  // guarantee bound at q = b = 5: n = q^b - b q^{b-1} + (b^2+3b)/2 = 20
  uint64_t bound = 3125 - 5 * 625 + (25 + 15) / 2;
  c.expect(bound == 20, "guarantee bound arithmetic");
  Ordering g = greedy_order(5, Field::of_order(5), 5, static_cast<int>(bound), 0, 1000000);
  c.expect(validate_ordering(g).ok, "PG(5,5) search to the guarantee bound failed");
}

// --- criterion 7: d = 2 vector constructions ---------------------------------

bool criterion7_case(Check& c, Ordering o, int expect_db, const std::string& label) {
  if (!validate_ordering(o).ok) {
    c.expect(false, label + ": ordering invalid");
    return false;
  }
  const CodeReport& r =
      track(mds_check(code_from_parity(points_to_parity(o)), o.b, DistMethod::exhaustive));
  c.expect(r.d_b == expect_db && r.is_mds && r.certified, label + ": wrong verdict");
  return c.ok;
}

// --- criterion 8: concatenated sequences --------------------------------------

void criterion8(Check& c) {
  FieldPtr f3 = Field::of_order(3);
  std::vector<Ordering> seqs(2);
  for (int s = 0; s < 2; ++s) {
    seqs[s].field = f3;
    seqs[s].r = 5;
    seqs[s].b = 5;
    seqs[s].mode = OrderingMode::vector_space;
    for (int i = 0; i < 4; ++i) {
      std::vector<uint32_t> e(5, 0);
      e[i] = 1;
      seqs[s].points.push_back(std::move(e));
    }
  }
  seqs[0].points.push_back({0, 0, 0, 0, 1});
  seqs[1].points.push_back({1, 1, 1, 1, 1});
  Ordering cat = concat_orderings(seqs);
  c.expect(cat.points.size() == 10 && validate_ordering(cat).ok, "concatenation invalid");
  const CodeReport& r =
      track(mds_check(code_from_parity(points_to_parity(cat)), 5, DistMethod::exhaustive));
  c.expect(r.d_b == 10 && r.is_mds && r.certified && r.k == 5,
           "concatenation is not a certified MDS (10,10) 5-symbol code");
}

// --- criterion 9: constacyclic root-system invariants -------------------------

void criterion9(Check& c) {
  std::vector<ConstaCode> instances;
  FieldPtr f2 = Field::of_order(2);
  instances.push_back(consta_code(7, 1, poly_make(f2, {1, 1, 0, 1})));
  instances.push_back(build_mds_constacyclic(2, 4).code);
  instances.push_back(build_mds_constacyclic(2, 5).code);
  {
    FieldPtr f3 = Field::of_order(3);
    FieldPtr f9 = Field::make(3, 2);
    SubfieldMap embed(f9, f3);
    uint32_t omega = 0;
    for (uint32_t e = 1; e < 9 && !omega; ++e)
      if (f9->element_order(e) == 8) omega = e;
    instances.push_back(
        consta_code(4, embed.down(f9->pow(omega, 4)), minimal_polynomial(f9, omega, 3)));
  }
  {
    FieldPtr f4 = Field::of_order(4);
    FieldPtr f16 = Field::make(2, 4);
    SubfieldMap embed(f16, f4);
    uint32_t omega = 0;
    for (uint32_t e = 1; e < 16 && !omega; ++e)
      if (f16->element_order(e) == 15) omega = e;
    instances.push_back(
        consta_code(5, embed.down(f16->pow(omega, 5)), minimal_polynomial(f16, omega, 4)));
  }

  for (const ConstaCode& cc : instances) {
    std::string tag = "[" + std::to_string(cc.n) + "," + std::to_string(cc.k) + "]_q" +
                      std::to_string(cc.field->q());
    c.expect(cc.n <= 63 && cc.field->q() <= 4, tag + ": outside the audited range");

    std::vector<uint64_t> z = defining_set(cc);
    c.expect(static_cast<int>(z.size()) == cc.n - cc.k, tag + ": dim != n - |Z|");

    RootData rd = consta_roots(cc);
    Poly prod{rd.ext, {1}};
    for (int i = 0; i < cc.n; ++i) {
      uint64_t j = 1 + static_cast<uint64_t>(i) * rd.r;
      uint32_t root = rd.ext->pow(rd.omega, static_cast<int64_t>(j));
      prod = poly_mul(prod, Poly{rd.ext, {rd.ext->neg(root), 1}});
    }
    Poly expect{rd.ext, std::vector<uint32_t>(cc.n + 1, 0)};
    expect.c[0] = rd.ext->neg(rd.embed.up(cc.eta));
    expect.c[cc.n] = 1;
    c.expect(prod == expect, tag + ": product of the roots is not x^n - eta");

    for (int i = 0; i < cc.gen_shifts.rows; ++i) {
      auto shifted = constashift(*cc.field, cc.gen_shifts.row(i), cc.eta);
      auto syn = syndrome(cc.code, shifted);
      bool zero = std::all_of(syn.begin(), syn.end(), [](uint32_t v) { return v == 0; });
      c.expect(zero, tag + ": generator row not shift invariant");
    }

    EnumOptions opts;
    opts.w_cap = cc.n;
    CodeReport hr = min_bdist_certified(cc.code, 1, opts);
    c.expect(hr.certified && hr.d_hamming.has_value(), tag + ": d_H not certified");
    c.expect(bch_lower_bound(z, rd.r, cc.n) <= *hr.d_hamming, tag + ": BCH bound exceeds d_H");
    track(std::move(hr));
  }
}

// --- criterion 10: global bound audit -----------------------------------------

void criterion10(Check& c) {
  c.expect(!g_reports.empty(), "no reports were collected");
  for (const CodeReport& r : g_reports) {
    c.expect(r.M <= r.singleton_M, "a report violates the Singleton bound");
    c.expect((r.M == r.singleton_M) == r.is_mds, "an MDS flag disagrees with the bound");
  }
  c.expect(!feasible_2b1(16, 3, 2), "(16,3,2) should be infeasible");
  c.expect(feasible_2b1(15, 3, 2), "(15,3,2) should be feasible");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string label;
    double limit_s;  // 0 = no stated limit
    std::function<void(Check&)> fn;
  };

  std::vector<Entry> entries = {
      {1, "PG(2,2) table: validation + MDS (n,5) pair codes", 1.0, criterion1},
      {2, "PG(3,2) table: validation + MDS (n,7) 3-symbol codes", 1.0, criterion2},
      {3, "constacyclic [31,26]: certified d_H = 3, d_4 = 9, MDS", 10.0, criterion3a},
      {3, "constacyclic [63,57]: certified d_5 = 11, MDS", 60.0, criterion3b},
      {4, "lift: (7,5)->(7,6) and (15,7)->(15,8)", 1.0, criterion4},
      {5, "metric properties, 10^4 cases each, exhaustive wt_1 = wt_H", 0.0, criterion5},
      {6, "full-length orderings: PG(2,3/4), PG(3,2/3), PG(4,3), bound case", 0.0, criterion6},
      {7, "d=2 families: vectors(3,2,12), vectors(4,2,16), tiling(5,2,15)", 3.0,
       [](Check& c) {
         criterion7_case(c, greedy_vectors(3, Field::of_order(2), 12, 0, 1000000), 6,
                         "vectors(3,2,12)");
         criterion7_case(c, greedy_vectors(4, Field::of_order(2), 16, 0, 1000000), 8,
                         "vectors(4,2,16)");
         criterion7_case(c, tile_basis(5, Field::of_order(2), 15), 10, "tiling(5,2,15)");
       }},
      {8, "concatenation in V(5,3): MDS (10,10) 5-symbol", 1.0, criterion8},
      {9, "constacyclic invariants, q <= 4, n <= 63", 0.0, criterion9},
      {10, "global Singleton audit + feasibility window", 0.0, criterion10},
  };

  int failures = 0;
  for (auto& e : entries) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      e.fn(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_s > 0 && secs >= e.limit_s)
      c.expect(false, "runtime " + std::to_string(secs) + " s exceeds " +
                          std::to_string(e.limit_s) + " s");
    if (!c.ok) ++failures;
    std::printf("%s  criterion %2d: %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", e.id,
                e.label.c_str(), secs, c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
  }

  std::printf("%d/%zu criteria passed; %zu code reports audited\n", int(entries.size()) - failures,
              entries.size(), g_reports.size());
  return failures == 0 ? 0 : 1;
}
