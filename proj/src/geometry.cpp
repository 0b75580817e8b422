#include "bsymb/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "bsymb/numtheory.hpp"
#include "bsymb/tables.hpp"

namespace bsymb {

std::vector<uint32_t> normalize_point(const Field& f, std::vector<uint32_t> v) {
  for (uint32_t c : v) {
    if (c == 0) continue;
    if (c != 1) {
      uint32_t inv = f.inv(c);
      for (auto& x : v) x = f.mul(x, inv);
    }
    return v;
  }
  fail(Errc::bad_params, "cannot normalize the zero vector");
}

std::vector<std::vector<uint32_t>> pg_points(int r, const FieldPtr& f) {
  if (r < 1) fail(Errc::bad_params, "projective dimension must be >= 1");
  uint64_t q = f->q();
  uint64_t count = pg_count_sat(q, static_cast<uint32_t>(r), uint64_t(1) << 32);
  if (count >= (uint64_t(1) << 32)) fail(Errc::bad_params, "point set too large");
  std::vector<std::vector<uint32_t>> pts;
  pts.reserve(count);
  // lexicographic coordinate order: the all-zero prefix shrinks as we go
  for (int lead = r; lead >= 0; --lead) {
    int tail = r - lead;
    uint64_t combos = 1;
    for (int i = 0; i < tail; ++i) combos *= q;
    for (uint64_t t = 0; t < combos; ++t) {
      std::vector<uint32_t> v(r + 1, 0);
      v[lead] = 1;
      uint64_t rem = t;
      for (int i = r; i > lead; --i) {  // later coordinates are less significant
        v[i] = static_cast<uint32_t>(rem % q);
        rem /= q;
      }
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

HyperplaneCover hyperplane_cover(int r, const FieldPtr& f,
                                 const std::vector<std::vector<uint32_t>>* axis) {
  if (r < 2) fail(Errc::bad_params, "hyperplane covers need r >= 2");
  uint64_t q = f->q();

  std::vector<std::vector<uint32_t>> ax;
  if (axis) {
    ax = *axis;
    if (static_cast<int>(ax.size()) != r - 1) fail(Errc::bad_axis, "axis must have r-1 basis vectors");
    Echelon e(f, r + 1);
    for (const auto& v : ax) {
      if (static_cast<int>(v.size()) != r + 1) fail(Errc::bad_axis, "axis vector length must be r+1");
      if (!e.insert(v)) fail(Errc::bad_axis, "axis basis is not independent");
    }
  } else {
    for (int i = 2; i <= r; ++i) {
      std::vector<uint32_t> v(r + 1, 0);
      v[i] = 1;
      ax.push_back(std::move(v));
    }
  }

  // functionals vanishing on the axis: a 2-dimensional space
  MatGF m = MatGF::zero(f, r - 1, r + 1);
  for (int i = 0; i < r - 1; ++i)
    for (int j = 0; j <= r; ++j) m.at(i, j) = ax[i][j];
  MatGF fs = nullspace(m);
  if (fs.rows != 2) fail(Errc::internal, "functional space has wrong dimension");

  HyperplaneCover out;
  out.axis = std::move(ax);
  const Field& ff = *f;
  auto pencil_member = [&](uint32_t lam, uint32_t mu) {
    std::vector<uint32_t> g(r + 1);
    for (int j = 0; j <= r; ++j) g[j] = ff.add(ff.mul(lam, fs.at(0, j)), ff.mul(mu, fs.at(1, j)));
    return normalize_point(ff, std::move(g));
  };
  out.functionals.push_back(pencil_member(0, 1));
  for (uint32_t mu = 0; mu < q; ++mu) out.functionals.push_back(pencil_member(1, mu));
  return out;
}

namespace {

bool window_independent(const Ordering& o, int start) {
  int n = static_cast<int>(o.points.size());
  int w = o.window();
  Echelon e(o.field, o.dim());
  for (int t = 0; t < w; ++t)
    if (!e.insert(o.points[(start + t) % n])) return false;
  return true;
}

}  // namespace

ValidationReport validate_ordering(const Ordering& o) {
  int n = static_cast<int>(o.points.size());
  int w = o.window();
  if (n < w) fail(Errc::bad_params, "ordering shorter than the window size");
  for (const auto& p : o.points)
    if (static_cast<int>(p.size()) != o.dim())
      fail(Errc::dimension_mismatch, "point coordinate length mismatch");

  ValidationReport rep;
  rep.first_bad_window = -1;
  bool windows_ok = true;
  for (int s = 0; s < n; ++s) {
    if (!window_independent(o, s)) {
      rep.first_bad_window = s;
      windows_ok = false;
      break;
    }
  }

  std::vector<std::vector<uint32_t>> norm(n);
  for (int i = 0; i < n; ++i) norm[i] = normalize_point(*o.field, o.points[i]);

  bool distinct_ok = true;
  if (o.mode == OrderingMode::projective) {
    std::map<std::vector<uint32_t>, int> seen;
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = seen.emplace(norm[i], i);
      if (!fresh) {
        rep.duplicate = {it->second, i};
        distinct_ok = false;
        break;
      }
    }
  }

  if (o.mode == OrderingMode::vector_space) {
    // two dependent vectors = a repeated projective point
    std::map<std::vector<uint32_t>, int> seen;
    for (int i = 0; i < n && !rep.has_dependent_pair_or_triple; ++i)
      rep.has_dependent_pair_or_triple = !seen.emplace(norm[i], i).second;
  } else {
    for (int i = 0; i < n && !rep.has_dependent_pair_or_triple; ++i)
      for (int j = i + 1; j < n && !rep.has_dependent_pair_or_triple; ++j) {
        Echelon e(o.field, o.dim());
        e.insert(o.points[i]);
        e.insert(o.points[j]);
        for (int t = j + 1; t < n; ++t)
          if (e.contains(o.points[t])) {
            rep.has_dependent_pair_or_triple = true;
            break;
          }
      }
  }

  rep.ok = windows_ok && distinct_ok;
  return rep;
}

MatGF points_to_parity(const Ordering& o) {
  int n = static_cast<int>(o.points.size());
  MatGF m = MatGF::zero(o.field, o.dim(), n);
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(o.points[c].size()) != o.dim())
      fail(Errc::dimension_mismatch, "point coordinate length mismatch");
    for (int r = 0; r < o.dim(); ++r) m.at(r, c) = o.points[c][r];
  }
  return m;
}

// ---------------------------------------------------------------------------
// PG(2, q) deterministic interleaving

namespace {

Ordering ordering_from_matrix(const MatGF& m, int r, int b, OrderingMode mode) {
  Ordering o;
  o.field = m.field;
  o.r = r;
  o.b = b;
  o.mode = mode;
  for (int c = 0; c < m.cols; ++c) o.points.push_back(m.col(c));
  return o;
}

struct Pg2Builder {
  const FieldPtr& f;
  int n;
  std::vector<std::vector<uint32_t>> pts;
  std::vector<std::vector<int>> lines;  // point indices per pencil line, center excluded
  std::vector<char> used;
  std::vector<int> seq;

  explicit Pg2Builder(const FieldPtr& fld, int nn) : f(fld), n(nn) {}

  bool collinear(int a, int b, int c) const {
    Echelon e(f, 3);
    e.insert(pts[a]);
    e.insert(pts[b]);
    return e.contains(pts[c]);
  }

  bool done() const { return static_cast<int>(seq.size()) >= n; }

  bool can_push(int cand) const {
    size_t len = seq.size();
    if (len < 2) return true;
    return !collinear(seq[len - 2], seq[len - 1], cand);
  }

  // smallest unused valid point on the line, with an optional extra filter
  template <typename Extra>
  void push_from(int line, Extra&& extra) {
    for (int cand : lines[line]) {
      if (used[cand] || !can_push(cand) || !extra(cand)) continue;
      seq.push_back(cand);
      used[cand] = 1;
      return;
    }
    fail(Errc::internal, "pencil interleaving ran out of candidates");
  }
  void push_from(int line) {
    push_from(line, [](int) { return true; });
  }

  void push_exact(int cand) {
    if (used[cand] || !can_push(cand)) fail(Errc::internal, "forced point is not placeable");
    seq.push_back(cand);
    used[cand] = 1;
  }

  int last_unused(int line) const {
    for (int cand : lines[line])
      if (!used[cand]) return cand;
    fail(Errc::internal, "line exhausted");
  }

  bool line_has_unused(int line) const {
    for (int cand : lines[line])
      if (!used[cand]) return true;
    return false;
  }

  void pair_phase(int a, int b) {
    for (int j = 0; j < static_cast<int>(f->q()) && !done(); ++j) {
      push_from(a);
      if (done()) return;
      push_from(b);
    }
  }

  // Wrap-around repair: re-place the last `tail` positions by backtracking.
  bool repair_tail(int tail) {
    std::vector<int> removed(seq.end() - tail, seq.end());
    for (int idx : removed) used[idx] = 0;
    seq.resize(seq.size() - tail);
    if (dfs_tail(tail)) return true;
    for (int idx : removed) {  // restore
      seq.push_back(idx);
      used[idx] = 1;
    }
    return false;
  }

  bool dfs_tail(int remaining) {
    if (remaining == 0)
      return !collinear(seq[n - 2], seq[n - 1], seq[0]) &&
             !collinear(seq[n - 1], seq[0], seq[1]);
    for (int cand = 0; cand < static_cast<int>(pts.size()); ++cand) {
      if (used[cand] || !can_push(cand)) continue;
      seq.push_back(cand);
      used[cand] = 1;
      if (dfs_tail(remaining - 1)) return true;
      seq.pop_back();
      used[cand] = 0;
    }
    return false;
  }

  Ordering build() {
    uint64_t q = f->q();
    pts = pg_points(2, f);
    used.assign(pts.size(), 0);

    const int center = 0;  // (0,0,1), the lexicographically first point
    std::vector<std::vector<uint32_t>> axis{pts[center]};
    HyperplaneCover cover = hyperplane_cover(2, f, &axis);
    lines.assign(cover.functionals.size(), {});
    const Field& ff = *f;
    for (size_t li = 0; li < cover.functionals.size(); ++li) {
      for (size_t pi = 0; pi < pts.size(); ++pi) {
        if (static_cast<int>(pi) == center) continue;
        uint32_t dot = 0;
        for (int j = 0; j < 3; ++j) dot = ff.add(dot, ff.mul(cover.functionals[li][j], pts[pi][j]));
        if (dot == 0) lines[li].push_back(static_cast<int>(pi));
      }
    }

    seq.push_back(center);
    used[center] = 1;

    if (q % 2 == 1) {
      for (size_t li = 0; li + 1 < lines.size() && !done(); li += 2) pair_phase(li, li + 1);
    } else if (n <= static_cast<int>(q * q) + 1) {
      for (size_t li = 0; li + 1 < lines.size() - 1 && !done(); li += 2) pair_phase(li, li + 1);
    } else {
      // rotate three lines until one point is left on each
      for (uint64_t j = 0; j + 1 < q && !done(); ++j)
        for (int li = 0; li < 3 && !done(); ++li) push_from(li);
      if (!done()) {
        // splice the three leftovers into the start of the next line pair
        int a_last = last_unused(0);
        push_from(1);
        if (!done()) push_from(2);
        if (!done()) {
          int c_last = seq.back();
          push_from(3, [&](int cand) { return !collinear(a_last, c_last, cand); });
        }
        if (!done()) push_exact(a_last);
        if (!done()) push_from(4);
        if (!done()) push_from(3);
        while (!done() && (line_has_unused(4) || line_has_unused(3))) {
          if (line_has_unused(4)) {
            push_from(4);
            if (done()) break;
          }
          if (line_has_unused(3)) push_from(3);
        }
        for (size_t li = 5; li + 1 < lines.size() && !done(); li += 2) pair_phase(li, li + 1);
      }
    }

    if (!done()) fail(Errc::internal, "interleaving covered too few points");

    Ordering o;
    o.field = f;
    o.r = 2;
    o.b = 2;
    o.mode = OrderingMode::projective;
    for (int idx : seq) o.points.push_back(pts[idx]);

    ValidationReport rep = validate_ordering(o);
    for (int tail = 1; tail <= std::min(6, n - 2) && !rep.ok; ++tail) {
      if (repair_tail(tail)) {
        o.points.clear();
        for (int idx : seq) o.points.push_back(pts[idx]);
        rep = validate_ordering(o);
      }
    }
    if (!rep.ok) fail(Errc::internal, "PG(2,q) ordering failed validation");
    return o;
  }
};

}  // namespace

Ordering order_pg2(const FieldPtr& f, int n) {
  uint64_t q = f->q();
  if (q == 2) {
    if (n < 3 || n > 7) fail(Errc::bad_params, "q = 2 orderings exist for 3 <= n <= 7");
    Ordering o = ordering_from_matrix(pg22_reference(n), 2, 2, OrderingMode::projective);
    o.field = f;
    return o;
  }
  if (n < 3 || static_cast<uint64_t>(n) > q * q + q + 1)
    fail(Errc::bad_params, "need 3 <= n <= q^2+q+1");
  Pg2Builder builder(f, n);
  return builder.build();
}

// ---------------------------------------------------------------------------
// Generic ordering search

namespace {

uint64_t rand_below(std::mt19937_64& gen, uint64_t bound) {
  uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = gen();
  } while (x >= lim);
  return x % bound;
}

// Fisher-Yates with an explicit generator so results are identical across
// platforms.
template <typename T>
void seeded_shuffle(std::vector<T>& v, uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rand_below(gen, i)]);
}

struct OrderSearch {
  FieldPtr f;
  std::vector<std::vector<uint32_t>> cands;
  int dim, wsize, n;
  bool unique_pts;
  uint64_t budget;
  uint64_t tested = 0;
  std::vector<int> chosen;
  std::vector<char> used;

  bool wrap_ok() const {
    for (int s = n - wsize + 1; s < n; ++s) {
      Echelon e(f, dim);
      bool ok = true;
      for (int t = 0; t < wsize && ok; ++t) ok = e.insert(cands[chosen[(s + t) % n]]);
      if (!ok) return false;
    }
    return true;
  }

  bool dfs() {
    int len = static_cast<int>(chosen.size());
    if (len == n) return wrap_ok();
    Echelon span(f, dim);
    int w = std::min(len, wsize - 1);
    for (int i = len - w; i < len; ++i) span.insert(cands[chosen[i]]);
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      if (unique_pts && used[ci]) continue;
      if (++tested > budget)
        fail(Errc::budget_exhausted, "search budget exhausted (not a disproof)");
      if (span.contains(cands[ci])) continue;
      chosen.push_back(static_cast<int>(ci));
      if (unique_pts) used[ci] = 1;
      if (dfs()) return true;
      chosen.pop_back();
      if (unique_pts) used[ci] = 0;
    }
    return false;
  }
};

}  // namespace

Ordering greedy_order(int r, const FieldPtr& f, int b, int n, uint64_t seed, uint64_t budget) {
  if (r != b) fail(Errc::bad_params, "the point search runs in PG(b, q), so r must equal b");
  if (b < 1) fail(Errc::bad_params, "b must be >= 1");
  uint64_t max_n = pg_count_sat(f->q(), static_cast<uint32_t>(r), uint64_t(1) << 32);
  if (n < b + 1 || static_cast<uint64_t>(n) > max_n)
    fail(Errc::bad_params, "need b+1 <= n <= (q^{r+1}-1)/(q-1)");

  OrderSearch s{f, pg_points(r, f), r + 1, b + 1, n, true, budget, 0, {}, {}};
  seeded_shuffle(s.cands, seed);
  s.used.assign(s.cands.size(), 0);
  if (!s.dfs()) fail(Errc::budget_exhausted, "no ordering found within budget (not a disproof)");

  Ordering o;
  o.field = f;
  o.r = r;
  o.b = b;
  o.mode = OrderingMode::projective;
  for (int ci : s.chosen) o.points.push_back(s.cands[ci]);
  if (!validate_ordering(o).ok) fail(Errc::internal, "search produced an invalid ordering");
  return o;
}

Ordering greedy_vectors(int b, const FieldPtr& f, int n, uint64_t seed, uint64_t budget) {
  if (b < 1) fail(Errc::bad_params, "b must be >= 1");
  if (n < 2 * b) fail(Errc::bad_params, "vector orderings need n >= 2b");

  uint64_t q = f->q();
  uint64_t count = pow_sat_u64(q, static_cast<uint32_t>(b), uint64_t(1) << 32) - 1;
  if (count >= (uint64_t(1) << 32) - 1) fail(Errc::bad_params, "vector space too large");
  std::vector<std::vector<uint32_t>> vecs;
  vecs.reserve(count);
  for (uint64_t v = 1; v <= count; ++v) {
    std::vector<uint32_t> vec(b);
    uint64_t rem = v;
    for (int i = 0; i < b; ++i) {
      vec[i] = static_cast<uint32_t>(rem % q);
      rem /= q;
    }
    vecs.push_back(std::move(vec));
  }

  OrderSearch s{f, std::move(vecs), b, b, n, false, budget, 0, {}, {}};
  seeded_shuffle(s.cands, seed);
  if (!s.dfs()) fail(Errc::budget_exhausted, "no ordering found within budget (not a disproof)");

  Ordering o;
  o.field = f;
  o.r = b;
  o.b = b;
  o.mode = OrderingMode::vector_space;
  for (int ci : s.chosen) o.points.push_back(s.cands[ci]);
  if (!validate_ordering(o).ok) fail(Errc::internal, "search produced an invalid ordering");
  return o;
}

Ordering tile_basis(int b, const FieldPtr& f, int n) {
  if (b < 1) fail(Errc::bad_params, "b must be >= 1");
  if (n < 2 * b || n % b != 0) fail(Errc::bad_params, "tiling needs b | n and n >= 2b");
  Ordering o;
  o.field = f;
  o.r = b;
  o.b = b;
  o.mode = OrderingMode::vector_space;
  for (int i = 0; i < n; ++i) {
    std::vector<uint32_t> e(b, 0);
    e[i % b] = 1;
    o.points.push_back(std::move(e));
  }
  if (!validate_ordering(o).ok) fail(Errc::internal, "basis tiling failed validation");
  return o;
}

Ordering concat_orderings(const std::vector<Ordering>& seqs) {
  if (seqs.size() < 2) fail(Errc::bad_params, "concatenation needs at least two sequences");
  const Ordering& first = seqs.front();
  for (const auto& s : seqs) {
    if (!s.field->same_as(*first.field) || s.r != first.r || s.b != first.b ||
        s.mode != first.mode)
      fail(Errc::bad_params, "sequences must share field, dimensions and mode");
    if (!validate_ordering(s).ok) fail(Errc::bad_params, "input sequence is not a valid ordering");
  }

  const Field& f = *first.field;
  int shared = first.b - 1;
  for (const auto& s : seqs) {
    if (static_cast<int>(s.points.size()) < shared)
      fail(Errc::seam_violation, "sequence shorter than the shared prefix");
    for (int i = 0; i < shared; ++i) {
      bool same = first.mode == OrderingMode::projective
                      ? normalize_point(f, s.points[i]) == normalize_point(f, first.points[i])
                      : s.points[i] == first.points[i];
      if (!same) fail(Errc::seam_violation, "sequences do not share their first b-1 entries");
    }
  }

  Ordering out;
  out.field = first.field;
  out.r = first.r;
  out.b = first.b;
  out.mode = first.mode;
  for (const auto& s : seqs)
    out.points.insert(out.points.end(), s.points.begin(), s.points.end());

  ValidationReport rep = validate_ordering(out);
  if (!rep.ok)
    fail(Errc::seam_violation,
         "concatenation violates a window at position " + std::to_string(rep.first_bad_window));
  return out;
}

}  // namespace bsymb
