#include "bsymb/linalg.hpp"

#include <algorithm>

namespace bsymb {

MatGF MatGF::identity(FieldPtr f, int n) {
  MatGF m = zero(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<uint32_t> MatGF::col(int c) const {
  std::vector<uint32_t> v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

std::vector<uint32_t> Echelon::reduce(std::span<const uint32_t> v) const {
  std::vector<uint32_t> w(v.begin(), v.end());
  const Field& f = *f_;
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t c = w[leads_[i]];
    if (!c) continue;
    const auto& r = rows_[i];
    for (int j = leads_[i]; j < dim_; ++j) w[j] = f.sub(w[j], f.mul(c, r[j]));
  }
  return w;
}

bool Echelon::insert(std::span<const uint32_t> v) {
  if (static_cast<int>(v.size()) != dim_) fail(Errc::dimension_mismatch, "vector length mismatch");
  std::vector<uint32_t> w = reduce(v);
  int lead = -1;
  for (int j = 0; j < dim_; ++j)
    if (w[j]) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  const Field& f = *f_;
  uint32_t inv = f.inv(w[lead]);
  for (int j = lead; j < dim_; ++j) w[j] = f.mul(w[j], inv);
  auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead);
  size_t idx = static_cast<size_t>(pos - leads_.begin());
  leads_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

bool Echelon::contains(std::span<const uint32_t> v) const {
  if (static_cast<int>(v.size()) != dim_) fail(Errc::dimension_mismatch, "vector length mismatch");
  std::vector<uint32_t> w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

MatGF rref(MatGF m, std::vector<int>* pivots) {
  const Field& f = *m.field;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    uint32_t inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint32_t s = m.at(i, c);
      if (!s) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(s, m.at(r, j)));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

int rank(const MatGF& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

bool cols_independent(const MatGF& m, std::span<const int> idx) {
  std::vector<int> seen(idx.begin(), idx.end());
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] < 0 || seen[i] >= m.cols) fail(Errc::index_out_of_range, "column index out of range");
    if (i && seen[i] == seen[i - 1]) fail(Errc::duplicate_index, "duplicate column index");
  }
  Echelon e(m.field, m.rows);
  for (int c : idx)
    if (!e.insert(m.col(c))) return false;
  return true;
}

bool in_span(const FieldPtr& f, const std::vector<std::vector<uint32_t>>& basis,
             std::span<const uint32_t> v) {
  Echelon e(f, static_cast<int>(v.size()));
  for (const auto& b : basis) e.insert(b);
  return e.contains(v);
}

MatGF nullspace(const MatGF& m) {
  const Field& f = *m.field;
  std::vector<int> pivots;
  MatGF r = rref(m, &pivots);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  MatGF basis = MatGF::zero(m.field, static_cast<int>(free_cols.size()), m.cols);
  for (size_t bi = 0; bi < free_cols.size(); ++bi) {
    int fc = free_cols[bi];
    basis.at(static_cast<int>(bi), fc) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(static_cast<int>(bi), pivots[pi]) = f.neg(r.at(static_cast<int>(pi), fc));
  }
  return basis;
}

namespace {

MatGF nonzero_rows(const MatGF& r, int count) {
  MatGF out = MatGF::zero(r.field, count, r.cols);
  std::copy_n(r.a.begin(), static_cast<size_t>(count) * r.cols, out.a.begin());
  return out;
}

void verify_code(const LinearCode& c) {
  const Field& f = *c.field;
  for (int i = 0; i < c.G.rows; ++i)
    for (int j = 0; j < c.H.rows; ++j) {
      uint32_t dot = 0;
      for (int t = 0; t < c.n; ++t) dot = f.add(dot, f.mul(c.G.at(i, t), c.H.at(j, t)));
      if (dot) fail(Errc::internal, "G H^T != 0");
    }
  if (rank(c.G) != c.k || rank(c.H) != c.n - c.k)
    fail(Errc::internal, "code rank invariant violated");
}

}  // namespace

LinearCode code_from_parity(MatGF h) {
  std::vector<int> pivots;
  MatGF r = rref(h, &pivots);
  int rk = static_cast<int>(pivots.size());
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < h.cols; ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  MatGF g = nullspace(h);
  LinearCode c;
  c.field = h.field;
  c.n = h.cols;
  c.k = g.rows;
  c.G = std::move(g);
  c.H = (rk == h.rows) ? std::move(h) : nonzero_rows(r, rk);
  c.info_cols = std::move(free_cols);
  verify_code(c);
  return c;
}

LinearCode code_from_generator(MatGF g) {
  std::vector<int> pivots;
  MatGF r = rref(g, &pivots);
  int rk = static_cast<int>(pivots.size());
  LinearCode c;
  c.field = g.field;
  c.n = g.cols;
  c.k = rk;
  c.G = nonzero_rows(r, rk);
  c.H = nullspace(c.G);
  c.info_cols = std::move(pivots);
  verify_code(c);
  return c;
}

std::vector<uint32_t> encode(const LinearCode& c, std::span<const uint32_t> msg) {
  if (static_cast<int>(msg.size()) != c.k) fail(Errc::dimension_mismatch, "message length != k");
  const Field& f = *c.field;
  std::vector<uint32_t> out(c.n, 0);
  for (int i = 0; i < c.k; ++i) {
    uint32_t s = msg[i];
    if (!s) continue;
    for (int j = 0; j < c.n; ++j) out[j] = f.add(out[j], f.mul(s, c.G.at(i, j)));
  }
  return out;
}

std::vector<uint32_t> syndrome(const LinearCode& c, std::span<const uint32_t> x) {
  if (static_cast<int>(x.size()) != c.n) fail(Errc::dimension_mismatch, "vector length != n");
  const Field& f = *c.field;
  std::vector<uint32_t> out(c.H.rows, 0);
  for (int i = 0; i < c.H.rows; ++i) {
    uint32_t dot = 0;
    for (int j = 0; j < c.n; ++j) dot = f.add(dot, f.mul(c.H.at(i, j), x[j]));
    out[i] = dot;
  }
  return out;
}

std::vector<uint32_t> message_of(const LinearCode& c, std::span<const uint32_t> codeword) {
  if (static_cast<int>(codeword.size()) != c.n) fail(Errc::dimension_mismatch, "vector length != n");
  std::vector<uint32_t> msg(c.k);
  for (int i = 0; i < c.k; ++i) msg[i] = codeword[c.info_cols[i]];
  return msg;
}

}  // namespace bsymb
