#include "bsymb/bmetric.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <thread>

#include <json.hpp>

#include "bsymb/numtheory.hpp"

namespace bsymb {

std::vector<std::vector<uint32_t>> read_vector(std::span<const uint32_t> x, int b) {
  int n = static_cast<int>(x.size());
  if (b < 1 || b > n) fail(Errc::bad_window, "window size must satisfy 1 <= b <= n");
  std::vector<std::vector<uint32_t>> out(n, std::vector<uint32_t>(b));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b; ++j) out[i][j] = x[(i + j) % n];
  return out;
}

int wt_hamming(std::span<const uint32_t> x) {
  int w = 0;
  for (uint32_t v : x) w += v != 0;
  return w;
}

int wt_b(std::span<const uint32_t> x, int b) {
  int n = static_cast<int>(x.size());
  if (b < 1 || b > n) fail(Errc::bad_window, "window size must satisfy 1 <= b <= n");
  int first_nz = -1;
  for (int i = 0; i < n; ++i)
    if (x[i]) {
      first_nz = i;
      break;
    }
  if (first_nz < 0) return 0;
  // a maximal zero run of length L holds L-b+1 zero windows
  int zero_windows = 0, run = 0;
  for (int t = 1; t <= n; ++t) {
    if (x[(first_nz + t) % n] == 0) {
      ++run;
    } else {
      if (run >= b) zero_windows += run - b + 1;
      run = 0;
    }
  }
  return n - zero_windows;
}

int dist_b(const Field& f, std::span<const uint32_t> x, std::span<const uint32_t> y, int b) {
  if (x.size() != y.size()) fail(Errc::dimension_mismatch, "vectors of different length");
  std::vector<uint32_t> diff(x.size());
  for (size_t i = 0; i < x.size(); ++i) diff[i] = f.sub(x[i], y[i]);
  return wt_b(diff, b);
}

BigUint singleton_max(int n, int d_b, int b, uint64_t q) {
  if (q < 2 || b < 1 || d_b < b || d_b > n)
    fail(Errc::bad_params, "singleton bound requires q >= 2 and b <= d_b <= n");
  return BigUint::pow_u(q, static_cast<uint64_t>(n - d_b + b));
}

bool feasible_2b1(uint64_t n, uint64_t b, uint64_t q) {
  if (q < 2 || b < 1) fail(Errc::bad_params, "need q >= 2 and b >= 1");
  if (n < 2 * b + 1) return false;
  constexpr uint64_t kCap = uint64_t(1) << 62;
  uint64_t qb1 = pow_sat_u64(q, static_cast<uint32_t>(b + 1), kCap);
  uint64_t upper = (qb1 == kCap) ? kCap : (qb1 - 1) / (q - 1);
  return n <= upper;
}

namespace {

void addmul_row(const Field& f, std::vector<uint32_t>& acc, std::span<const uint32_t> row,
                uint32_t s) {
  if (s == 0) return;
  if (s == 1) {
    for (size_t j = 0; j < acc.size(); ++j) acc[j] = f.add(acc[j], row[j]);
  } else {
    for (size_t j = 0; j < acc.size(); ++j) acc[j] = f.add(acc[j], f.mul(s, row[j]));
  }
}

struct RangeBest {
  int wtb = INT_MAX;
  uint64_t enc = UINT64_MAX;
  int wth = INT_MAX;
};

// Scan message encodings [lo, hi), lo >= 1, updating the codeword
// incrementally (amortized O(1) scaled row additions per step).
void scan_messages(const LinearCode& c, int b, uint64_t lo, uint64_t hi, RangeBest& best) {
  const Field& f = *c.field;
  uint64_t q = f.q();
  std::vector<uint32_t> digits(c.k, 0);
  {
    uint64_t v = lo;
    for (int i = 0; i < c.k; ++i) {
      digits[i] = static_cast<uint32_t>(v % q);
      v /= q;
    }
  }
  std::vector<uint32_t> cw(c.n, 0);
  for (int i = 0; i < c.k; ++i) addmul_row(f, cw, c.G.row(i), digits[i]);

  for (uint64_t enc = lo; enc < hi; ++enc) {
    if (enc != lo) {
      int d = 0;
      while (true) {
        uint32_t old = digits[d];
        if (old + 1 < q) {
          digits[d] = old + 1;
          addmul_row(f, cw, c.G.row(d), f.sub(old + 1, old));
          break;
        }
        digits[d] = 0;
        addmul_row(f, cw, c.G.row(d), f.sub(0, old));
        ++d;
      }
    }
    int wtb = wt_b(cw, b);
    int wth = wt_hamming(cw);
    if (wth < best.wth) best.wth = wth;
    if (wtb < best.wtb) {
      best.wtb = wtb;
      best.enc = enc;
    }
  }
}

std::vector<uint32_t> message_digits(const Field& f, uint64_t enc, int k) {
  std::vector<uint32_t> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = static_cast<uint32_t>(enc % f.q());
    enc /= f.q();
  }
  return d;
}

CodeReport finalize(const LinearCode& c, int b, int d_b, std::optional<int> d_h,
                    std::vector<uint32_t> witness, std::string method, bool certified) {
  CodeReport r;
  r.n = c.n;
  r.k = c.k;
  r.b = b;
  r.q = c.field->q();
  r.d_hamming = d_h;
  r.d_b = d_b;
  r.M = BigUint::pow_u(r.q, static_cast<uint64_t>(c.k));
  r.singleton_M = singleton_max(c.n, d_b, b, r.q);
  r.is_mds = (r.M == r.singleton_M);
  r.witness_min = std::move(witness);
  r.method = std::move(method);
  r.certified = certified;
  return r;
}

void check_code_window(const LinearCode& c, int b) {
  if (c.k == 0) fail(Errc::degenerate, "code has no nonzero codewords");
  if (b < 1 || b > c.n) fail(Errc::bad_window, "window size must satisfy 1 <= b <= n");
}

}  // namespace

CodeReport min_bdist_exhaustive(const LinearCode& c, int b, const EnumOptions& opts) {
  check_code_window(c, b);
  uint64_t q = c.field->q();
  uint64_t budget = std::min(opts.budget, uint64_t(1) << 62);
  uint64_t total = pow_sat_u64(q, static_cast<uint32_t>(c.k), budget + 1);
  if (total > budget)
    fail(Errc::budget_exceeded,
         "q^k exceeds the enumeration budget; use the certified low-weight method");

  uint64_t chunk = std::max<uint64_t>(8192, (total - 1) / 256 + 1);
  uint64_t nchunks = (total - 1 + chunk - 1) / chunk;
  std::vector<RangeBest> results(nchunks);

  int threads = opts.threads > 0 ? opts.threads
                                 : static_cast<int>(std::min<unsigned>(
                                       std::max(1u, std::thread::hardware_concurrency()), 8));
  if (total - 1 <= 16384 || nchunks == 1) threads = 1;

  if (threads == 1) {
    for (uint64_t ci = 0; ci < nchunks; ++ci) {
      uint64_t lo = 1 + ci * chunk, hi = std::min(total, 1 + (ci + 1) * chunk);
      scan_messages(c, b, lo, hi, results[ci]);
    }
  } else {
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        uint64_t ci = next.fetch_add(1);
        if (ci >= nchunks) return;
        uint64_t lo = 1 + ci * chunk, hi = std::min(total, 1 + (ci + 1) * chunk);
        scan_messages(c, b, lo, hi, results[ci]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // chunks cover ascending encoding ranges; left-to-right merge keeps the
  // smallest-encoding minimizer regardless of scheduling
  RangeBest best;
  for (const auto& r : results) {
    if (r.wth < best.wth) best.wth = r.wth;
    if (r.wtb < best.wtb) {
      best.wtb = r.wtb;
      best.enc = r.enc;
    }
  }

  std::vector<uint32_t> witness = encode(c, message_digits(*c.field, best.enc, c.k));
  return finalize(c, b, best.wtb, best.wth, std::move(witness), "exhaustive", true);
}

namespace {

/// lb(w): least possible wt_b of a codeword of Hamming weight w.
int weight_lower_bound(int w, int b, int n) {
  if (w >= n - b + 1) return n;  // fewer than b zeros leaves no zero window
  return w + b - 1;
}

// Reverse-lexicographic order on message digit vectors equals numeric order
// of encodings sum m_i q^i without needing big integers.
bool msg_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct CertBest {
  int wtb = INT_MAX;
  std::vector<uint32_t> msg;  // minimizer with smallest encoding
  int wth = INT_MAX;

  void offer(int w, const std::vector<uint32_t>& m, int weight) {
    if (weight < wth) wth = weight;
    if (w < wtb || (w == wtb && msg_less(m, msg))) {
      wtb = w;
      msg = m;
    }
  }
};

// Candidate codeword found by the low-weight scan: fold in the whole scalar
// class, since lambda * x has the same b-weight and may have a smaller
// message encoding.
void offer_with_scalars(const LinearCode& c, int b, const std::vector<uint32_t>& cw,
                        CertBest& best) {
  const Field& f = *c.field;
  int wtb = wt_b(cw, b);
  int wth = wt_hamming(cw);
  if (wtb > best.wtb) {
    if (wth < best.wth) best.wth = wth;
    return;
  }
  std::vector<uint32_t> msg = message_of(c, cw);
  std::vector<uint32_t> scaled(msg.size());
  for (uint32_t lam = 1; lam < f.q(); ++lam) {
    for (size_t i = 0; i < msg.size(); ++i) scaled[i] = f.mul(lam, msg[i]);
    best.offer(wtb, scaled, wth);
  }
}

// Supports enumerated in lexicographic position order, first coefficient
// normalized to 1 (one representative per scalar class).
struct WeightScan {
  const LinearCode& c;
  int b, target_w;
  uint64_t evals = 0;
  CertBest& best;
  std::vector<uint32_t> syn, cw;
  std::vector<int> support;

  WeightScan(const LinearCode& code, int bb, int w, CertBest& bst)
      : c(code), b(bb), target_w(w), best(bst), syn(code.H.rows, 0), cw(code.n, 0) {}

  void run() { descend(0, target_w); }

  void descend(int pos, int left) {
    if (left == 0) {
      ++evals;
      if (std::all_of(syn.begin(), syn.end(), [](uint32_t v) { return v == 0; }))
        offer_with_scalars(c, b, cw, best);
      return;
    }
    const Field& f = *c.field;
    for (int i = pos; i + left <= c.n; ++i) {
      uint32_t cmax = support.empty() ? 1 : static_cast<uint32_t>(f.q() - 1);
      for (uint32_t cv = 1; cv <= cmax; ++cv) {
        support.push_back(i);
        cw[i] = cv;
        for (int r = 0; r < c.H.rows; ++r) syn[r] = f.add(syn[r], f.mul(cv, c.H.at(r, i)));
        descend(i + 1, left - 1);
        for (int r = 0; r < c.H.rows; ++r) syn[r] = f.sub(syn[r], f.mul(cv, c.H.at(r, i)));
        cw[i] = 0;
        support.pop_back();
      }
    }
  }
};

// GF(2) with at most 64 parity rows: syndromes are single machine words.
struct WeightScanPacked {
  const LinearCode& c;
  int b, target_w;
  uint64_t evals = 0;
  CertBest& best;
  std::vector<uint64_t> colmask;
  std::vector<uint32_t> cw;

  WeightScanPacked(const LinearCode& code, int bb, int w, CertBest& bst)
      : c(code), b(bb), target_w(w), best(bst), cw(code.n, 0) {
    colmask.resize(c.n);
    for (int i = 0; i < c.n; ++i) {
      uint64_t m = 0;
      for (int r = 0; r < c.H.rows; ++r)
        if (c.H.at(r, i)) m |= uint64_t(1) << r;
      colmask[i] = m;
    }
  }

  void run() { descend(0, target_w, 0); }

  void descend(int pos, int left, uint64_t syn) {
    if (left == 0) {
      ++evals;
      if (syn == 0) {
        offer_with_scalars(c, b, cw, best);
      }
      return;
    }
    for (int i = pos; i + left <= c.n; ++i) {
      cw[i] = 1;
      descend(i + 1, left - 1, syn ^ colmask[i]);
      cw[i] = 0;
    }
  }
};

uint64_t layer_size(int n, int w, uint64_t q, uint64_t cap) {
  // C(n, w) * (q-1)^(w-1), saturating at cap
  uint64_t v = 1;
  for (int i = 0; i < w; ++i) {
    if (v > UINT64_MAX / static_cast<uint64_t>(n - i)) return cap;
    v = v * static_cast<uint64_t>(n - i) / static_cast<uint64_t>(i + 1);
    if (v >= cap) return cap;
  }
  for (int i = 0; i + 1 < w; ++i) {
    if (q > 2 && v > UINT64_MAX / (q - 1)) return cap;
    v *= (q - 1);
    if (v >= cap) return cap;
  }
  return v;
}

}  // namespace

CodeReport min_bdist_certified(const LinearCode& c, int b, const EnumOptions& opts, int* w_used) {
  check_code_window(c, b);
  const Field& f = *c.field;
  uint64_t q = f.q();
  uint64_t budget = std::min(opts.budget, uint64_t(1) << 62);
  int w_cap = std::clamp(opts.w_cap, 1, c.n);

  CertBest best;
  bool certified = false;
  int final_w = 0;
  uint64_t spent = 0;

  uint64_t total = pow_sat_u64(q, static_cast<uint32_t>(c.k), uint64_t(1) << 22);
  if (total < (uint64_t(1) << 22) && total <= budget) {
    // small message space: one pass, then replay the weight levels
    struct WB {
      int wtb = INT_MAX;
      uint64_t enc = UINT64_MAX;
    };
    std::vector<WB> by_w(c.n + 1);
    std::vector<uint32_t> digits(c.k, 0), cw(c.n, 0);
    for (uint64_t enc = 1; enc < total; ++enc) {
      int d = 0;
      while (true) {
        uint32_t old = digits[d];
        if (old + 1 < q) {
          digits[d] = old + 1;
          addmul_row(f, cw, c.G.row(d), f.sub(old + 1, old));
          break;
        }
        digits[d] = 0;
        addmul_row(f, cw, c.G.row(d), f.sub(0, old));
        ++d;
      }
      int wth = wt_hamming(cw);
      if (wth > w_cap) continue;
      int wtb = wt_b(cw, b);
      if (wtb < by_w[wth].wtb) {
        by_w[wth].wtb = wtb;
        by_w[wth].enc = enc;
      }
    }
    spent = total - 1;
    for (int w = 1; w <= w_cap; ++w) {
      if (by_w[w].wtb != INT_MAX)
        best.offer(by_w[w].wtb, message_digits(f, by_w[w].enc, c.k), w);
      if (best.wtb <= weight_lower_bound(w + 1, b, c.n)) {
        certified = true;
        final_w = w;
        break;
      }
    }
    if (!certified) final_w = w_cap;
  } else {
    for (int w = 1; w <= w_cap; ++w) {
      uint64_t need = layer_size(c.n, w, q, budget + 1);
      if (spent + need > budget) break;  // stop before an unaffordable level
      if (q == 2 && c.H.rows <= 64) {
        WeightScanPacked scan(c, b, w, best);
        scan.run();
        spent += scan.evals;
      } else {
        WeightScan scan(c, b, w, best);
        scan.run();
        spent += scan.evals;
      }
      final_w = w;
      if (best.wtb <= weight_lower_bound(w + 1, b, c.n)) {
        certified = true;
        break;
      }
    }
  }

  if (best.wtb == INT_MAX)
    fail(Errc::uncertifiable,
         "no codeword found within the weight cap and budget; no bound available");
  if (w_used) *w_used = final_w;

  std::vector<uint32_t> witness = encode(c, best.msg);
  return finalize(c, b, best.wtb, best.wth, std::move(witness), "low-weight-certified",
                  certified);
}

CodeReport mds_check(const LinearCode& c, int b, DistMethod method, const EnumOptions& opts) {
  check_code_window(c, b);
  if (method == DistMethod::auto_pick) {
    uint64_t cap = std::min<uint64_t>(opts.budget, uint64_t(1) << 22);
    uint64_t total = pow_sat_u64(c.field->q(), static_cast<uint32_t>(c.k), cap + 1);
    method = (total <= cap) ? DistMethod::exhaustive : DistMethod::certified;
  }
  return method == DistMethod::exhaustive ? min_bdist_exhaustive(c, b, opts)
                                          : min_bdist_certified(c, b, opts);
}

LiftReport lift_check(const LinearCode& c, int b, DistMethod method, const EnumOptions& opts) {
  LiftReport out;
  out.base = mds_check(c, b, method, opts);
  if (!out.base.certified || !out.base.is_mds)
    fail(Errc::precondition_unmet, "code is not certified MDS at the base window");
  if (out.base.d_b >= c.n)
    fail(Errc::precondition_unmet, "lift requires d_b < n");
  if (b + 1 > c.n) fail(Errc::precondition_unmet, "lift requires b+1 <= n");
  out.lifted = mds_check(c, b + 1, method, opts);
  out.lift_ok =
      out.lifted.certified && out.lifted.is_mds && out.lifted.d_b == out.base.d_b + 1;
  return out;
}

std::string report_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["q"] = r.q;
  j["b"] = r.b;
  if (r.d_hamming) j["d_H"] = *r.d_hamming;
  j["d_b"] = r.d_b;
  j["M"] = r.M.str();
  j["singleton_M"] = r.singleton_M.str();
  j["is_mds"] = r.is_mds;
  j["witness_min"] = r.witness_min;
  j["method"] = r.method;
  j["certified"] = r.certified;
  return j.dump();
}

}  // namespace bsymb
