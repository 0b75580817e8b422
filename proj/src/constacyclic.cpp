#include "bsymb/constacyclic.hpp"

#include <algorithm>
#include <numeric>

#include "bsymb/numtheory.hpp"

namespace bsymb {

std::vector<uint64_t> cyclotomic_coset(uint64_t j, uint64_t q, uint64_t mod) {
  if (mod == 0 || j >= mod) fail(Errc::bad_params, "need 0 <= j < mod");
  std::vector<uint64_t> out;
  uint64_t x = j;
  do {
    out.push_back(x);
    x = x * (q % mod) % mod;
  } while (x != j);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint32_t> constashift(const Field& f, std::span<const uint32_t> c, uint32_t eta) {
  if (eta == 0) fail(Errc::bad_params, "shift constant must be nonzero");
  std::vector<uint32_t> out(c.size());
  if (c.empty()) return out;
  out[0] = f.mul(eta, c.back());
  for (size_t i = 1; i < c.size(); ++i) out[i] = c[i - 1];
  return out;
}

ConstaCode consta_code(int n, uint32_t eta, const Poly& g) {
  const FieldPtr& f = g.field;
  if (n < 1) fail(Errc::bad_params, "length must be >= 1");
  if (eta == 0 || !f->element_valid(eta)) fail(Errc::bad_params, "eta must be a nonzero element");
  if (!g.monic()) fail(Errc::bad_params, "generating polynomial must be monic");
  if (g.degree() > n) fail(Errc::bad_params, "deg g must be <= n");

  Poly xn_eta{f, std::vector<uint32_t>(n + 1, 0)};
  xn_eta.c[0] = f->neg(eta);
  xn_eta.c[n] = 1;
  auto [quot, rem] = poly_divmod(xn_eta, g);
  (void)quot;
  if (!rem.is_zero()) fail(Errc::not_a_divisor, "g does not divide x^n - eta");

  ConstaCode c;
  c.field = f;
  c.n = n;
  c.eta = eta;
  c.g = g;
  c.k = n - g.degree();
  c.gen_shifts = MatGF::zero(f, c.k, n);
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j <= g.degree(); ++j) c.gen_shifts.at(i, i + j) = g.c[j];
  c.code = (c.k == 0) ? LinearCode{f, n, 0, MatGF::zero(f, 0, n), MatGF::identity(f, n), {}}
                      : code_from_generator(c.gen_shifts);

  for (int i = 0; i < c.gen_shifts.rows; ++i) {
    std::vector<uint32_t> shifted = constashift(*f, c.gen_shifts.row(i), eta);
    std::vector<uint32_t> syn = syndrome(c.code, shifted);
    if (!std::all_of(syn.begin(), syn.end(), [](uint32_t v) { return v == 0; }))
      fail(Errc::internal, "generator row is not shift invariant");
  }
  return c;
}

RootData consta_roots(const ConstaCode& c) {
  const Field& f = *c.field;
  uint64_t q = f.q();
  if (std::gcd(static_cast<uint64_t>(c.n), q) != 1)
    fail(Errc::gcd_violation, "defining sets need gcd(n, q) = 1");

  uint64_t r = f.element_order(c.eta);
  uint64_t rn = r * static_cast<uint64_t>(c.n);
  uint64_t s = (rn == 1) ? 1 : mult_order_mod(q % rn, rn);

  FieldPtr ext = Field::make(f.p(), f.m() * static_cast<uint32_t>(s));
  SubfieldMap embed(ext, c.field);

  uint64_t big_ord = ext->q() - 1;
  uint64_t eta_log = ext->dlog(embed.up(c.eta));
  uint64_t target_gcd = big_ord / rn;

  // smallest power of the canonical primitive element that has order rn and
  // n-th power eta
  uint32_t omega = 0;
  for (uint64_t e = 1; e <= big_ord; ++e) {
    if (std::gcd(e, big_ord) != target_gcd) continue;
    if (e * static_cast<uint64_t>(c.n) % big_ord != eta_log) continue;
    omega = ext->exp_of(e);
    break;
  }
  if (omega == 0) fail(Errc::internal, "no suitable root of unity found");
  return RootData{ext, std::move(embed), omega, r, rn};
}

std::vector<uint64_t> defining_set(const ConstaCode& c) {
  RootData rd = consta_roots(c);
  const Field& ext = *rd.ext;
  std::vector<uint64_t> z;
  for (int i = 0; i < c.n; ++i) {
    uint64_t j = 1 + static_cast<uint64_t>(i) * rd.r;
    uint32_t x = ext.pow(rd.omega, static_cast<int64_t>(j));
    if (poly_eval_in(c.g, rd.embed, x) == 0) z.push_back(j);
  }
  if (static_cast<int>(z.size()) != c.g.degree())
    fail(Errc::internal, "defining set size does not match deg g");
  return z;
}

int bch_lower_bound(const std::vector<uint64_t>& z, uint64_t r, int n) {
  if (z.empty()) return 1;
  std::vector<char> present(n, 0);
  for (uint64_t j : z) {
    if (j < 1 || (j - 1) % r != 0) fail(Errc::bad_params, "defining set exponent outside Omega");
    uint64_t i = (j - 1) / r;
    if (i >= static_cast<uint64_t>(n)) fail(Errc::bad_params, "defining set exponent outside Omega");
    present[i] = 1;
  }
  if (static_cast<int>(z.size()) == n) return n + 1;  // zero code
  // longest cyclic run of consecutive i's
  int best = 0, run = 0;
  for (int t = 0; t < 2 * n; ++t) {
    if (present[t % n]) {
      ++run;
      best = std::max(best, std::min(run, n));
    } else {
      run = 0;
    }
  }
  return best + 1;
}

Theorem4Result build_mds_constacyclic(uint64_t q, int b, const EnumOptions& opts) {
  if (b < 4) fail(Errc::bad_params, "the constacyclic family needs b >= 4");
  FieldPtr base = Field::of_order(q);
  FieldPtr ext = Field::make(base->p(), base->m() * static_cast<uint32_t>(b + 1));
  uint64_t n64 = (ext->q() - 1) / (q - 1);
  int n = static_cast<int>(n64);
  uint64_t big_ord = ext->q() - 1;

  // delta = gamma^t, t coprime to q^{b+1}-1, with delta^n primitive in the
  // subfield; t = 1 always qualifies since gamma^n has order q-1
  SubfieldMap embed(ext, base);
  auto subfield_primitive = [&](uint64_t tt) {
    if (std::gcd(tt, big_ord) != 1) return false;
    uint64_t x = tt * n64 % big_ord;
    uint64_t ord = (x == 0) ? 1 : big_ord / std::gcd(x, big_ord);
    return ord == q - 1;
  };
  uint64_t t = 1;
  if (!subfield_primitive(t)) {
    for (t = 2; t < big_ord; ++t)
      if (subfield_primitive(t)) break;
    if (t >= big_ord) fail(Errc::internal, "no suitable delta exponent found");
  }

  uint32_t delta = ext->exp_of(t);
  uint32_t omega_big = ext->pow(delta, n);
  uint32_t eta = embed.down(omega_big);

  Poly g = minimal_polynomial(ext, delta, q);
  if (g.degree() != b + 1) fail(Errc::internal, "minimal polynomial degree mismatch");
  // re-encode over the caller's base instance (same canonical field)
  if (!g.field->same_as(*base)) fail(Errc::internal, "coefficient field mismatch");
  g.field = base;

  Theorem4Result out{consta_code(n, eta, g), std::nullopt, 0};
  try {
    int w_used = 0;
    CodeReport rep = min_bdist_certified(out.code.code, b, opts, &w_used);
    out.report = std::move(rep);
    out.cert_weight = w_used;
  } catch (const Error& e) {
    if (e.code() != Errc::uncertifiable && e.code() != Errc::budget_exceeded) throw;
  }
  return out;
}

}  // namespace bsymb
