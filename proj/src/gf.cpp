#include "bsymb/gf.hpp"

#include <algorithm>
#include <array>

#include "bsymb/numtheory.hpp"

namespace bsymb {

namespace {

constexpr uint64_t kMaxPrimeField = 1u << 16;
constexpr uint64_t kMaxFieldOrder = 1u << 20;
constexpr uint64_t kSmallAddTable = 256;

void to_digits(uint64_t v, uint32_t p, uint32_t m, uint32_t* d) {
  for (uint32_t i = 0; i < m; ++i) {
    d[i] = static_cast<uint32_t>(v % p);
    v /= p;
  }
}

uint64_t from_digits(const uint32_t* d, uint32_t p, uint32_t m) {
  uint64_t v = 0;
  for (uint32_t i = m; i-- > 0;) v = v * p + d[i];
  return v;
}

// Multiplication in GF(2^m) on packed encodings: carryless multiply, then
// reduce by the modulus bit mask.
uint32_t mul_gf2(uint32_t a, uint32_t b, uint32_t m, uint32_t modmask) {
  uint64_t acc = 0, x = a;
  while (b) {
    if (b & 1) acc ^= x;
    x <<= 1;
    b >>= 1;
  }
  for (int i = 62; i >= static_cast<int>(m); --i)
    if (acc >> i & 1) acc ^= static_cast<uint64_t>(modmask) << (i - m);
  return static_cast<uint32_t>(acc);
}

// Generic polynomial-basis multiplication used only while the exp/log tables
// are being built.
uint64_t mul_raw(uint64_t a, uint64_t b, uint32_t p, uint32_t m,
                 const std::vector<uint32_t>& mod) {
  if (m == 1) return a * b % p;
  std::array<uint32_t, 64> da{}, db{}, prod{};
  to_digits(a, p, m, da.data());
  to_digits(b, p, m, db.data());
  for (uint32_t i = 0; i < m; ++i) {
    if (!da[i]) continue;
    for (uint32_t j = 0; j < m; ++j)
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p);
  }
  for (uint32_t i = 2 * m - 2; i >= m && i < 64; --i) {
    uint32_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (uint32_t j = 0; j < m; ++j) {
      uint64_t t = prod[i - m + j] + static_cast<uint64_t>(c) * (p - mod[j]) % p;
      prod[i - m + j] = static_cast<uint32_t>(t % p);
    }
  }
  return from_digits(prod.data(), p, m);
}

uint64_t pow_raw(uint64_t a, uint64_t k, uint32_t p, uint32_t m,
                 const std::vector<uint32_t>& mod) {
  uint64_t r = 1;
  while (k) {
    if (k & 1) r = mul_raw(r, a, p, m, mod);
    a = mul_raw(a, a, p, m, mod);
    k >>= 1;
  }
  return r;
}

// Remainder of a by b over GF(p); coefficient vectors ascending, b monic.
bool divides_poly(const std::vector<uint32_t>& b, std::vector<uint32_t> a, uint32_t p) {
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    uint32_t c = a[i];
    if (!c) continue;
    for (int j = 0; j <= db; ++j) {
      uint64_t t = a[i - db + j] + static_cast<uint64_t>(c) * (p - b[j]) % p;
      a[i - db + j] = static_cast<uint32_t>(t % p);
    }
  }
  for (int i = 0; i < db && i < static_cast<int>(a.size()); ++i)
    if (a[i]) return false;
  return true;
}

bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  uint32_t m = static_cast<uint32_t>(f.size()) - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  for (uint32_t d = 1; 2 * d <= m; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t t = 0; t < count; ++t) {
      std::vector<uint32_t> g(d + 1);
      uint64_t v = t;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (divides_poly(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m) {
  if (m == 1) return {0, 1};  // x
  uint64_t count = 1;
  for (uint32_t i = 0; i < m; ++i) count *= p;
  for (uint64_t t = 0; t < count; ++t) {
    std::vector<uint32_t> f(m + 1);
    uint64_t v = t;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(Errc::internal, "no irreducible polynomial found");
}

// Product of (x - r) over roots, coefficients in the given field.
std::vector<uint32_t> linear_factor_product(const Field& f, const std::vector<uint32_t>& roots) {
  std::vector<uint32_t> c{1};
  for (uint32_t r : roots) {
    std::vector<uint32_t> next(c.size() + 1, 0);
    uint32_t nr = f.neg(r);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], c[i]);
      next[i] = f.add(next[i], f.mul(nr, c[i]));
    }
    c = std::move(next);
  }
  return c;
}

uint32_t eval_coeffs(const Field& f, const std::vector<uint32_t>& c, uint32_t x) {
  uint32_t acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
  return acc;
}

}  // namespace

FieldPtr Field::make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
  if (!is_prime_u64(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (m < 1) fail(Errc::bad_params, "extension degree must be >= 1");
  uint64_t q = pow_sat_u64(p, m, kMaxFieldOrder + 1);
  if (m == 1 && q > kMaxPrimeField)
    fail(Errc::field_too_large, "prime fields supported up to 2^16");
  if (q > kMaxFieldOrder) fail(Errc::field_too_large, "field orders supported up to 2^20");

  if (modulus.empty()) {
    modulus = default_modulus(p, m);
  } else {
    if (modulus.size() != m + 1)
      fail(Errc::degree_mismatch, "modulus must have degree m = " + std::to_string(m));
    if (modulus.back() != 1) fail(Errc::degree_mismatch, "modulus must be monic");
    for (uint32_t c : modulus)
      if (c >= p) fail(Errc::bad_params, "modulus coefficient out of range");
    if (m >= 2 && !is_irreducible(modulus, p))
      fail(Errc::reducible_modulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = q;
  f->mod_ = std::move(modulus);
  f->build_tables();
  return f;
}

FieldPtr Field::of_order(uint64_t q) {
  if (q < 2) fail(Errc::bad_params, "field order must be >= 2");
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  uint32_t m = 0;
  uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1) fail(Errc::bad_params, std::to_string(q) + " is not a prime power");
  return make(static_cast<uint32_t>(p), m);
}

void Field::build_tables() {
  order_factors_ = factorize_u64(q_ - 1);

  // smallest-encoded generator of the multiplicative group
  uint32_t modmask = 0;
  if (p_ == 2)
    for (uint32_t i = 0; i <= m_; ++i) modmask |= mod_[i] << i;
  auto raw_pow = [&](uint64_t a, uint64_t k) {
    if (p_ == 2 && m_ > 1) {
      uint64_t r = 1;
      uint32_t x = static_cast<uint32_t>(a);
      while (k) {
        if (k & 1) r = mul_gf2(static_cast<uint32_t>(r), x, m_, modmask);
        x = mul_gf2(x, x, m_, modmask);
        k >>= 1;
      }
      return r;
    }
    return pow_raw(a, k, p_, m_, mod_);
  };

  gamma_ = 0;
  for (uint32_t a = 1; a < q_; ++a) {
    bool primitive = true;
    for (auto [pf, e] : order_factors_) {
      (void)e;
      if (raw_pow(a, (q_ - 1) / pf) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gamma_ = a;
      break;
    }
  }
  if (gamma_ == 0) fail(Errc::internal, "no primitive element found");

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  uint64_t e = 1;
  for (uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<uint32_t>(e);
    log_[e] = static_cast<uint32_t>(i);
    e = (p_ == 2 && m_ > 1) ? mul_gf2(static_cast<uint32_t>(e), gamma_, m_, modmask)
                            : mul_raw(e, gamma_, p_, m_, mod_);
  }
  if (e != 1) fail(Errc::internal, "primitive element order mismatch");

  if (p_ != 2 && m_ > 1 && q_ <= kSmallAddTable) {
    addtab_.assign(q_ * q_, 0);
    for (uint64_t a = 0; a < q_; ++a) {
      std::array<uint32_t, 64> da{}, db{};
      to_digits(a, p_, m_, da.data());
      for (uint64_t b = a; b < q_; ++b) {
        to_digits(b, p_, m_, db.data());
        std::array<uint32_t, 64> s{};
        for (uint32_t i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
        uint32_t v = static_cast<uint32_t>(from_digits(s.data(), p_, m_));
        addtab_[a * q_ + b] = v;
        addtab_[b * q_ + a] = v;
      }
    }
  }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!addtab_.empty()) return addtab_[static_cast<uint64_t>(a) * q_ + b];
  std::array<uint32_t, 64> da{}, db{};
  to_digits(a, p_, m_, da.data());
  to_digits(b, p_, m_, db.data());
  for (uint32_t i = 0; i < m_; ++i) {
    da[i] += db[i];
    if (da[i] >= p_) da[i] -= p_;
  }
  return static_cast<uint32_t>(from_digits(da.data(), p_, m_));
}

uint32_t Field::neg(uint32_t a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  std::array<uint32_t, 64> d{};
  to_digits(a, p_, m_, d.data());
  for (uint32_t i = 0; i < m_; ++i)
    if (d[i]) d[i] = p_ - d[i];
  return static_cast<uint32_t>(from_digits(d.data(), p_, m_));
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t Field::pow(uint32_t a, int64_t k) const {
  if (k == 0) return 1;
  if (a == 0) {
    if (k < 0) fail(Errc::division_by_zero, "negative power of zero");
    return 0;
  }
  uint64_t ord = q_ - 1;
  uint64_t e = static_cast<uint64_t>(((k % static_cast<int64_t>(ord)) + static_cast<int64_t>(ord))) % ord;
  return exp_[log_[a] * e % ord];
}

uint64_t Field::element_order(uint32_t a) const {
  if (a == 0) fail(Errc::bad_params, "order of zero is undefined");
  uint64_t ord = q_ - 1;
  for (auto [pf, e] : order_factors_) {
    for (int i = 0; i < e; ++i) {
      if (ord % pf == 0 && pow(a, static_cast<int64_t>(ord / pf)) == 1)
        ord /= pf;
      else
        break;
    }
  }
  return ord;
}

uint64_t Field::dlog(uint32_t a) const {
  if (a == 0) fail(Errc::bad_params, "discrete log of zero");
  return log_[a];
}

std::string Field::literal() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(m_);
  if (m_ > 1) {
    s += "/";
    for (uint32_t i = 0; i <= m_; ++i) {
      if (i) s += ",";
      s += std::to_string(mod_[i]);
    }
  }
  return s;
}

bool in_subfield(const Field& fq, uint32_t e, uint64_t sub_q) {
  if (!fq.element_valid(e)) fail(Errc::bad_params, "element out of range");
  uint64_t t = sub_q;
  uint32_t d = 0;
  while (t % fq.p() == 0) {
    t /= fq.p();
    ++d;
  }
  if (t != 1 || d == 0 || fq.m() % d != 0)
    fail(Errc::bad_params, "not a subfield order of this field");
  return fq.pow(e, static_cast<int64_t>(sub_q)) == e;
}

SubfieldMap::SubfieldMap(FieldPtr big, FieldPtr sub) : big_(std::move(big)), sub_(std::move(sub)) {
  if (big_->p() != sub_->p() || big_->m() % sub_->m() != 0)
    fail(Errc::bad_params, "not a subfield of this field");
  if (big_->same_as(*sub_)) {
    identity_ = true;
    return;
  }
  ratio_ = (big_->q() - 1) / (sub_->q() - 1);
  gen_big_ = big_->exp_of(ratio_);

  // minimal polynomial of gen_big_ over the prime field; its coefficients
  // are constants, valid in any field of the same characteristic
  std::vector<uint32_t> orbit;
  uint32_t x = gen_big_;
  do {
    orbit.push_back(x);
    x = big_->pow(x, big_->p());
  } while (x != gen_big_);
  std::vector<uint32_t> mp = linear_factor_product(*big_, orbit);
  for (uint32_t c : mp)
    if (c >= big_->p()) fail(Errc::internal, "prime-field minimal polynomial has nonconstant coefficient");

  gen_small_ = 0;
  for (uint32_t cand = 1; cand < sub_->q(); ++cand) {
    if (eval_coeffs(*sub_, mp, cand) == 0) {
      gen_small_ = cand;
      break;
    }
  }
  if (gen_small_ == 0) fail(Errc::internal, "no root of subfield generator polynomial");
  s_ = sub_->dlog(gen_small_);
  s_inv_ = inverse_mod(s_, sub_->q() - 1);

  // spot-check the map is a homomorphism
  uint32_t a = gen_big_, b = big_->pow(gen_big_, 2);
  if (down(big_->mul(a, b)) != sub_->mul(down(a), down(b)) ||
      down(big_->add(a, b)) != sub_->add(down(a), down(b)))
    fail(Errc::internal, "subfield map is not a homomorphism");
}

uint32_t SubfieldMap::down(uint32_t e) const {
  if (identity_) return e;
  if (e == 0) return 0;
  uint64_t l = big_->dlog(e);
  if (l % ratio_ != 0)
    fail(Errc::coefficient_outside_subfield, "element does not lie in the subfield");
  uint64_t j = l / ratio_;
  return sub_->exp_of(j * s_ % (sub_->q() - 1));
}

uint32_t SubfieldMap::up(uint32_t x) const {
  if (identity_) return x;
  if (x == 0) return 0;
  uint64_t j = sub_->dlog(x) * s_inv_ % (sub_->q() - 1);
  return big_->exp_of(ratio_ * j % (big_->q() - 1));
}

std::optional<uint32_t> subfield_test(const FieldPtr& fq, uint32_t e, uint64_t sub_q) {
  if (!in_subfield(*fq, e, sub_q)) return std::nullopt;
  SubfieldMap map(fq, Field::of_order(sub_q));
  return map.down(e);
}

Poly minimal_polynomial(const FieldPtr& fq, uint32_t e, uint64_t sub_q) {
  if (!fq->element_valid(e)) fail(Errc::bad_params, "element out of range");
  SubfieldMap map(fq, Field::of_order(sub_q));

  std::vector<uint32_t> orbit;
  uint32_t x = e;
  do {
    orbit.push_back(x);
    x = fq->pow(x, static_cast<int64_t>(sub_q));
  } while (x != e);

  std::vector<uint32_t> big_coeffs = linear_factor_product(*fq, orbit);
  Poly out{map.sub(), {}};
  out.c.reserve(big_coeffs.size());
  for (uint32_t c : big_coeffs) out.c.push_back(map.down(c));
  out.trim();
  return out;
}

}  // namespace bsymb
