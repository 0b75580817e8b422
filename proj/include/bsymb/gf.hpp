#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsymb/errors.hpp"

namespace bsymb {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m).
///
/// Elements are canonical integer encodings in [0, q): the base-p digits of
/// the encoding are the polynomial-basis coefficients, ascending, so 0 and 1
/// encode the additive and multiplicative identities in every field, and
/// prime-field encodings coincide with integers mod p.
///
/// A Field is immutable after construction and safe to share across threads.
/// Supported orders: primes up to 2^16, extensions up to 2^20.
class Field {
 public:
  /// p prime, m >= 1. The modulus is a monic irreducible of degree m over
  /// GF(p), coefficients ascending (c0 .. cm with cm == 1). When omitted the
  /// canonical modulus is chosen: the irreducible whose integer encoding
  /// (digits ascending, so high-degree coefficients are most significant)
  /// is smallest. For GF(8) that is x^3+x+1; for GF(32), x^5+x^2+1.
  static FieldPtr make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus = {});

  /// Factors q and builds the default-modulus field of that order.
  static FieldPtr of_order(uint64_t q);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  /// "p^m" for prime fields, "p^m/c0,c1,...,cm" for extensions.
  std::string literal() const;

  /// Structural identity: same p, m and modulus.
  bool same_as(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_;
  }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t e = static_cast<uint64_t>(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  /// a^k with k == 0 giving 1 (also for a == 0); negative k inverts.
  uint32_t pow(uint32_t a, int64_t k) const;

  /// Smallest-encoded element of multiplicative order q-1.
  uint32_t primitive_element() const { return gamma_; }

  uint64_t element_order(uint32_t a) const;

  /// Discrete log base primitive_element(); a != 0.
  uint64_t dlog(uint32_t a) const;

  /// primitive_element()^k (k taken mod q-1).
  uint32_t exp_of(uint64_t k) const { return exp_[k % (q_ - 1)]; }

  bool element_valid(uint32_t a) const { return a < q_; }

 private:
  Field() = default;

  uint32_t p_ = 0, m_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> mod_;
  std::vector<uint32_t> exp_, log_;  // log_[0] unused
  std::vector<uint32_t> addtab_;     // q*q table for small odd-characteristic fields
  uint32_t gamma_ = 0;
  std::vector<std::pair<uint64_t, int>> order_factors_;  // factorization of q-1

  void build_tables();
};

/// A field element bound to its field; arithmetic across distinct fields
/// throws Errc::field_mismatch. The field must outlive the element.
class Fe {
 public:
  Fe() = default;
  Fe(const FieldPtr& f, uint32_t v) : Fe(f.get(), v) {}
  Fe(const Field* f, uint32_t v) : v_(v), f_(f) {
    if (!f_ || !f_->element_valid(v_)) fail(Errc::bad_params, "element encoding out of range");
  }

  uint32_t value() const { return v_; }
  const Field& field() const { return *f_; }
  bool is_zero() const { return v_ == 0; }

  friend Fe operator+(const Fe& a, const Fe& b) { return Fe(a.same(b), a.f_->add(a.v_, b.v_)); }
  friend Fe operator-(const Fe& a, const Fe& b) { return Fe(a.same(b), a.f_->sub(a.v_, b.v_)); }
  friend Fe operator*(const Fe& a, const Fe& b) { return Fe(a.same(b), a.f_->mul(a.v_, b.v_)); }
  friend Fe operator/(const Fe& a, const Fe& b) { return Fe(a.same(b), a.f_->div(a.v_, b.v_)); }
  friend bool operator==(const Fe& a, const Fe& b) { return a.same(b) && a.v_ == b.v_; }

  Fe inverse() const { return Fe(f_, f_->inv(v_)); }
  Fe pow(int64_t k) const { return Fe(f_, f_->pow(v_, k)); }

 private:
  const Field* same(const Fe& o) const {
    if (f_ != o.f_ && !(f_ && o.f_ && f_->same_as(*o.f_)))
      fail(Errc::field_mismatch, "elements of different fields");
    return f_;
  }

  uint32_t v_ = 0;
  const Field* f_ = nullptr;
};

/// Polynomial over a field: coefficients ascending, canonical form trimmed
/// of trailing zeros (the zero polynomial has an empty coefficient list).
struct Poly {
  FieldPtr field;
  std::vector<uint32_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool monic() const { return !c.empty() && c.back() == 1; }
  uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const Poly& o) const { return field->same_as(*o.field) && c == o.c; }
};

/// Fixed isomorphism between the order-q' subfield of `big` and a standalone
/// GF(q') instance. The map sends beta = gamma^((Q-1)/(q'-1)) (gamma the
/// canonical primitive element of `big`) to the smallest root in `sub` of
/// beta's minimal polynomial over the prime field, extended multiplicatively;
/// that choice makes it a genuine field isomorphism rather than just a
/// correspondence of cyclic groups.
class SubfieldMap {
 public:
  SubfieldMap(FieldPtr big, FieldPtr sub);

  const FieldPtr& big() const { return big_; }
  const FieldPtr& sub() const { return sub_; }
  uint64_t index() const { return ratio_; }  // (|big|-1)/(|sub|-1)

  /// Re-encode a subfield element of `big` in `sub`. The element must
  /// satisfy e^{q'} == e; otherwise Errc::coefficient_outside_subfield.
  uint32_t down(uint32_t e) const;
  /// Embed a `sub` element into `big`.
  uint32_t up(uint32_t x) const;

 private:
  FieldPtr big_, sub_;
  uint64_t ratio_ = 1;
  uint32_t gen_big_ = 1, gen_small_ = 1;
  uint64_t s_ = 0, s_inv_ = 0;  // dlog of gen_small in sub, and its inverse mod q'-1
  bool identity_ = false;
};

/// e^{sub_q} == e, i.e. e lies in the order-sub_q subfield. sub_q must be a
/// power of the characteristic whose degree divides m.
bool in_subfield(const Field& fq, uint32_t e, uint64_t sub_q);

/// Boolean test plus the canonical re-encoding (in the default-modulus field
/// of order sub_q) when the element is in the subfield.
std::optional<uint32_t> subfield_test(const FieldPtr& fq, uint32_t e, uint64_t sub_q);

/// Minimal polynomial of e over the order-sub_q subfield: the product of
/// (x - e^{sub_q^i}) over the distinct conjugates, with every coefficient
/// verified to lie in the subfield and re-encoded there.
Poly minimal_polynomial(const FieldPtr& fq, uint32_t e, uint64_t sub_q);

}  // namespace bsymb
