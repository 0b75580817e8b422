#include "bsymb/poly.hpp"

#include <algorithm>

namespace bsymb {

namespace {

const Field& common_field(const Poly& a, const Poly& b) {
  if (!a.field->same_as(*b.field)) fail(Errc::field_mismatch, "polynomials over different fields");
  return *a.field;
}

}  // namespace

Poly poly_make(FieldPtr f, std::vector<uint32_t> coeffs) {
  for (uint32_t c : coeffs)
    if (!f->element_valid(c)) fail(Errc::bad_params, "coefficient out of range");
  Poly p{std::move(f), std::move(coeffs)};
  p.trim();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  Poly out{a.field, std::vector<uint32_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.add(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  Poly out{a.field, std::vector<uint32_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.sub(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly{a.field, {}};
  Poly out{a.field, std::vector<uint32_t>(a.c.size() + b.c.size() - 1, 0)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = f.add(out.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  out.trim();
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{a.field, {}}, a};

  std::vector<uint32_t> rem = a.c;
  std::vector<uint32_t> quot(a.degree() - b.degree() + 1, 0);
  uint32_t lead_inv = f.inv(b.c.back());
  for (int i = a.degree(); i >= b.degree(); --i) {
    uint32_t c = f.mul(rem[i], lead_inv);
    if (!c) continue;
    quot[i - b.degree()] = c;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] = f.sub(rem[i - b.degree() + j], f.mul(c, b.c[j]));
  }
  Poly q{a.field, std::move(quot)}, r{a.field, std::move(rem)};
  q.trim();
  r.trim();
  return {q, r};
}

uint32_t poly_eval(const Poly& p, uint32_t x) {
  const Field& f = *p.field;
  uint32_t acc = 0;
  for (size_t i = p.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.c[i]);
  return acc;
}

uint32_t poly_eval_in(const Poly& p, const SubfieldMap& up_map, uint32_t x) {
  if (!up_map.sub()->same_as(*p.field))
    fail(Errc::field_mismatch, "embedding does not match coefficient field");
  const Field& f = *up_map.big();
  uint32_t acc = 0;
  for (size_t i = p.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), up_map.up(p.c[i]));
  return acc;
}

std::string poly_str(const Poly& p) {
  std::string s = "field " + p.field->literal() + "; coeffs";
  if (p.is_zero()) return s + " 0";
  for (uint32_t c : p.c) s += " " + std::to_string(c);
  return s;
}

}  // namespace bsymb
