#pragma once

#include <utility>

#include "bsymb/gf.hpp"

namespace bsymb {

Poly poly_make(FieldPtr f, std::vector<uint32_t> coeffs);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

uint32_t poly_eval(const Poly& p, uint32_t x);

/// Evaluate at a point of an extension field, lifting the coefficients
/// through the fixed subfield embedding.
uint32_t poly_eval_in(const Poly& p, const SubfieldMap& up_map, uint32_t x);

std::string poly_str(const Poly& p);  // "field <literal>; coeffs c0 c1 ... cd"

}  // namespace bsymb
