#pragma once

#include <optional>

#include "bsymb/bmetric.hpp"
#include "bsymb/poly.hpp"

namespace bsymb {

/// eta-constacyclic code of length n over GF(q): the ideal of
/// GF(q)[x]/(x^n - eta) generated by a monic divisor g of x^n - eta.
struct ConstaCode {
  FieldPtr field;
  int n = 0;
  uint32_t eta = 0;
  Poly g;
  int k = 0;
  MatGF gen_shifts;  // row i = coefficients of x^i g(x)
  LinearCode code;
};

/// q-cyclotomic coset of j modulo mod: the orbit {j q^i mod mod}, sorted.
std::vector<uint64_t> cyclotomic_coset(uint64_t j, uint64_t q, uint64_t mod);

/// (c_0, ..., c_{n-1}) -> (eta c_{n-1}, c_0, ..., c_{n-2}).
std::vector<uint32_t> constashift(const Field& f, std::span<const uint32_t> c, uint32_t eta);

/// Builds the code; g must divide x^n - eta exactly. Shift invariance of the
/// generators is verified.
ConstaCode consta_code(int n, uint32_t eta, const Poly& g);

/// The extension field containing the chosen primitive rn-th root omega with
/// omega^n = eta, plus the root exponent layout.
struct RootData {
  FieldPtr ext;
  SubfieldMap embed;  // base field -> ext
  uint32_t omega = 0;
  uint64_t r = 0, rn = 0;
};
RootData consta_roots(const ConstaCode& c);

/// Defining set Z = {j in Omega : g(omega^j) = 0}, Omega = {1 + i r}.
/// Requires gcd(n, q) = 1.
std::vector<uint64_t> defining_set(const ConstaCode& c);

/// Longest run of d-1 cyclically consecutive exponents 1+ri in Z forces
/// minimum Hamming distance >= d. Z = Omega gives n+1 (the zero code).
int bch_lower_bound(const std::vector<uint64_t>& z, uint64_t r, int n);

/// The length-(q^{b+1}-1)/(q-1) construction: g is the degree-(b+1) minimal
/// polynomial of a primitive element delta of GF(q^{b+1}) with delta^n
/// primitive in GF(q), and the eta-constacyclic code it generates is MDS with
/// d_b = 2b+1. Requires b >= 4. The report is absent when certification ran
/// out of budget before finding any codeword.
struct Theorem4Result {
  ConstaCode code;
  std::optional<CodeReport> report;
  int cert_weight = 0;  // W used by the certification, when present
};
Theorem4Result build_mds_constacyclic(uint64_t q, int b, const EnumOptions& opts = {});

}  // namespace bsymb
