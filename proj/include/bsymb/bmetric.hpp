#pragma once

#include <optional>
#include <span>
#include <string>

#include "bsymb/bigint.hpp"
#include "bsymb/linalg.hpp"

namespace bsymb {

/// Certification verdict for one code at one window size.
struct CodeReport {
  int n = 0, k = 0, b = 0;
  uint64_t q = 0;
  std::optional<int> d_hamming;     // minimum Hamming distance, when computed
  int d_b = 0;                      // minimum b-distance (upper bound if not certified)
  BigUint M;                        // code size q^k
  BigUint singleton_M;              // q^(n - d_b + b)
  bool is_mds = false;              // M == singleton_M at the computed d_b
  std::vector<uint32_t> witness_min;  // a nonzero codeword attaining d_b
  std::string method;               // "exhaustive" | "low-weight-certified"
  bool certified = false;
};

/// JSON object with exactly the report fields; big integers as decimal
/// strings, d_H omitted when not computed.
std::string report_json(const CodeReport& r);

/// The n overlapping cyclic windows (x_i, ..., x_{i+b-1}).
std::vector<std::vector<uint32_t>> read_vector(std::span<const uint32_t> x, int b);

int wt_hamming(std::span<const uint32_t> x);

/// Number of nonzero cyclic length-b windows; 1 <= b <= n.
int wt_b(std::span<const uint32_t> x, int b);

/// b-distance, computed as wt_b(x - y).
int dist_b(const Field& f, std::span<const uint32_t> x, std::span<const uint32_t> y, int b);

/// q^(n - d_b + b), the largest size of an (n, M, d_b) b-symbol code.
BigUint singleton_max(int n, int d_b, int b, uint64_t q);

/// 2b+1 <= n <= (q^{b+1}-1)/(q-1): the parameter window where a linear MDS
/// (n, 2b+1) b-symbol code can exist at all.
bool feasible_2b1(uint64_t n, uint64_t b, uint64_t q);

struct EnumOptions {
  uint64_t budget = uint64_t(1) << 28;  // codeword / candidate evaluations
  int w_cap = 8;                        // certified method weight cap
  int threads = 0;                      // 0 = hardware default
};

enum class DistMethod { exhaustive, certified, auto_pick };

/// Exact minimum b-distance over all q^k - 1 nonzero codewords. The witness
/// is the minimizer with the smallest message encoding (sum m_i q^i), and the
/// result is independent of the worker count.
CodeReport min_bdist_exhaustive(const LinearCode& c, int b, const EnumOptions& opts = {});

/// Exact minimum b-distance established from low-Hamming-weight codewords
/// only: enumerate weight <= W, take the minimum M of wt_b over the findings,
/// and stop once M <= lb(W+1), where lb(w) = w+b-1 for w <= n-b+1 and
/// lb(w) = n beyond (too few zeros for a zero window). Grows W until
/// certification, the weight cap, or the evaluation budget; an uncertified
/// report carries the best-known upper bound with certified = false. The
/// witness is the smallest-message minimizer among the enumerated codewords.
/// w_used, if given, receives the final completed weight level.
CodeReport min_bdist_certified(const LinearCode& c, int b, const EnumOptions& opts = {},
                               int* w_used = nullptr);

/// Compute d_b by the chosen method and evaluate the MDS verdict.
CodeReport mds_check(const LinearCode& c, int b, DistMethod method = DistMethod::auto_pick,
                     const EnumOptions& opts = {});

/// Recertifies at window b+1 a code already certified MDS at window b with
/// d_b < n, and checks d_{b+1} = d_b + 1 with the MDS property preserved.
struct LiftReport {
  CodeReport base, lifted;
  bool lift_ok = false;
};
LiftReport lift_check(const LinearCode& c, int b, DistMethod method = DistMethod::auto_pick,
                      const EnumOptions& opts = {});

}  // namespace bsymb
