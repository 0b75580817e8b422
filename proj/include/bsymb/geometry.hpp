#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bsymb/linalg.hpp"

namespace bsymb {

enum class OrderingMode { projective, vector_space };

/// A cyclic sequence of points of PG(r, q) (projective mode: pairwise
/// distinct, every b+1 consecutive points independent) or of nonzero vectors
/// of V(b, q) (vector mode: every b consecutive vectors independent, repeats
/// allowed). `r` is the projective dimension, or the vector-space dimension
/// in vector mode.
struct Ordering {
  FieldPtr field;
  int r = 0;
  int b = 0;
  OrderingMode mode = OrderingMode::projective;
  std::vector<std::vector<uint32_t>> points;

  int window() const { return mode == OrderingMode::projective ? b + 1 : b; }
  int dim() const { return mode == OrderingMode::projective ? r + 1 : r; }
};

/// Canonical representative: scaled so the leftmost nonzero coordinate is 1.
std::vector<uint32_t> normalize_point(const Field& f, std::vector<uint32_t> v);

/// All points of PG(r, q) as normalized coordinate vectors, in lexicographic
/// coordinate order; (q^{r+1}-1)/(q-1) of them.
std::vector<std::vector<uint32_t>> pg_points(int r, const FieldPtr& f);

/// q+1 hyperplanes (as defining linear functionals) whose union is all of
/// PG(r, q) and whose pairwise intersection is the fixed (r-2)-space. The
/// axis defaults to span{e_2, ..., e_r}; when given it must be r-1
/// independent vectors.
struct HyperplaneCover {
  std::vector<std::vector<uint32_t>> functionals;
  std::vector<std::vector<uint32_t>> axis;
};
HyperplaneCover hyperplane_cover(int r, const FieldPtr& f,
                                 const std::vector<std::vector<uint32_t>>* axis = nullptr);

struct ValidationReport {
  bool ok = false;
  int first_bad_window = -1;                 // start index, -1 when clean
  std::pair<int, int> duplicate = {-1, -1};  // projective-mode duplicate points
  // informative: 3 points on a line (projective) / 2 dependent vectors
  // (vector mode); the MDS verdict does not depend on it
  bool has_dependent_pair_or_triple = false;
};
ValidationReport validate_ordering(const Ordering& o);

/// Deterministic ordering of n points of PG(2, q) with no three cyclically
/// consecutive points collinear: interleaves the pencil of lines through a
/// fixed point, with backtracking repair of the final positions. q >= 3 and
/// 3 <= n <= q^2+q+1; for q = 2 the built-in reference table covers n <= 7.
Ordering order_pg2(const FieldPtr& f, int n);

/// Depth-first ordering search over the points of PG(r, q), r = b: each new
/// point must avoid the span of the previous b, and the wrap-around windows
/// are enforced on completion by backtracking. The candidate order is the
/// canonical point list shuffled by the seed; the budget bounds candidate
/// feasibility tests.
Ordering greedy_order(int r, const FieldPtr& f, int b, int n, uint64_t seed, uint64_t budget);

/// Same search over the nonzero vectors of V(b, q), window size b, repeats
/// allowed; n >= 2b.
Ordering greedy_vectors(int b, const FieldPtr& f, int n, uint64_t seed, uint64_t budget);

/// The standard basis of V(b, q) repeated n/b times; b | n, n >= 2b.
Ordering tile_basis(int b, const FieldPtr& f, int n);

/// Concatenation of sequences with identical parameters sharing their first
/// b-1 entries; seam and wrap windows are re-validated.
Ordering concat_orderings(const std::vector<Ordering>& seqs);

/// Matrix whose columns are the ordered coordinates: (r+1) x n in projective
/// mode, b x n in vector mode.
MatGF points_to_parity(const Ordering& o);

}  // namespace bsymb
