#pragma once

#include <span>
#include <vector>

#include "bsymb/gf.hpp"

namespace bsymb {

/// Dense matrix over a finite field, row-major element encodings.
struct MatGF {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::vector<uint32_t> a;

  static MatGF zero(FieldPtr f, int r, int c) {
    return MatGF{std::move(f), r, c, std::vector<uint32_t>(static_cast<size_t>(r) * c, 0)};
  }
  static MatGF identity(FieldPtr f, int n);

  uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::span<const uint32_t> row(int r) const {
    return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }
  std::vector<uint32_t> col(int c) const;

  bool operator==(const MatGF& o) const {
    return field->same_as(*o.field) && rows == o.rows && cols == o.cols && a == o.a;
  }
};

/// Incremental row-echelon accumulator; the workhorse behind rank, span
/// membership and the ordering searches.
class Echelon {
 public:
  Echelon(FieldPtr f, int dim) : f_(std::move(f)), dim_(dim) {}

  /// Reduce v against the stored rows; if a nonzero residue remains it is
  /// normalized and kept, and the rank grows. Returns whether it grew.
  bool insert(std::span<const uint32_t> v);
  /// True iff v reduces to zero against the stored rows.
  bool contains(std::span<const uint32_t> v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  void clear() { rows_.clear(); leads_.clear(); }

 private:
  std::vector<uint32_t> reduce(std::span<const uint32_t> v) const;

  FieldPtr f_;
  int dim_;
  std::vector<std::vector<uint32_t>> rows_;  // normalized, ordered by leading column
  std::vector<int> leads_;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero row
/// in column order). Pivot column indices are appended to *pivots if given.
MatGF rref(MatGF m, std::vector<int>* pivots = nullptr);

int rank(const MatGF& m);

/// True iff the selected columns are linearly independent. Indices must be
/// distinct and in range.
bool cols_independent(const MatGF& m, std::span<const int> idx);

/// True iff v is a linear combination of the basis vectors.
bool in_span(const FieldPtr& f, const std::vector<std::vector<uint32_t>>& basis,
             std::span<const uint32_t> v);

/// Basis of {x : Mx = 0} as matrix rows, one per free column in ascending
/// order; each basis row has a 1 in its own free column and 0 in the others.
MatGF nullspace(const MatGF& m);

/// A linear code presented by generator and parity-check matrices with
/// G H^T = 0, rank(G) = k, rank(H) = n-k. `info_cols` are n positions where
/// G restricts to the identity, so messages can be read off codewords.
struct LinearCode {
  FieldPtr field;
  int n = 0, k = 0;
  MatGF G, H;
  std::vector<int> info_cols;
};

/// Build a code from its parity-check matrix. H is kept verbatim when its
/// rows are independent, otherwise replaced by the reduced row basis.
LinearCode code_from_parity(MatGF h);

/// Build a code from a generator matrix; the stored generator is the reduced
/// echelon basis of the row space.
LinearCode code_from_generator(MatGF g);

std::vector<uint32_t> encode(const LinearCode& c, std::span<const uint32_t> msg);
std::vector<uint32_t> syndrome(const LinearCode& c, std::span<const uint32_t> x);
/// Inverse of encode on codewords (reads the information positions).
std::vector<uint32_t> message_of(const LinearCode& c, std::span<const uint32_t> codeword);

}  // namespace bsymb
