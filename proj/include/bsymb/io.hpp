#pragma once

#include <string>

#include "bsymb/geometry.hpp"
#include "bsymb/linalg.hpp"

namespace bsymb {

// Text formats. Writers emit canonical text (LF line endings, no comments);
// parsers additionally accept '#' comment lines and blank lines. Files the
// tools emit re-parse bit-identically.

/// Field literal: "p^m" or "p^m/c0,c1,...,cm" (modulus coefficients
/// ascending). A bare prime is accepted on input.
std::string format_field(const Field& f);
FieldPtr parse_field(const std::string& literal);

/// Matrix file: "field <literal>" / "dims <rows> <cols>" / rows of
/// space-separated element encodings.
std::string format_matrix(const MatGF& m);
MatGF parse_matrix(const std::string& text);

/// Ordering file: "pg <r> <q> <b> <mode>" with mode "projective" or
/// "vector", then one point per line. The field is the default-modulus
/// field of order q.
std::string format_ordering(const Ordering& o);
Ordering parse_ordering(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bsymb
