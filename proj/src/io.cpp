#include "bsymb/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bsymb {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

uint64_t parse_u64(const std::string& s, int line) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) parse_fail(line, "expected a number, got '" + s + "'");
  return v;
}

// content lines with their 1-based line numbers, comments and blanks skipped
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

}  // namespace

std::string format_field(const Field& f) { return f.literal(); }

FieldPtr parse_field(const std::string& literal) {
  std::string head = literal, mod;
  if (size_t slash = literal.find('/'); slash != std::string::npos) {
    head = literal.substr(0, slash);
    mod = literal.substr(slash + 1);
  }
  uint64_t p = 0, m = 1;
  if (size_t caret = head.find('^'); caret != std::string::npos) {
    p = parse_u64(head.substr(0, caret), 1);
    m = parse_u64(head.substr(caret + 1), 1);
  } else {
    p = parse_u64(head, 1);
  }
  std::vector<uint32_t> coeffs;
  if (!mod.empty()) {
    std::istringstream in(mod);
    std::string part;
    while (std::getline(in, part, ',')) coeffs.push_back(static_cast<uint32_t>(parse_u64(part, 1)));
  }
  return Field::make(static_cast<uint32_t>(p), static_cast<uint32_t>(m), std::move(coeffs));
}

std::string format_matrix(const MatGF& m) {
  std::string out = "field " + m.field->literal() + "\n";
  out += "dims " + std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      if (c) out += " ";
      out += std::to_string(m.at(r, c));
    }
    out += "\n";
  }
  return out;
}

MatGF parse_matrix(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.size() < 2) fail(Errc::parse_error, "line 1: missing field/dims header");

  auto head = tokens(lines[0].second);
  if (head.size() != 2 || head[0] != "field")
    parse_fail(lines[0].first, "expected 'field <literal>'");
  FieldPtr f = parse_field(head[1]);

  auto dims = tokens(lines[1].second);
  if (dims.size() != 3 || dims[0] != "dims")
    parse_fail(lines[1].first, "expected 'dims <rows> <cols>'");
  int rows = static_cast<int>(parse_u64(dims[1], lines[1].first));
  int cols = static_cast<int>(parse_u64(dims[2], lines[1].first));

  if (static_cast<int>(lines.size()) != 2 + rows)
    fail(Errc::parse_error,
         "line " + std::to_string(lines.back().first) + ": expected " + std::to_string(rows) +
             " matrix rows, found " + std::to_string(lines.size() - 2));
  MatGF m = MatGF::zero(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    auto [no, line] = lines[2 + r];
    auto vals = tokens(line);
    if (static_cast<int>(vals.size()) != cols)
      parse_fail(no, "expected " + std::to_string(cols) + " entries, found " +
                         std::to_string(vals.size()));
    for (int c = 0; c < cols; ++c) {
      uint64_t v = parse_u64(vals[c], no);
      if (v >= f->q()) parse_fail(no, "entry " + std::to_string(v) + " not below q");
      m.at(r, c) = static_cast<uint32_t>(v);
    }
  }
  return m;
}

std::string format_ordering(const Ordering& o) {
  std::string out = "pg " + std::to_string(o.r) + " " + std::to_string(o.field->q()) + " " +
                    std::to_string(o.b) + " " +
                    (o.mode == OrderingMode::projective ? "projective" : "vector") + "\n";
  for (const auto& p : o.points) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(p[i]);
    }
    out += "\n";
  }
  return out;
}

Ordering parse_ordering(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(Errc::parse_error, "line 1: missing 'pg' header");
  auto head = tokens(lines[0].second);
  if (head.size() != 5 || head[0] != "pg")
    parse_fail(lines[0].first, "expected 'pg <r> <q> <b> <mode>'");

  Ordering o;
  o.r = static_cast<int>(parse_u64(head[1], lines[0].first));
  o.field = Field::of_order(parse_u64(head[2], lines[0].first));
  o.b = static_cast<int>(parse_u64(head[3], lines[0].first));
  if (head[4] == "projective")
    o.mode = OrderingMode::projective;
  else if (head[4] == "vector")
    o.mode = OrderingMode::vector_space;
  else
    parse_fail(lines[0].first, "mode must be 'projective' or 'vector'");

  for (size_t li = 1; li < lines.size(); ++li) {
    auto [no, line] = lines[li];
    auto vals = tokens(line);
    if (static_cast<int>(vals.size()) != o.dim())
      parse_fail(no, "expected " + std::to_string(o.dim()) + " coordinates, found " +
                         std::to_string(vals.size()));
    std::vector<uint32_t> p(o.dim());
    for (int i = 0; i < o.dim(); ++i) {
      uint64_t v = parse_u64(vals[i], no);
      if (v >= o.field->q()) parse_fail(no, "coordinate " + std::to_string(v) + " not below q");
      p[i] = static_cast<uint32_t>(v);
    }
    o.points.push_back(std::move(p));
  }
  return o;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << content;
}

}  // namespace bsymb
