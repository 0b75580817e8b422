#include "bsymb/cli.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsymb/constacyclic.hpp"
#include "bsymb/fixtures.hpp"
#include "bsymb/io.hpp"

namespace bsymb::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUncertified = 2;

struct CommonOpts {
  std::string format = "text";
  std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out_dir, "output directory for emitted files");
}

ordered_json report_obj(const CodeReport& r) { return ordered_json::parse(report_json(r)); }

void emit(const CommonOpts& c, const ordered_json& doc, const std::string& text) {
  if (c.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string write_out(const CommonOpts& c, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(c.out_dir);
  std::string path = (std::filesystem::path(c.out_dir) / name).string();
  write_text_file(path, content);
  return path;
}

std::string validation_text(const ValidationReport& v) {
  std::string s = v.ok ? "ordering valid" : "ordering INVALID";
  if (!v.ok && v.first_bad_window >= 0)
    s += " (dependent window at position " + std::to_string(v.first_bad_window) + ")";
  if (v.duplicate.first >= 0)
    s += " (duplicate points at " + std::to_string(v.duplicate.first) + ", " +
         std::to_string(v.duplicate.second) + ")";
  s += v.has_dependent_pair_or_triple ? "; has a dependent pair/triple" : "; no dependent pair/triple";
  return s;
}

ordered_json validation_obj(const ValidationReport& v) {
  ordered_json j;
  j["ok"] = v.ok;
  j["first_bad_window"] = v.first_bad_window;
  j["has_dependent_pair_or_triple"] = v.has_dependent_pair_or_triple;
  return j;
}

std::string report_text(const CodeReport& r) {
  std::string s = "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "] code over GF(" +
                  std::to_string(r.q) + "), b = " + std::to_string(r.b);
  if (r.d_hamming) s += ", d_H = " + std::to_string(*r.d_hamming);
  s += ", d_b = " + std::to_string(r.d_b);
  s += r.is_mds ? ", MDS" : ", not MDS";
  s += " (M = " + r.M.str() + ", bound " + r.singleton_M.str() + ")";
  s += ", " + r.method + (r.certified ? ", certified" : ", NOT certified");
  return s + "\n";
}

DistMethod parse_method(const std::string& m) {
  if (m == "exhaustive") return DistMethod::exhaustive;
  if (m == "certified") return DistMethod::certified;
  return DistMethod::auto_pick;
}

Ordering ordering_from_matrix_cols(const MatGF& m, int b, OrderingMode mode) {
  Ordering o;
  o.field = m.field;
  o.r = mode == OrderingMode::projective ? m.rows - 1 : m.rows;
  o.b = b;
  o.mode = mode;
  for (int c = 0; c < m.cols; ++c) o.points.push_back(m.col(c));
  return o;
}

// ---- construct / order -----------------------------------------------------

struct BuildParams {
  std::string family;
  uint64_t q = 2;
  int n = 0, b = 2, r = 0;
  uint64_t seed = 0;
  uint64_t budget_nodes = 1000000;
  std::vector<std::string> inputs;
};

Ordering build_ordering(const BuildParams& p) {
  FieldPtr f = Field::of_order(p.q);
  if (p.family == "pg2") {
    if (p.b != 2) fail(Errc::bad_params, "the pg2 family is a pair construction (b = 2)");
    return order_pg2(f, p.n);
  }
  if (p.family == "greedy") {
    int r = p.r ? p.r : p.b;
    return greedy_order(r, f, p.b, p.n, p.seed, p.budget_nodes);
  }
  if (p.family == "vectors") return greedy_vectors(p.b, f, p.n, p.seed, p.budget_nodes);
  if (p.family == "tiling") return tile_basis(p.b, f, p.n);
  if (p.family == "concat") {
    if (p.inputs.size() < 2) fail(Errc::bad_params, "concat needs at least two --in ordering files");
    std::vector<Ordering> seqs;
    for (const auto& path : p.inputs) seqs.push_back(parse_ordering(read_text_file(path)));
    return concat_orderings(seqs);
  }
  fail(Errc::bad_params, "unknown ordering family '" + p.family + "'");
}

std::string base_name(const std::string& family, const Ordering& o) {
  return family + "-q" + std::to_string(o.field->q()) + "-b" + std::to_string(o.b) + "-n" +
         std::to_string(o.points.size());
}

int cmd_construct(const BuildParams& p, const CommonOpts& c, DistMethod method,
                  const EnumOptions& eopts) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "construct";
  doc["family"] = p.family;
  std::string text;

  CodeReport report;
  bool have_report = false;

  if (p.family == "constacyclic") {
    Theorem4Result res = build_mds_constacyclic(p.q, p.b, eopts);
    std::string base = "constacyclic-q" + std::to_string(p.q) + "-b" + std::to_string(p.b) +
                       "-n" + std::to_string(res.code.n);
    std::string mpath = write_out(c, base + ".matrix", format_matrix(res.code.code.H));
    doc["matrix"] = mpath;
    doc["generator_poly"] = poly_str(res.code.g);
    text += "wrote " + mpath + "\n";
    text += "g(x): " + poly_str(res.code.g) + "\n";
    if (res.report) {
      report = *res.report;
      have_report = true;
      doc["cert_weight"] = res.cert_weight;
    }
    if (have_report) {
      std::string rpath = write_out(c, base + ".report.json", report_json(report) + "\n");
      doc["report_file"] = rpath;
      doc["report"] = report_obj(report);
      text += "wrote " + rpath + "\n" + report_text(report);
    } else {
      doc["report"] = nullptr;
      text += "certification did not complete within budget\n";
    }
  } else {
    Ordering o = build_ordering(p);
    MatGF h = points_to_parity(o);
    report = mds_check(code_from_parity(h), o.b, method, eopts);
    have_report = true;
    std::string base = base_name(p.family, o);
    std::string opath = write_out(c, base + ".ordering", format_ordering(o));
    std::string mpath = write_out(c, base + ".matrix", format_matrix(h));
    std::string rpath = write_out(c, base + ".report.json", report_json(report) + "\n");
    doc["ordering"] = opath;
    doc["matrix"] = mpath;
    doc["report_file"] = rpath;
    doc["report"] = report_obj(report);
    text += "wrote " + opath + "\n";
    text += "wrote " + mpath + "\n";
    text += "wrote " + rpath + "\n";
    text += report_text(report);
  }

  emit(c, doc, text);
  return (have_report && report.certified) ? kOk : kUncertified;
}

int cmd_order(const BuildParams& p, const CommonOpts& c) {
  Ordering o = build_ordering(p);
  std::string path = write_out(c, base_name(p.family, o) + ".ordering", format_ordering(o));
  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "order";
  doc["ordering"] = path;
  emit(c, doc, "wrote " + path + "\n");
  return kOk;
}

// ---- verify / mindist -------------------------------------------------------

// first token of the first content line decides the file kind
bool looks_like_ordering(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    return line.compare(i, 3, "pg ") == 0;
  }
  return false;
}

int cmd_verify(const std::string& path, int b_flag, const std::string& mode_flag,
               DistMethod method, const EnumOptions& eopts, const CommonOpts& c) {
  std::string textfile = read_text_file(path);
  bool is_ordering = looks_like_ordering(textfile);

  Ordering o;
  if (is_ordering) {
    o = parse_ordering(textfile);
    if (b_flag > 0) o.b = b_flag;
  } else {
    MatGF m = parse_matrix(textfile);
    if (b_flag <= 0) fail(Errc::bad_params, "--b is required for matrix files");
    OrderingMode mode =
        mode_flag == "vector" ? OrderingMode::vector_space : OrderingMode::projective;
    o = ordering_from_matrix_cols(m, b_flag, mode);
  }

  ValidationReport v = validate_ordering(o);
  CodeReport report;
  bool have_report = false;
  if (v.ok) {
    report = mds_check(code_from_parity(points_to_parity(o)), o.b, method, eopts);
    have_report = true;
  }

  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "verify";
  doc["file"] = path;
  doc["validation"] = validation_obj(v);
  doc["report"] = have_report ? report_obj(report) : ordered_json(nullptr);
  std::string text = validation_text(v) + "\n";
  if (have_report) text += report_text(report);
  emit(c, doc, text);

  if (!v.ok) return kError;
  return report.certified ? kOk : kUncertified;
}

int cmd_mindist(const std::string& path, int b, const std::string& role, DistMethod method,
                const EnumOptions& eopts, const CommonOpts& c) {
  MatGF m = parse_matrix(read_text_file(path));
  LinearCode code = role == "generator" ? code_from_generator(m) : code_from_parity(m);
  CodeReport report = method == DistMethod::exhaustive ? min_bdist_exhaustive(code, b, eopts)
                      : method == DistMethod::certified
                          ? min_bdist_certified(code, b, eopts)
                          : mds_check(code, b, method, eopts);

  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "mindist";
  doc["file"] = path;
  doc["report"] = report_obj(report);
  emit(c, doc, report_text(report));
  return report.certified ? kOk : kUncertified;
}

// ---- tables / feasible ------------------------------------------------------

int cmd_tables(const CommonOpts& c) {
  ordered_json entries = ordered_json::array();
  std::string text;
  bool all_pass = true;
  for (const Fixture& f : builtin_fixtures()) {
    FixtureOutcome o = run_fixture(f);
    all_pass = all_pass && o.pass;
    ordered_json e;
    e["name"] = o.name;
    e["pass"] = o.pass;
    e["validates"] = o.validates;
    e["report"] = o.report ? report_obj(*o.report) : ordered_json(nullptr);
    if (!o.detail.empty()) e["detail"] = o.detail;
    entries.push_back(std::move(e));
    text += (o.pass ? "PASS " : "FAIL ") + o.name;
    if (o.report)
      text += "  d_" + std::to_string(o.report->b) + " = " + std::to_string(o.report->d_b) +
              (o.report->is_mds ? ", MDS" : ", not MDS");
    else
      text += "  validation only";
    if (!o.detail.empty()) text += "  (" + o.detail + ")";
    text += "\n";
  }
  text += all_pass ? "all fixtures pass\n" : "FIXTURE MISMATCH\n";

  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "tables";
  doc["all_pass"] = all_pass;
  doc["fixtures"] = std::move(entries);
  emit(c, doc, text);
  return all_pass ? kOk : kError;
}

int cmd_feasible(uint64_t n, uint64_t b, uint64_t q, const CommonOpts& c) {
  bool ok = feasible_2b1(n, b, q);
  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "feasible";
  doc["n"] = n;
  doc["b"] = b;
  doc["q"] = q;
  doc["feasible"] = ok;
  emit(c, doc,
       std::string(ok ? "feasible" : "infeasible") + ": a linear MDS (n, 2b+1) b-symbol code " +
           (ok ? "may exist" : "cannot exist") + " at these parameters\n");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"construct and certify linear MDS b-symbol codes over finite fields"};
  app.require_subcommand(1);

  // construct / order share their parameter set
  BuildParams bp;
  CommonOpts copts_construct, copts_order, copts_verify, copts_mindist, copts_tables,
      copts_feasible;
  EnumOptions eopts;
  std::string method_str = "auto";
  uint64_t budget_words = eopts.budget;
  int w_cap = eopts.w_cap;

  auto add_enum_opts = [&](CLI::App* cmd) {
    cmd->add_option("--budget-words", budget_words, "codeword evaluation budget");
    cmd->add_option("--w-cap", w_cap, "certified method weight cap");
    cmd->add_option("--method", method_str, "distance method")
        ->check(CLI::IsMember({"auto", "exhaustive", "certified"}));
  };

  CLI::App* construct = app.add_subcommand("construct", "build a code family instance and certify it");
  construct->add_option("--family", bp.family, "pg2|greedy|vectors|tiling|concat|constacyclic")
      ->required();
  construct->add_option("--q", bp.q, "field order");
  construct->add_option("--n", bp.n, "length");
  construct->add_option("--b", bp.b, "window size");
  construct->add_option("--r", bp.r, "projective dimension (greedy; defaults to b)");
  construct->add_option("--seed", bp.seed, "search seed");
  construct->add_option("--budget-nodes", bp.budget_nodes, "search node budget");
  construct->add_option("--in", bp.inputs, "input ordering files (concat)");
  add_enum_opts(construct);
  add_common(construct, copts_construct);

  CLI::App* order = app.add_subcommand("order", "build an ordering file");
  order->add_option("--family", bp.family, "pg2|greedy|vectors|tiling|concat")->required();
  order->add_option("--q", bp.q, "field order");
  order->add_option("--n", bp.n, "length");
  order->add_option("--b", bp.b, "window size");
  order->add_option("--r", bp.r, "projective dimension (greedy; defaults to b)");
  order->add_option("--seed", bp.seed, "search seed");
  order->add_option("--budget-nodes", bp.budget_nodes, "search node budget");
  order->add_option("--in", bp.inputs, "input ordering files (concat)");
  add_common(order, copts_order);

  std::string verify_file, verify_mode = "projective";
  int verify_b = 0;
  CLI::App* verify = app.add_subcommand("verify", "validate a matrix or ordering file and certify its code");
  verify->add_option("file", verify_file, "matrix or ordering file")->required();
  verify->add_option("--b", verify_b, "window size (required for matrix files)");
  verify->add_option("--mode", verify_mode, "window mode for matrix files")
      ->check(CLI::IsMember({"projective", "vector"}));
  add_enum_opts(verify);
  add_common(verify, copts_verify);

  std::string mindist_file, mindist_role = "parity";
  int mindist_b = 1;
  CLI::App* mindist = app.add_subcommand("mindist", "minimum b-distance of the code in a matrix file");
  mindist->add_option("file", mindist_file, "matrix file")->required();
  mindist->add_option("--b", mindist_b, "window size")->required();
  mindist->add_option("--role", mindist_role, "how to read the matrix")
      ->check(CLI::IsMember({"parity", "generator"}));
  add_enum_opts(mindist);
  add_common(mindist, copts_mindist);

  CLI::App* tables = app.add_subcommand("tables", "run every built-in reference fixture");
  add_common(tables, copts_tables);

  uint64_t fn = 0, fb = 0, fq = 0;
  CLI::App* feasible = app.add_subcommand("feasible", "parameter window check for (n, 2b+1) codes");
  feasible->add_option("--n", fn, "length")->required();
  feasible->add_option("--b", fb, "window size")->required();
  feasible->add_option("--q", fq, "field order")->required();
  add_common(feasible, copts_feasible);

  std::vector<const char*> argv;
  argv.push_back("bsymb");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  eopts.budget = budget_words;
  eopts.w_cap = w_cap;
  DistMethod method = parse_method(method_str);

  try {
    if (construct->parsed()) return cmd_construct(bp, copts_construct, method, eopts);
    if (order->parsed()) return cmd_order(bp, copts_order);
    if (verify->parsed())
      return cmd_verify(verify_file, verify_b, verify_mode, method, eopts, copts_verify);
    if (mindist->parsed())
      return cmd_mindist(mindist_file, mindist_b, mindist_role, method, eopts, copts_mindist);
    if (tables->parsed()) return cmd_tables(copts_tables);
    if (feasible->parsed()) return cmd_feasible(fn, fb, fq, copts_feasible);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace bsymb::cli
