#include "prepcode/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "prepcode/code.hpp"
#include "prepcode/construct.hpp"
#include "prepcode/errors.hpp"
#include "prepcode/graph.hpp"
#include "prepcode/isometry.hpp"
#include "prepcode/kernels.hpp"

namespace prepcode::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

// JSON to `path` if given, else to `out`.
void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

nlohmann::json code_summary(const Code& c) {
  nlohmann::json wd = nlohmann::json::object();
  for (auto [w, k] : weight_distribution(c)) wd[std::to_string(w)] = k;
  nlohmann::json j = {{"n", c.length()}, {"m", c.size()}, {"reduced", c.reduced()}, {"weight_distribution", wd}};
  j["d"] = c.distance() ? nlohmann::json(*c.distance()) : nlohmann::json("?");
  return j;
}

void write_code_to(const Code& c, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_code(out, c);
  } else {
    write_code_file(path, c);
  }
}

struct Options {
  int threads = 0;
  std::uint64_t seed = 1;
  // shared per-subcommand values
  std::string in, a, b, out_path, report, map_path, suite;
  int n = 16, coord = 0, t = 0, k = 0, w = 0, d = 0;
  long imin = 6, imax = 10'000;
  std::optional<std::uint32_t> primpoly;
  bool shuffle = false;
};

int cmd_construct(const Options& o, std::ostream& out) {
  if (o.n == 64) {
    const PreparataSpec spec = PreparataSpec::for_length(64, o.primpoly);
    nlohmann::json stub = {{"format", "prepcode-spec v1"},
                           {"mode", "membership"},
                           {"n", spec.length()},
                           {"m_field", spec.m_field()},
                           {"modulus", spec.field().modulus()},
                           {"log2_size", spec.log2_size()}};
    emit_json(stub, o.out_path, out);
    return kOk;
  }
  const PreparataSpec spec = PreparataSpec::for_length(o.n, o.primpoly);
  const Code c = build_extended_preparata(spec.m_field(), o.primpoly);
  write_code_to(c, o.out_path, out);
  if (!o.out_path.empty()) out << code_summary(c).dump() << "\n";
  return kOk;
}

int cmd_octacode(const Options& o, std::ostream& out) {
  const Code c = build_nr_via_octacode();
  write_code_to(c, o.out_path, out);
  if (!o.out_path.empty()) out << code_summary(c).dump() << "\n";
  return kOk;
}

int cmd_puncture(const Options& o, std::ostream& out) {
  const Code c = puncture(read_code_file(o.in), o.coord);
  write_code_to(c, o.out_path, out);
  if (!o.out_path.empty()) out << code_summary(c).dump() << "\n";
  return kOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const Code c = read_code_file(o.in);
  nlohmann::json j = code_summary(c);
  j["input"] = {{"path", o.in}, {"fnv1a64", file_digest(o.in)}};
  if (c.distance()) {
    const MinDistGraph g = build_mdg(c);
    const auto deg = g.graph.regular_degree();
    j["mdg"] = {{"vertices", g.graph.size()},
                {"edges", g.graph.edge_count()},
                {"regular_degree", deg ? nlohmann::json(*deg) : nlohmann::json(nullptr)}};
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int finish(SuiteReport& report, Clock::time_point start, const std::string& path, std::ostream& out) {
  report.timing_ms = ms_since(start);
  emit_json(report.to_json(), path, out);
  return report.pass() ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const verify::Mode mode = verify::mode_from_string(o.suite);
  SuiteReport report;
  report.command = std::string("verify --suite ") + verify::to_string(mode);
  report.add_input(o.in);
  const Code input = read_code_file(o.in);
  const Code c = reduce(input);
  report.checks.push_back(verify::check_structure(c, mode));
  if (mode == verify::Mode::punctured) {
    report.checks.push_back(verify::check_design(c.words_of_weight(5), c.length(), 2, 5));
    report.checks.push_back(verify::check_corollary1(c));
    report.checks.push_back(verify::check_counting_punctured(c));
  } else {
    report.checks.push_back(verify::check_design(c.words_of_weight(6), c.length(), 3, 6));
    report.checks.push_back(verify::check_counting_extended(c));
  }
  for (auto& check : report.checks) check.params["input_reduced_by_translation"] = !input.reduced();
  return finish(report, start, o.report, out);
}

int cmd_design(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  SuiteReport report;
  report.command = "design";
  report.add_input(o.in);
  const Code c = reduce(read_code_file(o.in));
  report.checks.push_back(verify::check_design(c.words_of_weight(o.k), c.length(), o.t, o.k));
  return finish(report, start, o.report, out);
}

int cmd_mdg(const Options& o, std::ostream& out) {
  const MinDistGraph g = build_mdg(read_code_file(o.in));
  if (o.out_path.empty()) {
    write_dimacs(out, g);
  } else {
    std::ofstream f(o.out_path);
    if (!f) throw IoError("cannot open '" + o.out_path + "' for writing");
    write_dimacs(f, g);
  }
  return kOk;
}

int cmd_wiso(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const Code c1 = read_code_file(o.a);
  const Code c2 = read_code_file(o.b);
  const auto result = weak_isometry(c1, c2, o.shuffle ? std::optional<std::uint64_t>(o.seed) : std::nullopt);
  nlohmann::json j = {{"command", "wiso"},
                      {"inputs", {{{"path", o.a}, {"fnv1a64", file_digest(o.a)}}, {{"path", o.b}, {"fnv1a64", file_digest(o.b)}}}},
                      {"found", result.map.has_value()}};
  if (result.map) {
    const IsometryCheck iso = verify_isometry(*result.map);
    j["isometry"] = iso.isometry;
    if (!o.map_path.empty()) write_text(o.map_path, result.map->to_json().dump() + "\n");
  } else {
    j["reason"] = result.reason;
  }
  j["timing_ms"] = ms_since(start);
  out << j.dump(2) << "\n";
  return result.map ? kOk : kCheckFailed;
}

int cmd_isocheck(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const Code c1 = read_code_file(o.a);
  const Code c2 = read_code_file(o.b);
  const CodewordBijection map = CodewordBijection::from_json(load_json(o.map_path), c1.length(), c2.length());
  if (!map.maps(c1, c2)) throw InputError("map is not a bijection between the two codes");
  const IsometryCheck iso = verify_isometry(map);
  nlohmann::json j = {{"command", "isocheck"}, {"isometry", iso.isometry}};
  if (iso.violation) {
    j["violation"] = {{"x", iso.violation->first.to_hex()},
                      {"y", iso.violation->second.to_hex()},
                      {"distance", iso.distance_before},
                      {"image_distance", iso.distance_after}};
  }
  j["timing_ms"] = ms_since(start);
  out << j.dump(2) << "\n";
  return iso.isometry ? kOk : kCheckFailed;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const Code c1 = read_code_file(o.a);
  const Code c2 = read_code_file(o.b);
  const EquivalenceResult r = find_equivalence(c1, c2);
  nlohmann::json j = {{"command", "equiv"}, {"found", r.automorphism.has_value()}, {"translations_tried", r.translations_tried}};
  if (r.automorphism) {
    j["automorphism"] = r.automorphism->to_json();
    j["translating_word"] = r.translating_word->to_hex();
    if (!o.out_path.empty()) write_text(o.out_path, r.automorphism->to_json().dump() + "\n");
  } else {
    j["reason"] = r.reason;
  }
  j["timing_ms"] = ms_since(start);
  out << j.dump(2) << "\n";
  return r.automorphism ? kOk : kCheckFailed;
}

int cmd_cwmax(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const auto r = verify::max_constant_weight(o.n, o.w, o.d);
  out << r.size << "\n";
  if (!o.report.empty()) {
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& x : r.witness) witness.push_back(x.to_hex());
    nlohmann::json j = {{"command", "cwmax"},
                        {"params", {{"n", o.n}, {"w", o.w}, {"d", o.d}}},
                        {"max_size", r.size},
                        {"witness", witness},
                        {"witness_audited", verify::audit_constant_weight(r.witness, o.n, o.w, o.d)},
                        {"search_nodes", r.nodes},
                        {"timing_ms", ms_since(start)}};
    write_text(o.report, j.dump(2) + "\n");
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  SuiteReport report;
  report.command = "scan";
  report.checks.push_back(verify::critical_scan(o.imin, o.imax));
  return finish(report, start, o.report, out);
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void SuiteReport::add_input(const std::string& path) {
  inputs.push_back({{"path", path}, {"fnv1a64", file_digest(path)}});
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  j["pass"] = pass();
  j["timing_ms"] = timing_ms;
  return j;
}

std::string file_digest(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (f.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Preparata code construction and verification toolkit", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "OpenMP threads (0 = all available)");
  app.add_option("--seed", o.seed, "seed for randomized steps");

  auto* construct = app.add_subcommand("construct", "build the extended Preparata code (n=16) or a membership stub (n=64)");
  construct->add_option("--n", o.n, "code length")->check(CLI::IsMember({16, 64}));
  construct->add_option("--primpoly", o.primpoly, "primitive polynomial bitmask for GF(2^m)");
  construct->add_option("--out", o.out_path, "output file (default stdout)");

  auto* octacode = app.add_subcommand("octacode", "Gray image of the Z4 octacode");
  octacode->add_option("--out", o.out_path, "output file (default stdout)");

  auto* punct = app.add_subcommand("puncture", "delete one coordinate");
  punct->add_option("--in", o.in)->required();
  punct->add_option("--coord", o.coord)->required();
  punct->add_option("--out", o.out_path);

  auto* stats = app.add_subcommand("stats", "code parameters and weight distribution");
  stats->add_option("--in", o.in)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the structural verification suite");
  verify_cmd->add_option("--in", o.in)->required();
  verify_cmd->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"punctured", "extended"}));
  verify_cmd->add_option("--report", o.report, "JSON report path (default stdout)");

  auto* design = app.add_subcommand("design", "t-design check on the weight-k codewords");
  design->add_option("--in", o.in)->required();
  design->add_option("--t", o.t)->required();
  design->add_option("--k", o.k)->required();
  design->add_option("--report", o.report);

  auto* mdg = app.add_subcommand("mdg", "export the minimal distance graph (DIMACS)");
  mdg->add_option("--in", o.in)->required();
  mdg->add_option("--out", o.out_path);

  auto* wiso = app.add_subcommand("wiso", "find a weak isometry (MDG isomorphism)");
  wiso->add_option("--a", o.a)->required();
  wiso->add_option("--b", o.b)->required();
  wiso->add_option("--map-out", o.map_path);
  wiso->add_flag("--shuffle", o.shuffle, "relabel the second graph with --seed before searching");

  auto* isocheck = app.add_subcommand("isocheck", "check that a codeword map is an isometry");
  isocheck->add_option("--a", o.a)->required();
  isocheck->add_option("--b", o.b)->required();
  isocheck->add_option("--map", o.map_path)->required();

  auto* equiv = app.add_subcommand("equiv", "find a space automorphism mapping a onto b");
  equiv->add_option("--a", o.a)->required();
  equiv->add_option("--b", o.b)->required();
  equiv->add_option("--auto-out", o.out_path);

  auto* cwmax = app.add_subcommand("cwmax", "maximum constant-weight code size");
  cwmax->add_option("--n", o.n)->required();
  cwmax->add_option("--w", o.w)->required();
  cwmax->add_option("--d", o.d)->required();
  cwmax->add_option("--report", o.report);

  auto* scan = app.add_subcommand("scan", "integer scan of the weight-change inequalities");
  scan->add_option("--imin", o.imin);
  scan->add_option("--imax", o.imax);
  scan->add_option("--report", o.report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  kernels::set_threads(o.threads);
  try {
    if (*construct) return cmd_construct(o, out);
    if (*octacode) return cmd_octacode(o, out);
    if (*punct) return cmd_puncture(o, out);
    if (*stats) return cmd_stats(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*design) return cmd_design(o, out);
    if (*mdg) return cmd_mdg(o, out);
    if (*wiso) return cmd_wiso(o, out);
    if (*isocheck) return cmd_isocheck(o, out);
    if (*equiv) return cmd_equiv(o, out);
    if (*cwmax) return cmd_cwmax(o, out);
    if (*scan) return cmd_scan(o, out);
  } catch (const std::exception& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace prepcode::cli
