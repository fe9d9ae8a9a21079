#include "fgcover/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fgcover/analysis.hpp"
#include "fgcover/error.hpp"
#include "fgcover/io.hpp"

namespace fgc::cli {

namespace {

struct RunConfig {
  std::string input;
  std::size_t series_depth = 20;
  bool oracle = false;
  bool numeric_residues = false;
  bool json = false;
  std::string out_path;
  int rank = 2;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << content;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

AnalysisOptions options_of(const RunConfig& c) { return {c.series_depth, c.oracle, c.numeric_residues}; }

// Text to stdout; JSON to --out, or to stdout instead of the text with --json.
void emit(const RunConfig& c, const std::string& text, const io::Json& json, std::ostream& out) {
  const std::string rendered = io::dump(json);
  if (!c.out_path.empty()) write_file(c.out_path, rendered);
  out << (c.json ? rendered : text);
}

int cmd_subgroup(const RunConfig& c, std::ostream& out) {
  const auto graph = io::parse_subgroup(read_file(c.input));
  const SubgroupReport r = analyze_subgroup(graph, options_of(c));
  emit(c, io::to_text(r), io::report_to_json(r), out);
  if (r.oracle && !(r.oracle->counts_agree && r.oracle->period_agrees)) return kCheckFailed;
  return kOk;
}

int cmd_zanalyze(const RunConfig& c, const std::string& text, std::ostream& out) {
  const ZAnalysisReport r = analyze_z(io::parse_z_family(text), options_of(c));
  emit(c, io::to_text(r), io::report_to_json(r), out);
  if (r.verdict.status != PartitionStatus::IsPartition) return kNotAPartition;
  return r.holds() ? kOk : kCheckFailed;
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  const std::string text = read_file(c.input);
  switch (io::detect_kind(text)) {
    case io::InputKind::ZFamily: return cmd_zanalyze(c, text, out);
    case io::InputKind::Subgroup:
      throw ParseError("'" + c.input + "' is a subgroup record; use the subgroup command", 1, 1);
    case io::InputKind::Partition: break;
  }
  const AnalysisReport r = analyze(io::parse_partition(text), options_of(c));
  emit(c, io::to_text(r), io::report_to_json(r), out);
  if (!r.is_partition()) return kNotAPartition;
  return r.theorems_hold() ? kOk : kCheckFailed;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const PartitionSpec spec = generate_partition(c.rank, c.depth, c.seed);
  io::Json meta;
  meta["generated"] = {{"rank", c.rank}, {"depth", c.depth}, {"seed", c.seed}, {"catalogue_version", kCatalogueVersion}};
  const std::string rendered = io::dump(io::partition_to_json(spec, meta));
  if (c.out_path.empty())
    out << rendered;
  else
    write_file(c.out_path, rendered);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Schreier automata, generating functions and coset-partition checks for free groups", "fgcover"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--series-depth", c.series_depth, "number of series coefficients checked")->capture_default_str();
    sub->add_flag("--oracle", c.oracle, "cross-check with brute-force enumeration");
    sub->add_flag("--numeric-residues", c.numeric_residues, "also report floating-point residue sums");
    sub->add_option("--out", c.out_path, "write the JSON report here");
    sub->add_flag("--json", c.json, "print the JSON report instead of text");
  };
  CLI::App* subgroup = app.add_subcommand("subgroup", "index, period, det(I - zA) and generating functions of a subgroup");
  subgroup->add_option("file", c.input, "subgroup JSON file")->required();
  add_common(subgroup);
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "verify a coset partition and check every identity on it");
  analyze_cmd->add_option("file", c.input, "partition or residue-class JSON file")->required();
  add_common(analyze_cmd);
  CLI::App* zanalyze = app.add_subcommand("zanalyze", "verify a residue-class family of the integers");
  zanalyze->add_option("file", c.input, "residue-class JSON file")->required();
  add_common(zanalyze);
  CLI::App* generate = app.add_subcommand("generate", "write a deterministic corpus partition");
  generate->add_option("--rank", c.rank, "free rank n")->required()->check(CLI::Range(1, 8));
  generate->add_option("--depth", c.depth, "number of refinement steps")->required();
  generate->add_option("--seed", c.seed, "generator seed")->required();
  generate->add_option("--out", c.out_path, "output path (default: stdout)");

  std::vector<std::string> argv_storage{"fgcover"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (subgroup->parsed()) return cmd_subgroup(c, out);
    if (analyze_cmd->parsed()) return cmd_analyze(c, out);
    if (zanalyze->parsed()) return cmd_zanalyze(c, read_file(c.input), out);
    return cmd_generate(c, out);
  } catch (const ParseError& e) {
    err << c.input;
    if (e.line() > 0) err << ":" << e.line() << ":" << e.column();
    err << ": error: " << e.what() << "\n";
    return kInputError;
  } catch (const InfiniteIndex& e) {
    err << c.input << ": infinite index: " << e.what() << "\n";
    return kNotAPartition;
  } catch (const NotTransitive& e) {
    err << c.input << ": not transitive: " << e.what() << "\n";
    return kNotAPartition;
  } catch (const std::exception& e) {
    err << (c.input.empty() ? std::string("fgcover") : c.input) << ": error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace fgc::cli
