#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fgcover/cli.hpp"
#include "fgcover/io.hpp"

using namespace fgc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FGCOVER_TEST_DATA) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fgcover_test_" + name);
}

}  // namespace

TEST_CASE("subgroup reports") {
  const Run r = run({"subgroup", data("example1_subgroup.json"), "--json"});
  REQUIRE(r.code == cli::kOk);
  const io::Json j = io::Json::parse(r.out);
  CHECK(j["index"] == 4);
  CHECK(j["period"] == 4);
  CHECK(j["char_poly"] == io::Json::array({"1", "0", "0", "0", "-16"}));
  CHECK(io::rational_function_from_json(j["cosets"][0]["genfunc"]) ==
        RationalFunction(IntPolynomial{1}, IntPolynomial{1, 0, 0, 0, -16}));
  CHECK(io::rational_function_from_json(j["cosets"][1]["genfunc"]) ==
        RationalFunction(IntPolynomial{0, 2}, IntPolynomial{1, 0, 0, 0, -16}));

  const Run text = run({"subgroup", data("example1_subgroup.json"), "--oracle"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("index 4, period 4") != std::string::npos);

  const Run whole = run({"subgroup", data("whole_group.json"), "--json"});
  CHECK(whole.code == cli::kOk);
  CHECK(io::Json::parse(whole.out)["index"] == 1);
  CHECK(io::Json::parse(whole.out)["period"] == 1);
}

TEST_CASE("subgroups that are not valid inputs exit with 2") {
  const Run inf = run({"subgroup", data("infinite_index.json")});
  CHECK(inf.code == cli::kNotAPartition);
  CHECK(inf.err.find("infinite index") != std::string::npos);
  CHECK(run({"subgroup", data("not_transitive.json")}).code == cli::kNotAPartition);
}

TEST_CASE("analyze") {
  const Run ok = run({"analyze", data("mod2_partition.json"), "--json", "--oracle"});
  REQUIRE(ok.code == cli::kOk);
  const AnalysisReport r = io::analysis_report_from_json(ok.out);
  REQUIRE(r.members.size() == 2);
  CHECK(r.members[0].period == 2);
  CHECK(r.members[1].period == 2);
  CHECK(r.sum_identity->holds);
  CHECK(r.oracle.has_value());

  const Run gap = run({"analyze", data("mod2_gap.json")});
  CHECK(gap.code == cli::kNotAPartition);
  CHECK(gap.out.find("Gap") != std::string::npos);

  const Run bad = run({"analyze", data("bad_word.json")});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("bad_word.json:5:") != std::string::npos);

  CHECK(run({"analyze", data("example1_subgroup.json")}).code == cli::kInputError);
  CHECK(run({"analyze", data("does_not_exist.json")}).code == cli::kInputError);
}

TEST_CASE("residue-class families") {
  const Run ok = run({"zanalyze", data("z_davenport_rado.json"), "--json"});
  REQUIRE(ok.code == cli::kOk);
  const ZAnalysisReport z = io::z_report_from_json(ok.out);
  CHECK(z.lifted_agrees);
  CHECK_FALSE(z.davenport_rado->any_failed());
  // analyze dispatches residue-class files too
  CHECK(run({"analyze", data("z_davenport_rado.json")}).code == cli::kOk);
  CHECK(run({"zanalyze", data("z_gap.json")}).code == cli::kNotAPartition);
}

TEST_CASE("--out writes the JSON report") {
  const auto path = scratch("report.json");
  std::filesystem::remove(path);
  const Run r = run({"analyze", data("mod2_partition.json"), "--out", path.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("all checks pass") != std::string::npos);
  const std::string written = slurp(path);
  CHECK(written == run({"analyze", data("mod2_partition.json"), "--json"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("generate is deterministic and closes the loop") {
  const Run a = run({"generate", "--rank", "2", "--depth", "3", "--seed", "7"});
  const Run b = run({"generate", "--rank", "2", "--depth", "3", "--seed", "7"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"generate", "--rank", "2", "--depth", "3", "--seed", "8"}).out);

  const auto path = scratch("generated.json");
  CHECK(run({"generate", "--rank", "2", "--depth", "3", "--seed", "7", "--out", path.string()}).code == cli::kOk);
  CHECK(slurp(path) == a.out);
  CHECK(run({"analyze", path.string()}).code == cli::kOk);
  std::filesystem::remove(path);

  const PartitionSpec zero = io::parse_partition(run({"generate", "--rank", "2", "--depth", "0", "--seed", "1"}).out);
  CHECK(zero.members.size() == 1);
  const PartitionSpec one = io::parse_partition(run({"generate", "--rank", "2", "--depth", "1", "--seed", "7"}).out);
  CHECK(one.members.size() >= 2);
  CHECK(verify_partition(one).status == PartitionStatus::IsPartition);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"generate", "--rank", "0", "--depth", "1", "--seed", "1"}).code == cli::kInputError);
  CHECK(run({"subgroup"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kOk);
}
