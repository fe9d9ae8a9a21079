#include <doctest.h>

#include "fgcover/error.hpp"
#include "fgcover/io.hpp"
#include "fixtures.hpp"

using namespace fgc;
using fgc::io::Json;

namespace {

// Runs `f` and returns the ParseError position it raised.
template <class F>
std::pair<std::size_t, std::size_t> error_at(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no ParseError raised");
  return {0, 0};
}

}  // namespace

TEST_CASE("detect_kind") {
  CHECK(io::detect_kind(R"({"rank": 2, "generators": ["aa"]})") == io::InputKind::Subgroup);
  CHECK(io::detect_kind(R"({"rank": 1, "permutations": [[1]]})") == io::InputKind::Subgroup);
  CHECK(io::detect_kind(R"({"rank": 2, "members": []})") == io::InputKind::Partition);
  CHECK(io::detect_kind(R"({"moduli": [[2, 0]]})") == io::InputKind::ZFamily);
  CHECK_THROWS_AS(io::detect_kind(R"({"rank": 2})"), ParseError);
  CHECK_THROWS_AS(io::detect_kind("[1, 2]"), ParseError);
  CHECK_THROWS_AS(io::detect_kind("{"), ParseError);
}

TEST_CASE("subgroup files") {
  const auto g = io::parse_subgroup(R"({"rank": 2, "generators": ["aaaa", "bbbb", "aB", "aaBB", "aaaBBB"]})");
  CHECK(*g == *fixtures::example1());
  const auto p = io::parse_subgroup(R"({"rank": 2, "permutations": [[2, 3, 4, 1], [2, 3, 4, 1]], "basepoint": 1})");
  CHECK(*p == *fixtures::example1());
  // one-line images are 1-based; the basepoint defaults to 1
  const auto c = io::parse_subgroup(R"({"rank": 1, "permutations": [[3, 1, 2]]})");
  CHECK(*c == *fixtures::cycle(3));

  const Json j = io::subgroup_to_json(*fixtures::example1());
  CHECK(j["rank"] == 2);
  CHECK(j["basepoint"] == 1);
  CHECK(j["permutations"][0] == Json::array({2, 3, 4, 1}));
  CHECK(*io::parse_subgroup(j.dump()) == *fixtures::example1());

  CHECK_THROWS_AS(io::parse_subgroup(R"({"rank": 2, "generators": ["a"]})"), InfiniteIndex);
  CHECK_THROWS_AS(io::parse_subgroup(R"({"rank": 2, "permutations": [[2, 1, 4, 3], [1, 2, 3, 4]]})"), NotTransitive);
}

TEST_CASE("partition files round-trip") {
  for (const auto& spec : fixtures::corpus()) {
    const std::string text = io::dump(io::partition_to_json(spec));
    const PartitionSpec back = io::parse_partition(text);
    CHECK(back == spec);
    for (std::size_t i = 0; i < spec.members.size(); ++i) CHECK(back.members[i].rep == spec.members[i].rep);
    CHECK(io::dump(io::partition_to_json(back)) == text);
  }
  // members with equal subgroups share one graph after parsing
  const PartitionSpec e = io::parse_partition(io::dump(io::partition_to_json(fixtures::example1_partition())));
  CHECK(e.members[0].graph == e.members[3].graph);

  const Json meta{{"note", "x"}};
  const Json j = io::partition_to_json(fixtures::mod2_partition(), meta);
  CHECK(j.begin().key() == "rank");
  CHECK(j["note"] == "x");
  CHECK(j["members"][1]["coset_rep"] == "a");
  CHECK_FALSE(j["members"][0]["subgroup"].contains("rank"));
}

TEST_CASE("partition members may use generators") {
  const PartitionSpec s = io::parse_partition(R"({
    "rank": 2,
    "members": [
      {"subgroup": {"generators": ["aa", "ab", "ba"]}, "coset_rep": ""},
      {"subgroup": {"generators": ["aa", "ab", "ba"]}, "coset_rep": "a"}
    ]
  })");
  CHECK(s == fixtures::mod2_partition());
}

TEST_CASE("Z families round-trip") {
  const ZCoveringSpec z({{2, 0}, {4, 1}, {4, 3}});
  const Json j = io::z_family_to_json(z);
  CHECK(j["moduli"] == Json::array({Json::array({2, 0}), Json::array({4, 1}), Json::array({4, 3})}));
  CHECK(io::parse_z_family(j.dump()) == z);
  CHECK(io::parse_z_family(R"({"moduli": [[4, -1], [4, 1], [2, 0]]})").classes()[0] == ResidueClass{4, 3});
}

TEST_CASE("exact values round-trip") {
  const IntPolynomial big(std::vector<mpz_class>{mpz_class("98765432109876543210"), -1, 0, 7});
  CHECK(io::to_json(big) == Json::array({"98765432109876543210", "-1", "0", "7"}));
  CHECK(io::polynomial_from_json(io::to_json(big)) == big);

  const RationalFunction f(IntPolynomial{0, 2}, IntPolynomial{1, 0, -4});
  const Json fj = io::to_json(f);
  CHECK(fj["num"] == Json::array({"0", "2"}));
  CHECK(fj["den"] == Json::array({"1", "0", "-4"}));
  CHECK(io::rational_function_from_json(fj) == f);

  const CycloNumber c(6, {mpq_class(1, 3), mpq_class(-5, 2)});
  const Json cj = io::to_json(c);
  CHECK(cj["h"] == 6);
  CHECK(cj["coeffs"] == Json::array({"1/3", "-5/2"}));
  CHECK(io::cyclo_from_json(cj) == c);

  CHECK_THROWS_AS(io::polynomial_from_json(Json::array({"1", "one"})), ParseError);
}

TEST_CASE("analysis reports round-trip") {
  AnalysisOptions opts;
  opts.oracle = true;
  opts.numeric_residues = true;
  std::vector<PartitionSpec> specs = fixtures::corpus(1);
  const auto h = fixtures::mod2_kernel();
  specs.push_back(fixtures::spec(2, {{h, ""}, {h, ""}}));
  specs.push_back(fixtures::spec(2, {{h, ""}}));
  for (const auto& spec : specs) {
    const AnalysisReport r = analyze(spec, opts);
    const std::string text = io::dump(io::report_to_json(r));
    const AnalysisReport back = io::analysis_report_from_json(text);
    CHECK(back == r);
    CHECK(io::dump(io::report_to_json(back)) == text);
    CHECK_FALSE(io::to_text(r).empty());
  }

  const SubgroupReport s = analyze_subgroup(fixtures::example1(), opts);
  const std::string st = io::dump(io::report_to_json(s));
  CHECK(io::subgroup_report_from_json(st) == s);

  const ZAnalysisReport z = analyze_z(ZCoveringSpec({{2, 0}, {4, 1}, {4, 3}}), opts);
  const std::string zt = io::dump(io::report_to_json(z));
  CHECK(io::z_report_from_json(zt) == z);
  CHECK(io::report_to_json(z)["kind"] == "z-analysis");
}

TEST_CASE("report JSON uses 1-based member numbers") {
  const AnalysisReport r = analyze(fixtures::mod2_partition());
  const Json j = io::report_to_json(r);
  CHECK(j["kind"] == "partition-analysis");
  const AnalysisReport twice = analyze(fixtures::spec(2, {{fixtures::mod2_kernel(), ""}, {fixtures::mod2_kernel(), ""}}));
  const Json t = io::report_to_json(twice);
  CHECK(t["verdict"]["overlap"] == Json::array({1, 2}));
}

TEST_CASE("parse errors carry line and column") {
  // malformed JSON: the column of the offending byte
  CHECK(error_at([] { io::parse_partition("{\n  \"rank\": 2,\n  \"members\": [,]\n}"); }).first == 3);
  // a bad word points at its string
  const std::string bad = "{\n  \"rank\": 2,\n  \"members\": [\n    {\"subgroup\": {\"generators\": [\"aa\", \"ab\", \"ba\"]}, \"coset_rep\": \"aZ9\"}\n  ]\n}";
  const auto pos = error_at([&] { io::parse_partition(bad); });
  CHECK(pos.first == 4);
  CHECK(pos.second == bad.substr(bad.find("\n    {") + 1).find("\"aZ9\"") + 1);
  // missing field and wrong types
  CHECK(error_at([] { io::parse_subgroup("{\"rank\": 2}"); }).first == 1);
  CHECK(error_at([] { io::parse_subgroup("{\n\"rank\": \"two\", \"generators\": []}"); }) ==
        std::pair<std::size_t, std::size_t>{2, 9});
  CHECK_THROWS_AS(io::parse_z_family(R"({"moduli": [[0, 1]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_z_family(R"({"moduli": [[2]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_partition(R"({"rank": 2, "members": []})"), ParseError);
  CHECK_THROWS_AS(io::parse_subgroup(R"({"rank": 0, "generators": []})"), ParseError);
}
