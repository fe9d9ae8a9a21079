#pragma once

// Shared test inputs.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fgcover/partition.hpp"
#include "fgcover/schreier.hpp"

namespace fixtures {

inline std::vector<fgc::GroupWord> words(const std::vector<std::string>& text, int rank) {
  std::vector<fgc::GroupWord> out;
  for (const auto& t : text) out.push_back(fgc::parse_word(t, rank));
  return out;
}

inline std::shared_ptr<const fgc::SchreierGraph> graph_of(int rank, const std::vector<std::string>& gens) {
  return std::make_shared<const fgc::SchreierGraph>(fgc::fold(rank, words(gens, rank)));
}

// <a^4, b^4, ab^-1, a^2b^-2, a^3b^-3> in F_2: index 4, a and b both advance a 4-cycle.
inline std::shared_ptr<const fgc::SchreierGraph> example1() {
  return graph_of(2, {"aaaa", "bbbb", "aB", "aaBB", "aaaBBB"});
}

// Kernel of F_2 -> Z/2 sending a, b to 1: even-length words.
inline std::shared_ptr<const fgc::SchreierGraph> mod2_kernel() {
  return graph_of(2, {"aa", "ab", "ba"});
}

inline std::shared_ptr<const fgc::SchreierGraph> whole(int rank) {
  std::vector<std::vector<fgc::Vertex>> perms(rank, std::vector<fgc::Vertex>{0});
  return std::make_shared<const fgc::SchreierGraph>(fgc::SchreierGraph::from_permutations(rank, perms));
}

// dZ as a subgroup of F_1.
inline std::shared_ptr<const fgc::SchreierGraph> cycle(std::size_t d) {
  std::vector<fgc::Vertex> p(d);
  for (std::size_t v = 0; v < d; ++v) p[v] = (v + 1) % d;
  return std::make_shared<const fgc::SchreierGraph>(fgc::SchreierGraph::from_permutations(1, {p}));
}

inline fgc::PartitionSpec spec(int rank, std::vector<std::pair<std::shared_ptr<const fgc::SchreierGraph>, std::string>> m) {
  fgc::PartitionSpec s{rank, {}};
  for (auto& [g, rep] : m) s.members.push_back(fgc::Coset::of(g, fgc::parse_word(rep, rank)));
  return s;
}

inline fgc::PartitionSpec example1_partition() {
  auto h = example1();
  return spec(2, {{h, ""}, {h, "a"}, {h, "aa"}, {h, "aaa"}});
}

inline fgc::PartitionSpec mod2_partition() {
  auto h = mod2_kernel();
  return spec(2, {{h, ""}, {h, "a"}});
}

// The property-test corpus: generate_partition over n = 1..3, depths 0..3.
inline std::vector<fgc::PartitionSpec> corpus(std::uint64_t seeds = 2) {
  std::vector<fgc::PartitionSpec> out;
  for (int n = 1; n <= 3; ++n)
    for (std::size_t depth = 0; depth <= 3; ++depth)
      for (std::uint64_t seed = 1; seed <= seeds; ++seed) out.push_back(fgc::generate_partition(n, depth, seed));
  return out;
}

// Distinct subgroups appearing in the corpus.
inline std::vector<std::shared_ptr<const fgc::SchreierGraph>> corpus_graphs(std::uint64_t seeds = 2) {
  std::vector<std::shared_ptr<const fgc::SchreierGraph>> out;
  for (const auto& spec : corpus(seeds))
    for (const auto& m : spec.members)
      if (std::none_of(out.begin(), out.end(), [&](const auto& g) { return *g == *m.graph; })) out.push_back(m.graph);
  return out;
}

}  // namespace fixtures
