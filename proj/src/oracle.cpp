#include "fgcover/oracle.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "fgcover/error.hpp"

namespace fgc::oracle {

SeriesPrefix count_by_enumeration(const Coset& coset, std::size_t max_length) {
  if (max_length > kMaxCountLength)
    throw BudgetExceeded("word counts are capped at length " + std::to_string(kMaxCountLength));
  const SchreierGraph& g = *coset.graph;
  const int n = g.rank();
  SeriesPrefix out(max_length + 1, mpz_class(0));
  double total = 0;
  for (std::size_t k = 0; k <= max_length; ++k) total += std::pow(static_cast<double>(n), static_cast<double>(k));
  if (total > 5e8) throw BudgetExceeded("too many positive words to enumerate");

  for (std::size_t k = 0; k <= max_length; ++k) {
    std::vector<int> word(k, 1);
    unsigned long count = 0;
    while (true) {
      Vertex v = SchreierGraph::basepoint();
      for (int letter : word) v = g.act(v, letter);
      if (v == coset.vertex) ++count;
      std::size_t pos = k;
      while (pos > 0 && word[pos - 1] == n) word[--pos] = 1;
      if (pos == 0) break;
      ++word[pos - 1];
    }
    out[k] = count;
  }
  return out;
}

std::vector<SeriesPrefix> count_table(const PartitionSpec& spec, std::size_t max_length) {
  std::vector<SeriesPrefix> rows;
  for (const Coset& m : spec.members) rows.push_back(count_by_enumeration(m, max_length));
  return rows;
}

unsigned period_by_cycles(const SchreierGraph& graph) {
  const std::size_t d = graph.index();
  if (d > kMaxCycleGraph) throw BudgetExceeded("cycle enumeration is capped at " + std::to_string(kMaxCycleGraph) + " vertices");
  std::vector<std::set<Vertex>> succ(d);
  for (Vertex v = 0; v < d; ++v)
    for (int g = 1; g <= graph.rank(); ++g) succ[v].insert(graph.act(v, g));

  // Each simple cycle is enumerated once from its smallest vertex.
  unsigned h = 0;
  std::vector<bool> on_path(d, false);
  auto dfs = [&](auto&& self, Vertex start, Vertex v, unsigned length) -> void {
    for (Vertex w : succ[v]) {
      if (w == start) {
        h = std::gcd(h, length);
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        self(self, start, w, length + 1);
        on_path[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < d; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s, 1);
    on_path[s] = false;
  }
  return h;
}

PartitionVerdict partition_by_words(const PartitionSpec& spec, std::size_t max_length) {
  if (max_length > kMaxWordLength)
    throw BudgetExceeded("word classification is capped at length " + std::to_string(kMaxWordLength));
  spec.validate();
  PartitionVerdict out;
  for (const GroupWord& w : enumerate_reduced(spec.rank, max_length)) {
    ++out.states_explored;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < spec.members.size(); ++i)
      if (membership(spec.members[i], w)) hits.push_back(i);
    if (hits.size() == 1) continue;
    out.status = hits.empty() ? PartitionStatus::Gap : PartitionStatus::Overlap;
    out.witness = w;
    if (hits.size() >= 2) out.overlap = std::make_pair(hits[0], hits[1]);
    return out;
  }
  return out;
}

}  // namespace fgc::oracle
