#include "fgcover/schreier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "fgcover/error.hpp"

namespace fgc {

namespace {

constexpr Vertex kUnset = static_cast<Vertex>(-1);

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

struct Edge {
  std::size_t from;
  int generator;
  std::size_t to;
};

}  // namespace

SchreierGraph::SchreierGraph(int rank, std::vector<std::vector<Vertex>> forward)
    : rank_(rank), forward_(std::move(forward)), backward_(forward_.size()) {
  for (std::size_t g = 0; g < forward_.size(); ++g) {
    backward_[g].assign(forward_[g].size(), 0);
    for (Vertex v = 0; v < forward_[g].size(); ++v) backward_[g][forward_[g][v]] = v;
  }
}

SchreierGraph SchreierGraph::from_permutations(int rank, const std::vector<std::vector<Vertex>>& perms,
                                               Vertex basepoint) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (perms.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("expected " + std::to_string(rank) + " permutations, got " +
                                std::to_string(perms.size()));
  const std::size_t d = perms.front().size();
  if (d == 0) throw std::invalid_argument("permutations must act on at least one point");
  for (const auto& p : perms) {
    if (p.size() != d) throw std::invalid_argument("permutations act on different point sets");
    std::vector<bool> seen(d, false);
    for (Vertex image : p) {
      if (image >= d || seen[image]) throw std::invalid_argument("generator action is not a bijection");
      seen[image] = true;
    }
  }
  if (basepoint >= d) throw std::invalid_argument("basepoint out of range");

  // Canonical relabelling: BFS over positive letters from the basepoint.
  std::vector<Vertex> label(d, kUnset);
  std::vector<Vertex> order{basepoint};
  label[basepoint] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& p : perms) {
      const Vertex next = p[order[head]];
      if (label[next] == kUnset) {
        label[next] = order.size();
        order.push_back(next);
      }
    }
  }
  if (order.size() != d)
    throw NotTransitive("only " + std::to_string(order.size()) + " of " + std::to_string(d) +
                        " points are reachable from the basepoint");

  std::vector<std::vector<Vertex>> forward(perms.size(), std::vector<Vertex>(d));
  for (std::size_t g = 0; g < perms.size(); ++g)
    for (Vertex old = 0; old < d; ++old) forward[g][label[old]] = label[perms[g][old]];
  return SchreierGraph(rank, std::move(forward));
}

SchreierGraph fold(int rank, std::span<const GroupWord> generators) {
  Alphabet alphabet(rank);
  std::vector<Edge> edges;
  std::size_t vertex_count = 1;
  for (const GroupWord& w : generators) {
    const auto letters = w.letters();
    std::size_t current = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const Letter l = letters[i];
      if (l.generator < 1 || l.generator > rank)
        throw InvalidLetter("generator " + std::to_string(l.generator) + " outside 1.." + std::to_string(rank));
      const std::size_t next = (i + 1 == letters.size()) ? 0 : vertex_count++;
      if (l.sign > 0)
        edges.push_back({current, l.generator, next});
      else
        edges.push_back({next, l.generator, current});
      current = next;
    }
  }

  DisjointSets sets(vertex_count);
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<std::size_t, int>, std::size_t> out;
    std::map<std::pair<std::size_t, int>, std::size_t> in;
    for (const Edge& e : edges) {
      const std::size_t from = sets.find(e.from);
      const std::size_t to = sets.find(e.to);
      auto [oit, ofresh] = out.try_emplace({from, e.generator}, to);
      if (!ofresh && sets.unite(oit->second, to)) changed = true;
      auto [iit, ifresh] = in.try_emplace({sets.find(e.to), e.generator}, sets.find(e.from));
      if (!ifresh && sets.unite(iit->second, sets.find(e.from))) changed = true;
    }
  }

  std::vector<Vertex> dense(vertex_count, kUnset);
  std::size_t d = 0;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (sets.find(v) == v) dense[v] = d++;

  std::vector<std::vector<Vertex>> perms(rank, std::vector<Vertex>(d, kUnset));
  for (const Edge& e : edges) perms[e.generator - 1][dense[sets.find(e.from)]] = dense[sets.find(e.to)];
  for (const auto& p : perms)
    for (Vertex image : p)
      if (image == kUnset)
        throw InfiniteIndex("folded graph is not complete: the subgroup has infinite index");
  return SchreierGraph::from_permutations(rank, perms, dense[sets.find(0)]);
}

Vertex resolve(const SchreierGraph& graph, Vertex from, const GroupWord& w) {
  Vertex v = from;
  for (const Letter& l : w.letters()) {
    if (l.generator < 1 || l.generator > graph.rank())
      throw InvalidLetter("generator " + std::to_string(l.generator) + " outside 1.." + std::to_string(graph.rank()));
    v = graph.act(v, l);
  }
  return v;
}

Vertex resolve(const SchreierGraph& graph, Vertex from, const PositiveWord& w) {
  Vertex v = from;
  for (int g : w.generators()) {
    if (g < 1 || g > graph.rank())
      throw InvalidLetter("generator " + std::to_string(g) + " outside 1.." + std::to_string(graph.rank()));
    v = graph.act(v, g);
  }
  return v;
}

Vertex resolve(const SchreierGraph& graph, const GroupWord& w) {
  return resolve(graph, SchreierGraph::basepoint(), w);
}

Coset Coset::of(std::shared_ptr<const SchreierGraph> graph, GroupWord rep) {
  if (!graph) throw std::invalid_argument("coset needs a graph");
  const Vertex v = resolve(*graph, rep);
  return Coset{std::move(graph), v, std::move(rep)};
}

bool membership(const Coset& coset, const GroupWord& w) { return resolve(*coset.graph, w) == coset.vertex; }

Transversal transversal(const SchreierGraph& graph) {
  const std::size_t d = graph.index();
  std::vector<Vertex> parent(d, kUnset);
  std::vector<int> via(d, 0);
  std::deque<Vertex> queue{SchreierGraph::basepoint()};
  parent[SchreierGraph::basepoint()] = SchreierGraph::basepoint();
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (int g = 1; g <= graph.rank(); ++g) {
      const Vertex next = graph.act(v, g);
      if (parent[next] == kUnset) {
        parent[next] = v;
        via[next] = g;
        queue.push_back(next);
      }
    }
  }
  Transversal out;
  out.reps.reserve(d);
  for (Vertex v = 0; v < d; ++v) {
    std::vector<int> letters;
    for (Vertex u = v; u != SchreierGraph::basepoint(); u = parent[u]) letters.push_back(via[u]);
    std::reverse(letters.begin(), letters.end());
    out.reps.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace fgc
