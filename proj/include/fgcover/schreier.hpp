#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fgcover/words.hpp"

namespace fgc {

using Vertex = std::size_t;

/// Schreier coset graph of a finite-index subgroup H of F_n.
///
/// Vertices are 0..index()-1 and stand for the right cosets of H. The
/// basepoint (the coset H itself) is always vertex 0, and the remaining
/// vertices are numbered in order of discovery by a breadth-first search
/// over the positive letters a, b, c, ... in that order. Two graphs are
/// therefore equal exactly when they describe the same subgroup.
///
/// Each generator acts by a permutation of the vertex set: the a-edge leaving
/// Hg ends at Hga.
class SchreierGraph {
public:
  /// Builds a graph from one permutation per generator (perms[i][v] is the
  /// image of v under generator i+1). The result is relabelled canonically
  /// with `basepoint` mapped to vertex 0.
  ///
  /// Throws std::invalid_argument for malformed permutations and
  /// NotTransitive if some vertex is unreachable from the basepoint.
  static SchreierGraph from_permutations(int rank, const std::vector<std::vector<Vertex>>& perms,
                                         Vertex basepoint = 0);

  int rank() const noexcept { return rank_; }
  std::size_t index() const noexcept { return forward_.empty() ? 0 : forward_.front().size(); }
  static constexpr Vertex basepoint() noexcept { return 0; }

  /// Image of `v` under the positive generator `generator` (1-based).
  Vertex act(Vertex v, int generator) const { return forward_[generator - 1][v]; }
  Vertex act_inverse(Vertex v, int generator) const { return backward_[generator - 1][v]; }
  Vertex act(Vertex v, Letter l) const { return l.sign > 0 ? act(v, l.generator) : act_inverse(v, l.generator); }

  std::span<const Vertex> permutation(int generator) const { return forward_[generator - 1]; }

  bool operator==(const SchreierGraph& other) const { return rank_ == other.rank_ && forward_ == other.forward_; }

private:
  SchreierGraph(int rank, std::vector<std::vector<Vertex>> forward);

  int rank_ = 1;
  std::vector<std::vector<Vertex>> forward_;
  std::vector<std::vector<Vertex>> backward_;
};

/// Stallings folding of the wedge of generator loops. Returns the Schreier
/// graph of <generators>; throws InfiniteIndex if the folded core graph is
/// not complete.
SchreierGraph fold(int rank, std::span<const GroupWord> generators);

/// Vertex of the coset H w.
Vertex resolve(const SchreierGraph& graph, const GroupWord& w);
/// End of the path labelled `w` starting at `from`.
Vertex resolve(const SchreierGraph& graph, Vertex from, const GroupWord& w);
Vertex resolve(const SchreierGraph& graph, Vertex from, const PositiveWord& w);

/// A right coset H alpha, identified by its vertex in the Schreier graph of H.
struct Coset {
  std::shared_ptr<const SchreierGraph> graph;
  Vertex vertex = 0;
  GroupWord rep;

  /// The coset H rep.
  static Coset of(std::shared_ptr<const SchreierGraph> graph, GroupWord rep);

  bool operator==(const Coset& other) const {
    return vertex == other.vertex && *graph == *other.graph;
  }
};

/// True iff w lies in H rep.
bool membership(const Coset& coset, const GroupWord& w);

struct Transversal {
  /// reps[v] is the shortlex-least positive word leading from the basepoint to v.
  std::vector<PositiveWord> reps;

  bool operator==(const Transversal&) const = default;
};

Transversal transversal(const SchreierGraph& graph);

}  // namespace fgc
