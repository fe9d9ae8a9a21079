// Refinement corpus for property tests and the `generate` command.
//
// Catalogue (version kCatalogueVersion), in this order:
//   for m = 2..6: every image vector (e_1..e_n) in Z_m^n with gcd(e, m) = 1,
//                 e_1 varying slowest, mapping generator i to rotation by e_i;
//   (n >= 2 only) every tuple in S_3^n generating S_3, S_3 listed in
//                 lexicographic order of one-line notation, first entry slowest.

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fgcover/partition.hpp"

namespace fgc {

namespace {

using Images = std::vector<std::vector<int>>;

std::vector<int> rotation(int m, int shift) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = (i + shift) % m;
  return p;
}

// Odometer over tuples in {0..base-1}^n, first entry slowest.
template <class F>
void for_each_tuple(int n, int base, F&& f) {
  std::vector<int> t(n, 0);
  while (true) {
    f(t);
    int pos = n;
    while (pos > 0 && t[pos - 1] == base - 1) t[--pos] = 0;
    if (pos == 0) return;
    ++t[pos - 1];
  }
}

std::vector<Images> catalogue(int rank) {
  std::vector<Images> out;
  for (int m = 2; m <= 6; ++m) {
    for_each_tuple(rank, m, [&](const std::vector<int>& e) {
      int g = m;
      for (int x : e) g = std::gcd(g, x);
      if (g != 1) return;
      Images images;
      for (int x : e) images.push_back(rotation(m, x));
      out.push_back(std::move(images));
    });
  }
  if (rank >= 2) {
    std::vector<std::vector<int>> s3;
    std::vector<int> p{0, 1, 2};
    do s3.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for_each_tuple(rank, 6, [&](const std::vector<int>& t) {
      Images images;
      for (int x : t) images.push_back(s3[x]);
      if (kernel_graph(images).index() == 6) out.push_back(std::move(images));
    });
  }
  return out;
}

}  // namespace

PartitionSpec refine(const PartitionSpec& spec, std::size_t member, std::shared_ptr<const SchreierGraph> subgroup) {
  spec.validate();
  if (member >= spec.members.size()) throw std::out_of_range("refined member out of range");
  const Coset& coset = spec.members[member];
  auto k = *subgroup == intersect(*coset.graph, *subgroup)
               ? std::move(subgroup)
               : std::make_shared<const SchreierGraph>(intersect(*coset.graph, *subgroup));

  // cosets of K inside H alpha: vertices of K lying over alpha's vertex
  const Transversal t = transversal(*k);
  std::vector<Coset> pieces;
  for (Vertex u = 0; u < k->index(); ++u) {
    GroupWord rep = GroupWord::from_positive(t.reps[u]);
    if (resolve(*coset.graph, rep) == coset.vertex) pieces.push_back(Coset{k, u, std::move(rep)});
  }
  PartitionSpec out{spec.rank, {}};
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    if (i == member)
      out.members.insert(out.members.end(), pieces.begin(), pieces.end());
    else
      out.members.push_back(spec.members[i]);
  }
  return out;
}

PartitionSpec generate_partition(int rank, std::size_t depth, std::uint64_t seed, std::size_t max_index) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  auto whole = std::make_shared<const SchreierGraph>(
      SchreierGraph::from_permutations(rank, std::vector<std::vector<Vertex>>(rank, std::vector<Vertex>{0})));
  PartitionSpec spec{rank, {Coset::of(whole, GroupWord{})}};
  if (depth == 0) return spec;

  const std::vector<Images> entries = catalogue(rank);
  std::vector<std::shared_ptr<const SchreierGraph>> kernels(entries.size());
  std::mt19937_64 rng(seed);

  for (std::size_t step = 0; step < depth; ++step) {
    const std::size_t first_member = rng() % spec.members.size();
    const std::size_t first_entry = rng() % entries.size();
    bool refined = false;
    for (std::size_t mi = 0; mi < spec.members.size() && !refined; ++mi) {
      const std::size_t target = (first_member + mi) % spec.members.size();
      const Coset& coset = spec.members[target];
      for (std::size_t ci = 0; ci < entries.size() && !refined; ++ci) {
        const std::size_t e = (first_entry + ci) % entries.size();
        if (!kernels[e]) kernels[e] = std::make_shared<const SchreierGraph>(kernel_graph(entries[e]));
        auto k = std::make_shared<const SchreierGraph>(intersect(*coset.graph, *kernels[e]));
        if (k->index() == coset.graph->index() || k->index() > max_index) continue;
        spec = refine(spec, target, k);
        refined = true;
      }
    }
    if (!refined) break;
  }
  return spec;
}

}  // namespace fgc
