#include "fgcover/zcover.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fgcover/error.hpp"

namespace fgc {

ZCoveringSpec::ZCoveringSpec(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("residue-class family must be nonempty");
  for (auto& c : classes_) {
    if (c.modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    c.residue = ((c.residue % c.modulus) + c.modulus) % c.modulus;
  }
}

ZVerdict z_verify(const ZCoveringSpec& spec, std::int64_t max_period) {
  ZVerdict out;
  for (const auto& c : spec.classes()) {
    out.period = std::lcm(out.period, c.modulus);
    if (out.period > max_period)
      throw BudgetExceeded("lcm of the moduli exceeds " + std::to_string(max_period));
  }
  for (std::int64_t x = 0; x < out.period; ++x) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < spec.size() && hits.size() < 2; ++i) {
      const auto& c = spec.classes()[i];
      if (x % c.modulus == c.residue) hits.push_back(i);
    }
    if (hits.size() == 1) continue;
    out.status = hits.empty() ? PartitionStatus::Gap : PartitionStatus::Overlap;
    out.witness = x;
    if (hits.size() == 2) out.overlap = std::make_pair(hits[0], hits[1]);
    return out;
  }
  return out;
}

Coset z_to_schreier(std::int64_t modulus, std::int64_t residue) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (residue < 0 || residue >= modulus) throw std::invalid_argument("residue must lie in 0..modulus-1");
  std::vector<Vertex> cycle(static_cast<std::size_t>(modulus));
  for (std::size_t v = 0; v < cycle.size(); ++v) cycle[v] = (v + 1) % cycle.size();
  auto graph = std::make_shared<const SchreierGraph>(SchreierGraph::from_permutations(1, {cycle}));
  std::vector<Letter> rep(static_cast<std::size_t>(residue), Letter{1, +1});
  return Coset::of(std::move(graph), reduce(rep, 1));
}

PartitionSpec lift(const ZCoveringSpec& spec) {
  PartitionSpec out{1, {}};
  std::vector<std::shared_ptr<const SchreierGraph>> by_modulus;
  for (const auto& c : spec.classes()) {
    Coset coset = z_to_schreier(c.modulus, c.residue);
    for (const auto& g : by_modulus)
      if (*g == *coset.graph) coset.graph = g;
    if (std::find(by_modulus.begin(), by_modulus.end(), coset.graph) == by_modulus.end())
      by_modulus.push_back(coset.graph);
    out.members.push_back(std::move(coset));
  }
  return out;
}

Findings davenport_rado_check(const ZCoveringSpec& spec) {
  const ZVerdict v = z_verify(spec);
  if (v.status != PartitionStatus::IsPartition)
    throw NotAPartition("residue classes do not partition Z (" + to_string(v.status) + ")");
  const auto& cs = spec.classes();
  std::int64_t dmax = 1;
  for (const auto& c : cs) dmax = std::max(dmax, c.modulus);

  Findings f;
  ClauseFinding largest{"largest-modulus-repeats", static_cast<long>(dmax), ClauseStatus::NotApplicable, {}, {}};
  if (dmax == 1) {
    largest.detail = "largest modulus is 1";
  } else {
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs[i].modulus == dmax) largest.members.push_back(i);
    largest.status = largest.members.size() >= 2 ? ClauseStatus::Pass : ClauseStatus::Fail;
    largest.detail = "largest modulus appears " + std::to_string(largest.members.size()) + " times";
  }
  f.clauses.push_back(std::move(largest));

  for (std::size_t i = 0; i < cs.size(); ++i) {
    ClauseFinding c{"divides-another", static_cast<long>(i), ClauseStatus::Fail, {i}, {}};
    if (cs.size() == 1) {
      c.status = ClauseStatus::NotApplicable;
      c.detail = "single class";
    } else {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j != i && cs[j].modulus % cs[i].modulus == 0) {
          c.status = ClauseStatus::Pass;
          c.members.push_back(j);
          c.detail = "divides modulus " + std::to_string(cs[j].modulus);
          break;
        }
      }
      if (c.status == ClauseStatus::Fail) c.detail = "modulus divides no other modulus";
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

ZCoveringSpec generate_z_covering(std::size_t depth, std::uint64_t seed, std::int64_t max_modulus) {
  std::vector<ResidueClass> classes{{1, 0}};
  std::mt19937_64 rng(seed);
  for (std::size_t step = 0; step < depth; ++step) {
    const std::size_t first = rng() % classes.size();
    const std::int64_t first_factor = (rng() % 2 == 0) ? 2 : 3;
    bool split = false;
    for (std::size_t t = 0; t < classes.size() && !split; ++t) {
      const std::size_t i = (first + t) % classes.size();
      for (std::int64_t k : {first_factor, 5 - first_factor}) {
        const ResidueClass c = classes[i];
        if (c.modulus * k > max_modulus) continue;
        std::vector<ResidueClass> pieces;
        for (std::int64_t j = 0; j < k; ++j) pieces.push_back({c.modulus * k, c.residue + j * c.modulus});
        classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(i));
        classes.insert(classes.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
        split = true;
        break;
      }
    }
    if (!split) break;
  }
  return ZCoveringSpec(std::move(classes));
}

}  // namespace fgc
