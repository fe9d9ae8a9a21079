#include "fgcover/partition.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fgcover/error.hpp"

namespace fgc {

std::string to_string(PartitionStatus status) {
  switch (status) {
    case PartitionStatus::IsPartition: return "IsPartition";
    case PartitionStatus::Overlap: return "Overlap";
    case PartitionStatus::Gap: return "Gap";
  }
  return "?";
}

std::string to_string(ClauseStatus status) {
  switch (status) {
    case ClauseStatus::Pass: return "pass";
    case ClauseStatus::Fail: return "fail";
    case ClauseStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool Findings::any_failed() const {
  return std::any_of(clauses.begin(), clauses.end(), [](const ClauseFinding& c) { return c.status == ClauseStatus::Fail; });
}

void PartitionSpec::validate() const {
  if (rank < 1) throw std::invalid_argument("partition rank must be >= 1");
  if (members.empty()) throw std::invalid_argument("partition needs at least one member");
  for (const Coset& c : members) {
    if (!c.graph) throw std::invalid_argument("partition member without a graph");
    if (c.graph->rank() != rank) throw std::invalid_argument("partition member over a different rank");
    if (c.vertex >= c.graph->index()) throw std::invalid_argument("partition member vertex out of range");
  }
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex x : v) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

// Distinct subgroups among the members, and each member's slot.
struct SharedGraphs {
  std::vector<const SchreierGraph*> graphs;
  std::vector<std::size_t> slot;
};

SharedGraphs share_graphs(const PartitionSpec& spec) {
  SharedGraphs out;
  for (const Coset& m : spec.members) {
    std::size_t s = 0;
    while (s < out.graphs.size() && !(*out.graphs[s] == *m.graph)) ++s;
    if (s == out.graphs.size()) out.graphs.push_back(m.graph.get());
    out.slot.push_back(s);
  }
  return out;
}

std::vector<Letter> signed_letters(int rank) {
  std::vector<Letter> out;
  for (int g = 1; g <= rank; ++g) {
    out.push_back({g, +1});
    out.push_back({g, -1});
  }
  return out;
}

}  // namespace

PartitionVerdict verify_partition(const PartitionSpec& spec, std::size_t max_states) {
  spec.validate();
  const SharedGraphs shared = share_graphs(spec);
  const std::vector<Letter> letters = signed_letters(spec.rank);

  std::vector<std::vector<Vertex>> states{std::vector<Vertex>(shared.graphs.size(), SchreierGraph::basepoint())};
  std::vector<std::size_t> parent{0};
  std::vector<Letter> via{Letter{}};
  std::unordered_map<std::vector<Vertex>, std::size_t, VectorHash> seen{{states.front(), 0}};

  auto witness_of = [&](std::size_t idx) {
    std::vector<Letter> word;
    for (std::size_t i = idx; i != 0; i = parent[i]) word.push_back(via[i]);
    std::reverse(word.begin(), word.end());
    return reduce(word, spec.rank);
  };

  for (std::size_t head = 0; head < states.size(); ++head) {
    // defect check in discovery order
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < spec.members.size(); ++i)
      if (states[head][shared.slot[i]] == spec.members[i].vertex) hits.push_back(i);
    if (hits.size() != 1) {
      PartitionVerdict v;
      v.status = hits.empty() ? PartitionStatus::Gap : PartitionStatus::Overlap;
      v.witness = witness_of(head);
      if (hits.size() >= 2) v.overlap = std::make_pair(hits[0], hits[1]);
      v.states_explored = states.size();
      return v;
    }
    for (const Letter& l : letters) {
      std::vector<Vertex> next(states[head].size());
      for (std::size_t s = 0; s < next.size(); ++s) next[s] = shared.graphs[s]->act(states[head][s], l);
      if (seen.contains(next)) continue;
      if (states.size() >= max_states)
        throw BudgetExceeded("coset product orbit exceeds " + std::to_string(max_states) + " tuples");
      seen.emplace(next, states.size());
      states.push_back(std::move(next));
      parent.push_back(head);
      via.push_back(l);
    }
  }
  PartitionVerdict v;
  v.states_explored = states.size();
  return v;
}

bool witness_certified(const PartitionSpec& spec, const PartitionVerdict& verdict) {
  if (verdict.status == PartitionStatus::IsPartition) return !verdict.witness.has_value();
  if (!verdict.witness) return false;
  std::size_t hits = 0;
  for (const Coset& m : spec.members) hits += membership(m, *verdict.witness) ? 1 : 0;
  if (verdict.status == PartitionStatus::Gap) return hits == 0;
  if (!verdict.overlap) return false;
  const auto [i, j] = *verdict.overlap;
  return i != j && i < spec.members.size() && j < spec.members.size() && hits >= 2 &&
         membership(spec.members[i], *verdict.witness) && membership(spec.members[j], *verdict.witness);
}

std::vector<MemberData> describe_members(const PartitionSpec& spec) {
  spec.validate();
  const SharedGraphs shared = share_graphs(spec);

  struct GraphData {
    SpectralSummary summary;
    Resolvent resolvent;
  };
  std::vector<std::future<GraphData>> jobs;
  for (const SchreierGraph* g : shared.graphs)
    jobs.push_back(std::async(std::launch::async, [g] {
      const TransitionMatrix a = transition_matrix(*g);
      return GraphData{char_data(a), resolvent(a)};
    }));
  std::vector<GraphData> data;
  for (auto& j : jobs) data.push_back(j.get());

  std::vector<MemberData> out;
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    const GraphData& g = data[shared.slot[i]];
    MemberData m;
    m.index = spec.members[i].graph->index();
    m.period = g.summary.period;
    m.char_poly = g.summary.reciprocal_char_poly;
    m.zero_multiplicity = g.summary.zero_multiplicity;
    m.genfunc = genfunc(g.resolvent, SchreierGraph::basepoint(), spec.members[i].vertex);
    out.push_back(std::move(m));
  }
  return out;
}

SumIdentity check_sum_identity(int rank, std::span<const MemberData> members) {
  RationalFunction total;
  for (const MemberData& m : members) total += m.genfunc;
  SumIdentity out;
  out.residual = total - RationalFunction::geometric(rank);
  out.holds = out.residual.is_zero();
  return out;
}

SumIdentity check_sum_identity(const PartitionSpec& spec) {
  const auto members = describe_members(spec);
  return check_sum_identity(spec.rank, members);
}

CoefficientIdentity check_coefficient_identity(const PartitionSpec& spec, std::size_t max_degree) {
  spec.validate();
  CoefficientIdentity out;
  out.totals.assign(max_degree + 1, mpz_class(0));
  for (const Coset& m : spec.members) {
    const SeriesPrefix a = series_from_matrix(*m.graph, SchreierGraph::basepoint(), m.vertex, max_degree);
    for (std::size_t k = 0; k <= max_degree; ++k) out.totals[k] += a[k];
  }
  mpz_class power = 1;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (out.totals[k] != power && !out.first_failure) out.first_failure = k;
    power *= spec.rank;
  }
  out.holds = !out.first_failure.has_value();
  return out;
}

namespace {

std::vector<std::size_t> attainers_of(std::span<const unsigned> periods, unsigned h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < periods.size(); ++i)
    if (periods[i] == h) out.push_back(i);
  return out;
}

bool properly_divides_another(std::span<const unsigned> periods, unsigned h) {
  return std::any_of(periods.begin(), periods.end(), [h](unsigned p) { return p != h && p % h == 0; });
}

// Periods h > 1 that are maximal or properly divide no other period, ascending.
std::vector<unsigned> non_dividing_periods(std::span<const unsigned> periods) {
  std::set<unsigned> out;
  for (unsigned h : periods)
    if (h > 1 && !properly_divides_another(periods, h)) out.insert(h);
  return {out.begin(), out.end()};
}

void require_partition(const PartitionSpec& spec) {
  const PartitionVerdict v = verify_partition(spec);
  if (v.status != PartitionStatus::IsPartition)
    throw NotAPartition("cosets do not partition F_n (" + to_string(v.status) + ")");
}

std::vector<unsigned> periods_of(const PartitionSpec& spec) {
  std::vector<unsigned> out;
  for (const Coset& m : spec.members) out.push_back(period(*m.graph));
  return out;
}

}  // namespace

Findings theorem1_periods(std::span<const unsigned> periods) {
  Findings f;
  const unsigned hmax = periods.empty() ? 1 : *std::max_element(periods.begin(), periods.end());

  ClauseFinding first{"i", static_cast<long>(hmax), ClauseStatus::NotApplicable, {}, {}};
  if (hmax > 1) {
    first.members = attainers_of(periods, hmax);
    first.status = first.members.size() >= 2 ? ClauseStatus::Pass : ClauseStatus::Fail;
    first.detail = "maximal period attained " + std::to_string(first.members.size()) + " times";
  } else {
    first.detail = "maximal period is 1";
  }
  f.clauses.push_back(std::move(first));

  const auto candidates = non_dividing_periods(periods);
  if (candidates.empty())
    f.clauses.push_back({"ii", std::nullopt, ClauseStatus::NotApplicable, {}, "no period > 1"});
  for (unsigned h : candidates) {
    ClauseFinding c{"ii", static_cast<long>(h), ClauseStatus::Fail, attainers_of(periods, h), {}};
    if (c.members.size() >= 2) c.status = ClauseStatus::Pass;
    c.detail = "period properly divides no other period; attained " + std::to_string(c.members.size()) + " times";
    f.clauses.push_back(std::move(c));
  }

  for (std::size_t i = 0; i < periods.size(); ++i) {
    ClauseFinding c{"iii", static_cast<long>(i), ClauseStatus::Fail, {i}, {}};
    if (periods[i] == 1) {
      c.status = ClauseStatus::Pass;
      c.detail = "period 1 divides every period";
    } else {
      for (std::size_t j = 0; j < periods.size(); ++j) {
        if (j != i && periods[j] % periods[i] == 0) {
          c.status = ClauseStatus::Pass;
          c.members.push_back(j);
          c.detail = periods[j] == periods[i] ? "equal period" : "divides period " + std::to_string(periods[j]);
          break;
        }
      }
      if (c.status == ClauseStatus::Fail) c.detail = "period divides no other member's period";
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Findings theorem1_check(const PartitionSpec& spec) {
  require_partition(spec);
  const auto periods = periods_of(spec);
  return theorem1_periods(periods);
}

Findings theorem2_core(std::span<const unsigned> periods, std::span<const std::size_t> indices) {
  if (periods.size() != indices.size()) throw std::invalid_argument("period and index lists differ in length");
  Findings f;
  const std::size_t dmax = indices.empty() ? 1 : *std::max_element(indices.begin(), indices.end());

  ClauseFinding first{"i", static_cast<long>(dmax), ClauseStatus::NotApplicable, {}, {}};
  std::vector<std::size_t> largest;
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (indices[i] == dmax) largest.push_back(i);
  const bool attains = std::any_of(largest.begin(), largest.end(), [&](std::size_t i) { return periods[i] == dmax; });
  if (dmax <= 1) {
    first.detail = "largest index is 1";
  } else if (!attains) {
    first.detail = "no member of largest index has period equal to its index";
  } else {
    first.members = largest;
    first.status = largest.size() >= 2 ? ClauseStatus::Pass : ClauseStatus::Fail;
    first.detail = "largest index attained " + std::to_string(largest.size()) + " times";
  }
  f.clauses.push_back(std::move(first));

  const auto candidates = non_dividing_periods(periods);
  if (candidates.empty())
    f.clauses.push_back({"ii", std::nullopt, ClauseStatus::NotApplicable, {}, "no period > 1"});
  for (unsigned h : candidates) {
    const auto in_class = attainers_of(periods, h);
    std::size_t dk = 0;
    for (std::size_t j : in_class) dk = std::max(dk, indices[j]);
    std::vector<std::size_t> top;
    for (std::size_t j : in_class)
      if (indices[j] == dk) top.push_back(j);
    ClauseFinding c{"ii", static_cast<long>(h), ClauseStatus::NotApplicable, top, {}};
    if (dk != h) {
      c.detail = "largest index " + std::to_string(dk) + " in the period class exceeds the period";
    } else {
      c.status = top.size() >= 2 ? ClauseStatus::Pass : ClauseStatus::Fail;
      c.detail = "index " + std::to_string(dk) + " attained " + std::to_string(top.size()) + " times in the period class";
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Findings theorem2_check(const PartitionSpec& spec) {
  require_partition(spec);
  const auto periods = periods_of(spec);
  std::vector<std::size_t> indices;
  for (const Coset& m : spec.members) indices.push_back(m.graph->index());
  return theorem2_core(periods, indices);
}

ResidueSum residue_sum(int rank, std::span<const RationalFunction> genfuncs, unsigned h, long m) {
  if (h == 0) throw std::invalid_argument("root order must be >= 1");
  if (std::gcd(m, static_cast<long>(h)) != 1) throw std::invalid_argument("residue sums need gcd(m, h) = 1");
  ResidueSum out{h, m, CycloNumber(h), {}};
  for (std::size_t j = 0; j < genfuncs.size(); ++j) {
    if (pole_order(genfuncs[j], h, m, rank) == 0) continue;
    out.attainers.push_back(j);
    out.value += residue_simple(genfuncs[j], h, m, rank);
  }
  return out;
}

ResidueSum residue_sum_check(const PartitionSpec& spec, unsigned h, long m) {
  const auto members = describe_members(spec);
  std::vector<RationalFunction> fs;
  for (const auto& md : members) fs.push_back(md.genfunc);
  return residue_sum(spec.rank, fs, h, m);
}

std::vector<IntPolynomial> coprime_basis(std::span<const IntPolynomial> polys) {
  std::vector<IntPolynomial> basis;
  for (const IntPolynomial& p : polys) {
    if (p.degree() < 1) continue;
    auto sf = exact_quotient(p, gcd(p, p.derivative()));
    basis.push_back(sf->primitive_part());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        IntPolynomial g = gcd(basis[i], basis[j]).primitive_part();
        if (g.degree() < 1) continue;
        IntPolynomial a = *exact_quotient(basis[i], g);
        IntPolynomial b = *exact_quotient(basis[j], g);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (IntPolynomial* q : {&g, &a, &b})
          if (q->degree() >= 1) basis.push_back(q->primitive_part());
        changed = true;
      }
    }
  }
  // Normalise to constant term +1 where possible, then order by (degree, coefficients).
  for (auto& b : basis)
    if (b.coefficient(0) < 0) b = -b;
  std::sort(basis.begin(), basis.end(), [](const IntPolynomial& x, const IntPolynomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    const auto cx = x.coefficients();
    const auto cy = y.coefficients();
    return std::lexicographical_compare(cx.begin(), cx.end(), cy.begin(), cy.end());
  });
  return basis;
}

std::vector<PoleClass> pole_classes(std::span<const MemberData> members) {
  std::vector<IntPolynomial> dens;
  for (const auto& m : members) dens.push_back(m.genfunc.denominator());
  std::vector<PoleClass> out;
  for (IntPolynomial& factor : coprime_basis(dens)) {
    PoleClass c;
    c.factor = factor;
    for (std::size_t j = 0; j < members.size(); ++j) {
      IntPolynomial rest = members[j].genfunc.denominator();
      std::size_t order = 0;
      while (auto q = exact_quotient(rest, factor)) {
        rest = std::move(*q);
        ++order;
      }
      if (order > 0) {
        c.attainers.push_back(j);
        c.orders.push_back(order);
      }
    }
    if (c.attainers.size() == 2) {
      const MemberData& mj = members[c.attainers[0]];
      const MemberData& mk = members[c.attainers[1]];
      c.zero_multiplicities = std::make_pair(mj.zero_multiplicity, mk.zero_multiplicity);
      const bool both_invertible = mj.zero_multiplicity == 0 && mk.zero_multiplicity == 0;
      const bool both_at_period = mj.period == mk.period && mj.zero_multiplicity == mj.period &&
                                  mk.zero_multiplicity == mk.period;
      c.assertion_emitted = both_invertible || both_at_period;
      c.indices_equal = mj.index == mk.index;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PoleClass> lemma8_diagnostic(const PartitionSpec& spec) {
  require_partition(spec);
  return pole_classes(describe_members(spec));
}

SchreierGraph intersect(const SchreierGraph& h, const SchreierGraph& k) {
  if (h.rank() != k.rank()) throw std::invalid_argument("intersecting subgroups of different ranks");
  const int rank = h.rank();
  std::map<std::pair<Vertex, Vertex>, Vertex> id{{{0, 0}, 0}};
  std::vector<std::pair<Vertex, Vertex>> states{{0, 0}};
  std::vector<std::vector<Vertex>> perms(rank);
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (int g = 1; g <= rank; ++g) {
      const std::pair<Vertex, Vertex> next{h.act(states[head].first, g), k.act(states[head].second, g)};
      auto [it, fresh] = id.try_emplace(next, states.size());
      if (fresh) states.push_back(next);
      perms[g - 1].resize(states.size());
      perms[g - 1][head] = it->second;
    }
  }
  for (auto& p : perms) p.resize(states.size());
  return SchreierGraph::from_permutations(rank, perms, 0);
}

SchreierGraph kernel_graph(const std::vector<std::vector<int>>& images) {
  if (images.empty()) throw std::invalid_argument("kernel graph needs at least one generator image");
  const std::size_t points = images.front().size();
  std::vector<int> identity(points);
  std::iota(identity.begin(), identity.end(), 0);
  std::map<std::vector<int>, Vertex> id{{identity, 0}};
  std::vector<std::vector<int>> elements{identity};
  std::vector<std::vector<Vertex>> perms(images.size());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t g = 0; g < images.size(); ++g) {
      // right multiplication: apply elements[head], then images[g]
      std::vector<int> next(points);
      for (std::size_t p = 0; p < points; ++p) next[p] = images[g][elements[head][p]];
      auto [it, fresh] = id.try_emplace(next, elements.size());
      if (fresh) elements.push_back(next);
      perms[g].resize(elements.size());
      perms[g][head] = it->second;
    }
  }
  for (auto& p : perms) p.resize(elements.size());
  return SchreierGraph::from_permutations(static_cast<int>(images.size()), perms, 0);
}

}  // namespace fgc
