#include "fgcover/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fgcover/error.hpp"
#include "fgcover/oracle.hpp"

namespace fgc {

namespace {

constexpr std::size_t kOracleCountDepth = 10;
constexpr std::size_t kOracleWordLength = 6;

std::size_t oracle_count_depth(int rank, std::size_t series_depth) {
  std::size_t k = std::min(series_depth, kOracleCountDepth);
  // keep n^k around a million
  double words = 1;
  for (std::size_t i = 0; i < k; ++i) words *= rank;
  while (k > 0 && words > 2e6) {
    words /= rank;
    --k;
  }
  return k;
}

std::size_t oracle_word_length(int rank) {
  std::size_t l = kOracleWordLength;
  double words = 2.0 * rank;
  for (std::size_t i = 1; i < l; ++i) words *= 2.0 * rank - 1;
  while (l > 0 && words > 2e5) {
    words /= 2.0 * rank - 1;
    --l;
  }
  return l;
}

bool prefix_matches(const SeriesPrefix& a, const SeriesPrefix& b, std::size_t k) {
  return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k + 1), b.begin());
}

OracleReport run_oracle(const PartitionSpec& spec, const PartitionVerdict& verdict, const std::vector<MemberData>& members) {
  OracleReport o;
  o.count_depth = oracle_count_depth(spec.rank, kOracleCountDepth);
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    o.counts.push_back(oracle::count_by_enumeration(spec.members[i], o.count_depth));
    if (!prefix_matches(o.counts.back(), series(members[i].genfunc, o.count_depth), o.count_depth))
      o.counts_agree = false;
    const SchreierGraph& g = *spec.members[i].graph;
    if (g.index() <= oracle::kMaxCycleGraph) {
      o.cycle_periods.push_back(oracle::period_by_cycles(g));
      if (*o.cycle_periods.back() != members[i].period) o.periods_agree = false;
    } else {
      o.cycle_periods.push_back(std::nullopt);
    }
  }
  o.word_length = oracle_word_length(spec.rank);
  o.words = oracle::partition_by_words(spec, o.word_length);
  if (o.words.status == PartitionStatus::IsPartition) {
    // no defect up to L: verify_partition must not have found a short one
    o.words_agree = verdict.status == PartitionStatus::IsPartition || verdict.witness->size() > o.word_length;
  } else {
    o.words_agree = o.words.status == verdict.status && o.words.witness == verdict.witness;
  }
  return o;
}

std::vector<unsigned> present_periods(const std::vector<MemberData>& members) {
  std::set<unsigned> hs;
  for (const auto& m : members)
    if (m.period > 1) hs.insert(m.period);
  return {hs.begin(), hs.end()};
}

}  // namespace

bool AnalysisReport::theorems_hold() const {
  if (!is_partition()) return false;
  if (!sum_identity || !sum_identity->holds) return false;
  if (!coefficient_identity || !coefficient_identity->holds) return false;
  if (!theorem1 || theorem1->any_failed()) return false;
  if (!theorem2 || theorem2->any_failed()) return false;
  for (const auto& r : residues)
    if (!r.zero) return false;
  if (oracle && !oracle->consistent()) return false;
  return true;
}

AnalysisReport analyze(const PartitionSpec& spec, const AnalysisOptions& options) {
  spec.validate();
  AnalysisReport r;
  r.spec = spec;
  r.series_depth = options.series_depth;
  r.verdict = verify_partition(spec);
  r.witness_certified = witness_certified(spec, r.verdict);
  r.members = describe_members(spec);
  if (!r.is_partition()) return r;

  r.sum_identity = check_sum_identity(spec.rank, r.members);
  r.coefficient_identity = check_coefficient_identity(spec, options.series_depth);

  std::vector<unsigned> periods;
  std::vector<std::size_t> indices;
  std::vector<RationalFunction> genfuncs;
  for (const auto& m : r.members) {
    periods.push_back(m.period);
    indices.push_back(m.index);
    genfuncs.push_back(m.genfunc);
  }
  r.theorem1 = theorem1_periods(periods);
  r.theorem2 = theorem2_core(periods, indices);

  for (unsigned h : present_periods(r.members)) {
    for (long m = 1; m < static_cast<long>(h); ++m) {
      if (std::gcd(m, static_cast<long>(h)) != 1) continue;
      ResidueEntry e{residue_sum(spec.rank, genfuncs, h, m), false, std::nullopt};
      e.zero = e.sum.value.is_zero();
      if (options.numeric_residues) {
        std::complex<double> total = 0;
        for (std::size_t j : e.sum.attainers) total += residue_numeric(genfuncs[j], h, m, spec.rank);
        e.numeric = total;
      }
      r.residues.push_back(std::move(e));
    }
  }
  r.pole_classes = pole_classes(r.members);
  if (options.oracle) r.oracle = run_oracle(spec, r.verdict, r.members);
  return r;
}

bool SubgroupReport::operator==(const SubgroupReport& other) const {
  if ((graph == nullptr) != (other.graph == nullptr)) return false;
  if (graph && !(*graph == *other.graph)) return false;
  return matrix == other.matrix && period == other.period && char_poly == other.char_poly &&
         zero_multiplicity == other.zero_multiplicity && transversal == other.transversal &&
         genfuncs == other.genfuncs && series == other.series && oracle == other.oracle;
}

SubgroupReport analyze_subgroup(std::shared_ptr<const SchreierGraph> graph, const AnalysisOptions& options) {
  SubgroupReport r;
  r.graph = std::move(graph);
  const SchreierGraph& g = *r.graph;
  r.matrix = transition_matrix(g);
  const SpectralSummary s = char_data(r.matrix);
  r.period = s.period;
  r.char_poly = s.reciprocal_char_poly;
  r.zero_multiplicity = s.zero_multiplicity;
  r.transversal = transversal(g);
  r.genfuncs = genfunc_row(g, SchreierGraph::basepoint());
  for (const auto& f : r.genfuncs) r.series.push_back(series(f, options.series_depth));
  if (options.oracle) {
    SubgroupOracle o;
    o.count_depth = oracle_count_depth(g.rank(), kOracleCountDepth);
    for (Vertex v = 0; v < g.index(); ++v) {
      o.counts.push_back(oracle::count_by_enumeration(Coset{r.graph, v, GroupWord::from_positive(r.transversal.reps[v])},
                                                      o.count_depth));
      if (!prefix_matches(o.counts.back(), series(r.genfuncs[v], o.count_depth), o.count_depth)) o.counts_agree = false;
    }
    if (g.index() <= oracle::kMaxCycleGraph) {
      o.cycle_period = oracle::period_by_cycles(g);
      o.period_agrees = *o.cycle_period == r.period;
    }
    r.oracle = std::move(o);
  }
  return r;
}

namespace {

std::size_t z_hits(const ZCoveringSpec& spec, std::int64_t x) {
  std::size_t hits = 0;
  for (const auto& c : spec.classes())
    if (((x % c.modulus) + c.modulus) % c.modulus == c.residue) ++hits;
  return hits;
}

std::int64_t exponent_sum(const GroupWord& w) {
  std::int64_t s = 0;
  for (const Letter& l : w.letters()) s += l.sign;
  return s;
}

PartitionStatus status_of(std::size_t hits) {
  if (hits == 1) return PartitionStatus::IsPartition;
  return hits == 0 ? PartitionStatus::Gap : PartitionStatus::Overlap;
}

const ClauseFinding* find_clause(const Findings& f, const std::string& clause, long subject) {
  for (const auto& c : f.clauses)
    if (c.clause == clause && c.subject == subject) return &c;
  return nullptr;
}

bool lifted_agreement(const ZAnalysisReport& r) {
  const ZVerdict& z = r.verdict;
  const AnalysisReport& l = r.lifted;
  if (z.status != l.verdict.status) return false;
  if (z.status != PartitionStatus::IsPartition) {
    // each witness is a defect of the same kind in the other model
    if (status_of(z_hits(r.spec, exponent_sum(*l.verdict.witness))) != z.status) return false;
    std::size_t hits = 0;
    const GroupWord power = reduce(std::vector<Letter>(static_cast<std::size_t>(*z.witness), Letter{1, +1}), 1);
    for (const auto& m : l.spec.members) hits += membership(m, power) ? 1 : 0;
    return status_of(hits) == z.status;
  }
  if (!l.theorems_hold()) return false;
  // the period of dZ + r is d, so the general clauses specialise to these
  const Findings& dr = *r.davenport_rado;
  for (const auto& c : dr.clauses) {
    if (c.status == ClauseStatus::NotApplicable) continue;
    const ClauseFinding* g = c.clause == "largest-modulus-repeats" ? find_clause(*l.theorem2, "i", *c.subject)
                                                                   : find_clause(*l.theorem1, "iii", *c.subject);
    if (!g || g->status != c.status) return false;
  }
  return true;
}

}  // namespace

bool ZAnalysisReport::holds() const {
  return verdict.status == PartitionStatus::IsPartition && davenport_rado && !davenport_rado->any_failed() &&
         lifted_agrees;
}

ZAnalysisReport analyze_z(const ZCoveringSpec& spec, const AnalysisOptions& options) {
  ZAnalysisReport r;
  r.spec = spec;
  r.verdict = z_verify(spec);
  if (r.verdict.status == PartitionStatus::IsPartition) r.davenport_rado = davenport_rado_check(spec);
  r.lifted = analyze(lift(spec), options);
  r.lifted_agrees = lifted_agreement(r);
  return r;
}

}  // namespace fgc
