#pragma once

// End-to-end analyses behind the CLI: one report per input, every exact
// number kept exact.

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "fgcover/partition.hpp"
#include "fgcover/spectral.hpp"
#include "fgcover/zcover.hpp"

namespace fgc {

struct AnalysisOptions {
  std::size_t series_depth = 20;
  bool oracle = false;
  bool numeric_residues = false;
};

struct ResidueEntry {
  ResidueSum sum;
  bool zero = false;
  std::optional<std::complex<double>> numeric;  // floating-point sum, with --numeric-residues

  bool operator==(const ResidueEntry&) const = default;
};

/// Brute-force cross-checks of one partition.
struct OracleReport {
  std::size_t count_depth = 0;
  std::vector<SeriesPrefix> counts;             // per member, by enumeration
  bool counts_agree = true;                     // against the series of p_i
  std::vector<std::optional<unsigned>> cycle_periods;  // per member, when d_i <= 8
  bool periods_agree = true;
  std::size_t word_length = 0;
  PartitionVerdict words;                       // partition_by_words up to word_length
  bool words_agree = true;                      // no contradiction with verify_partition

  bool consistent() const { return counts_agree && periods_agree && words_agree; }

  bool operator==(const OracleReport&) const = default;
};

struct AnalysisReport {
  PartitionSpec spec;
  std::size_t series_depth = 0;
  PartitionVerdict verdict;
  bool witness_certified = true;
  std::vector<MemberData> members;

  // Populated for genuine partitions only.
  std::optional<SumIdentity> sum_identity;
  std::optional<CoefficientIdentity> coefficient_identity;
  std::optional<Findings> theorem1;
  std::optional<Findings> theorem2;
  std::vector<ResidueEntry> residues;
  std::vector<PoleClass> pole_classes;
  std::optional<OracleReport> oracle;

  bool is_partition() const { return verdict.status == PartitionStatus::IsPartition; }
  /// Every identity and clause instance passes, and the oracle (if run) agrees.
  bool theorems_hold() const;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const PartitionSpec& spec, const AnalysisOptions& options = {});

struct SubgroupOracle {
  std::size_t count_depth = 0;
  std::vector<SeriesPrefix> counts;  // per target coset
  bool counts_agree = true;
  std::optional<unsigned> cycle_period;
  bool period_agrees = true;

  bool operator==(const SubgroupOracle&) const = default;
};

struct SubgroupReport {
  std::shared_ptr<const SchreierGraph> graph;
  TransitionMatrix matrix;
  unsigned period = 1;
  IntPolynomial char_poly;
  std::size_t zero_multiplicity = 0;
  Transversal transversal;
  std::vector<RationalFunction> genfuncs;  // p_{1f}, f over the cosets
  std::vector<SeriesPrefix> series;
  std::optional<SubgroupOracle> oracle;

  bool operator==(const SubgroupReport& other) const;
};

SubgroupReport analyze_subgroup(std::shared_ptr<const SchreierGraph> graph, const AnalysisOptions& options = {});

struct ZAnalysisReport {
  ZCoveringSpec spec;
  ZVerdict verdict;
  std::optional<Findings> davenport_rado;  // genuine partitions only
  AnalysisReport lifted;                    // the same family as cosets of F_1
  bool lifted_agrees = false;

  bool holds() const;

  bool operator==(const ZAnalysisReport&) const = default;
};

ZAnalysisReport analyze_z(const ZCoveringSpec& spec, const AnalysisOptions& options = {});

}  // namespace fgc
