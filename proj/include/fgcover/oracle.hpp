#pragma once

// Brute-force ground truth for cross-checking the fast paths. Each oracle
// has a hard cap and throws BudgetExceeded instead of truncating.

#include <cstddef>
#include <vector>

#include "fgcover/partition.hpp"
#include "fgcover/ratfunc.hpp"
#include "fgcover/schreier.hpp"

namespace fgc::oracle {

inline constexpr std::size_t kMaxCountLength = 14;
inline constexpr std::size_t kMaxCycleGraph = 8;
inline constexpr std::size_t kMaxWordLength = 7;

/// a_k = number of positive words of length k in the coset, k = 0..K, by
/// classifying every word. K <= 14.
SeriesPrefix count_by_enumeration(const Coset& coset, std::size_t max_length);

/// Per-member count rows.
std::vector<SeriesPrefix> count_table(const PartitionSpec& spec, std::size_t max_length);

/// gcd of the lengths of all simple directed cycles. index() <= 8.
unsigned period_by_cycles(const SchreierGraph& graph);

/// Classifies all reduced words of length <= L (shortlex) into the members
/// and reports the first word lying in zero or several of them. L <= 7.
/// IsPartition here only means "no defect up to length L".
PartitionVerdict partition_by_words(const PartitionSpec& spec, std::size_t max_length);

}  // namespace fgc::oracle
