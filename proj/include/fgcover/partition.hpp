#pragma once

// Coset partitions of F_n: exact verification and the period/index
// repetition checks that every genuine partition must satisfy.
//
// Member indices are 0-based throughout the C++ interface.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fgcover/cyclo.hpp"
#include "fgcover/ratfunc.hpp"
#include "fgcover/schreier.hpp"

namespace fgc {

struct PartitionSpec {
  int rank = 1;
  std::vector<Coset> members;  // H_i alpha_i

  /// Throws std::invalid_argument if empty or if a member's graph has another rank.
  void validate() const;
  bool operator==(const PartitionSpec& other) const = default;
};

enum class PartitionStatus { IsPartition, Overlap, Gap };

std::string to_string(PartitionStatus status);

struct PartitionVerdict {
  PartitionStatus status = PartitionStatus::IsPartition;
  std::optional<GroupWord> witness;                           // Overlap and Gap
  std::optional<std::pair<std::size_t, std::size_t>> overlap;  // first two members containing the witness
  std::size_t states_explored = 0;

  bool operator==(const PartitionVerdict&) const = default;
};

/// Orbit of the tuple of basepoints under the componentwise action of the
/// letters and their inverses. Every orbit tuple must hit exactly one accept
/// vertex. The witness is the shortlex-least shortest word reaching the first
/// defective tuple. Members sharing a subgroup share one coordinate.
/// Throws BudgetExceeded beyond `max_states` tuples.
PartitionVerdict verify_partition(const PartitionSpec& spec, std::size_t max_states = 20'000'000);

/// Re-checks a verdict's witness by direct membership tests.
bool witness_certified(const PartitionSpec& spec, const PartitionVerdict& verdict);

/// Per-member characteristic data. Graph-level work is shared between
/// members with equal subgroups and run concurrently across subgroups.
struct MemberData {
  std::size_t index = 0;  // d_i
  unsigned period = 1;    // h_i
  IntPolynomial char_poly;  // det(I - z A_i)
  std::size_t zero_multiplicity = 0;
  RationalFunction genfunc;  // p_i(z)

  bool operator==(const MemberData&) const = default;
};

std::vector<MemberData> describe_members(const PartitionSpec& spec);

struct SumIdentity {
  bool holds = false;
  RationalFunction residual;  // sum p_i - 1/(1 - nz)

  bool operator==(const SumIdentity&) const = default;
};

SumIdentity check_sum_identity(const PartitionSpec& spec);
SumIdentity check_sum_identity(int rank, std::span<const MemberData> members);

struct CoefficientIdentity {
  bool holds = false;
  std::optional<std::size_t> first_failure;  // smallest k with sum_i a_{i,k} != n^k
  SeriesPrefix totals;

  bool operator==(const CoefficientIdentity&) const = default;
};

CoefficientIdentity check_coefficient_identity(const PartitionSpec& spec, std::size_t max_degree);

enum class ClauseStatus { Pass, Fail, NotApplicable };

std::string to_string(ClauseStatus status);

struct ClauseFinding {
  std::string clause;             // "i", "ii", "iii", ...
  std::optional<long> subject;    // the period or member index the clause instance is about
  ClauseStatus status = ClauseStatus::NotApplicable;
  std::vector<std::size_t> members;  // witnessing member indices
  std::string detail;

  bool operator==(const ClauseFinding&) const = default;
};

struct Findings {
  std::vector<ClauseFinding> clauses;
  bool any_failed() const;

  bool operator==(const Findings&) const = default;
};

/// Period repetition clauses on a multiset of periods:
///  (i)   a maximal period h > 1 is attained at least twice;
///  (ii)  every period h > 1 properly dividing no other period repeats;
///  (iii) every period equals or divides another member's period.
Findings theorem1_periods(std::span<const unsigned> periods);
/// Verifies the partition first; throws NotAPartition otherwise.
Findings theorem1_check(const PartitionSpec& spec);

/// Index repetition clauses:
///  (i)  if a member of largest index d_s has period d_s, d_s repeats;
///  (ii) for h the maximal period, or a period properly dividing no other,
///       with J the members of period h and k in J of largest index: if
///       h_k = d_k then d_k repeats inside J.
Findings theorem2_core(std::span<const unsigned> periods, std::span<const std::size_t> indices);
Findings theorem2_check(const PartitionSpec& spec);

struct ResidueSum {
  unsigned h = 1;
  long m = 0;
  CycloNumber value{1};
  std::vector<std::size_t> attainers;  // members with a pole at zeta_h^m / n

  bool operator==(const ResidueSum&) const = default;
};

/// Sum of residues at zeta_h^m / n over the members having a pole there.
/// Requires gcd(m, h) = 1.
ResidueSum residue_sum(int rank, std::span<const RationalFunction> genfuncs, unsigned h, long m);
ResidueSum residue_sum_check(const PartitionSpec& spec, unsigned h, long m);

/// One class of common poles: the roots of `factor`, an element of a
/// coprime basis of the members' denominators.
struct PoleClass {
  IntPolynomial factor;
  std::vector<std::size_t> attainers;
  std::vector<std::size_t> orders;  // pole order per attainer
  // Populated when there are exactly two attainers j, k.
  std::optional<std::pair<std::size_t, std::size_t>> zero_multiplicities;
  bool assertion_emitted = false;  // n0_j = n0_k = 0, or both equal to the common period
  bool indices_equal = false;      // d_j == d_k

  bool operator==(const PoleClass&) const = default;
};

std::vector<PoleClass> lemma8_diagnostic(const PartitionSpec& spec);
std::vector<PoleClass> pole_classes(std::span<const MemberData> members);

/// Pairwise coprime squarefree polynomials whose products give the
/// squarefree parts of the inputs.
std::vector<IntPolynomial> coprime_basis(std::span<const IntPolynomial> polys);

/// Replaces member H alpha by the cosets of K = H intersect `subgroup` that
/// it contains, with transversal words of K as representatives.
PartitionSpec refine(const PartitionSpec& spec, std::size_t member, std::shared_ptr<const SchreierGraph> subgroup);

/// Deterministic corpus: starting from {F_n}, `depth` times replace one coset
/// H alpha by the cosets of K = H intersect N contained in it, N the kernel
/// of a surjection of F_n onto C_2..C_6 or S_3 (fixed catalogue order),
/// keeping every index <= max_index.
PartitionSpec generate_partition(int rank, std::size_t depth, std::uint64_t seed, std::size_t max_index = 16);

/// Version tag of the refinement catalogue; stamped into generated files.
inline constexpr int kCatalogueVersion = 1;

/// Schreier graph of H intersect K, from the orbit of the pair of basepoints.
SchreierGraph intersect(const SchreierGraph& h, const SchreierGraph& k);

/// Cayley graph of the finite permutation group generated by `images`
/// (one permutation of 0..points-1 per generator), i.e. the Schreier graph
/// of the kernel of the induced map from F_n.
SchreierGraph kernel_graph(const std::vector<std::vector<int>>& images);

}  // namespace fgc
