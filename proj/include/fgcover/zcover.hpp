#pragma once

// Residue-class partitions of the integers, and their lift to F_1 = <a>.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fgcover/partition.hpp"

namespace fgc {

struct ResidueClass {
  std::int64_t modulus = 1;  // d >= 1
  std::int64_t residue = 0;  // 0 <= r < d

  bool operator==(const ResidueClass&) const = default;
};

/// Family of residue classes d_i Z + r_i. Residues are reduced into 0..d-1.
class ZCoveringSpec {
public:
  ZCoveringSpec() = default;
  /// Throws std::invalid_argument for an empty family or a modulus < 1.
  explicit ZCoveringSpec(std::vector<ResidueClass> classes);

  const std::vector<ResidueClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

  bool operator==(const ZCoveringSpec&) const = default;

private:
  std::vector<ResidueClass> classes_;
};

struct ZVerdict {
  PartitionStatus status = PartitionStatus::IsPartition;
  std::optional<std::int64_t> witness;  // smallest nonnegative integer covered != 1 times
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  std::int64_t period = 1;              // lcm of the moduli

  bool operator==(const ZVerdict&) const = default;
};

/// Checks every residue modulo lcm(d_i). Throws BudgetExceeded when the lcm
/// exceeds `max_period`.
ZVerdict z_verify(const ZCoveringSpec& spec, std::int64_t max_period = 50'000'000);

/// The coset dZ + r as a coset of F_1: a d-cycle with accept vertex r steps
/// from the basepoint, represented by a^r.
Coset z_to_schreier(std::int64_t modulus, std::int64_t residue);
PartitionSpec lift(const ZCoveringSpec& spec);

/// Largest modulus repeats, and every modulus divides another one.
/// Throws NotAPartition unless z_verify succeeds.
Findings davenport_rado_check(const ZCoveringSpec& spec);

/// Deterministic family of exact covers: starting from {Z}, `depth` times
/// split a class dZ + r into the k classes kdZ + r + jd (k in {2, 3}),
/// keeping every modulus <= max_modulus.
ZCoveringSpec generate_z_covering(std::size_t depth, std::uint64_t seed, std::int64_t max_modulus = 36);

}  // namespace fgc
