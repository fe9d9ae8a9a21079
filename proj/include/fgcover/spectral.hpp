#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fgcover/polynomial.hpp"
#include "fgcover/schreier.hpp"

namespace fgc {

/// Square matrix of nonnegative integers; entry (i, j) counts the edges
/// i -> j of a labelled digraph.
class TransitionMatrix {
public:
  TransitionMatrix() = default;
  TransitionMatrix(std::size_t dimension, std::vector<std::int64_t> row_major);
  TransitionMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t dimension() const noexcept { return dim_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::int64_t row_sum(std::size_t i) const;
  std::int64_t column_sum(std::size_t j) const;

  bool operator==(const TransitionMatrix&) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Positive-letter edge counts of a Schreier graph. Inverse letters are not
/// part of the alphabet.
TransitionMatrix transition_matrix(const SchreierGraph& graph);

/// Strong connectivity of the digraph of nonzero entries.
bool is_irreducible(const TransitionMatrix& a);

/// Period of an irreducible matrix: gcd over edges u -> v of
/// level(u) + 1 - level(v), with BFS levels from vertex 0.
/// Throws std::invalid_argument when `a` is reducible.
unsigned period(const TransitionMatrix& a);
unsigned period(const SchreierGraph& graph);

/// det(I - zA), computed exactly by Faddeev-LeVerrier.
IntPolynomial reciprocal_char_poly(const TransitionMatrix& a);

/// (I - zA)^{-1} = numerators / denominator, with denominator = det(I - zA)
/// and numerators[i * d + j] the (i, j) entry of adj(I - zA). Both come out
/// of one Faddeev-LeVerrier pass: adj(xI - A) = sum_k M_k x^{d-k}.
struct Resolvent {
  std::size_t dimension = 0;
  IntPolynomial denominator;
  std::vector<IntPolynomial> numerators;

  const IntPolynomial& numerator(std::size_t i, std::size_t j) const { return numerators[i * dimension + j]; }
};

Resolvent resolvent(const TransitionMatrix& a);

/// (-1)^{start+end} det((I - zA) with row `end` and column `start` removed),
/// by fraction-free elimination over Z[z]. Equals the (start, end) entry of
/// adj(I - zA).
IntPolynomial cofactor_numerator(const TransitionMatrix& a, std::size_t start, std::size_t end);

/// det(M) for a square matrix over Z[z] (Bareiss elimination).
IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m);

struct SpectralSummary {
  unsigned period = 1;
  IntPolynomial reciprocal_char_poly;  // q(z) = det(I - zA)
  std::size_t zero_multiplicity = 0;   // algebraic multiplicity of eigenvalue 0 = d - deg q

  bool operator==(const SpectralSummary&) const = default;
};

/// Period and characteristic data of an irreducible matrix.
SpectralSummary char_data(const TransitionMatrix& a);

}  // namespace fgc
