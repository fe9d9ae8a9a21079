#pragma once

#include <cstddef>
#include <vector>

#include "fgcover/polynomial.hpp"
#include "fgcover/schreier.hpp"
#include "fgcover/spectral.hpp"

namespace fgc {

/// Coefficients a_0..a_K of a power series.
using SeriesPrefix = std::vector<mpz_class>;

/// Quotient N(z)/D(z) of integer polynomials in normal form: gcd(N, D) = 1
/// and D(0) = 1. Every function built here has a denominator dividing some
/// det(I - zA) or a product of them, so the constant term can always be
/// normalised to 1 without leaving Z[z].
class RationalFunction {
public:
  RationalFunction() : den_{1} {}
  /// Normalises num/den. Throws std::domain_error if den is zero or its
  /// constant term is not a unit once common factors are removed.
  RationalFunction(IntPolynomial num, IntPolynomial den);
  explicit RationalFunction(IntPolynomial polynomial) : RationalFunction(std::move(polynomial), IntPolynomial{1}) {}

  /// 1 / (1 - n z), the generating function of all positive words.
  static RationalFunction geometric(int rank);

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }

  bool operator==(const RationalFunction&) const = default;

  std::string to_string() const;

private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Maclaurin coefficients a_0..a_K via a_k = N_k - sum_{j>=1} D_j a_{k-j}.
SeriesPrefix series(const RationalFunction& f, std::size_t max_degree);

/// Generating function of the automaton on `graph` with the given start and
/// accept vertices: its k-th coefficient counts the positive words of
/// length k leading from start to end.
RationalFunction genfunc(const SchreierGraph& graph, Vertex start, Vertex end);
RationalFunction genfunc(const Resolvent& r, Vertex start, Vertex end);

/// All generating functions with the given start vertex, one per end vertex.
std::vector<RationalFunction> genfunc_row(const SchreierGraph& graph, Vertex start);

/// (A^k)_{start,end} for k = 0..K by exact repeated multiplication.
SeriesPrefix series_from_matrix(const SchreierGraph& graph, Vertex start, Vertex end, std::size_t max_degree);
SeriesPrefix series_from_matrix(const TransitionMatrix& a, std::size_t start, std::size_t end, std::size_t max_degree);

}  // namespace fgc
