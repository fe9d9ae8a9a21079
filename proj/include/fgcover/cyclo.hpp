#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fgcover/polynomial.hpp"
#include "fgcover/ratfunc.hpp"

namespace fgc {

/// The h-th cyclotomic polynomial, from x^h - 1 divided by Phi_d for every
/// proper divisor d of h.
IntPolynomial cyclotomic(unsigned h);

/// Element of Q(zeta_h), zeta_h = exp(2 pi i / h), stored as the canonical
/// polynomial in zeta_h of degree < phi(h).
class CycloNumber {
public:
  explicit CycloNumber(unsigned h);
  CycloNumber(unsigned h, std::vector<mpq_class> coefficients);

  static CycloNumber rational(unsigned h, const mpq_class& q);
  /// zeta_h^m for any integer m.
  static CycloNumber root_power(unsigned h, long m);

  unsigned order() const noexcept { return h_; }
  std::span<const mpq_class> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  CycloNumber& operator+=(const CycloNumber& rhs);
  CycloNumber& operator-=(const CycloNumber& rhs);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
  /// Throws std::domain_error for zero.
  CycloNumber inverse() const;

  bool operator==(const CycloNumber& other) const { return h_ == other.h_ && coeffs_ == other.coeffs_; }

  /// Numeric value, for debugging and display only.
  std::complex<double> to_complex() const;

private:
  void reduce();

  unsigned h_;
  std::shared_ptr<const IntPolynomial> modulus_;
  std::vector<mpq_class> coeffs_;
};

/// p(z0) at z0 = zeta_h^m / n, exactly.
CycloNumber eval_at_root(const IntPolynomial& p, unsigned h, long m, int rank);

/// Residue N(z0)/D'(z0) of f at the simple pole z0 = zeta_h^m / n.
/// Throws NotAPole if D(z0) != 0 and NotSimple if D'(z0) = 0 as well.
CycloNumber residue_simple(const RationalFunction& f, unsigned h, long m, int rank);

/// Multiplicity of z0 = zeta_h^m / n as a root of the denominator of f.
std::size_t pole_order(const RationalFunction& f, unsigned h, long m, int rank);

/// Floating-point counterparts used for cross-checks.
std::complex<double> root_point_numeric(unsigned h, long m, int rank);
std::complex<double> residue_numeric(const RationalFunction& f, unsigned h, long m, int rank);

}  // namespace fgc
