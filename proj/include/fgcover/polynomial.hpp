#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fgc {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, constant term first. The coefficient vector never carries a
/// trailing zero, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const mpz_class> coefficients() const noexcept { return coeffs_; }
  mpz_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }
  const mpz_class& leading() const { return coeffs_.back(); }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  mpq_class evaluate(const mpq_class& z) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& c);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const mpz_class& c) { return lhs *= c; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(IntPolynomial p) { return p *= mpz_class(-1); }

  bool operator==(const IntPolynomial&) const = default;

  /// Human-readable form in the variable `var`, e.g. "1 - 16*z^4".
  std::string to_string(char var = 'z') const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// q with a == q * b in Z[z], if such q exists.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Pseudo-remainder of a by b: a multiple of a by a power of lc(b) reduced
/// modulo b. Zero iff b divides a over Q.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// True iff b divides a in Q[z].
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// Greatest common divisor in Z[z] with positive leading coefficient
/// (primitive-remainder Euclid). gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Coefficients as decimal strings, constant term first.
std::vector<std::string> to_decimal_strings(const IntPolynomial& p);
IntPolynomial from_decimal_strings(std::span<const std::string> digits);

}  // namespace fgc
