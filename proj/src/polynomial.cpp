#include "fgcover/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fgc {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(out));
}

mpq_class IntPolynomial::evaluate(const mpq_class& z) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + mpq_class(*it);
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - db);
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top] == 0) continue;
    if (!mpz_divisible_p(rem[top].get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), rem[top].get_mpz_t(), bc[db].get_mpz_t());
    const std::size_t shift = top - db;
    quot[shift] = t;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t k = 0; k < db; ++k)
    if (rem[k] != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  IntPolynomial r = a;
  const int db = b.degree();
  const mpz_class lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const mpz_class lr = r.leading();
    const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
    r = r * lb - IntPolynomial::monomial(lr, shift) * b;
    r = r.primitive_part();  // coefficient growth
  }
  return r;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) { return pseudo_remainder(a, b).is_zero(); }

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  mpz_class c;
  mpz_class ca = a.content();
  mpz_class cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * c;
}

std::vector<std::string> to_decimal_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

IntPolynomial from_decimal_strings(std::span<const std::string> digits) {
  std::vector<mpz_class> coeffs;
  for (const auto& s : digits) {
    mpz_class c;
    if (c.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
    coeffs.push_back(c);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace fgc
