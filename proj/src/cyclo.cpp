#include "fgcover/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "fgcover/error.hpp"

namespace fgc {

namespace {

std::shared_ptr<const IntPolynomial> cyclotomic_shared(unsigned h) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const IntPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(h); it != cache.end()) return it->second;
  }
  if (h == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
  IntPolynomial p = IntPolynomial::monomial(1, h) - IntPolynomial{1};
  for (unsigned d = 1; d < h; ++d) {
    if (h % d != 0) continue;
    auto q = exact_quotient(p, *cyclotomic_shared(d));
    if (!q) throw std::logic_error("cyclotomic division was not exact");
    p = std::move(*q);
  }
  auto ptr = std::make_shared<const IntPolynomial>(std::move(p));
  std::lock_guard lock(mutex);
  return cache.emplace(h, ptr).first->second;
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPolynomial& p) {
  QPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q * b + r over Q
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const mpq_class t = r.back() / lead;
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= t * b[j];
    trim(r);
  }
  trim(q);
}

}  // namespace

IntPolynomial cyclotomic(unsigned h) { return *cyclotomic_shared(h); }

CycloNumber::CycloNumber(unsigned h) : h_(h), modulus_(cyclotomic_shared(h)) {}

CycloNumber::CycloNumber(unsigned h, std::vector<mpq_class> coefficients)
    : h_(h), modulus_(cyclotomic_shared(h)), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  reduce();
}

CycloNumber CycloNumber::rational(unsigned h, const mpq_class& q) { return CycloNumber(h, {q}); }

CycloNumber CycloNumber::root_power(unsigned h, long m) {
  const long e = ((m % static_cast<long>(h)) + h) % h;
  std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, mpq_class(0));
  c[e] = 1;
  return CycloNumber(h, std::move(c));
}

void CycloNumber::reduce() {
  const auto phi = modulus_->coefficients();
  const std::size_t e = phi.size() - 1;
  for (std::size_t k = coeffs_.size(); k-- > e;) {
    if (coeffs_[k] == 0) continue;
    const mpq_class c = coeffs_[k];
    for (std::size_t j = 0; j <= e; ++j) coeffs_[k - e + j] -= c * mpq_class(phi[j]);
  }
  if (coeffs_.size() > e) coeffs_.resize(e);
  trim(coeffs_);
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
  if (h_ != rhs.h_) throw std::invalid_argument("cyclotomic orders differ");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim(coeffs_);
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
  if (h_ != rhs.h_) throw std::invalid_argument("cyclotomic orders differ");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim(coeffs_);
  return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.h_ != b.h_) throw std::invalid_argument("cyclotomic orders differ");
  return CycloNumber(a.h_, mul(a.coeffs_, b.coeffs_));
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in a cyclotomic field");
  // Extended Euclid: s * coeffs + t * Phi = 1, tracking s only.
  QPoly r0 = to_qpoly(*modulus_), r1 = coeffs_;
  QPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because Phi_h is irreducible.
  if (r0.size() != 1) throw std::logic_error("cyclotomic modulus is not coprime to the element");
  for (auto& c : s0) c /= r0[0];
  return CycloNumber(h_, std::move(s0));
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

std::complex<double> CycloNumber::to_complex() const {
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    acc += coeffs_[k].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / h_);
  return acc;
}

CycloNumber eval_at_root(const IntPolynomial& p, unsigned h, long m, int rank) {
  if (h == 0) throw std::invalid_argument("root order must be >= 1");
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<mpq_class> acc(h, mpq_class(0));
  const long hh = static_cast<long>(h);
  const long step = ((m % hh) + hh) % hh;
  mpz_class scale = 1;  // n^k
  long exponent = 0;    // m k mod h
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) acc[exponent] += mpq_class(coeffs[k], scale);
    scale *= rank;
    exponent = (exponent + step) % hh;
  }
  for (auto& c : acc) c.canonicalize();
  return CycloNumber(h, std::move(acc));
}

CycloNumber residue_simple(const RationalFunction& f, unsigned h, long m, int rank) {
  const IntPolynomial& den = f.denominator();
  if (!eval_at_root(den, h, m, rank).is_zero()) throw NotAPole("point is not a root of the denominator");
  const CycloNumber slope = eval_at_root(den.derivative(), h, m, rank);
  if (slope.is_zero()) throw NotSimple("pole has order greater than one");
  return eval_at_root(f.numerator(), h, m, rank) / slope;
}

std::size_t pole_order(const RationalFunction& f, unsigned h, long m, int rank) {
  std::size_t order = 0;
  IntPolynomial p = f.denominator();
  while (!p.is_zero() && eval_at_root(p, h, m, rank).is_zero()) {
    ++order;
    p = p.derivative();
  }
  return order;
}

std::complex<double> root_point_numeric(unsigned h, long m, int rank) {
  return std::polar(1.0 / rank, 2.0 * std::numbers::pi * static_cast<double>(m) / h);
}

namespace {

std::complex<double> evaluate_numeric(const IntPolynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

}  // namespace

std::complex<double> residue_numeric(const RationalFunction& f, unsigned h, long m, int rank) {
  const auto z = root_point_numeric(h, m, rank);
  return evaluate_numeric(f.numerator(), z) / evaluate_numeric(f.denominator().derivative(), z);
}

}  // namespace fgc
