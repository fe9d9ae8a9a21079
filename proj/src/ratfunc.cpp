#include "fgcover/ratfunc.hpp"

#include <stdexcept>

namespace fgc {

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = IntPolynomial{1};
    return;
  }
  IntPolynomial g = gcd(num, den);
  auto n = exact_quotient(num, g);
  auto d = exact_quotient(den, g);
  if (!n || !d) throw std::logic_error("polynomial gcd does not divide its arguments");
  const mpz_class d0 = d->coefficient(0);
  if (d0 == -1) {
    *n = -*n;
    *d = -*d;
  } else if (d0 != 1) {
    throw std::domain_error("denominator constant term " + d0.get_str() + " is not a unit after reduction");
  }
  num_ = std::move(*n);
  den_ = std::move(*d);
}

RationalFunction RationalFunction::geometric(int rank) {
  return RationalFunction(IntPolynomial{1}, IntPolynomial{1, -static_cast<long>(rank)});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string() const {
  if (den_ == IntPolynomial{1}) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

SeriesPrefix series(const RationalFunction& f, std::size_t max_degree) {
  const auto& d = f.denominator();
  if (d.coefficient(0) != 1) throw std::domain_error("series expansion needs D(0) = 1");
  SeriesPrefix a(max_degree + 1);
  const auto dc = d.coefficients();
  for (std::size_t k = 0; k <= max_degree; ++k) {
    mpz_class s = f.numerator().coefficient(k);
    for (std::size_t j = 1; j < dc.size() && j <= k; ++j) mpz_submul(s.get_mpz_t(), dc[j].get_mpz_t(), a[k - j].get_mpz_t());
    a[k] = std::move(s);
  }
  return a;
}

RationalFunction genfunc(const Resolvent& r, Vertex start, Vertex end) {
  if (start >= r.dimension || end >= r.dimension) throw std::out_of_range("generating function vertex out of range");
  return RationalFunction(r.numerator(start, end), r.denominator);
}

RationalFunction genfunc(const SchreierGraph& graph, Vertex start, Vertex end) {
  return genfunc(resolvent(transition_matrix(graph)), start, end);
}

std::vector<RationalFunction> genfunc_row(const SchreierGraph& graph, Vertex start) {
  const Resolvent r = resolvent(transition_matrix(graph));
  std::vector<RationalFunction> out;
  for (Vertex end = 0; end < graph.index(); ++end) out.push_back(genfunc(r, start, end));
  return out;
}

SeriesPrefix series_from_matrix(const TransitionMatrix& a, std::size_t start, std::size_t end, std::size_t max_degree) {
  const std::size_t d = a.dimension();
  if (start >= d || end >= d) throw std::out_of_range("series vertex out of range");
  // row vector e_start A^k
  std::vector<mpz_class> row(d, mpz_class(0));
  row[start] = 1;
  SeriesPrefix out;
  out.reserve(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    out.push_back(row[end]);
    if (k == max_degree) break;
    std::vector<mpz_class> next(d, mpz_class(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (row[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (a(i, j) != 0) next[j] += row[i] * static_cast<long>(a(i, j));
    }
    row = std::move(next);
  }
  return out;
}

SeriesPrefix series_from_matrix(const SchreierGraph& graph, Vertex start, Vertex end, std::size_t max_degree) {
  return series_from_matrix(transition_matrix(graph), start, end, max_degree);
}

}  // namespace fgc
