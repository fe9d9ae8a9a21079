#include "fgcover/spectral.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace fgc {

TransitionMatrix::TransitionMatrix(std::size_t dimension, std::vector<std::int64_t> row_major)
    : dim_(dimension), entries_(std::move(row_major)) {
  if (entries_.size() != dim_ * dim_) throw std::invalid_argument("matrix entry count does not match dimension");
  for (auto x : entries_)
    if (x < 0) throw std::invalid_argument("transition matrix entries must be nonnegative");
}

TransitionMatrix::TransitionMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  dim_ = rows.size();
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("transition matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  *this = TransitionMatrix(dim_, std::move(entries_));
}

std::int64_t TransitionMatrix::row_sum(std::size_t i) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j);
  return s;
}

std::int64_t TransitionMatrix::column_sum(std::size_t j) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, j);
  return s;
}

TransitionMatrix transition_matrix(const SchreierGraph& graph) {
  const std::size_t d = graph.index();
  std::vector<std::int64_t> entries(d * d, 0);
  for (int g = 1; g <= graph.rank(); ++g)
    for (Vertex v = 0; v < d; ++v) ++entries[v * d + graph.act(v, g)];
  return TransitionMatrix(d, std::move(entries));
}

namespace {

std::vector<bool> reachable(const TransitionMatrix& a, bool transpose) {
  const std::size_t d = a.dimension();
  std::vector<bool> seen(d, false);
  if (d == 0) return seen;
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < d; ++v) {
      const auto entry = transpose ? a(v, u) : a(u, v);
      if (entry > 0 && !seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_irreducible(const TransitionMatrix& a) {
  if (a.dimension() == 0) return false;
  for (bool b : reachable(a, false))
    if (!b) return false;
  for (bool b : reachable(a, true))
    if (!b) return false;
  return true;
}

unsigned period(const TransitionMatrix& a) {
  if (!is_irreducible(a)) throw std::invalid_argument("period is defined for irreducible matrices only");
  const std::size_t d = a.dimension();
  std::vector<long> level(d, -1);
  std::deque<std::size_t> queue{0};
  level[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < d; ++v)
      if (a(u, v) > 0 && level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
  }
  long h = 0;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      if (a(u, v) > 0) h = std::gcd(h, level[u] + 1 - level[v]);
  return static_cast<unsigned>(h);
}

unsigned period(const SchreierGraph& graph) { return period(transition_matrix(graph)); }

namespace {

using BigMatrix = std::vector<mpz_class>;

// Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k) / k, M_{k+1} = A M_k + c_k I.
// Returns c_0..c_d and M_1..M_d.
void faddeev_leverrier(const TransitionMatrix& a, std::vector<mpz_class>& coefficients,
                       std::vector<BigMatrix>* adjugate_terms) {
  const std::size_t d = a.dimension();
  coefficients.assign(d + 1, mpz_class(0));
  coefficients[0] = 1;
  BigMatrix m(d * d, mpz_class(0));
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1;
  BigMatrix am(d * d);
  for (std::size_t k = 1; k <= d; ++k) {
    if (adjugate_terms) adjugate_terms->push_back(m);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        mpz_class s = 0;
        for (std::size_t l = 0; l < d; ++l) {
          const auto entry = a(i, l);
          if (entry != 0) s += m[l * d + j] * static_cast<long>(entry);
        }
        am[i * d + j] = std::move(s);
      }
    mpz_class trace = 0;
    for (std::size_t i = 0; i < d; ++i) trace += am[i * d + i];
    mpz_class c;
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c = -c;
    coefficients[k] = c;
    m = am;
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] += c;
  }
}

}  // namespace

IntPolynomial reciprocal_char_poly(const TransitionMatrix& a) {
  std::vector<mpz_class> c;
  faddeev_leverrier(a, c, nullptr);
  return IntPolynomial(std::move(c));
}

Resolvent resolvent(const TransitionMatrix& a) {
  const std::size_t d = a.dimension();
  std::vector<mpz_class> c;
  std::vector<BigMatrix> terms;
  faddeev_leverrier(a, c, &terms);
  Resolvent out;
  out.dimension = d;
  out.denominator = IntPolynomial(std::move(c));
  out.numerators.reserve(d * d);
  // (I - zA)^{-1} = sum_{k=1}^{d} M_k z^{k-1} / det(I - zA)
  for (std::size_t idx = 0; idx < d * d; ++idx) {
    std::vector<mpz_class> coeffs(d);
    for (std::size_t k = 0; k < d; ++k) coeffs[k] = terms[k][idx];
    out.numerators.emplace_back(std::move(coeffs));
  }
  return out;
}

IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  bool negate = false;
  IntPolynomial previous{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPolynomial t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_quotient(t, previous);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = IntPolynomial{};
    }
    previous = m[k][k];
  }
  IntPolynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

IntPolynomial cofactor_numerator(const TransitionMatrix& a, std::size_t start, std::size_t end) {
  const std::size_t d = a.dimension();
  if (start >= d || end >= d) throw std::out_of_range("cofactor index out of range");
  std::vector<std::vector<IntPolynomial>> minor;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == end) continue;
    std::vector<IntPolynomial> row;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == start) continue;
      // (I - zA)_{ij}
      row.push_back(IntPolynomial{i == j ? 1L : 0L, -a(i, j)});
    }
    minor.push_back(std::move(row));
  }
  IntPolynomial det = determinant(std::move(minor));
  return (start + end) % 2 == 0 ? det : -det;
}

SpectralSummary char_data(const TransitionMatrix& a) {
  SpectralSummary out;
  out.period = period(a);
  out.reciprocal_char_poly = reciprocal_char_poly(a);
  out.zero_multiplicity = a.dimension() - static_cast<std::size_t>(out.reciprocal_char_poly.degree());
  return out;
}

}  // namespace fgc
