#include <doctest.h>

#include "fgcover/ratfunc.hpp"
#include "fixtures.hpp"

using namespace fgc;

namespace {

RationalFunction rf(IntPolynomial n, IntPolynomial d) { return RationalFunction(std::move(n), std::move(d)); }

SeriesPrefix ints(std::initializer_list<long> v) {
  SeriesPrefix out;
  for (long x : v) out.push_back(x);
  return out;
}

IntPolynomial one_minus_nz_pow(int n, unsigned h) {
  mpz_class nh;
  mpz_ui_pow_ui(nh.get_mpz_t(), n, h);
  return IntPolynomial{1} - IntPolynomial::monomial(nh, h);
}

}  // namespace

TEST_CASE("normal form") {
  const RationalFunction f = rf(IntPolynomial{1, 2}, IntPolynomial{1, 0, -4});
  CHECK(f.numerator() == IntPolynomial{1});
  CHECK(f.denominator() == IntPolynomial{1, -2});
  // the sign of the denominator is carried into the numerator
  const RationalFunction g = rf(IntPolynomial{3}, IntPolynomial{-1, 2});
  CHECK(g.numerator() == IntPolynomial{-3});
  CHECK(g.denominator() == IntPolynomial{1, -2});
  CHECK(rf(IntPolynomial{}, IntPolynomial{1, 5}) == RationalFunction{});
  CHECK(rf(IntPolynomial{2, 4}, IntPolynomial{2}) == RationalFunction(IntPolynomial{1, 2}));
  CHECK_THROWS_AS(rf(IntPolynomial{1}, IntPolynomial{}), std::domain_error);
  CHECK_THROWS_AS(rf(IntPolynomial{1}, IntPolynomial{2, 1}), std::domain_error);
}

TEST_CASE("arithmetic") {
  const RationalFunction a = rf(IntPolynomial{1}, IntPolynomial{1, 0, -4});
  const RationalFunction b = rf(IntPolynomial{0, 2}, IntPolynomial{1, 0, -4});
  CHECK(a + b == RationalFunction::geometric(2));
  CHECK(a + RationalFunction{} == a);
  CHECK((RationalFunction::geometric(2) - RationalFunction::geometric(2)).is_zero());
  CHECK(a * rf(IntPolynomial{1, 0, -4}, IntPolynomial{1}) == RationalFunction(IntPolynomial{1}));
  CHECK(-(-a) == a);
  RationalFunction s;
  s += a;
  s += b;
  CHECK(s == RationalFunction::geometric(2));
}

TEST_CASE("series expansion") {
  CHECK(series(rf(IntPolynomial{1}, IntPolynomial{1, 0, 0, 0, -16}), 5) == ints({1, 0, 0, 0, 16, 0}));
  CHECK(series(RationalFunction::geometric(3), 3) == ints({1, 3, 9, 27}));
  CHECK(series(rf(IntPolynomial{0, 2}, IntPolynomial{1, 0, 0, 0, -16}), 5) == ints({0, 2, 0, 0, 0, 32}));
  CHECK(series(RationalFunction(IntPolynomial{4, 5}), 3) == ints({4, 5, 0, 0}));
  CHECK(series(RationalFunction{}, 0) == ints({0}));
  // long expansions stay exact
  const SeriesPrefix big = series(RationalFunction::geometric(3), 80);
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, 80);
  CHECK(big[80] == p);
}

TEST_CASE("generating functions of the reference graphs") {
  const auto fig1 = fixtures::example1();
  CHECK(genfunc(*fig1, 0, 0) == rf(IntPolynomial{1}, IntPolynomial{1, 0, 0, 0, -16}));
  CHECK(genfunc(*fig1, 0, 1) == rf(IntPolynomial{0, 2}, IntPolynomial{1, 0, 0, 0, -16}));
  CHECK(genfunc(*fig1, 0, 3) == rf(IntPolynomial{0, 0, 0, 8}, IntPolynomial{1, 0, 0, 0, -16}));
  const auto k2 = fixtures::mod2_kernel();
  CHECK(genfunc(*k2, 0, 0) == rf(IntPolynomial{1}, IntPolynomial{1, 0, -4}));
  CHECK(genfunc(*fixtures::whole(3), 0, 0) == RationalFunction::geometric(3));

  CHECK(series_from_matrix(*fig1, 0, 0, 4) == ints({1, 0, 0, 0, 16}));
  CHECK(series_from_matrix(*fixtures::whole(2), 0, 0, 3) == ints({1, 2, 4, 8}));
  CHECK(series_from_matrix(*k2, 0, 0, 4) == ints({1, 0, 4, 0, 16}));
}

TEST_CASE("resolvent and cofactor routes give the same generating function") {
  for (const auto& g : fixtures::corpus_graphs()) {
    const TransitionMatrix a = transition_matrix(*g);
    if (a.dimension() > 8) continue;
    const IntPolynomial q = reciprocal_char_poly(a);
    for (Vertex i = 0; i < g->index(); ++i)
      for (Vertex j = 0; j < g->index(); ++j) CHECK(genfunc(*g, i, j) == rf(cofactor_numerator(a, i, j), q));
  }
}

TEST_CASE("series of every p_ij matches matrix powers to K = 20") {
  for (const auto& g : fixtures::corpus_graphs()) {
    const Resolvent r = resolvent(transition_matrix(*g));
    for (Vertex i = 0; i < g->index(); ++i)
      for (Vertex j = 0; j < g->index(); ++j)
        CHECK(series(genfunc(r, i, j), 20) == series_from_matrix(*g, i, j, 20));
  }
}

TEST_CASE("rows of generating functions sum to 1/(1 - nz)") {
  for (const auto& g : fixtures::corpus_graphs()) {
    const Resolvent r = resolvent(transition_matrix(*g));
    for (Vertex i = 0; i < g->index(); ++i) {
      RationalFunction sum;
      for (Vertex j = 0; j < g->index(); ++j) sum += genfunc(r, i, j);
      CHECK(sum == RationalFunction::geometric(g->rank()));
    }
    RationalFunction row;
    for (const auto& f : genfunc_row(*g, 0)) row += f;
    CHECK(row == RationalFunction::geometric(g->rank()));
  }
}

TEST_CASE("every p_ij has the simple poles zeta^m / n") {
  for (const auto& g : fixtures::corpus_graphs()) {
    const TransitionMatrix a = transition_matrix(*g);
    const unsigned h = period(a);
    const IntPolynomial rotations = one_minus_nz_pow(g->rank(), h);
    const Resolvent r = resolvent(a);
    for (Vertex i = 0; i < g->index(); ++i) {
      for (Vertex j = 0; j < g->index(); ++j) {
        const IntPolynomial den = genfunc(r, i, j).denominator();
        CHECK(exact_quotient(den, rotations).has_value());
        // and only simply
        CHECK_FALSE(exact_quotient(den, rotations * rotations).has_value());
      }
    }
  }
}

TEST_CASE("every denominator divides det(I - zA)") {
  for (const auto& g : fixtures::corpus_graphs()) {
    const Resolvent r = resolvent(transition_matrix(*g));
    for (Vertex i = 0; i < g->index(); ++i)
      for (Vertex j = 0; j < g->index(); ++j) CHECK(divides(genfunc(r, i, j).denominator(), r.denominator));
  }
}

TEST_CASE("denominators of one subgroup can differ") {
  // a 12-vertex graph where the pole at z^2 = -1/3 cancels in some p_ij
  const SchreierGraph g = SchreierGraph::from_permutations(
      2, {{1, 3, 4, 6, 7, 8, 5, 10, 0, 11, 9, 2}, {2, 4, 5, 7, 8, 9, 10, 0, 11, 3, 1, 6}});
  const Resolvent r = resolvent(transition_matrix(g));
  const IntPolynomial full = IntPolynomial{1, 0, -5, 0, 4} * IntPolynomial{1, 0, 3};
  const IntPolynomial reduced{1, 0, -5, 0, 4};
  std::size_t with = 0, without = 0;
  for (Vertex i = 0; i < g.index(); ++i) {
    for (Vertex j = 0; j < g.index(); ++j) {
      const IntPolynomial den = genfunc(r, i, j).denominator();
      if (den == full) ++with;
      if (den == reduced) ++without;
    }
  }
  CHECK(with + without == g.index() * g.index());
  CHECK(with > 0);
  CHECK(without > 0);
  CHECK(exact_quotient(reduced, one_minus_nz_pow(2, 2)).has_value());
}
