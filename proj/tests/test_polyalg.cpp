#include <doctest.h>

#include <random>

#include "sf/polyalg.hpp"

using namespace sf;

TEST_CASE("applying constant-coefficient operators") {
  RingPtr r = PolyRing::make(2, {"x", "y"});
  Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  DiffOperator dx = DiffOperator::partial(r, 0), dy = DiffOperator::partial(r, 1);
  CHECK(apply(dx, x * x) == Cyc(2) * x);
  CHECK(apply(dx * dy, x * x).is_zero());
  CHECK(pairing(pow(dx, 2), x * x) == Cyc(2));
  CHECK(pairing(dx, y) == Cyc(0));
  CHECK(pairing(dx * dy, x * y) == Cyc(1));

  RingPtr ext = PolyRing::make(2, {"x", "t"}, true);
  DiffOperator da = DiffOperator::linear(ext, {2, 0});
  Polynomial p = Polynomial::linear(ext, {2, -1});
  CHECK(apply(da, p) == Polynomial::constant(ext, Cyc(4)));
}

TEST_CASE("annihilator bases") {
  RingPtr r1 = PolyRing::make(1);
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k <= 6; ++k)
      CHECK(annihilator_basis(r1, {{DiffOperator::partial(r1, 0), d}}, k).dim() == (k <= d - 1 ? 1u : 0u));

  RingPtr r = PolyRing::make(2, {"x", "y"});
  DiffOperator dx = DiffOperator::partial(r, 0), dy = DiffOperator::partial(r, 1);
  auto k2 = annihilator_basis(r, {{dx, 2}}, 2);
  CHECK(k2.dim() == 2);
  Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  CHECK(same_subspace(k2, GradedSubspace{2, {x * y, y * y}}));
  CHECK(annihilator_basis(r, {{dx * dy, 1}}, 2).dim() == 2);
}

TEST_CASE("relatively prime operators") {
  RingPtr r = PolyRing::make(2, {"x", "y"});
  DiffOperator dx = DiffOperator::partial(r, 0), dy = DiffOperator::partial(r, 1);
  CHECK(check_relatively_prime_lemma(dx, dy, 4).passed());
  CHECK(check_relatively_prime_lemma(dx, dx + dy, 3).passed());
  auto bad = check_relatively_prime_lemma(dx, dx, 2);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.checks.size() >= 2);
  CHECK(bad.checks[0].verdict == Verdict::pass);
  CHECK(bad.checks[1].verdict == Verdict::fail);
}

TEST_CASE("Leibniz-free identities on random polynomials") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> co(-3, 3), ex(0, 3);
  RingPtr r = PolyRing::make(3);
  auto rnd = [&] {
    Polynomial p(r);
    for (int i = 0; i < 4; ++i) p.add_term({ex(rng), ex(rng), ex(rng)}, Cyc(co(rng)));
    return p;
  };
  auto rnd_op = [&] {
    DiffOperator d(r);
    for (int i = 0; i < 3; ++i) d.add_term({ex(rng) % 2, ex(rng) % 2, ex(rng) % 2}, Cyc(co(rng)));
    return d;
  };
  for (int i = 0; i < 50; ++i) {
    Polynomial p = rnd(), q = rnd();
    DiffOperator a = rnd_op(), b = rnd_op();
    CHECK(apply(a, p + q) == apply(a, p) + apply(a, q));
    CHECK(apply(a * b, p) == apply(a, apply(b, p)));
    CHECK(apply(a * b, p) == apply(b, apply(a, p)));
  }
}

TEST_CASE("linear substitution and parsing") {
  RingPtr r = PolyRing::make(2, {"x", "y"});
  Polynomial p = Polynomial::parse(r, "x^2 + 3*x*y - 1/2");
  Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  CHECK(p == x * x + Cyc(3) * x * y - Polynomial::constant(r, Cyc(Rational(1, 2))));
  Polynomial s = substitute_linear(p, {y, x});
  CHECK(s == y * y + Cyc(3) * x * y - Polynomial::constant(r, Cyc(Rational(1, 2))));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  auto c = coordinates(x * y, 2);
  CHECK(from_coordinates(r, 2, c) == x * y);
}
