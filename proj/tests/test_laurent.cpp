#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sf/groebner.hpp"

using namespace sf;

namespace {

const LaurentRing R1{1, 1};

LPoly t(long e = 1) { return LPoly::monomial({e}); }
LPoly one() { return LPoly::constant(1, Cyc(1)); }

FGModule cyclic(const LPoly& f) {
  FGModule m = FGModule::free_module(R1, 1);
  m.add_relation({f});
  return m;
}

LaurentMatrix random_matrix(std::mt19937& rng, size_t r, size_t c) {
  LaurentMatrix m(R1, r, c);
  for (auto& e : m.e) e = oracle::random_lpoly(rng);
  return m;
}

}  // namespace

TEST_CASE("Euclidean arithmetic in K[t, 1/t]") {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    LPoly a = oracle::random_lpoly(rng, 4), b = oracle::random_lpoly(rng, 3);
    if (b.is_zero()) continue;
    LPoly q, r;
    ldivmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.span() < b.span());
    LPoly g = lgcd(a * b, b * b);
    CHECK(ldivides(g, a * b));
    CHECK(ldivides(b, g));
  }
  CHECK(LPoly::one_minus({1}).eval(Character{2, {1}}) == Cyc(2));
  CHECK((t(2) - one()).act({{-1}}) == t(-2) - one());
}

TEST_CASE("Smith normal form") {
  LaurentMatrix a(R1, 1, 1);
  a.at(0, 0) = LPoly::one_minus({1}).pow(2);
  CHECK(smith_normal_form_rank1(a).invariant_factors() == std::vector<LPoly>{LPoly::one_minus({1}).pow(2).normalized()});

  LaurentMatrix b(R1, 1, 2);
  b.at(0, 0) = LPoly::one_minus({1});
  b.at(0, 1) = LPoly::one_minus({2});
  auto fb = smith_normal_form_rank1(b).invariant_factors();
  REQUIRE(fb.size() == 1);
  CHECK(fb[0] == LPoly::one_minus({1}).normalized());

  CHECK(smith_normal_form_rank1(LaurentMatrix::identity(R1, 3)).invariant_factors().empty());
}

TEST_CASE("Smith transforms are consistent") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> sz(1, 3);
    size_t r = static_cast<size_t>(sz(rng)), c = static_cast<size_t>(sz(rng));
    LaurentMatrix m = random_matrix(rng, r, c);
    SNFResult s = smith_normal_form_rank1(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.V * s.Vinv == LaurentMatrix::identity(R1, c));
    for (size_t k = 0; k + 1 < s.diagonal.size(); ++k)
      if (!s.diagonal[k + 1].is_zero()) CHECK(ldivides(s.diagonal[k], s.diagonal[k + 1]));
  }
}

TEST_CASE("Groebner module bases and membership") {
  LaurentMatrix m(LaurentRing{2, 1}, 1, 1);
  m.at(0, 0) = LPoly::one_minus({1, 0});
  auto gb = groebner_module_basis(m);
  CHECK(gb.basis.size() == 1);
  CHECK(gb.syzygies.cols == 0);

  LaurentSubmodule ideal(2, 1, {{LPoly::one_minus({1, 0})}, {LPoly::one_minus({0, 1})}});
  LVec probe{LPoly::monomial({1, 0}) - LPoly::monomial({0, 1})};
  LVec coeffs;
  REQUIRE(ideal.express(probe, coeffs));
  CHECK(coeffs[0] * LPoly::one_minus({1, 0}) + coeffs[1] * LPoly::one_minus({0, 1}) == probe[0]);
  CHECK_FALSE(ideal.contains({LPoly::constant(2, Cyc(1))}));
  CHECK(ideal.quotient_dimension() == std::optional<size_t>(1));
}

TEST_CASE("Groebner quotient dimensions agree with Smith forms") {
  std::mt19937 rng(13);
  int compared = 0;
  for (int i = 0; i < 50; ++i) {
    LaurentMatrix m = random_matrix(rng, 3, 3);
    SNFResult s = smith_normal_form_rank1(m);
    std::optional<size_t> snf_dim = 0;
    for (auto& d : s.diagonal) {
      if (d.is_zero()) snf_dim.reset();
      else if (snf_dim) *snf_dim += static_cast<size_t>(d.span());
    }
    if (s.diagonal.size() < 3) snf_dim.reset();
    std::vector<LVec> rows;
    for (size_t r = 0; r < 3; ++r) rows.push_back(m.row(r));
    LaurentSubmodule sub(1, 3, rows);
    CHECK(sub.quotient_dimension() == snf_dim);
    ++compared;
  }
  CHECK(compared == 50);
}

TEST_CASE("syzygies are syzygies") {
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    std::vector<LVec> vecs;
    for (int k = 0; k < 3; ++k) vecs.push_back({oracle::random_lpoly(rng), oracle::random_lpoly(rng)});
    for (auto& z : laurent_syzygies(vecs, 2, 1))
      for (size_t c = 0; c < 2; ++c) {
        LPoly acc(1);
        for (size_t k = 0; k < vecs.size(); ++k) acc += z[k] * vecs[k][c];
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("Tor against characters") {
  FGModule sq = cyclic(LPoly::one_minus({1}).pow(2));
  auto t3 = tor_against_character(sq, Character{3, {1}}, 1);
  CHECK(t3[0].dim == 0);
  CHECK(t3[1].dim == 0);
  auto tt = tor_against_character(sq, Character::trivial(1), 1);
  CHECK(tt[0].dim == 1);
  CHECK(tt[1].dim == 1);
  FGModule fr = FGModule::free_module(R1, 1);
  for (auto s : {Character::trivial(1), Character{5, {2}}}) {
    auto tf = tor_against_character(fr, s, 1);
    CHECK(tf[0].dim == 1);
    CHECK(tf[1].dim == 0);
  }
}

TEST_CASE("Tor engines agree on random modules") {
  auto r = oracle::tor_engine_crosscheck(50, 29);
  CHECK(r.modules == 50);
  CHECK(r.mismatches == 0);
  CHECK(r.euler_failures == 0);
}

TEST_CASE("J-torsion") {
  std::vector<LPoly> j{LPoly::one_minus({1})};
  CHECK(is_J_torsion(cyclic(LPoly::one_minus({1})), j) == Verdict::pass);
  CHECK(is_J_torsion(FGModule::free_module(R1, 1), j) == Verdict::fail);
  CHECK(is_J_torsion(cyclic(one() + t()), j) == Verdict::fail);
  CHECK(is_J_torsion(cyclic(LPoly::one_minus({1}).pow(3)), j) == Verdict::pass);
}

TEST_CASE("kernels and cokernels of module maps") {
  // Multiplication by (1 - t) on R/((1 - t)^2): kernel and cokernel are both R/(1 - t).
  FGModule m = cyclic(LPoly::one_minus({1}).pow(2));
  LaurentMatrix phi(R1, 1, 1);
  phi.at(0, 0) = LPoly::one_minus({1});
  auto ker = module_map_kernel(m, m, phi);
  auto ks = rank_one_structure(ker.module);
  CHECK(ks.free_rank == 0);
  REQUIRE(ks.torsion.size() == 1);
  CHECK(ks.torsion[0] == LPoly::one_minus({1}).normalized());
  auto cs = rank_one_structure(module_map_cokernel(m, phi));
  REQUIRE(cs.torsion.size() == 1);
  CHECK(cs.torsion[0] == LPoly::one_minus({1}).normalized());
}

TEST_CASE("pruned presentations keep the module") {
  std::mt19937 rng(31);
  for (int i = 0; i < 30; ++i) {
    FGModule m = oracle::random_rank1_module(rng);
    FGModule p = prune_presentation(m);
    CHECK(rank_one_structure(p).str() == rank_one_structure(m).str());
  }
}
