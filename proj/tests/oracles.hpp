#pragma once

// Independent reference computations shared by the unit tests and the acceptance binary.

#include <random>
#include <string>

#include "sf/laurent.hpp"

namespace oracle {

inline sf::LPoly random_lpoly(std::mt19937& rng, int maxterms = 3) {
  std::uniform_int_distribution<int> nt(0, maxterms), ex(-2, 2), co(-2, 2);
  sf::LPoly p(1);
  for (int i = nt(rng); i > 0; --i) {
    int c = co(rng);
    if (c) p.add_term({ex(rng)}, sf::Cyc(c));
  }
  return p;
}

// Random rank-one module with 1-3 generators and 0-3 relations, often sharing factors (1 - t), (1 + t).
inline sf::FGModule random_rank1_module(std::mt19937& rng) {
  std::uniform_int_distribution<int> ng(1, 3), nr(0, 3), pick(0, 3);
  sf::LaurentRing R{1, 1};
  size_t g = static_cast<size_t>(ng(rng));
  sf::FGModule m = sf::FGModule::free_module(R, g);
  const sf::LPoly f[] = {sf::LPoly::one_minus({1}), sf::LPoly::one_minus({2}), sf::LPoly::one_minus({1}).pow(2),
                         sf::LPoly::constant(1, sf::Cyc(1))};
  for (int r = nr(rng); r > 0; --r) {
    sf::LVec rel(g, sf::LPoly(1));
    for (auto& e : rel) e = f[pick(rng)] * random_lpoly(rng);
    m.add_relation(rel);
  }
  return m;
}

inline sf::Character random_character(std::mt19937& rng) {
  const int orders[] = {1, 2, 3, 4, 6};
  std::uniform_int_distribution<int> pick(0, 4);
  int n = orders[pick(rng)];
  std::uniform_int_distribution<int> e(0, n - 1);
  return sf::Character{n, {e(rng)}};
}

struct TorCrossCheck {
  int modules = 0;
  int mismatches = 0;
  int euler_failures = 0;
  std::string first;
};

// Tor dims along the Smith-form path and along a Groebner free resolution must agree; both must have
// Euler characteristic equal to the free rank, and the resolution ranks must alternate to it too.
inline TorCrossCheck tor_engine_crosscheck(int count, unsigned seed) {
  TorCrossCheck out;
  std::mt19937 rng(seed);
  for (int i = 0; i < count; ++i) {
    sf::FGModule m = random_rank1_module(rng);
    sf::Character s = random_character(rng);
    auto a = sf::tor_against_character(m, s, 3, sf::TorPath::snf);
    auto b = sf::tor_against_character(m, s, 3, sf::TorPath::resolution);
    ++out.modules;
    bool same = a.size() == b.size();
    for (size_t p = 0; same && p < a.size(); ++p) same = a[p].dim == b[p].dim;
    if (!same) {
      ++out.mismatches;
      if (out.first.empty()) out.first = "module " + std::to_string(i);
    }
    long free_rank = static_cast<long>(sf::rank_one_structure(m).free_rank);
    auto chi = [](const std::vector<sf::TorResult>& t) {
      long x = 0;
      for (auto& r : t) x += (r.p % 2 ? -1 : 1) * static_cast<long>(r.dim);
      return x;
    };
    // A truncated resolution F_L -> ... -> F_0 has alternating rank sum off by the generic rank of its last
    // map; evaluating at a primitive 11th root of unity avoids every factor these modules can contain.
    sf::FreeResolution res = sf::free_resolution(m, 4);
    long rchi = 0;
    for (size_t p = 0; p + 1 < res.ranks.size(); ++p) rchi += (p % 2 ? -1 : 1) * static_cast<long>(res.ranks[p]);
    if (!res.maps.empty()) {
      const auto& last = res.maps.back();
      long L = static_cast<long>(res.maps.size());
      long generic = static_cast<long>(sf::mat_rank(last.eval(sf::Character{11, {1}}), last.cols));
      rchi += (L % 2 ? -1 : 1) * generic;
    } else {
      rchi = static_cast<long>(res.ranks[0]);
    }
    if (chi(a) != free_rank || chi(b) != free_rank || rchi != free_rank) {
      ++out.euler_failures;
      if (out.first.empty()) out.first = "euler, module " + std::to_string(i);
    }
  }
  return out;
}

}  // namespace oracle
