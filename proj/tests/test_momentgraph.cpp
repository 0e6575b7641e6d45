#include <doctest.h>

#include <algorithm>
#include <set>

#include "sf/momentgraph.hpp"

using namespace sf;

namespace {

using EdgeKey = std::tuple<int, long, int, long, long>;  // (w1, lambda1, w2, lambda2, level)

std::set<EdgeKey> edge_keys(const MomentGraph& g, long shift = 0) {
  std::set<EdgeKey> out;
  for (auto& e : g.edges) {
    auto& a = g.vertices[e.v1];
    auto& b = g.vertices[e.v2];
    out.insert({a.w, a.lambda[0] - shift, b.w, b.lambda[0] - shift, e.level});
  }
  return out;
}

std::multiset<int> dims(const CellInventory& inv) {
  std::multiset<int> out;
  for (auto& c : inv.cells) out.insert(c.dim);
  return out;
}

}  // namespace

TEST_CASE("Bruhat cell dimensions for SL(2)") {
  RootDatum d = sl2_datum();
  CHECK(bruhat_cell_dimension(d, {0}) == 0);
  CHECK(bruhat_cell_dimension(d, {-1}) == 2);
  CHECK(bruhat_cell_dimension(d, {1}) == 1);
  CHECK(bruhat_cell_dimension(d, {2}) == 3);
}

TEST_CASE("Grassmannian moment graph of SL(2)") {
  RootDatum d = sl2_datum();
  MomentGraph g = build_moment_graph(d, ValuationProfile::constant(d, 2), Space::grassmannian, Window::cube(1, 0, 2));
  CHECK(g.vertices.size() == 3);
  std::set<std::pair<std::pair<long, long>, long>> got;
  for (auto& e : g.edges) {
    long a = g.vertices[e.v1].lambda[0], b = g.vertices[e.v2].lambda[0];
    got.insert({{std::min(a, b), std::max(a, b)}, e.level});
  }
  std::set<std::pair<std::pair<long, long>, long>> want{{{0, 1}, 1}, {{1, 2}, 3}, {{0, 2}, 2}};
  CHECK(got == want);

  MomentGraph z = build_moment_graph(d, ValuationProfile::constant(d, 0), Space::grassmannian, Window::cube(1, -3, 3));
  CHECK(z.edges.empty());
  CHECK(z.vertices.size() == 7);
}

TEST_CASE("every window triple carries three edges") {
  RootDatum d = sl2_datum();
  MomentGraph g = build_moment_graph(d, ValuationProfile::constant(d, 2), Space::grassmannian, Window::cube(1, -5, 5));
  auto keys = edge_keys(g);
  for (long m = -5; m + 2 <= 5; ++m) {
    int n = 0;
    for (auto& [w1, a, w2, b, lev] : keys)
      if (std::min(a, b) >= m && std::max(a, b) <= m + 2) ++n;
    CHECK(n == 3);
  }
  auto j = g.to_json(d);
  CHECK(j["edges"].size() == g.edges.size());
}

TEST_CASE("flag moment graph of SL(2), v = 1") {
  RootDatum d = sl2_datum();
  MomentGraph g = build_moment_graph(d, ValuationProfile::constant(d, 1), Space::flag, Window::cube(1, 0, 1));
  std::set<std::pair<std::pair<int, long>, std::pair<int, long>>> pairs;
  for (auto& e : g.edges) {
    auto& a = g.vertices[e.v1];
    auto& b = g.vertices[e.v2];
    std::pair<int, long> x{a.w, a.lambda[0]}, y{b.w, b.lambda[0]};
    if (y < x) std::swap(x, y);
    pairs.insert({x, y});
  }
  CHECK(pairs.count({{0, 0}, {1, 0}}) == 1);
  CHECK(pairs.count({{0, 1}, {1, 0}}) == 1);
  CHECK(pairs.count({{0, 0}, {1, 1}}) == 0);
}

TEST_CASE("moment graphs are translation periodic") {
  for (Space sp : {Space::grassmannian, Space::flag}) {
    RootDatum d = sl2_datum();
    auto v = ValuationProfile::constant(d, 2);
    MomentGraph a = build_moment_graph(d, v, sp, Window::cube(1, 0, 4));
    MomentGraph b = build_moment_graph(d, v, sp, Window::cube(1, 1, 5));
    auto ka = edge_keys(a), kb = edge_keys(b, 1);
    // Levels of the stabilizing affine root shift with the translate; compare the unlabeled structure.
    std::set<std::tuple<int, long, int, long>> sa, sb;
    for (auto& [w1, x, w2, y, l] : ka) sa.insert({w1, x, w2, y});
    for (auto& [w1, x, w2, y, l] : kb) sb.insert({w1, x, w2, y});
    CHECK(sa == sb);
  }
}

TEST_CASE("cell inventories") {
  RootDatum d = sl2_datum();
  auto one = Window::cube(1, 0, 0);
  CHECK(dims(cell_inventory(d, ValuationProfile::constant(d, 1), Space::grassmannian, one)) ==
        std::multiset<int>{0, 1});
  CHECK(dims(cell_inventory(d, ValuationProfile::constant(d, 0), Space::grassmannian, one)) == std::multiset<int>{0});
  CHECK(dims(cell_inventory(d, ValuationProfile::constant(d, 1), Space::flag, one)) ==
        std::multiset<int>{0, 0, 1, 1});
  for (int v = 0; v <= 4; ++v) {
    auto inv = cell_inventory(d, ValuationProfile::constant(d, v), Space::grassmannian, one);
    CHECK(inv.cells.size() == static_cast<size_t>(v + 1));
    std::multiset<int> want;
    for (int n = 0; n <= v; ++n) want.insert(n);
    CHECK(dims(inv) == want);
  }
}

TEST_CASE("distinct roots share only vertices") {
  RootDatum d = build_root_datum(CartanSpec{"A2", "sc", 0});
  MomentGraph g = build_moment_graph(d, ValuationProfile::constant(d, 1), Space::grassmannian, Window::cube(2, -1, 1));
  for (auto& e : g.edges) {
    auto diff = ivec_sub(g.vertices[e.v1].lambda, g.vertices[e.v2].lambda);
    // The edge direction is a multiple of the coroot of its root.
    auto c = d.coroots[e.root];
    CHECK(diff[0] * c[1] - diff[1] * c[0] == 0);
  }
}
