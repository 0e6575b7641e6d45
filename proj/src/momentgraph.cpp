#include "sf/momentgraph.hpp"

#include <algorithm>

namespace sf {

const char* space_name(Space s) { return s == Space::grassmannian ? "grassmannian" : "flag"; }

Space parse_space(const std::string& s) {
  if (s == "grassmannian") return Space::grassmannian;
  if (s == "flag") return Space::flag;
  throw MathError("unknown space '" + s + "'");
}

std::vector<IVec> Window::points() const {
  std::vector<IVec> out;
  size_t n = lo.size();
  for (size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return out;
  IVec cur = lo;
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    while (i < n && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

bool Window::contains(const IVec& lam) const {
  for (size_t i = 0; i < lo.size(); ++i)
    if (lam[i] < lo[i] || lam[i] > hi[i]) return false;
  return true;
}

int MomentGraph::vertex_index(const MGVertex& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

nlohmann::json MomentGraph::to_json(const RootDatum& d) const {
  nlohmann::json j;
  j["space"] = space_name(space);
  j["window"] = {{"lo", window.lo}, {"hi", window.hi}};
  for (auto& v : vertices) j["vertices"].push_back({{"lambda", v.lambda}, {"w", v.w}});
  j["edges"] = nlohmann::json::array();
  for (auto& e : edges)
    j["edges"].push_back({{"v1", e.v1},
                          {"v2", e.v2},
                          {"root", d.roots[e.root]},
                          {"level", e.level},
                          {"bound", e.bound}});
  return j;
}

int bruhat_cell_dimension(const RootDatum& d, const IVec& ell) {
  // Affine roots (alpha, k) with <ell, alpha> + k < 0 that are positive on the fundamental alcove:
  // k >= 0 for alpha > 0 and k >= 1 for alpha < 0.
  int dim = 0;
  for (int p : d.positive) {
    long n = dot(ell, d.roots[p]);
    if (n < 0)
      dim += static_cast<int>(-n);  // (alpha, k), 0 <= k < -n
    else if (n > 1)
      dim += static_cast<int>(n - 1);  // (-alpha, k), 1 <= k < n
  }
  return dim;
}

MomentGraph build_moment_graph(const RootDatum& d, const ValuationProfile& v, Space space, const Window& window) {
  if (window.points().empty()) throw MathError("window is empty");
  MomentGraph g;
  g.space = space;
  g.window = window;
  auto pts = window.points();
  if (space == Space::grassmannian) {
    for (auto& p : pts) g.vertices.push_back({p, 0});
    for (size_t pi = 0; pi < d.positive.size(); ++pi) {
      int a = d.positive[pi];
      int va = v.values[pi];
      for (size_t i = 0; i < pts.size(); ++i)
        for (int j = 1; j <= va; ++j) {
          IVec other = ivec_add(pts[i], ivec_scale(j, d.coroots[a]));
          int k = g.vertex_index({other, 0});
          if (k < 0) continue;
          g.edges.push_back({static_cast<int>(i), k, a, dot(pts[i], d.roots[a]) + j, va});
        }
    }
    return g;
  }
  if (d.positive.size() != 1) throw MathError("flag moment graph restricted to semisimple rank one");
  int a = d.positive[0];
  int wa = d.reflection_index(a);
  int va = v.values[0];
  for (auto& p : pts) g.vertices.push_back({p, 0});
  for (auto& p : pts) g.vertices.push_back({p, wa});
  for (auto& p : pts) {
    int i = g.vertex_index({p, 0});
    for (int j = -va; j <= va - 1; ++j) {
      IVec mu = ivec_add(p, ivec_scale(j, d.coroots[a]));
      int k = g.vertex_index({mu, wa});
      if (k < 0) continue;
      g.edges.push_back({i, k, a, dot(p, d.roots[a]) + j, va});
    }
  }
  return g;
}

nlohmann::json CellInventory::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto& c : cells)
    j.push_back({{"id", c.id},
                 {"lambda", c.lambda},
                 {"family", std::string(1, c.family)},
                 {"j", c.j},
                 {"dim", c.dim},
                 {"defined_over_k", c.defined_over_k}});
  return j;
}

namespace {

bool orthogonal_roots(const RootDatum& d) {
  for (int a : d.positive)
    for (int b : d.positive)
      if (a != b && dot(d.coroots[a], d.roots[b]) != 0) return false;
  return true;
}

std::string lam_str(const IVec& l) {
  std::string s;
  for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s;
}

}  // namespace

CellInventory cell_inventory(const RootDatum& d, const ValuationProfile& v, Space space, const Window& window) {
  if (!orthogonal_roots(d)) throw MathError("inventory restricted to rank-one factors");
  if (space == Space::flag && d.positive.size() > 1) throw MathError("inventory restricted to rank-one factors");
  CellInventory inv;
  bool over_k = v.equal_valuation();
  size_t np = d.positive.size();
  for (auto& lam : window.points()) {
    if (space == Space::grassmannian || np == 0) {
      std::vector<int> j(np, 0);
      while (true) {
        Cell c;
        c.lambda = lam;
        c.family = 'x';
        c.j = j;
        for (int x : j) c.dim += x;
        c.defined_over_k = over_k;
        c.id = "x[" + lam_str(lam) + "](" + lam_str(IVec(j.begin(), j.end())) + ")";
        inv.cells.push_back(c);
        size_t i = 0;
        while (i < np && j[i] == v.values[i]) j[i++] = 0;
        if (i == np) break;
        ++j[i];
      }
    } else {
      int va = v.values[0];
      for (char fam : {'x', 'y'})
        for (int j = 0; j <= va; ++j) {
          Cell c;
          c.lambda = lam;
          c.family = fam;
          c.j = {j};
          c.dim = j;
          c.defined_over_k = over_k;
          c.id = std::string(1, fam) + "[" + lam_str(lam) + "](" + std::to_string(j) + ")";
          inv.cells.push_back(c);
        }
    }
  }
  return inv;
}

}  // namespace sf
