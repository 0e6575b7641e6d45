#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sf/rootdata.hpp"

namespace sf {

enum class Space { grassmannian, flag };
const char* space_name(Space s);
Space parse_space(const std::string& s);

// Finite box lo <= lambda <= hi in Lambda coordinates.
struct Window {
  IVec lo, hi;
  static Window cube(int n, long lo, long hi) { return {IVec(n, lo), IVec(n, hi)}; }
  std::vector<IVec> points() const;
  bool contains(const IVec& lam) const;
};

// Fixed point lambda * w for w in W (w = 0 on the Grassmannian).
struct MGVertex {
  IVec lambda;
  int w = 0;
  bool operator==(const MGVertex& o) const = default;
};

struct MGEdge {
  int v1 = 0, v2 = 0;
  int root = 0;     // positive root index into d.roots
  long level = 0;   // affine level k of the stabilizing affine root (alpha, k)
  int bound = 0;    // valuation bound v_alpha that admits the edge
};

struct MomentGraph {
  Space space = Space::grassmannian;
  std::vector<MGVertex> vertices;
  std::vector<MGEdge> edges;
  Window window;
  int vertex_index(const MGVertex& v) const;
  nlohmann::json to_json(const RootDatum& d) const;
};

int bruhat_cell_dimension(const RootDatum& d, const IVec& ell);
MomentGraph build_moment_graph(const RootDatum& d, const ValuationProfile& v, Space space, const Window& window);

// A T(O)-orbit type.  On the Grassmannian a cell is the orbit of lambda * prod_alpha x_alpha(-j_alpha),
// connecting lambda with lambda - j alpha^vee.  On the flag (semisimple rank one) family 'x' is the orbit
// of lambda * x(-j) starting at l_lambda, and family 'y' the orbit of lambda * y(m) starting at r_lambda,
// with j = 1 - m its dimension.
struct Cell {
  std::string id;
  IVec lambda;
  char family = 'x';
  std::vector<int> j;  // per positive root
  int dim = 0;
  bool defined_over_k = true;
};

struct CellInventory {
  std::vector<Cell> cells;
  nlohmann::json to_json() const;
};

CellInventory cell_inventory(const RootDatum& d, const ValuationProfile& v, Space space, const Window& window);

}  // namespace sf
