#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sf/exactfield.hpp"
#include "sf/linalg.hpp"
#include "sf/report.hpp"

namespace sf {

struct LaurentRing {
  int n = 1;
  int conductor = 1;
  bool operator==(const LaurentRing&) const = default;
};

// Laurent polynomial in t_1..t_n.
struct LPoly {
  int n = 1;
  std::map<IVec, Cyc> terms;

  LPoly() = default;
  explicit LPoly(int nvars) : n(nvars) {}
  static LPoly constant(int n, const Cyc& c);
  static LPoly monomial(const IVec& e, const Cyc& c = Cyc(1));
  static LPoly one_minus(const IVec& e);  // 1 - t^e

  bool is_zero() const { return terms.empty(); }
  bool is_unit() const { return terms.size() == 1; }
  Cyc coeff(const IVec& e) const;
  void add_term(const IVec& e, const Cyc& c);
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly operator-() const;
  LPoly scaled(const Cyc& c) const;
  LPoly shifted(const IVec& e) const;  // multiplied by t^e
  LPoly pow(int e) const;

  Cyc eval(const Character& s) const;
  // t^lambda -> t^{g lambda}.
  LPoly act(const IMat& g) const;
  IVec min_exps() const;
  IVec max_exps() const;
  int conductor() const;

  // Univariate helpers.
  long low() const;
  long high() const;
  long span() const { return is_zero() ? -1 : high() - low(); }
  // Unit multiple with lowest exponent 0 and leading coefficient 1.
  LPoly normalized() const;
  // The unit u with normalized() == u * this.
  LPoly normalizing_unit() const;

  std::string str(const std::string& var = "t") const;
  bool operator==(const LPoly& o) const { return n == o.n && terms == o.terms; }
};

LPoly operator+(LPoly a, const LPoly& b);
LPoly operator-(LPoly a, const LPoly& b);
LPoly operator*(const LPoly& a, const LPoly& b);

// Univariate Euclidean division: a = q b + r with span(r) < span(b).
void ldivmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r);
bool ldivides(const LPoly& b, const LPoly& a);
LPoly lgcd(const LPoly& a, const LPoly& b);

struct LaurentMatrix {
  LaurentRing ring;
  size_t rows = 0, cols = 0;
  std::vector<LPoly> e;  // row-major

  LaurentMatrix() = default;
  LaurentMatrix(LaurentRing r, size_t rows, size_t cols);
  static LaurentMatrix identity(LaurentRing r, size_t n);
  LPoly& at(size_t i, size_t j) { return e[i * cols + j]; }
  const LPoly& at(size_t i, size_t j) const { return e[i * cols + j]; }
  LaurentMatrix transposed() const;
  Mat eval(const Character& s) const;
  LaurentMatrix act(const IMat& g) const;
  std::vector<LPoly> column(size_t j) const;
  std::vector<LPoly> row(size_t i) const;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);

using LVec = std::vector<LPoly>;

// Module R^gens modulo the row span of `relations` (relations.cols == gens).
struct FGModule {
  LaurentRing ring;
  size_t gens = 0;
  LaurentMatrix relations;

  static FGModule free_module(LaurentRing r, size_t g);
  void add_relation(const LVec& rel);
  size_t num_relations() const { return relations.rows; }
};

struct SNFResult {
  std::vector<LPoly> diagonal;  // min(rows, cols) entries, normalized, zeros for rank deficiency
  LaurentMatrix U, V, D;        // U * m * V == D
  LaurentMatrix Vinv;           // V * Vinv == identity
  std::vector<LPoly> invariant_factors() const;  // nonzero, nonunit diagonal entries
  size_t rank() const;
};

SNFResult smith_normal_form_rank1(const LaurentMatrix& m);

// Module structure over K[t^{+-1}]: free rank plus nonunit invariant factors.
struct RankOneStructure {
  size_t free_rank = 0;
  std::vector<LPoly> torsion;
  std::string str() const;
};
RankOneStructure rank_one_structure(const FGModule& m);

struct TorResult {
  int p = 0;
  size_t dim = 0;
  std::optional<Mat> basis;
  std::optional<Mat> frobenius;
};

enum class TorPath { automatic, snf, resolution };
std::vector<TorResult> tor_against_character(const FGModule& mod, const Character& s, int pmax,
                                             TorPath path = TorPath::automatic);

// A free resolution ... -> F_2 -> F_1 -> F_0 of the module, differentials acting on column vectors.
struct FreeResolution {
  LaurentRing ring;
  std::vector<size_t> ranks;          // rank F_p
  std::vector<LaurentMatrix> maps;    // maps[p] : F_{p+1} -> F_p  (ranks[p] x ranks[p+1])
};
FreeResolution free_resolution(const FGModule& mod, int length);

// Syzygies of the given Laurent vectors (each of length b): returns generators of {c : sum c_i v_i = 0}.
std::vector<LVec> laurent_syzygies(const std::vector<LVec>& vecs, size_t b, int n);

class GroebnerEngine;

// Submodule of R^b generated by Laurent vectors, with membership and cofactor lifting.
class LaurentSubmodule {
 public:
  LaurentSubmodule(int n, size_t b, std::vector<LVec> gens);
  ~LaurentSubmodule();
  LaurentSubmodule(LaurentSubmodule&&) noexcept;
  bool contains(const LVec& v) const;
  // v = sum c_i gens_i; false if not a member.
  bool express(const LVec& v, LVec& coeffs) const;
  const std::vector<LVec>& generators() const { return gens_; }
  size_t ambient() const { return b_; }
  // dim_K of R^b / N, or nullopt if infinite.
  std::optional<size_t> quotient_dimension() const;
  // Reduced Groebner basis transported back to Laurent vectors.
  std::vector<LVec> basis() const;

 private:
  int n_;
  size_t b_;
  std::vector<LVec> gens_;
  std::vector<IVec> shifts_;
  GroebnerEngine* gb_;
};

struct GroebnerModuleResult {
  std::vector<LVec> basis;
  LaurentMatrix syzygies;  // columns are syzygies among the input columns
};
// Groebner basis of the column span of m, plus its syzygies.  Lattice rank at most 3.
GroebnerModuleResult groebner_module_basis(const LaurentMatrix& m);

// Kernel of phi : src -> tgt, phi given as a tgt.gens x src.gens matrix.
struct KernelResult {
  FGModule module;
  std::vector<LVec> generators;  // in R^{src.gens}
};
KernelResult module_map_kernel(const FGModule& src, const FGModule& tgt, const LaurentMatrix& phi);
FGModule module_map_cokernel(const FGModule& tgt, const LaurentMatrix& phi);

// Some product of the Jgens annihilates the module.  Undetermined when the capped search fails and
// the exact saturation test exceeds its budget.
Verdict is_J_torsion(const FGModule& mod, const std::vector<LPoly>& jgens, int cap = -1);

// Drop generators that are redundant modulo the relations; returns a smaller presentation plus
// the surviving generator indices.
FGModule prune_presentation(const FGModule& m, std::vector<size_t>* kept = nullptr);

std::string lvec_str(const LVec& v);

}  // namespace sf
