#pragma once

#include <map>
#include <string>
#include <vector>

#include "sf/laurent.hpp"
#include "sf/momentgraph.hpp"
#include "sf/polyalg.hpp"
#include "sf/rootdata.hpp"

namespace sf {

// Elements of K[Lambda] (x) S_k are Laurent vectors on monomials_of_degree(n, k).  On the flag the
// free basis is W x monomials, indexed w * dim S_k + i.
size_t piece_rank(Space space, const RootDatum& d, int k);
LaurentRing lattice_ring(const RootDatum& d);

// One Lambda-periodic family of relations in degree k.  kind 'L' is (1 - a^vee)^d (w (x) b); kind 'W'
// (flag only) is (1 - a^vee)^{d-1} (w (x) b - s_a w (x) b).
struct RelationFamily {
  int root = 0;
  int d = 1;
  char kind = 'L';
  int w = 0;
  LVec element;
  bool periodic = true;
};

// Relation families over the given positive roots (all of them when roots is null).
std::vector<RelationFamily> relation_generators(Space space, const RootDatum& d, const ValuationProfile& v, int k,
                                                const std::vector<int>* roots = nullptr);
FGModule graded_piece(Space space, const RootDatum& d, const ValuationProfile& v, int k,
                      const std::vector<int>* roots = nullptr);

struct GradedPresentation {
  Space space = Space::grassmannian;
  RootDatum datum;
  ValuationProfile profile;
  std::vector<int> roots;
  std::map<int, FGModule> pieces;

  static GradedPresentation build(Space space, const RootDatum& d, const ValuationProfile& v, int kmax,
                                  const std::vector<int>* roots = nullptr);
};

// Matrix (acting on columns) of the operator on piece k -> piece k - deg(op).
LaurentMatrix operator_matrix(Space space, const RootDatum& d, const DiffOperator& op, int k);
// Matrix of the finite part g on S_k coordinates (columns are images of monomials).
Mat poly_action_matrix(const RootDatum& d, const IMat& g, int k);

struct HomologyPiece {
  int degree = 0;  // homological degree 2k
  FGModule module;
  std::vector<LVec> generators;  // in piece k
};
// The part of the degree-k piece killed by every degree-one operator, reported in degree 2k.
// Odd homological degrees give the zero module.
HomologyPiece ordinary_homology(Space space, const RootDatum& d, const ValuationProfile& v, int q,
                                const std::vector<int>* roots = nullptr);

// Left action of lambda * w * aut on a piece-k element.
LVec left_action(Space space, const RootDatum& d, const AffineWeylElement& tau, int k, const LVec& x);
// Right multiplication on the K[W~] factor of a flag element, S untouched.
LVec springer_right_action(const RootDatum& d, const AffineWeylElement& w, int k, const LVec& x);

// Both return one check per family image that fails to reduce into the relation module.
VerificationReport check_right_action_stable(const RootDatum& d, const ValuationProfile& v, int kmax);
VerificationReport check_left_action_stable(Space space, const RootDatum& d, const ValuationProfile& v, int kmax);

// Combinatorial layer over K[Lambda] (x) Q[x, t] for the rank-one lattice with coroot 1.  Keys are
// (0, m) for l_m and (1, m) for r_m.
struct CombElement {
  std::map<std::pair<int, long>, Polynomial> terms;
  void add(int kind, long pos, const Polynomial& p);
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
  bool operator==(const CombElement& o) const;
};
RingPtr comb_ring();  // variables x, t (t extended)
CombElement comb_partial(const CombElement& e, int var);

enum class ExpansionForm { raw, closed };
struct CombinatorialGenerator {
  char kind = 'f';  // 'f' for f_{m,d}, 'g' for f_{a,b;d}
  long a = 0, b = 0;
  int d = 1;
  CombElement expansion;
};
CombinatorialGenerator expand_f_md(long m, int d, ExpansionForm form);
// t_scale is the multiple of t in ((u+v)x - t_scale t); the flag convention uses 2.
CombinatorialGenerator expand_f_abd(long a, long b, int d, ExpansionForm form, int t_scale = 2);

// sum_k (-1)^k C(n,k) p(k), p given by coefficients lowest degree first.
Rational binomial_alternating_sum(int n, const std::vector<Rational>& p);

VerificationReport check_fmd_closed_form(long mlo, long mhi, int dmax);
VerificationReport check_fabd_closed_form(int count, unsigned seed);
VerificationReport check_fmd_kernel_span(int vmax, int hmax);
VerificationReport check_degree_lemma(int instances, unsigned seed);
VerificationReport check_binomial_identity(int nmax, int random_per_n, unsigned seed);
VerificationReport check_flag_relations(int vmax, int hmax);
VerificationReport check_sl2_pieces(int vmax, int kmax);

}  // namespace sf
