#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sf/exactfield.hpp"
#include "sf/polyalg.hpp"

namespace sf {

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& a, const IVec& v);
IMat imat_transpose(const IMat& a);
// Inverse of a unimodular matrix.
IMat imat_inverse(const IMat& a);
long imat_det(const IMat& a);
long dot(const IVec& a, const IVec& b);
IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_scale(long c, const IVec& a);

// Root datum on X_* = Z^n with the identity pairing against X^* = Z^n.
struct RootDatum {
  int n = 0;
  std::string name;
  bool adjoint = false;
  std::vector<IVec> roots;    // in X^*
  std::vector<IVec> coroots;  // in X_*, coroots[i] pairs with roots[i]
  std::vector<int> positive;  // indices into roots
  std::vector<int> simple;    // indices into roots
  std::vector<IMat> weyl;     // action on X_*, weyl[0] is the identity
  std::vector<IMat> auts;     // diagram automorphisms on X_*, auts[0] is the identity

  int rank() const { return n; }
  int root_index(const IVec& alpha) const;  // -1 if not a root
  int negative_of(int i) const;
  bool is_positive(int i) const;
  int semisimple_rank() const { return static_cast<int>(simple.size()); }
  // Position of a root among the positive roots, with the sign of the root.
  std::pair<int, int> positive_position(int i) const;
  int weyl_index(const IMat& g) const;
  int weyl_mul(int a, int b) const;
  int weyl_inverse(int a) const;
  int reflection_index(int root) const;
  // Contragredient action on X^*.
  IVec act_on_character(const IMat& g, const IVec& chi) const;
  RingPtr sym_ring() const;
  DiffOperator d_alpha(int root) const;
};

struct CartanSpec {
  std::string type = "A1";  // A1..A3, B2, C2, G2, products such as A1xA1
  std::string form = "sc";  // "sc" or "adjoint"
  int torus_rank = 0;       // extra central torus factor
};

RootDatum build_root_datum(const CartanSpec& spec);
// Explicit simple roots (in X^*) and matching simple coroots (in X_*), each of length n.
RootDatum build_root_datum(int n, const std::vector<IVec>& simple_roots, const std::vector<IVec>& simple_coroots,
                           const std::string& name = "explicit");
RootDatum torus_datum(int n);
RootDatum sl2_datum();
RootDatum pgl2_datum();
RootDatum gl2_datum();

enum class RankOneCase { SL2_times_torus = 1, PGL2_times_torus = 2, GL2_times_torus = 3 };
RankOneCase classify_semisimple_rank_one(const RootDatum& d);
const char* rank_one_case_name(RankOneCase c);

struct ValuationProfile {
  std::vector<int> values;  // indexed like d.positive
  int of_root(const RootDatum& d, int root) const;
  bool equal_valuation() const;
  static ValuationProfile constant(const RootDatum& d, int v);
};

struct EndoscopicData {
  Character s;
  // Positive roots whose coroots are killed by s, as indices into d.roots.
  std::vector<int> h_positive(const RootDatum& d) const;
  bool in_h(const RootDatum& d, int root) const;
};

struct EndoscopicSubsystem {
  std::vector<int> h_positive;
  int r = 0;
  ValuationProfile h_profile;  // restricted to h_positive, in that order
};
EndoscopicSubsystem endoscopic_subsystem(const RootDatum& d, const EndoscopicData& e, const ValuationProfile& v);

// lambda * g * aut, with g in W and aut a diagram automorphism.
struct AffineWeylElement {
  IVec translation;
  int w = 0;
  int aut = 0;

  static AffineWeylElement identity(const RootDatum& d) { return {IVec(d.n, 0), 0, 0}; }
  static AffineWeylElement translation_by(const IVec& lam) { return {lam, 0, 0}; }
  IMat finite_matrix(const RootDatum& d) const;
  IVec act(const RootDatum& d, const IVec& lam) const;
  bool operator==(const AffineWeylElement& o) const = default;
};
AffineWeylElement compose(const RootDatum& d, const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement inverse(const RootDatum& d, const AffineWeylElement& a);
std::string element_str(const RootDatum& d, const AffineWeylElement& a);

// Finite part acting on S and on D.
Polynomial act_on_poly(const RootDatum& d, const IMat& g, const Polynomial& p);
DiffOperator act_on_diff(const RootDatum& d, const IMat& g, const DiffOperator& op);

DiffOperator transfer_factor(const RootDatum& d, const std::vector<int>& h_positive, const ValuationProfile& v);

// Elements with translations in [-bound, bound]^n whose finite part preserves the valuations
// (and the endoscopic root set when given).
std::vector<AffineWeylElement> stabilizer_group_gamma(const RootDatum& d, const ValuationProfile& v,
                                                      const std::optional<std::vector<int>>& h_positive,
                                                      int bound);
// Generators: unit translations plus the admissible finite elements.
std::vector<AffineWeylElement> stabilizer_generators(const RootDatum& d, const ValuationProfile& v,
                                                     const std::optional<std::vector<int>>& h_positive);

int eta_character(const RootDatum& d, const AffineWeylElement& tau, const EndoscopicData& e,
                  const ValuationProfile& v);

}  // namespace sf
