#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sf/presentation.hpp"

namespace sf {

struct TransferData {
  RootDatum datum;
  EndoscopicData endo;
  ValuationProfile profile;
  std::vector<int> h_positive;
  DiffOperator delta;
  int r = 0;
};
TransferData make_transfer(const RootDatum& d, const EndoscopicData& e, const ValuationProfile& v);

// Matrix of 1 (x) Delta from piece k of G to piece k - r (zero rows when k < r).
LaurentMatrix psi_matrix(const TransferData& t, Space space, int k);
LVec apply_psi(const TransferData& t, Space space, int k, const LVec& x);
// The elements 1 - a^vee for the roots of G outside H; {1} when there are none.
std::vector<LPoly> j_generators(const TransferData& t);

struct DegreeComparison {
  int k = 0;
  std::string g_side, h_side;  // module structures (rank one) or generator/relation counts
  Verdict kernel = Verdict::pass, cokernel = Verdict::pass;
};

struct ComparisonReport {
  std::string kind;
  int r = 0;
  std::vector<DegreeComparison> degrees;
  std::vector<size_t> left_table, right_table;
  VerificationReport checks;
  Verdict overall() const { return checks.overall(); }
  nlohmann::json to_json() const;
};

ComparisonReport verify_localized_iso(const TransferData& t, Space space, int kmax, int cap = -1);

// dim H_m(Lambda \ X; L_s) for m = 0..mmax, assembled from Tor_p(H_q, K_s).
std::vector<size_t> quotient_homology_dims(Space space, const RootDatum& d, const ValuationProfile& v,
                                           const Character& s, int mmax, const std::vector<int>* roots = nullptr);

ComparisonReport verify_E2_shift(const TransferData& t, Space space, const Character& s, int mmax);

// Psi(tau x) == eta(tau) tau Psi(x) on random elements, for each stabilizer generator tau.
VerificationReport check_eta_equivariance(const TransferData& t, Space space, int kmax, int samples, unsigned seed);
// eta(ab) == eta(a) eta(b) on random pairs from the stabilizer.
VerificationReport check_eta_multiplicativity(const TransferData& t, int pairs, unsigned seed);

}  // namespace sf
