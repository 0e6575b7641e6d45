#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sf/endoscopy.hpp"
#include "sf/finitefield.hpp"

namespace sf {

struct FrobeniusData {
  long q = 2;
  AffineWeylElement tau;
  Character kappa;
  Character eta() const { return kappa.inverse(); }
};

// Validates q, kappa o tau == kappa, valuation preservation and the supported shape of tau.
void validate_frobenius(const RootDatum& d, const ValuationProfile& v, const FrobeniusData& f);

// Trace of sigma = q^k tau on Tor_p(H_2k, K_eta), sitting in degree m = 2k + p.
struct TraceEntry {
  int m = 0, k = 0, p = 0;
  size_t dim = 0;
  Cyc trace;
};

struct TraceReport {
  std::string label;
  long q = 0;
  std::vector<TraceEntry> entries;
  Cyc alternating_sum;
  bool has_point_side = false;
  std::vector<std::pair<long, long>> point_counts;  // (lambda, |Lambda^sigma \ X^{e^lambda sigma}|)
  Cyc point_side;
  Verdict verdict = Verdict::undetermined;
  std::string details;
  nlohmann::json to_json() const;
  std::string table() const;
};

// The trace side; when the point-count side is in scope it is filled in and compared.
TraceReport lefschetz_trace(Space space, const RootDatum& d, const ValuationProfile& v, const FrobeniusData& f);
long twisted_point_count(Space space, const RootDatum& d, const ValuationProfile& v, const FrobeniusData& f,
                         long lambda);
Cyc kappa_orbital_integral(Space space, const RootDatum& d, const ValuationProfile& v, const FrobeniusData& f);

struct FundamentalLemmaReport {
  TraceReport g_side, h_side;
  int r = 0;
  int eta_tau = 1;
  Cyc lhs, rhs;  // O^kappa_{u_H} and eta(tau) q^{-r} O^kappa_u
  Verdict verdict = Verdict::undetermined;
  nlohmann::json to_json() const;
};
FundamentalLemmaReport fundamental_lemma_check(const TransferData& t, const FrobeniusData& f);

}  // namespace sf
