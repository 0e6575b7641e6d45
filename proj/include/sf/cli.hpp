#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sf/orbital.hpp"

namespace sf {

constexpr int kSchemaVersion = 1;

// Character given as "trivial", "-1" (value -1 on the coroot of a rank-one lattice) or "order:e1,e2,...".
Character parse_character(const RootDatum& d, const std::string& spec);
// "id", "w" (the reflection of the first positive root) or a Weyl index.
AffineWeylElement parse_tau(const RootDatum& d, const std::string& spec);

struct RunConfig {
  CartanSpec cartan;
  std::vector<int> valuations{1};  // one entry means a constant profile
  std::string s = "-1";            // endoscopic character
  std::string kappa = "trivial";
  std::string tau = "id";
  std::vector<long> q{2};
  Space space = Space::grassmannian;
  int kmax = 4;
  int window = 2;  // moment-graph box radius
  // lemma-suite bounds
  int vmax = 4;
  int hmax = 6;
  int mrange = 6;  // m in [-mrange, mrange]
  int dmax = 5;
  int random_instances = 100;
  unsigned seed = 1;

  RootDatum datum() const;
  ValuationProfile profile(const RootDatum& d) const;
  // Builds the datum and every character once so bad input fails before any computation.
  void validate() const;
};

RunConfig parse_config_text(const std::string& yaml);
RunConfig load_config(const std::string& path);

VerificationReport run_lemma_suite(const RunConfig& c);
nlohmann::json report_json(const VerificationReport& r);

struct DispatchResult {
  int exit_code = 0;
  std::vector<std::string> files;
  std::string text;
};

int exit_code_for(Verdict v);
// Writes <subcommand>.json and <subcommand>.txt into out_dir.
DispatchResult dispatch(const std::string& subcommand, const RunConfig& c, const std::string& out_dir);

}  // namespace sf
