#include "sf/endoscopy.hpp"

#include <algorithm>
#include <random>

namespace sf {

TransferData make_transfer(const RootDatum& d, const EndoscopicData& e, const ValuationProfile& v) {
  EndoscopicSubsystem sub = endoscopic_subsystem(d, e, v);
  return TransferData{d, e, v, sub.h_positive, transfer_factor(d, sub.h_positive, v), sub.r};
}

LaurentMatrix psi_matrix(const TransferData& t, Space space, int k) {
  if (k < t.r) return LaurentMatrix(lattice_ring(t.datum), 0, piece_rank(space, t.datum, k));
  return operator_matrix(space, t.datum, t.delta, k);
}

LVec apply_psi(const TransferData& t, Space space, int k, const LVec& x) {
  LaurentMatrix m = psi_matrix(t, space, k);
  LVec out(m.rows, LPoly(t.datum.n));
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero() && !x.at(j).is_zero()) out[i] += m.at(i, j) * x[j];
  return out;
}

std::vector<LPoly> j_generators(const TransferData& t) {
  std::vector<LPoly> js;
  for (int a : t.datum.positive)
    if (std::find(t.h_positive.begin(), t.h_positive.end(), a) == t.h_positive.end())
      js.push_back(LPoly::one_minus(t.datum.coroots[a]));
  if (js.empty()) js.push_back(LPoly::constant(t.datum.n, Cyc(1)));
  return js;
}

namespace {

std::string describe(const FGModule& m) {
  if (m.ring.n == 1) return rank_one_structure(m).str();
  return std::to_string(m.gens) + " generators, " + std::to_string(m.num_relations()) + " relations";
}

int default_cap(const TransferData& t) {
  int total = t.r + 2;
  for (size_t p = 0; p < t.datum.positive.size(); ++p) total += t.profile.values.at(p);
  return total;
}

}  // namespace

nlohmann::json ComparisonReport::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["r"] = r;
  j["verdict"] = verdict_str(overall());
  for (auto& d : degrees)
    j["degrees"].push_back({{"k", d.k},
                            {"g_side", d.g_side},
                            {"h_side", d.h_side},
                            {"kernel_J_torsion", verdict_str(d.kernel)},
                            {"cokernel_J_torsion", verdict_str(d.cokernel)}});
  if (!left_table.empty()) j["left_table"] = left_table;
  if (!right_table.empty()) j["right_table"] = right_table;
  for (auto& c : checks.checks)
    j["checks"].push_back({{"id", c.id}, {"anchor", c.anchor}, {"verdict", verdict_str(c.verdict)}, {"details", c.details}});
  return j;
}

ComparisonReport verify_localized_iso(const TransferData& t, Space space, int kmax, int cap) {
  ComparisonReport rep;
  rep.kind = std::string("localized-iso-") + space_name(space);
  rep.r = t.r;
  rep.checks.suite = rep.kind;
  if (cap < 0) cap = default_cap(t);
  auto js = j_generators(t);
  for (int k = 0; k <= kmax; ++k) {
    FGModule g = graded_piece(space, t.datum, t.profile, k);
    FGModule h = graded_piece(space, t.datum, t.profile, k - t.r, &t.h_positive);
    DegreeComparison dc{k, describe(g), describe(h)};
    LaurentMatrix phi = psi_matrix(t, space, k);
    if (h.gens == 0) {
      dc.kernel = is_J_torsion(g, js, cap);
      dc.cokernel = Verdict::pass;
    } else {
      KernelResult ker = module_map_kernel(g, h, phi);
      dc.kernel = ker.module.gens == 0 ? Verdict::pass : is_J_torsion(ker.module, js, cap);
      dc.cokernel = is_J_torsion(module_map_cokernel(h, phi), js, cap);
    }
    std::string ks = std::to_string(k);
    rep.checks.add("kernel-k" + ks, "kernel of Psi is J-torsion", dc.kernel, dc.g_side + " -> " + dc.h_side);
    rep.checks.add("cokernel-k" + ks, "cokernel of Psi is J-torsion", dc.cokernel, dc.g_side + " -> " + dc.h_side);
    rep.degrees.push_back(std::move(dc));
  }
  rep.checks.merge(check_eta_equivariance(t, space, std::min(kmax, t.r + 2), 5, 17));
  return rep;
}

std::vector<size_t> quotient_homology_dims(Space space, const RootDatum& d, const ValuationProfile& v,
                                           const Character& s, int mmax, const std::vector<int>* roots) {
  std::vector<size_t> dims(static_cast<size_t>(mmax + 1), 0);
  for (int q = 0; q <= mmax; q += 2) {
    HomologyPiece hp = ordinary_homology(space, d, v, q, roots);
    if (hp.module.gens == 0) continue;
    for (auto& tor : tor_against_character(hp.module, s, d.n))
      if (q + tor.p <= mmax) dims[static_cast<size_t>(q + tor.p)] += tor.dim;
  }
  return dims;
}

ComparisonReport verify_E2_shift(const TransferData& t, Space space, const Character& s, int mmax) {
  ComparisonReport rep;
  rep.kind = std::string("E2-shift-") + space_name(space);
  rep.r = t.r;
  rep.checks.suite = rep.kind;
  rep.left_table = quotient_homology_dims(space, t.datum, t.profile, s, mmax);
  rep.right_table = quotient_homology_dims(space, t.datum, t.profile, s, mmax, &t.h_positive);
  for (int m = 0; m <= mmax; ++m) {
    int mh = m - 2 * t.r;
    size_t expect = mh >= 0 ? rep.right_table[static_cast<size_t>(mh)] : 0;
    size_t got = rep.left_table[static_cast<size_t>(m)];
    rep.checks.add("shift-m" + std::to_string(m), "dim H_m for G equals dim H_{m-2r} for H", got == expect,
                   std::to_string(got) + " vs " + std::to_string(expect));
  }
  return rep;
}

namespace {

LVec random_element(std::mt19937& rng, int n, size_t len) {
  std::uniform_int_distribution<int> nterms(0, 2), ex(-2, 2), co(-3, 3);
  LVec x(len, LPoly(n));
  for (auto& p : x) {
    int nt = nterms(rng);
    for (int i = 0; i < nt; ++i) {
      IVec e(n);
      for (auto& c : e) c = ex(rng);
      int c = co(rng);
      if (c) p.add_term(e, Cyc(c));
    }
  }
  return x;
}

}  // namespace

VerificationReport check_eta_equivariance(const TransferData& t, Space space, int kmax, int samples, unsigned seed) {
  VerificationReport rep{"eta-equivariance", {}};
  std::mt19937 rng(seed);
  auto gens = stabilizer_generators(t.datum, t.profile, t.h_positive);
  size_t total = 0, bad = 0;
  std::string first;
  for (auto& tau : gens) {
    int eta = eta_character(t.datum, tau, t.endo, t.profile);
    for (int k = t.r; k <= std::max(kmax, t.r); ++k)
      for (int i = 0; i < samples; ++i) {
        LVec x = random_element(rng, t.datum.n, piece_rank(space, t.datum, k));
        LVec lhs = apply_psi(t, space, k, left_action(space, t.datum, tau, k, x));
        LVec rhs = left_action(space, t.datum, tau, k - t.r, apply_psi(t, space, k, x));
        for (auto& p : rhs) p = p.scaled(Cyc(eta));
        ++total;
        if (lhs != rhs && !bad++) first = element_str(t.datum, tau) + " in degree " + std::to_string(k);
      }
  }
  rep.add(std::string("eta-equivariance-") + space_name(space), "Psi transforms by the sign character eta",
          bad == 0, std::to_string(total) + " samples over " + std::to_string(gens.size()) + " generators" +
                        (bad ? ", first failure " + first : ""));
  return rep;
}

VerificationReport check_eta_multiplicativity(const TransferData& t, int pairs, unsigned seed) {
  VerificationReport rep{"eta-multiplicativity", {}};
  auto group = stabilizer_group_gamma(t.datum, t.profile, t.h_positive, 2);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
  size_t bad = 0;
  for (int i = 0; i < pairs; ++i) {
    const auto& a = group[pick(rng)];
    const auto& b = group[pick(rng)];
    int ea = eta_character(t.datum, a, t.endo, t.profile);
    int eb = eta_character(t.datum, b, t.endo, t.profile);
    if (eta_character(t.datum, compose(t.datum, a, b), t.endo, t.profile) != ea * eb) ++bad;
  }
  rep.add("eta-multiplicative", "eta is a character of the stabilizer", bad == 0,
          std::to_string(pairs) + " pairs from " + std::to_string(group.size()) + " elements");
  return rep;
}

}  // namespace sf
