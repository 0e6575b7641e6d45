#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sf/exactfield.hpp"

namespace sf {

constexpr int kMaxVars = 6;

// Monomial times basis vector e_comp.
struct Mon {
  std::array<int16_t, kMaxVars> e{};
  int16_t deg = 0;
  int32_t comp = 0;
};

// Term-over-position, graded lexicographic on exponents; lower component index is larger.
int mon_cmp(const Mon& a, const Mon& b);
bool mon_divides(const Mon& a, const Mon& b);  // same component and exponentwise <=
Mon mon_lcm(const Mon& a, const Mon& b);
Mon mon_div(const Mon& b, const Mon& a);        // b / a, component 0
Mon mon_mul(const Mon& a, const Mon& b);        // exponents add, component of b

struct Term {
  Mon m;
  Cyc c;
};

// Element of P^b (or of P when every component is 0), terms sorted decreasingly.
struct PVec {
  std::vector<Term> t;
  bool is_zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
};

PVec pvec_add(const PVec& a, const PVec& b);
// a + c * m * b, where m is a monomial of component 0.
PVec pvec_axpy(const PVec& a, const Cyc& c, const Mon& m, const PVec& b);
PVec pvec_scale(const PVec& a, const Cyc& c);
// poly (component 0) times vector.
PVec pvec_mul(const PVec& poly, const PVec& v);
PVec pvec_from_terms(std::vector<Term> terms);  // sorts and combines

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Buchberger with the normal selection strategy and optional cofactor tracking.
class GroebnerEngine {
 public:
  GroebnerEngine(int nvars, std::vector<PVec> gens, bool track, size_t budget = 200000);

  const std::vector<PVec>& basis() const { return G_; }
  // Remainder of f; quotients (if requested) expressed against the input generators.
  PVec reduce(const PVec& f, std::vector<PVec>* quot_inputs) const;
  // Generators of the syzygy module of the input generators.
  std::vector<std::vector<PVec>> input_syzygies() const;
  // Number of standard monomials in P^ncomp, or nullopt if infinite.
  std::optional<size_t> standard_monomial_count(int ncomp) const;
  int nvars() const { return nv_; }
  size_t num_inputs() const { return inputs_.size(); }

 private:
  PVec reduce_wrt_basis(const PVec& f, std::vector<PVec>* quot_basis) const;
  void add_element(PVec g, std::vector<PVec> cof);
  std::vector<PVec> combine_cofactors(const std::vector<PVec>& quot_basis) const;
  void interreduce();

  int nv_;
  bool track_;
  size_t budget_;
  std::vector<PVec> inputs_;
  std::vector<PVec> G_;
  std::vector<std::vector<PVec>> cof_;  // G_[i] = sum_j cof_[i][j] * inputs_[j]
};

}  // namespace sf
