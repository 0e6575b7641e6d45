#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sf/exactfield.hpp"
#include "sf/report.hpp"

namespace sf {

using Exp = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exp& a, const Exp& b) const;
};

int total_degree(const Exp& e);
// Monomials of total degree k in n variables, in decreasing grlex order.
std::vector<Exp> monomials_of_degree(int n, int k);

struct PolyRing {
  int rank = 1;
  std::vector<std::string> labels;
  bool extended = false;  // last variable is the extended-torus variable t

  static std::shared_ptr<const PolyRing> make(int n, std::vector<std::string> labels = {}, bool extended = false);
};
using RingPtr = std::shared_ptr<const PolyRing>;

// Shared sparse storage for polynomials and constant-coefficient operators.
struct SparsePoly {
  RingPtr ring;
  std::map<Exp, Cyc, GrlexLess> terms;

  SparsePoly() = default;
  explicit SparsePoly(RingPtr r) : ring(std::move(r)) {}

  int rank() const { return ring->rank; }
  bool is_zero() const { return terms.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Cyc coeff(const Exp& e) const;
  void add_term(const Exp& e, const Cyc& c);
  void scale(const Cyc& c);
  std::string str(const std::string& var_prefix = "") const;
};

struct Polynomial : SparsePoly {
  using SparsePoly::SparsePoly;
  static Polynomial variable(RingPtr r, int i);
  static Polynomial constant(RingPtr r, const Cyc& c);
  static Polynomial monomial(RingPtr r, const Exp& e, const Cyc& c = Cyc(1));
  // x_lambda = sum_i lambda_i x_i.
  static Polynomial linear(RingPtr r, const std::vector<long>& coeffs);
  static Polynomial parse(RingPtr r, const std::string& text);
  std::string str() const { return SparsePoly::str(); }
};

struct DiffOperator : SparsePoly {
  using SparsePoly::SparsePoly;
  static DiffOperator partial(RingPtr r, int i);
  static DiffOperator constant(RingPtr r, const Cyc& c);
  // d_alpha = sum_i alpha_i d_i.
  static DiffOperator linear(RingPtr r, const std::vector<long>& coeffs);
  std::string str() const { return SparsePoly::str("d"); }
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Cyc& c, const Polynomial& a);
bool operator==(const Polynomial& a, const Polynomial& b);
DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
DiffOperator operator*(const Cyc& c, const DiffOperator& a);
bool operator==(const DiffOperator& a, const DiffOperator& b);
DiffOperator pow(const DiffOperator& d, int e);
Polynomial pow(const Polynomial& p, int e);

Polynomial apply(const DiffOperator& op, const Polynomial& p);
Cyc pairing(const DiffOperator& op, const Polynomial& p);

// Linear change of variables: variable i is replaced by images[i].
Polynomial substitute_linear(const Polynomial& p, const std::vector<Polynomial>& images);
DiffOperator substitute_linear(const DiffOperator& d, const std::vector<DiffOperator>& images);

// Coordinates of a homogeneous degree-k element against monomials_of_degree(n, k).
std::vector<Cyc> coordinates(const SparsePoly& p, int k);
Polynomial from_coordinates(RingPtr r, int k, const std::vector<Cyc>& coords);

struct GradedSubspace {
  int degree = 0;
  std::vector<Polynomial> basis;
  size_t dim() const { return basis.size(); }
};

// {p in S_k : op^power p = 0 for every listed pair}, echelonized in grlex order.
GradedSubspace annihilator_basis(RingPtr r, const std::vector<std::pair<DiffOperator, int>>& ops, int k);
// Pairing matrix D_k x S_k on monomial bases.
std::vector<std::vector<Cyc>> pairing_matrix(RingPtr r, int k);
bool same_subspace(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b);

VerificationReport check_relatively_prime_lemma(const DiffOperator& d1, const DiffOperator& d2, int maxdeg);

}  // namespace sf
