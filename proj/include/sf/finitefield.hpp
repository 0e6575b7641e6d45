#pragma once

#include <cstdint>
#include <vector>

namespace sf {

// GF(p^k) with elements encoded as integers in [0, p^k) whose base-p digits are the coefficients
// of a polynomial in the generator, reduced by a monic irreducible modulus found by search.
class FiniteField {
 public:
  explicit FiniteField(long order);

  long order() const { return q_; }
  long characteristic() const { return p_; }
  int degree() const { return k_; }
  int add(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long e) const;
  // x -> x^(p^s)
  int frobenius(int a, int s = 1) const;
  // Image of the prime-field integer c.
  int from_int(long c) const;
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  long p_ = 2, q_ = 2;
  int k_ = 1;
  std::vector<int> modulus_;  // lowest degree first, monic of degree k
  std::vector<int> add_, mul_, neg_, inv_;
};

// Returns (p, k) with q = p^k, or (0, 0) if q is not a prime power.
std::pair<long, int> prime_power(long q);

// Truncated power series F[e]/e^j over a finite field, coefficients lowest first.
using Series = std::vector<int>;
Series series_mul(const FiniteField& f, const Series& a, const Series& b);
Series series_inv(const FiniteField& f, const Series& a);  // a[0] != 0
// Calls visit on every unit of F[e]/e^j.
template <class Visit>
void for_each_unit(const FiniteField& f, int j, Visit&& visit) {
  Series c(static_cast<size_t>(j), 0);
  const int q = static_cast<int>(f.order());
  for (c[0] = 1;;) {
    visit(c);
    size_t i = 0;
    while (i < c.size()) {
      if (++c[i] < q) break;
      c[i] = i == 0 ? 1 : 0;
      ++i;
    }
    if (i == c.size()) return;
  }
}

}  // namespace sf
