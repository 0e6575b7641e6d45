#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sf {

using Integer = mpz_class;
using Rational = mpq_class;
using IVec = std::vector<long>;
using IMat = std::vector<IVec>;  // row-major integer matrices

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int N);
int euler_phi(int N);

// Element of Q(zeta_N) stored as its reduction modulo Phi_N.
// Rational values are always kept at conductor 1.
class Cyc {
 public:
  Cyc() : n_(1), c_(1) {}
  Cyc(long v) : n_(1), c_(1, Rational(v)) {}
  Cyc(const Rational& r) : n_(1), c_(1, r) {}
  Cyc(int N, std::vector<Rational> coeffs);

  static Cyc zeta(int N, long k = 1);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  const Rational& rational() const;

  Cyc lifted(int M) const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inv(); }
  Cyc inv() const;
  Cyc pow(long e) const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  std::string str() const;
  static Cyc parse(const std::string& s);

 private:
  void canonicalize();
  int n_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);

enum class FieldOp { add, mul, inv };
Cyc field_arithmetic(const Cyc& a, const Cyc& b, FieldOp op);
bool is_root_of_unity_one(const Cyc& z);

// Finite-order character of Z^n: e_i maps to zeta_order^{exps[i]}.
struct Character {
  int order = 1;
  std::vector<long> exps;

  static Character trivial(int n) { return {1, std::vector<long>(n, 0)}; }
  long exponent(const std::vector<long>& lam) const;
  Cyc operator()(const std::vector<long>& lam) const { return Cyc::zeta(order, exponent(lam)); }
  Character inverse() const;
  bool is_trivial_on(const std::vector<long>& lam) const { return exponent(lam) == 0; }
  bool operator==(const Character& o) const;
};

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);
Integer binomial(long n, long k);
Integer factorial(long n);
long lcm_long(long a, long b);

}  // namespace sf
