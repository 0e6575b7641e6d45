#include "sf/finitefield.hpp"

#include <stdexcept>

#include "sf/exactfield.hpp"

namespace sf {

namespace {

using Poly = std::vector<int>;  // over F_p, lowest first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, long p) {
  trim(a);
  size_t dm = m.size() - 1;
  while (a.size() > dm) {
    long c = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] = static_cast<int>(((a[shift + i] - c * m[i]) % p + p) % p);
    trim(a);
  }
  return a;
}

Poly digits(long x, long p, int k) {
  Poly a(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    a[static_cast<size_t>(i)] = static_cast<int>(x % p);
    x /= p;
  }
  return a;
}

long encode(const Poly& a, long p) {
  long x = 0;
  for (size_t i = a.size(); i-- > 0;) x = x * p + a[i];
  return x;
}

bool irreducible(const Poly& m, long p) {
  int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= k / 2; ++d)
    for (long c = 0; c < ipow(p, d); ++c) {
      Poly f = digits(c, p, d);
      f.push_back(1);
      if (poly_mod(m, f, p).empty()) return false;
    }
  return true;
}

}  // namespace

std::pair<long, int> prime_power(long q) {
  if (q < 2) return {0, 0};
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (!p) return {q, 1};
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1 ? std::make_pair(p, k) : std::make_pair(0L, 0);
}

FiniteField::FiniteField(long order) {
  auto [p, k] = prime_power(order);
  if (!p) throw MathError("field order must be a prime power");
  if (order > 1024) throw MathError("field order above 1024 is out of scope");
  p_ = p;
  k_ = k;
  q_ = order;
  for (long c = 0; c < ipow(p, k); ++c) {
    Poly m = digits(c, p, k);
    m.push_back(1);
    if (irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }
  size_t Q = static_cast<size_t>(q_);
  add_.assign(Q * Q, 0);
  mul_.assign(Q * Q, 0);
  neg_.assign(Q, 0);
  inv_.assign(Q, 0);
  for (long a = 0; a < q_; ++a) {
    Poly da = digits(a, p, k);
    Poly na(da.size());
    for (size_t i = 0; i < da.size(); ++i) na[i] = static_cast<int>((p - da[i]) % p);
    neg_[a] = static_cast<int>(encode(na, p));
    for (long b = 0; b < q_; ++b) {
      Poly db = digits(b, p, k);
      Poly s(da.size());
      for (size_t i = 0; i < da.size(); ++i) s[i] = static_cast<int>((da[i] + db[i]) % p);
      add_[a * Q + b] = static_cast<int>(encode(s, p));
      Poly prod(da.size() + db.size(), 0);
      for (size_t i = 0; i < da.size(); ++i)
        for (size_t j = 0; j < db.size(); ++j) prod[i + j] = static_cast<int>((prod[i + j] + da[i] * db[j]) % p);
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(static_cast<size_t>(k), 0);
      mul_[a * Q + b] = static_cast<int>(encode(r, p));
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[a * Q + b] == 1) inv_[a] = static_cast<int>(b);
}

int FiniteField::inv(int a) const {
  if (a == 0) throw MathError("division by zero");
  return inv_[a];
}

int FiniteField::pow(int a, long e) const {
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int FiniteField::frobenius(int a, int s) const {
  for (int i = 0; i < s; ++i) a = pow(a, p_);
  return a;
}

int FiniteField::from_int(long c) const { return static_cast<int>(((c % p_) + p_) % p_); }

Series series_mul(const FiniteField& f, const Series& a, const Series& b) {
  Series c(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; i + j < a.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return c;
}

Series series_inv(const FiniteField& f, const Series& a) {
  Series b(a.size(), 0);
  int i0 = f.inv(a.at(0));
  b[0] = i0;
  for (size_t n = 1; n < a.size(); ++n) {
    int s = 0;
    for (size_t i = 1; i <= n; ++i) s = f.add(s, f.mul(a[i], b[n - i]));
    b[n] = f.neg(f.mul(s, i0));
  }
  return b;
}

}  // namespace sf
