#include "sf/exactfield.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sf {

namespace {

std::mutex g_phi_mutex;
std::map<int, std::vector<Integer>> g_phi_cache;

std::vector<Integer> compute_phi(int N) {
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> p(N + 1, 0);
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    const auto& q = cyclotomic_polynomial(d);
    int dq = static_cast<int>(q.size()) - 1;
    int dp = static_cast<int>(p.size()) - 1;
    std::vector<Integer> quot(dp - dq + 1, 0);
    for (int i = dp; i >= dq; --i) {
      Integer c = p[i];  // q is monic
      quot[i - dq] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = quot;
  }
  return p;
}

void reduce_mod_phi(std::vector<Rational>& p, int N) {
  const auto& phi = cyclotomic_polynomial(N);
  int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (int j = 0; j < d; ++j)
      if (phi[j] != 0) p[i - d + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(d, Rational(0));
}

std::vector<Rational> raw_lift(const Cyc& a, int M) {
  int N = a.conductor();
  if (N == M) return a.coeffs();
  if (M % N) throw MathError("conductor lift requires divisibility");
  int step = M / N;
  std::vector<Rational> out((a.coeffs().size() - 1) * step + 1, Rational(0));
  for (size_t k = 0; k < a.coeffs().size(); ++k) out[k * step] = a.coeffs()[k];
  reduce_mod_phi(out, M);
  return out;
}

}  // namespace

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

const std::vector<Integer>& cyclotomic_polynomial(int N) {
  if (N < 1) throw MathError("conductor must be positive");
  {
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    auto it = g_phi_cache.find(N);
    if (it != g_phi_cache.end()) return it->second;
  }
  std::vector<Integer> p;
  if (N == 1)
    p = {Integer(-1), Integer(1)};
  else
    p = compute_phi(N);
  std::lock_guard<std::mutex> lk(g_phi_mutex);
  return g_phi_cache.emplace(N, std::move(p)).first->second;
}

int euler_phi(int N) { return static_cast<int>(cyclotomic_polynomial(N).size()) - 1; }

Cyc::Cyc(int N, std::vector<Rational> coeffs) : n_(N), c_(std::move(coeffs)) {
  if (N < 1) throw MathError("conductor must be positive");
  if (c_.empty()) c_.push_back(0);
  for (auto& x : c_) x.canonicalize();
  reduce_mod_phi(c_, N);
  if (c_.empty()) c_.push_back(0);
  canonicalize();
}

Cyc Cyc::zeta(int N, long k) {
  k %= N;
  if (k < 0) k += N;
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = 1;
  return Cyc(N, std::move(c));
}

void Cyc::canonicalize() {
  if (n_ == 1) {
    c_.resize(1);
    return;
  }
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  c_.resize(1);
  n_ = 1;
}

bool Cyc::is_zero() const { return n_ == 1 && c_[0] == 0; }
bool Cyc::is_one() const { return n_ == 1 && c_[0] == 1; }

const Rational& Cyc::rational() const {
  if (n_ != 1) throw MathError("element is not rational");
  return c_[0];
}

Cyc Cyc::lifted(int M) const {
  Cyc r;
  r.n_ = M;
  r.c_ = raw_lift(*this, M);
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (n_ == 1 && o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  int M = static_cast<int>(lcm_long(n_, o.n_));
  auto a = raw_lift(*this, M);
  auto b = raw_lift(o, M);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  n_ = M;
  c_ = std::move(a);
  canonicalize();
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  if (n_ == 1 && o.n_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.n_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    canonicalize();
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    canonicalize();
    return *this;
  }
  int M = static_cast<int>(lcm_long(n_, o.n_));
  auto a = raw_lift(*this, M);
  auto b = raw_lift(o, M);
  std::vector<Rational> p(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) p[i + j] += a[i] * b[j];
  }
  reduce_mod_phi(p, M);
  n_ = M;
  c_ = std::move(p);
  canonicalize();
  return *this;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw MathError("division by zero");
  if (n_ == 1) return Cyc(Rational(1) / c_[0]);
  // Solve (multiplication by this) x = 1 in the power basis.
  int d = static_cast<int>(c_.size());
  std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d + 1, Rational(0)));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> col = (*this * Cyc::zeta(n_, j)).lifted(n_).c_;
    for (int i = 0; i < d; ++i) A[i][j] = col[i];
  }
  A[0][d] = 1;
  for (int c = 0, r = 0; c < d; ++c, ++r) {
    int p = r;
    while (p < d && A[p][c] == 0) ++p;
    if (p == d) throw MathError("division by zero");
    std::swap(A[p], A[r]);
    Rational piv = A[r][c];
    for (int k = c; k <= d; ++k) A[r][k] /= piv;
    for (int i = 0; i < d; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (int k = c; k <= d; ++k) A[i][k] -= f * A[r][k];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = A[i][d];
  return Cyc(n_, std::move(x));
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyc r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  int M = static_cast<int>(lcm_long(a.n_, b.n_));
  return raw_lift(a, M) == raw_lift(b, M);
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t.empty()) throw MathError("empty rational literal");
  Rational r;
  if (r.set_str(t, 10) != 0) throw MathError("bad rational literal: " + s);
  if (r.get_den() == 0) throw MathError("zero denominator in: " + s);
  r.canonicalize();
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].get_str();
    if (k == 1) os << "*z";
    if (k > 1) os << "*z^" << k;
  }
  if (first) os << "0";
  if (n_ > 1) os << " @" << n_;
  return os.str();
}

Cyc Cyc::parse(const std::string& s) {
  std::string body = s;
  int N = 1;
  auto at = s.find('@');
  if (at != std::string::npos) {
    body = s.substr(0, at);
    N = std::stoi(s.substr(at + 1));
  }
  while (!body.empty() && body.back() == ' ') body.pop_back();
  std::vector<Rational> c(1, Rational(0));
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t nx = body.find(" + ", pos);
    std::string term = body.substr(pos, nx == std::string::npos ? std::string::npos : nx - pos);
    size_t star = term.find("*z");
    long k = 0;
    std::string coef = term;
    if (star != std::string::npos) {
      coef = term.substr(0, star);
      std::string rest = term.substr(star + 2);
      k = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') throw MathError("bad cyclotomic literal: " + s);
        k = std::stol(rest.substr(1));
      }
    }
    if (static_cast<long>(c.size()) <= k) c.resize(k + 1, Rational(0));
    c[k] += parse_rational(coef);
    if (nx == std::string::npos) break;
    pos = nx + 3;
  }
  return Cyc(N, std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

Cyc field_arithmetic(const Cyc& a, const Cyc& b, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return a + b;
    case FieldOp::mul:
      return a * b;
    case FieldOp::inv:
      return a.inv();
  }
  return a;
}

bool is_root_of_unity_one(const Cyc& z) { return z.is_one(); }

long Character::exponent(const std::vector<long>& lam) const {
  if (lam.size() != exps.size()) throw MathError("character rank mismatch");
  long s = 0;
  for (size_t i = 0; i < lam.size(); ++i) s += exps[i] * lam[i];
  s %= order;
  return s < 0 ? s + order : s;
}

Character Character::inverse() const {
  Character c = *this;
  for (auto& e : c.exps) e = (order - (e % order)) % order;
  return c;
}

bool Character::operator==(const Character& o) const {
  if (exps.size() != o.exps.size()) return false;
  for (size_t i = 0; i < exps.size(); ++i) {
    std::vector<long> e(exps.size(), 0);
    e[i] = 1;
    if ((*this)(e) != o(e)) return false;
  }
  return true;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace sf
