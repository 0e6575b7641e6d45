#include "sf/polyalg.hpp"

#include <algorithm>
#include <sstream>

#include "sf/linalg.hpp"

namespace sf {

bool GrlexLess::operator()(const Exp& a, const Exp& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

int total_degree(const Exp& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

std::vector<Exp> monomials_of_degree(int n, int k) {
  std::vector<Exp> out;
  if (k < 0) return out;
  Exp cur(n, 0);
  // Lexicographically decreasing enumeration.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, k);
  return out;
}

RingPtr PolyRing::make(int n, std::vector<std::string> labels, bool extended) {
  if (n < 1) throw MathError("polynomial ring rank must be positive");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(n == 1 ? "x" : "x" + std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != n) throw MathError("label count does not match rank");
  auto s = labels;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw MathError("variable labels must be distinct");
  auto r = std::make_shared<PolyRing>();
  r->rank = n;
  r->labels = std::move(labels);
  r->extended = extended;
  return r;
}

namespace {

void check_ring(const SparsePoly& a, const SparsePoly& b) {
  if (a.ring != b.ring && (a.ring->rank != b.ring->rank || a.ring->labels != b.ring->labels))
    throw MathError("ring mismatch");
}

template <class P>
P add_impl(const P& a, const P& b, bool subtract) {
  check_ring(a, b);
  P r = a;
  for (auto& [e, c] : b.terms) r.add_term(e, subtract ? -c : c);
  return r;
}

template <class P>
P mul_impl(const P& a, const P& b) {
  check_ring(a, b);
  P r(a.ring);
  Exp e(a.rank());
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.rank(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

template <class P>
P substitute_impl(const P& p, const std::vector<P>& images) {
  if (static_cast<int>(images.size()) != p.rank()) throw MathError("substitution arity mismatch");
  P r(p.ring);
  for (auto& [e, c] : p.terms) {
    P m(p.ring);
    m.add_term(Exp(p.rank(), 0), c);
    for (int i = 0; i < p.rank(); ++i)
      for (int k = 0; k < e[i]; ++k) m = mul_impl(m, images[i]);
    r = add_impl(r, m, false);
  }
  return r;
}

}  // namespace

int SparsePoly::degree() const {
  if (terms.empty()) return -1;
  return total_degree(terms.rbegin()->first);
}

bool SparsePoly::is_homogeneous() const {
  if (terms.empty()) return true;
  return total_degree(terms.begin()->first) == total_degree(terms.rbegin()->first);
}

Cyc SparsePoly::coeff(const Exp& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? Cyc(0) : it->second;
}

void SparsePoly::add_term(const Exp& e, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms.emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void SparsePoly::scale(const Cyc& c) {
  if (c.is_zero()) {
    terms.clear();
    return;
  }
  for (auto& [e, x] : terms) x *= c;
}

std::string SparsePoly::str(const std::string& var_prefix) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coef;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c.rational();
      if (q < 0) {
        neg = true;
        q = -q;
      }
      coef = q.get_str();
    } else {
      coef = "(" + c.str() + ")";
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (coef != "1" || constant) {
      os << coef;
      wrote = true;
    }
    for (int i = 0; i < rank(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << var_prefix << ring->labels[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial Polynomial::variable(RingPtr r, int i) {
  Exp e(r->rank, 0);
  e.at(i) = 1;
  return monomial(r, e);
}

Polynomial Polynomial::constant(RingPtr r, const Cyc& c) { return monomial(r, Exp(r->rank, 0), c); }

Polynomial Polynomial::monomial(RingPtr r, const Exp& e, const Cyc& c) {
  Polynomial p(r);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(RingPtr r, const std::vector<long>& coeffs) {
  Polynomial p(r);
  for (int i = 0; i < r->rank; ++i) {
    Exp e(r->rank, 0);
    e[i] = 1;
    p.add_term(e, Cyc(coeffs.at(i)));
  }
  return p;
}

Polynomial Polynomial::parse(RingPtr r, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  // Unicode minus sign.
  for (size_t p; (p = s.find("\xe2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
  Polynomial out(r);
  if (s.empty()) throw MathError("empty polynomial literal");
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw MathError("bad polynomial literal: " + text);
    Cyc c(sign);
    Exp e(r->rank, 0);
    std::stringstream ts(term);
    std::string f;
    while (std::getline(ts, f, '*')) {
      if (f.empty()) throw MathError("bad polynomial literal: " + text);
      if (isdigit(static_cast<unsigned char>(f[0]))) {
        c *= Cyc(parse_rational(f));
        continue;
      }
      std::string name = f;
      int pw = 1;
      auto caret = f.find('^');
      if (caret != std::string::npos) {
        name = f.substr(0, caret);
        pw = std::stoi(f.substr(caret + 1));
      }
      auto it = std::find(r->labels.begin(), r->labels.end(), name);
      if (it == r->labels.end()) throw MathError("unknown variable '" + name + "'");
      e[it - r->labels.begin()] += pw;
    }
    out.add_term(e, c);
    i = j;
  }
  return out;
}

DiffOperator DiffOperator::partial(RingPtr r, int i) {
  DiffOperator d(r);
  Exp e(r->rank, 0);
  e.at(i) = 1;
  d.add_term(e, Cyc(1));
  return d;
}

DiffOperator DiffOperator::constant(RingPtr r, const Cyc& c) {
  DiffOperator d(r);
  d.add_term(Exp(r->rank, 0), c);
  return d;
}

DiffOperator DiffOperator::linear(RingPtr r, const std::vector<long>& coeffs) {
  DiffOperator d(r);
  for (int i = 0; i < r->rank; ++i) {
    Exp e(r->rank, 0);
    e[i] = 1;
    d.add_term(e, Cyc(coeffs.at(i)));
  }
  return d;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add_impl(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add_impl(a, b, true); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul_impl(a, b); }
Polynomial operator*(const Cyc& c, const Polynomial& a) {
  Polynomial r = a;
  r.scale(c);
  return r;
}
bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms == b.terms; }
DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) { return add_impl(a, b, false); }
DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return add_impl(a, b, true); }
DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) { return mul_impl(a, b); }
DiffOperator operator*(const Cyc& c, const DiffOperator& a) {
  DiffOperator r = a;
  r.scale(c);
  return r;
}
bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms == b.terms; }

DiffOperator pow(const DiffOperator& d, int e) {
  DiffOperator r = DiffOperator::constant(d.ring, Cyc(1));
  for (int i = 0; i < e; ++i) r = r * d;
  return r;
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial r = Polynomial::constant(p.ring, Cyc(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Polynomial apply(const DiffOperator& op, const Polynomial& p) {
  check_ring(op, p);
  Polynomial r(p.ring);
  int n = p.rank();
  Exp e(n);
  for (auto& [ea, ca] : op.terms)
    for (auto& [eb, cb] : p.terms) {
      Integer f = 1;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (eb[i] < ea[i]) {
          ok = false;
          break;
        }
        for (int k = 0; k < ea[i]; ++k) f *= eb[i] - k;
        e[i] = eb[i] - ea[i];
      }
      if (ok) r.add_term(e, ca * cb * Cyc(Rational(f)));
    }
  return r;
}

Cyc pairing(const DiffOperator& op, const Polynomial& p) { return apply(op, p).coeff(Exp(p.rank(), 0)); }

Polynomial substitute_linear(const Polynomial& p, const std::vector<Polynomial>& images) {
  return substitute_impl(p, images);
}

DiffOperator substitute_linear(const DiffOperator& d, const std::vector<DiffOperator>& images) {
  return substitute_impl(d, images);
}

std::vector<Cyc> coordinates(const SparsePoly& p, int k) {
  auto mons = monomials_of_degree(p.rank(), k);
  std::vector<Cyc> v(mons.size(), Cyc(0));
  for (size_t i = 0; i < mons.size(); ++i) v[i] = p.coeff(mons[i]);
  for (auto& [e, c] : p.terms)
    if (total_degree(e) != k) throw MathError("coordinates: element is not homogeneous of the requested degree");
  return v;
}

Polynomial from_coordinates(RingPtr r, int k, const std::vector<Cyc>& coords) {
  auto mons = monomials_of_degree(r->rank, k);
  Polynomial p(r);
  for (size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], coords[i]);
  return p;
}

GradedSubspace annihilator_basis(RingPtr r, const std::vector<std::pair<DiffOperator, int>>& ops, int k) {
  GradedSubspace out;
  out.degree = k;
  auto mons = monomials_of_degree(r->rank, k);
  Mat M;  // rows: output coordinates, columns: input monomials
  for (auto& [op, power] : ops) {
    if (!op.is_homogeneous()) throw MathError("annihilator operators must be homogeneous");
    DiffOperator d = pow(op, power);
    int dd = d.degree();
    // The zero operator, or one of degree above k, kills all of S_k.
    if (dd < 0 || dd > k) continue;
    auto tgt = monomials_of_degree(r->rank, k - dd);
    Mat block = zero_mat(tgt.size(), mons.size());
    for (size_t j = 0; j < mons.size(); ++j) {
      Polynomial img = apply(d, Polynomial::monomial(r, mons[j]));
      auto c = coordinates(img, k - dd);
      for (size_t i = 0; i < tgt.size(); ++i) block[i][j] = c[i];
    }
    for (auto& row : block) M.push_back(row);
  }
  Mat ns = M.empty() ? identity_mat(mons.size()) : nullspace(M, mons.size());
  ns = row_basis(ns, mons.size());
  for (auto& v : ns) out.basis.push_back(from_coordinates(r, k, v));
  return out;
}

std::vector<std::vector<Cyc>> pairing_matrix(RingPtr r, int k) {
  auto mons = monomials_of_degree(r->rank, k);
  Mat M = zero_mat(mons.size(), mons.size());
  for (size_t i = 0; i < mons.size(); ++i) {
    DiffOperator d(r);
    d.add_term(mons[i], Cyc(1));
    for (size_t j = 0; j < mons.size(); ++j) M[i][j] = pairing(d, Polynomial::monomial(r, mons[j]));
  }
  return M;
}

namespace {
Mat coords_of(const GradedSubspace& s) {
  Mat m;
  for (auto& p : s.basis) m.push_back(coordinates(p, s.degree));
  return m;
}
}  // namespace

bool same_subspace(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.degree != b.degree) return false;
  if (a.basis.empty() || b.basis.empty()) return a.basis.empty() == b.basis.empty();
  size_t n = coordinates(a.basis[0], a.degree).size();
  return same_span(coords_of(a), coords_of(b), n);
}

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace out;
  out.degree = a.degree;
  Mat m = coords_of(a);
  for (auto& r : coords_of(b)) m.push_back(r);
  if (m.empty()) return out;
  RingPtr ring = a.basis.empty() ? b.basis[0].ring : a.basis[0].ring;
  size_t n = m[0].size();
  for (auto& v : row_basis(m, n)) out.basis.push_back(from_coordinates(ring, a.degree, v));
  return out;
}

VerificationReport check_relatively_prime_lemma(const DiffOperator& d1, const DiffOperator& d2, int maxdeg) {
  VerificationReport rep;
  rep.suite = "relatively-prime";
  RingPtr r = d1.ring;
  DiffOperator prod = d1 * d2;
  int e2 = d2.degree();
  for (int k = 0; k <= maxdeg; ++k) {
    auto kp = annihilator_basis(r, {{prod, 1}}, k);
    auto s = subspace_sum(annihilator_basis(r, {{d1, 1}}, k), annihilator_basis(r, {{d2, 1}}, k));
    bool sum_ok = same_subspace(kp, s);
    // d2 maps ker d1 in degree k onto ker d1 in degree k - deg d2.
    bool onto_ok = true;
    auto src = annihilator_basis(r, {{d1, 1}}, k);
    if (k - e2 >= 0) {
      auto tgt = annihilator_basis(r, {{d1, 1}}, k - e2);
      GradedSubspace img;
      img.degree = k - e2;
      for (auto& p : src.basis) {
        Polynomial q = apply(d2, p);
        if (!q.is_zero()) img.basis.push_back(q);
      }
      img = subspace_sum(img, GradedSubspace{k - e2, {}});
      onto_ok = same_subspace(img, tgt);
    }
    std::ostringstream det;
    det << "degree " << k << ": dim ker(d1 d2)=" << kp.dim() << ", dim(ker d1 + ker d2)=" << s.dim()
        << ", d2 onto ker d1: " << (onto_ok ? "yes" : "no");
    rep.add("degree-" + std::to_string(k), "kernel of a product of coprime operators", sum_ok && onto_ok,
            det.str());
  }
  return rep;
}

}  // namespace sf
