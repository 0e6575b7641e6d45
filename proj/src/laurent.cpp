#include "sf/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace sf {

namespace {

IVec apply_int(const IMat& g, const IVec& v) {
  IVec r(g.size(), 0);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += g[i][j] * v[j];
  return r;
}

std::string coeff_prefix(const Cyc& c, bool constant_term) {
  if (c.is_rational()) {
    const Rational& r = c.rational();
    if (!constant_term && r == 1) return "";
    if (!constant_term && r == -1) return "-";
    return rational_str(r) + (constant_term ? "" : "*");
  }
  return "(" + c.str() + ")" + (constant_term ? "" : "*");
}

}  // namespace

LPoly LPoly::constant(int n, const Cyc& c) {
  LPoly p(n);
  if (!c.is_zero()) p.terms[IVec(n, 0)] = c;
  return p;
}

LPoly LPoly::monomial(const IVec& e, const Cyc& c) {
  LPoly p(static_cast<int>(e.size()));
  if (!c.is_zero()) p.terms[e] = c;
  return p;
}

LPoly LPoly::one_minus(const IVec& e) {
  LPoly p = constant(static_cast<int>(e.size()), Cyc(1));
  p.add_term(e, Cyc(-1));
  return p;
}

Cyc LPoly::coeff(const IVec& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? Cyc(0) : it->second;
}

void LPoly::add_term(const IVec& e, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LPoly& LPoly::operator+=(const LPoly& o) {
  for (auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  for (auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

LPoly LPoly::operator-() const { return scaled(Cyc(-1)); }

LPoly LPoly::scaled(const Cyc& c) const {
  LPoly r(n);
  if (c.is_zero()) return r;
  for (auto& [e, a] : terms) r.terms[e] = a * c;
  return r;
}

LPoly LPoly::shifted(const IVec& s) const {
  LPoly r(n);
  for (auto& [e, a] : terms) {
    IVec f = e;
    for (int i = 0; i < n; ++i) f[i] += s[i];
    r.terms[f] = a;
  }
  return r;
}

LPoly LPoly::pow(int e) const {
  if (e < 0) throw MathError("negative power of a Laurent polynomial");
  LPoly r = constant(n, Cyc(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Cyc LPoly::eval(const Character& s) const {
  Cyc r(0);
  for (auto& [e, c] : terms) r += c * s(e);
  return r;
}

LPoly LPoly::act(const IMat& g) const {
  LPoly r(n);
  for (auto& [e, c] : terms) r.add_term(apply_int(g, e), c);
  return r;
}

IVec LPoly::min_exps() const {
  IVec m(n, 0);
  bool first = true;
  for (auto& [e, c] : terms) {
    for (int i = 0; i < n; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

IVec LPoly::max_exps() const {
  IVec m(n, 0);
  bool first = true;
  for (auto& [e, c] : terms) {
    for (int i = 0; i < n; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

int LPoly::conductor() const {
  long N = 1;
  for (auto& [e, c] : terms) N = lcm_long(N, c.conductor());
  return static_cast<int>(N);
}

long LPoly::low() const {
  if (is_zero()) throw MathError("low exponent of zero");
  return terms.begin()->first[0];
}

long LPoly::high() const {
  if (is_zero()) throw MathError("high exponent of zero");
  return terms.rbegin()->first[0];
}

LPoly LPoly::normalizing_unit() const {
  if (is_zero()) return constant(n, Cyc(1));
  return monomial(IVec{-low()}, terms.rbegin()->second.inv());
}

LPoly LPoly::normalized() const {
  if (is_zero()) return *this;
  return *this * normalizing_unit();
}

std::string LPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms) {
    bool is_const = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    std::string pre = coeff_prefix(c, is_const);
    if (!first) {
      if (!pre.empty() && pre[0] == '-') {
        os << " - ";
        pre = pre.substr(1);
      } else {
        os << " + ";
      }
    }
    os << pre;
    if (!is_const) {
      bool firstv = true;
      for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (!firstv) os << "*";
        os << var;
        if (n > 1) os << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
        firstv = false;
      }
    }
    first = false;
  }
  return os.str();
}

LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly r(std::max(a.n, b.n));
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      IVec e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

void ldivmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r) {
  if (b.is_zero()) throw MathError("division by zero");
  q = LPoly(1);
  r = LPoly(1);
  if (a.is_zero()) return;
  long la = a.low(), lb = b.low();
  LPoly A = a.shifted({-la}), B = b.shifted({-lb});
  long db = B.high();
  Cyc lead_inv = B.terms.rbegin()->second.inv();
  LPoly Q(1);
  while (!A.is_zero() && A.high() >= db) {
    long k = A.high() - db;
    Cyc c = A.terms.rbegin()->second * lead_inv;
    LPoly m = LPoly::monomial({k}, c);
    Q += m;
    A -= m * B;
  }
  q = Q.shifted({la - lb});
  r = A.shifted({la});
}

bool ldivides(const LPoly& b, const LPoly& a) {
  LPoly q, r;
  ldivmod(a, b, q, r);
  return r.is_zero();
}

LPoly lgcd(const LPoly& a, const LPoly& b) {
  LPoly x = a, y = b;
  while (!y.is_zero()) {
    LPoly q, r;
    ldivmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

LaurentMatrix::LaurentMatrix(LaurentRing r, size_t nr, size_t nc) : ring(r), rows(nr), cols(nc), e(nr * nc, LPoly(r.n)) {}

LaurentMatrix LaurentMatrix::identity(LaurentRing r, size_t n) {
  LaurentMatrix m(r, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = LPoly::constant(r.n, Cyc(1));
  return m;
}

LaurentMatrix LaurentMatrix::transposed() const {
  LaurentMatrix t(ring, cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat LaurentMatrix::eval(const Character& s) const {
  Mat m = zero_mat(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m[i][j] = at(i, j).eval(s);
  return m;
}

LaurentMatrix LaurentMatrix::act(const IMat& g) const {
  LaurentMatrix m(ring, rows, cols);
  for (size_t i = 0; i < e.size(); ++i) m.e[i] = e[i].act(g);
  return m;
}

std::vector<LPoly> LaurentMatrix::column(size_t j) const {
  std::vector<LPoly> c;
  for (size_t i = 0; i < rows; ++i) c.push_back(at(i, j));
  return c;
}

std::vector<LPoly> LaurentMatrix::row(size_t i) const {
  return std::vector<LPoly>(e.begin() + i * cols, e.begin() + (i + 1) * cols);
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols != b.rows) throw MathError("matrix size mismatch");
  LaurentMatrix m(a.ring, a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols; ++j)
        if (!b.at(k, j).is_zero()) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
}

FGModule FGModule::free_module(LaurentRing r, size_t g) { return {r, g, LaurentMatrix(r, 0, g)}; }

void FGModule::add_relation(const LVec& rel) {
  if (rel.size() != gens) throw MathError("relation length mismatch");
  relations.e.insert(relations.e.end(), rel.begin(), rel.end());
  ++relations.rows;
}

// ---------------------------------------------------------------- Smith normal form

std::vector<LPoly> SNFResult::invariant_factors() const {
  std::vector<LPoly> out;
  for (auto& d : diagonal)
    if (!d.is_zero() && !d.is_unit()) out.push_back(d);
  return out;
}

size_t SNFResult::rank() const {
  return std::count_if(diagonal.begin(), diagonal.end(), [](const LPoly& p) { return !p.is_zero(); });
}

SNFResult smith_normal_form_rank1(const LaurentMatrix& m) {
  if (m.ring.n != 1) throw MathError("Smith normal form requires a rank-one lattice");
  SNFResult res;
  LaurentMatrix& D = res.D;
  D = m;
  res.U = LaurentMatrix::identity(m.ring, m.rows);
  res.V = LaurentMatrix::identity(m.ring, m.cols);
  res.Vinv = res.V;
  LaurentMatrix& U = res.U;
  LaurentMatrix& V = res.V;
  LaurentMatrix& Vi = res.Vinv;
  const size_t R = m.rows, C = m.cols;

  auto row_axpy = [&](size_t dst, const LPoly& c, size_t src) {  // row dst += c * row src
    for (size_t j = 0; j < C; ++j)
      if (!D.at(src, j).is_zero()) D.at(dst, j) += c * D.at(src, j);
    for (size_t j = 0; j < R; ++j)
      if (!U.at(src, j).is_zero()) U.at(dst, j) += c * U.at(src, j);
  };
  auto col_axpy = [&](size_t dst, const LPoly& c, size_t src) {
    for (size_t i = 0; i < R; ++i)
      if (!D.at(i, src).is_zero()) D.at(i, dst) += D.at(i, src) * c;
    for (size_t i = 0; i < C; ++i)
      if (!V.at(i, src).is_zero()) V.at(i, dst) += V.at(i, src) * c;
    for (size_t j = 0; j < C; ++j)
      if (!Vi.at(dst, j).is_zero()) Vi.at(src, j) -= c * Vi.at(dst, j);
  };
  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < C; ++j) std::swap(D.at(a, j), D.at(b, j));
    for (size_t j = 0; j < R; ++j) std::swap(U.at(a, j), U.at(b, j));
  };
  auto swap_cols = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < R; ++i) std::swap(D.at(i, a), D.at(i, b));
    for (size_t i = 0; i < C; ++i) std::swap(V.at(i, a), V.at(i, b));
    for (size_t j = 0; j < C; ++j) std::swap(Vi.at(a, j), Vi.at(b, j));
  };

  size_t n = std::min(R, C);
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      long best = -1;
      size_t bi = 0, bj = 0;
      for (size_t i = t; i < R; ++i)
        for (size_t j = t; j < C; ++j) {
          const LPoly& x = D.at(i, j);
          if (!x.is_zero() && (best < 0 || x.span() < best)) {
            best = x.span();
            bi = i;
            bj = j;
          }
        }
      if (best < 0) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (size_t i = t + 1; i < R; ++i) {
        if (D.at(i, t).is_zero()) continue;
        LPoly q, r;
        ldivmod(D.at(i, t), D.at(t, t), q, r);
        row_axpy(i, -q, t);
        if (!D.at(i, t).is_zero()) clean = false;
      }
      for (size_t j = t + 1; j < C; ++j) {
        if (D.at(t, j).is_zero()) continue;
        LPoly q, r;
        ldivmod(D.at(t, j), D.at(t, t), q, r);
        col_axpy(j, -q, t);
        if (!D.at(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the remaining block.
      bool divides = true;
      for (size_t i = t + 1; i < R && divides; ++i)
        for (size_t j = t + 1; j < C; ++j)
          if (!D.at(i, j).is_zero() && !ldivides(D.at(t, t), D.at(i, j))) {
            row_axpy(t, LPoly::constant(1, Cyc(1)), i);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D.at(t, t).is_zero()) continue;
    LPoly u = D.at(t, t).normalizing_unit();
    for (size_t j = 0; j < C; ++j)
      if (!D.at(t, j).is_zero()) D.at(t, j) = D.at(t, j) * u;
    for (size_t j = 0; j < R; ++j)
      if (!U.at(t, j).is_zero()) U.at(t, j) = U.at(t, j) * u;
  }
  for (size_t t = 0; t < n; ++t) res.diagonal.push_back(D.at(t, t));
  return res;
}

std::string RankOneStructure::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "R^" << free_rank;
    first = false;
  }
  for (auto& f : torsion) {
    if (!first) os << " + ";
    os << "R/(" << f.str() << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

RankOneStructure rank_one_structure(const FGModule& m) {
  RankOneStructure s;
  if (m.relations.rows == 0) {
    s.free_rank = m.gens;
    return s;
  }
  SNFResult r = smith_normal_form_rank1(m.relations);
  s.free_rank = m.gens - r.rank();
  s.torsion = r.invariant_factors();
  return s;
}

// ---------------------------------------------------------------- Tor

FreeResolution free_resolution(const FGModule& mod, int length) {
  FreeResolution res;
  res.ring = mod.ring;
  res.ranks.push_back(mod.gens);
  if (length <= 0) return res;
  LaurentMatrix d = mod.relations.transposed();
  d.rows = mod.gens;
  res.maps.push_back(d);
  res.ranks.push_back(d.cols);
  for (int p = 1; p < length; ++p) {
    const LaurentMatrix& prev = res.maps.back();
    std::vector<LVec> cols;
    for (size_t j = 0; j < prev.cols; ++j) cols.push_back(prev.column(j));
    auto syz = laurent_syzygies(cols, prev.rows, mod.ring.n);
    LaurentMatrix next(mod.ring, prev.cols, syz.size());
    for (size_t j = 0; j < syz.size(); ++j)
      for (size_t i = 0; i < prev.cols; ++i) next.at(i, j) = syz[j][i];
    res.maps.push_back(next);
    res.ranks.push_back(next.cols);
    if (syz.empty()) break;
  }
  return res;
}

std::vector<TorResult> tor_against_character(const FGModule& mod, const Character& s, int pmax, TorPath path) {
  if (pmax < 0) throw MathError("pmax must be nonnegative");
  const int n = mod.ring.n;
  std::vector<TorResult> out;
  if (path == TorPath::snf || (path == TorPath::automatic && n == 1)) {
    if (n != 1) throw MathError("Smith normal form path requires a rank-one lattice");
    RankOneStructure st = rank_one_structure(mod);
    size_t vanish = 0;
    for (auto& f : st.torsion)
      if (f.eval(s).is_zero()) ++vanish;
    for (int p = 0; p <= pmax; ++p) {
      TorResult t;
      t.p = p;
      t.dim = p == 0 ? st.free_rank + vanish : p == 1 ? vanish : 0;
      out.push_back(t);
    }
    return out;
  }
  FreeResolution res = free_resolution(mod, std::min(pmax, n) + 1);
  std::vector<size_t> rk;
  for (auto& m : res.maps) rk.push_back(mat_rank(m.eval(s), m.cols));
  for (int p = 0; p <= pmax; ++p) {
    TorResult t;
    t.p = p;
    if (p < static_cast<int>(res.ranks.size()) && p <= n) {
      size_t in = p < static_cast<int>(rk.size()) ? rk[p] : 0;
      size_t outr = p >= 1 ? rk[p - 1] : 0;
      t.dim = res.ranks[p] - in - outr;
    }
    out.push_back(t);
  }
  return out;
}

std::string lvec_str(const LVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

}  // namespace sf
