#include "sf/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "sf/linalg.hpp"

namespace sf {

IMat imat_identity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IMat c(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l])
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

IVec imat_apply(const IMat& a, const IVec& v) {
  IVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

IMat imat_transpose(const IMat& a) {
  size_t n = a.size(), m = n ? a[0].size() : 0;
  IMat t(m, IVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

long imat_det(const IMat& a) {
  int n = static_cast<int>(a.size());
  Mat m = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Cyc(a[i][j]);
  Cyc det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Cyc inv = m[c][c].inv();
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Cyc f = m[i][c] * inv;
      for (int k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det.rational().get_num().get_si();
}

IMat imat_inverse(const IMat& a) {
  int n = static_cast<int>(a.size());
  Mat m = zero_mat(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Cyc(a[i][j]);
    m[i][n + i] = Cyc(1);
  }
  auto piv = rref(m, 2 * n);
  if (piv.size() < static_cast<size_t>(n) || piv[n - 1] >= static_cast<size_t>(n))
    throw MathError("matrix is not invertible");
  IMat inv(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& q = m[i][n + j].rational();
      if (q.get_den() != 1) throw MathError("matrix is not unimodular");
      inv[i][j] = q.get_num().get_si();
    }
  return inv;
}

long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IVec ivec_scale(long c, const IVec& a) {
  IVec r = a;
  for (auto& x : r) x *= c;
  return r;
}

int RootDatum::root_index(const IVec& alpha) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == alpha) return static_cast<int>(i);
  return -1;
}

int RootDatum::negative_of(int i) const { return root_index(ivec_scale(-1, roots.at(i))); }

bool RootDatum::is_positive(int i) const { return std::find(positive.begin(), positive.end(), i) != positive.end(); }

std::pair<int, int> RootDatum::positive_position(int i) const {
  for (size_t p = 0; p < positive.size(); ++p) {
    if (positive[p] == i) return {static_cast<int>(p), 1};
    if (roots[positive[p]] == ivec_scale(-1, roots.at(i))) return {static_cast<int>(p), -1};
  }
  throw MathError("not a root");
}

int RootDatum::weyl_index(const IMat& g) const {
  for (size_t i = 0; i < weyl.size(); ++i)
    if (weyl[i] == g) return static_cast<int>(i);
  return -1;
}

int RootDatum::weyl_mul(int a, int b) const { return weyl_index(imat_mul(weyl.at(a), weyl.at(b))); }

int RootDatum::weyl_inverse(int a) const { return weyl_index(imat_inverse(weyl.at(a))); }

int RootDatum::reflection_index(int root) const {
  IMat s = imat_identity(n);
  const IVec& a = roots.at(root);
  const IVec& ac = coroots.at(root);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] -= ac[i] * a[j];
  return weyl_index(s);
}

IVec RootDatum::act_on_character(const IMat& g, const IVec& chi) const {
  return imat_apply(imat_transpose(imat_inverse(g)), chi);
}

RingPtr RootDatum::sym_ring() const { return PolyRing::make(n); }

DiffOperator RootDatum::d_alpha(int root) const { return DiffOperator::linear(sym_ring(), roots.at(root)); }

namespace {

IMat cartan_block(char letter, int r) {
  IMat c(r, IVec(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  if (letter == 'A') {
    for (int i = 0; i + 1 < r; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  } else if (letter == 'B' && r == 2) {
    c[0][1] = -1;
    c[1][0] = -2;
  } else if (letter == 'C' && r == 2) {
    c[0][1] = -2;
    c[1][0] = -1;
  } else if (letter == 'G' && r == 2) {
    c[0][1] = -3;
    c[1][0] = -1;
  } else {
    throw MathError(std::string("unsupported Cartan type ") + letter + std::to_string(r));
  }
  return c;
}

}  // namespace

RootDatum build_root_datum(int n, const std::vector<IVec>& sr, const std::vector<IVec>& sc, const std::string& name) {
  if (sr.size() != sc.size()) throw MathError("inconsistent pairing: root and coroot counts differ");
  size_t r = sr.size();
  for (size_t i = 0; i < r; ++i) {
    if (static_cast<int>(sr[i].size()) != n || static_cast<int>(sc[i].size()) != n)
      throw MathError("inconsistent pairing: vector length differs from rank");
    if (dot(sc[i], sr[i]) != 2) throw MathError("inconsistent pairing: <coroot, root> != 2");
    for (size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      long cij = dot(sc[i], sr[j]), cji = dot(sc[j], sr[i]);
      if (cij > 0 || (cij == 0) != (cji == 0)) throw MathError("inconsistent pairing: not a Cartan matrix");
    }
  }
  // Simple roots must be linearly independent.
  {
    Mat m;
    for (auto& a : sr) {
      Vec v;
      for (long x : a) v.push_back(Cyc(x));
      m.push_back(v);
    }
    if (mat_rank(m, n) != r) throw MathError("inconsistent pairing: simple roots are dependent");
  }
  RootDatum d;
  d.n = n;
  d.name = name;
  // Weyl group by closure under simple reflections.
  std::vector<IMat> gens;
  for (size_t i = 0; i < r; ++i) {
    IMat s = imat_identity(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s[a][b] -= sc[i][a] * sr[i][b];
    gens.push_back(s);
  }
  d.weyl.push_back(imat_identity(n));
  std::map<IMat, int> seen{{d.weyl[0], 0}};
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (auto& g : gens) {
      IMat m = imat_mul(g, d.weyl[cur]);
      if (seen.count(m)) continue;
      if (d.weyl.size() > 5000) throw MathError("inconsistent pairing: Weyl group is not finite");
      seen[m] = static_cast<int>(d.weyl.size());
      d.weyl.push_back(m);
      todo.push_back(seen[m]);
    }
  }
  for (auto& g : d.weyl) {
    IMat h = imat_transpose(imat_inverse(g));
    for (size_t i = 0; i < r; ++i) {
      IVec a = imat_apply(h, sr[i]);
      if (d.root_index(a) >= 0) continue;
      d.roots.push_back(a);
      d.coroots.push_back(imat_apply(g, sc[i]));
    }
  }
  for (auto& a : d.roots)
    if (d.root_index(ivec_scale(2, a)) >= 0) throw MathError("non-reduced input");
  for (size_t i = 0; i < r; ++i) d.simple.push_back(d.root_index(sr[i]));
  // Positive roots: nonnegative coordinates against the simple roots.
  Mat S = zero_mat(n, r);
  for (size_t j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) S[i][j] = Cyc(sr[j][i]);
  for (size_t k = 0; k < d.roots.size(); ++k) {
    Vec b;
    for (long x : d.roots[k]) b.push_back(Cyc(x));
    Vec c;
    if (!solve(S, b, r, c)) throw MathError("inconsistent pairing: root outside the root lattice");
    bool pos = true;
    for (auto& x : c)
      if (x.rational() < 0) pos = false;
    if (pos) d.positive.push_back(static_cast<int>(k));
  }
  d.auts.push_back(imat_identity(n));
  d.adjoint = false;
  return d;
}

RootDatum build_root_datum(const CartanSpec& spec) {
  std::vector<std::pair<char, int>> blocks;
  std::stringstream ss(spec.type);
  std::string piece;
  while (std::getline(ss, piece, 'x')) {
    if (piece.size() < 2 || !isupper(static_cast<unsigned char>(piece[0])))
      throw MathError("unsupported Cartan type " + spec.type);
    blocks.push_back({piece[0], std::stoi(piece.substr(1))});
  }
  int ss_rank = 0;
  for (auto& b : blocks) ss_rank += b.second;
  IMat C(ss_rank, IVec(ss_rank, 0));
  int off = 0;
  for (auto& [letter, r] : blocks) {
    IMat c = cartan_block(letter, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) C[off + i][off + j] = c[i][j];
    off += r;
  }
  int n = ss_rank + spec.torus_rank;
  std::vector<IVec> sr(ss_rank, IVec(n, 0)), sc(ss_rank, IVec(n, 0));
  bool adjoint = spec.form == "adjoint";
  if (!adjoint && spec.form != "sc") throw MathError("unknown form " + spec.form);
  for (int j = 0; j < ss_rank; ++j) {
    if (adjoint) {
      sr[j][j] = 1;
      for (int k = 0; k < ss_rank; ++k) sc[j][k] = C[j][k];
    } else {
      sc[j][j] = 1;
      for (int i = 0; i < ss_rank; ++i) sr[j][i] = C[i][j];
    }
  }
  std::string name = spec.type + (adjoint ? " adjoint" : " sc");
  if (spec.torus_rank) name += " x T" + std::to_string(spec.torus_rank);
  RootDatum d = build_root_datum(n, sr, sc, name);
  d.adjoint = adjoint && spec.torus_rank == 0;
  return d;
}

RootDatum torus_datum(int n) {
  RootDatum d = build_root_datum(n, {}, {}, "T" + std::to_string(n));
  return d;
}

RootDatum sl2_datum() { return build_root_datum(CartanSpec{"A1", "sc", 0}); }
RootDatum pgl2_datum() { return build_root_datum(CartanSpec{"A1", "adjoint", 0}); }
RootDatum gl2_datum() { return build_root_datum(2, {{1, -1}}, {{1, -1}}, "GL2"); }

RankOneCase classify_semisimple_rank_one(const RootDatum& d) {
  if (d.positive.size() != 1) throw MathError("semisimple rank != 1");
  const IVec& a = d.roots[d.positive[0]];
  const IVec& ac = d.coroots[d.positive[0]];
  // <., alpha> even on X_* means alpha is divisible by 2 in X^*; <alpha^vee, .> even on X^*
  // means alpha^vee is divisible by 2 in X_*.  Both cannot hold since <alpha^vee, alpha> = 2.
  bool root_even = std::all_of(a.begin(), a.end(), [](long x) { return x % 2 == 0; });
  bool coroot_even = std::all_of(ac.begin(), ac.end(), [](long x) { return x % 2 == 0; });
  if (root_even) return RankOneCase::SL2_times_torus;
  if (coroot_even) return RankOneCase::PGL2_times_torus;
  return RankOneCase::GL2_times_torus;
}

const char* rank_one_case_name(RankOneCase c) {
  switch (c) {
    case RankOneCase::SL2_times_torus:
      return "SL2 x torus";
    case RankOneCase::PGL2_times_torus:
      return "PGL2 x torus";
    default:
      return "GL2 x torus";
  }
}

int ValuationProfile::of_root(const RootDatum& d, int root) const { return values.at(d.positive_position(root).first); }

bool ValuationProfile::equal_valuation() const {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

ValuationProfile ValuationProfile::constant(const RootDatum& d, int v) {
  return ValuationProfile{std::vector<int>(d.positive.size(), v)};
}

bool EndoscopicData::in_h(const RootDatum& d, int root) const { return s.is_trivial_on(d.coroots.at(root)); }

std::vector<int> EndoscopicData::h_positive(const RootDatum& d) const {
  std::vector<int> out;
  for (int p : d.positive)
    if (in_h(d, p)) out.push_back(p);
  return out;
}

EndoscopicSubsystem endoscopic_subsystem(const RootDatum& d, const EndoscopicData& e, const ValuationProfile& v) {
  if (e.s.order < 1) throw MathError("s not finite order");
  EndoscopicSubsystem out;
  out.h_positive = e.h_positive(d);
  for (size_t p = 0; p < d.positive.size(); ++p) {
    if (e.in_h(d, d.positive[p]))
      out.h_profile.values.push_back(v.values.at(p));
    else
      out.r += v.values.at(p);
  }
  return out;
}

IMat AffineWeylElement::finite_matrix(const RootDatum& d) const { return imat_mul(d.weyl.at(w), d.auts.at(aut)); }

IVec AffineWeylElement::act(const RootDatum& d, const IVec& lam) const {
  return ivec_add(translation, imat_apply(finite_matrix(d), lam));
}

namespace {
int aut_index(const RootDatum& d, const IMat& m) {
  for (size_t i = 0; i < d.auts.size(); ++i)
    if (d.auts[i] == m) return static_cast<int>(i);
  throw MathError("automorphism set is not closed under composition");
}
}  // namespace

AffineWeylElement compose(const RootDatum& d, const AffineWeylElement& a, const AffineWeylElement& b) {
  AffineWeylElement c;
  c.translation = ivec_add(a.translation, imat_apply(a.finite_matrix(d), b.translation));
  const IMat& A = d.auts.at(a.aut);
  IMat conj = imat_mul(imat_mul(A, d.weyl.at(b.w)), imat_inverse(A));
  c.w = d.weyl_index(imat_mul(d.weyl.at(a.w), conj));
  if (c.w < 0) throw MathError("automorphism does not normalize W");
  c.aut = aut_index(d, imat_mul(A, d.auts.at(b.aut)));
  return c;
}

AffineWeylElement inverse(const RootDatum& d, const AffineWeylElement& a) {
  IMat g = a.finite_matrix(d);
  IMat gi = imat_inverse(g);
  AffineWeylElement r;
  r.translation = ivec_scale(-1, imat_apply(gi, a.translation));
  IMat Ai = imat_inverse(d.auts.at(a.aut));
  r.aut = aut_index(d, Ai);
  // g^{-1} = (w A)^{-1} = A^{-1} w^{-1} = (A^{-1} w^{-1} A) A^{-1}
  r.w = d.weyl_index(imat_mul(imat_mul(Ai, imat_inverse(d.weyl.at(a.w))), d.auts.at(a.aut)));
  return r;
}

std::string element_str(const RootDatum& d, const AffineWeylElement& a) {
  std::ostringstream os;
  os << "t(";
  for (size_t i = 0; i < a.translation.size(); ++i) os << (i ? "," : "") << a.translation[i];
  os << ")";
  if (a.w) {
    int refl = -1;
    for (int p : d.positive)
      if (d.reflection_index(p) == a.w) refl = p;
    if (refl >= 0)
      os << "*s" << d.positive_position(refl).first + 1;
    else
      os << "*w" << a.w;
  }
  if (a.aut) os << "*aut" << a.aut;
  return os.str();
}

Polynomial act_on_poly(const RootDatum& d, const IMat& g, const Polynomial& p) {
  std::vector<Polynomial> images;
  for (int i = 0; i < d.n; ++i) {
    IVec col(d.n);
    for (int j = 0; j < d.n; ++j) col[j] = g[j][i];
    images.push_back(Polynomial::linear(p.ring, col));
  }
  return substitute_linear(p, images);
}

DiffOperator act_on_diff(const RootDatum& d, const IMat& g, const DiffOperator& op) {
  IMat h = imat_transpose(imat_inverse(g));
  std::vector<DiffOperator> images;
  for (int i = 0; i < d.n; ++i) {
    IVec col(d.n);
    for (int j = 0; j < d.n; ++j) col[j] = h[j][i];
    images.push_back(DiffOperator::linear(op.ring, col));
  }
  return substitute_linear(op, images);
}

DiffOperator transfer_factor(const RootDatum& d, const std::vector<int>& h_positive, const ValuationProfile& v) {
  RingPtr ring = d.sym_ring();
  DiffOperator delta = DiffOperator::constant(ring, Cyc(1));
  for (size_t p = 0; p < d.positive.size(); ++p) {
    int a = d.positive[p];
    if (std::find(h_positive.begin(), h_positive.end(), a) != h_positive.end()) continue;
    delta = delta * pow(DiffOperator::linear(ring, d.roots[a]), v.values.at(p));
  }
  return delta;
}

namespace {

bool finite_part_admissible(const RootDatum& d, const IMat& g, const ValuationProfile& v,
                            const std::optional<std::vector<int>>& h) {
  for (size_t p = 0; p < d.positive.size(); ++p) {
    int a = d.positive[p];
    int img = d.root_index(d.act_on_character(g, d.roots[a]));
    if (img < 0) return false;
    if (v.of_root(d, img) != v.values[p]) return false;
    if (h) {
      bool src_h = std::find(h->begin(), h->end(), a) != h->end();
      int img_pos = d.positive[d.positive_position(img).first];
      bool img_h = std::find(h->begin(), h->end(), img_pos) != h->end();
      if (src_h != img_h) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<AffineWeylElement> stabilizer_group_gamma(const RootDatum& d, const ValuationProfile& v,
                                                      const std::optional<std::vector<int>>& h, int bound) {
  std::vector<std::pair<int, int>> finite;
  for (size_t a = 0; a < d.auts.size(); ++a)
    for (size_t w = 0; w < d.weyl.size(); ++w) {
      IMat g = imat_mul(d.weyl[w], d.auts[a]);
      if (finite_part_admissible(d, g, v, h)) finite.push_back({static_cast<int>(w), static_cast<int>(a)});
    }
  std::vector<AffineWeylElement> out;
  IVec lam(d.n, -bound);
  while (true) {
    for (auto [w, a] : finite) out.push_back({lam, w, a});
    int i = 0;
    while (i < d.n && lam[i] == bound) lam[i++] = -bound;
    if (i == d.n) break;
    ++lam[i];
  }
  return out;
}

std::vector<AffineWeylElement> stabilizer_generators(const RootDatum& d, const ValuationProfile& v,
                                                     const std::optional<std::vector<int>>& h) {
  std::vector<AffineWeylElement> out;
  for (int i = 0; i < d.n; ++i) {
    IVec e(d.n, 0);
    e[i] = 1;
    out.push_back(AffineWeylElement::translation_by(e));
  }
  for (auto& el : stabilizer_group_gamma(d, v, h, 0))
    if (el.w || el.aut) out.push_back(el);
  return out;
}

int eta_character(const RootDatum& d, const AffineWeylElement& tau, const EndoscopicData& e,
                  const ValuationProfile& v) {
  DiffOperator delta = transfer_factor(d, e.h_positive(d), v);
  DiffOperator img = act_on_diff(d, tau.finite_matrix(d), delta);
  if (img == delta) return 1;
  if (img == Cyc(-1) * delta) return -1;
  throw MathError("not in W~^{G,H}_gamma: the transfer factor is not mapped to +-itself");
}

}  // namespace sf
