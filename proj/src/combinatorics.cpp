#include <random>
#include <sstream>

#include "sf/presentation.hpp"

namespace sf {

RingPtr comb_ring() {
  static RingPtr r = PolyRing::make(2, {"x", "t"}, true);
  return r;
}

void CombElement::add(int kind, long pos, const Polynomial& p) {
  if (p.is_zero()) return;
  auto key = std::make_pair(kind, pos);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, p);
    return;
  }
  it->second = it->second + p;
  if (it->second.is_zero()) terms.erase(it);
}

std::string CombElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, p] : terms) {
    if (!first) os << " + ";
    first = false;
    os << (k.first ? "r" : "l") << k.second << "*(" << p.str() << ")";
  }
  return os.str();
}

bool CombElement::operator==(const CombElement& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (auto& [k, p] : terms) {
    auto it = o.terms.find(k);
    if (it == o.terms.end() || !(it->second == p)) return false;
  }
  return true;
}

CombElement comb_partial(const CombElement& e, int var) {
  CombElement out;
  DiffOperator d = DiffOperator::partial(comb_ring(), var);
  for (auto& [k, p] : e.terms) out.add(k.first, k.second, apply(d, p));
  return out;
}

namespace {

Polynomial linear_xt(long cx, long ct) { return Polynomial::linear(comb_ring(), {cx, ct}); }

Polynomial x_power(int e) { return Polynomial::monomial(comb_ring(), {e, 0}); }

Cyc zc(const Integer& z) { return Cyc(Rational(z)); }

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

CombinatorialGenerator expand_f_md(long m, int d, ExpansionForm form) {
  if (d < 1) throw MathError("d must be positive");
  CombinatorialGenerator g{'f', m, 0, d, {}};
  if (form == ExpansionForm::raw) {
    for (long a = m; a <= m + d; ++a)
      for (long b = a + 1; b <= m + d; ++b) {
        Integer c = Integer(sign(a - b) * (a - b)) * binomial(d, a - m) * binomial(d, b - m);
        Polynomial p = zc(c) * pow(linear_xt(a + b, -1), d - 1);
        g.expansion.add(0, b, p);
        g.expansion.add(0, a, Cyc(-1) * p);
      }
  } else {
    Integer lead = Integer(sign(d)) * factorial(d);
    for (long j = 0; j <= d; ++j)
      g.expansion.add(0, m + j, zc(lead * sign(j) * binomial(d, j)) * x_power(d - 1));
  }
  return g;
}

CombinatorialGenerator expand_f_abd(long a, long b, int d, ExpansionForm form, int t_scale) {
  if (d < 1) throw MathError("d must be positive");
  CombinatorialGenerator g{'g', a, b, d, {}};
  if (form == ExpansionForm::raw) {
    for (long u = a; u <= a + d - 1; ++u)
      for (long v = b; v <= b + d - 1; ++v) {
        Integer c = Integer(sign(u - v)) * binomial(d - 1, u - a) * binomial(d - 1, v - b);
        Polynomial p = zc(c) * pow(linear_xt(u + v, -t_scale), d - 1);
        g.expansion.add(0, u, p);
        g.expansion.add(1, v, Cyc(-1) * p);
      }
  } else {
    Integer lead = Integer(sign(a + b + d - 1)) * factorial(d - 1);
    for (long j = 0; j <= d - 1; ++j) {
      Polynomial p = zc(lead * sign(j) * binomial(d - 1, j)) * x_power(d - 1);
      g.expansion.add(0, a + j, p);
      g.expansion.add(1, b + j, Cyc(-1) * p);
    }
  }
  return g;
}

Rational binomial_alternating_sum(int n, const std::vector<Rational>& p) {
  Rational total = 0;
  for (int k = 0; k <= n; ++k) {
    Rational val = 0, pw = 1;
    for (const Rational& c : p) {
      val += c * pw;
      pw *= k;
    }
    total += Rational(binomial(n, k)) * sign(k) * val;
  }
  return total;
}

VerificationReport check_fmd_closed_form(long mlo, long mhi, int dmax) {
  VerificationReport rep{"fmd-closed-form", {}};
  size_t bad = 0, kernel_bad = 0;
  std::string first;
  for (long m = mlo; m <= mhi; ++m)
    for (int d = 1; d <= dmax; ++d) {
      auto raw = expand_f_md(m, d, ExpansionForm::raw);
      auto closed = expand_f_md(m, d, ExpansionForm::closed);
      if (!(raw.expansion == closed.expansion) && !bad++)
        first = "m=" + std::to_string(m) + " d=" + std::to_string(d) + ": " + raw.expansion.str();
      if (!comb_partial(raw.expansion, 1).is_zero()) ++kernel_bad;
    }
  rep.add("fmd-raw-equals-closed", "f_{m,d} equals (-1)^d d! (1-a^vee)^d l_m (x) x^{d-1}", bad == 0,
          bad ? first : "all (m,d) in range");
  rep.add("fmd-in-ker-dt", "f_{m,d} is killed by d_t", kernel_bad == 0);
  return rep;
}

VerificationReport check_fabd_closed_form(int count, unsigned seed) {
  VerificationReport rep{"fabd-closed-form", {}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pos(-5, 5), deg(1, 4);
  size_t bad = 0, kernel_bad = 0;
  std::string first;
  for (int i = 0; i < count; ++i) {
    long a = pos(rng), b = pos(rng);
    int d = deg(rng);
    auto raw = expand_f_abd(a, b, d, ExpansionForm::raw);
    auto closed = expand_f_abd(a, b, d, ExpansionForm::closed);
    if (!(raw.expansion == closed.expansion) && !bad++)
      first = "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(d) + ")";
    if (!comb_partial(raw.expansion, 1).is_zero()) ++kernel_bad;
  }
  rep.add("fabd-raw-equals-closed", "double sum f_{a,b;d} equals its closed form", bad == 0, first);
  rep.add("fabd-in-ker-dt", "f_{a,b;d} is killed by d_t", kernel_bad == 0);
  return rep;
}

namespace {

// Coordinates of a Grassmannian-type element of degree h on window positions [0, N).
Vec window_coords(const CombElement& e, long N, int h) {
  size_t nm = static_cast<size_t>(h + 1);
  Vec v(static_cast<size_t>(N) * nm, Cyc(0));
  for (auto& [k, p] : e.terms) {
    if (k.first != 0 || k.second < 0 || k.second >= N) throw MathError("element leaves the window");
    auto c = coordinates(p, h);
    for (size_t j = 0; j < nm; ++j) v[static_cast<size_t>(k.second) * nm + j] = c[j];
  }
  return v;
}

CombElement pair_element(long a, long b, int h) {
  CombElement e;
  Polynomial p = pow(linear_xt(a + b, -1), h);
  e.add(0, b, p);
  e.add(0, a, Cyc(-1) * p);
  return e;
}

// d_t-kernel of the span of the given pair elements, as window vectors in degree h.
Mat dt_kernel(const std::vector<std::pair<long, long>>& pairs, long N, int h) {
  Mat out;
  if (pairs.empty()) return out;
  if (h == 0) {
    for (auto& [a, b] : pairs) out.push_back(window_coords(pair_element(a, b, 0), N, 0));
    return out;
  }
  size_t rows = static_cast<size_t>(N) * static_cast<size_t>(h);
  Mat m = zero_mat(rows, pairs.size());
  for (size_t c = 0; c < pairs.size(); ++c) {
    Vec col = window_coords(comb_partial(pair_element(pairs[c].first, pairs[c].second, h), 1), N, h - 1);
    for (size_t r = 0; r < rows; ++r) m[r][c] = col[r];
  }
  Mat ns = nullspace(m, pairs.size());
  for (auto& g : ns) {
    CombElement e;
    for (size_t c = 0; c < pairs.size(); ++c) {
      if (g[c].is_zero()) continue;
      for (auto& [k, p] : pair_element(pairs[c].first, pairs[c].second, h).terms) e.add(k.first, k.second, g[c] * p);
    }
    out.push_back(window_coords(e, N, h));
  }
  return out;
}

// t-free element of degree h as a Laurent vector on a piece with `pieces` blocks (l -> 0, r -> 1).
LVec to_lvec(const CombElement& e, int h, size_t blocks) {
  LVec v(blocks, LPoly(1));
  for (auto& [k, p] : e.terms) {
    for (auto& [ex, c] : p.terms)
      if (ex[1] != 0 || ex[0] != h) throw MathError("element is not t-free of the expected degree");
    v.at(static_cast<size_t>(k.first)) += LPoly::monomial({k.second}, p.coeff({h, 0}));
  }
  return v;
}

bool same_module(int n, size_t b, const std::vector<LVec>& x, const std::vector<LVec>& y) {
  if (x.empty() || y.empty()) {
    auto nonzero = [](const std::vector<LVec>& s) {
      for (auto& v : s)
        for (auto& p : v)
          if (!p.is_zero()) return true;
      return false;
    };
    return !nonzero(x) && !nonzero(y);
  }
  LaurentSubmodule mx(n, b, x), my(n, b, y);
  for (auto& v : x)
    if (!my.contains(v)) return false;
  for (auto& v : y)
    if (!mx.contains(v)) return false;
  return true;
}

std::vector<LVec> family_elements(const std::vector<RelationFamily>& fs) {
  std::vector<LVec> out;
  for (auto& f : fs) out.push_back(f.element);
  return out;
}

}  // namespace

VerificationReport check_fmd_kernel_span(int vmax, int hmax) {
  VerificationReport rep{"fmd-kernel-span", {}};
  RootDatum sl2 = sl2_datum();
  for (int v = 1; v <= vmax; ++v)
    for (int h = 0; h <= hmax; ++h) {
      long N = 2L * (v + h) + 2;
      std::vector<std::pair<long, long>> pairs;
      for (long a = 0; a < N; ++a)
        for (long b = a + 1; b < N && b - a <= v; ++b) pairs.push_back({a, b});
      Mat lhs = dt_kernel(pairs, N, h);
      Mat rhs;
      if (h + 1 <= v)
        for (long m = 0; m + h + 1 < N; ++m) rhs.push_back(window_coords(expand_f_md(m, h + 1, ExpansionForm::raw).expansion, N, h));
      size_t ncols = static_cast<size_t>(N) * static_cast<size_t>(h + 1);
      bool ok = same_span(lhs, rhs, ncols);
      std::string id = "v" + std::to_string(v) + "-h" + std::to_string(h);
      rep.add("fmd-kernel-span-" + id, "d_t-kernel of P_v equals the span of the f_{m,d}", ok,
              "dims " + std::to_string(mat_rank(lhs, ncols)) + " vs " + std::to_string(mat_rank(rhs, ncols)) +
                  " in window " + std::to_string(N));
      std::vector<LVec> jv;
      if (h + 1 <= v) jv.push_back(to_lvec(expand_f_md(0, h + 1, ExpansionForm::raw).expansion, h, 1));
      auto rel = family_elements(relation_generators(Space::grassmannian, sl2, ValuationProfile::constant(sl2, v), h));
      rep.add("jv-relations-" + id, "J_v equals the relation module of the presentation",
              same_module(1, 1, jv, rel));
    }
  return rep;
}

VerificationReport check_degree_lemma(int instances, unsigned seed) {
  VerificationReport rep{"degree-lemma", {}};
  std::mt19937 rng(seed);
  size_t bad = 0;
  std::string first;
  for (int i = 0; i < instances; ++i) {
    int v = std::uniform_int_distribution<int>(1, 4)(rng);
    int h = std::uniform_int_distribution<int>(v, v + 4)(rng);
    int d = std::uniform_int_distribution<int>(v + 1, v + 4)(rng);
    long m = std::uniform_int_distribution<long>(-6, 6)(rng);
    // Shift the window to start at 0; the system only depends on a+b through the pairs.
    std::vector<std::pair<long, long>> pairs;
    for (long a = m; a < m + h; ++a)
      for (long b = a + 1; b <= m + h && b - a <= v; ++b) pairs.push_back({a, b});
    size_t rows = static_cast<size_t>(h + 1) * static_cast<size_t>(d - 1);
    Mat mat = zero_mat(rows, pairs.size());
    for (size_t c = 0; c < pairs.size(); ++c) {
      auto [a, b] = pairs[c];
      CombElement e;
      Polynomial p = pow(linear_xt(a + b, -1), d - 1);
      e.add(0, b, p);
      e.add(0, a, Cyc(-1) * p);
      CombElement de = comb_partial(e, 1);
      for (auto& [k, q] : de.terms) {
        auto coords = coordinates(q, d - 2);
        for (size_t j = 0; j < coords.size(); ++j)
          mat[static_cast<size_t>(k.second - m) * static_cast<size_t>(d - 1) + j][c] = coords[j];
      }
    }
    size_t nd = nullspace(mat, pairs.size()).size();
    if (nd != 0 && !bad++) {
      std::ostringstream os;
      os << "v=" << v << " h=" << h << " d=" << d << " m=" << m << " nullity " << nd;
      first = os.str();
    }
  }
  rep.add("degree-lemma-nullspace", "d_t g = 0 with d > v forces g = 0", bad == 0,
          std::to_string(instances) + " instances" + (bad ? ", first failure " + first : ""));
  return rep;
}

VerificationReport check_binomial_identity(int nmax, int random_per_n, unsigned seed) {
  VerificationReport rep{"binomial-identity", {}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  size_t bad = 0;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<Rational> mono(n + 1, 0);
    mono[n] = 1;
    Rational top = binomial_alternating_sum(n, mono);
    if (top != Rational(factorial(n)) * sign(n)) ++bad;
    for (int lower = 0; lower < n; ++lower) {
      std::vector<Rational> p(lower + 1, 0);
      p[lower] = 1;
      if (binomial_alternating_sum(n, p) != 0) ++bad;
    }
    for (int r = 0; r < random_per_n; ++r) {
      std::vector<Rational> p(n + 1);
      for (auto& c : p) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
      }
      Rational expect = p[n] * Rational(factorial(n)) * sign(n);
      if (binomial_alternating_sum(n, p) != expect) ++bad;
    }
  }
  rep.add("binomial-alternating-sum", "sum (-1)^k C(n,k) p(k) is 0 below degree n and (-1)^n n! on k^n", bad == 0,
          "n <= " + std::to_string(nmax));
  return rep;
}

VerificationReport check_flag_relations(int vmax, int hmax) {
  VerificationReport rep{"flag-relations", {}};
  RootDatum sl2 = sl2_datum();
  for (int v = 1; v <= vmax; ++v)
    for (int h = 0; h <= hmax; ++h) {
      std::vector<LVec> kv;
      if (h + 1 <= v) {
        kv.push_back(to_lvec(expand_f_abd(0, 0, h + 1, ExpansionForm::raw).expansion, h, 2));
        kv.push_back(to_lvec(expand_f_abd(1, 0, h + 1, ExpansionForm::raw).expansion, h, 2));
      }
      auto rel = family_elements(relation_generators(Space::flag, sl2, ValuationProfile::constant(sl2, v), h));
      rep.add("flag-relations-v" + std::to_string(v) + "-h" + std::to_string(h),
              "K_v spans the two flag relation families", same_module(1, 2, kv, rel));
    }
  return rep;
}

VerificationReport check_sl2_pieces(int vmax, int kmax) {
  VerificationReport rep{"sl2-pieces", {}};
  RootDatum sl2 = sl2_datum();
  for (int v = 0; v <= vmax; ++v)
    for (int k = 0; k <= kmax; ++k) {
      RankOneStructure st =
          rank_one_structure(graded_piece(Space::grassmannian, sl2, ValuationProfile::constant(sl2, v), k));
      bool ok;
      if (k < v)
        ok = st.free_rank == 0 && st.torsion.size() == 1 &&
             st.torsion[0] == LPoly::one_minus({1}).pow(k + 1).normalized();
      else
        ok = st.free_rank == 1 && st.torsion.empty();
      rep.add("sl2-piece-v" + std::to_string(v) + "-k" + std::to_string(k),
              "degree-k piece is K[L]/(1-t)^{k+1} below v and free from v on", ok, st.str());
    }
  return rep;
}

}  // namespace sf
