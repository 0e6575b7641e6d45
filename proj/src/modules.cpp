#include <algorithm>
#include <memory>

#include "sf/groebner.hpp"
#include "sf/laurent.hpp"

namespace sf {

namespace {

// Laurent vector -> polynomial vector after multiplying by t^shift (shift must clear negative exponents).
PVec to_pvec(const LVec& v, const IVec& shift) {
  std::vector<Term> terms;
  for (size_t c = 0; c < v.size(); ++c)
    for (auto& [e, k] : v[c].terms) {
      Mon m;
      m.comp = static_cast<int32_t>(c);
      for (size_t i = 0; i < e.size(); ++i) {
        long x = e[i] + shift[i];
        if (x < 0 || x > 30000) throw MathError("exponent out of range for polynomial transport");
        m.e[i] = static_cast<int16_t>(x);
        m.deg += m.e[i];
      }
      terms.push_back({m, k});
    }
  return pvec_from_terms(std::move(terms));
}

// Polynomial vector in t_1..t_n (and u at index n when with_u) -> Laurent vector, u = (t_1...t_n)^{-1}.
LVec from_pvec(const PVec& p, size_t b, int n, bool with_u) {
  LVec v(b, LPoly(n));
  for (auto& t : p.t) {
    IVec e(n);
    long u = with_u ? t.m.e[n] : 0;
    for (int i = 0; i < n; ++i) e[i] = t.m.e[i] - u;
    v[t.m.comp].add_term(e, t.c);
  }
  return v;
}

IVec clearing_shift(const LVec& v, int n) {
  IVec s(n, 0);
  for (auto& p : v) {
    if (p.is_zero()) continue;
    IVec m = p.min_exps();
    for (int i = 0; i < n; ++i) s[i] = std::max(s[i], -m[i]);
  }
  return s;
}

bool lvec_is_zero(const LVec& v) {
  return std::all_of(v.begin(), v.end(), [](const LPoly& p) { return p.is_zero(); });
}

// (u t_1 ... t_n - 1) e_c, optionally also (1 - z P) e_c to invert P.
PVec unit_relation(int n, int c) {
  Mon a;
  for (int i = 0; i <= n; ++i) a.e[i] = 1;
  a.deg = static_cast<int16_t>(n + 1);
  a.comp = c;
  Mon one;
  one.comp = c;
  return pvec_from_terms({{a, Cyc(1)}, {one, Cyc(-1)}});
}

void check_rank(int n) {
  if (n > 3) throw MathError("rank guard exceeded: lattice rank above 3");
}

}  // namespace

// ---------------------------------------------------------------- submodules

LaurentSubmodule::LaurentSubmodule(int n, size_t b, std::vector<LVec> gens)
    : n_(n), b_(b), gens_(std::move(gens)), gb_(nullptr) {
  check_rank(n_);
  std::vector<PVec> inputs;
  for (auto& g : gens_) {
    if (g.size() != b_) throw MathError("generator length mismatch");
    shifts_.push_back(clearing_shift(g, n_));
    inputs.push_back(to_pvec(g, shifts_.back()));
  }
  for (size_t c = 0; c < b_; ++c) inputs.push_back(unit_relation(n_, static_cast<int>(c)));
  gb_ = new GroebnerEngine(n_ + 1, std::move(inputs), true);
}

LaurentSubmodule::~LaurentSubmodule() { delete gb_; }

LaurentSubmodule::LaurentSubmodule(LaurentSubmodule&& o) noexcept
    : n_(o.n_), b_(o.b_), gens_(std::move(o.gens_)), shifts_(std::move(o.shifts_)), gb_(o.gb_) {
  o.gb_ = nullptr;
}

bool LaurentSubmodule::contains(const LVec& v) const {
  if (lvec_is_zero(v)) return true;
  return gb_->reduce(to_pvec(v, clearing_shift(v, n_)), nullptr).is_zero();
}

bool LaurentSubmodule::express(const LVec& v, LVec& coeffs) const {
  coeffs.assign(gens_.size(), LPoly(n_));
  if (lvec_is_zero(v)) return true;
  IVec s = clearing_shift(v, n_);
  std::vector<PVec> q;
  PVec r = gb_->reduce(to_pvec(v, s), &q);
  if (!r.is_zero()) return false;
  IVec neg(n_);
  for (int i = 0; i < n_; ++i) neg[i] = -s[i];
  for (size_t i = 0; i < gens_.size(); ++i) {
    LPoly c = from_pvec(q[i], 1, n_, true)[0];
    IVec sh = shifts_[i];
    for (int k = 0; k < n_; ++k) sh[k] += neg[k];
    coeffs[i] = c.shifted(sh);
  }
  return true;
}

std::optional<size_t> LaurentSubmodule::quotient_dimension() const {
  return gb_->standard_monomial_count(static_cast<int>(b_));
}

std::vector<LVec> LaurentSubmodule::basis() const {
  std::vector<LVec> out;
  for (auto& g : gb_->basis()) {
    LVec v = from_pvec(g, b_, n_, true);
    if (!lvec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------- syzygies

std::vector<LVec> laurent_syzygies(const std::vector<LVec>& vecs, size_t b, int n) {
  check_rank(n);
  std::vector<IVec> shifts;
  std::vector<PVec> inputs;
  for (auto& v : vecs) {
    if (v.size() != b) throw MathError("vector length mismatch");
    shifts.push_back(clearing_shift(v, n));
    inputs.push_back(to_pvec(v, shifts.back()));
  }
  GroebnerEngine gb(n, std::move(inputs), true);
  std::vector<LVec> out;
  for (auto& syz : gb.input_syzygies()) {
    LVec c(vecs.size(), LPoly(n));
    for (size_t i = 0; i < vecs.size(); ++i) c[i] = from_pvec(syz[i], 1, n, false)[0].shifted(shifts[i]);
    if (!lvec_is_zero(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  // Greedy pruning of redundant generators.
  if (out.size() > 1 && out.size() <= 60) {
    std::vector<LVec> kept;
    for (size_t i = 0; i < out.size(); ++i) {
      std::vector<LVec> others = kept;
      for (size_t j = i + 1; j < out.size(); ++j) others.push_back(out[j]);
      LaurentSubmodule sub(n, vecs.size(), others);
      if (!sub.contains(out[i])) kept.push_back(out[i]);
    }
    out = std::move(kept);
  }
  return out;
}

GroebnerModuleResult groebner_module_basis(const LaurentMatrix& m) {
  check_rank(m.ring.n);
  std::vector<LVec> cols;
  for (size_t j = 0; j < m.cols; ++j) cols.push_back(m.column(j));
  GroebnerModuleResult r;
  LaurentSubmodule sub(m.ring.n, m.rows, cols);
  r.basis = sub.basis();
  // Elements that differ by a Laurent unit, or are otherwise redundant, collapse.
  if (r.basis.size() > 1 && r.basis.size() <= 60) {
    std::vector<LVec> kept;
    for (size_t i = 0; i < r.basis.size(); ++i) {
      std::vector<LVec> others = kept;
      for (size_t j = i + 1; j < r.basis.size(); ++j) others.push_back(r.basis[j]);
      if (others.empty() || !LaurentSubmodule(m.ring.n, m.rows, others).contains(r.basis[i]))
        kept.push_back(r.basis[i]);
    }
    r.basis = std::move(kept);
  }
  auto syz = laurent_syzygies(cols, m.rows, m.ring.n);
  r.syzygies = LaurentMatrix(m.ring, m.cols, syz.size());
  for (size_t j = 0; j < syz.size(); ++j)
    for (size_t i = 0; i < m.cols; ++i) r.syzygies.at(i, j) = syz[j][i];
  return r;
}

// ---------------------------------------------------------------- maps of modules

namespace {

// Relations among the vectors k_1..k_m inside src: syzygies of [k | src relations], projected.
FGModule presentation_of_span(const FGModule& src, const std::vector<LVec>& k) {
  std::vector<LVec> vecs = k;
  for (size_t i = 0; i < src.relations.rows; ++i) vecs.push_back(src.relations.row(i));
  FGModule out = FGModule::free_module(src.ring, k.size());
  if (k.empty()) return out;
  for (auto& s : laurent_syzygies(vecs, src.gens, src.ring.n)) {
    LVec rel(s.begin(), s.begin() + k.size());
    if (!lvec_is_zero(rel)) out.add_relation(rel);
  }
  return out;
}

}  // namespace

KernelResult module_map_kernel(const FGModule& src, const FGModule& tgt, const LaurentMatrix& phi) {
  if (phi.rows != tgt.gens || phi.cols != src.gens) throw MathError("map size mismatch");
  const int n = src.ring.n;
  std::vector<LVec> vecs;
  for (size_t j = 0; j < phi.cols; ++j) vecs.push_back(phi.column(j));
  for (size_t i = 0; i < tgt.relations.rows; ++i) vecs.push_back(tgt.relations.row(i));
  std::vector<LVec> gens;
  if (src.gens > 0) {
    for (auto& s : laurent_syzygies(vecs, tgt.gens, n)) {
      LVec k(s.begin(), s.begin() + src.gens);
      if (!lvec_is_zero(k)) gens.push_back(std::move(k));
    }
  }
  // Drop generators that vanish in src or are combinations of the others.
  std::vector<LVec> rels;
  for (size_t i = 0; i < src.relations.rows; ++i) rels.push_back(src.relations.row(i));
  std::vector<LVec> kept;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<LVec> others = rels;
    for (auto& g : kept) others.push_back(g);
    for (size_t j = i + 1; j < gens.size(); ++j) others.push_back(gens[j]);
    LaurentSubmodule sub(n, src.gens, others);
    if (!sub.contains(gens[i])) kept.push_back(gens[i]);
  }
  KernelResult r{presentation_of_span(src, kept), kept};
  return r;
}

FGModule module_map_cokernel(const FGModule& tgt, const LaurentMatrix& phi) {
  FGModule c = tgt;
  for (size_t j = 0; j < phi.cols; ++j) c.add_relation(phi.column(j));
  return c;
}

FGModule prune_presentation(const FGModule& m, std::vector<size_t>* kept) {
  std::vector<LVec> rels;
  for (size_t i = 0; i < m.relations.rows; ++i) rels.push_back(m.relations.row(i));
  std::vector<size_t> alive(m.gens);
  for (size_t i = 0; i < m.gens; ++i) alive[i] = i;
  // Eliminate any generator that appears with a unit coefficient in some relation.
  while (true) {
    bool found = false;
    for (size_t r = 0; r < rels.size() && !found; ++r)
      for (size_t c = 0; c < rels[r].size(); ++c) {
        if (rels[r][c].is_zero() || !rels[r][c].is_unit()) continue;
        const auto& [e, a] = *rels[r][c].terms.begin();
        IVec neg(e.size());
        for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        LPoly inv = LPoly::monomial(neg, a.inv());
        LVec piv = rels[r];
        for (auto& x : piv) x = x * inv;  // piv[c] == 1
        std::vector<LVec> next;
        for (size_t s = 0; s < rels.size(); ++s) {
          if (s == r) continue;
          LVec row = rels[s];
          if (!row[c].is_zero()) {
            LPoly f = row[c];
            for (size_t k = 0; k < row.size(); ++k) row[k] -= f * piv[k];
          }
          row.erase(row.begin() + c);
          if (!lvec_is_zero(row)) next.push_back(std::move(row));
        }
        rels = std::move(next);
        alive.erase(alive.begin() + c);
        found = true;
        break;
      }
    if (!found) break;
  }
  FGModule out = FGModule::free_module(m.ring, alive.size());
  for (auto& r : rels) out.add_relation(r);
  if (kept) *kept = alive;
  return out;
}

// ---------------------------------------------------------------- J-torsion

Verdict is_J_torsion(const FGModule& mod, const std::vector<LPoly>& jgens, int cap) {
  if (jgens.empty()) throw MathError("J generators must be nonempty");
  const int n = mod.ring.n;
  LPoly P = LPoly::constant(n, Cyc(1));
  for (auto& j : jgens) P = P * j;
  if (mod.gens == 0) return Verdict::pass;
  if (n == 1) {
    RankOneStructure st = rank_one_structure(mod);
    if (st.free_rank > 0) return Verdict::fail;
    for (auto& f : st.torsion)
      if (!ldivides(f, P.pow(static_cast<int>(f.span())))) return Verdict::fail;
    return Verdict::pass;
  }
  check_rank(n);
  std::vector<LVec> rels;
  for (size_t i = 0; i < mod.relations.rows; ++i) rels.push_back(mod.relations.row(i));
  if (cap < 0) cap = 6;
  try {
    LaurentSubmodule sub(n, mod.gens, rels);
    for (int k = 1; k <= cap; ++k) {
      LPoly Pk = P.pow(k);
      bool all = true;
      for (size_t c = 0; c < mod.gens && all; ++c) {
        LVec e(mod.gens, LPoly(n));
        e[c] = Pk;
        all = sub.contains(e);
      }
      if (all) return Verdict::pass;
    }
    // Exact test: M[1/P] = 0 iff every e_c lies in N + (1 - zP).
    std::vector<PVec> inputs;
    for (auto& r : rels) inputs.push_back(to_pvec(r, clearing_shift(r, n)));
    IVec ps = clearing_shift(LVec{P}, n);
    PVec Pp = to_pvec(LVec{P}, ps);
    for (size_t c = 0; c < mod.gens; ++c) {
      inputs.push_back(unit_relation(n, static_cast<int>(c)));
      std::vector<Term> terms;
      Mon one;
      one.comp = static_cast<int32_t>(c);
      terms.push_back({one, Cyc(1)});
      for (auto& t : Pp.t) {
        Mon m = t.m;
        m.e[n + 1] = 1;
        m.deg += 1;
        m.comp = static_cast<int32_t>(c);
        terms.push_back({m, -t.c});
      }
      inputs.push_back(pvec_from_terms(std::move(terms)));
    }
    GroebnerEngine gb(n + 2, std::move(inputs), false, 20000);
    for (size_t c = 0; c < mod.gens; ++c) {
      Mon one;
      one.comp = static_cast<int32_t>(c);
      PVec e = pvec_from_terms({{one, Cyc(1)}});
      if (!gb.reduce(e, nullptr).is_zero()) return Verdict::fail;
    }
    return Verdict::pass;
  } catch (const BudgetExceeded&) {
    return Verdict::undetermined;
  }
}

}  // namespace sf
