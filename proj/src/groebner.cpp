#include "sf/groebner.hpp"

#include <algorithm>

namespace sf {

int mon_cmp(const Mon& a, const Mon& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

bool mon_divides(const Mon& a, const Mon& b) {
  if (a.comp != b.comp || a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mon mon_lcm(const Mon& a, const Mon& b) {
  Mon m;
  m.comp = a.comp;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

Mon mon_div(const Mon& b, const Mon& a) {
  Mon m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = b.e[i] - a.e[i];
    m.deg += m.e[i];
  }
  return m;
}

Mon mon_mul(const Mon& a, const Mon& b) {
  Mon m;
  m.comp = b.comp;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] + b.e[i];
  m.deg = a.deg + b.deg;
  return m;
}

PVec pvec_axpy(const PVec& a, const Cyc& c, const Mon& m, const PVec& b) {
  PVec r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      r.t.push_back(a.t[i++]);
      continue;
    }
    Mon mb = mon_mul(m, b.t[j].m);
    int cmp = i < a.t.size() ? mon_cmp(a.t[i].m, mb) : -1;
    if (cmp > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      r.t.push_back({mb, c * b.t[j].c});
      ++j;
    } else {
      Cyc s = a.t[i].c + c * b.t[j].c;
      if (!s.is_zero()) r.t.push_back({mb, s});
      ++i;
      ++j;
    }
  }
  return r;
}

PVec pvec_add(const PVec& a, const PVec& b) { return pvec_axpy(a, Cyc(1), Mon{}, b); }

PVec pvec_scale(const PVec& a, const Cyc& c) {
  if (c.is_zero()) return {};
  PVec r = a;
  for (auto& t : r.t) t.c *= c;
  return r;
}

PVec pvec_mul(const PVec& poly, const PVec& v) {
  PVec r;
  for (auto& t : poly.t) r = pvec_axpy(r, t.c, t.m, v);
  return r;
}

PVec pvec_from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return mon_cmp(x.m, y.m) > 0; });
  PVec r;
  for (auto& t : terms) {
    if (!r.t.empty() && mon_cmp(r.t.back().m, t.m) == 0) {
      r.t.back().c += t.c;
      if (r.t.back().c.is_zero()) r.t.pop_back();
    } else if (!t.c.is_zero()) {
      r.t.push_back(t);
    }
  }
  return r;
}

namespace {

PVec unit_poly() {
  PVec p;
  p.t.push_back({Mon{}, Cyc(1)});
  return p;
}

struct Pair {
  size_t i, j;
  Mon lcm;
};

}  // namespace

GroebnerEngine::GroebnerEngine(int nvars, std::vector<PVec> gens, bool track, size_t budget)
    : nv_(nvars), track_(track), budget_(budget), inputs_(std::move(gens)) {
  if (nv_ > kMaxVars) throw MathError("rank guard exceeded: too many variables for the Groebner engine");
  std::vector<Pair> pairs;
  size_t steps = 0;
  auto add_pairs = [&](size_t k) {
    for (size_t i = 0; i < k; ++i)
      if (G_[i].lead().m.comp == G_[k].lead().m.comp) pairs.push_back({i, k, mon_lcm(G_[i].lead().m, G_[k].lead().m)});
  };
  for (size_t j = 0; j < inputs_.size(); ++j) {
    std::vector<PVec> qb;
    PVec r = reduce_wrt_basis(inputs_[j], track_ ? &qb : nullptr);
    if (r.is_zero()) continue;
    std::vector<PVec> cof;
    if (track_) {
      cof = combine_cofactors(qb);
      for (auto& c : cof) c = pvec_scale(c, Cyc(-1));
      cof[j] = pvec_add(cof[j], unit_poly());
    }
    add_element(std::move(r), std::move(cof));
    add_pairs(G_.size() - 1);
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      int c = mon_cmp(a.lcm, b.lcm);
      if (c) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *it;
    pairs.erase(it);
    if (++steps > budget_) throw BudgetExceeded("Groebner budget exceeded");
    const PVec& gi = G_[p.i];
    const PVec& gj = G_[p.j];
    // Buchberger's product criterion holds for pairs whose leading monomials are coprime
    // only in the ideal case; modules keep all pairs.
    Mon mi = mon_div(p.lcm, gi.lead().m), mj = mon_div(p.lcm, gj.lead().m);
    Cyc ci = gi.lead().c.inv(), cj = gj.lead().c.inv();
    PVec s = pvec_axpy(pvec_axpy(PVec{}, ci, mi, gi), -cj, mj, gj);
    std::vector<PVec> qb;
    PVec r = reduce_wrt_basis(s, track_ ? &qb : nullptr);
    if (r.is_zero()) continue;
    std::vector<PVec> cof;
    if (track_) {
      // r = s - sum qb_l G_l
      cof.assign(inputs_.size(), PVec{});
      for (size_t k = 0; k < inputs_.size(); ++k) {
        PVec a = pvec_axpy(PVec{}, ci, mi, cof_[p.i][k]);
        a = pvec_axpy(a, -cj, mj, cof_[p.j][k]);
        cof[k] = a;
      }
      auto sub = combine_cofactors(qb);
      for (size_t k = 0; k < inputs_.size(); ++k) cof[k] = pvec_axpy(cof[k], Cyc(-1), Mon{}, sub[k]);
    }
    add_element(std::move(r), std::move(cof));
    add_pairs(G_.size() - 1);
  }
  interreduce();
}

void GroebnerEngine::add_element(PVec g, std::vector<PVec> cof) {
  Cyc inv = g.lead().c.inv();
  g = pvec_scale(g, inv);
  if (track_)
    for (auto& c : cof) c = pvec_scale(c, inv);
  G_.push_back(std::move(g));
  cof_.push_back(std::move(cof));
}

std::vector<PVec> GroebnerEngine::combine_cofactors(const std::vector<PVec>& qb) const {
  std::vector<PVec> out(inputs_.size());
  for (size_t l = 0; l < qb.size(); ++l) {
    if (qb[l].is_zero()) continue;
    for (size_t k = 0; k < inputs_.size(); ++k)
      if (!cof_[l][k].is_zero()) out[k] = pvec_add(out[k], pvec_mul(qb[l], cof_[l][k]));
  }
  return out;
}

PVec GroebnerEngine::reduce_wrt_basis(const PVec& f, std::vector<PVec>* qb) const {
  if (qb) qb->assign(G_.size(), PVec{});
  PVec rem, cur = f;
  size_t steps = 0;
  while (!cur.is_zero()) {
    const Term lt = cur.lead();
    size_t k = 0;
    for (; k < G_.size(); ++k)
      if (mon_divides(G_[k].lead().m, lt.m)) break;
    if (k == G_.size()) {
      rem.t.push_back(lt);
      cur.t.erase(cur.t.begin());
      continue;
    }
    if (++steps > 50 * budget_) throw BudgetExceeded("reduction budget exceeded");
    Cyc c = lt.c / G_[k].lead().c;
    Mon m = mon_div(lt.m, G_[k].lead().m);
    cur = pvec_axpy(cur, -c, m, G_[k]);
    if (qb) {
      PVec mono;
      mono.t.push_back({m, c});
      (*qb)[k] = pvec_add((*qb)[k], mono);
    }
  }
  return rem;
}

void GroebnerEngine::interreduce() {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(G_.size(), true);
  for (size_t i = 0; i < G_.size(); ++i)
    for (size_t j = 0; j < G_.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (mon_divides(G_[j].lead().m, G_[i].lead().m)) keep[i] = false;
    }
  std::vector<PVec> G;
  std::vector<std::vector<PVec>> C;
  for (size_t i = 0; i < G_.size(); ++i)
    if (keep[i]) {
      G.push_back(G_[i]);
      C.push_back(cof_[i]);
    }
  G_ = std::move(G);
  cof_ = std::move(C);
  // Tail reduction.
  for (size_t i = 0; i < G_.size(); ++i) {
    PVec head;
    head.t.push_back(G_[i].lead());
    PVec tail = G_[i];
    tail.t.erase(tail.t.begin());
    std::vector<PVec> qb;
    PVec r = reduce_wrt_basis(tail, track_ ? &qb : nullptr);
    if (track_) {
      auto sub = combine_cofactors(qb);
      for (size_t k = 0; k < inputs_.size(); ++k) cof_[i][k] = pvec_axpy(cof_[i][k], Cyc(-1), Mon{}, sub[k]);
    }
    G_[i] = pvec_add(head, r);
  }
  // Deterministic order: increasing leading monomial.
  std::vector<size_t> idx(G_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return mon_cmp(G_[a].lead().m, G_[b].lead().m) < 0; });
  std::vector<PVec> G2;
  std::vector<std::vector<PVec>> C2;
  for (auto i : idx) {
    G2.push_back(G_[i]);
    C2.push_back(cof_[i]);
  }
  G_ = std::move(G2);
  cof_ = std::move(C2);
}

PVec GroebnerEngine::reduce(const PVec& f, std::vector<PVec>* quot_inputs) const {
  if (!quot_inputs) return reduce_wrt_basis(f, nullptr);
  if (!track_) throw MathError("cofactors were not tracked");
  std::vector<PVec> qb;
  PVec r = reduce_wrt_basis(f, &qb);
  *quot_inputs = combine_cofactors(qb);
  return r;
}

std::vector<std::vector<PVec>> GroebnerEngine::input_syzygies() const {
  if (!track_) throw MathError("cofactors were not tracked");
  size_t m = inputs_.size(), s = G_.size();
  std::vector<std::vector<PVec>> out;
  auto push = [&](std::vector<PVec> v) {
    for (auto& x : v)
      if (!x.is_zero()) {
        out.push_back(std::move(v));
        return;
      }
  };
  // Schreyer syzygies of the basis, transported to the inputs.
  for (size_t i = 0; i < s; ++i)
    for (size_t j = i + 1; j < s; ++j) {
      if (G_[i].lead().m.comp != G_[j].lead().m.comp) continue;
      Mon l = mon_lcm(G_[i].lead().m, G_[j].lead().m);
      Mon mi = mon_div(l, G_[i].lead().m), mj = mon_div(l, G_[j].lead().m);
      PVec sp = pvec_axpy(pvec_axpy(PVec{}, Cyc(1), mi, G_[i]), Cyc(-1), mj, G_[j]);
      std::vector<PVec> qb;
      PVec r = reduce_wrt_basis(sp, &qb);
      if (!r.is_zero()) throw MathError("internal: S-pair of a Groebner basis did not reduce to zero");
      std::vector<PVec> sig(s);
      for (size_t k = 0; k < s; ++k) sig[k] = pvec_scale(qb[k], Cyc(-1));
      PVec a;
      a.t.push_back({mi, Cyc(1)});
      PVec b;
      b.t.push_back({mj, Cyc(-1)});
      sig[i] = pvec_add(sig[i], a);
      sig[j] = pvec_add(sig[j], b);
      push(combine_cofactors(sig));
    }
  // Inputs rewritten through the basis: e_j - D_j C.
  for (size_t j = 0; j < m; ++j) {
    std::vector<PVec> qb;
    PVec r = reduce_wrt_basis(inputs_[j], &qb);
    if (!r.is_zero()) throw MathError("internal: input generator not in its own span");
    auto dc = combine_cofactors(qb);
    for (auto& x : dc) x = pvec_scale(x, Cyc(-1));
    dc[j] = pvec_add(dc[j], unit_poly());
    push(std::move(dc));
  }
  return out;
}

std::optional<size_t> GroebnerEngine::standard_monomial_count(int ncomp) const {
  size_t total = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Mon> leads;
    for (auto& g : G_)
      if (g.lead().m.comp == c) leads.push_back(g.lead().m);
    std::vector<int> bound(nv_, -1);
    for (auto& m : leads)
      for (int i = 0; i < nv_; ++i)
        if (m.e[i] == m.deg && m.deg > 0 && (bound[i] < 0 || m.e[i] < bound[i])) bound[i] = m.e[i];
    if (nv_ == 0) {
      total += leads.empty() ? 1 : 0;
      continue;
    }
    // The unit vector e_c itself may be a leading monomial.
    bool unit = std::any_of(leads.begin(), leads.end(), [](const Mon& m) { return m.deg == 0; });
    if (unit) continue;
    for (int i = 0; i < nv_; ++i)
      if (bound[i] < 0) return std::nullopt;
    double box = 1;
    for (int i = 0; i < nv_; ++i) box *= bound[i];
    if (box > 5e7) throw BudgetExceeded("standard monomial box too large");
    Mon cur;
    cur.comp = c;
    while (true) {
      cur.deg = 0;
      for (int i = 0; i < nv_; ++i) cur.deg += cur.e[i];
      bool divisible = false;
      for (auto& m : leads)
        if (mon_divides(m, cur)) {
          divisible = true;
          break;
        }
      if (!divisible) ++total;
      int i = 0;
      while (i < nv_ && cur.e[i] == bound[i] - 1) cur.e[i++] = 0;
      if (i == nv_) break;
      ++cur.e[i];
    }
  }
  return total;
}

}  // namespace sf
