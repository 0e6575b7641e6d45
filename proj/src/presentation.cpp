#include "sf/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace sf {

namespace {

std::vector<int> resolve_roots(const RootDatum& d, const std::vector<int>* roots) {
  return roots ? *roots : d.positive;
}

size_t sym_dim(const RootDatum& d, int k) { return k < 0 ? 0 : monomials_of_degree(d.n, k).size(); }

LPoly lconst(int n, const Cyc& c) { return LPoly::constant(n, c); }

}  // namespace

size_t piece_rank(Space space, const RootDatum& d, int k) {
  size_t s = sym_dim(d, k);
  return space == Space::flag ? s * d.weyl.size() : s;
}

LaurentRing lattice_ring(const RootDatum& d) { return LaurentRing{d.n, 1}; }

std::vector<RelationFamily> relation_generators(Space space, const RootDatum& d, const ValuationProfile& v, int k,
                                                const std::vector<int>* roots) {
  std::vector<RelationFamily> out;
  if (k < 0) return out;
  RingPtr ring = d.sym_ring();
  size_t dim = sym_dim(d, k);
  size_t nw = space == Space::flag ? d.weyl.size() : 1;
  for (int a : resolve_roots(d, roots)) {
    int va = v.of_root(d, a);
    int ra = d.reflection_index(a);
    for (int dd = 1; dd <= va; ++dd) {
      GradedSubspace ann = annihilator_basis(ring, {{d.d_alpha(a), dd}}, k);
      LPoly full = LPoly::one_minus(d.coroots[a]).pow(dd);
      LPoly part = LPoly::one_minus(d.coroots[a]).pow(dd - 1);
      for (const Polynomial& b : ann.basis) {
        std::vector<Cyc> c = coordinates(b, k);
        for (size_t w = 0; w < nw; ++w) {
          RelationFamily f{a, dd, 'L', static_cast<int>(w), LVec(dim * nw, LPoly(d.n)), true};
          for (size_t i = 0; i < dim; ++i)
            if (!c[i].is_zero()) f.element[w * dim + i] = full * lconst(d.n, c[i]);
          out.push_back(std::move(f));
        }
        if (space != Space::flag) continue;
        for (size_t w = 0; w < nw; ++w) {
          size_t sw = static_cast<size_t>(d.weyl_mul(ra, static_cast<int>(w)));
          RelationFamily f{a, dd, 'W', static_cast<int>(w), LVec(dim * nw, LPoly(d.n)), true};
          for (size_t i = 0; i < dim; ++i) {
            if (c[i].is_zero()) continue;
            f.element[w * dim + i] += part * lconst(d.n, c[i]);
            f.element[sw * dim + i] -= part * lconst(d.n, c[i]);
          }
          out.push_back(std::move(f));
        }
      }
    }
  }
  return out;
}

FGModule graded_piece(Space space, const RootDatum& d, const ValuationProfile& v, int k,
                      const std::vector<int>* roots) {
  FGModule m = FGModule::free_module(lattice_ring(d), piece_rank(space, d, k));
  for (auto& f : relation_generators(space, d, v, k, roots)) {
    bool zero = std::all_of(f.element.begin(), f.element.end(), [](const LPoly& p) { return p.is_zero(); });
    if (!zero) m.add_relation(f.element);
  }
  return m;
}

GradedPresentation GradedPresentation::build(Space space, const RootDatum& d, const ValuationProfile& v, int kmax,
                                             const std::vector<int>* roots) {
  GradedPresentation p{space, d, v, resolve_roots(d, roots), {}};
  for (int k = 0; k <= kmax; ++k) p.pieces.emplace(k, graded_piece(space, d, v, k, roots));
  return p;
}

Mat poly_action_matrix(const RootDatum& d, const IMat& g, int k) {
  RingPtr ring = d.sym_ring();
  auto mons = monomials_of_degree(d.n, k);
  Mat m = zero_mat(mons.size(), mons.size());
  for (size_t j = 0; j < mons.size(); ++j) {
    auto c = coordinates(act_on_poly(d, g, Polynomial::monomial(ring, mons[j])), k);
    for (size_t i = 0; i < mons.size(); ++i) m[i][j] = c[i];
  }
  return m;
}

LaurentMatrix operator_matrix(Space space, const RootDatum& d, const DiffOperator& op, int k) {
  RingPtr ring = d.sym_ring();
  int e = op.degree();
  int kt = k - e;
  size_t src = sym_dim(d, k), tgt = sym_dim(d, kt);
  size_t nw = space == Space::flag ? d.weyl.size() : 1;
  LaurentMatrix m(lattice_ring(d), tgt * nw, src * nw);
  if (kt < 0) return m;
  auto mons = monomials_of_degree(d.n, k);
  for (size_t j = 0; j < src; ++j) {
    auto c = coordinates(apply(op, Polynomial::monomial(ring, mons[j])), kt);
    for (size_t i = 0; i < tgt; ++i) {
      if (c[i].is_zero()) continue;
      for (size_t w = 0; w < nw; ++w) m.at(w * tgt + i, w * src + j) = lconst(d.n, c[i]);
    }
  }
  return m;
}

HomologyPiece ordinary_homology(Space space, const RootDatum& d, const ValuationProfile& v, int q,
                                const std::vector<int>* roots) {
  if (d.n > 3) throw MathError("rank guard: lattice rank above 3");
  HomologyPiece h{q, FGModule::free_module(lattice_ring(d), 0), {}};
  if (q < 0 || q % 2) return h;
  int k = q / 2;
  FGModule src = graded_piece(space, d, v, k, roots);
  if (k == 0) {
    h.module = src;
    for (size_t i = 0; i < src.gens; ++i) {
      LVec e(src.gens, LPoly(d.n));
      e[i] = LPoly::constant(d.n, Cyc(1));
      h.generators.push_back(std::move(e));
    }
    return h;
  }
  FGModule lower = graded_piece(space, d, v, k - 1, roots);
  size_t r = lower.gens;
  FGModule tgt = FGModule::free_module(lattice_ring(d), r * d.n);
  LaurentMatrix phi(lattice_ring(d), r * d.n, src.gens);
  RingPtr ring = d.sym_ring();
  for (int i = 0; i < d.n; ++i) {
    for (size_t row = 0; row < lower.relations.rows; ++row) {
      LVec rel(r * d.n, LPoly(d.n));
      for (size_t c = 0; c < r; ++c) rel[i * r + c] = lower.relations.at(row, c);
      tgt.add_relation(rel);
    }
    LaurentMatrix di = operator_matrix(space, d, DiffOperator::partial(ring, i), k);
    for (size_t a = 0; a < r; ++a)
      for (size_t b = 0; b < src.gens; ++b) phi.at(i * r + a, b) = di.at(a, b);
  }
  KernelResult ker = module_map_kernel(src, tgt, phi);
  h.module = std::move(ker.module);
  h.generators = std::move(ker.generators);
  return h;
}

LVec left_action(Space space, const RootDatum& d, const AffineWeylElement& tau, int k, const LVec& x) {
  IMat g = tau.finite_matrix(d);
  Mat s = poly_action_matrix(d, g, k);
  size_t dim = s.size();
  size_t nw = space == Space::flag ? d.weyl.size() : 1;
  LVec out(dim * nw, LPoly(d.n));
  const IMat& A = d.auts.at(tau.aut);
  IMat Ai = imat_inverse(A);
  for (size_t u = 0; u < nw; ++u) {
    size_t nu = 0;
    if (space == Space::flag) {
      IMat conj = imat_mul(imat_mul(A, d.weyl[u]), Ai);
      nu = static_cast<size_t>(d.weyl_index(imat_mul(d.weyl[tau.w], conj)));
    }
    for (size_t j = 0; j < dim; ++j) {
      const LPoly& p = x.at(u * dim + j);
      if (p.is_zero()) continue;
      LPoly moved = p.act(g).shifted(tau.translation);
      for (size_t i = 0; i < dim; ++i)
        if (!s[i][j].is_zero()) out[nu * dim + i] += moved.scaled(s[i][j]);
    }
  }
  return out;
}

LVec springer_right_action(const RootDatum& d, const AffineWeylElement& w, int k, const LVec& x) {
  if (w.aut != 0) throw MathError("right action is by W~ only");
  size_t dim = sym_dim(d, k);
  size_t nw = d.weyl.size();
  LVec out(dim * nw, LPoly(d.n));
  for (size_t u = 0; u < nw; ++u) {
    IVec shift = imat_apply(d.weyl[u], w.translation);
    size_t nu = static_cast<size_t>(d.weyl_mul(static_cast<int>(u), w.w));
    for (size_t j = 0; j < dim; ++j) {
      const LPoly& p = x.at(u * dim + j);
      if (!p.is_zero()) out[nu * dim + j] += p.shifted(shift);
    }
  }
  return out;
}

namespace {

std::vector<LVec> relation_rows(const FGModule& m) {
  std::vector<LVec> rows;
  for (size_t i = 0; i < m.relations.rows; ++i) rows.push_back(m.relations.row(i));
  return rows;
}

AffineWeylElement finite_element(int w) { return AffineWeylElement{IVec(), w, 0}; }

std::string family_label(const RootDatum& d, const RelationFamily& f) {
  std::ostringstream os;
  os << f.kind << "(root " << f.root << ", d=" << f.d << ", w=" << f.w << ")";
  (void)d;
  return os.str();
}

}  // namespace

VerificationReport check_right_action_stable(const RootDatum& d, const ValuationProfile& v, int kmax) {
  VerificationReport rep{"right-action-stability", {}};
  std::vector<AffineWeylElement> acts;
  for (int s : d.simple) {
    AffineWeylElement e = finite_element(d.reflection_index(s));
    e.translation = IVec(d.n, 0);
    acts.push_back(e);
  }
  for (int i = 0; i < d.n; ++i) {
    IVec e(d.n, 0);
    e[i] = 1;
    acts.push_back(AffineWeylElement::translation_by(e));
  }
  for (int k = 0; k <= kmax; ++k) {
    FGModule piece = graded_piece(Space::flag, d, v, k);
    LaurentSubmodule rel(d.n, piece.gens, relation_rows(piece));
    size_t bad = 0, total = 0;
    std::string first;
    for (auto& f : relation_generators(Space::flag, d, v, k))
      for (auto& a : acts) {
        ++total;
        if (!rel.contains(springer_right_action(d, a, k, f.element))) {
          if (!bad++) first = family_label(d, f) + " * " + element_str(d, a);
        }
      }
    rep.add("right-stable-k" + std::to_string(k), "right W~-action preserves the flag relations", bad == 0,
            std::to_string(total) + " images" + (bad ? ", first failure " + first : ""));
  }
  return rep;
}

VerificationReport check_left_action_stable(Space space, const RootDatum& d, const ValuationProfile& v, int kmax) {
  VerificationReport rep{"left-action-stability", {}};
  auto gens = stabilizer_generators(d, v, std::nullopt);
  for (int k = 0; k <= kmax; ++k) {
    FGModule piece = graded_piece(space, d, v, k);
    LaurentSubmodule rel(d.n, piece.gens, relation_rows(piece));
    size_t bad = 0, total = 0;
    std::string first;
    for (auto& f : relation_generators(space, d, v, k))
      for (auto& t : gens) {
        ++total;
        if (!rel.contains(left_action(space, d, t, k, f.element))) {
          if (!bad++) first = element_str(d, t) + " . " + family_label(d, f);
        }
      }
    rep.add(std::string("left-stable-") + space_name(space) + "-k" + std::to_string(k),
            "stabilizer elements preserve the relation modules", bad == 0,
            std::to_string(total) + " images" + (bad ? ", first failure " + first : ""));
  }
  return rep;
}

}  // namespace sf
