#include "polecalc/functor_eval.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "polecalc/exact_linalg.hpp"

namespace polecalc {

FreeElt FreeElt::of(const LatticeMap& phi, long long c) {
  FreeElt x = zero(phi.codomain, phi.domain_size);
  x.add_term(phi.values, c);
  return x;
}

void FreeElt::add_term(const std::vector<int>& values, long long c) {
  if (c == 0) return;
  if (int(values.size()) != domain_size) throw std::invalid_argument("map domain mismatch");
  auto it = terms.find(values);
  if (it == terms.end()) {
    terms.emplace(values, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

bool free_eq(const FreeElt& a, const FreeElt& b) {
  return a.domain_size == b.domain_size && lattice_equal(*a.codomain, *b.codomain) && a.terms == b.terms;
}

LatticeMap act_correspondence(const Relation& s, const LatticeMap& phi) {
  if (s.cols() != phi.domain_size) throw std::invalid_argument("correspondence shape mismatch");
  const Lattice& t = *phi.codomain;
  LatticeMap out{phi.codomain, s.rows(), std::vector<int>(s.rows(), t.bottom)};
  for (int y = 0; y < s.rows(); ++y)
    for (int x = 0; x < s.cols(); ++x)
      if (s.at(y, x)) out.values[y] = t.join_of(out.values[y], phi.values[x]);
  return out;
}

FreeElt act_correspondence(const Relation& s, const FreeElt& x) {
  FreeElt out = FreeElt::zero(x.codomain, s.rows());
  for (const auto& [values, c] : x.terms) {
    LatticeMap phi{x.codomain, x.domain_size, values};
    out.add_term(act_correspondence(s, phi).values, c);
  }
  return out;
}

namespace {

void require_opposite_of(const DownsetLattice& dl, const Lattice& cod) {
  if (!lattice_equal(cod, opposite_lattice(dl.lattice)))
    throw std::invalid_argument("codomain is not the opposite of the given down-set lattice");
}

}  // namespace

Relation rho_iso(const DownsetLattice& dl, const LatticeMap& phi) {
  require_opposite_of(dl, *phi.codomain);
  int m = dl.base.size;
  Relation s(phi.domain_size, m);
  for (int x = 0; x < phi.domain_size; ++x) {
    uint32_t mask = dl.elem_mask[phi.values[x]];
    for (int e = 0; e < m; ++e)
      if (!((mask >> e) & 1)) s.set(x, e);
  }
  return s;
}

LatticeMap rho_iso_inverse(const DownsetLattice& dl, const Relation& s) {
  int m = dl.base.size;
  if (s.cols() != m) throw std::invalid_argument("relation column count must match the base set");
  LatticeMap phi{make_lattice_ptr(opposite_lattice(dl.lattice)), s.rows(), std::vector<int>(s.rows())};
  for (int x = 0; x < s.rows(); ++x) {
    uint32_t mask = 0;
    for (int e = 0; e < m; ++e)
      if (!s.at(x, e)) mask |= uint32_t(1) << e;
    phi.values[x] = dl.index_of(mask);  // throws when S is not right invariant
  }
  return phi;
}

FreeElt gamma(const Poset& p) {
  int m = p.size();
  if (m > 12) throw resource_limit_error("gamma guarded at |E| <= 12");
  DownsetLattice dl = downset_lattice(p);
  LatticePtr top = make_lattice_ptr(opposite_lattice(dl.lattice));

  std::vector<uint32_t> down(m, 0);
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (p.le(f, e)) down[e] |= uint32_t(1) << f;

  FreeElt g = FreeElt::zero(top, m);
  std::vector<int> values(m);
  for (uint32_t a = 0; a < (uint32_t(1) << m); ++a) {
    for (int e = 0; e < m; ++e) {
      uint32_t mask = down[e];
      if ((a >> e) & 1) mask &= ~(uint32_t(1) << e);  // strict down-set
      values[e] = dl.index_of(mask);
    }
    g.add_term(values, std::popcount(a) % 2 ? -1 : 1);
  }
  return g;
}

RelLinComb rho_of(const DownsetLattice& dl, const FreeElt& x) {
  if (x.domain_size != dl.base.size) throw std::invalid_argument("termwise rho needs domain E");
  RelLinComb out = RelLinComb::zero(dl.base.size);
  for (const auto& [values, c] : x.terms) {
    LatticeMap phi{x.codomain, x.domain_size, values};
    out.add_term(rho_iso(dl, phi), c);
  }
  return out;
}

std::vector<LatticeMap> z_basis(LatticePtr q, int set_size) {
  double bound = 1;
  for (int i = 0; i < set_size; ++i) bound *= q->n();
  if (bound > 1e7) throw resource_limit_error("z-basis enumeration exceeds the guard");
  IrreducibleData ir = irreducibles(*q);

  std::vector<LatticeMap> out;
  std::vector<int> values(set_size, 0);
  while (true) {
    std::set<int> image(values.begin(), values.end());
    bool covers = true;
    for (int e : ir.irr)
      if (!image.count(e)) {
        covers = false;
        break;
      }
    if (covers) out.push_back(LatticeMap{q, set_size, values});
    int k = set_size - 1;
    while (k >= 0 && ++values[k] == q->n()) values[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

long long rank_SQ(const Lattice& q, int set_size) {
  IrreducibleData ir = irreducibles(q);
  if (!pole_signature(q)) throw std::invalid_argument("rank formula needs a pole lattice");
  int ne = int(ir.irr.size());
  long long total = 0, binom = 1;
  for (int i = 0; i <= ne; ++i) {
    long long pw = 1;
    for (int j = 0; j < set_size; ++j) pw = checked_mul(pw, q.n() - i);
    total = checked_add(total, checked_mul(i % 2 ? -binom : binom, pw));
    binom = checked_mul(binom, ne - i) / (i + 1);
  }
  return total;
}

FreeElt apply_linmorph(const LinMorph& u, const FreeElt& x) {
  if (!lattice_equal(*u.source, *x.codomain)) throw std::invalid_argument("post-composition shape mismatch");
  FreeElt out = FreeElt::zero(u.target, x.domain_size);
  std::vector<int> composed(x.domain_size);
  for (const auto& [f, cf] : u.terms)
    for (const auto& [values, cv] : x.terms) {
      for (int i = 0; i < x.domain_size; ++i) composed[i] = f[values[i]];
      out.add_term(composed, checked_mul(cf, cv));
    }
  return out;
}

SpanCheckReport pole_span_check(LatticePtr t, int set_size) {
  double bound = 1;
  for (int i = 0; i < set_size; ++i) bound *= t->n();
  if (bound > 2e5) throw resource_limit_error("span check exceeds the guard");
  int dim = int(bound + 0.5);

  // basis maps T^X in lexicographic order
  std::vector<std::vector<int>> basis;
  std::vector<int> values(set_size, 0);
  while (true) {
    basis.push_back(values);
    int k = set_size - 1;
    while (k >= 0 && ++values[k] == t->n()) values[k--] = 0;
    if (k < 0) break;
  }
  std::map<std::vector<int>, int> col;
  for (int i = 0; i < dim; ++i) col[basis[i]] = i;

  LinMorph e = e_T(t);
  IntMat a, b, joint;
  a.cols = b.cols = joint.cols = dim;
  for (const auto& phi : basis) {
    FreeElt img = apply_linmorph(e, FreeElt::of(LatticeMap{t, set_size, phi}));
    std::vector<long long> row(dim, 0);
    for (const auto& [m, c] : img.terms) row[col.at(m)] = c;
    a.append_row(row);
    joint.append_row(row);
  }
  for (const auto& phi : basis) {
    std::set<int> img(phi.begin(), phi.end());
    std::vector<int> elems(img.begin(), img.end());
    if (!pole_decomposition(induced_subposet(t->poset, elems))) continue;
    std::vector<long long> row(dim, 0);
    row[col.at(phi)] = 1;
    b.append_row(row);
    joint.append_row(row);
  }

  SpanCheckReport rep;
  rep.dim_e_span = rank_bareiss(a);
  rep.dim_pole_span = rank_bareiss(b);
  rep.dim_joint = rank_bareiss(joint);
  rep.equal = rep.dim_e_span == rep.dim_pole_span && rep.dim_pole_span == rep.dim_joint;
  return rep;
}

}  // namespace polecalc
