#include "polecalc/klin.hpp"

#include <algorithm>

#include "polecalc/decompose.hpp"

namespace polecalc {

LinMorph LinMorph::of(const JoinMorphism& f, long long c) {
  LinMorph u = zero(f.source, f.target);
  u.add_term(f.map, c);
  return u;
}

void LinMorph::add_term(const std::vector<int>& map, long long c) {
  if (c == 0) return;
  auto it = terms.find(map);
  if (it == terms.end()) {
    terms.emplace(map, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

long long LinMorph::coeff(const std::vector<int>& map) const {
  auto it = terms.find(map);
  return it == terms.end() ? 0 : it->second;
}

namespace {

void require_same_homset(const LinMorph& u, const LinMorph& v) {
  if (!lattice_equal(*u.source, *v.source) || !lattice_equal(*u.target, *v.target))
    throw std::invalid_argument("hom-set mismatch");
}

}  // namespace

LinMorph lin_add(const LinMorph& u, const LinMorph& v) {
  require_same_homset(u, v);
  LinMorph r = u;
  for (const auto& [m, c] : v.terms) r.add_term(m, c);
  return r;
}

LinMorph lin_sub(const LinMorph& u, const LinMorph& v) { return lin_add(u, lin_scale(v, -1)); }

LinMorph lin_scale(const LinMorph& u, long long c) {
  LinMorph r = LinMorph::zero(u.source, u.target);
  if (c == 0) return r;
  for (const auto& [m, k] : u.terms) r.terms.emplace(m, checked_mul(k, c));
  return r;
}

LinMorph lin_compose(const LinMorph& u, const LinMorph& v) {
  if (!lattice_equal(*v.target, *u.source)) throw std::invalid_argument("composition shape mismatch");
  LinMorph r = LinMorph::zero(v.source, u.target);
  std::vector<int> m(v.source->n());
  for (const auto& [f, cf] : u.terms)
    for (const auto& [g, cg] : v.terms) {
      for (size_t i = 0; i < g.size(); ++i) m[i] = f[g[i]];
      r.add_term(m, checked_mul(cf, cg));
    }
  return r;
}

bool lin_eq(const LinMorph& u, const LinMorph& v) {
  return lattice_equal(*u.source, *v.source) && lattice_equal(*u.target, *v.target) && u.terms == v.terms;
}

LinMorph reduce_mod(const LinMorph& u, long long m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  LinMorph r = LinMorph::zero(u.source, u.target);
  for (const auto& [f, c] : u.terms) {
    long long v = ((c % m) + m) % m;
    if (v != 0) r.terms.emplace(f, v);
  }
  return r;
}

int BFamily::sign() const {
  int ones = 0;
  for (char t : twin_part)
    if (!t) ++ones;
  return ones % 2 ? -1 : 1;
}

BFamily b_family(const JoinMorphism& pi) {
  const Lattice& t = *pi.source;
  const Lattice& p = *pi.target;
  if (!is_surjective(pi)) throw std::invalid_argument("b-family needs a surjective morphism");
  if (!pole_signature(p)) throw std::invalid_argument("b-family needs a pole lattice target");

  BFamily bf;
  bf.pi = pi;
  bf.b_all.assign(p.n(), t.bottom);
  for (int q = 0; q < p.n(); ++q) {
    int acc = -1;
    for (int x = 0; x < t.n(); ++x)
      if (pi.map[x] == q) acc = acc < 0 ? x : t.join_of(acc, x);
    bf.b_all[q] = acc;  // sup of the fiber, in the fiber since pi is a join-morphism
  }
  IrreducibleData ir = irreducibles(p);
  PoleInfo info = pole_info(p);
  bf.irr = ir.irr;
  for (int e : ir.irr) {
    bool tw = info.is_twin(e);
    bf.twin_part.push_back(tw ? 1 : 0);
    if (tw) {
      bf.b_minus.push_back(bf.b_all[e]);
      bf.b_plus.push_back(bf.b_all[p.join_of(e, info.twin[e])]);
    } else {
      bf.b_minus.push_back(bf.b_all[ir.r_of[e]]);
      bf.b_plus.push_back(bf.b_all[e]);
    }
  }
  // b is injective and meet-preserving into T
  for (int q = 0; q < p.n(); ++q)
    for (int r = 0; r < p.n(); ++r) {
      if (q != r && bf.b_all[q] == bf.b_all[r]) throw std::logic_error("internal: fiber suprema collide");
      if (bf.b_all[p.meet_of(q, r)] != t.meet_of(bf.b_all[q], bf.b_all[r]))
        throw std::logic_error("internal: fiber suprema are not meet-closed");
    }
  return bf;
}

JoinMorphism j_A(const BFamily& bf, const std::vector<int>& a) {
  const Lattice& t = *bf.pi.source;
  if (a.size() != bf.irr.size()) throw std::invalid_argument("one image per irreducible required");
  for (size_t i = 0; i < a.size(); ++i)
    if (!t.le(bf.b_minus[i], a[i]) || !t.le(a[i], bf.b_plus[i]))
      throw std::invalid_argument("family member outside its interval");
  return extend_from_irreducibles(bf.pi.target, a, bf.pi.source);
}

LinMorph j_pi(const JoinMorphism& pi) {
  BFamily bf = b_family(pi);
  const Lattice& t = *pi.source;
  const Lattice& p = *pi.target;
  int ne = int(bf.irr.size());

  std::vector<std::vector<int>> interval(ne);
  double families = 1;
  for (int i = 0; i < ne; ++i) {
    for (int x = 0; x < t.n(); ++x)
      if (t.le(bf.b_minus[i], x) && t.le(x, bf.b_plus[i])) interval[i].push_back(x);
    families *= double(interval[i].size());
  }
  if (families > 1e7) throw resource_limit_error("family enumeration exceeds the guard");

  // irr positions below each p, for fast extension
  std::vector<std::vector<int>> below(p.n());
  for (int q = 0; q < p.n(); ++q)
    for (int i = 0; i < ne; ++i)
      if (p.le(bf.irr[i], q)) below[q].push_back(i);

  LinMorph out = LinMorph::zero(pi.target, pi.source);
  std::vector<int> idx(ne, 0), a(ne), map(p.n());
  int sign = bf.sign();
  while (true) {
    long long coeff = sign;
    for (int i = 0; i < ne; ++i) {
      a[i] = interval[i][idx[i]];
      coeff = checked_mul(coeff, mobius(t, bf.b_minus[i], a[i]));
    }
    if (coeff != 0) {
      for (int q = 0; q < p.n(); ++q) {
        int acc = t.bottom;
        for (int i : below[q]) acc = t.join_of(acc, a[i]);
        map[q] = acc;
      }
      out.add_term(map, coeff);
    }
    int k = 0;
    while (k < ne && ++idx[k] == int(interval[k].size())) idx[k++] = 0;
    if (k == ne) break;
  }
  return out;
}

JoinMorphism rho_Y(LatticePtr p, unsigned y_mask) {
  IrreducibleData ir = irreducibles(*p);
  PoleInfo info = pole_info(*p);
  std::vector<int> phi(ir.irr.size());
  for (size_t i = 0; i < ir.irr.size(); ++i) {
    int e = ir.irr[i];
    if ((y_mask >> i) & 1)
      phi[i] = e;
    else if (info.is_twin(e))
      phi[i] = p->join_of(e, info.twin[e]);  // s(e)
    else
      phi[i] = ir.r_of[e];
  }
  return extend_from_irreducibles(p, phi, p);
}

LinMorph f_general(const JoinMorphism& chi, const Permutation& tau, const JoinMorphism& theta) {
  if (!lattice_equal(*chi.target, *theta.target) || !lattice_equal(*chi.source, *theta.source))
    throw std::invalid_argument("mismatched pole targets");
  if (!is_surjective(chi) || !is_surjective(theta)) throw std::invalid_argument("surjections required");
  if (tau.size() != chi.target->n()) throw std::invalid_argument("automorphism size mismatch");
  JoinMorphism tau_m = make_join_morphism(chi.target, chi.target, tau.image);
  JoinMorphism tt = compose(tau_m, theta);
  return lin_compose(j_pi(chi), LinMorph::of(tt));
}

LinMorph f_idem(const JoinMorphism& pi) { return lin_compose(j_pi(pi), LinMorph::of(pi)); }

LinMorph e_T(LatticePtr t) {
  LinMorph acc = LinMorph::zero(t, t);
  for (const DecompEntry& entry : pole_inventory(t))
    for (const JoinMorphism& rep : entry.reps) acc = lin_add(acc, f_idem(rep));
  return acc;
}

LinMorph epsilon_Q(LatticePtr q) {
  if (!pole_signature(*q)) throw std::invalid_argument("epsilon needs a pole lattice");
  return f_idem(identity_morphism(q));
}

LinMorph beta(LatticePtr q, const PoleSignature& p) {
  if (!pole_signature(*q)) throw std::invalid_argument("beta needs a pole lattice");
  LinMorph acc = LinMorph::zero(q, q);
  LatticePtr pl = make_lattice_ptr(pole_lattice_from_signature(p));
  for (const JoinMorphism& rep : orbit_reps(q, pl)) acc = lin_add(acc, f_idem(rep));
  return acc;
}

}  // namespace polecalc
