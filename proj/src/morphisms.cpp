#include "polecalc/morphisms.hpp"

#include <algorithm>
#include <set>

namespace polecalc {

bool is_join_morphism(const Lattice& src, const Lattice& tgt, const std::vector<int>& map) {
  int n = src.n();
  if (int(map.size()) != n) return false;
  for (int v : map)
    if (v < 0 || v >= tgt.n()) return false;
  if (map[src.bottom] != tgt.bottom) return false;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (map[src.join_of(x, y)] != tgt.join_of(map[x], map[y])) return false;
  return true;
}

JoinMorphism make_join_morphism(LatticePtr src, LatticePtr tgt, std::vector<int> map) {
  if (!is_join_morphism(*src, *tgt, map)) throw std::invalid_argument("map does not commute with joins");
  return JoinMorphism{std::move(src), std::move(tgt), std::move(map)};
}

JoinMorphism identity_morphism(LatticePtr t) {
  std::vector<int> map(t->n());
  for (int i = 0; i < t->n(); ++i) map[i] = i;
  return JoinMorphism{t, t, std::move(map)};
}

JoinMorphism compose(const JoinMorphism& f, const JoinMorphism& g) {
  if (!lattice_equal(*f.source, *g.target)) throw std::invalid_argument("composition shape mismatch");
  std::vector<int> map(g.map.size());
  for (size_t i = 0; i < g.map.size(); ++i) map[i] = f.map[g.map[i]];
  return JoinMorphism{g.source, f.target, std::move(map)};
}

bool is_injective(const JoinMorphism& f) {
  std::set<int> seen(f.map.begin(), f.map.end());
  return int(seen.size()) == int(f.map.size());
}

bool is_surjective(const JoinMorphism& f) {
  std::set<int> seen(f.map.begin(), f.map.end());
  return int(seen.size()) == f.target->n();
}

std::vector<int> image_elements(const JoinMorphism& f) {
  std::set<int> seen(f.map.begin(), f.map.end());
  return std::vector<int>(seen.begin(), seen.end());
}

JoinMorphism extend_from_irreducibles(LatticePtr p, const std::vector<int>& phi_on_irr, LatticePtr t) {
  if (!is_distributive(*p)) throw std::invalid_argument("extension needs a distributive source");
  IrreducibleData ir = irreducibles(*p);
  if (phi_on_irr.size() != ir.irr.size()) throw std::invalid_argument("one image per irreducible required");
  for (size_t i = 0; i < ir.irr.size(); ++i)
    for (size_t j = 0; j < ir.irr.size(); ++j)
      if (p->le(ir.irr[i], ir.irr[j]) && !t->le(phi_on_irr[i], phi_on_irr[j]))
        throw std::invalid_argument("map on irreducibles is not order-preserving");
  std::vector<int> map(p->n(), t->bottom);
  for (int x = 0; x < p->n(); ++x)
    for (size_t i = 0; i < ir.irr.size(); ++i)
      if (p->le(ir.irr[i], x)) map[x] = t->join_of(map[x], phi_on_irr[i]);
  return JoinMorphism{p, t, std::move(map)};
}

JoinMorphism op_morphism(const JoinMorphism& f) {
  const Lattice& t = *f.source;
  const Lattice& p = *f.target;
  std::vector<int> map(p.n());
  for (int q = 0; q < p.n(); ++q) {
    int acc = t.bottom;
    for (int x = 0; x < t.n(); ++x)
      if (p.le(f.map[x], q)) acc = t.join_of(acc, x);
    map[q] = acc;
  }
  return JoinMorphism{make_lattice_ptr(opposite_lattice(p)), make_lattice_ptr(opposite_lattice(t)),
                      std::move(map)};
}

namespace {

void hom_search(const Lattice& p, const Lattice& t, const IrreducibleData& ir, std::vector<int>& val,
                size_t k, std::vector<std::vector<int>>& out) {
  if (k == ir.irr.size()) {
    out.push_back(val);
    return;
  }
  for (int v = 0; v < t.n(); ++v) {
    bool ok = true;
    for (size_t j = 0; j < k && ok; ++j) {
      if (p.le(ir.irr[j], ir.irr[k]) && !t.le(val[j], v)) ok = false;
      if (ok && p.le(ir.irr[k], ir.irr[j]) && !t.le(v, val[j])) ok = false;
    }
    if (!ok) continue;
    val[k] = v;
    hom_search(p, t, ir, val, k + 1, out);
  }
}

}  // namespace

std::vector<JoinMorphism> enumerate_hom(LatticePtr p, LatticePtr t) {
  IrreducibleData ir = irreducibles(*p);
  double bound = 1;
  for (size_t i = 0; i < ir.irr.size(); ++i) bound *= t->n();
  if (bound > 1e8) throw resource_limit_error("morphism enumeration exceeds the candidate bound");

  std::vector<int> val(ir.irr.size());
  std::vector<std::vector<int>> assigns;
  hom_search(*p, *t, ir, val, 0, assigns);

  std::vector<JoinMorphism> out;
  out.reserve(assigns.size());
  for (const auto& a : assigns) {
    // extend by joins from the irreducibles, then validate: the source may be
    // non-distributive, in which case some extensions break the join law
    std::vector<int> map(p->n(), t->bottom);
    for (int x = 0; x < p->n(); ++x)
      for (size_t i = 0; i < ir.irr.size(); ++i)
        if (p->le(ir.irr[i], x)) map[x] = t->join_of(map[x], a[i]);
    if (!is_join_morphism(*p, *t, map)) continue;
    out.push_back(JoinMorphism{p, t, std::move(map)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<JoinMorphism> enumerate_inj(LatticePtr p, LatticePtr t) {
  std::vector<JoinMorphism> out;
  for (auto& f : enumerate_hom(p, t))
    if (is_injective(f)) out.push_back(std::move(f));
  return out;
}

std::vector<JoinMorphism> enumerate_sur(LatticePtr t, LatticePtr p) {
  std::vector<JoinMorphism> out;
  for (auto& f : enumerate_hom(t, p))
    if (is_surjective(f)) out.push_back(std::move(f));
  return out;
}

JoinMorphism omega(const JoinMorphism& lambda) {
  const Lattice& p = *lambda.source;
  const Lattice& t = *lambda.target;
  if (!pole_signature(p)) throw std::invalid_argument("omega needs a pole lattice source");
  if (!is_injective(lambda)) throw std::invalid_argument("omega needs an injective morphism");

  PoleInfo info = pole_info(p);
  std::vector<int> h = poset_heights(p.poset);

  // twin pairs ordered by height; the chain part ordered by height
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> chain;
  for (int x = 0; x < p.n(); ++x) {
    if (info.is_twin(x)) {
      if (x < info.twin[x]) pairs.emplace_back(x, info.twin[x]);
    } else {
      chain.push_back(x);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](auto a, auto b) { return h[a.first] < h[b.first]; });
  std::sort(chain.begin(), chain.end(), [&](int a, int b) { return h[a] < h[b]; });

  int npairs = int(pairs.size());
  std::vector<int> out(p.n(), -1);
  for (auto [a, b] : pairs) {
    out[a] = lambda.map[a];
    out[b] = lambda.map[b];
  }

  // interval i = chain elements between join(pair i-1) and meet(pair i)
  size_t pos = 0;
  for (int i = 1; i <= npairs + 1; ++i) {
    int lo = (i == 1) ? p.bottom : p.join_of(pairs[i - 2].first, pairs[i - 2].second);
    int hi = (i == npairs + 1) ? p.top : p.meet_of(pairs[i - 1].first, pairs[i - 1].second);
    std::vector<int> seg;
    while (pos < chain.size() && h[chain[pos]] <= h[hi]) {
      if (h[chain[pos]] >= h[lo]) seg.push_back(chain[pos]);
      ++pos;
    }
    int cap = (i == npairs + 1) ? t.top
                                : t.meet_of(lambda.map[pairs[i - 1].first], lambda.map[pairs[i - 1].second]);
    if (lambda.map[hi] == cap) {
      for (int x : seg) out[x] = lambda.map[x];
    } else {
      for (size_t k = 0; k + 1 < seg.size(); ++k) out[seg[k]] = lambda.map[seg[k + 1]];
      out[seg.back()] = cap;
    }
  }

  JoinMorphism res{make_lattice_ptr(opposite_lattice(p)), make_lattice_ptr(opposite_lattice(t)), out};
  if (!is_join_morphism(*res.source, *res.target, res.map) || !is_injective(res))
    throw std::logic_error("internal: omega output is not an injective meet-morphism");
  return res;
}

std::vector<std::pair<JoinMorphism, JoinMorphism>> inj_sur_bijection(LatticePtr p, LatticePtr t) {
  std::vector<std::pair<JoinMorphism, JoinMorphism>> out;
  std::set<std::vector<int>> hit;
  for (const JoinMorphism& lam : enumerate_inj(p, t)) {
    JoinMorphism sur = op_morphism(omega(lam));
    hit.insert(sur.map);
    out.emplace_back(lam, std::move(sur));
  }
  std::vector<JoinMorphism> surs = enumerate_sur(t, p);
  if (hit.size() != out.size() || surs.size() != out.size())
    throw std::logic_error("internal: injection/surjection pairing is not bijective");
  for (const JoinMorphism& s : surs)
    if (!hit.count(s.map)) throw std::logic_error("internal: pairing misses a surjection");
  return out;
}

}  // namespace polecalc
