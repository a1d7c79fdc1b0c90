#include "polecalc/lattices.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace polecalc {

struct MobiusCache {
  std::mutex mu;
  std::map<int, std::vector<long long>> rows;  // x -> full row mu(x, -)
};

LatticePtr make_lattice_ptr(Lattice t) { return std::make_shared<const Lattice>(std::move(t)); }

bool lattice_equal(const Lattice& a, const Lattice& b) {
  return a.n() == b.n() && a.poset.leq == b.poset.leq;
}

PoleSignature::PoleSignature(std::vector<int> levels) : level_sizes(std::move(levels)) {
  if (!valid(level_sizes)) throw std::invalid_argument("invalid pole lattice signature");
}

bool PoleSignature::valid(const std::vector<int>& levels) {
  if (levels.empty()) return false;
  if (levels.front() != 1 || levels.back() != 1) return false;
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] != 1 && levels[i] != 2) return false;
    if (i + 1 < levels.size() && levels[i] == 2 && levels[i + 1] == 2) return false;
  }
  return true;
}

int PoleSignature::total() const {
  int s = 0;
  for (int v : level_sizes) s += v;
  return s;
}

std::string PoleSignature::to_string() const {
  std::string s;
  for (size_t i = 0; i < level_sizes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(level_sizes[i]);
  }
  return s;
}

std::optional<Lattice> lattice_from_poset(const Poset& p) {
  int n = p.size();
  if (n == 0) return std::nullopt;
  Lattice t;
  t.poset = p;
  t.join_tab.assign(size_t(n) * n, -1);
  t.meet_tab.assign(size_t(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lub = -1, glb = -1;
      for (int z = 0; z < n; ++z) {
        if (p.le(x, z) && p.le(y, z) && (lub < 0 || p.le(z, lub))) lub = z;
        if (p.le(z, x) && p.le(z, y) && (glb < 0 || p.le(glb, z))) glb = z;
      }
      if (lub < 0 || glb < 0) return std::nullopt;
      for (int z = 0; z < n; ++z) {
        if (p.le(x, z) && p.le(y, z) && !p.le(lub, z)) return std::nullopt;
        if (p.le(z, x) && p.le(z, y) && !p.le(z, glb)) return std::nullopt;
      }
      t.join_tab[size_t(x) * n + y] = lub;
      t.meet_tab[size_t(x) * n + y] = glb;
    }
  t.bottom = t.top = 0;
  for (int z = 0; z < n; ++z) {
    if (p.le(z, t.bottom)) t.bottom = z;
    if (p.le(t.top, z)) t.top = z;
  }
  for (int z = 0; z < n; ++z)
    if (!p.le(t.bottom, z) || !p.le(z, t.top)) return std::nullopt;
  t.mobius_cache = std::make_shared<MobiusCache>();
  return t;
}

IrreducibleData irreducibles(const Lattice& t) {
  int n = t.n();
  IrreducibleData d;
  d.r_of.assign(n, -1);
  d.s_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (e == t.bottom) continue;
    // e is irreducible when the join of everything strictly below stays below
    int sup = t.bottom;
    for (int x = 0; x < n; ++x)
      if (t.lt(x, e)) sup = t.join_of(sup, x);
    if (t.lt(sup, e)) {
      d.irr.push_back(e);
      d.r_of[e] = sup;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (a == t.top) continue;
    int inf = t.top;
    for (int x = 0; x < n; ++x) {
      if (!t.lt(a, x)) continue;
      inf = t.meet_of(inf, x);
    }
    if (t.lt(a, inf)) {
      d.meet_irr.push_back(a);
      d.s_of[a] = inf;
    }
  }
  return d;
}

long long mobius(const Lattice& t, int x, int y) {
  if (!t.le(x, y)) throw std::domain_error("mobius requires x <= y");
  if (!t.mobius_cache) t.mobius_cache = std::make_shared<MobiusCache>();
  MobiusCache& cache = *t.mobius_cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.rows.find(x);
  if (it == cache.rows.end()) {
    int n = t.n();
    // process the filter of x along a linear extension (by down-set size)
    std::vector<int> down(n, 0), order;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (t.lt(b, a)) ++down[a];
    for (int a = 0; a < n; ++a)
      if (t.le(x, a)) order.push_back(a);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });
    std::vector<long long> row(n, 0);
    for (int z : order) {
      if (z == x) {
        row[z] = 1;
        continue;
      }
      long long s = 0;
      for (int w : order)
        if (t.le(w, z) && w != z) s = checked_add(s, row[w]);
      row[z] = -s;
    }
    it = cache.rows.emplace(x, std::move(row)).first;
  }
  return it->second[y];
}

bool is_distributive(const Lattice& t) {
  int n = t.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.meet_of(x, t.join_of(y, z)) != t.join_of(t.meet_of(x, y), t.meet_of(x, z))) return false;
  return true;
}

int DownsetLattice::index_of(uint32_t mask) const {
  auto it = index.find(mask);
  if (it == index.end()) throw std::invalid_argument("subset is not a down-set of the base poset");
  return it->second;
}

DownsetLattice downset_lattice(const Poset& p) {
  int m = p.size();
  if (m > 16) throw resource_limit_error("down-set lattice guarded at |P| <= 16");
  std::vector<uint32_t> downsets;
  for (uint64_t s = 0; s < (uint64_t(1) << m); ++s) {
    bool closed = true;
    for (int x = 0; x < m && closed; ++x) {
      if (!((s >> x) & 1)) continue;
      for (int y = 0; y < m && closed; ++y)
        if (p.lt(y, x) && !((s >> y) & 1)) closed = false;
    }
    if (closed) downsets.push_back(uint32_t(s));
    if (downsets.size() > 4096) throw resource_limit_error("down-set lattice would exceed 4096 elements");
  }
  std::sort(downsets.begin(), downsets.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  int n = int(downsets.size());
  Relation leq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((downsets[i] & ~downsets[j]) == 0) leq.set(i, j);
  auto lat = lattice_from_poset(Poset(GroundSet(n), std::move(leq)));
  if (!lat) throw std::logic_error("internal: down-sets failed to form a lattice");
  DownsetLattice d;
  d.lattice = std::move(*lat);
  d.base = p.ground;
  d.elem_mask = std::move(downsets);
  for (int i = 0; i < n; ++i) d.index[d.elem_mask[i]] = i;
  return d;
}

Lattice opposite_lattice(const Lattice& t) {
  Lattice o;
  o.poset = Poset(t.poset.ground, opposite_rel(t.poset.leq));
  o.join_tab = t.meet_tab;
  o.meet_tab = t.join_tab;
  o.bottom = t.top;
  o.top = t.bottom;
  o.mobius_cache = std::make_shared<MobiusCache>();
  return o;
}

std::optional<PoleSignature> pole_signature(const Lattice& t) {
  auto dec = pole_decomposition(t.poset);
  if (!dec) return std::nullopt;
  return PoleSignature(dec->level_sizes());
}

PoleInfo pole_info(const Lattice& t) {
  if (!pole_signature(t)) throw std::invalid_argument("pole structure of a non-pole lattice");
  int n = t.n();
  PoleInfo info;
  info.twin.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && !t.poset.comparable(x, y)) info.twin[x] = y;
  return info;
}

Lattice pole_lattice_from_signature(const PoleSignature& sig) {
  std::vector<int> level;
  for (size_t i = 0; i < sig.level_sizes.size(); ++i)
    for (int c = 0; c < sig.level_sizes[i]; ++c) level.push_back(int(i));
  int n = int(level.size());
  Relation leq(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x == y || level[x] < level[y]) leq.set(x, y);
  auto lat = lattice_from_poset(Poset(GroundSet(n), std::move(leq)));
  if (!lat) throw std::logic_error("internal: signature did not produce a lattice");
  return std::move(*lat);
}

std::vector<PoleSignature> pole_signatures_up_to(int max_size) {
  std::vector<PoleSignature> out;
  std::vector<int> cur;
  // depth-first over level vectors, lexicographic
  struct Rec {
    int max_size;
    std::vector<PoleSignature>* out;
    void go(std::vector<int>& cur, int total) {
      if (!cur.empty() && cur.back() == 1) out->push_back(PoleSignature(cur));
      for (int v = 1; v <= 2; ++v) {
        if (cur.empty() && v != 1) continue;
        if (!cur.empty() && cur.back() == 2 && v == 2) continue;
        if (total + v > max_size) continue;
        cur.push_back(v);
        go(cur, total + v);
        cur.pop_back();
      }
    }
  } rec{max_size, &out};
  rec.go(cur, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Lattice chain_lattice(int n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one element");
  Relation leq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq.set(i, j);
  return *lattice_from_poset(Poset(GroundSet(n), std::move(leq)));
}

Lattice m3_lattice() {
  // 0 < {1,2,3} < 4
  Relation leq(5, 5);
  for (int i = 0; i < 5; ++i) leq.set(i, i);
  for (int a = 1; a <= 3; ++a) {
    leq.set(0, a);
    leq.set(a, 4);
  }
  leq.set(0, 4);
  return *lattice_from_poset(Poset(GroundSet(5), std::move(leq)));
}

Lattice boolean_lattice(int k) {
  Relation none(k, k);
  for (int i = 0; i < k; ++i) none.set(i, i);
  return downset_lattice(Poset(GroundSet(k), std::move(none))).lattice;
}

std::vector<Lattice> lattices_up_to(int max_size) {
  std::vector<Lattice> out;
  for (int n = 1; n <= max_size; ++n)
    for (const Poset& p : enumerate_posets(n))
      if (auto lat = lattice_from_poset(p)) out.push_back(std::move(*lat));
  return out;
}

}  // namespace polecalc
