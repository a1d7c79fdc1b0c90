#include "polecalc/posets.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polecalc {

Poset::Poset(GroundSet g, Relation r) : ground(std::move(g)), leq(std::move(r)) {
  if (leq.rows() != ground.size || leq.cols() != ground.size)
    throw std::invalid_argument("order matrix shape does not match ground set");
  if (!is_order(leq)) throw std::invalid_argument("relation is not an order");
}

std::vector<int> PoleDecomposition::level_sizes() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.is_twin() ? 2 : 1);
  return out;
}

namespace {

// Backtracking over images, pruning with order compatibility against the
// elements already placed.
void aut_search(const Poset& p, std::vector<int>& img, std::vector<char>& used, int x,
                std::vector<Permutation>& out) {
  int n = p.size();
  if (x == n) {
    Permutation perm;
    perm.image = img;
    out.push_back(std::move(perm));
    return;
  }
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (int y = 0; y < x && ok; ++y) {
      if (p.le(x, y) != p.le(t, img[y])) ok = false;
      if (ok && p.le(y, x) != p.le(img[y], t)) ok = false;
    }
    if (p.le(x, x) != p.le(t, t)) ok = false;
    if (!ok) continue;
    img[x] = t;
    used[t] = 1;
    aut_search(p, img, used, x + 1, out);
    used[t] = 0;
  }
}

bool sdr_search(const std::vector<std::vector<int>>& cand, const std::vector<int>& order, size_t k,
                std::vector<char>& used) {
  if (k == order.size()) return true;
  int x = order[k];
  for (int t : cand[x]) {
    if (used[t]) continue;
    used[t] = 1;
    if (sdr_search(cand, order, k + 1, used)) return true;
    used[t] = 0;
  }
  return false;
}

}  // namespace

AutGroup automorphisms(const Poset& p) {
  std::vector<int> img(p.size(), -1);
  std::vector<char> used(p.size(), 0);
  AutGroup g;
  aut_search(p, img, used, 0, g.elements);
  return g;
}

std::optional<Permutation> is_pole_by_permutation(const Poset& p) {
  int n = p.size();
  if (n == 0) return Permutation::identity(0);

  // tau(x) must dominate every y with x not<= y; collect the candidates.
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x) {
    for (int t = 0; t < n; ++t) {
      bool ok = true;
      for (int y = 0; y < n && ok; ++y)
        if (!p.le(x, y) && !p.le(y, t)) ok = false;
      if (ok) cand[x].push_back(t);
    }
    if (cand[x].empty()) return std::nullopt;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return cand[a].size() < cand[b].size(); });
  std::vector<char> used(n, 0);
  if (!sdr_search(cand, order, 0, used)) return std::nullopt;

  // A witness exists, so the poset is pole and each element has at most one
  // incomparable partner; the canonical witness swaps exactly those.
  std::vector<int> tau(n);
  for (int x = 0; x < n; ++x) {
    int partner = -1;
    for (int y = 0; y < n; ++y) {
      if (y == x || p.comparable(x, y)) continue;
      if (partner >= 0) throw std::logic_error("internal: permutation criterion holds but twins are ambiguous");
      partner = y;
    }
    tau[x] = partner < 0 ? x : partner;
  }
  Permutation canon(tau);
  Relation d = delta_of_permutation(canon);
  if (!(compose_rel(d, p.leq) == compose_rel(p.leq, d)))
    throw std::logic_error("internal: canonical witness is not an automorphism");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!p.le(x, y) && !p.le(y, canon(x)))
        throw std::logic_error("internal: canonical witness fails the containment criterion");
  return canon;
}

std::optional<PoleDecomposition> pole_decomposition(const Poset& p) {
  int n = p.size();
  std::vector<char> alive(n, 1);
  int remaining = n;
  std::vector<PoleBlock> rev;
  while (remaining > 0) {
    std::vector<int> maxima;
    for (int x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      bool is_max = true;
      for (int y = 0; y < n && is_max; ++y)
        if (alive[y] && p.lt(x, y)) is_max = false;
      if (is_max) maxima.push_back(x);
    }
    if (maxima.size() == 1) {
      rev.push_back(PoleBlock{maxima[0], -1});
      alive[maxima[0]] = 0;
      remaining -= 1;
    } else if (maxima.size() == 2) {
      int w = maxima[0], z = maxima[1];
      for (int x = 0; x < n; ++x) {
        if (!alive[x] || x == w || x == z) continue;
        if (!p.lt(x, w) || !p.lt(x, z)) return std::nullopt;
      }
      rev.push_back(PoleBlock{w, z});
      alive[w] = alive[z] = 0;
      remaining -= 2;
    } else {
      return std::nullopt;
    }
  }
  PoleDecomposition d;
  d.blocks.assign(rev.rbegin(), rev.rend());
  return d;
}

std::vector<int> poset_heights(const Poset& p) {
  int n = p.size();
  std::vector<int> below(n, 0), order(n), h(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.lt(y, x)) ++below[x];
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  for (int x : order)
    for (int y = 0; y < n; ++y)
      if (p.lt(y, x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

uint64_t canonical_poset_key(const Poset& p) {
  int n = p.size();
  if (n > 8) throw resource_limit_error("canonical key guarded at n <= 8");
  if (n == 0) return 0;
  uint64_t best = ~uint64_t(0);
  for (const Permutation& s : all_permutations(n)) {
    uint64_t key = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.le(s(i), s(j))) key |= uint64_t(1) << (i * n + j);
    best = std::min(best, key);
  }
  return best;
}

Poset induced_subposet(const Poset& p, const std::vector<int>& elems) {
  int m = int(elems.size());
  Relation r(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.le(elems[i], elems[j])) r.set(i, j);
  GroundSet g(m);
  if (!p.ground.labels.empty()) {
    std::vector<std::string> lab(m);
    for (int i = 0; i < m; ++i) lab[i] = p.ground.labels[elems[i]];
    g = GroundSet(m, lab);
  }
  return Poset(std::move(g), std::move(r));
}

namespace {

// Naturally labeled posets: the index order is a linear extension, so the
// last element is maximal and removing it gives a unique parent. Each poset
// is therefore generated exactly once by attaching a new maximal element
// above a down-closed subset.
void grow_posets(const Relation& leq, int k, int n, std::vector<Relation>& out) {
  if (k == n) {
    out.push_back(leq);
    return;
  }
  for (uint32_t d = 0; d < (uint32_t(1) << k); ++d) {
    bool closed = true;
    for (int x = 0; x < k && closed; ++x) {
      if (!((d >> x) & 1)) continue;
      for (int y = 0; y < k && closed; ++y)
        if (leq.at(y, x) && !((d >> y) & 1)) closed = false;
    }
    if (!closed) continue;
    Relation next(k + 1, k + 1);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (leq.at(i, j)) next.set(i, j);
    next.set(k, k);
    for (int x = 0; x < k; ++x)
      if ((d >> x) & 1) next.set(x, k);
    grow_posets(next, k + 1, n, out);
  }
}

Poset poset_from_key(uint64_t key, int n) {
  Relation r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((key >> (i * n + j)) & 1) r.set(i, j);
  return Poset(GroundSet(n), std::move(r));
}

}  // namespace

std::vector<Poset> enumerate_posets(int n) {
  if (n > 6) throw resource_limit_error("poset enumeration guarded at n <= 6");
  if (n < 0) throw std::invalid_argument("negative size");
  if (n == 0) return {Poset(GroundSet(0), Relation(0, 0))};
  std::vector<Relation> natural;
  grow_posets(Relation(0, 0), 0, n, natural);
  std::set<uint64_t> keys;
  for (const Relation& r : natural) keys.insert(canonical_poset_key(Poset(GroundSet(n), r)));
  std::vector<Poset> out;
  out.reserve(keys.size());
  for (uint64_t key : keys) out.push_back(poset_from_key(key, n));
  return out;
}

}  // namespace polecalc
