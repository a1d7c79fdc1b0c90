#include "polecalc/relalg.hpp"

#include <algorithm>
#include <bit>

namespace polecalc {

RelLinComb RelLinComb::of(const Relation& r, long long c) {
  RelLinComb u = zero(r.rows());
  u.add_term(r, c);
  return u;
}

void RelLinComb::add_term(const Relation& r, long long c) {
  if (c == 0) return;
  if (!r.square() || r.rows() != ground) throw std::invalid_argument("term off the ground set");
  auto it = terms.find(r);
  if (it == terms.end()) {
    terms.emplace(r, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

long long RelLinComb::coeff(const Relation& r) const {
  auto it = terms.find(r);
  return it == terms.end() ? 0 : it->second;
}

RelLinComb rel_add(const RelLinComb& u, const RelLinComb& v) {
  if (u.ground != v.ground) throw std::invalid_argument("ground set mismatch");
  RelLinComb r = u;
  for (const auto& [rel, c] : v.terms) r.add_term(rel, c);
  return r;
}

RelLinComb rel_scale(const RelLinComb& u, long long c) {
  RelLinComb r = RelLinComb::zero(u.ground);
  if (c == 0) return r;
  for (const auto& [rel, k] : u.terms) r.terms.emplace(rel, checked_mul(k, c));
  return r;
}

RelLinComb rel_product(const RelLinComb& u, const RelLinComb& v) {
  if (u.ground != v.ground) throw std::invalid_argument("ground set mismatch");
  RelLinComb r = RelLinComb::zero(u.ground);
  for (const auto& [a, ca] : u.terms)
    for (const auto& [b, cb] : v.terms) r.add_term(compose_rel(a, b), checked_mul(ca, cb));
  return r;
}

RelLinComb reduce_mod(const RelLinComb& u, long long m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  RelLinComb r = RelLinComb::zero(u.ground);
  for (const auto& [rel, c] : u.terms) {
    long long v = ((c % m) + m) % m;
    if (v != 0) r.terms.emplace(rel, v);
  }
  return r;
}

RelLinComb delta(const Poset& p) {
  int n = p.size();
  if (n > 12) throw resource_limit_error("delta guarded at |E| <= 12");
  Relation rbar_op = opposite_rel(complement_rel(p.leq));
  RelLinComb d = RelLinComb::zero(n);
  for (uint32_t a = 0; a < (uint32_t(1) << n); ++a) {
    Relation term = rbar_op;
    for (int e = 0; e < n; ++e)
      if ((a >> e) & 1) term.set(e, e);
    d.add_term(term, std::popcount(a) % 2 ? -1 : 1);
  }
  return d;
}

std::optional<Permutation> s_delta_classify(const Relation& s, const Relation& r) {
  if (!is_order(r)) throw std::invalid_argument("second argument must be an order");
  if (s.rows() != r.rows() || !s.square()) throw std::invalid_argument("shape mismatch");
  if (!(compose_rel(s, r) == s)) throw std::invalid_argument("classifier needs S = SR");
  int n = r.rows();
  // S = Delta_sigma R means row x of S equals row sigma^{-1}(x) of R; rows of
  // an order are pairwise distinct, so sigma is determined.
  std::vector<int> inv(n, -1);
  std::vector<char> used(n, 0);
  for (int x = 0; x < n; ++x) {
    int match = -1;
    for (int z = 0; z < n; ++z) {
      bool same = true;
      for (int w = 0; w < s.words_per_row() && same; ++w)
        if (s.row_word(x, w) != r.row_word(z, w)) same = false;
      if (same) {
        match = z;
        break;
      }
    }
    if (match < 0 || used[match]) return std::nullopt;
    used[match] = 1;
    inv[x] = match;
  }
  return Permutation(inv).inverse();
}

DeltaSquareReport delta_square_identity(const Poset& p) {
  auto tau = is_pole_by_permutation(p);
  if (!tau) throw std::invalid_argument("delta-square identity needs a pole poset");
  DeltaSquareReport rep;
  rep.tau = *tau;
  int fixed = 0;
  for (int x = 0; x < p.size(); ++x)
    if (rep.tau(x) == x) ++fixed;
  rep.sign = fixed % 2 ? -1 : 1;
  RelLinComb d = delta(p);
  RelLinComb idem = rel_scale(rel_product(RelLinComb::of(delta_of_permutation(rep.tau)), d), rep.sign);
  rep.square_law = rel_product(d, d) == idem;
  rep.idempotent = rel_product(idem, idem) == idem;
  return rep;
}

bool nonzero_condition(const Poset& p) {
  int n = p.size();
  if (n > 4) throw resource_limit_error("nonzero-condition search guarded at |E| <= 4");
  RelLinComb d = delta(p);
  if (n == 0) return true;  // the empty poset is pole; delta is the empty relation with coefficient 1

  // rows of S with S = SR are exactly the up-closed subsets
  std::vector<uint32_t> upsets;
  for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!((s >> x) & 1)) continue;
      for (int y = 0; y < n && closed; ++y)
        if (p.lt(x, y) && !((s >> y) & 1)) closed = false;
    }
    if (closed) upsets.push_back(s);
  }
  size_t total = 1;
  for (int i = 0; i < n; ++i) total *= upsets.size();
  std::vector<size_t> idx(n, 0);
  for (size_t c = 0; c < total; ++c) {
    Relation s(n, n);
    for (int x = 0; x < n; ++x)
      for (int e = 0; e < n; ++e)
        if ((upsets[idx[x]] >> e) & 1) s.set(x, e);
    RelLinComb sd = rel_product(RelLinComb::of(s), d);
    if (!sd.is_zero() && !rel_product(d, sd).is_zero()) return true;
    int k = 0;
    while (k < n && ++idx[k] == upsets.size()) idx[k++] = 0;
  }
  return false;
}

FundModuleElement FundModuleElement::of(const Permutation& s, long long c) {
  FundModuleElement x = zero(s.size());
  x.add_term(s, c);
  return x;
}

void FundModuleElement::add_term(const Permutation& s, long long c) {
  if (c == 0) return;
  if (s.size() != ground) throw std::invalid_argument("term off the ground set");
  auto it = terms.find(s);
  if (it == terms.end()) {
    terms.emplace(s, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

FundModuleElement fund_module_act(const Relation& q, const FundModuleElement& x, const Relation& r) {
  if (!is_order(r)) throw std::invalid_argument("action needs an order relation");
  int n = r.rows();
  if (q.rows() != n || !q.square() || x.ground != n) throw std::invalid_argument("shape mismatch");

  FundModuleElement out = FundModuleElement::zero(n);
  for (const auto& [sigma, c] : x.terms) {
    // conjugate order Delta_sigma R Delta_sigma^-1
    Relation ds = delta_of_permutation(sigma);
    Relation conj = compose_rel(compose_rel(ds, r), delta_of_permutation(sigma.inverse()));
    std::optional<Permutation> found;
    for (const Permutation& tau : all_permutations(n)) {
      // Delta_E inside Delta_{tau^-1} Q: (tau(e), e) in Q for every e
      bool ok = true;
      for (int e = 0; e < n && ok; ++e)
        if (!q.at(tau(e), e)) ok = false;
      if (!ok) continue;
      // Delta_{tau^-1} Q inside the conjugate order
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          if (q.at(tau(a), b) && !conj.at(a, b)) ok = false;
      if (!ok) continue;
      if (found) throw std::logic_error("internal: action witness is not unique");
      found = tau;
    }
    if (found) out.add_term(found->after(sigma), c);
  }
  return out;
}

bool is_simple_projective(const Poset& p, long long characteristic) {
  auto dec = pole_decomposition(p);
  if (!dec) return false;
  bool total = true;
  for (const PoleBlock& b : dec->blocks)
    if (b.is_twin()) total = false;
  return total || characteristic != 2;
}

}  // namespace polecalc
