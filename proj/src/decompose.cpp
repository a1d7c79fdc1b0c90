#include "polecalc/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "polecalc/exact_linalg.hpp"
#include "polecalc/functor_eval.hpp"
#include "polecalc/klin.hpp"
#include "polecalc/relalg.hpp"

namespace polecalc {

std::string DecompositionReport::block_summary() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << " ⊕ ";
    os << "M_" << entries[i].n() << "(k";
    long long a = entries[i].aut_order;
    if (a > 1) {
      os << "C2";
      int exp = 0;
      for (long long v = a; v > 1; v >>= 1) ++exp;
      if (exp > 1) os << "^" << exp;
    }
    os << ")";
  }
  os << ", dim " << dim_pole_part;
  return os.str();
}

std::vector<PoleSignature> pol_T(const Lattice& t) {
  std::vector<PoleSignature> out;
  LatticePtr tp = make_lattice_ptr(t);
  for (const PoleSignature& sig : pole_signatures_up_to(t.n())) {
    LatticePtr p = make_lattice_ptr(pole_lattice_from_signature(sig));
    if (!enumerate_sur(tp, p).empty()) out.push_back(sig);
  }
  return out;
}

std::vector<JoinMorphism> orbit_reps(LatticePtr t, LatticePtr p) {
  std::vector<JoinMorphism> surs = enumerate_sur(t, p);
  AutGroup aut = automorphisms(p->poset);
  std::set<std::vector<int>> remaining;
  for (const JoinMorphism& f : surs) remaining.insert(f.map);

  std::vector<JoinMorphism> reps;
  while (!remaining.empty()) {
    std::vector<int> base = *remaining.begin();  // lexicographically smallest left
    std::set<std::vector<int>> orbit;
    for (const Permutation& s : aut.elements) {
      std::vector<int> g(base.size());
      for (size_t i = 0; i < base.size(); ++i) g[i] = s(base[i]);
      orbit.insert(std::move(g));
    }
    if (orbit.size() != size_t(aut.order()))
      throw std::logic_error("internal: automorphism action on surjections is not free");
    for (const auto& g : orbit) {
      if (!remaining.erase(g)) throw std::logic_error("internal: orbit leaves the surjection set");
    }
    reps.push_back(JoinMorphism{t, p, base});
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<DecompEntry> pole_inventory(LatticePtr t) {
  std::vector<DecompEntry> out;
  for (const PoleSignature& sig : pole_signatures_up_to(t->n())) {
    LatticePtr p = make_lattice_ptr(pole_lattice_from_signature(sig));
    std::vector<JoinMorphism> reps = orbit_reps(t, p);
    if (reps.empty()) continue;
    DecompEntry e;
    e.sig = sig;
    e.pole = p;
    e.aut_order = automorphisms(p->poset).order();
    e.reps = std::move(reps);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

bool has_pole_image(const Lattice& t, const JoinMorphism& f) {
  std::vector<int> img = image_elements(f);
  return pole_decomposition(induced_subposet(t.poset, img)).has_value();
}

}  // namespace

DecompositionReport decomposition_report(LatticePtr t, const std::string& name) {
  DecompositionReport rep;
  rep.name = name;
  rep.size = t->n();
  rep.entries = pole_inventory(t);
  for (const DecompEntry& e : rep.entries) {
    rep.dim_pole_part =
        checked_add(rep.dim_pole_part, checked_mul(checked_mul(e.n(), e.n()), e.aut_order));
    // the injection count must match the surjection count
    long long inj = (long long)enumerate_inj(e.pole, t).size();
    long long sur = checked_mul(e.n(), e.aut_order);
    if (inj != sur) throw std::logic_error("internal: injection and surjection counts differ");
  }
  for (const JoinMorphism& f : enumerate_hom(t, t))
    if (has_pole_image(*t, f)) ++rep.dim_check_direct;
  rep.consistent = rep.dim_pole_part == rep.dim_check_direct;
  return rep;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void push(std::vector<CheckResult>& out, std::string name, std::string anchor, bool pass,
          std::string detail = "") {
  out.push_back(CheckResult{std::move(name), std::move(anchor), pass, std::move(detail)});
}

// coefficient matrix of the given morphism combinations over their support
int span_rank(const std::vector<LinMorph>& elems) {
  std::set<std::vector<int>> support;
  for (const LinMorph& u : elems)
    for (const auto& [m, c] : u.terms) support.insert(m);
  std::map<std::vector<int>, int> col;
  int k = 0;
  for (const auto& m : support) col[m] = k++;
  IntMat mat;
  mat.cols = k;
  for (const LinMorph& u : elems) {
    std::vector<long long> row(k, 0);
    for (const auto& [m, c] : u.terms) row[col.at(m)] = c;
    mat.append_row(row);
  }
  if (mat.rows == 0) return 0;
  return rank_bareiss(std::move(mat));
}

void suite_idempotents(const std::vector<DecompEntry>& inv, std::vector<CheckResult>& out) {
  bool kerj = true, rho_sum = true, idem = true;
  std::string where;
  for (const DecompEntry& e : inv) {
    IrreducibleData ir = irreducibles(*e.pole);
    for (const JoinMorphism& pi : e.reps) {
      LinMorph j = j_pi(pi);
      LinMorph pil = LinMorph::of(pi);
      if (!lin_eq(lin_compose(j, lin_compose(pil, j)), j)) {
        kerj = false;
        where = "P=" + e.sig.to_string();
      }
      LinMorph lhs = lin_compose(pil, j);
      LinMorph rhs = LinMorph::zero(e.pole, e.pole);
      int ne = int(ir.irr.size());
      for (unsigned y = 0; y < (1u << ne); ++y) {
        int missing = ne - std::popcount(y);
        rhs = lin_add(rhs, LinMorph::of(rho_Y(e.pole, y), missing % 2 ? -1 : 1));
      }
      if (!lin_eq(lhs, rhs)) {
        rho_sum = false;
        where = "P=" + e.sig.to_string();
      }
      LinMorph f = f_idem(pi);
      if (!lin_eq(lin_compose(f, f), f)) {
        idem = false;
        where = "P=" + e.sig.to_string();
      }
    }
  }
  push(out, "kerj", "j^pi pi j^pi = j^pi", kerj, where);
  push(out, "pi-j", "pi j^pi = sum_Y (-1)^{|E-Y|} rho_Y", rho_sum, where);
  push(out, "f-idempotent", "(j^pi pi)^2 = j^pi pi", idem, where);
}

void suite_orthogonality(const std::vector<DecompEntry>& inv, std::vector<CheckResult>& out) {
  struct FElem {
    int entry;
    const JoinMorphism* chi;
    Permutation tau;
    const JoinMorphism* theta;
    LinMorph val;
  };
  std::vector<FElem> elems;
  for (int ei = 0; ei < int(inv.size()); ++ei) {
    AutGroup aut = automorphisms(inv[ei].pole->poset);
    for (const JoinMorphism& chi : inv[ei].reps)
      for (const Permutation& tau : aut.elements)
        for (const JoinMorphism& theta : inv[ei].reps)
          elems.push_back(FElem{ei, &chi, tau, &theta, f_general(chi, tau, theta)});
  }
  bool ok = true;
  std::string where;
  for (const FElem& x : elems) {
    for (const FElem& y : elems) {
      LinMorph prod = lin_compose(x.val, y.val);
      if (x.entry == y.entry && x.theta->map == y.chi->map) {
        Permutation ts = x.tau.after(y.tau);
        if (!lin_eq(prod, f_general(*x.chi, ts, *y.theta))) {
          ok = false;
          where = "P=" + inv[x.entry].sig.to_string();
        }
      } else if (!prod.is_zero()) {
        ok = false;
        where = "P=" + inv[x.entry].sig.to_string() + ",Q=" + inv[y.entry].sig.to_string();
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  push(out, "products", "f_{chi,tau,theta} f_{pi,sigma,kappa} = [theta=pi] f_{chi,tau sigma,kappa}", ok, where);
}

void suite_independence(LatticePtr t, const std::vector<DecompEntry>& inv, std::vector<CheckResult>& out) {
  std::vector<LinMorph> elems;
  long long expected = 0;
  for (const DecompEntry& e : inv) {
    AutGroup aut = automorphisms(e.pole->poset);
    expected = checked_add(expected, checked_mul(checked_mul(e.n(), e.n()), aut.order()));
    for (const JoinMorphism& chi : e.reps)
      for (const Permutation& tau : aut.elements)
        for (const JoinMorphism& theta : e.reps) elems.push_back(f_general(chi, tau, theta));
  }
  int rank = span_rank(elems);
  long long pole_image = 0;
  for (const JoinMorphism& f : enumerate_hom(t, t))
    if (has_pole_image(*t, f)) ++pole_image;
  bool ok = rank == int(elems.size()) && (long long)elems.size() == expected && expected == pole_image;
  push(out, "independence", "rank{f} = sum n^2 |Aut| = #pole-image endomorphisms", ok,
       "rank=" + std::to_string(rank) + " count=" + std::to_string(elems.size()) +
           " pole-image=" + std::to_string(pole_image));
}

void suite_centrality(LatticePtr t, const std::vector<DecompEntry>& inv, std::vector<CheckResult>& out) {
  LinMorph e = e_T(t);
  push(out, "e_T-idempotent", "e_T e_T = e_T", lin_eq(lin_compose(e, e), e));
  bool central = true;
  for (const JoinMorphism& g : enumerate_hom(t, t)) {
    LinMorph gl = LinMorph::of(g);
    if (!lin_eq(lin_compose(gl, e), lin_compose(e, gl))) {
      central = false;
      break;
    }
  }
  push(out, "e_T-central", "g e_T = e_T g for every join-endomorphism g", central);

  if (pole_signature(*t)) {
    // for a pole lattice the beta blocks resolve the identity
    LinMorph sum = LinMorph::zero(t, t);
    std::vector<LinMorph> betas;
    for (const DecompEntry& en : inv) {
      betas.push_back(beta(t, en.sig));
      sum = lin_add(sum, betas.back());
    }
    push(out, "beta-sum", "sum_P beta_{Q,P} = id", lin_eq(sum, LinMorph::of(identity_morphism(t))));
    bool orth = true;
    for (size_t i = 0; i < betas.size(); ++i)
      for (size_t j = 0; j < betas.size(); ++j) {
        LinMorph prod = lin_compose(betas[i], betas[j]);
        if (i == j ? !lin_eq(prod, betas[i]) : !prod.is_zero()) orth = false;
      }
    push(out, "beta-orthogonal", "beta_{Q,P} beta_{Q,P'} = [P=P'] beta_{Q,P}", orth);

    LinMorph eps = epsilon_Q(t);
    bool eps_central = true;
    std::vector<LinMorph> corner;
    std::vector<JoinMorphism> endos = enumerate_hom(t, t);
    for (const JoinMorphism& g : endos) {
      LinMorph gl = LinMorph::of(g);
      if (!lin_eq(lin_compose(gl, eps), lin_compose(eps, gl))) eps_central = false;
      corner.push_back(lin_compose(eps, lin_compose(gl, eps)));
    }
    long long aut = automorphisms(t->poset).order();
    int corner_rank = span_rank(corner);
    push(out, "epsilon-central", "g epsilon_Q = epsilon_Q g", eps_central);
    push(out, "epsilon-corner", "dim epsilon End epsilon = |Aut(Q)|", corner_rank == aut,
         "rank=" + std::to_string(corner_rank) + " |Aut|=" + std::to_string(aut));

    bool cross_zero = true;
    for (size_t i = 0; i < betas.size() && cross_zero; ++i)
      for (size_t j = 0; j < betas.size() && cross_zero; ++j) {
        if (i == j) continue;
        for (const JoinMorphism& g : endos)
          if (!lin_compose(betas[i], lin_compose(LinMorph::of(g), betas[j])).is_zero()) {
            cross_zero = false;
            break;
          }
      }
    push(out, "hom-blocks", "beta_P End beta_{P'} = 0 for P != P'", cross_zero);
  }
}

void suite_span(LatticePtr t, std::vector<CheckResult>& out) {
  bool ok = true;
  std::string detail;
  for (int m = 0; m <= 2; ++m) {
    SpanCheckReport rep = pole_span_check(t, m);
    detail += (m ? " " : "") + std::to_string(rep.dim_e_span) + "/" + std::to_string(rep.dim_pole_span);
    if (!rep.equal) ok = false;
  }
  push(out, "span", "span{e_T phi} = span{pole-image maps}", ok, detail);
}

}  // namespace

std::vector<CheckResult> verify_suite(LatticePtr t, const std::string& suite) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  if (!all && suite != "idempotents" && suite != "orthogonality" && suite != "independence" &&
      suite != "centrality" && suite != "span")
    throw std::invalid_argument("unknown suite: " + suite);
  std::vector<DecompEntry> inv = pole_inventory(t);
  if (all || suite == "idempotents") suite_idempotents(inv, out);
  if (all || suite == "orthogonality") suite_orthogonality(inv, out);
  if (all || suite == "independence") suite_independence(t, inv, out);
  if (all || suite == "centrality") suite_centrality(t, inv, out);
  if (all || suite == "span") suite_span(t, out);
  return out;
}

namespace {

struct PosetChecks {
  bool agree = true;       // structural vs permutation criterion
  bool canonical = true;   // witness is the twin-swap involution
  bool nonzero = true;     // delta search agrees (size <= 4)
  bool dsq = true;         // delta-square identity for poles (size <= 5)
  bool gamma_delta = true; // termwise complement image of gamma is delta (size <= 4)
  bool heights = true;     // block index = height
};

PosetChecks check_poset(const Poset& p) {
  PosetChecks c;
  auto dec = pole_decomposition(p);
  auto tau = is_pole_by_permutation(p);
  c.agree = dec.has_value() == tau.has_value();
  if (dec && tau) {
    Relation d = delta_of_permutation(*tau);
    c.canonical = tau->is_involution() &&
                  compose_rel(d, p.leq) == compose_rel(p.leq, d);
    std::vector<int> h = poset_heights(p);
    for (size_t i = 0; i < dec->blocks.size() && c.canonical; ++i) {
      const PoleBlock& b = dec->blocks[i];
      if (h[b.a] != int(i)) c.heights = false;
      if (b.is_twin()) {
        if (h[b.b] != int(i)) c.heights = false;
        if (tau->image[b.a] != b.b || tau->image[b.b] != b.a) c.canonical = false;
      } else if (tau->image[b.a] != b.a) {
        c.canonical = false;
      }
    }
  }
  if (p.size() <= 4) c.nonzero = nonzero_condition(p) == dec.has_value();
  if (dec && p.size() <= 5) {
    DeltaSquareReport rep = delta_square_identity(p);
    c.dsq = rep.square_law && rep.idempotent;
  }
  if (p.size() <= 4) {
    DownsetLattice dl = downset_lattice(p);
    c.gamma_delta = rho_of(dl, gamma(p)) == delta(p);
  }
  return c;
}

}  // namespace

std::vector<CheckResult> corpus_suite(int max_size, int jobs) {
  std::vector<CheckResult> out;
  static const long long known_counts[] = {1, 1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= std::min(max_size, 6); ++n) {
    std::vector<Poset> classes = enumerate_posets(n);
    bool count_ok = (long long)classes.size() == known_counts[n];
    push(out, "poset-count-" + std::to_string(n), "#iso classes matches the known count", count_ok,
         std::to_string(classes.size()));

    std::vector<PosetChecks> results(classes.size());
    if (jobs > 1) {
      std::vector<std::future<void>> futs;
      std::atomic<size_t> next{0};
      for (int w = 0; w < jobs; ++w)
        futs.push_back(std::async(std::launch::async, [&]() {
          for (size_t i = next.fetch_add(1); i < classes.size(); i = next.fetch_add(1))
            results[i] = check_poset(classes[i]);
        }));
      for (auto& f : futs) f.get();
    } else {
      for (size_t i = 0; i < classes.size(); ++i) results[i] = check_poset(classes[i]);
    }
    PosetChecks merged;
    for (const PosetChecks& c : results) {
      merged.agree &= c.agree;
      merged.canonical &= c.canonical;
      merged.nonzero &= c.nonzero;
      merged.dsq &= c.dsq;
      merged.gamma_delta &= c.gamma_delta;
      merged.heights &= c.heights;
    }
    std::string tag = std::to_string(n);
    push(out, "pole-agreement-" + tag, "structural peel = permutation criterion", merged.agree);
    push(out, "canonical-witness-" + tag, "witness is the twin-swap involution", merged.canonical);
    push(out, "heights-" + tag, "block index equals height", merged.heights);
    if (n <= 4)
      push(out, "nonzero-condition-" + tag, "delta v delta != 0 iff pole", merged.nonzero);
    if (n <= 5)
      push(out, "delta-square-" + tag, "delta^2 = (-1)^{|E1|} Delta_tau delta, idempotent", merged.dsq);
    if (n <= 4)
      push(out, "gamma-delta-" + tag, "termwise complement of gamma equals delta", merged.gamma_delta);
  }
  return out;
}

}  // namespace polecalc
