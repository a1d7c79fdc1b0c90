#include "polecalc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "polecalc/functor_eval.hpp"

namespace polecalc {

using nlohmann::json;

LatticeFile lattice_file_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
  LatticeFile f;
  try {
    f.name = j.value("name", "");
    f.size = j.at("size").get<int>();
    f.leq_rows = j.at("leq").get<std::vector<std::string>>();
    if (j.contains("labels")) f.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad lattice file: ") + e.what());
  }
  return f;
}

std::string lattice_file_to_json_text(const LatticeFile& f) {
  json j;
  j["name"] = f.name;
  j["size"] = f.size;
  j["leq"] = f.leq_rows;
  if (!f.labels.empty()) j["labels"] = f.labels;
  return j.dump(2) + "\n";
}

LatticeFile parse_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return lattice_file_from_json_text(ss.str());
}

Poset poset_from_file(const LatticeFile& f) {
  if (f.size < 0) throw parse_error("negative size");
  if (int(f.leq_rows.size()) != f.size) throw parse_error("leq must have exactly size rows");
  Relation leq(f.size, f.size);
  for (int i = 0; i < f.size; ++i) {
    if (int(f.leq_rows[i].size()) != f.size)
      throw parse_error("leq row " + std::to_string(i) + " has the wrong length");
    for (int j = 0; j < f.size; ++j) {
      char c = f.leq_rows[i][j];
      if (c != '0' && c != '1') throw parse_error("leq entries must be '0' or '1'");
      if (c == '1') leq.set(i, j);
    }
  }
  if (!is_order(leq)) throw parse_error("leq does not describe an order relation");
  GroundSet g(f.size);
  if (!f.labels.empty()) {
    try {
      g = GroundSet(f.size, f.labels);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  }
  return Poset(std::move(g), std::move(leq));
}

std::string report_to_json_text(const DecompositionReport& rep) {
  json j;
  j["name"] = rep.name;
  j["size"] = rep.size;
  j["entries"] = json::array();
  for (const DecompEntry& e : rep.entries) {
    json je;
    je["signature"] = e.sig.level_sizes;
    je["n"] = e.n();
    je["aut_order"] = e.aut_order;
    je["orbit_reps"] = json::array();
    for (const JoinMorphism& f : e.reps) je["orbit_reps"].push_back(f.map);
    j["entries"].push_back(std::move(je));
  }
  j["dim_pole_part"] = rep.dim_pole_part;
  j["dim_check_direct"] = rep.dim_check_direct;
  j["consistent"] = rep.consistent;
  return j.dump(2) + "\n";
}

DecompositionReport report_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
  DecompositionReport rep;
  rep.name = j.at("name").get<std::string>();
  rep.size = j.at("size").get<int>();
  for (const json& je : j.at("entries")) {
    DecompEntry e;
    e.sig = PoleSignature(je.at("signature").get<std::vector<int>>());
    e.aut_order = je.at("aut_order").get<long long>();
    e.pole = make_lattice_ptr(pole_lattice_from_signature(e.sig));
    for (const json& jm : je.at("orbit_reps"))
      e.reps.push_back(JoinMorphism{nullptr, e.pole, jm.get<std::vector<int>>()});
    rep.entries.push_back(std::move(e));
  }
  rep.dim_pole_part = j.at("dim_pole_part").get<long long>();
  rep.dim_check_direct = j.at("dim_check_direct").get<long long>();
  rep.consistent = j.at("consistent").get<bool>();
  return rep;
}

bool report_equal(const DecompositionReport& a, const DecompositionReport& b) {
  if (a.name != b.name || a.size != b.size || a.dim_pole_part != b.dim_pole_part ||
      a.dim_check_direct != b.dim_check_direct || a.consistent != b.consistent ||
      a.entries.size() != b.entries.size())
    return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    const DecompEntry &x = a.entries[i], &y = b.entries[i];
    if (!(x.sig == y.sig) || x.aut_order != y.aut_order || x.reps.size() != y.reps.size()) return false;
    for (size_t k = 0; k < x.reps.size(); ++k)
      if (x.reps[k].map != y.reps[k].map) return false;
  }
  return true;
}

std::string checks_to_json_text(const std::string& suite, const std::vector<CheckResult>& checks) {
  json j;
  j["suite"] = suite;
  j["checks"] = json::array();
  for (const CheckResult& c : checks) {
    json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    j["checks"].push_back(std::move(jc));
  }
  j["all_pass"] = all_pass(checks);
  return j.dump(2) + "\n";
}

namespace {

std::string tau_to_string(const Poset& p, const Permutation& tau) {
  std::string s;
  for (int i = 0; i < tau.size(); ++i) {
    if (i) s += ' ';
    s += p.ground.label(i) + "->" + p.ground.label(tau(i));
  }
  return s;
}

}  // namespace

int cmd_check_pole(const std::string& path, std::ostream& out, std::ostream& err) {
  Poset p;
  try {
    p = poset_from_file(parse_lattice_file(path));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto dec = pole_decomposition(p);
  auto tau = is_pole_by_permutation(p);
  if (dec.has_value() != tau.has_value()) {
    err << "error: internal disagreement between the two recognitions\n";
    return 2;
  }
  if (!dec) {
    out << "not a pole poset\n";
    // report which side of the criterion fails first
    std::vector<int> maxima;
    for (int x = 0; x < p.size(); ++x) {
      bool is_max = true;
      for (int y = 0; y < p.size(); ++y)
        if (p.lt(x, y)) is_max = false;
      if (is_max) maxima.push_back(x);
    }
    if (maxima.size() > 2)
      out << "failed: " << maxima.size() << " maximal elements at the top level\n";
    else
      out << "failed: no permutation tau satisfies the containment criterion\n";
    return 1;
  }
  out << "pole poset\n";
  out << "blocks: " << PoleSignature(dec->level_sizes()).to_string() << "\n";
  out << "tau: " << tau_to_string(p, *tau) << "\n";
  return 0;
}

int cmd_decompose(const std::string& path, bool json_out, std::ostream& out, std::ostream& err) {
  LatticeFile f;
  Poset p;
  try {
    f = parse_lattice_file(path);
    p = poset_from_file(f);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto lat = lattice_from_poset(p);
  if (!lat) {
    err << "error: the poset is not a lattice\n";
    return 2;
  }
  DecompositionReport rep = decomposition_report(make_lattice_ptr(std::move(*lat)), f.name);
  if (json_out) {
    out << report_to_json_text(rep);
  } else {
    out << "lattice " << rep.name << " (size " << rep.size << ")\n";
    for (const DecompEntry& e : rep.entries)
      out << "  P=[" << e.sig.to_string() << "]  n=" << e.n() << "  |Aut|=" << e.aut_order << "\n";
    out << rep.block_summary() << "\n";
    out << "pole-image endomorphisms: " << rep.dim_check_direct
        << (rep.consistent ? " (consistent)" : " (MISMATCH)") << "\n";
  }
  return rep.consistent ? 0 : 1;
}

int cmd_rank(const std::string& path, int set_size, std::ostream& out, std::ostream& err) {
  Poset p;
  try {
    p = poset_from_file(parse_lattice_file(path));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto lat = lattice_from_poset(p);
  if (!lat) {
    err << "error: the poset is not a lattice\n";
    return 2;
  }
  LatticePtr q = make_lattice_ptr(std::move(*lat));
  if (!pole_signature(*q)) {
    out << "not a pole lattice; the rank table applies to pole lattices only\n";
    return 1;
  }
  out << "m\trank\t#covering-maps\n";
  for (int m = 0; m <= set_size; ++m) {
    long long r = rank_SQ(*q, m);
    long long z = (long long)z_basis(q, m).size();
    out << m << "\t" << r << "\t" << z << "\n";
    if (r != z) {
      err << "error: rank formula disagrees with the direct count\n";
      return 2;
    }
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& suite, int max_size, int jobs, bool json_out,
               std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> checks;
  if (suite == "corpus") {
    try {
      checks = corpus_suite(max_size, jobs);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  } else {
    Poset p;
    try {
      p = poset_from_file(parse_lattice_file(path));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    auto lat = lattice_from_poset(p);
    if (!lat) {
      err << "error: the poset is not a lattice\n";
      return 2;
    }
    try {
      checks = verify_suite(make_lattice_ptr(std::move(*lat)), suite);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (json_out) {
    out << checks_to_json_text(suite, checks);
  } else {
    for (const CheckResult& c : checks) {
      out << (c.pass ? "ok   " : "FAIL ") << c.name << "  [" << c.anchor << "]";
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
    }
    out << (all_pass(checks) ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_pass(checks) ? 0 : 1;
}

}  // namespace polecalc
