#pragma once

#include <sstream>

#include "json.hpp"

#include "abid/young.hpp"

namespace abid {

inline std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(word[i]);
  }
  return s;
}

inline std::string coeff_str(const IntVec& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

inline nlohmann::json json_vec(const IntVec& c) {
  return nlohmann::json(c);
}

inline nlohmann::json json_header(const RootSystem& rs) {
  nlohmann::json j;
  j["schema"] = "abid/1";
  j["family"] = std::string(1, family_char(rs.datum.family));
  j["rank"] = rs.n();
  j["type"] = type_name(rs.datum.family, rs.n());
  return j;
}

// ---- root system ----

inline std::string rootsys_text(const RootSystem& rs) {
  std::ostringstream out;
  out << "rootsys " << type_name(rs.datum.family, rs.n()) << "\n";
  out << "rank " << rs.n() << "\n";
  out << "roots " << rs.count() << "\n";
  for (int r = 0; r < rs.count(); ++r)
    out << coeff_str(rs.positive_roots[r].coeffs) << " "
        << (rs.is_long(r) ? "long" : "short") << "\n";
  out << "theta " << coeff_str(rs.theta.coeffs) << "\n";
  out << "marks " << coeff_str(rs.marks) << "\n";
  out << "comarks " << coeff_str(rs.comarks) << "\n";
  out << "dual_coxeter " << rs.h_dual << "\n";
  return out.str();
}

inline nlohmann::json rootsys_json(const RootSystem& rs) {
  nlohmann::json j = json_header(rs);
  nlohmann::json roots = nlohmann::json::array();
  for (int r = 0; r < rs.count(); ++r) {
    nlohmann::json one;
    one["coeffs"] = json_vec(rs.positive_roots[r].coeffs);
    one["length"] = rs.is_long(r) ? "long" : "short";
    roots.push_back(one);
  }
  j["positive_roots"] = roots;
  j["theta"] = json_vec(rs.theta.coeffs);
  j["marks"] = json_vec(rs.marks);
  j["comarks"] = json_vec(rs.comarks);
  j["dual_coxeter"] = rs.h_dual;
  j["cartan"] = nlohmann::json(rs.cartan());
  return j;
}

// ---- ideal listing ----

inline std::string ideals_text(const AbelianIdeals& ideals) {
  const RootSystem& rs = ideals.rs();
  std::ostringstream out;
  out << "ideals " << type_name(rs.datum.family, rs.n()) << "\n";
  out << "count " << ideals.size() << "\n";
  for (int i = 0; i < ideals.size(); ++i) {
    const IdealSet& s = ideals.ideal(i);
    out << i << " grade " << s.grade << " word " << word_str(s.word) << " weight "
        << coeff_str(s.weight_fw) << " antichain";
    if (s.antichain.empty()) out << " -";
    for (int r : s.antichain) out << " " << coeff_str(rs.positive_roots[r].coeffs);
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json ideal_json(const RootSystem& rs, const IdealSet& s) {
  nlohmann::json j;
  nlohmann::json phi = nlohmann::json::array();
  for (int r : s.phi.bits()) phi.push_back(json_vec(rs.positive_roots[r].coeffs));
  j["phi"] = phi;
  nlohmann::json ac = nlohmann::json::array();
  for (int r : s.antichain) ac.push_back(json_vec(rs.positive_roots[r].coeffs));
  j["antichain"] = ac;
  j["word"] = nlohmann::json(s.word);
  j["weight_fw"] = json_vec(s.weight_fw);
  j["eta"] = json_vec(s.eta);
  return j;
}

inline nlohmann::json ideals_json(const AbelianIdeals& ideals) {
  nlohmann::json j = json_header(ideals.rs());
  j["count"] = ideals.size();
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < ideals.size(); ++i)
    arr.push_back(ideal_json(ideals.rs(), ideals.ideal(i)));
  j["ideals"] = arr;
  return j;
}

// ---- Hasse diagram ----

inline std::string hasse_text(const LabeledHasse& h) {
  std::ostringstream out;
  out << "hasse " << type_name(h.family, h.rank) << "\n";
  out << "nodes " << h.node_count() << "\n";
  for (int v = 0; v < h.node_count(); ++v)
    out << v << " grade " << h.grade[v] << " word " << word_str(h.words[v]) << "\n";
  out << "edges " << h.edges.size() << "\n";
  for (const auto& e : h.edges) out << e.lo << " " << e.hi << " " << e.label << "\n";
  return out.str();
}

inline nlohmann::json hasse_json(const LabeledHasse& h) {
  nlohmann::json j;
  j["schema"] = "abid/1";
  j["type"] = type_name(h.family, h.rank);
  nlohmann::json nodes = nlohmann::json::array();
  for (int v = 0; v < h.node_count(); ++v) {
    nlohmann::json one;
    one["grade"] = h.grade[v];
    one["word"] = nlohmann::json(h.words[v]);
    nodes.push_back(one);
  }
  j["nodes"] = nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges) edges.push_back({e.lo, e.hi, e.label});
  j["edges"] = edges;
  j["pi_prime"] = nlohmann::json(h.pi_prime);
  return j;
}

inline std::string hasse_dot(const LabeledHasse& h) {
  std::ostringstream out;
  out << "graph \"" << type_name(h.family, h.rank) << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int v = 0; v < h.node_count(); ++v)
    out << "  n" << v << " [label=\"" << word_str(h.words[v]) << "\"];\n";
  for (const auto& e : h.edges)
    out << "  n" << e.lo << " -- n" << e.hi << " [label=\"" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---- symmetry groups ----

inline std::string aut_text(const RootSystem& rs, const AbelianIdeals& ideals,
                            const LabeledHasse& h) {
  std::ostringstream out;
  out << "aut " << type_name(rs.datum.family, rs.n()) << "\n";
  out << "ideals " << ideals.size() << "\n";
  out << "poset " << poset_automorphisms(h).size() << "\n";
  out << "graph " << graph_automorphisms(h).size() << "\n";
  out << "diagram " << aut_pi(rs).size() << "\n";
  out << "extended " << aut_pihat(rs).size() << "\n";
  out << "center " << center(rs).size() << "\n";
  return out.str();
}

inline nlohmann::json aut_json(const RootSystem& rs, const AbelianIdeals& ideals,
                               const LabeledHasse& h) {
  nlohmann::json j = json_header(rs);
  j["ideals"] = ideals.size();
  const auto pos = poset_automorphisms(h);
  const auto gra = graph_automorphisms(h);
  j["poset_order"] = pos.size();
  j["graph_order"] = gra.size();
  j["diagram_order"] = aut_pi(rs).size();
  j["extended_order"] = aut_pihat(rs).size();
  j["center_order"] = center(rs).size();
  nlohmann::json parr = nlohmann::json::array();
  for (const auto& p : pos) parr.push_back(nlohmann::json(p));
  j["poset_permutations"] = parr;
  nlohmann::json garr = nlohmann::json::array();
  for (const auto& p : gra) garr.push_back(nlohmann::json(p));
  j["graph_permutations"] = garr;
  return j;
}

// ---- shapes ----

inline std::string young_text(int n, const AbelianIdeals& ideals) {
  std::ostringstream out;
  out << "young " << n << "\n";
  const auto shapes = staircase_partitions(n);
  out << "count " << shapes.size() << "\n";
  for (const Partition& lam : shapes)
    out << partition_str(lam) << " sigma " << partition_str(sigma(lam, n)) << " tau "
        << partition_str(tau(lam, n)) << " ideal " << ideal_of_partition(ideals, lam)
        << "\n";
  return out.str();
}

inline nlohmann::json young_json(int n, const AbelianIdeals& ideals) {
  nlohmann::json j;
  j["schema"] = "abid/1";
  j["n"] = n;
  const auto shapes = staircase_partitions(n);
  j["count"] = shapes.size();
  nlohmann::json arr = nlohmann::json::array();
  for (const Partition& lam : shapes) {
    nlohmann::json one;
    one["shape"] = nlohmann::json(lam);
    one["sigma"] = nlohmann::json(sigma(lam, n));
    one["tau"] = nlohmann::json(tau(lam, n));
    one["ideal"] = ideal_of_partition(ideals, lam);
    arr.push_back(one);
  }
  j["shapes"] = arr;
  return j;
}

// ---- check reports ----

inline std::string report_text(const Report& rep) {
  std::ostringstream out;
  int npass = 0;
  for (const auto& r : rep.rows) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " expected=" << r.expected
        << " computed=" << r.computed << "\n";
    if (r.pass) ++npass;
  }
  out << "suite " << rep.suite << ": " << npass << "/" << rep.rows.size() << " ok\n";
  return out.str();
}

inline nlohmann::json report_json(const Report& rep) {
  nlohmann::json j;
  j["schema"] = "abid/1";
  j["suite"] = rep.suite;
  j["pass"] = rep.pass();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows) {
    nlohmann::json one;
    one["case"] = r.name;
    one["expected"] = r.expected;
    one["computed"] = r.computed;
    one["pass"] = r.pass;
    rows.push_back(one);
  }
  j["checks"] = rows;
  return j;
}

}  // namespace abid
