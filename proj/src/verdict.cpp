#include "coxan/verdict.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "json.hpp"

namespace coxan {

std::optional<Clique> check_theorem_A(const CoxeterGraph& g) {
  if (is_finite(g)) return std::nullopt;  // the criterion assumes an infinite group
  for (const Clique& c : maximal_cliques(g))
    if (center(induced_subgraph(g, c.vertices)).trivial()) return c;
  return std::nullopt;
}

std::optional<std::pair<int, int>> check_theorem_B(const CoxeterGraph& g) {
  return non_adjacent_even_pair(g);
}

namespace {

void assert_invariants(const VerdictReport& r, const CoxeterGraph& g) {
  if (r.theorem_A) {
    assert(!r.finite);
    std::vector<int> idx;
    for (const auto& n : *r.theorem_A) idx.push_back(g.index_of(n));
    assert(center(induced_subgraph(g, idx)).trivial());
    for (const Clique& c : maximal_cliques(g)) {
      std::vector<std::string> names;
      for (int v : c.vertices) names.push_back(g.name(v));
      if (names == *r.theorem_A) goto maximal_ok;
    }
    assert(false && "theorem A witness must be a maximal clique");
  maximal_ok:;
  }
  if (r.theorem_B) {
    int u = g.index_of(r.theorem_B->first), v = g.index_of(r.theorem_B->second);
    assert(!g.adjacent(u, v));
    auto evens = even_vertices(g);
    assert(std::count(evens.begin(), evens.end(), u) == 1);
    assert(std::count(evens.begin(), evens.end(), v) == 1);
  }
  assert(r.target_self == r.theorem_A.has_value());
  assert(r.target_z2_z2 == r.theorem_B.has_value());
  assert(r.not_property_T == (r.theorem_A || r.theorem_B));
  assert(r.virtually_indicable == (r.theorem_A || r.theorem_B));
  assert(r.large_aut == (r.theorem_A.has_value() && r.large));
  (void)g;
}

}  // namespace

VerdictReport analyze(const CoxeterGraph& g) {
  VerdictReport r;
  Classification c = classify(g);
  r.finite = c.finite;
  r.order = c.order;
  r.virtually_abelian = c.virtually_abelian;
  r.large = c.large;
  r.property_FA = has_property_FA(g);

  if (auto a = check_theorem_A(g)) {
    std::vector<std::string> names;
    for (int v : a->vertices) names.push_back(g.name(v));
    r.theorem_A = std::move(names);
  }
  if (auto b = check_theorem_B(g))
    r.theorem_B = std::make_pair(g.name(b->first), g.name(b->second));

  r.corollary_C_i = !r.finite && is_triangle_free(g);
  r.corollary_C_ii = !r.finite && is_even(g);
  r.corollary_C_iii = !r.finite && g.edge_count() > 0 && all_labels_at_least_3(g);

  r.target_self = r.theorem_A.has_value();
  r.target_z2_z2 = r.theorem_B.has_value();
  r.not_property_T = r.target_self || r.target_z2_z2;
  r.virtually_indicable = r.not_property_T;
  r.large_aut = r.target_self && r.large;
  r.no_conclusion = !r.finite && !r.not_property_T;

  assert_invariants(r, g);
  return r;
}

std::string VerdictReport::to_json() const {
  nlohmann::ordered_json j;
  if (finite) {
    j["group_status"] = {{"kind", "finite"}, {"order", order}};
  } else {
    j["group_status"] = {{"kind", "infinite"}};
  }
  {
    nlohmann::ordered_json a;
    a["applies"] = theorem_A.has_value();
    if (theorem_A) a["witness_clique"] = *theorem_A;
    j["theorem_A"] = std::move(a);
  }
  {
    nlohmann::ordered_json b;
    b["applies"] = theorem_B.has_value();
    if (theorem_B) b["witness_pair"] = {theorem_B->first, theorem_B->second};
    j["theorem_B"] = std::move(b);
  }
  j["corollaries"] = {{"C_i", corollary_C_i},
                      {"C_ii", corollary_C_ii},
                      {"C_iii", corollary_C_iii}};
  std::vector<std::string> targets;
  if (target_self) targets.push_back("W_Gamma");
  if (target_z2_z2) targets.push_back("Z2*Z2");
  j["surjection_targets"] = targets;
  j["aut_conclusions"] = {{"not_property_T", not_property_T},
                          {"virtually_indicable", virtually_indicable},
                          {"large_aut", large_aut}};
  j["group_properties"] = {{"virtually_abelian", virtually_abelian},
                           {"large", large},
                           {"FA", property_FA}};
  j["no_conclusion"] = no_conclusion;
  return j.dump(2) + "\n";
}

std::string VerdictReport::to_text() const {
  std::ostringstream os;
  if (finite)
    os << "group: finite, order " << order << "\n";
  else
    os << "group: infinite\n";
  os << "theorem A (maximal clique with trivial-center subgroup): ";
  if (theorem_A) {
    os << "applies, witness {";
    for (std::size_t i = 0; i < theorem_A->size(); ++i)
      os << (i ? "," : "") << (*theorem_A)[i];
    os << "}\n";
  } else {
    os << "does not apply\n";
  }
  os << "theorem B (non-adjacent even pair): ";
  if (theorem_B)
    os << "applies, witness (" << theorem_B->first << "," << theorem_B->second << ")\n";
  else
    os << "does not apply\n";
  os << "corollaries: C(i)=" << (corollary_C_i ? "yes" : "no")
     << " C(ii)=" << (corollary_C_ii ? "yes" : "no")
     << " C(iii)=" << (corollary_C_iii ? "yes" : "no") << "\n";
  os << "Aut virtually surjects onto:";
  if (!target_self && !target_z2_z2) os << " (nothing established)";
  if (target_self) os << " W_Gamma";
  if (target_z2_z2) os << " Z2*Z2";
  os << "\n";
  os << "Aut conclusions: not_property_T=" << (not_property_T ? "yes" : "no")
     << " virtually_indicable=" << (virtually_indicable ? "yes" : "no")
     << " large_aut=" << (large_aut ? "yes" : "no") << "\n";
  os << "group properties: virtually_abelian=" << (virtually_abelian ? "yes" : "no")
     << " large=" << (large ? "yes" : "no") << " FA=" << (property_FA ? "yes" : "no")
     << "\n";
  if (no_conclusion)
    os << "no conclusion: infinite group, neither criterion applies\n";
  return os.str();
}

}  // namespace coxan
