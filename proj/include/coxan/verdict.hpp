#ifndef COXAN_VERDICT_HPP
#define COXAN_VERDICT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxan/classify.hpp"
#include "coxan/graph.hpp"

namespace coxan {

// Structured result of evaluating the clique criterion (theorem A: an
// infinite group with a maximal clique whose special subgroup has trivial
// center makes Aut virtually surject onto the group itself) and the even-pair
// criterion (theorem B: two non-adjacent even vertices make Aut virtually
// surject onto Z2 * Z2), together with the corollary flags they imply.
struct VerdictReport {
  bool finite = false;
  std::uint64_t order = 0;  // defined when finite

  std::optional<std::vector<std::string>> theorem_A;         // witness clique
  std::optional<std::pair<std::string, std::string>> theorem_B;  // witness pair

  bool corollary_C_i = false;    // infinite and triangle-free
  bool corollary_C_ii = false;   // infinite and even
  bool corollary_C_iii = false;  // infinite, >= 1 edge, all labels >= 3

  bool target_self = false;      // Aut virtually surjects onto W itself
  bool target_z2_z2 = false;     // Aut virtually surjects onto Z2 * Z2

  bool not_property_T = false;
  bool virtually_indicable = false;
  bool large_aut = false;

  bool virtually_abelian = false;
  bool large = false;
  bool property_FA = false;

  // Infinite group on which neither criterion fires: the analysis is
  // inconclusive and says so rather than guessing.
  bool no_conclusion = false;

  // Stable JSON document with fixed key order; byte-identical across runs.
  std::string to_json() const;
  std::string to_text() const;
};

// Canonically-first maximal clique whose special subgroup has trivial center,
// provided the whole group is infinite (the criterion needs that).
std::optional<Clique> check_theorem_A(const CoxeterGraph& g);

// Lexicographically least non-adjacent even pair. A witness forces an
// infinite dihedral special subgroup, so the group is infinite a posteriori.
std::optional<std::pair<int, int>> check_theorem_B(const CoxeterGraph& g);

VerdictReport analyze(const CoxeterGraph& g);

}  // namespace coxan

#endif
