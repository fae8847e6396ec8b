#ifndef COXAN_GRAPH_HPP
#define COXAN_GRAPH_HPP

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coxan/errors.hpp"

namespace coxan {

// A finite simplicial graph with integer edge labels m >= 2. Absence of an
// edge encodes infinite order of the product of the two generators. Vertices
// are kept sorted by name, so every enumeration downstream is deterministic.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  // Validates and canonicalizes. Edges are (name, name, label) triples;
  // duplicates with identical labels are tolerated, conflicts are not.
  static CoxeterGraph create(std::vector<std::string> vertices,
                             const std::vector<std::tuple<std::string, std::string, int>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // throws ParseError if absent

  // Label of {u, v}, or 0 when the vertices are not adjacent.
  int label(int u, int v) const { return labels_[u * size() + v]; }
  bool adjacent(int u, int v) const { return label(u, v) != 0; }

  // Edges as ((u, v), m) with u < v, sorted.
  std::vector<std::pair<std::pair<int, int>, int>> edges() const;
  int edge_count() const;

  bool operator==(const CoxeterGraph& o) const {
    return names_ == o.names_ && labels_ == o.labels_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> labels_;  // size() x size(), symmetric, 0 = no edge
};

// A complete subgraph, stored as its sorted vertex index set.
struct Clique {
  std::vector<int> vertices;
  bool maximal = false;
};

// Parsers. `parse_graph` reads the line-oriented text format; `parse_json`
// the structured one. `parse_file` dispatches on the .cox / .json extension.
CoxeterGraph parse_graph(const std::string& text);
CoxeterGraph parse_json(const std::string& text);
CoxeterGraph parse_file(const std::string& path);

// Canonical text form; parse_graph(serialize_graph(g)) == g, and serializing
// again is byte-identical.
std::string serialize_graph(const CoxeterGraph& g);

// Compact single-line form for log and witness strings,
// e.g. "{a,b,c | a-b:3 b-c:2}".
std::string serialize_graph_one_line(const CoxeterGraph& g);

// Subgraph generated by S: vertex set S and all edges of g inside S.
CoxeterGraph induced_subgraph(const CoxeterGraph& g, const std::vector<int>& s);
CoxeterGraph induced_subgraph_by_names(const CoxeterGraph& g,
                                       const std::vector<std::string>& names);

// Every maximal clique exactly once, sorted canonically (pivoted
// Bron-Kerbosch, order normalized afterwards).
std::vector<Clique> maximal_cliques(const CoxeterGraph& g);

bool is_complete(const CoxeterGraph& g);
bool is_triangle_free(const CoxeterGraph& g);
bool is_even(const CoxeterGraph& g);  // edgeless graphs count as even
bool all_labels_at_least_3(const CoxeterGraph& g);  // vacuously true when edgeless

// Vertices all of whose incident labels are even; isolated vertices qualify.
std::vector<int> even_vertices(const CoxeterGraph& g);

// Lexicographically least pair of distinct non-adjacent even vertices.
std::optional<std::pair<int, int>> non_adjacent_even_pair(const CoxeterGraph& g);

}  // namespace coxan

#endif
