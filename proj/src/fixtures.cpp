#include "coxan/fixtures.hpp"

namespace coxan {

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"intro1", "four isolated vertices: Z2 * Z2 * Z2 * Z2",
       "# four isolated vertices: W = Z2 * Z2 * Z2 * Z2\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"},

      {"intro2", "two isolated vertices plus a 3-edge: Z2 * Z2 * Sym(3)",
       "# two isolated vertices and one edge of label 3: W = Z2 * Z2 * Sym(3)\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v3 v4 3\n"},

      {"intro3", "a cone vertex over three isolated ones: Z2 x (Z2 * Z2 * Z2)",
       "# v1 commutes with everything else: W = Z2 x (Z2 * Z2 * Z2)\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v2 2\nedge v1 v3 2\nedge v1 v4 2\n"},

      {"sec21", "two isolated vertices plus a right-angled edge",
       "# two isolated vertices and an unlabeled (= 2) edge\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v3 v4\n"},

      {"gamma1", "complete square, path of 3-labels: Sym(5)",
       "# complete graph, labels 3 along the path v1-v2-v3-v4, 2 elsewhere: Sym(5)\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v2 3\nedge v2 v3 3\nedge v3 v4 3\n"
       "edge v1 v3 2\nedge v1 v4 2\nedge v2 v4 2\n"},

      {"gamma2", "complete square with one 4-label: Z2^4 x| Sym(4)",
       "# as gamma1 with the first path label 4: Z2^4 x| Sym(4), order 384\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v2 4\nedge v2 v3 3\nedge v3 v4 3\n"
       "edge v1 v3 2\nedge v1 v4 2\nedge v2 v4 2\n"},

      {"gamma3", "complete square, 3-labels around a 4-cycle: Z^3 x| Sym(4)",
       "# complete graph, labels 3 around the cycle v1-v2-v4-v3, 2 on the diagonals\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v2 3\nedge v2 v4 3\nedge v3 v4 3\nedge v1 v3 3\n"
       "edge v1 v4 2\nedge v2 v3 2\n"},

      {"i2_3", "one edge of label 3: Sym(3)",
       "# dihedral of order 6\nvertex v\nvertex w\nedge v w 3\n"},

      {"i2_4", "one edge of label 4: dihedral of order 8",
       "# dihedral of order 8\nvertex v\nvertex w\nedge v w 4\n"},

      {"i2_5", "one edge of label 5: dihedral of order 10",
       "# dihedral of order 10\nvertex v\nvertex w\nedge v w 5\n"},

      {"path55", "path with labels 5, 5: infinite, all labels >= 3",
       "# path a-b-c with labels 5 and 5; infinite and not affine\n"
       "vertex a\nvertex b\nvertex c\n"
       "edge a b 5\nedge b c 5\n"},

      {"square4", "4-cycle with labels 4: infinite even",
       "# 4-cycle with all labels 4, no diagonals\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v2 4\nedge v2 v3 4\nedge v3 v4 4\nedge v4 v1 4\n"},

      {"k3_rightangled", "complete triangle, all labels 2: Z2^3",
       "# right-angled complete triangle: Z2 x Z2 x Z2\n"
       "vertex a\nvertex b\nvertex c\n"
       "edge a b 2\nedge a c 2\nedge b c 2\n"},

      {"k3_322", "complete triangle with labels 3,2,2: Sym(3) x Z2",
       "# complete triangle, one label 3: Sym(3) x Z2, order 12\n"
       "vertex a\nvertex b\nvertex c\n"
       "edge a b 3\nedge a c 2\nedge b c 2\n"},

      {"sym3xsym3", "two 3-edges joined by 2-edges: Sym(3) x Sym(3)",
       "# complete square, two opposite labels 3, the rest 2: order 36\n"
       "vertex a\nvertex b\nvertex c\nvertex d\n"
       "edge a b 3\nedge c d 3\n"
       "edge a c 2\nedge a d 2\nedge b c 2\nedge b d 2\n"},

      {"evensquare_finite", "complete square, diagonals 4, sides 2: I2(4) x I2(4)",
       "# complete even graph: two commuting 4-dihedrals, order 64\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v3 4\nedge v2 v4 4\n"
       "edge v1 v2 2\nedge v2 v3 2\nedge v3 v4 2\nedge v4 v1 2\n"},

      {"evensquare_infinite", "complete square, sides 4, diagonals 2: infinite even",
       "# complete even graph: 4-cycle of 4-labels with commuting diagonals\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v2 4\nedge v2 v3 4\nedge v3 v4 4\nedge v4 v1 4\n"
       "edge v1 v3 2\nedge v2 v4 2\n"},

      {"even_complete_inconclusive",
       "complete even graph defeating both criteria: Z2 x (triangle of 4s)",
       "# complete, even, infinite; the only maximal clique is everything and its\n"
       "# center has order 2, so neither criterion applies\n"
       "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
       "edge v1 v2 2\nedge v1 v3 2\nedge v1 v4 2\n"
       "edge v2 v3 4\nedge v2 v4 4\nedge v3 v4 4\n"},

      {"a3", "complete triangle with labels 3,3,2: Sym(4)",
       "# Sym(4), order 24\n"
       "vertex a\nvertex b\nvertex c\n"
       "edge a b 3\nedge b c 3\nedge a c 2\n"},

      {"b3", "complete triangle with labels 4,3,2: order 48",
       "# hyperoctahedral group of rank 3, order 48\n"
       "vertex a\nvertex b\nvertex c\n"
       "edge a b 4\nedge b c 3\nedge a c 2\n"},

      {"h3", "complete triangle with labels 5,3,2: order 120",
       "# icosahedral reflection group, order 120\n"
       "vertex a\nvertex b\nvertex c\n"
       "edge a b 5\nedge b c 3\nedge a c 2\n"},
  };
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : all_fixtures())
    if (f.name == name) return f;
  throw ParseError("unknown fixture '" + name + "'");
}

CoxeterGraph fixture_graph(const std::string& name) {
  return parse_graph(fixture(name).cox_text);
}

}  // namespace coxan
