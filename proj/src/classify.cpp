#include "coxan/classify.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace coxan {

namespace {

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("group order exceeds 64 bits");
  return r;
}

std::uint64_t factorial_u64(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul_u64(r, static_cast<std::uint64_t>(k));
  return r;
}

std::uint64_t pow2_u64(int n) {
  if (n >= 64) throw OverflowError("group order exceeds 64 bits");
  return std::uint64_t{1} << n;
}

ComponentType finite_type(char family, int rank, long m = 0) {
  ComponentType t;
  t.kind = ComponentType::Kind::Finite;
  t.family = family;
  t.rank = rank;
  t.dihedral_m = m;
  t.order = finite_type_order(family, rank, m);
  return t;
}

ComponentType affine_type(char family, int rank) {
  ComponentType t;
  t.kind = ComponentType::Kind::Affine;
  t.family = family;
  t.rank = rank;
  t.order = 0;
  return t;
}

ComponentType other_infinite() { return ComponentType{}; }

}  // namespace

std::uint64_t finite_type_order(char family, int rank, long dihedral_m) {
  switch (family) {
    case 'A': return factorial_u64(rank + 1);
    case 'B': return checked_mul_u64(pow2_u64(rank), factorial_u64(rank));
    case 'D': return checked_mul_u64(pow2_u64(rank - 1), factorial_u64(rank));
    case 'E':
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;  // E8
    case 'F': return 1152;
    case 'H': return rank == 3 ? 120 : 14400;
    case 'I': return 2 * static_cast<std::uint64_t>(dihedral_m);
  }
  assert(false && "unknown finite family");
  return 0;
}

std::string ComponentType::name() const {
  switch (kind) {
    case Kind::OtherInfinite:
      return "other-infinite";
    case Kind::Finite:
      if (family == 'I') return "I2(" + std::to_string(dihedral_m) + ")";
      return std::string(1, family) + std::to_string(rank);
    case Kind::Affine:
      return "~" + std::string(1, family) + std::to_string(rank);
  }
  return "?";
}

bool ComponentType::longest_element_central() const {
  if (kind != Kind::Finite) return false;
  switch (family) {
    case 'A': return rank == 1;
    case 'B': return true;
    case 'D': return rank % 2 == 0;
    case 'E': return rank == 7 || rank == 8;
    case 'F': return true;
    case 'H': return true;
    case 'I': return dihedral_m % 2 == 0;
  }
  return false;
}

std::vector<std::vector<int>> irreducible_components(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (w == u || comp[w] != -1) continue;
        if (g.label(u, w) != 2) {  // related unless joined by a label-2 edge
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Diagram view of a component: keep labels >= 3, drop label-2 edges, and turn
// non-adjacency into an explicit infinity bond (the classification tables are
// stated in the Dynkin-diagram convention, where absence means commuting).
struct Diagram {
  static constexpr int kInf = -1;
  int n = 0;
  std::vector<int> bond;  // n*n, 0 = commuting, m >= 3, or kInf

  int at(int u, int v) const { return bond[u * n + v]; }
  int degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && at(v, u) != 0) ++d;
    return d;
  }
};

Diagram to_diagram(const CoxeterGraph& g) {
  Diagram d;
  d.n = g.size();
  d.bond.assign(static_cast<std::size_t>(d.n) * d.n, 0);
  for (int u = 0; u < d.n; ++u)
    for (int v = 0; v < d.n; ++v) {
      if (u == v) continue;
      int m = g.label(u, v);
      d.bond[u * d.n + v] = m == 0 ? Diagram::kInf : (m == 2 ? 0 : m);
    }
  return d;
}

// Label sequence of a path component read from endpoint `start`.
std::vector<int> path_labels(const Diagram& d, int start) {
  std::vector<int> labels;
  int prev = -1, cur = start;
  for (;;) {
    int next = -1;
    for (int u = 0; u < d.n; ++u)
      if (u != cur && u != prev && d.at(cur, u) != 0) next = u;
    if (next == -1) break;
    labels.push_back(d.at(cur, next));
    prev = cur;
    cur = next;
  }
  return labels;
}

ComponentType match_path(const std::vector<int>& fwd) {
  std::vector<int> rev(fwd.rbegin(), fwd.rend());
  const std::vector<int>& L = std::min(fwd, rev);
  const int n = static_cast<int>(fwd.size()) + 1;  // vertex count

  if (n == 2) {
    // Fixed precedence for the rank-2 ambiguities: label 3 is A2, any label
    // m >= 4 reports I2(m) (covering B2 = I2(4) and G2 = I2(6)).
    return fwd[0] == 3 ? finite_type('A', 2) : finite_type('I', 2, fwd[0]);
  }
  auto all3_prefix = [&](int upto) {
    return std::all_of(L.begin(), L.begin() + upto, [](int m) { return m == 3; });
  };
  const int e = n - 1;
  if (all3_prefix(e)) return finite_type('A', n);
  if (e >= 2 && all3_prefix(e - 1) && L[e - 1] == 4) return finite_type('B', n);
  if (n == 4 && L == std::vector<int>{3, 4, 3}) return finite_type('F', 4);
  if (n == 3 && L == std::vector<int>{3, 5}) return finite_type('H', 3);
  if (n == 4 && L == std::vector<int>{3, 3, 5}) return finite_type('H', 4);
  if (n >= 3 && L.front() == 4 && L.back() == 4) {
    bool interior3 = true;
    for (int i = 1; i + 1 < e; ++i) interior3 = interior3 && L[i] == 3;
    if (interior3) return affine_type('C', n - 1);
  }
  if (n == 5 && L == std::vector<int>{3, 3, 4, 3}) return affine_type('F', 4);
  if (n == 3 && L == std::vector<int>{3, 6}) return affine_type('G', 2);
  return other_infinite();
}

// Legs of a tree with a single branch vertex: (length, labels outward).
struct Leg {
  std::vector<int> labels;
  int len() const { return static_cast<int>(labels.size()); }
};

ComponentType match_one_fork(const Diagram& d, int center) {
  std::vector<Leg> legs;
  for (int u = 0; u < d.n; ++u) {
    if (u == center || d.at(center, u) == 0) continue;
    Leg leg;
    int prev = center, cur = u;
    leg.labels.push_back(d.at(center, u));
    for (;;) {
      int next = -1;
      for (int w = 0; w < d.n; ++w)
        if (w != cur && w != prev && d.at(cur, w) != 0) next = w;
      if (next == -1) break;
      leg.labels.push_back(d.at(cur, next));
      prev = cur;
      cur = next;
    }
    legs.push_back(std::move(leg));
  }
  assert(legs.size() == 3);
  std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) {
    return std::make_pair(a.len(), a.labels) < std::make_pair(b.len(), b.labels);
  });
  const int a = legs[0].len(), b = legs[1].len(), c = legs[2].len();
  const int n = 1 + a + b + c;

  auto leg_all3 = [](const Leg& l) {
    return std::all_of(l.labels.begin(), l.labels.end(), [](int m) { return m == 3; });
  };
  bool all3 = leg_all3(legs[0]) && leg_all3(legs[1]) && leg_all3(legs[2]);

  if (all3) {
    if (a == 1 && b == 1) return finite_type('D', n);
    if (a == 1 && b == 2 && c == 2) return finite_type('E', 6);
    if (a == 1 && b == 2 && c == 3) return finite_type('E', 7);
    if (a == 1 && b == 2 && c == 4) return finite_type('E', 8);
    if (a == 2 && b == 2 && c == 2) return affine_type('E', 6);
    if (a == 1 && b == 3 && c == 3) return affine_type('E', 7);
    if (a == 1 && b == 2 && c == 5) return affine_type('E', 8);
    return other_infinite();
  }
  // B~: two 3-bond legs of length 1, the long leg all 3 except a terminal 4.
  if (a == 1 && b == 1 && legs[0].labels == std::vector<int>{3} &&
      legs[1].labels == std::vector<int>{3}) {
    const auto& ll = legs[2].labels;
    bool shape = ll.back() == 4 &&
                 std::all_of(ll.begin(), ll.end() - 1, [](int m) { return m == 3; });
    if (shape) return affine_type('B', n - 1);
  }
  return other_infinite();
}

ComponentType match_two_forks(const Diagram& d, int c1, int c2) {
  // D~: every bond 3, each branch vertex carries exactly two leaves, and the
  // two branch vertices are joined by a path of interior degree-2 vertices.
  for (int b : d.bond)
    if (b != 0 && b != 3) return other_infinite();
  for (int c : {c1, c2}) {
    int leaves = 0;
    for (int u = 0; u < d.n; ++u)
      if (u != c && d.at(c, u) != 0 && d.degree(u) == 1) ++leaves;
    if (leaves != 2) return other_infinite();
  }
  return affine_type('D', d.n - 1);
}

}  // namespace

ComponentType recognize_component(const CoxeterGraph& component) {
  const Diagram d = to_diagram(component);
  const int n = d.n;
  if (n == 0) throw std::invalid_argument("empty component");
  if (n == 1) return finite_type('A', 1);

  int inf_bonds = 0, edge_count = 0, maxdeg = 0;
  for (int u = 0; u < n; ++u) {
    maxdeg = std::max(maxdeg, d.degree(u));
    for (int v = u + 1; v < n; ++v) {
      if (d.at(u, v) == Diagram::kInf) ++inf_bonds;
      if (d.at(u, v) != 0) ++edge_count;
    }
  }
  if (inf_bonds > 0)
    return (n == 2) ? affine_type('A', 1) : other_infinite();

  if (edge_count >= n) {
    // Connected with a cycle: only the all-3 single cycle A~_{n-1} survives.
    if (edge_count == n && maxdeg == 2 &&
        std::all_of(d.bond.begin(), d.bond.end(),
                    [](int b) { return b == 0 || b == 3; }))
      return affine_type('A', n - 1);
    return other_infinite();
  }

  // Tree with n-1 bonds from here on.
  if (maxdeg >= 4) {
    if (n == 5 && maxdeg == 4 &&
        std::all_of(d.bond.begin(), d.bond.end(),
                    [](int b) { return b == 0 || b == 3; }))
      return affine_type('D', 4);  // the 4-leaf star
    return other_infinite();
  }
  std::vector<int> forks;
  for (int v = 0; v < n; ++v)
    if (d.degree(v) == 3) forks.push_back(v);
  if (forks.empty()) {
    int end = 0;
    for (int v = 0; v < n; ++v)
      if (d.degree(v) == 1) { end = v; break; }
    return match_path(path_labels(d, end));
  }
  if (forks.size() == 1) return match_one_fork(d, forks[0]);
  if (forks.size() == 2) return match_two_forks(d, forks[0], forks[1]);
  return other_infinite();
}

Classification classify(const CoxeterGraph& g) {
  Classification c;
  c.components = irreducible_components(g);
  c.finite = true;
  c.virtually_abelian = true;
  c.order = 1;
  for (const auto& comp : c.components) {
    ComponentType t = recognize_component(induced_subgraph(g, comp));
    if (!t.finite()) c.finite = false;
    if (t.kind == ComponentType::Kind::OtherInfinite) c.virtually_abelian = false;
    c.types.push_back(t);
  }
  if (c.finite)
    for (const auto& t : c.types) c.order = checked_mul_u64(c.order, t.order);
  else
    c.order = 0;
  // The Davis dichotomy: a Coxeter group is either virtually abelian or large.
  c.large = !c.virtually_abelian;
  return c;
}

bool is_finite(const CoxeterGraph& g, std::uint64_t* order) {
  Classification c = classify(g);
  if (order) *order = c.order;
  return c.finite;
}

bool is_virtually_abelian(const CoxeterGraph& g) { return classify(g).virtually_abelian; }

bool is_large(const CoxeterGraph& g) { return classify(g).large; }

CenterDescriptor center(const CoxeterGraph& g) {
  CenterDescriptor d;
  Classification c = classify(g);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (!c.types[i].longest_element_central()) continue;
    std::vector<std::string> names;
    for (int v : c.components[i]) names.push_back(g.name(v));
    d.contributing_components.push_back(std::move(names));
    d.order = checked_mul_u64(d.order, 2);
  }
  return d;
}

bool has_property_FA(const CoxeterGraph& g) { return is_complete(g); }

CoxeterGraph standard_type_graph(const ComponentType& t) {
  const int n = t.affine() ? t.rank + 1 : t.rank;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));

  // ~A1 is the one diagram with an infinity bond: two vertices, no edge.
  if (t.affine() && t.family == 'A' && t.rank == 1)
    return CoxeterGraph::create(std::move(names), {});

  // Dynkin bonds (i, j, m) over 0-based chain indices.
  std::vector<std::tuple<int, int, int>> bonds;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) bonds.emplace_back(i, i + 1, 3);
  };
  if (t.finite()) {
    switch (t.family) {
      case 'A': chain(n); break;
      case 'B': chain(n - 1); bonds.emplace_back(n - 2, n - 1, 4); break;
      case 'D': chain(n - 1); bonds.emplace_back(n - 3, n - 1, 3); break;
      case 'E': chain(n - 1); bonds.emplace_back(2, n - 1, 3); break;
      case 'F': bonds = {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}; break;
      case 'H':
        bonds.emplace_back(0, 1, 5);
        for (int i = 1; i + 1 < n; ++i) bonds.emplace_back(i, i + 1, 3);
        break;
      case 'I': bonds.emplace_back(0, 1, static_cast<int>(t.dihedral_m)); break;
    }
  } else if (t.affine()) {
    switch (t.family) {
      case 'A':
        chain(n);
        bonds.emplace_back(n - 1, 0, 3);
        break;
      case 'B':
        // Two leaves on vertex 2, then a 3-chain ending with a 4-bond.
        bonds.emplace_back(0, 2, 3);
        bonds.emplace_back(1, 2, 3);
        for (int i = 2; i + 2 < n; ++i) bonds.emplace_back(i, i + 1, 3);
        bonds.emplace_back(n - 2, n - 1, 4);
        break;
      case 'C':
        chain(n);
        std::get<2>(bonds.front()) = 4;
        std::get<2>(bonds.back()) = 4;
        break;
      case 'D':
        if (n == 5) {
          bonds = {{0, 2, 3}, {1, 2, 3}, {3, 2, 3}, {4, 2, 3}};
        } else {
          chain(n - 2);
          bonds.emplace_back(1, n - 2, 3);      // leaf at the first fork
          bonds.emplace_back(n - 4, n - 1, 3);  // leaf at the second fork
        }
        break;
      case 'E':
        if (t.rank == 6) bonds = {{0, 1, 3}, {1, 2, 3}, {3, 4, 3}, {4, 2, 3}, {5, 6, 3}, {6, 2, 3}};
        if (t.rank == 7)
          bonds = {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {3, 7, 3}};
        if (t.rank == 8)
          bonds = {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {6, 7, 3}, {5, 8, 3}};
        break;
      case 'F': bonds = {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}}; break;
      case 'G': bonds = {{0, 1, 6}, {1, 2, 3}}; break;
    }
  } else {
    throw std::invalid_argument("no standard graph for other-infinite");
  }

  std::vector<std::tuple<std::string, std::string, int>> edges;
  std::vector<int> bonded(static_cast<std::size_t>(n) * n, 0);
  for (auto [i, j, m] : bonds) {
    edges.emplace_back(names[i], names[j], m);
    bonded[i * n + j] = bonded[j * n + i] = 1;
  }
  // Complete with label-2 edges: commuting pairs are edges in this convention.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!bonded[i * n + j]) edges.emplace_back(names[i], names[j], 2);
  return CoxeterGraph::create(std::move(names), edges);
}

}  // namespace coxan
