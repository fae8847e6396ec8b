#include "coxan/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace coxan {

CoxeterGraph CoxeterGraph::create(
    std::vector<std::string> vertices,
    const std::vector<std::tuple<std::string, std::string, int>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i] == vertices[i + 1])
      throw ParseError("duplicate vertex '" + vertices[i] + "'");
  for (const auto& v : vertices) {
    if (v.empty()) throw ParseError("empty vertex name");
    for (char c : v)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw ParseError("vertex name contains whitespace");
  }

  CoxeterGraph g;
  g.names_ = std::move(vertices);
  const int n = g.size();
  g.labels_.assign(static_cast<std::size_t>(n) * n, 0);

  for (const auto& [a, b, m] : edges) {
    int u = g.index_of(a);
    int v = g.index_of(b);
    if (u == v) throw ParseError("self-loop at vertex '" + a + "'");
    if (m < 2) throw ParseError("edge {" + a + "," + b + "} has label " +
                                std::to_string(m) + " < 2");
    int& cur = g.labels_[u * n + v];
    if (cur != 0 && cur != m)
      throw ParseError("duplicate edge {" + a + "," + b + "} with conflicting labels");
    cur = m;
    g.labels_[v * n + u] = m;
  }
  return g;
}

int CoxeterGraph::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw ParseError("unknown vertex '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

std::vector<std::pair<std::pair<int, int>, int>> CoxeterGraph::edges() const {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (int m = label(u, v); m != 0) out.push_back({{u, v}, m});
  return out;
}

int CoxeterGraph::edge_count() const { return static_cast<int>(edges().size()); }

CoxeterGraph parse_graph(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, int>> edges;
  std::vector<int> edge_line;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    try {
      if (kw == "vertex") {
        std::string name, extra;
        if (!(ls >> name)) throw ParseError("vertex declaration needs a name");
        if (ls >> extra) throw ParseError("trailing tokens after vertex name");
        if (std::find(vertices.begin(), vertices.end(), name) != vertices.end())
          throw ParseError("duplicate vertex '" + name + "'");
        vertices.push_back(name);
      } else if (kw == "edge") {
        std::string a, b;
        if (!(ls >> a >> b)) throw ParseError("edge declaration needs two vertices");
        int m = 2;
        std::string tok;
        if (ls >> tok) {
          std::size_t used = 0;
          try {
            m = std::stoi(tok, &used);
          } catch (const std::exception&) {
            throw ParseError("edge label '" + tok + "' is not an integer");
          }
          if (used != tok.size())
            throw ParseError("edge label '" + tok + "' is not an integer");
          std::string extra;
          if (ls >> extra) throw ParseError("trailing tokens after edge label");
        }
        if (m < 2)
          throw ParseError("edge {" + a + "," + b + "} has label " +
                           std::to_string(m) + " < 2");
        if (a == b) throw ParseError("self-loop at vertex '" + a + "'");
        edges.emplace_back(a, b, m);
        edge_line.push_back(lineno);
      } else {
        throw ParseError("unknown directive '" + kw + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  // Endpoint and duplicate checks need the whole declaration list; attribute
  // each failure to the edge's own line.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [a, b, m] = edges[i];
    for (const std::string& endpoint : {a, b})
      if (std::find(vertices.begin(), vertices.end(), endpoint) == vertices.end())
        throw ParseError("edge references undeclared vertex '" + endpoint + "'",
                         edge_line[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& [a2, b2, m2] = edges[j];
      bool same = (a == a2 && b == b2) || (a == b2 && b == a2);
      if (same && m != m2)
        throw ParseError("duplicate edge {" + a + "," + b + "} with conflicting labels",
                         edge_line[i]);
    }
  }
  return CoxeterGraph::create(std::move(vertices), edges);
}

CoxeterGraph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("JSON graph must be an object with a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v"))
        throw ParseError("each edge needs \"u\" and \"v\"");
      int m = 2;
      if (e.contains("m")) {
        if (!e["m"].is_number_integer()) throw ParseError("edge label must be an integer");
        m = e["m"].get<int>();
      }
      edges.emplace_back(e["u"].get<std::string>(), e["v"].get<std::string>(), m);
    }
  }
  return CoxeterGraph::create(std::move(vertices), edges);
}

CoxeterGraph parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return parse_json(ss.str());
  return parse_graph(ss.str());
}

std::string serialize_graph(const CoxeterGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.size(); ++v) os << "vertex " << g.name(v) << "\n";
  for (const auto& [uv, m] : g.edges())
    os << "edge " << g.name(uv.first) << " " << g.name(uv.second) << " " << m << "\n";
  return os.str();
}

std::string serialize_graph_one_line(const CoxeterGraph& g) {
  std::ostringstream os;
  os << "{";
  for (int v = 0; v < g.size(); ++v) {
    if (v) os << ",";
    os << g.name(v);
  }
  bool first = true;
  for (const auto& [uv, m] : g.edges()) {
    os << (first ? " | " : " ");
    os << g.name(uv.first) << "-" << g.name(uv.second) << ":" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

CoxeterGraph induced_subgraph(const CoxeterGraph& g, const std::vector<int>& s) {
  std::vector<std::string> vertices;
  for (int v : s) {
    if (v < 0 || v >= g.size()) throw ParseError("vertex index out of range");
    vertices.push_back(g.name(v));
  }
  std::vector<std::tuple<std::string, std::string, int>> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (int m = g.label(s[i], s[j]); m != 0)
        edges.emplace_back(g.name(s[i]), g.name(s[j]), m);
  return CoxeterGraph::create(std::move(vertices), edges);
}

CoxeterGraph induced_subgraph_by_names(const CoxeterGraph& g,
                                       const std::vector<std::string>& names) {
  std::vector<int> s;
  for (const auto& n : names) s.push_back(g.index_of(n));
  return induced_subgraph(g, s);
}

namespace {

// Pivoted Bron-Kerbosch over index sets represented as sorted vectors.
void bron_kerbosch(const CoxeterGraph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p) {
    int deg = 0;
    for (int v : p) deg += g.adjacent(u, v);
    if (deg > best) best = deg, pivot = u;
  }
  for (int u : x) {
    int deg = 0;
    for (int v : p) deg += g.adjacent(u, v);
    if (deg > best) best = deg, pivot = u;
  }
  std::vector<int> cands;
  for (int v : p)
    if (!g.adjacent(pivot, v)) cands.push_back(v);
  for (int v : cands) {
    std::vector<int> np, nx;
    for (int w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (int w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<Clique> maximal_cliques(const CoxeterGraph& g) {
  std::vector<std::vector<int>> raw;
  if (g.size() > 0) {
    std::vector<int> r, p(g.size()), x;
    for (int i = 0; i < g.size(); ++i) p[i] = i;
    bron_kerbosch(g, r, std::move(p), std::move(x), raw);
  }
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::sort(raw.begin(), raw.end());
  std::vector<Clique> out;
  for (auto& c : raw) out.push_back(Clique{std::move(c), true});
  return out;
}

bool is_complete(const CoxeterGraph& g) {
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) return false;
  return true;
}

bool is_triangle_free(const CoxeterGraph& g) {
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      for (int w = v + 1; w < g.size(); ++w)
        if (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w)) return false;
  return true;
}

bool is_even(const CoxeterGraph& g) {
  for (const auto& [uv, m] : g.edges())
    if (m % 2 != 0) return false;
  return true;
}

bool all_labels_at_least_3(const CoxeterGraph& g) {
  for (const auto& [uv, m] : g.edges())
    if (m < 3) return false;
  return true;
}

std::vector<int> even_vertices(const CoxeterGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    bool even = true;
    for (int u = 0; u < g.size() && even; ++u)
      if (int m = g.label(v, u); m != 0 && m % 2 != 0) even = false;
    if (even) out.push_back(v);
  }
  return out;
}

std::optional<std::pair<int, int>> non_adjacent_even_pair(const CoxeterGraph& g) {
  std::vector<int> evens = even_vertices(g);
  std::vector<char> is_even_v(g.size(), 0);
  for (int v : evens) is_even_v[v] = 1;
  for (int u = 0; u < g.size(); ++u) {
    if (!is_even_v[u]) continue;
    for (int v = u + 1; v < g.size(); ++v)
      if (is_even_v[v] && !g.adjacent(u, v)) return std::make_pair(u, v);
  }
  return std::nullopt;
}

}  // namespace coxan
