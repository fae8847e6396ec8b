#include "coxan/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace coxan {

namespace {

std::string describe_set(const CoxeterGraph& g, const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.name(s[i]);
  }
  return out + "}";
}

std::string describe_word(const CoxeterGraph& g, const std::vector<int>& w) {
  if (w.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += g.name(w[i]);
  }
  return out;
}

VerificationOutcome skipped(std::string property, std::string instance,
                            std::string reason) {
  VerificationOutcome o;
  o.property = std::move(property);
  o.instance = std::move(instance);
  o.status = VerificationOutcome::Status::skipped;
  o.reason = std::move(reason);
  return o;
}

// True when x * s = s * x in the enumerated group, via left-product folds.
bool commutes(const EnumeratedGroup& gr, std::uint32_t x, int s) {
  // s * x
  std::uint32_t sx = gr.left(s, x);
  // x * s = (witness of x applied to) s
  std::uint32_t xs = gr.apply_left_word(gr.elements[x].witness_word, gr.left(s, 0));
  return sx == xs;
}

}  // namespace

std::string VerificationOutcome::str() const {
  std::ostringstream os;
  os << property << " on " << instance << ": ";
  switch (status) {
    case Status::verified:
      os << "verified (" << elements_examined << " elements examined)";
      break;
    case Status::refuted:
      os << "REFUTED, witness: " << witness;
      break;
    case Status::skipped:
      os << "skipped: " << reason;
      break;
  }
  return os.str();
}

std::vector<std::uint32_t> subgroup_indices(const EnumeratedGroup& gr,
                                            const std::vector<int>& gens) {
  std::vector<char> seen(gr.size(), 0);
  std::vector<std::uint32_t> order{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int s : gens) {
      std::uint32_t nxt = gr.left(s, order[i]);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        order.push_back(nxt);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::size_t> center_indices(const EnumeratedGroup& gr, int rank, Exec exec) {
  return filter_indices(gr.size(), exec, [&](std::size_t i) {
    for (int s = 0; s < rank; ++s)
      if (!commutes(gr, static_cast<std::uint32_t>(i), s)) return false;
    return true;
  });
}

std::vector<std::size_t> center_indices_reference(const EnumeratedGroup& gr, int rank) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gr.size(); ++i) {
    bool central = true;
    for (int s = 0; s < rank && central; ++s)
      central = commutes(gr, static_cast<std::uint32_t>(i), s);
    if (central) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<std::size_t> normalizer_impl(const EnumeratedGroup& gr,
                                         const std::vector<int>& clique,
                                         const std::vector<char>& in_sub, Exec exec) {
  // a normalizes W_D iff a s a^{-1} lies in W_D for every generator s of D
  // (conjugation is injective and the subgroup is finite).
  return filter_indices(gr.size(), exec, [&](std::size_t i) {
    for (int s : clique)
      if (!in_sub[gr.conjugate_generator(static_cast<std::uint32_t>(i), s)]) return false;
    return true;
  });
}

}  // namespace

std::vector<std::size_t> normalizer_indices(const EnumeratedGroup& gr,
                                            const std::vector<int>& clique, Exec exec) {
  std::vector<char> in_sub(gr.size(), 0);
  for (std::uint32_t i : subgroup_indices(gr, clique)) in_sub[i] = 1;
  return normalizer_impl(gr, clique, in_sub, exec);
}

std::vector<std::size_t> normalizer_indices_reference(const EnumeratedGroup& gr,
                                                      const std::vector<int>& clique) {
  std::vector<char> in_sub(gr.size(), 0);
  for (std::uint32_t i : subgroup_indices(gr, clique)) in_sub[i] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gr.size(); ++i) {
    bool ok = true;
    for (int s : clique)
      if (!in_sub[gr.conjugate_generator(static_cast<std::uint32_t>(i), s)]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> centralizer_indices(const EnumeratedGroup& gr,
                                             const std::vector<int>& clique, Exec exec) {
  return filter_indices(gr.size(), exec, [&](std::size_t i) {
    for (int s : clique)
      if (!commutes(gr, static_cast<std::uint32_t>(i), s)) return false;
    return true;
  });
}

VerificationOutcome verify_special_subgroup(const CoxeterGraph& g,
                                            const std::vector<int>& subset,
                                            std::size_t cap, Exec exec) {
  VerificationOutcome o;
  o.property = "special-subgroup";
  o.instance = "S=" + describe_set(g, subset) + " in " + describe_set(g, [&] {
                 std::vector<int> all(g.size());
                 for (int i = 0; i < g.size(); ++i) all[i] = i;
                 return all;
               }());

  CoxeterGraph sub = induced_subgraph(g, subset);
  std::uint64_t abstract_order = 0;
  if (!is_finite(sub, &abstract_order))
    return skipped(o.property, o.instance, "subgroup of infinite type");

  GeometricRep rep(g);
  EnumeratedGroup gr;
  try {
    gr = enumerate_group(rep, cap, exec);
  } catch (const CapExceeded&) {
    return skipped(o.property, o.instance, "group exceeds cap (infinite or raise cap)");
  }
  std::vector<std::uint32_t> sub_idx = subgroup_indices(gr, subset);
  o.elements_examined = gr.size();
  if (sub_idx.size() != abstract_order) {
    o.status = VerificationOutcome::Status::refuted;
    o.witness = "generated subgroup has order " + std::to_string(sub_idx.size()) +
                ", abstract order is " + std::to_string(abstract_order);
  }
  return o;
}

VerificationOutcome verify_clique_normalizer(const CoxeterGraph& g, std::size_t cap,
                                             Exec exec) {
  VerificationOutcome o;
  o.property = "clique-normalizer";
  o.instance = serialize_graph_one_line(g);

  GeometricRep rep(g);
  EnumeratedGroup gr;
  try {
    gr = enumerate_group(rep, cap, exec);
  } catch (const CapExceeded&) {
    return skipped(o.property, o.instance, "group exceeds cap (infinite or raise cap)");
  }
  o.elements_examined = gr.size();

  for (const Clique& cl : maximal_cliques(g)) {
    std::vector<std::uint32_t> sub = subgroup_indices(gr, cl.vertices);
    std::vector<std::size_t> nor = normalizer_indices(gr, cl.vertices, exec);
    if (nor.size() != sub.size() ||
        !std::equal(nor.begin(), nor.end(), sub.begin())) {
      o.status = VerificationOutcome::Status::refuted;
      o.witness = "Nor(W_" + describe_set(g, cl.vertices) + ") has order " +
                  std::to_string(nor.size()) + " != |W_Delta| = " +
                  std::to_string(sub.size());
      return o;
    }
    // Consequence: the centralizer of W_D in W equals Z(W_D).
    std::vector<std::size_t> cent = centralizer_indices(gr, cl.vertices, exec);
    std::vector<char> in_sub(gr.size(), 0);
    for (std::uint32_t i : sub) in_sub[i] = 1;
    std::vector<std::size_t> z_of_sub;
    for (std::uint32_t i : sub) {
      bool central_in_sub = true;
      for (int s : cl.vertices)
        if (!commutes(gr, i, s)) {
          central_in_sub = false;
          break;
        }
      if (central_in_sub) z_of_sub.push_back(i);
    }
    if (cent != z_of_sub) {
      o.status = VerificationOutcome::Status::refuted;
      o.witness = "Z_W(W_" + describe_set(g, cl.vertices) + ") != Z(W_Delta)";
      return o;
    }
  }
  return o;
}

VerificationOutcome verify_clique_conjugacy_separation(const CoxeterGraph& g,
                                                       std::size_t cap, int ball_radius,
                                                       Exec exec) {
  VerificationOutcome o;
  o.property = "clique-conjugacy-separation";
  o.instance = serialize_graph_one_line(g);

  std::vector<Clique> cliques = maximal_cliques(g);
  if (cliques.size() < 2) {
    o.instance += " (single maximal clique: vacuous)";
    return o;
  }

  GeometricRep rep(g);
  EnumeratedGroup gr;
  bool whole_group = true;
  try {
    gr = enumerate_group(rep, cap, exec);
  } catch (const CapExceeded&) {
    whole_group = false;
    gr = enumerate_ball(rep, ball_radius, 1u << 20, exec);
    o.instance += " (conjugators from the radius-" + std::to_string(ball_radius) +
                  " ball only: no short counterexample)";
  }
  o.elements_examined = gr.size();

  // a W_D a^{-1} = W_L iff every a s a^{-1} (s in D) lies in W_L and the
  // mirror inclusion holds. Membership in a special subgroup is decided on
  // the letter support of a reduced word.
  std::vector<std::vector<char>> in_clique(cliques.size(),
                                           std::vector<char>(g.size(), 0));
  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (int v : cliques[c].vertices) in_clique[c][v] = 1;

  auto conj_in_special = [&](std::uint32_t a, bool invert, int s,
                             const std::vector<char>& allowed) {
    const auto& w = gr.elements[a].witness_word;
    std::vector<int> word;
    if (!invert) word.assign(w.begin(), w.end());
    else word.assign(w.rbegin(), w.rend());
    word.push_back(s);
    if (!invert) word.insert(word.end(), w.rbegin(), w.rend());
    else word.insert(word.end(), w.begin(), w.end());
    CycloMatrix m = rep.element_matrix(word);
    for (int letter : reduced_word_of(rep, m))
      if (!allowed[letter]) return false;
    return true;
  };

  std::vector<char> hit(gr.size(), 0);
  for (std::size_t c1 = 0; c1 < cliques.size(); ++c1) {
    for (std::size_t c2 = 0; c2 < cliques.size(); ++c2) {
      if (c1 == c2) continue;
      for_each_index(gr.size(), exec, [&](std::size_t a) {
        bool both = true;
        for (int s : cliques[c1].vertices)
          if (!conj_in_special(static_cast<std::uint32_t>(a), false, s, in_clique[c2])) {
            both = false;
            break;
          }
        if (both)
          for (int s : cliques[c2].vertices)
            if (!conj_in_special(static_cast<std::uint32_t>(a), true, s, in_clique[c1])) {
              both = false;
              break;
            }
        hit[a] = both ? 1 : 0;
      });
      for (std::size_t a = 0; a < gr.size(); ++a)
        if (hit[a]) {
          o.status = VerificationOutcome::Status::refuted;
          o.witness = "a=" + describe_word(g, gr.elements[a].witness_word) +
                      " conjugates W_" + describe_set(g, cliques[c1].vertices) +
                      " onto W_" + describe_set(g, cliques[c2].vertices);
          return o;
        }
    }
  }
  if (whole_group) o.instance += " (exhaustive)";
  return o;
}

VerificationOutcome verify_retraction(const CoxeterGraph& g, int v, int w,
                                      bool relator_sweep, int ball_radius, Exec exec) {
  VerificationOutcome o;
  o.property = "retraction";
  o.instance = serialize_graph_one_line(g) + " with v=" + g.name(v) + ", w=" + g.name(w);

  if (v == w || v < 0 || w < 0 || v >= g.size() || w >= g.size())
    throw HypothesisViolated("retraction needs two distinct vertices of the graph");
  if (g.adjacent(v, w))
    throw HypothesisViolated("retraction vertices " + g.name(v) + ", " + g.name(w) +
                             " are adjacent");

  // (a) well-definedness: all defining relators map to the empty word. An odd
  // label incident to v or w fails here with the relator as witness.
  if (relator_sweep) {
    for (int x = 0; x < g.size(); ++x) {
      std::vector<int> sq{x, x};
      if (!retraction_image_unchecked(v, w, sq).empty()) {
        o.status = VerificationOutcome::Status::refuted;
        o.witness = "relator " + g.name(x) + "^2 does not retract to the identity";
        return o;
      }
    }
    for (const auto& [uv, m] : g.edges()) {
      std::vector<int> relator;
      for (int k = 0; k < m; ++k) {
        relator.push_back(uv.first);
        relator.push_back(uv.second);
      }
      std::vector<int> image = retraction_image_unchecked(v, w, relator);
      ++o.elements_examined;
      if (!image.empty()) {
        o.status = VerificationOutcome::Status::refuted;
        o.witness = "relator (" + g.name(uv.first) + " " + g.name(uv.second) + ")^" +
                    std::to_string(m) + " retracts to \"" + describe_word(g, image) +
                    "\", not the identity";
        return o;
      }
    }
  }

  // (b) surjectivity onto the two free factors.
  if (retraction_image_unchecked(v, w, {v}) != std::vector<int>{v} ||
      retraction_image_unchecked(v, w, {w}) != std::vector<int>{w}) {
    o.status = VerificationOutcome::Status::refuted;
    o.witness = "generator image shifted";
    return o;
  }

  // (c) kernel inclusion: conjugates of the deleted generators retract to the
  // identity for conjugators up to the ball radius. This is one inclusion;
  // the reverse needs the infinite group and is out of reach of a sweep.
  GeometricRep rep(g);
  EnumeratedGroup ball = enumerate_ball(rep, ball_radius, 1u << 20, exec);
  std::vector<int> deleted;
  for (int x = 0; x < g.size(); ++x)
    if (x != v && x != w) deleted.push_back(x);
  for (std::size_t a = 0; a < ball.size(); ++a) {
    const auto& u = ball.elements[a].witness_word;
    for (int x : deleted) {
      std::vector<int> word(u.begin(), u.end());
      word.push_back(x);
      word.insert(word.end(), u.rbegin(), u.rend());
      ++o.elements_examined;
      if (!retraction_image_unchecked(v, w, word).empty()) {
        o.status = VerificationOutcome::Status::refuted;
        o.witness = "conjugate of " + g.name(x) + " by " + describe_word(g, u) +
                    " does not retract to the identity";
        return o;
      }
    }
  }
  return o;
}

std::vector<ComponentType> finite_types_up_to_rank(int rank_limit) {
  std::vector<ComponentType> out;
  auto mk = [&](char fam, int rank, long m = 0) {
    ComponentType t;
    t.kind = ComponentType::Kind::Finite;
    t.family = fam;
    t.rank = rank;
    t.dihedral_m = m;
    t.order = finite_type_order(fam, rank, m);
    out.push_back(t);
  };
  for (int r = 1; r <= rank_limit; ++r) mk('A', r);
  for (int r = 3; r <= rank_limit; ++r) mk('B', r);
  for (int r = 4; r <= rank_limit; ++r) mk('D', r);
  for (int r = 6; r <= std::min(rank_limit, 8); ++r) mk('E', r);
  if (rank_limit >= 4) mk('F', 4);
  if (rank_limit >= 3) mk('H', 3);
  if (rank_limit >= 4) mk('H', 4);
  if (rank_limit >= 2)
    for (long m = 4; m <= 12; ++m) mk('I', 2, m);
  return out;
}

VerificationOutcome verify_center_table(int rank_limit, Exec exec) {
  VerificationOutcome o;
  o.property = "center-table";
  o.instance = "finite irreducible types of rank <= " + std::to_string(rank_limit);
  if (rank_limit > 8)
    return skipped(o.property, o.instance, "tables are validated up to rank 8");

  for (const ComponentType& t : finite_types_up_to_rank(rank_limit)) {
    CoxeterGraph g = standard_type_graph(t);
    ComponentType back = recognize_component(g);
    if (!(back == t)) {
      o.status = VerificationOutcome::Status::refuted;
      o.witness = "standard graph of " + t.name() + " recognized as " + back.name();
      return o;
    }
    GeometricRep rep(g);
    bool oracle_central = longest_element_is_minus_identity(rep);
    if (oracle_central != t.longest_element_central()) {
      o.status = VerificationOutcome::Status::refuted;
      o.witness = t.name() + ": table says " +
                  (t.longest_element_central() ? "central" : "trivial") +
                  ", root-system oracle says the opposite";
      return o;
    }
    if (t.order <= 400) {
      EnumeratedGroup gr = enumerate_group(rep, 401, exec);
      std::vector<std::size_t> z = center_indices(gr, rep.rank(), exec);
      std::size_t expect = t.longest_element_central() ? 2 : 1;
      o.elements_examined += gr.size();
      if (z.size() != expect) {
        o.status = VerificationOutcome::Status::refuted;
        o.witness = t.name() + ": exhaustive center has order " +
                    std::to_string(z.size()) + ", table says " + std::to_string(expect);
        return o;
      }
    }
  }
  return o;
}

}  // namespace coxan
