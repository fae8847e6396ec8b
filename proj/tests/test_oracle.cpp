#include "coxan/fixtures.hpp"
#include "coxan/oracle.hpp"
#include "doctest.h"

using namespace coxan;

namespace {

std::vector<int> indices(const CoxeterGraph& g, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(g.index_of(n));
  return out;
}

}  // namespace

TEST_CASE("special subgroups of Sym(5)") {
  CoxeterGraph g = fixture_graph("gamma1");
  // Z2, Z2 x Z2, Sym(3) and Sym(4) all embed with their abstract orders
  CHECK(verify_special_subgroup(g, indices(g, {"v1"})).verified());
  CHECK(verify_special_subgroup(g, indices(g, {"v1", "v3"})).verified());
  CHECK(verify_special_subgroup(g, indices(g, {"v1", "v2"})).verified());
  CHECK(verify_special_subgroup(g, indices(g, {"v1", "v2", "v3"})).verified());
  CHECK(verify_special_subgroup(g, {}).verified());

  SUBCASE("every subset of every small finite fixture") {
    for (const char* name : {"gamma1", "gamma2", "a3", "b3", "h3", "k3_322",
                             "sym3xsym3", "evensquare_finite", "k3_rightangled"}) {
      CoxeterGraph h = fixture_graph(name);
      for (unsigned mask = 0; mask < (1u << h.size()); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < h.size(); ++v)
          if (mask >> v & 1) s.push_back(v);
        VerificationOutcome o = verify_special_subgroup(h, s);
        CAPTURE(name);
        CAPTURE(mask);
        CHECK(o.verified());
      }
    }
  }
}

TEST_CASE("special subgroup outcomes degrade honestly") {
  // infinite ambient group: skipped with a reason
  VerificationOutcome o =
      verify_special_subgroup(fixture_graph("intro1"), {0}, 100);
  CHECK(o.status == VerificationOutcome::Status::skipped);
  CHECK_FALSE(o.reason.empty());
}

TEST_CASE("clique normalizers on the finite fixtures") {
  for (const char* name : {"gamma1", "gamma2", "a3", "b3", "h3", "k3_322",
                           "k3_rightangled", "sym3xsym3", "evensquare_finite"}) {
    CAPTURE(name);
    VerificationOutcome o = verify_clique_normalizer(fixture_graph(name));
    CHECK(o.verified());
    CHECK(o.elements_examined >= 8);
  }
  SUBCASE("infinite input is skipped with the cap reason") {
    VerificationOutcome o =
        verify_clique_normalizer(parse_graph("vertex a\nvertex b\n"), 50);
    CHECK(o.status == VerificationOutcome::Status::skipped);
  }
}

TEST_CASE("conjugacy separation of maximal cliques") {
  SUBCASE("single-clique graphs are vacuous") {
    VerificationOutcome o = verify_clique_conjugacy_separation(fixture_graph("k3_322"));
    CHECK(o.verified());
  }
  SUBCASE("bounded-ball sweep on infinite fixtures finds no short conjugator") {
    for (const char* name : {"sec21", "intro2", "square4"}) {
      CAPTURE(name);
      VerificationOutcome o =
          verify_clique_conjugacy_separation(fixture_graph(name), 200, 6);
      CHECK(o.verified());
      CHECK(o.instance.find("ball") != std::string::npos);
    }
  }
}

TEST_CASE("retraction verification") {
  SUBCASE("free-product fixture: squares are the only relators") {
    CoxeterGraph g = fixture_graph("intro1");
    VerificationOutcome o =
        verify_retraction(g, g.index_of("v1"), g.index_of("v2"), true, 4);
    CHECK(o.verified());
  }
  SUBCASE("even 4-cycle: (v1 v2)^4 retracts through v-only letters") {
    CoxeterGraph g = fixture_graph("square4");
    VerificationOutcome o =
        verify_retraction(g, g.index_of("v1"), g.index_of("v3"), true, 4);
    CHECK(o.verified());
  }
  SUBCASE("adjacent vertices violate the hypothesis outright") {
    CoxeterGraph g = fixture_graph("i2_3");
    CHECK_THROWS_AS(verify_retraction(g, 0, 1), HypothesisViolated);
  }
  SUBCASE("an injected odd label refutes with the relator as witness") {
    // intro1 plus an odd edge at v1: evenness of v1 breaks and the sweep
    // must name the offending relator
    CoxeterGraph g = parse_graph(
        "vertex v1\nvertex v2\nvertex v3\nvertex v4\nedge v1 v3 3\n");
    VerificationOutcome o =
        verify_retraction(g, g.index_of("v1"), g.index_of("v2"), true, 4);
    CHECK(o.status == VerificationOutcome::Status::refuted);
    CHECK(o.witness.find("relator") != std::string::npos);
    CHECK(o.witness.find("v1 v3") != std::string::npos);
  }
  SUBCASE("refutations replay identically") {
    CoxeterGraph g = parse_graph(
        "vertex v1\nvertex v2\nvertex v3\nvertex v4\nedge v1 v3 3\n");
    VerificationOutcome a =
        verify_retraction(g, g.index_of("v1"), g.index_of("v2"), true, 4);
    VerificationOutcome b =
        verify_retraction(g, g.index_of("v1"), g.index_of("v2"), true, 4);
    CHECK(a.witness == b.witness);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("center table validation at desk rank") {
  VerificationOutcome o = verify_center_table(4);
  CHECK(o.verified());
  // the rank-4 sweep covers every type with |W| <= 400 exhaustively
  CHECK(o.elements_examined >= 2 + 6 + 24 + 120 + 48 + 384 + 192 + 120);
}

TEST_CASE("center table rank limit is honest") {
  VerificationOutcome o = verify_center_table(9);
  CHECK(o.status == VerificationOutcome::Status::skipped);
}
