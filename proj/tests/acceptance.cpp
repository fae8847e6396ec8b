// Acceptance suite: one criterion per invocation (--criterion N) or all.
// Each criterion prints a single PASS/FAIL line; the process exits nonzero
// if any requested criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxan/classify.hpp"
#include "coxan/fixtures.hpp"
#include "coxan/oracle.hpp"
#include "coxan/verdict.hpp"
#include "coxan/words.hpp"

using namespace coxan;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string detail;
};

std::vector<std::string> g_notes;

void note(std::string s) { g_notes.push_back(std::move(s)); }

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  expect(static_cast<bool>(in), "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommandResult {
  int exit_code;
  std::string out;
};

CommandResult run_command(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  expect(pipe != nullptr, "popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

CoxeterGraph random_labeled_graph(std::mt19937& rng, int min_vertices, int max_vertices,
                                  int min_label, int max_label, double p) {
  std::uniform_int_distribution<int> nv(min_vertices, max_vertices);
  std::uniform_int_distribution<int> label(min_label, max_label);
  std::bernoulli_distribution edge(p);
  int n = nv(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  std::vector<std::tuple<std::string, std::string, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) edges.emplace_back(names[i], names[j], label(rng));
  return CoxeterGraph::create(std::move(names), edges);
}

// ---------------------------------------------------------------- criterion 1
void criterion_figures() {
  auto start = std::chrono::steady_clock::now();

  CoxeterGraph g1 = fixture_graph("gamma1");
  ComponentType t1 = recognize_component(g1);
  expect(t1.finite() && t1.family == 'A' && t1.rank == 4, "gamma1 must be A4");
  expect(enumerate_group(GeometricRep(g1), 500).size() == 120,
         "gamma1 must enumerate to 120 elements");

  CoxeterGraph g2 = fixture_graph("gamma2");
  ComponentType t2 = recognize_component(g2);
  expect(t2.finite() && t2.family == 'B' && t2.rank == 4, "gamma2 must be B4");
  expect(enumerate_group(GeometricRep(g2), 500).size() == 384,
         "gamma2 must enumerate to 384 elements");

  CoxeterGraph g3 = fixture_graph("gamma3");
  ComponentType t3 = recognize_component(g3);
  expect(t3.affine() && t3.family == 'A' && t3.rank == 3, "gamma3 must be ~A3");
  Classification c3 = classify(g3);
  expect(!c3.finite && c3.virtually_abelian && !c3.large,
         "gamma3 must be infinite, virtually abelian, not large");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  expect(secs < 5.0, "figure reproduction took " + std::to_string(secs) + "s >= 5s");
  note("recognized A4/120, B4/384, ~A3/infinite in " + std::to_string(secs) + "s");
}

// ---------------------------------------------------------------- criterion 2
void criterion_intro_verdicts() {
  VerdictReport r1 = analyze(fixture_graph("intro1"));
  expect(!r1.finite && r1.theorem_B.has_value(), "intro1: even-pair criterion fires");
  expect(r1.theorem_B->first == "v1" && r1.theorem_B->second == "v2",
         "intro1 witness pair is (v1, v2)");
  expect(r1.target_z2_z2 && !r1.target_self, "intro1 target is Z2*Z2 only");
  expect(!r1.theorem_A.has_value(),
         "intro1: singleton cliques have center of order 2, the clique criterion "
         "must not fire");
  expect(r1.large, "intro1 group is large");

  VerdictReport r2 = analyze(fixture_graph("intro2"));
  expect(r2.theorem_A.has_value() &&
             *r2.theorem_A == std::vector<std::string>{"v3", "v4"},
         "intro2: clique witness is the odd edge {v3,v4}");
  expect(r2.theorem_B.has_value() && r2.theorem_B->first == "v1" &&
             r2.theorem_B->second == "v2",
         "intro2: even-pair witness is the isolated pair");

  CoxeterGraph g3 = fixture_graph("intro3");
  auto comps = irreducible_components(g3);
  expect(comps.size() == 2 && comps[0] == std::vector<int>{g3.index_of("v1")} &&
             comps[1].size() == 3,
         "intro3 components are {v1} and {v2,v3,v4}");
  CenterDescriptor z = center(g3);
  expect(z.order == 2, "intro3 center has order 2");
  expect(z.contributing_components ==
             std::vector<std::vector<std::string>>{{"v1"}},
         "intro3 center is contributed by {v1}");

  // golden reports are frozen byte-for-byte
  fs::path golden = fs::path(COXAN_SOURCE_DIR) / "tests" / "golden";
  for (const char* name : {"intro1", "intro2", "intro3", "gamma1", "gamma3"}) {
    std::string want = read_file(golden / (std::string(name) + ".json"));
    std::string got = analyze(fixture_graph(name)).to_json();
    expect(got == want, std::string("golden mismatch for ") + name);
  }
  note("intro figures and golden reports match");
}

// ---------------------------------------------------------------- criterion 3
void criterion_center_table() {
  auto start = std::chrono::steady_clock::now();
  VerificationOutcome o = verify_center_table(8);
  expect(o.verified(), "center-table sweep: " + o.str());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  expect(secs < 60.0, "center-table sweep took " + std::to_string(secs) + "s >= 60s");
  note("all finite irreducible types up to rank 8 agree with the oracle in " +
       std::to_string(secs) + "s");
}

// ---------------------------------------------------------------- criterion 4
void criterion_triangle_free_suite() {
  std::mt19937 rng(20260810);
  int infinite_count = 0;
  for (int sample = 0; sample < 100; ++sample) {
    CoxeterGraph g = [&] {
      for (;;) {
        CoxeterGraph cand = random_labeled_graph(rng, 1, 8, 2, 6, 0.35);
        if (is_triangle_free(cand)) return cand;
      }
    }();
    VerdictReport r = analyze(g);
    if (r.finite) continue;
    ++infinite_count;
    expect(r.theorem_A.has_value() || r.theorem_B.has_value(),
           "triangle-free infinite sample with no applicable criterion: " +
               serialize_graph_one_line(g));
  }
  note(std::to_string(infinite_count) + "/100 samples infinite, all covered");
}

// ---------------------------------------------------------------- criterion 5
void criterion_all_labels_ge3_suite() {
  // As stated this property is not a theorem: an infinite graph whose maximal
  // cliques are all single vertices or even-labeled edges (e.g. the path
  // v1-4-v2-4-v3, or one even edge plus an isolated vertex) has every clique
  // subgroup with center of order 2, so no clique witness exists even though
  // all labels are >= 3. The suite below samples honestly and reports what it
  // finds rather than steering around that family.
  std::mt19937 rng(42);
  int failures = 0, samples = 0;
  std::string first_counterexample;
  while (samples < 50) {
    CoxeterGraph g = random_labeled_graph(rng, 3, 8, 3, 6, 0.5);
    if (g.edge_count() == 0) continue;
    if (is_finite(g)) continue;
    ++samples;
    VerdictReport r = analyze(g);
    if (!(r.theorem_A.has_value() && r.target_self)) {
      ++failures;
      if (first_counterexample.empty())
        first_counterexample = serialize_graph_one_line(g);
    }
  }
  if (failures > 0) {
    throw Failure{
        std::to_string(failures) +
        "/50 infinite samples with all labels >= 3 have no trivial-center maximal "
        "clique; first counterexample: " + first_counterexample +
        " (every maximal clique there is a single vertex or an even-labeled edge, "
        "whose dihedral group has center of order 2)"};
  }
  note("all 50 samples carried a trivial-center maximal clique");
}

// ---------------------------------------------------------------- criterion 6
void criterion_proposition_oracles() {
  const std::vector<std::string> finite_fixtures = {
      "gamma1", "gamma2", "a3",        "b3",          "h3",
      "k3_322", "k3_rightangled", "sym3xsym3", "evensquare_finite",
      "i2_3",   "i2_4",   "i2_5"};

  // special subgroups: every subset of every finite fixture, including the
  // Z2, Z2xZ2, Sym(3), Sym(4) subgroups of Sym(5)
  for (const std::string& name : finite_fixtures) {
    CoxeterGraph g = fixture_graph(name);
    for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < g.size(); ++v)
        if (mask >> v & 1) s.push_back(v);
      VerificationOutcome o = verify_special_subgroup(g, s);
      expect(o.verified(), "special-subgroup: " + o.str());
    }
  }

  // clique normalizers on every finite fixture
  for (const std::string& name : finite_fixtures) {
    VerificationOutcome o = verify_clique_normalizer(fixture_graph(name));
    expect(o.verified(), "normalizer: " + o.str());
  }

  // retraction part (a) on every fixture owning a non-adjacent even pair
  int retraction_checked = 0;
  for (const Fixture& f : all_fixtures()) {
    CoxeterGraph g = parse_graph(f.cox_text);
    auto pair = non_adjacent_even_pair(g);
    if (!pair) continue;
    VerificationOutcome o = verify_retraction(g, pair->first, pair->second, true, 5);
    expect(o.verified(), "retraction on " + f.name + ": " + o.str());
    ++retraction_checked;
  }
  expect(retraction_checked >= 5, "too few retraction fixtures");

  // the negative control: inject an odd label at the chosen vertex and demand
  // a refutation naming the relator
  CoxeterGraph broken = parse_graph(
      "vertex v1\nvertex v2\nvertex v3\nvertex v4\nedge v1 v3 3\n");
  VerificationOutcome o =
      verify_retraction(broken, broken.index_of("v1"), broken.index_of("v2"), true, 4);
  expect(o.status == VerificationOutcome::Status::refuted,
         "odd-label injection must refute the relator sweep");
  expect(o.witness.find("relator") != std::string::npos,
         "refutation must name the relator");
  note("subgroup/normalizer/retraction oracles verified, odd injection refuted: " +
       o.witness);
}

// ---------------------------------------------------------------- criterion 7
void criterion_word_engine_consistency() {
  // (sigma_v sigma_w)^m has exact order m on every edge of every fixture
  for (const Fixture& f : all_fixtures()) {
    CoxeterGraph g = parse_graph(f.cox_text);
    GeometricRep rep(g);
    for (const auto& [uv, m] : g.edges()) {
      CycloMatrix p = rep.generator(uv.first) * rep.generator(uv.second);
      CycloMatrix q = p;
      for (int k = 1; k < m; ++k) {
        expect(!q.is_identity(), f.name + ": product order below the label");
        q = q * p;
      }
      expect(q.is_identity(), f.name + ": product order above the label");
    }
  }

  // 1000 random word pairs per finite fixture: exact matrix equality agrees
  // with positional equality in the enumerated Cayley structure
  std::mt19937 rng(97);
  for (const char* name : {"gamma1", "gamma2", "b3", "i2_4", "sym3xsym3"}) {
    CoxeterGraph g = fixture_graph(name);
    GeometricRep rep(g);
    EnumeratedGroup gr = enumerate_group(rep, 1000);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> gen(0, g.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<int> w1(len(rng)), w2(len(rng));
      for (auto& s : w1) s = gen(rng);
      for (auto& s : w2) s = gen(rng);
      bool by_matrix = equal(element_of(rep, w1), element_of(rep, w2));
      bool by_table = gr.index_of_word(w1) == gr.index_of_word(w2);
      expect(by_matrix == by_table,
             std::string(name) + ": word-problem disagreement between matrix " +
                 "equality and Cayley position");
    }
  }
  note("edge orders exact on all fixtures; 5000 word pairs consistent");
}

// ---------------------------------------------------------------- criterion 8
void criterion_cli_determinism() {
  fs::path tmp = fs::temp_directory_path() / "coxan_acceptance_fixtures";
  fs::create_directories(tmp);
  for (const Fixture& f : all_fixtures()) {
    std::ofstream out(tmp / (f.name + ".cox"), std::ios::binary);
    out << f.cox_text;
  }
  const std::string bin = COXAN_BIN;
  for (const Fixture& f : all_fixtures()) {
    std::string cmd = "'" + bin + "' analyze --format json '" +
                      (tmp / (f.name + ".cox")).string() + "'";
    CommandResult a = run_command(cmd);
    CommandResult b = run_command(cmd);
    expect(a.exit_code == 0 && b.exit_code == 0, f.name + ": analyze must exit 0");
    expect(!a.out.empty() && a.out == b.out,
           f.name + ": JSON output must be byte-identical across runs");
  }
  // sanity: missing file exits 2, cap overflow exits 3
  expect(run_command("'" + bin + "' analyze /no/such/file.cox").exit_code == 2,
         "missing file must exit 2");
  expect(run_command("'" + bin + "' enumerate --cap 50 '" +
                     (tmp / "intro1.cox").string() + "'")
                 .exit_code == 3,
         "over-cap enumeration must exit 3");
  note("byte-identical JSON across runs for all " +
       std::to_string(all_fixtures().size()) + " fixtures");
}

struct Criterion {
  int id;
  const char* title;
  void (*fn)();
};

const std::array<Criterion, 8> kCriteria = {{
    {1, "figure reproduction (A4/120, B4/384, ~A3)", criterion_figures},
    {2, "intro-figure verdicts and golden reports", criterion_intro_verdicts},
    {3, "center-table validation up to rank 8", criterion_center_table},
    {4, "triangle-free random suite (criterion coverage)", criterion_triangle_free_suite},
    {5, "all-labels>=3 random suite (clique criterion)", criterion_all_labels_ge3_suite},
    {6, "proposition oracles (subgroups, normalizers, retraction)",
     criterion_proposition_oracles},
    {7, "word-engine consistency (orders, Cayley agreement)",
     criterion_word_engine_consistency},
    {8, "CLI determinism (byte-identical JSON)", criterion_cli_determinism},
}};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    g_notes.clear();
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      c.fn();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.detail;
      ++failed;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
      ++failed;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.2fs)\n", verdict.c_str(), c.id, c.title, secs);
    for (const std::string& n : g_notes) std::printf("       %s\n", n.c_str());
    if (!detail.empty()) std::printf("       %s\n", detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
