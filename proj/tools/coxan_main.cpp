// coxan: exact analyzer for Coxeter graphs.
//
// Exit codes: 0 success / verified, 1 refuted, 2 input error, 3 cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxan/classify.hpp"
#include "coxan/fixtures.hpp"
#include "coxan/graph.hpp"
#include "coxan/oracle.hpp"
#include "coxan/verdict.hpp"
#include "coxan/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::size_t default_cap() {
  if (const char* env = std::getenv("COXAN_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring malformed COXAN_CAP='" << env << "'\n";
  }
  return coxan::kDefaultCap;
}

std::vector<int> parse_word(const coxan::CoxeterGraph& g, const std::string& text) {
  std::vector<int> word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) word.push_back(g.index_of(tok));
  return word;
}

int run_analyze(const std::string& path, const std::string& format) {
  coxan::CoxeterGraph g = coxan::parse_file(path);
  coxan::VerdictReport r = coxan::analyze(g);
  std::cout << (format == "json" ? r.to_json() : r.to_text());
  return kExitOk;
}

int run_cliques(const std::string& path) {
  coxan::CoxeterGraph g = coxan::parse_file(path);
  for (const coxan::Clique& c : coxan::maximal_cliques(g)) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      std::cout << (i ? " " : "") << g.name(c.vertices[i]);
    std::cout << "\n";
  }
  return kExitOk;
}

int run_classify(const std::string& path) {
  coxan::CoxeterGraph g = coxan::parse_file(path);
  coxan::Classification c = coxan::classify(g);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    std::cout << "component {";
    for (std::size_t j = 0; j < c.components[i].size(); ++j)
      std::cout << (j ? "," : "") << g.name(c.components[i][j]);
    std::cout << "}: " << c.types[i].name();
    if (c.types[i].finite())
      std::cout << ", order " << c.types[i].order;
    else
      std::cout << ", infinite";
    std::cout << "\n";
  }
  if (c.finite)
    std::cout << "group: finite, order " << c.order << "\n";
  else
    std::cout << "group: infinite\n";
  std::cout << "virtually abelian: " << (c.virtually_abelian ? "yes" : "no") << "\n";
  std::cout << "large: " << (c.large ? "yes" : "no") << "\n";
  std::cout << "property FA: " << (coxan::has_property_FA(g) ? "yes" : "no") << "\n";
  coxan::CenterDescriptor z = coxan::center(g);
  std::cout << "center: order " << z.order;
  if (!z.contributing_components.empty()) {
    std::cout << ", contributed by";
    for (const auto& comp : z.contributing_components) {
      std::cout << " {";
      for (std::size_t j = 0; j < comp.size(); ++j) std::cout << (j ? "," : "") << comp[j];
      std::cout << "}";
    }
  }
  std::cout << "\n";
  return kExitOk;
}

int run_enumerate(const std::string& path, std::size_t cap, bool cayley) {
  coxan::CoxeterGraph g = coxan::parse_file(path);
  coxan::GeometricRep rep(g);
  coxan::EnumeratedGroup gr;
  try {
    gr = coxan::enumerate_group(rep, cap);
  } catch (const coxan::CapExceeded&) {
    std::cerr << "group exceeds cap (infinite or raise --cap)\n";
    return kExitCapExceeded;
  }
  std::cout << gr.size() << "\n";
  if (cayley) {
    for (std::size_t i = 0; i < gr.size(); ++i) {
      std::cout << i << ":";
      const auto& w = gr.elements[i].witness_word;
      if (w.empty()) std::cout << " 1";
      for (int s : w) std::cout << " " << g.name(s);
      std::cout << " |";
      for (int s = 0; s < g.size(); ++s) std::cout << " " << gr.left(s, i);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_retract(const std::string& path, const std::string& vname,
                const std::string& wname, const std::string& word_text) {
  coxan::CoxeterGraph g = coxan::parse_file(path);
  int v = g.index_of(vname), w = g.index_of(wname);
  std::vector<int> word = parse_word(g, word_text);
  std::vector<int> image = coxan::retraction_image(g, v, w, word);
  if (image.empty()) {
    std::cout << "(identity)\n";
  } else {
    for (std::size_t i = 0; i < image.size(); ++i)
      std::cout << (i ? " " : "") << g.name(image[i]);
    std::cout << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& property, const std::string& path,
               const std::string& subset_csv, const std::string& vname,
               const std::string& wname, int rank, int radius, std::size_t cap) {
  std::vector<coxan::VerificationOutcome> outcomes;
  if (property == "center-table") {
    outcomes.push_back(coxan::verify_center_table(rank));
  } else {
    if (path.empty()) {
      std::cerr << "property '" << property << "' needs an input graph\n";
      return kExitInputError;
    }
    coxan::CoxeterGraph g = coxan::parse_file(path);
    if (property == "special-subgroup") {
      std::vector<int> subset;
      std::istringstream in(subset_csv);
      std::string tok;
      while (std::getline(in, tok, ','))
        if (!tok.empty()) subset.push_back(g.index_of(tok));
      outcomes.push_back(coxan::verify_special_subgroup(g, subset, cap));
    } else if (property == "normalizer") {
      outcomes.push_back(coxan::verify_clique_normalizer(g, cap));
    } else if (property == "conjugacy") {
      outcomes.push_back(coxan::verify_clique_conjugacy_separation(g, cap, radius));
    } else if (property == "retraction") {
      if (vname.empty() || wname.empty()) {
        std::cerr << "retraction needs --v and --w\n";
        return kExitInputError;
      }
      outcomes.push_back(coxan::verify_retraction(g, g.index_of(vname),
                                                  g.index_of(wname), true, radius));
    } else {
      std::cerr << "unknown property '" << property << "'\n";
      return kExitInputError;
    }
  }
  bool refuted = false;
  for (const auto& o : outcomes) {
    std::cout << o.str() << "\n";
    refuted = refuted || o.status == coxan::VerificationOutcome::Status::refuted;
  }
  return refuted ? kExitRefuted : kExitOk;
}

int run_fixtures(const std::string& dir) {
  if (dir.empty()) {
    for (const coxan::Fixture& f : coxan::all_fixtures())
      std::cout << f.name << ": " << f.description << "\n";
    return kExitOk;
  }
  std::filesystem::create_directories(dir);
  for (const coxan::Fixture& f : coxan::all_fixtures()) {
    std::filesystem::path p = std::filesystem::path(dir) / (f.name + ".cox");
    std::ofstream out(p);
    if (!out) {
      std::cerr << "cannot write " << p.string() << "\n";
      return kExitInputError;
    }
    out << f.cox_text;
    std::cout << "wrote " << p.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxan: exact analyzer for Coxeter graphs"};
  app.require_subcommand(1);

  std::string path, format = "text", vname, wname, word_text, subset_csv, dir, property;
  std::size_t cap = default_cap();
  int rank = 8, radius = coxan::kDefaultBallRadius;
  bool cayley = false;

  auto* analyze = app.add_subcommand("analyze", "evaluate the criteria and report");
  analyze->add_option("path", path, "input graph (.cox or .json)")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cliques = app.add_subcommand("cliques", "list the maximal cliques");
  cliques->add_option("path", path)->required();

  auto* classify = app.add_subcommand("classify", "irreducible components and types");
  classify->add_option("path", path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "count the group elements");
  enumerate->add_option("path", path)->required();
  enumerate->add_option("--cap", cap, "element cap");
  enumerate->add_flag("--cayley", cayley, "dump witness words and the left-multiplication table");

  auto* retract = app.add_subcommand("retract", "retraction image of a word");
  retract->add_option("path", path)->required();
  retract->add_option("--v", vname, "first even vertex")->required();
  retract->add_option("--w", wname, "second even vertex")->required();
  retract->add_option("--word", word_text, "space-separated word")->required();

  auto* verify = app.add_subcommand("verify", "brute-force verification sweeps");
  verify->add_option("property", property,
                     "special-subgroup | normalizer | conjugacy | retraction | center-table")
      ->required();
  verify->add_option("path", path, "input graph (not used by center-table)");
  verify->add_option("--subset", subset_csv, "comma-separated vertices (special-subgroup)");
  verify->add_option("--v", vname, "first vertex (retraction)");
  verify->add_option("--w", wname, "second vertex (retraction)");
  verify->add_option("--rank", rank, "rank limit (center-table)");
  verify->add_option("--radius", radius, "conjugator ball radius");
  verify->add_option("--cap", cap, "enumeration cap");

  auto* fixtures = app.add_subcommand("fixtures", "list or write the bundled fixtures");
  fixtures->add_option("--dir", dir, "write .cox files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(path, format);
    if (cliques->parsed()) return run_cliques(path);
    if (classify->parsed()) return run_classify(path);
    if (enumerate->parsed()) return run_enumerate(path, cap, cayley);
    if (retract->parsed()) return run_retract(path, vname, wname, word_text);
    if (verify->parsed())
      return run_verify(property, path, subset_csv, vname, wname, rank, radius, cap);
    if (fixtures->parsed()) return run_fixtures(dir);
  } catch (const coxan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const coxan::HypothesisViolated& e) {
    std::cerr << "error: hypothesis violated: " << e.what() << "\n";
    return kExitInputError;
  } catch (const coxan::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
