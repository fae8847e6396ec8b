#ifndef COXAN_WORDS_HPP
#define COXAN_WORDS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxan/cyclotomic.hpp"
#include "coxan/exec.hpp"
#include "coxan/graph.hpp"

namespace coxan {

// Square matrix over Q(zeta_N), row major.
struct CycloMatrix {
  int n = 0;
  std::vector<Cyclo> a;

  static CycloMatrix identity(const CycloField& f, int n);
  const Cyclo& at(int r, int c) const { return a[r * n + c]; }
  Cyclo& at(int r, int c) { return a[r * n + c]; }
  CycloMatrix operator*(const CycloMatrix& o) const;
  bool operator==(const CycloMatrix& o) const { return a == o.a; }
  bool is_identity() const;
  bool is_minus_identity() const;
  std::string serialize() const;  // canonical bytes for hashing
};

// The geometric (Tits) representation of W over one cyclotomic field:
// B(v,v) = 1, B(v,w) = -cos(pi/m) on an edge of label m, -1 for non-adjacent
// pairs; the generator for v acts by x -> x - 2 B(v,x) v. It is faithful and
// exact, so matrix equality decides the word problem.
class GeometricRep {
 public:
  explicit GeometricRep(const CoxeterGraph& g);

  const CoxeterGraph& graph() const { return graph_; }
  const CycloField& field() const { return *field_; }
  int rank() const { return graph_.size(); }

  const CycloMatrix& generator(int v) const { return gens_[v]; }
  const std::vector<CycloMatrix>& generators() const { return gens_; }

  // -2 B(v, u): 2 on non-adjacent pairs, 2cos(pi/m) on an edge, -2 diagonal.
  const Cyclo& action_coeff(int v, int u) const { return t_[v * rank() + u]; }

  CycloMatrix element_matrix(const std::vector<int>& word) const;
  // Row-sparse update: matrix of generator(v) * m.
  CycloMatrix mul_generator_left(int v, const CycloMatrix& m) const;
  // Column-sparse update: matrix of m * generator(v).
  CycloMatrix mul_generator_right(const CycloMatrix& m, int v) const;

  // Coordinate vector of m * (simple root alpha_v).
  std::vector<Cyclo> apply_to_simple_root(const CycloMatrix& m, int v) const;
  // In-place generator action on a root coordinate vector.
  void apply_generator_to_root(int v, std::vector<Cyclo>& coords) const;

 private:
  CoxeterGraph graph_;
  std::unique_ptr<CycloField> field_;
  std::vector<Cyclo> t_;
  std::vector<CycloMatrix> gens_;
};

GeometricRep geometric_rep(const CoxeterGraph& g);

// An element of W: exact matrix plus a witness word evaluating to it.
struct GroupElement {
  CycloMatrix matrix;
  std::vector<int> witness_word;
};

GroupElement element_of(const GeometricRep& rep, const std::vector<int>& word);
bool equal(const GroupElement& a, const GroupElement& b);

// A root of the representation in simple-root coordinates. Every root is
// positive or negative: the nonzero coordinates share one sign.
struct Root {
  std::vector<Cyclo> coords;
  bool positive = false;
  std::string serialize() const;
};

// Word s1..sk is reduced iff each prefix s1..s_{j-1} maps alpha_{s_j} to a
// positive root; decided exactly.
bool is_reduced(const GeometricRep& rep, const std::vector<int>& word);

// The whole group as a breadth-first closure. Elements appear in discovery
// order (identity first, then by word length); the order is deterministic and
// identical for every execution policy. left_mult[s][i] is the index of
// generator(s) * element(i).
struct EnumeratedGroup {
  std::vector<GroupElement> elements;
  std::vector<std::vector<std::uint32_t>> left_mult;
  std::unordered_map<std::string, std::uint32_t> index_of;
  std::vector<std::uint32_t> inverse;
  bool complete = true;  // false for radius-limited balls

  std::size_t size() const { return elements.size(); }
  // Index of s * x.
  std::uint32_t left(int s, std::uint32_t x) const { return left_mult[s][x]; }
  // Index of (word) * x, word applied as a left product.
  std::uint32_t apply_left_word(const std::vector<int>& word, std::uint32_t x) const;
  std::uint32_t index_of_word(const std::vector<int>& word) const;
  // Index of a * s * a^{-1} for element index a and generator s.
  std::uint32_t conjugate_generator(std::uint32_t a, int s) const;
};

// Full enumeration up to `cap` elements; throws CapExceeded when the closure
// is still open at the cap. The parallel policy fans the frontier products
// out over OpenMP threads and merges through one membership set.
EnumeratedGroup enumerate_group(const GeometricRep& rep, std::size_t cap,
                                Exec exec = Exec::parallel);

// Straight-line single-threaded reference implementation kept for testing;
// must produce bit-identical results to enumerate_group.
EnumeratedGroup enumerate_group_reference(const GeometricRep& rep, std::size_t cap);

// All elements of word length <= radius (a ball, not the whole group);
// safety_cap guards runaway growth.
EnumeratedGroup enumerate_ball(const GeometricRep& rep, int radius,
                               std::size_t safety_cap, Exec exec = Exec::parallel);

// Root system closure; throws NotFiniteType past 10 |V|^2 roots.
std::vector<Root> root_system(const GeometricRep& rep);

// Longest element by greedy ascent: repeatedly right-multiply by a generator
// whose simple root is still sent positive. Requires finite type.
GroupElement longest_element(const GeometricRep& rep);

// Center oracle for finite types: the center is {1, longest} exactly when the
// longest element acts as -identity.
bool longest_element_is_minus_identity(const GeometricRep& rep);

// A reduced word for the element with the given matrix, by greedy descent.
std::vector<int> reduced_word_of(const GeometricRep& rep, const CycloMatrix& m);

// Image of a word under the retraction onto <v> * <w> =~ Z2 * Z2: letters
// outside {v, w} are deleted and adjacent duplicates cancelled, giving the
// alternating normal form. Requires v, w non-adjacent and even.
std::vector<int> retraction_image(const CoxeterGraph& g, int v, int w,
                                  const std::vector<int>& word);

// The same deletion/cancellation with no hypothesis gate; verification
// sweeps use it to expose what fails when the hypothesis is broken.
std::vector<int> retraction_image_unchecked(int v, int w, const std::vector<int>& word);

}  // namespace coxan

#endif
