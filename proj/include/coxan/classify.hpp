#ifndef COXAN_CLASSIFY_HPP
#define COXAN_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxan/graph.hpp"

namespace coxan {

// Classification label of one irreducible component.
struct ComponentType {
  enum class Kind { Finite, Affine, OtherInfinite };

  // Finite families: A B D E F H I (I = dihedral I2(m), G2 reported as I2(6)).
  // Affine families: A B C D E F G, rendered with a leading '~'.
  Kind kind = Kind::OtherInfinite;
  char family = 0;
  int rank = 0;
  long dihedral_m = 0;       // only for I2(m)
  std::uint64_t order = 0;   // 0 encodes infinite

  bool finite() const { return kind == Kind::Finite; }
  bool affine() const { return kind == Kind::Affine; }
  std::string name() const;  // "A4", "I2(5)", "~A3", "other-infinite"

  // Whether the longest element of this finite type is central (equivalently,
  // acts as -identity): A1, B_n, D_n (n even), E7, E8, F4, H3, H4, I2(even).
  bool longest_element_central() const;

  bool operator==(const ComponentType& o) const {
    return kind == o.kind && family == o.family && rank == o.rank &&
           dihedral_m == o.dihedral_m && order == o.order;
  }
};

// Center of W_g as an elementary abelian 2-group: order 2^k where k counts the
// finite irreducible components whose longest element is central.
struct CenterDescriptor {
  std::uint64_t order = 1;
  std::vector<std::vector<std::string>> contributing_components;
  bool trivial() const { return order == 1; }
};

// Partition of the vertices under v ~ w <=> there is no edge {v,w} with label
// exactly 2. W_g is the direct product of the components' special subgroups.
// Components are listed in canonical (sorted) order.
std::vector<std::vector<int>> irreducible_components(const CoxeterGraph& g);

// Exact table match of a single irreducible component against the finite and
// affine diagram lists; anything unmatched is OtherInfinite.
ComponentType recognize_component(const CoxeterGraph& component);

struct Classification {
  std::vector<std::vector<int>> components;
  std::vector<ComponentType> types;
  bool finite = false;
  std::uint64_t order = 0;  // defined when finite
  bool virtually_abelian = false;
  bool large = false;
};

Classification classify(const CoxeterGraph& g);

bool is_finite(const CoxeterGraph& g, std::uint64_t* order = nullptr);
bool is_virtually_abelian(const CoxeterGraph& g);
bool is_large(const CoxeterGraph& g);

CenterDescriptor center(const CoxeterGraph& g);

// Serre's fixed-point property for actions on trees: holds exactly for
// complete graphs.
bool has_property_FA(const CoxeterGraph& g);

// The Coxeter graph (complete, with label-2 fill) realizing a finite or
// affine type; vertices are named s1..sk. Inverse of recognize_component,
// used by the verification sweeps.
CoxeterGraph standard_type_graph(const ComponentType& t);

// Known order of a finite family; throws OverflowError past 2^64.
std::uint64_t finite_type_order(char family, int rank, long dihedral_m);

}  // namespace coxan

#endif
