#ifndef COXAN_FIXTURES_HPP
#define COXAN_FIXTURES_HPP

#include <string>
#include <vector>

#include "coxan/graph.hpp"

namespace coxan {

// One bundled example graph. The corpus doubles as the test bed: the small
// groups with known structure (Sym(5), Z2^4 x| Sym(4), free products of Z2,
// affine squares) plus the edge cases the analyzer has to get right.
struct Fixture {
  std::string name;         // basename without extension
  std::string description;  // what the group is
  std::string cox_text;     // .cox file body
};

const std::vector<Fixture>& all_fixtures();
const Fixture& fixture(const std::string& name);  // throws ParseError if absent
CoxeterGraph fixture_graph(const std::string& name);

}  // namespace coxan

#endif
