// Compares the serial reference kernels against the OpenMP ones on a few
// mid-sized groups and reports timings. Results are checked for equality;
// a mismatch is a hard failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "coxan/classify.hpp"
#include "coxan/oracle.hpp"
#include "coxan/words.hpp"

using namespace coxan;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

struct Case {
  std::string name;
  CoxeterGraph graph;
};

int failures = 0;

void bench_enumeration(const Case& c, std::size_t cap) {
  GeometricRep rep(c.graph);

  auto t0 = std::chrono::steady_clock::now();
  EnumeratedGroup ref = enumerate_group_reference(rep, cap);
  double t_ref = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  EnumeratedGroup ser = enumerate_group(rep, cap, Exec::serial);
  double t_ser = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  EnumeratedGroup par = enumerate_group(rep, cap, Exec::parallel);
  double t_par = ms_since(t0);

  bool ok = ref.size() == par.size() && ser.size() == par.size();
  for (std::size_t i = 0; ok && i < ref.size(); ++i)
    ok = ref.elements[i].matrix == par.elements[i].matrix &&
         ser.elements[i].witness_word == par.elements[i].witness_word;
  if (!ok) ++failures;

  std::printf("%-28s %8zu elems  ref %8.1f ms  serial %8.1f ms  omp %8.1f ms  x%.2f  %s\n",
              ("enumerate " + c.name).c_str(), par.size(), t_ref, t_ser, t_par,
              t_par > 0 ? t_ser / t_par : 0.0, ok ? "equal" : "MISMATCH");
}

void bench_sweeps(const Case& c, std::size_t cap) {
  GeometricRep rep(c.graph);
  EnumeratedGroup gr = enumerate_group(rep, cap, Exec::parallel);

  auto t0 = std::chrono::steady_clock::now();
  auto z_ref = center_indices_reference(gr, rep.rank());
  double t_ref = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto z_par = center_indices(gr, rep.rank(), Exec::parallel);
  double t_par = ms_since(t0);
  bool ok = z_ref == z_par;
  if (!ok) ++failures;
  std::printf("%-28s %8zu elems  ref %8.1f ms  omp %8.1f ms  x%.2f  %s\n",
              ("center sweep " + c.name).c_str(), gr.size(), t_ref, t_par,
              t_par > 0 ? t_ref / t_par : 0.0, ok ? "equal" : "MISMATCH");

  const auto cliques = maximal_cliques(c.graph);
  if (!cliques.empty()) {
    const auto& cl = cliques.front().vertices;
    t0 = std::chrono::steady_clock::now();
    auto n_ref = normalizer_indices_reference(gr, cl);
    t_ref = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto n_par = normalizer_indices(gr, cl, Exec::parallel);
    t_par = ms_since(t0);
    ok = n_ref == n_par;
    if (!ok) ++failures;
    std::printf("%-28s %8zu elems  ref %8.1f ms  omp %8.1f ms  x%.2f  %s\n",
                ("normalizer sweep " + c.name).c_str(), gr.size(), t_ref, t_par,
                t_par > 0 ? t_ref / t_par : 0.0, ok ? "equal" : "MISMATCH");
  }
}

CoxeterGraph type_graph(char fam, int rank, long m = 0) {
  ComponentType t;
  t.kind = ComponentType::Kind::Finite;
  t.family = fam;
  t.rank = rank;
  t.dihedral_m = m;
  t.order = finite_type_order(fam, rank, m);
  return standard_type_graph(t);
}

}  // namespace

int main() {
  std::vector<Case> cases = {
      {"B4 (384)", type_graph('B', 4)},
      {"D5 (1920)", type_graph('D', 5)},
      {"A6 (5040)", type_graph('A', 6)},
  };
  for (const Case& c : cases) bench_enumeration(c, 20000);
  for (const Case& c : cases) bench_sweeps(c, 20000);
  if (failures) {
    std::printf("%d kernel mismatches\n", failures);
    return 1;
  }
  std::printf("all kernels agree\n");
  return 0;
}
