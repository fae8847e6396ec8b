#ifndef COXAN_ORACLE_HPP
#define COXAN_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxan/classify.hpp"
#include "coxan/exec.hpp"
#include "coxan/graph.hpp"
#include "coxan/words.hpp"

namespace coxan {

// Result of one brute-force verification instance. Refutations carry a
// concrete witness that replays identically; skips carry the reason (infinite
// group / over cap), never silence.
struct VerificationOutcome {
  enum class Status { verified, refuted, skipped };

  std::string property;
  std::string instance;
  Status status = Status::verified;
  std::string witness;  // set for refuted
  std::string reason;   // set for skipped
  std::uint64_t elements_examined = 0;

  bool verified() const { return status == Status::verified; }
  std::string str() const;
};

constexpr std::size_t kDefaultCap = 10000;
constexpr int kDefaultBallRadius = 8;

// --- Sweep kernels over an enumerated group -------------------------------
// Each kernel has an OpenMP-parallel path (via Exec::parallel) and a plain
// serial reference kept for testing; results are identical sorted index sets.

// Indices of the subgroup generated by the given generator subset.
std::vector<std::uint32_t> subgroup_indices(const EnumeratedGroup& gr,
                                            const std::vector<int>& gens);

// Elements commuting with every generator (the center).
std::vector<std::size_t> center_indices(const EnumeratedGroup& gr, int rank, Exec exec);
std::vector<std::size_t> center_indices_reference(const EnumeratedGroup& gr, int rank);

// Elements normalizing the special subgroup of `clique`.
std::vector<std::size_t> normalizer_indices(const EnumeratedGroup& gr,
                                            const std::vector<int>& clique, Exec exec);
std::vector<std::size_t> normalizer_indices_reference(const EnumeratedGroup& gr,
                                                      const std::vector<int>& clique);

// Elements commuting with every generator in `clique` (the centralizer).
std::vector<std::size_t> centralizer_indices(const EnumeratedGroup& gr,
                                             const std::vector<int>& clique, Exec exec);

// --- Verification instances ------------------------------------------------

// The subgroup generated by S inside the enumerated W_g has exactly the order
// of the abstract Coxeter group of the subgraph generated by S.
VerificationOutcome verify_special_subgroup(const CoxeterGraph& g,
                                            const std::vector<int>& subset,
                                            std::size_t cap = kDefaultCap,
                                            Exec exec = Exec::parallel);

// For every maximal clique D: Nor(W_D) = W_D and the centralizer of W_D in
// W_g equals Z(W_D). Exhaustive over the enumerated group.
VerificationOutcome verify_clique_normalizer(const CoxeterGraph& g,
                                             std::size_t cap = kDefaultCap,
                                             Exec exec = Exec::parallel);

// Distinct maximal cliques generate non-conjugate special subgroups. Finite
// groups are swept exhaustively (vacuously: finite W forces a complete graph,
// hence a single maximal clique); infinite groups are swept over conjugators
// from a bounded ball, and the outcome says so.
VerificationOutcome verify_clique_conjugacy_separation(const CoxeterGraph& g,
                                                       std::size_t cap = kDefaultCap,
                                                       int ball_radius = kDefaultBallRadius,
                                                       Exec exec = Exec::parallel);

// (a) every defining relator retracts to the empty word, (b) v and w map to
// themselves, (c) conjugates of the deleted generators by ball elements
// retract to the empty word (kernel inclusion only; full kernel equality has
// no finite check). Adjacent v, w raise HypothesisViolated; a broken evenness
// hypothesis surfaces as a refutation naming the offending relator.
VerificationOutcome verify_retraction(const CoxeterGraph& g, int v, int w,
                                      bool relator_sweep = true,
                                      int ball_radius = kDefaultBallRadius,
                                      Exec exec = Exec::parallel);

// For every finite irreducible type of rank <= rank_limit: the classification
// table's center agrees with the root-system oracle (longest element acting
// as -identity), and with the exhaustive center when |W| <= 400.
VerificationOutcome verify_center_table(int rank_limit, Exec exec = Exec::parallel);

// The finite irreducible types swept by verify_center_table.
std::vector<ComponentType> finite_types_up_to_rank(int rank_limit);

}  // namespace coxan

#endif
