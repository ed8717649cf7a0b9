#pragma once

#include <string>
#include <utility>
#include <vector>

#include "entrec/decomposition.hpp"
#include "entrec/vectors.hpp"

namespace entrec {

// Dimensions assigned to the pieces of an auxiliary state, one entry per
// block (per-block checker) or per grouped element in natural order
// (grouped checker).  Entries are positive and sum to dim(chi).
struct ConformalPartition {
  std::vector<int> block_dims;
};

// Sufficient condition with one chi piece per normal-decomposition block:
// every Equal/Strict pair must satisfy the extreme-ratio dominance
//   chi^i (x) phi^j  strictly bounded inside  chi^j (x) phi^i  reversed,
// and the least l_u over all chi pieces must exceed the largest g_u over
// the Strict target blocks.  A false result is inconclusive, not a proof
// of infeasibility.
bool check_per_block(const SchmidtVector& psi, const SchmidtVector& phi,
                     const SchmidtVector& chi, const ConformalPartition& partition);

// Variant with one chi piece per grouped element (runs of consecutive
// Strict blocks share a single piece), which cuts the needed dimension to
// |I'| + 2|D'|.  Ratio conditions compare each Equal singleton against the
// nearest block of every run.
bool check_grouped(const SchmidtVector& psi, const SchmidtVector& phi,
                   const SchmidtVector& chi, const ConformalPartition& partition);

enum class Scheme { Auto, Delta1, DeltaN1, Delta1N1, General };

const char* to_string(Scheme s);

struct AuxConstruction {
  SchmidtVector chi;
  ConformalPartition partition;
  Scheme scheme;
  std::vector<std::pair<std::string, Rational>> slacks;
  bool grouped;  // which checker the partition is meant for
};

// Builds an auxiliary state for the equality structure of psi -> phi:
//   delta = {1}      3x3 state            (Scheme::Delta1)
//   delta = {n-1}    3x3 state            (Scheme::DeltaN1)
//   delta = {1,n-1}  4x4 state            (Scheme::Delta1N1)
//   anything else    |I'| + 2|D'| state   (Scheme::General)
// Slack parameters start at midpoints of their open ranges and halve on
// checker failure (32 rounds).  Throws NoEqualityStructure when the pair is
// strictly majorized (use the strict decision instead) and
// ConstructionFailed when the inequality system has no solution.
AuxConstruction construct_aux(const SchmidtVector& psi, const SchmidtVector& phi,
                              Scheme scheme = Scheme::Auto);

struct GeneralWitness {
  SchmidtVector omega;
  Rational epsilon;
  std::vector<int> perturbed_pieces;  // 1-based positions in the partition
};

// Witness for a pair accepted by one of the checkers: chi is kept on the
// Equal side and each Strict-side piece moves epsilon from its largest to
// its smallest entry, preserving piece sums.  The partition's semantics
// (per-block vs grouped) is inferred from its length.
GeneralWitness witness_general(const SchmidtVector& psi, const SchmidtVector& phi,
                               const SchmidtVector& chi, const ConformalPartition& partition);

}  // namespace entrec
