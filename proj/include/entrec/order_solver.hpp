#pragma once

#include <optional>
#include <vector>

#include "entrec/vectors.hpp"

namespace entrec {

// Single-transfer perturbation family of an auxiliary state: one copy of the
// i-th distinct value loses epsilon, one copy of the j-th gains it (i < j,
// 1-based positions in the compact form).  epsilon_max is the largest epsilon
// keeping the listed entry order intact:
//   (v_i - v_{i+1})/2                       when j = i + 1,
//   min(v_i - v_{i+1}, v_{j-1} - v_j)       otherwise.
struct PerturbationSpec {
  int i = 0;
  int j = 0;
  Rational epsilon_max;
};

PerturbationSpec make_perturbation(const SchmidtVector& chi, int i, int j);

// chi with the transfer applied: the last copy of value i decreased, the
// first copy of value j increased.  Sum preserved exactly.
SchmidtVector perturb(const SchmidtVector& chi, int i, int j, const Rational& epsilon);

// One component of phi (x) chi(i,j,eps): constant + slope * eps, with slope
// in {0, -beta_s, +beta_s}.
struct AffineEntry {
  Rational constant;
  Rational slope;

  Rational at(const Rational& epsilon) const { return constant + slope * epsilon; }
};

// The leftmost order interval (0, c1] of the arrangement: below c1 no two
// distinct affine components cross, so one descending order is valid on the
// whole interval.
struct LeftmostInterval {
  Rational c1;
  std::vector<AffineEntry> order;  // descending on (0, c1)
};

LeftmostInterval leftmost_interval(const SchmidtVector& phi, const SchmidtVector& chi,
                                   const PerturbationSpec& spec);

// Largest epsilon in (0, c1] for which psi (x) chi is majorized by
// phi (x) chi(i,j,eps); absent when no positive epsilon works.  Solutions
// are downward closed in epsilon, so searching the leftmost interval alone
// is complete for the pair.
std::optional<Rational> decide_pair(const SchmidtVector& psi, const SchmidtVector& phi,
                                    const SchmidtVector& chi, const PerturbationSpec& spec);

struct TransferWitness {
  SchmidtVector omega;
  int i = 0;
  int j = 0;
  Rational epsilon;
};

struct Algorithm2Verdict {
  bool feasible = false;
  std::optional<TransferWitness> witness;
  int pairs_examined = 0;
};

// Full decision: sweeps every distinct-value pair (i, j) of chi's compact
// form and returns the first verified single-transfer witness.
Algorithm2Verdict algorithm2(const SchmidtVector& psi, const SchmidtVector& phi,
                             const SchmidtVector& chi);

// Independent verifier: samples epsilon = delta_ij / 2^t for t = 1..grid_depth
// on every pair and tests the three witness relations by direct sorting and
// prefix comparison.  Shares no machinery with decide_pair.
bool oracle(const SchmidtVector& psi, const SchmidtVector& phi, const SchmidtVector& chi,
            int grid_depth);

}  // namespace entrec
