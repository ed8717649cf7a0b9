#pragma once

#include <optional>
#include <variant>

#include "entrec/order_solver.hpp"
#include "entrec/vectors.hpp"

namespace entrec {

// Outcome classes of the strict-source decision.  Feasible cases:
//   UniformPadded   — L_u(chi) = 0 (all nonzero coefficients of chi equal,
//                     padded with zeros) and n*a >= n'*(a+1);
//   RatioDominates  — g_u(phi) < L_u(chi) < 1;
//   CriticalPattern — L_u(chi) = g_u(phi) and phi repeats a two-valued
//                     segment of chi (up to normalization).
// Infeasible cases name the reason; each negative verdict rules out every
// source majorized by the target, not just strictly majorized ones.
enum class StrictCase {
  UniformPadded,
  RatioDominates,
  CriticalPattern,
  MaximallyEntangledAux,
  BelowThreshold,
  NoPatternMatch,
};

const char* to_string(StrictCase c);

struct UniformPaddedDetail {
  int a;        // nonzero coefficients of chi
  int n_prime;  // nonzero coefficients of phi
  int n;        // dimension of phi
};

struct RatioDetail {
  int boundary;  // 1-based compact position i with value(i+1)/value(i) = L_u
};

struct CriticalDetail {
  int boundary;  // as above, at the critical ratio
  long u = 0;    // phi's multiplicities are m_rep*(u, v)
  long v = 0;
  long m_rep = 0;
};

struct StrictVerdict {
  bool feasible = false;
  StrictCase outcome = StrictCase::NoPatternMatch;
  std::variant<std::monostate, UniformPaddedDetail, RatioDetail, CriticalDetail> detail;
};

// Decides whether chi can gain entanglement alongside any transformation
// whose source is strictly majorized by phi.  The answer depends only on
// (phi, chi).  phi must be partially entangled, chi not the zero state.
StrictVerdict decide_strict(const SchmidtVector& phi, const SchmidtVector& chi);

// The critical-ratio pattern test behind CriticalPattern.  Requires
// L_u(chi) = g_u(phi) in (0,1).  Matches when phi has exactly two distinct
// positive values whose multiplicities (M_a, M_b) fit some boundary of chi
// achieving the ratio: M_a <= k_i * M_b and M_b <= k_{i+1} * M_a.
std::optional<CriticalDetail> match_critical_pattern(const SchmidtVector& phi,
                                                     const SchmidtVector& chi);

// Builds a concrete witness for a feasible verdict: a single transfer on
// chi with epsilon found by halving from the structural bound, each
// candidate checked against the independent majorization test.
TransferWitness witness_strict(const SchmidtVector& psi, const SchmidtVector& phi,
                               const SchmidtVector& chi, const StrictVerdict& verdict);

}  // namespace entrec
