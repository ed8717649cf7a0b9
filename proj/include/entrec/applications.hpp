#pragma once

#include "entrec/strict_recovery.hpp"
#include "entrec/vectors.hpp"

namespace entrec {

// Admissible coefficient range for a k-dimensional auxiliary state that a
// 2x2 transformation (a,1-a) -> (b,1-b) can concentrate into the k-level
// maximally entangled state:  gamma_min <= gamma_k < gamma_1 <= gamma_max.
struct ConcentrationBounds {
  int k = 0;
  Rational gamma_min;
  Rational gamma_max;
  bool feasible = false;
};

// Requires 1/2 < a <= b <= 1 and k >= 2.  Infeasible exactly when a = b.
ConcentrationBounds concentration_bounds(const Rational& a, const Rational& b, int k);

// Exact test of psi (x) chi majorized by phi (x) (1/k, ..., 1/k).
bool verify_concentration(const SchmidtVector& psi, const SchmidtVector& phi,
                          const SchmidtVector& chi, int k);

struct MutualCatalysisReport {
  bool psi_to_phi = false;
  bool alpha_to_beta = false;
  bool joint = false;          // psi (x) alpha -> phi (x) beta
  bool trivial_cross = false;  // psi -> beta and alpha -> phi
  bool is_mutual_catalysis = false;
};

// Two individually impossible transformations that succeed jointly, with
// the trivial crossed pairing excluded.
MutualCatalysisReport mutual_catalysis_check(const SchmidtVector& psi,
                                             const SchmidtVector& phi,
                                             const SchmidtVector& alpha,
                                             const SchmidtVector& beta);

// Smallest k with L_u(chi) > g_u(phi)^k: from that many target copies on,
// chi recovers entanglement for any strictly majorized source.  Requires
// 0 < L_u(chi) < 1 and a partially entangled phi.
int multicopy_k0(const SchmidtVector& chi, const SchmidtVector& phi);

enum class MulticopyMode {
  SourceCopies,  // decide against phi^(x copies)
  AuxCopies,     // decide with chi^(x copies)
};

// Strict decision applied to tensor powers.  Requires psi strictly
// majorized by phi and copies >= 1.
StrictVerdict multicopy_recover(const SchmidtVector& psi, const SchmidtVector& phi,
                                const SchmidtVector& chi, int copies,
                                MulticopyMode mode = MulticopyMode::SourceCopies);

}  // namespace entrec
