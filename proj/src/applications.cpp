#include "entrec/applications.hpp"

#include "entrec/uniformity.hpp"

namespace entrec {
namespace {

// Deterministic convertibility: defined only between states of equal
// dimension and equal total weight; false otherwise.
bool transformable(const SchmidtVector& x, const SchmidtVector& y) {
  if (x.dim() != y.dim() || x.sum() != y.sum()) return false;
  return majorize(x, y).majorized;
}

}  // namespace

ConcentrationBounds concentration_bounds(const Rational& a, const Rational& b, int k) {
  const Rational half(1, 2), one(1);
  if (k < 2 || !(a > half) || !(a <= b) || !(b <= one)) {
    fail(ErrorKind::BadParameters,
         "need 1/2 < a <= b <= 1 and k >= 2, got a=" + a.str() + " b=" + b.str() +
             " k=" + std::to_string(k));
  }
  ConcentrationBounds bounds;
  bounds.k = k;
  if (a == one) {  // forces b = 1; only the uniform vector fits
    bounds.gamma_min = Rational(1, k);
    bounds.gamma_max = Rational(1, k);
    bounds.feasible = false;
    return bounds;
  }
  bounds.gamma_min = (one - b) / (Rational(k) * (one - a));
  bounds.gamma_max = b / (Rational(k) * a);
  bounds.feasible = bounds.gamma_min < bounds.gamma_max;  // exactly a < b
  return bounds;
}

bool verify_concentration(const SchmidtVector& psi, const SchmidtVector& phi,
                          const SchmidtVector& chi, int k) {
  if (k < 1 || chi.dim() != k) {
    fail(ErrorKind::DimensionMismatch,
         "auxiliary state must have the requested dimension k");
  }
  std::vector<Rational> uniform(k, Rational(1, k));
  return majorize(tensor(psi, chi), tensor(phi, SchmidtVector(std::move(uniform))))
      .majorized;
}

MutualCatalysisReport mutual_catalysis_check(const SchmidtVector& psi,
                                             const SchmidtVector& phi,
                                             const SchmidtVector& alpha,
                                             const SchmidtVector& beta) {
  if (psi.dim() != phi.dim() || alpha.dim() != beta.dim()) {
    fail(ErrorKind::DimensionMismatch,
         "each transformation needs matching source/target dimensions");
  }
  MutualCatalysisReport report;
  report.psi_to_phi = transformable(psi, phi);
  report.alpha_to_beta = transformable(alpha, beta);
  report.joint = transformable(tensor(psi, alpha), tensor(phi, beta));
  report.trivial_cross = transformable(psi, beta) && transformable(alpha, phi);
  report.is_mutual_catalysis =
      !report.psi_to_phi && !report.alpha_to_beta && report.joint && !report.trivial_cross;
  return report;
}

int multicopy_k0(const SchmidtVector& chi, const SchmidtVector& phi) {
  const UniformityIndices aux = indices(chi);
  if (aux.L_u.is_zero() || aux.L_u == Rational(1)) {
    fail(ErrorKind::PreconditionViolated,
         "auxiliary needs at least two distinct nonzero coefficients");
  }
  if (compact(phi).distinct_count() == 1) {
    fail(ErrorKind::PreconditionViolated, "target must be partially entangled");
  }
  const Rational g = indices(phi).g_u;
  if (g.is_zero()) return 1;
  int k = 1;
  Rational power = g;
  while (!(aux.L_u > power)) {
    power *= g;
    ++k;
  }
  return k;
}

StrictVerdict multicopy_recover(const SchmidtVector& psi, const SchmidtVector& phi,
                                const SchmidtVector& chi, int copies, MulticopyMode mode) {
  if (copies < 1) fail(ErrorKind::BadParameters, "copies must be >= 1");
  if (!majorize(psi, phi).strict) {
    fail(ErrorKind::NotStrict, "source must be strictly majorized by target");
  }
  if (mode == MulticopyMode::SourceCopies) {
    return decide_strict(tensor_power(phi, copies), chi);
  }
  return decide_strict(phi, tensor_power(chi, copies));
}

}  // namespace entrec
