#include "entrec/strict_recovery.hpp"

#include <numeric>

#include "entrec/uniformity.hpp"

namespace entrec {
namespace {

constexpr int kMaxHalvings = 64;

bool is_maximally_entangled(const SchmidtVector& v) {
  return compact(v).distinct_count() == 1 && !v.largest().is_zero();
}

}  // namespace

const char* to_string(StrictCase c) {
  switch (c) {
    case StrictCase::UniformPadded: return "uniform_padded";
    case StrictCase::RatioDominates: return "ratio_dominates";
    case StrictCase::CriticalPattern: return "critical_pattern";
    case StrictCase::MaximallyEntangledAux: return "maximally_entangled_aux";
    case StrictCase::BelowThreshold: return "below_threshold";
    case StrictCase::NoPatternMatch: return "no_pattern_match";
  }
  return "unknown";
}

StrictVerdict decide_strict(const SchmidtVector& phi, const SchmidtVector& chi) {
  if (phi.nonzero_count() == 0) fail(ErrorKind::InvalidState, "target is the zero state");
  if (is_maximally_entangled(phi)) {
    fail(ErrorKind::InvalidState, "target must be partially entangled");
  }
  if (chi.nonzero_count() == 0) fail(ErrorKind::InvalidState, "auxiliary is the zero state");

  const UniformityIndices aux = indices(chi);
  StrictVerdict verdict;

  if (aux.L_u == Rational(1)) {
    // Single distinct value: nothing is more entangled than chi at its
    // own dimension.
    verdict.outcome = StrictCase::MaximallyEntangledAux;
    return verdict;
  }

  if (aux.L_u.is_zero()) {
    // chi is maximally entangled on a lower-dimensional support; recovery
    // needs enough spare zero slots, measured by the nonzero counts.
    const int a = chi.nonzero_count();
    const int n = phi.dim();
    const int n_prime = phi.nonzero_count();
    if (static_cast<long>(n) * a >= static_cast<long>(n_prime) * (a + 1)) {
      verdict.feasible = true;
      verdict.outcome = StrictCase::UniformPadded;
      verdict.detail = UniformPaddedDetail{a, n_prime, n};
    } else {
      verdict.outcome = StrictCase::BelowThreshold;
    }
    return verdict;
  }

  const Rational target_gu = indices(phi).g_u;
  if (aux.L_u > target_gu) {
    const CompactForm form = compact(chi);
    int boundary = 0;
    for (int i = 1; i < form.distinct_count(); ++i) {
      if (form.values[i] / form.values[i - 1] == aux.L_u) {
        boundary = i;
        break;
      }
    }
    verdict.feasible = true;
    verdict.outcome = StrictCase::RatioDominates;
    verdict.detail = RatioDetail{boundary};
    return verdict;
  }
  if (aux.L_u < target_gu) {
    verdict.outcome = StrictCase::BelowThreshold;
    return verdict;
  }

  if (auto match = match_critical_pattern(phi, chi)) {
    verdict.feasible = true;
    verdict.outcome = StrictCase::CriticalPattern;
    verdict.detail = *match;
  } else {
    verdict.outcome = StrictCase::NoPatternMatch;
  }
  return verdict;
}

std::optional<CriticalDetail> match_critical_pattern(const SchmidtVector& phi,
                                                     const SchmidtVector& chi) {
  const UniformityIndices aux = indices(chi);
  const Rational target_gu = indices(phi).g_u;
  if (aux.L_u != target_gu || !(aux.L_u.sign() > 0) || !(aux.L_u < Rational(1))) {
    fail(ErrorKind::PreconditionViolated,
         "critical-ratio match needs L_u(chi) = g_u(phi) strictly between 0 and 1");
  }

  const CompactForm target = compact(phi);
  if (target.distinct_count() != 2 || target.values[1].is_zero()) return std::nullopt;
  const long m_a = target.multiplicities[0];
  const long m_b = target.multiplicities[1];

  const CompactForm form = compact(chi);
  for (int b = 1; b < form.distinct_count(); ++b) {
    if (form.values[b] / form.values[b - 1] != aux.L_u) continue;
    const long k_i = form.multiplicities[b - 1];
    const long k_next = form.multiplicities[b];
    // phi must tile by a segment straddling this boundary: multiplicities
    // m_rep*(u, v) with u copies of the upper value and v of the lower.
    if (m_a <= k_i * m_b && m_b <= k_next * m_a) {
      const long g = std::gcd(m_a, m_b);
      return CriticalDetail{b, m_a / g, m_b / g, g};
    }
  }
  return std::nullopt;
}

TransferWitness witness_strict(const SchmidtVector& psi, const SchmidtVector& phi,
                               const SchmidtVector& chi, const StrictVerdict& verdict) {
  if (!verdict.feasible) {
    fail(ErrorKind::PreconditionViolated, "witness requested for an infeasible verdict");
  }
  if (!majorize(psi, phi).strict) {
    fail(ErrorKind::PreconditionViolated, "witness needs a strictly majorized source");
  }

  int i = 0, j = 0;
  switch (verdict.outcome) {
    case StrictCase::UniformPadded:
      i = 1;  // the shared positive value
      j = 2;  // the zero slot
      break;
    case StrictCase::RatioDominates:
      i = std::get<RatioDetail>(verdict.detail).boundary;
      j = i + 1;
      break;
    case StrictCase::CriticalPattern:
      i = std::get<CriticalDetail>(verdict.detail).boundary;
      j = i + 1;
      break;
    default:
      fail(ErrorKind::PreconditionViolated, "verdict carries no feasible case");
  }

  Rational epsilon = make_perturbation(chi, i, j).epsilon_max;
  for (int round = 0; round < kMaxHalvings; ++round) {
    SchmidtVector omega = perturb(chi, i, j, epsilon);
    if (valid_witness(psi, phi, chi, omega)) {
      return {std::move(omega), i, j, epsilon};
    }
    epsilon /= Rational(2);
  }
  fail(ErrorKind::WitnessSearchFailed,
       "no epsilon verified after halving from the structural bound");
}

}  // namespace entrec
