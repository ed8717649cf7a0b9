#include "entrec/order_solver.hpp"

#include <algorithm>
#include <string>

namespace entrec {
namespace {

// Listed (still sorted) entries of chi(i,j,eps) as affine functions of eps.
// Only one copy of each perturbed value carries a slope.
std::vector<AffineEntry> perturbed_entries(const CompactForm& form, int i, int j) {
  std::vector<AffineEntry> entries;
  for (int v = 1; v <= form.distinct_count(); ++v) {
    const Rational& value = form.values[v - 1];
    const int mult = form.multiplicities[v - 1];
    for (int c = 0; c < mult; ++c) {
      Rational slope;
      if (v == i && c == mult - 1) slope = Rational(-1);
      if (v == j && c == 0) slope = Rational(1);
      entries.push_back({value, slope});
    }
  }
  return entries;
}

void check_pair_indices(const CompactForm& form, int i, int j) {
  if (i < 1 || j <= i || j > form.distinct_count()) {
    fail(ErrorKind::BadPair, "invalid distinct-value pair (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") for " +
                                 std::to_string(form.distinct_count()) + " distinct values");
  }
}

}  // namespace

PerturbationSpec make_perturbation(const SchmidtVector& chi, int i, int j) {
  const CompactForm form = compact(chi);
  check_pair_indices(form, i, j);
  Rational delta;
  if (j == i + 1) {
    delta = (form.values[i - 1] - form.values[j - 1]) / Rational(2);
  } else {
    Rational gap_i = form.values[i - 1] - form.values[i];
    Rational gap_j = form.values[j - 2] - form.values[j - 1];
    delta = gap_i < gap_j ? gap_i : gap_j;
  }
  return {i, j, delta};
}

SchmidtVector perturb(const SchmidtVector& chi, int i, int j, const Rational& epsilon) {
  const CompactForm form = compact(chi);
  check_pair_indices(form, i, j);
  const PerturbationSpec spec = make_perturbation(chi, i, j);
  if (epsilon.sign() < 0 || epsilon > spec.epsilon_max) {
    fail(ErrorKind::EpsilonOutOfRange,
         "epsilon " + epsilon.str() + " outside [0, " + spec.epsilon_max.str() + "]");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(chi.dim());
  for (const AffineEntry& e : perturbed_entries(form, i, j)) coeffs.push_back(e.at(epsilon));
  return SchmidtVector(std::move(coeffs));
}

LeftmostInterval leftmost_interval(const SchmidtVector& phi, const SchmidtVector& chi,
                                   const PerturbationSpec& spec) {
  const CompactForm form = compact(chi);
  check_pair_indices(form, spec.i, spec.j);

  std::vector<AffineEntry> entries;
  entries.reserve(static_cast<std::size_t>(phi.dim()) * chi.dim());
  for (const Rational& beta : phi.coefficients()) {
    for (const AffineEntry& e : perturbed_entries(form, spec.i, spec.j)) {
      entries.push_back({beta * e.constant, beta * e.slope});
    }
  }

  // Crossings of two affine components land at (A1-A2)/(B2-B1); only roots
  // inside (0, delta] shrink the interval.
  Rational c1 = spec.epsilon_max;
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (entries[a].slope == entries[b].slope) continue;
      Rational theta =
          (entries[a].constant - entries[b].constant) / (entries[b].slope - entries[a].slope);
      if (theta.sign() > 0 && theta < c1) c1 = theta;
    }
  }

  // Ties at eps = 0 are broken by evaluating in the interior; entries equal
  // at c1/2 are identical functions (a crossing below c1 would contradict
  // c1 being minimal).
  const Rational probe = c1 / Rational(2);
  std::sort(entries.begin(), entries.end(), [&](const AffineEntry& a, const AffineEntry& b) {
    return a.at(probe) > b.at(probe);
  });
  return {c1, std::move(entries)};
}

std::optional<Rational> decide_pair(const SchmidtVector& psi, const SchmidtVector& phi,
                                    const SchmidtVector& chi, const PerturbationSpec& spec) {
  if (!majorize(psi, phi).majorized) {
    fail(ErrorKind::NotMajorized, "source must be majorized by target");
  }
  const LeftmostInterval interval = leftmost_interval(phi, chi, spec);
  const SchmidtVector source = tensor(psi, chi);

  // Prefix constraints A_l + B_l eps >= C_l on (0, c1].  A_l = C_l demands a
  // non-negative slope; A_l > C_l with a negative slope caps eps.
  Rational bound = interval.c1;
  Rational a_l, b_l, c_l;
  const int total = source.dim();
  for (int l = 1; l <= total; ++l) {
    a_l += interval.order[l - 1].constant;
    b_l += interval.order[l - 1].slope;
    c_l += source[l - 1];
    if (a_l < c_l) return std::nullopt;
    if (a_l == c_l) {
      if (b_l.sign() < 0) return std::nullopt;
      continue;
    }
    if (b_l.sign() < 0) {
      Rational cap = (a_l - c_l) / (-b_l);
      if (cap < bound) bound = cap;
    }
  }
  return bound;
}

Algorithm2Verdict algorithm2(const SchmidtVector& psi, const SchmidtVector& phi,
                             const SchmidtVector& chi) {
  if (!majorize(psi, phi).majorized) {
    fail(ErrorKind::NotMajorized, "source must be majorized by target");
  }
  Algorithm2Verdict verdict;
  const int distinct = compact(chi).distinct_count();
  for (int i = 1; i <= distinct && !verdict.feasible; ++i) {
    for (int j = i + 1; j <= distinct && !verdict.feasible; ++j) {
      ++verdict.pairs_examined;
      const PerturbationSpec spec = make_perturbation(chi, i, j);
      if (auto epsilon = decide_pair(psi, phi, chi, spec)) {
        SchmidtVector omega = perturb(chi, i, j, *epsilon);
        if (!valid_witness(psi, phi, chi, omega)) {
          fail(ErrorKind::WitnessSearchFailed,
               "pair sweep produced epsilon that fails independent verification");
        }
        verdict.feasible = true;
        verdict.witness = TransferWitness{std::move(omega), i, j, *epsilon};
      }
    }
  }
  return verdict;
}

bool oracle(const SchmidtVector& psi, const SchmidtVector& phi, const SchmidtVector& chi,
            int grid_depth) {
  if (!majorize(psi, phi).majorized) {
    fail(ErrorKind::NotMajorized, "source must be majorized by target");
  }
  const int distinct = compact(chi).distinct_count();
  for (int i = 1; i <= distinct; ++i) {
    for (int j = i + 1; j <= distinct; ++j) {
      Rational epsilon = make_perturbation(chi, i, j).epsilon_max;
      for (int t = 1; t <= grid_depth; ++t) {
        epsilon /= Rational(2);
        if (valid_witness(psi, phi, chi, perturb(chi, i, j, epsilon))) return true;
      }
    }
  }
  return false;
}

}  // namespace entrec
