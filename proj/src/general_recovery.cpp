#include "entrec/general_recovery.hpp"

#include <algorithm>
#include <optional>

#include "entrec/uniformity.hpp"

namespace entrec {
namespace {

constexpr int kMaxRounds = 32;
constexpr int kMaxHalvings = 64;

std::vector<SchmidtVector> slice_by_partition(const SchmidtVector& chi,
                                              const ConformalPartition& partition) {
  int total = 0;
  for (int d : partition.block_dims) {
    if (d < 1) fail(ErrorKind::BadPartition, "partition entries must be positive");
    total += d;
  }
  if (total != chi.dim()) {
    fail(ErrorKind::BadPartition, "partition sums to " + std::to_string(total) +
                                      " but chi has dimension " + std::to_string(chi.dim()));
  }
  std::vector<SchmidtVector> pieces;
  int begin = 0;
  for (int d : partition.block_dims) {
    std::vector<Rational> coeffs(chi.coefficients().begin() + begin,
                                 chi.coefficients().begin() + begin + d);
    pieces.emplace_back(std::move(coeffs));
    begin += d;
  }
  return pieces;
}

// l_u of a piece, or nothing for the all-zero piece (which can never beat a
// non-negative uniformity threshold).
std::optional<Rational> piece_l_u(const SchmidtVector& piece) {
  if (piece.nonzero_count() == 0) return std::nullopt;
  return indices(piece).l_u;
}

// chi_i / chi_j  dominates  phi_i / phi_j  in the extreme-ratio sense:
// chi_i (x) phi_j strictly bounds chi_j (x) phi_i.
bool segment_ratio_gt(const SchmidtVector& chi_i, const SchmidtVector& chi_j,
                      const SchmidtVector& phi_i, const SchmidtVector& phi_j) {
  return bounded_strictly(tensor(chi_j, phi_i), tensor(chi_i, phi_j));
}

Rational max_strict_gu(const NormalDecomposition& nd) {
  Rational g(0);
  for (int d : nd.D) {
    Rational gu = indices(nd.blocks[d - 1].y).g_u;
    if (gu > g) g = gu;
  }
  return g;
}

// --- construction helpers ---------------------------------------------------

SchmidtVector normalized_state(std::vector<Rational> coeffs) {
  Rational total;
  for (const Rational& c : coeffs) total += c;
  for (Rational& c : coeffs) c /= total;
  return SchmidtVector(std::move(coeffs));
}

struct RatioConstraint {
  int u, v;    // x_u < k * x_v
  Rational k;  // strictly positive
};

// Sequential assignment under pairwise multiplicative bounds: closes the
// constraint set with Floyd-Warshall, rejects cycles with product <= 1, and
// places each variable at the midpoint of its induced open interval.
std::optional<std::vector<Rational>> solve_ratio_chain(int n,
                                                       const std::vector<RatioConstraint>& cs) {
  std::vector<std::vector<std::optional<Rational>>> bound(
      n, std::vector<std::optional<Rational>>(n));
  for (const RatioConstraint& c : cs) {
    if (!bound[c.u][c.v] || c.k < *bound[c.u][c.v]) bound[c.u][c.v] = c.k;
  }
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      if (!bound[u][w]) continue;
      for (int v = 0; v < n; ++v) {
        if (!bound[w][v]) continue;
        Rational through = *bound[u][w] * *bound[w][v];
        if (u == v) {
          if (through <= Rational(1)) return std::nullopt;
          continue;
        }
        if (!bound[u][v] || through < *bound[u][v]) bound[u][v] = through;
      }
    }
  }

  std::vector<Rational> x(n);
  x[0] = Rational(1);
  for (int t = 1; t < n; ++t) {
    std::optional<Rational> lower, upper;
    for (int s = 0; s < t; ++s) {
      if (bound[s][t]) {
        Rational lo = x[s] / *bound[s][t];
        if (!lower || lo > *lower) lower = lo;
      }
      if (bound[t][s]) {
        Rational up = *bound[t][s] * x[s];
        if (!upper || up < *upper) upper = up;
      }
    }
    if (lower && upper && !(*lower < *upper)) return std::nullopt;
    if (upper) {
      x[t] = lower ? (*lower + *upper) / Rational(2) : *upper / Rational(2);
    } else {
      x[t] = lower ? *lower * Rational(2) : Rational(1);
    }
  }
  return x;
}

AuxConstruction build_delta1(const SchmidtVector& psi, const SchmidtVector& phi) {
  const auto& beta = phi.coefficients();
  const Rational b1 = beta.front(), b2 = beta[1], bn = beta.back();
  Rational scale(1);
  for (int round = 0; round < kMaxRounds; ++round, scale /= Rational(2)) {
    Rational lambda, mu;
    Rational gamma3;
    if (bn.is_zero()) {
      lambda = scale / Rational(3);
      mu = lambda;  // unused by the zero-tail shape, recorded for symmetry
      gamma3 = Rational(1, 2);
    } else {
      const Rational r = (b2 - bn) / bn;
      lambda = r / Rational(3) * scale;
      mu = r * Rational(2) / Rational(3) * scale;
      gamma3 = (Rational(1) + mu) * bn / b2;
    }
    const Rational gamma1 = (Rational(1) + lambda) * b1 / b2;
    AuxConstruction out{normalized_state({gamma1, Rational(1), gamma3}),
                        ConformalPartition{{1, 2}},
                        Scheme::Delta1,
                        {{"lambda", lambda}, {"mu", mu}},
                        false};
    if (check_per_block(psi, phi, out.chi, out.partition)) return out;
  }
  fail(ErrorKind::ConstructionFailed, "delta={1} construction did not verify");
}

AuxConstruction build_deltan1(const SchmidtVector& psi, const SchmidtVector& phi) {
  const auto& beta = phi.coefficients();
  const int n = phi.dim();
  const Rational b1 = beta.front(), bn1 = beta[n - 2], bn = beta.back();
  if (bn.is_zero()) {
    fail(ErrorKind::ConstructionFailed,
         "delta={n-1} shape requires a positive smallest target coefficient");
  }
  const Rational r = (b1 - bn1) / bn1;
  Rational scale(1);
  for (int round = 0; round < kMaxRounds; ++round, scale /= Rational(2)) {
    const Rational lambda = r / Rational(3) * scale;
    const Rational mu = r * Rational(2) / Rational(3) * scale;
    const Rational gamma2 = (Rational(1) + mu) * bn1 / b1;
    const Rational gamma3 = (Rational(1) + lambda) * bn / b1;
    AuxConstruction out{normalized_state({Rational(1), gamma2, gamma3}),
                        ConformalPartition{{2, 1}},
                        Scheme::DeltaN1,
                        {{"lambda", lambda}, {"mu", mu}},
                        false};
    if (check_per_block(psi, phi, out.chi, out.partition)) return out;
  }
  fail(ErrorKind::ConstructionFailed, "delta={n-1} construction did not verify");
}

AuxConstruction build_delta1n1(const SchmidtVector& psi, const SchmidtVector& phi) {
  const auto& beta = phi.coefficients();
  const int n = phi.dim();
  const Rational b1 = beta.front(), b2 = beta[1], bn1 = beta[n - 2], bn = beta.back();
  if (bn.is_zero()) {
    fail(ErrorKind::ConstructionFailed,
         "delta={1,n-1} shape requires a positive smallest target coefficient");
  }
  const Rational big_r = b2 / bn1;
  Rational scale(1);
  for (int round = 0; round < kMaxRounds; ++round, scale /= Rational(2)) {
    // The middle product (1+eta)(1+mu) must sit strictly between 1+lambda
    // and b2/b_{n-1}; all three shrink toward 1 together on retry.
    const Rational t = Rational(1) + (big_r - Rational(1)) / Rational(2) * scale;
    const Rational lambda = (t - Rational(1)) / Rational(2);
    const Rational mu = lambda;
    const Rational eta = (t - Rational(1)) / (Rational(1) + t);
    const Rational gamma1 = (Rational(1) + lambda) * b1 / b2;
    const Rational gamma3 = t * bn1 / b2;
    const Rational gamma4 = (Rational(1) + mu) * bn / b2;
    AuxConstruction out{normalized_state({gamma1, Rational(1), gamma3, gamma4}),
                        ConformalPartition{{1, 2, 1}},
                        Scheme::Delta1N1,
                        {{"lambda", lambda}, {"mu", mu}, {"eta", eta}},
                        false};
    if (check_per_block(psi, phi, out.chi, out.partition)) return out;
  }
  fail(ErrorKind::ConstructionFailed, "delta={1,n-1} construction did not verify");
}

AuxConstruction build_general(const SchmidtVector& psi, const SchmidtVector& phi) {
  const NormalDecomposition nd = normal_decompose(psi, phi);
  const std::vector<GroupedElement> order = natural_order(nd);
  const int q = static_cast<int>(order.size());
  const Rational g_star = max_strict_gu(nd);

  auto phi_block = [&](int b) -> const SchmidtVector& { return nd.blocks[b - 1].y; };

  for (int round = 0; round < kMaxRounds; ++round) {
    // Shared top/bottom ratio for every run piece, above every Strict
    // block's global uniformity; retries push it toward 1.
    Rational two_pow(1);
    for (int t = 0; t <= round; ++t) two_pow *= Rational(2);
    const Rational rho = Rational(1) - (Rational(1) - g_star) / (Rational(2) * two_pow);

    std::vector<RatioConstraint> cs;
    bool infeasible = false;
    for (int s = 0; s < q && !infeasible; ++s) {
      if (!order[s].equal_group) continue;
      const int i = order[s].members.front();
      for (int t = 0; t < q; ++t) {
        if (order[t].equal_group) continue;
        const auto& run = order[t].members;
        const int nearest = i < run.front() ? run.front() : run.back();
        const Rational max_i = phi_block(i).largest();
        const Rational min_i = phi_block(i).smallest();
        const Rational max_n = phi_block(nearest).largest();
        const Rational min_n = phi_block(nearest).smallest();
        if (!max_i.is_zero()) cs.push_back({t, s, max_n / max_i});
        if (min_i.is_zero()) {
          infeasible = true;  // singleton piece cannot undercut a zero block
          break;
        }
        if (!min_n.is_zero()) cs.push_back({s, t, rho * min_i / min_n});
      }
    }
    if (infeasible) {
      fail(ErrorKind::ConstructionFailed,
           "equality block with a zero coefficient admits no grouped construction");
    }
    for (int t = 0; t + 1 < q; ++t) {
      // Consecutive pieces must stay sorted across the seam.
      cs.push_back({t + 1, t, order[t].equal_group ? Rational(1) : rho});
    }

    auto solution = solve_ratio_chain(q, cs);
    if (!solution) continue;

    std::vector<Rational> coeffs;
    ConformalPartition partition;
    for (int t = 0; t < q; ++t) {
      if (order[t].equal_group) {
        coeffs.push_back((*solution)[t]);
        partition.block_dims.push_back(1);
      } else {
        coeffs.push_back((*solution)[t]);
        coeffs.push_back(rho * (*solution)[t]);
        partition.block_dims.push_back(2);
      }
    }
    AuxConstruction out{normalized_state(std::move(coeffs)), std::move(partition),
                        Scheme::General, {{"rho", rho}}, true};
    if (check_grouped(psi, phi, out.chi, out.partition)) return out;
  }
  fail(ErrorKind::ConstructionFailed, "general grouped construction did not verify");
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::Auto: return "auto";
    case Scheme::Delta1: return "delta1";
    case Scheme::DeltaN1: return "deltan1";
    case Scheme::Delta1N1: return "delta1n1";
    case Scheme::General: return "general";
  }
  return "unknown";
}

bool check_per_block(const SchmidtVector& psi, const SchmidtVector& phi,
                     const SchmidtVector& chi, const ConformalPartition& partition) {
  const NormalDecomposition nd = normal_decompose(psi, phi);
  if (static_cast<int>(partition.block_dims.size()) != nd.block_count()) {
    fail(ErrorKind::BadPartition,
         "per-block partition needs " + std::to_string(nd.block_count()) + " entries");
  }
  const std::vector<SchmidtVector> pieces = slice_by_partition(chi, partition);

  for (int i : nd.I) {
    for (int j : nd.D) {
      if (!segment_ratio_gt(pieces[i - 1], pieces[j - 1], nd.blocks[i - 1].y,
                            nd.blocks[j - 1].y)) {
        return false;
      }
    }
  }
  if (nd.D.empty()) return true;
  const Rational g_star = max_strict_gu(nd);
  for (const SchmidtVector& piece : pieces) {
    auto lu = piece_l_u(piece);
    if (!lu || !(*lu > g_star)) return false;
  }
  return true;
}

bool check_grouped(const SchmidtVector& psi, const SchmidtVector& phi,
                   const SchmidtVector& chi, const ConformalPartition& partition) {
  const NormalDecomposition nd = normal_decompose(psi, phi);
  const std::vector<GroupedElement> order = natural_order(nd);
  if (partition.block_dims.size() != order.size()) {
    fail(ErrorKind::BadPartition,
         "grouped partition needs " + std::to_string(order.size()) + " entries");
  }
  const std::vector<SchmidtVector> pieces = slice_by_partition(chi, partition);

  for (std::size_t s = 0; s < order.size(); ++s) {
    if (!order[s].equal_group) continue;
    const int i = order[s].members.front();
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (order[t].equal_group) continue;
      const auto& run = order[t].members;
      const int nearest = i < run.front() ? run.front() : run.back();
      if (!segment_ratio_gt(pieces[s], pieces[t], nd.blocks[i - 1].y,
                            nd.blocks[nearest - 1].y)) {
        return false;
      }
    }
  }

  if (!nd.D.empty()) {
    const Rational g_star = max_strict_gu(nd);
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (order[t].equal_group) continue;
      auto lu = piece_l_u(pieces[t]);
      if (!lu || !(*lu > g_star)) return false;
    }
  }

  // Equal singletons only have to beat the uniformity of the run boundaries
  // they touch.
  Rational boundary_gu(0);
  bool any_run = false;
  for (const GroupedElement& g : order) {
    if (g.equal_group) continue;
    any_run = true;
    Rational lo = indices(nd.blocks[g.members.front() - 1].y).g_u;
    Rational hi = indices(nd.blocks[g.members.back() - 1].y).g_u;
    if (lo > boundary_gu) boundary_gu = lo;
    if (hi > boundary_gu) boundary_gu = hi;
  }
  if (any_run) {
    for (std::size_t s = 0; s < order.size(); ++s) {
      if (!order[s].equal_group) continue;
      auto lu = piece_l_u(pieces[s]);
      if (!lu || !(*lu > boundary_gu)) return false;
    }
  }
  return true;
}

AuxConstruction construct_aux(const SchmidtVector& psi, const SchmidtVector& phi,
                              Scheme scheme) {
  MajorizationReport report = majorize(psi, phi);
  if (!report.majorized) fail(ErrorKind::NotMajorized, "source must be majorized by target");
  if (psi == phi) {
    fail(ErrorKind::PreconditionViolated, "identical source and target lose nothing");
  }
  if (report.delta.empty()) {
    fail(ErrorKind::NoEqualityStructure,
         "strictly majorized pair: any 2x2 state with l_u above g_u(target) works");
  }

  const int n = phi.dim();
  const std::vector<int>& delta = report.delta;
  const bool d1 = delta == std::vector<int>{1};
  const bool dn1 = delta == std::vector<int>{n - 1};
  const bool d1n1 = delta == std::vector<int>{1, n - 1};

  Scheme chosen = scheme;
  if (scheme == Scheme::Auto) {
    chosen = d1 ? Scheme::Delta1 : dn1 ? Scheme::DeltaN1 : d1n1 ? Scheme::Delta1N1
                                                                : Scheme::General;
  } else if ((scheme == Scheme::Delta1 && !d1) || (scheme == Scheme::DeltaN1 && !dn1) ||
             (scheme == Scheme::Delta1N1 && !d1n1)) {
    fail(ErrorKind::PreconditionViolated,
         "requested scheme does not match the pair's equality structure");
  }

  switch (chosen) {
    case Scheme::Delta1: return build_delta1(psi, phi);
    case Scheme::DeltaN1: return build_deltan1(psi, phi);
    case Scheme::Delta1N1: return build_delta1n1(psi, phi);
    default: return build_general(psi, phi);
  }
}

GeneralWitness witness_general(const SchmidtVector& psi, const SchmidtVector& phi,
                               const SchmidtVector& chi, const ConformalPartition& partition) {
  const NormalDecomposition nd = normal_decompose(psi, phi);
  const std::vector<GroupedElement> order = natural_order(nd);
  const int entries = static_cast<int>(partition.block_dims.size());

  // Which pieces sit on the Strict side, for either partition semantics.
  std::vector<bool> strict_side(entries, false);
  if (entries == nd.block_count()) {
    for (int d : nd.D) strict_side[d - 1] = true;
  } else if (entries == static_cast<int>(order.size())) {
    for (int t = 0; t < entries; ++t) strict_side[t] = !order[t].equal_group;
  } else {
    fail(ErrorKind::BadPartition, "partition matches neither block count nor grouped count");
  }

  std::vector<SchmidtVector> pieces = slice_by_partition(chi, partition);
  std::vector<int> offsets(entries, 0);
  for (int t = 1; t < entries; ++t) {
    offsets[t] = offsets[t - 1] + partition.block_dims[t - 1];
  }

  std::vector<int> perturbable;
  Rational epsilon;
  for (int t = 0; t < entries; ++t) {
    if (!strict_side[t]) continue;
    const Rational gap = pieces[t].largest() - pieces[t].smallest();
    if (gap.is_zero()) continue;
    perturbable.push_back(t);
    Rational start = gap / Rational(2);
    if (epsilon.is_zero() || start < epsilon) epsilon = start;
  }
  if (perturbable.empty()) {
    fail(ErrorKind::WitnessSearchFailed, "no Strict-side piece has room for a transfer");
  }

  for (int round = 0; round < kMaxHalvings; ++round) {
    std::vector<Rational> coeffs = chi.coefficients();
    for (int t : perturbable) {
      coeffs[offsets[t]] -= epsilon;
      coeffs[offsets[t] + partition.block_dims[t] - 1] += epsilon;
    }
    SchmidtVector omega{std::move(coeffs)};
    if (valid_witness(psi, phi, chi, omega)) {
      GeneralWitness out{std::move(omega), epsilon, {}};
      for (int t : perturbable) out.perturbed_pieces.push_back(t + 1);
      return out;
    }
    epsilon /= Rational(2);
  }
  fail(ErrorKind::WitnessSearchFailed,
       "no epsilon verified for the within-piece transfers");
}

}  // namespace entrec
