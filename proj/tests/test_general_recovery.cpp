#include <doctest.h>

#include "entrec/general_recovery.hpp"
#include "entrec/uniformity.hpp"
#include "support/generators.hpp"

using namespace entrec;
using testgen::Rng;

namespace {

SchmidtVector st(const std::vector<std::string>& raw, bool normalized = true) {
  return SchmidtVector::parse(raw, static_cast<int>(raw.size()), normalized);
}

// Equality pattern {1} against phi = (2/5, 3/10, 1/5, 1/10).
const std::vector<std::string> kPhi4{"2/5", "3/10", "1/5", "1/10"};
const std::vector<std::string> kPsiDelta1{"2/5", "29/100", "1/5", "11/100"};

}  // namespace

TEST_CASE("per-block checker on the 3x3 shape") {
  SchmidtVector psi = st(kPsiDelta1), phi = st(kPhi4);
  REQUIRE(majorize(psi, phi).delta == std::vector<int>{1});

  AuxConstruction c = construct_aux(psi, phi);
  CHECK(c.scheme == Scheme::Delta1);
  CHECK(c.chi.dim() == 3);
  CHECK(c.partition.block_dims == std::vector<int>{1, 2});
  CHECK(check_per_block(psi, phi, c.chi, c.partition));

  // The ratio fences of the construction.
  const auto& g = c.chi.coefficients();
  CHECK(g[0] / g[1] > Rational(4, 3));
  CHECK(g[0] / g[2] < Rational(4));
  CHECK(g[2] / g[1] > Rational(1, 3));

  // A state sitting exactly on the first fence fails the strict test.
  SchmidtVector flat = st({"2/5", "3/10", "3/10"});
  CHECK_FALSE(check_per_block(psi, phi, flat, ConformalPartition{{1, 2}}));

  // Single strict block: only the uniformity inequality remains.
  SchmidtVector psi_strict = st({"39/100", "3/10", "1/5", "11/100"});
  REQUIRE(majorize(psi_strict, phi).strict);
  Rng rng(1);
  SchmidtVector uniform_chi = testgen::rand_more_uniform_than(rng, 4, indices(phi).g_u);
  CHECK(check_per_block(psi_strict, phi, uniform_chi, ConformalPartition{{4}}));

  CHECK_THROWS_AS(check_per_block(psi, phi, st({"1/2", "1/2"}), ConformalPartition{{1, 2}}),
                  Error);
  CHECK_THROWS_AS(check_per_block(psi, phi, flat, ConformalPartition{{1, 1, 1}}), Error);
}

TEST_CASE("construction for the dual and double-equality shapes") {
  SchmidtVector phi = st(kPhi4);

  SchmidtVector psi_tail = st({"39/100", "3/10", "21/100", "1/10"});
  REQUIRE(majorize(psi_tail, phi).delta == std::vector<int>{3});
  AuxConstruction tail = construct_aux(psi_tail, phi);
  CHECK(tail.scheme == Scheme::DeltaN1);
  CHECK(tail.chi.dim() == 3);
  CHECK(check_per_block(psi_tail, phi, tail.chi, tail.partition));

  SchmidtVector psi_both = st({"2/5", "29/100", "21/100", "1/10"});
  REQUIRE(majorize(psi_both, phi).delta == std::vector<int>{1, 3});
  AuxConstruction both = construct_aux(psi_both, phi);
  CHECK(both.scheme == Scheme::Delta1N1);
  CHECK(both.chi.dim() == 4);
  CHECK(both.partition.block_dims == std::vector<int>{1, 2, 1});
  CHECK(check_per_block(psi_both, phi, both.chi, both.partition));
}

TEST_CASE("grouped checker and the five-dimensional construction") {
  Rng rng(401);
  SchmidtVector phi = testgen::rand_distinct_state(rng, 7);
  SchmidtVector psi = testgen::with_delta_pattern(rng, phi, {2, 3, 5});
  REQUIRE(majorize(psi, phi).delta == std::vector<int>{2, 3, 5});

  AuxConstruction c = construct_aux(psi, phi);
  CHECK(c.scheme == Scheme::General);
  CHECK(c.chi.dim() == 5);  // |I'| + 2|D'| = 1 + 4
  CHECK(c.partition.block_dims == std::vector<int>{2, 1, 2});
  CHECK(check_grouped(psi, phi, c.chi, c.partition));

  // Breaking the run uniformity condition must fail the checker: collapse
  // the last run piece to a sharp 10:1 ratio.
  std::vector<Rational> bad = c.chi.coefficients();
  bad[4] = bad[3] / Rational(10);
  CHECK_FALSE(check_grouped(psi, phi, SchmidtVector(bad), c.partition));

  CHECK_THROWS_AS(check_grouped(psi, phi, c.chi, ConformalPartition{{1, 1, 1, 1, 1}}), Error);
}

TEST_CASE("strict pairs admit any sufficiently uniform 2x2 auxiliary") {
  Rng rng(409);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testgen::rand_int(rng, 4, 6);
    SchmidtVector phi = testgen::rand_distinct_state(rng, n);
    SchmidtVector psi = testgen::with_delta_pattern(rng, phi, {2});
    REQUIRE(majorize(psi, phi).delta == std::vector<int>{2});

    // I is empty: the grouped form needs a single 2-dim piece whose l_u
    // clears every strict block's g_u.
    NormalDecomposition nd = normal_decompose(psi, phi);
    REQUIRE(nd.I.empty());
    Rational worst(0);
    for (int d : nd.D) {
      Rational gu = indices(nd.blocks[d - 1].y).g_u;
      if (gu > worst) worst = gu;
    }
    SchmidtVector chi = testgen::rand_more_uniform_than(rng, 2, worst);
    CHECK(check_grouped(psi, phi, chi, ConformalPartition{{2}}));

    AuxConstruction c = construct_aux(psi, phi);
    CHECK(c.chi.dim() == 2);
    CHECK(check_grouped(psi, phi, c.chi, c.partition));
  }
}

TEST_CASE("construct_aux error paths") {
  SchmidtVector phi = st(kPhi4);
  SchmidtVector psi_strict = st({"39/100", "3/10", "1/5", "11/100"});
  REQUIRE(majorize(psi_strict, phi).strict);
  CHECK_THROWS_AS(construct_aux(psi_strict, phi), Error);             // delta empty
  CHECK_THROWS_AS(construct_aux(phi, phi), Error);                    // nothing lost
  CHECK_THROWS_AS(construct_aux(st(kPsiDelta1), phi, Scheme::DeltaN1), Error);
}

TEST_CASE("witnesses move weight inside strict-side pieces") {
  SchmidtVector phi = st(kPhi4);

  SchmidtVector psi = st(kPsiDelta1);
  AuxConstruction c = construct_aux(psi, phi);
  GeneralWitness w = witness_general(psi, phi, c.chi, c.partition);
  CHECK(valid_witness(psi, phi, c.chi, w.omega));
  CHECK(w.perturbed_pieces == std::vector<int>{2});
  const auto& g = c.chi.coefficients();
  CHECK(w.omega == SchmidtVector({g[0], g[1] - w.epsilon, g[2] + w.epsilon}));

  SchmidtVector psi_tail = st({"39/100", "3/10", "21/100", "1/10"});
  AuxConstruction tail = construct_aux(psi_tail, phi);
  GeneralWitness wt = witness_general(psi_tail, phi, tail.chi, tail.partition);
  CHECK(wt.perturbed_pieces == std::vector<int>{1});
  const auto& gt = tail.chi.coefficients();
  CHECK(wt.omega == SchmidtVector({gt[0] - wt.epsilon, gt[1] + wt.epsilon, gt[2]}));

  SchmidtVector psi_both = st({"2/5", "29/100", "21/100", "1/10"});
  AuxConstruction both = construct_aux(psi_both, phi);
  GeneralWitness wb = witness_general(psi_both, phi, both.chi, both.partition);
  CHECK(wb.perturbed_pieces == std::vector<int>{2});
  const auto& gb = both.chi.coefficients();
  CHECK(wb.omega == SchmidtVector({gb[0], gb[1] - wb.epsilon, gb[2] + wb.epsilon, gb[3]}));
}

TEST_CASE("arbitrary equality shapes either construct or fail loudly") {
  Rng rng(431);
  int built = 0, refused = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int dim = testgen::rand_int(rng, 2, 7);
    SchmidtVector phi = testgen::rand_state(rng, dim, trial % 5 == 0);
    SchmidtVector psi = testgen::rand_majorized_below(rng, phi);
    if (psi == phi) continue;

    try {
      AuxConstruction c = construct_aux(psi, phi);
      const bool checked = c.grouped ? check_grouped(psi, phi, c.chi, c.partition)
                                     : check_per_block(psi, phi, c.chi, c.partition);
      CHECK(checked);
      GeneralWitness w = witness_general(psi, phi, c.chi, c.partition);
      CHECK(valid_witness(psi, phi, c.chi, w.omega));
      ++built;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoEqualityStructure) continue;  // strict pair, out of scope
      CHECK(e.kind() == ErrorKind::ConstructionFailed);
      ++refused;
    }
  }
  CHECK(built >= 30);
  // Honest refusals (zero blocks, unsatisfiable shapes) must stay the
  // minority among in-scope inputs.
  CHECK(built > refused);
}

TEST_CASE("constructors verify across random equality shapes") {
  Rng rng(419);
  const std::vector<std::vector<int>> patterns{{1}, {-1}, {1, -1}, {2, 3, 5}};
  for (int trial = 0; trial < 40; ++trial) {
    const auto& raw = patterns[trial % patterns.size()];
    const int n = testgen::rand_int(rng, raw == std::vector<int>{2, 3, 5} ? 7 : 4, 8);
    std::vector<int> delta;
    for (int p : raw) delta.push_back(p > 0 ? p : n + p);  // -1 means n-1
    SchmidtVector phi = testgen::rand_distinct_state(rng, n);
    SchmidtVector psi = testgen::with_delta_pattern(rng, phi, delta);
    if (majorize(psi, phi).delta != delta) continue;

    AuxConstruction c = construct_aux(psi, phi);
    const bool checked = c.grouped ? check_grouped(psi, phi, c.chi, c.partition)
                                   : check_per_block(psi, phi, c.chi, c.partition);
    CHECK(checked);
    GeneralWitness w = witness_general(psi, phi, c.chi, c.partition);
    CHECK(valid_witness(psi, phi, c.chi, w.omega));
  }
}
