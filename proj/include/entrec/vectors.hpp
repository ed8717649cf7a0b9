#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entrec/rational.hpp"

namespace entrec {

class SchmidtVector;

// Run-length encoding of a sorted coefficient vector: strictly decreasing
// values with their multiplicities.  Unique for a fixed dimension.
struct CompactForm {
  std::vector<Rational> values;
  std::vector<int> multiplicities;

  int distinct_count() const { return static_cast<int>(values.size()); }
  SchmidtVector expand() const;
};

// Ordered Schmidt coefficient vector: exact non-negative rationals stored
// non-increasingly.  The dimension is explicit — trailing zeros are kept,
// and appending a zero yields a different vector.  Values are immutable
// after construction; every operation below is a pure function.
class SchmidtVector {
 public:
  // Sorts into non-increasing order; rejects negative coefficients.
  explicit SchmidtVector(std::vector<Rational> coefficients);

  // Builds from decimal/fraction literals.  `dimension` must match the
  // number of strings; with `normalized` set, the exact sum must be 1.
  static SchmidtVector parse(const std::vector<std::string>& raw, int dimension,
                             bool normalized = true);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](int index) const { return coeffs_[index]; }  // 0-based

  const Rational& largest() const { return coeffs_.front(); }
  const Rational& smallest() const { return coeffs_.back(); }

  Rational sum() const;
  bool is_normalized() const { return sum() == Rational(1); }

  // e_m: exact sum of the m largest coefficients, 1 <= m <= dim.
  Rational prefix_sum(int m) const;

  int nonzero_count() const;

  friend bool operator==(const SchmidtVector& a, const SchmidtVector& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SchmidtVector& a, const SchmidtVector& b) {
    return !(a == b);
  }

 private:
  std::vector<Rational> coeffs_;  // sorted non-increasing
};

struct MajorizationReport {
  bool majorized = false;
  bool strict = false;
  std::vector<int> delta;                  // m in 1..n-1 with e_m(x) = e_m(y)
  std::optional<int> first_violation;      // first m with e_m(x) > e_m(y)
};

CompactForm compact(const SchmidtVector& x);

SchmidtVector tensor(const SchmidtVector& x, const SchmidtVector& y);
SchmidtVector tensor_power(const SchmidtVector& x, int m);
SchmidtVector direct_sum(const SchmidtVector& x, const SchmidtVector& y);

// x majorized by y: every prefix sum of x is <= the matching prefix sum of y
// and the totals agree exactly.  Requires equal dimensions and equal sums.
MajorizationReport majorize(const SchmidtVector& x, const SchmidtVector& y);

// x below y in the extreme-component order: largest(x) < largest(y) and
// smallest(x) > smallest(y).
bool bounded_strictly(const SchmidtVector& x, const SchmidtVector& y);

// Euclidean distance of the sorted vectors.  Diagnostics only; this is the
// one floating-point value in the module and never feeds a decision.
double distance(const SchmidtVector& x, const SchmidtVector& y);

// The three relations a recovery witness must satisfy.
bool valid_witness(const SchmidtVector& psi, const SchmidtVector& phi,
                   const SchmidtVector& chi, const SchmidtVector& omega);

}  // namespace entrec
