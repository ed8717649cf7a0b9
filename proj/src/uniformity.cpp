#include "entrec/uniformity.hpp"

#include <cmath>

namespace entrec {

UniformityIndices indices(const SchmidtVector& x) {
  const CompactForm form = compact(x);
  if (form.values.front().is_zero()) {
    fail(ErrorKind::ZeroState, "uniformity indices of the zero state are undefined");
  }
  if (form.distinct_count() == 1) {
    return {Rational(1), Rational(1), Rational(1)};
  }
  // Successive-distinct ratios; a trailing zero contributes ratio 0.
  Rational lo = form.values[1] / form.values[0];
  Rational hi = lo;
  for (int i = 2; i < form.distinct_count(); ++i) {
    Rational r = form.values[i] / form.values[i - 1];
    if (r < lo) lo = r;
    if (r > hi) hi = r;
  }
  Rational global = form.values.back() / form.values.front();
  return {lo, hi, global};
}

double entropy(const SchmidtVector& x) {
  double e = 0.0;
  for (const Rational& c : x.coefficients()) {
    if (c.is_zero()) continue;
    double p = c.to_double();
    e -= p * std::log2(p);
  }
  return e;
}

}  // namespace entrec
