#pragma once

#include "entrec/vectors.hpp"

namespace entrec {

// Uniformity indices of a state with distinct sorted values v_1 > ... > v_m:
//   l_u = min v_{i+1}/v_i   (minimal local uniformity)
//   L_u = max v_{i+1}/v_i   (maximal local uniformity)
//   g_u = v_m / v_1         (global uniformity)
// All three lie in [0,1] and equal 1 when there is a single distinct value
// (maximally entangled, or dimension one).
struct UniformityIndices {
  Rational l_u;
  Rational L_u;
  Rational g_u;
};

// Throws ZeroState when every coefficient is zero.
UniformityIndices indices(const SchmidtVector& x);

// Entropy of entanglement, -sum c log2 c with 0 log 0 = 0.  Reporting only.
double entropy(const SchmidtVector& x);

}  // namespace entrec
