#pragma once

#include <vector>

#include "isct/singularity.hpp"

namespace isct {

// A degree-d projective hypersurface of dimension n acquiring one isolated
// singular point of the given local type as the special fiber of a
// one-parameter smoothing. Whether the pair (degree, germ) is actually
// realizable by a polynomial is not checked; the family is taken as data.
struct HypersurfaceFamily {
  int n = 3;
  long long degree = 1;
  SingularityGerm germ;

  static HypersurfaceFamily make(int n, long long degree, SingularityGerm germ);
};

// Betti numbers b_0..b_2n of the smooth degree-d hypersurface in P^{n+1}:
// 1 in even degrees off the middle, 0 in odd degrees off the middle, and
// ((d-1)^{n+2} + (-1)^n (d-1))/d in the middle (+1 if n is even).
std::vector<long long> smooth_betti(int n, long long d);

// Independent check: d times the coefficient of h^n in (1+h)^{n+2}/(1+dh),
// computed by exact truncated power-series division.
long long euler_characteristic_oracle(int n, long long d);

}  // namespace isct
