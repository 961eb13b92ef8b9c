#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isct/hypersurface.hpp"
#include "isct/singularity.hpp"
#include "isct/zigzag.hpp"

namespace isct {

// Betti numbers of the intersection space: the smooth-fiber numbers with
// rank(T_x - 1) subtracted in the middle degree and degree 2n zeroed.
std::vector<long long> hi_betti(const HypersurfaceFamily& family);

// Hypercohomology of the intersection-space complex: as hi_betti but with a
// one-dimensional contribution in degree 2n; palindromic.
std::vector<long long> is_hypercohomology(const HypersurfaceFamily& family);

// (b_{n-1}(L), b_n(L)) for the link L: both equal dim ker(T_x - 1),
// computed as mu - rank(T_x - 1).
std::pair<long long, long long> link_middle_betti(const MonodromyData& md);

// Betti numbers of the Milnor fiber over degrees 0..n: a bouquet of mu
// n-spheres.
std::vector<long long> fiber_betti(const MonodromyData& md, int n);

// Stalk cohomology of the intersection-space complex.
struct StalkTable {
  int n = 3;
  // At the singular point: dimension 1 in degree -n, mult_one in degree 0.
  std::map<int, long long> singular_point;
  // At a smooth point: dimension 1 in degree -n.
  std::map<int, long long> smooth_point;
};

StalkTable stalk_table(const MonodromyData& md, int n);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckSelection {
  bool exactness = false;
  bool splitting = false;
  bool self_duality = false;
  bool poincare = false;
  bool oracles = false;

  static CheckSelection all() { return {true, true, true, true, true}; }
  bool any() const {
    return exactness || splitting || self_duality || poincare || oracles;
  }
};

struct InvariantReport {
  HypersurfaceFamily family;
  MonodromyData monodromy;
  std::vector<long long> smooth;
  std::vector<long long> hi;
  std::vector<long long> is_hyper;
  std::pair<long long, long long> link{0, 0};
  std::vector<long long> fiber;
  StalkTable stalks;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Runs every computation and the selected verification checks, recording a
// pass/fail verdict per check; a failed verdict is reported, never dropped.
InvariantReport assemble_report(const HypersurfaceFamily& family,
                                const CheckSelection& selection = CheckSelection::all());

}  // namespace isct
