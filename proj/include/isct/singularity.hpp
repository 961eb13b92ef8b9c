#pragma once

#include <map>
#include <vector>

#include "isct/matrix.hpp"
#include "isct/rational.hpp"

namespace isct {

// Local description of the isolated weighted-homogeneous singular point.
// Brieskorn-Pham germs x_0^{a_0} + ... + x_n^{a_n} carry the full
// combinatorial monodromy data; general weighted-homogeneous germs only
// support the Milnor number.
struct SingularityGerm {
  enum class Kind { brieskorn_pham, weighted_homogeneous };

  Kind kind = Kind::brieskorn_pham;
  std::vector<long long> exponents;  // brieskorn_pham: a_i >= 2
  std::vector<long long> weights;    // weighted_homogeneous: 1 <= w_i < wdegree
  long long wdegree = 0;

  // Complex dimension of the hypersurface germ: variables minus one. Kept
  // >= 3 so the link of the singular point is simply-connected.
  int n() const;

  static SingularityGerm brieskorn_pham(std::vector<long long> exps);
  static SingularityGerm weighted_homogeneous(std::vector<long long> ws,
                                              long long wdeg);
};

// Milnor number by the weighted-homogeneous product formula:
// prod (d - w_i)/w_i, or prod (a_i - 1) in Brieskorn-Pham form. Rejects
// weight data for which the product is not an integer.
long long milnor_number_wh(const SingularityGerm& germ);

// Independent brute-force oracle for Brieskorn-Pham germs: counts the
// monomial basis of the Jacobian quotient algebra, i.e. lattice points
// 0 <= e_i <= a_i - 2, one by one.
long long milnor_number_bp_oracle(const std::vector<long long>& exponents);

// Monodromy eigenvalues of a Brieskorn-Pham germ as residues in [0,1):
// the multiset { frac(sum j_i/a_i) : 1 <= j_i <= a_i - 1 }, sorted
// ascending. Each residue r stands for the eigenvalue e^{2 pi i r}.
std::vector<Rational> bp_eigenvalue_residues(const std::vector<long long>& exponents);

// Groups an eigenvalue multiset into rational irreducible factors: the map
// m -> e_m with char(T) = prod Phi_m^{e_m}. Requires every primitive
// residue k/m (gcd(k,m) = 1) to occur with one common multiplicity; a
// Galois-orbit imbalance means the multiset is not defined over Q.
std::map<long long, long long> cyclotomic_factorization(
    const std::vector<Rational>& residues);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
std::vector<Integer> cyclotomic_polynomial(long long m);

long long euler_phi(long long m);

// Rational model of the monodromy operator: block diagonal with e_m
// companion blocks of Phi_m per entry, blocks ordered by ascending m (the
// identity block m = 1 first).
RationalMatrix monodromy_model(const std::map<long long, long long>& cyclotomic);

struct MonodromyData {
  long long mu = 0;
  std::vector<Rational> residues;               // sorted, |residues| = mu
  std::map<long long, long long> cyclotomic;    // m -> e_m, nonzero entries
  long long mult_one = 0;                       // e_1
  long long rank_T_minus_1 = 0;                 // mu - e_1
  RationalMatrix model;                         // mu x mu, invertible
};

// Assembles and validates the full local monodromy package of a
// Brieskorn-Pham germ: rank over Q of (model - I) must equal mu - e_1 and
// the model must be invertible, both checked by exact elimination.
MonodromyData monodromy_data(const SingularityGerm& germ);

// Enumeration guard: defaults to 10^6 tuples, overridable through the
// ISCT_GUARD_TUPLES environment variable.
long long tuple_guard();

}  // namespace isct
