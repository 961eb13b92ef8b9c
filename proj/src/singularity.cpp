#include "isct/singularity.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "isct/errors.hpp"

namespace isct {

int SingularityGerm::n() const {
  const std::size_t vars =
      kind == Kind::brieskorn_pham ? exponents.size() : weights.size();
  return static_cast<int>(vars) - 1;
}

SingularityGerm SingularityGerm::brieskorn_pham(std::vector<long long> exps) {
  SingularityGerm g;
  g.kind = Kind::brieskorn_pham;
  g.exponents = std::move(exps);
  if (g.n() < 3)
    throw input_error("germ dimension n must be >= 3 (need n+1 exponents)");
  for (long long a : g.exponents)
    if (a < 2) throw input_error("Brieskorn-Pham exponents must be >= 2");
  return g;
}

SingularityGerm SingularityGerm::weighted_homogeneous(std::vector<long long> ws,
                                                      long long wdeg) {
  SingularityGerm g;
  g.kind = Kind::weighted_homogeneous;
  g.weights = std::move(ws);
  g.wdegree = wdeg;
  if (g.n() < 3)
    throw input_error("germ dimension n must be >= 3 (need n+1 weights)");
  if (wdeg < 1) throw input_error("weighted degree must be positive");
  for (long long w : g.weights)
    if (w < 1 || w >= wdeg)
      throw input_error("weights must satisfy 1 <= w_i < wdegree");
  return g;
}

long long tuple_guard() {
  static constexpr long long kDefault = 1000000;
  const char* env = std::getenv("ISCT_GUARD_TUPLES");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw input_error("ISCT_GUARD_TUPLES must be a positive integer");
  return v;
}

namespace {

long long to_ll_checked(const Integer& z, const char* what) {
  if (!z.fits_slong_p())
    throw resource_error(std::string(what) + " exceeds the supported integer range");
  return z.get_si();
}

Integer bp_tuple_count(const std::vector<long long>& exponents) {
  Integer total = 1;
  for (long long a : exponents) total *= to_integer(a - 1);
  return total;
}

void check_bp_exponents(const std::vector<long long>& exponents) {
  if (exponents.empty()) throw input_error("empty exponent list");
  for (long long a : exponents)
    if (a < 2) throw input_error("Brieskorn-Pham exponents must be >= 2");
}

}  // namespace

long long milnor_number_wh(const SingularityGerm& germ) {
  if (germ.kind == SingularityGerm::Kind::brieskorn_pham) {
    check_bp_exponents(germ.exponents);
    return to_ll_checked(bp_tuple_count(germ.exponents), "Milnor number");
  }
  Rational mu = 1;
  for (long long w : germ.weights)
    mu *= make_rational(germ.wdegree - w, w);
  if (mu.get_den() != 1)
    throw input_error("not a valid weighted-homogeneous isolated singularity: "
                      "product of (d - w_i)/w_i is not an integer");
  return to_ll_checked(mu.get_num(), "Milnor number");
}

long long milnor_number_bp_oracle(const std::vector<long long>& exponents) {
  check_bp_exponents(exponents);
  const Integer bound = bp_tuple_count(exponents);
  if (bound > to_integer(tuple_guard()))
    throw resource_error("Milnor oracle enumeration would exceed the tuple guard");

  // Walk the box 0 <= e_i <= a_i - 2 with an odometer and count, so the
  // result is independent of the product formula it is checking.
  std::vector<long long> e(exponents.size(), 0);
  long long count = 0;
  while (true) {
    ++count;
    std::size_t i = 0;
    while (i < e.size()) {
      if (e[i] < exponents[i] - 2) {
        ++e[i];
        break;
      }
      e[i] = 0;
      ++i;
    }
    if (i == e.size()) break;
  }
  return count;
}

std::vector<Rational> bp_eigenvalue_residues(const std::vector<long long>& exponents) {
  check_bp_exponents(exponents);
  const Integer bound = bp_tuple_count(exponents);
  if (bound > to_integer(tuple_guard()))
    throw resource_error("eigenvalue enumeration would exceed the tuple guard");

  long long common = 1;
  for (long long a : exponents) common = std::lcm(common, a);

  std::vector<Rational> residues;
  residues.reserve(static_cast<std::size_t>(bound.get_si()));
  std::vector<long long> j(exponents.size(), 1);
  while (true) {
    long long num = 0;
    for (std::size_t i = 0; i < j.size(); ++i)
      num += j[i] * (common / exponents[i]);
    residues.push_back(make_rational(num % common, common));
    std::size_t i = 0;
    while (i < j.size()) {
      if (j[i] < exponents[i] - 1) {
        ++j[i];
        break;
      }
      j[i] = 1;
      ++i;
    }
    if (i == j.size()) break;
  }
  std::sort(residues.begin(), residues.end());
  return residues;
}

std::map<long long, long long> cyclotomic_factorization(
    const std::vector<Rational>& residues) {
  // count[m][k] = multiplicity of the reduced residue k/m (0 is 0/1).
  std::map<long long, std::map<long long, long long>> count;
  for (const Rational& r : residues) {
    if (sgn(r) < 0 || r >= 1)
      throw input_error("residues must be reduced fractions in [0,1)");
    count[r.get_den().get_si()][r.get_num().get_si()] += 1;
  }
  std::map<long long, long long> factorization;
  for (const auto& [m, mult_by_k] : count) {
    const long long expected = euler_phi(m);
    const long long e_m = mult_by_k.begin()->second;
    const bool balanced =
        static_cast<long long>(mult_by_k.size()) == expected &&
        std::all_of(mult_by_k.begin(), mult_by_k.end(),
                    [&](const auto& kv) { return kv.second == e_m; });
    if (!balanced) {
      std::ostringstream os;
      os << "eigenvalue multiset not defined over Q: residues with denominator "
         << m << " do not fill the Galois orbit evenly";
      throw input_error(os.str());
    }
    factorization[m] = e_m;
  }
  return factorization;
}

long long euler_phi(long long m) {
  if (m < 1) throw input_error("euler_phi of a non-positive integer");
  long long result = m;
  long long rest = m;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    result -= result / p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(long long m) {
  if (m < 1) throw input_error("cyclotomic index must be positive");
  // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d, by exact polynomial
  // division over Z.
  std::vector<Integer> poly(static_cast<std::size_t>(m) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (long long d = 1; d < m; ++d) {
    if (m % d) continue;
    const std::vector<Integer> divisor = cyclotomic_polynomial(d);
    std::vector<Integer> quotient(poly.size() - divisor.size() + 1);
    std::vector<Integer> rem = poly;
    for (std::size_t qi = quotient.size(); qi-- > 0;) {
      Integer c = rem[qi + divisor.size() - 1];  // divisor is monic
      quotient[qi] = c;
      if (sgn(c) == 0) continue;
      for (std::size_t di = 0; di < divisor.size(); ++di)
        rem[qi + di] -= c * divisor[di];
    }
    poly = std::move(quotient);
  }
  return poly;
}

RationalMatrix monodromy_model(const std::map<long long, long long>& cyclotomic) {
  long long size = 0;
  for (const auto& [m, e_m] : cyclotomic) {
    if (e_m < 0) throw input_error("negative cyclotomic multiplicity");
    size += e_m * euler_phi(m);
  }
  // The model is a dense mu x mu rational matrix; mu beyond a few thousand
  // is outside this tool's envelope and would only thrash memory.
  static constexpr long long kMaxModelDim = 4096;
  if (size > kMaxModelDim)
    throw resource_error("monodromy model dimension exceeds the dense-matrix bound");
  RationalMatrix model(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  std::size_t offset = 0;
  for (const auto& [m, e_m] : cyclotomic) {  // std::map iterates ascending in m
    const std::vector<Integer> phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;
    for (long long rep = 0; rep < e_m; ++rep) {
      for (std::size_t i = 0; i + 1 < deg; ++i)
        model.at(offset + i + 1, offset + i) = 1;
      for (std::size_t i = 0; i < deg; ++i)
        model.at(offset + i, offset + deg - 1) = Rational(-phi[i]);
      offset += deg;
    }
  }
  return model;
}

MonodromyData monodromy_data(const SingularityGerm& germ) {
  if (germ.kind != SingularityGerm::Kind::brieskorn_pham)
    throw input_error("monodromy data requires a Brieskorn-Pham exponent form; "
                      "weighted-homogeneous germs support the Milnor number only");

  MonodromyData md;
  md.mu = milnor_number_wh(germ);
  md.residues = bp_eigenvalue_residues(germ.exponents);
  if (static_cast<long long>(md.residues.size()) != md.mu)
    throw internal_error("eigenvalue count disagrees with the Milnor number");
  md.cyclotomic = cyclotomic_factorization(md.residues);

  long long total = 0;
  for (const auto& [m, e_m] : md.cyclotomic) total += e_m * euler_phi(m);
  if (total != md.mu)
    throw internal_error("cyclotomic degrees do not sum to the Milnor number");

  const auto it = md.cyclotomic.find(1);
  md.mult_one = it == md.cyclotomic.end() ? 0 : it->second;
  md.rank_T_minus_1 = md.mu - md.mult_one;
  md.model = monodromy_model(md.cyclotomic);

  const auto n = static_cast<std::size_t>(md.mu);
  if (rank(md.model - RationalMatrix::identity(n)) !=
      static_cast<std::size_t>(md.rank_T_minus_1))
    throw internal_error("rank of (model - I) disagrees with eigenvalue counts");
  if (rank(md.model) != n)
    throw internal_error("monodromy model is singular");
  return md;
}

}  // namespace isct
