#include "isct/hypersurface.hpp"

#include "isct/errors.hpp"

namespace isct {

namespace {

long long to_ll_checked(const Integer& z, const char* what) {
  if (!z.fits_slong_p())
    throw resource_error(std::string(what) + " exceeds the supported integer range");
  return z.get_si();
}

Integer pow_ll(long long base, int exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), to_integer(base).get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace

HypersurfaceFamily HypersurfaceFamily::make(int n, long long degree,
                                            SingularityGerm germ) {
  if (n < 3) throw input_error("n must be >= 3");
  if (degree < 1) throw input_error("degree must be >= 1");
  if (germ.n() != n)
    throw input_error("germ dimension does not match the hypersurface dimension");
  HypersurfaceFamily f;
  f.n = n;
  f.degree = degree;
  f.germ = std::move(germ);
  return f;
}

std::vector<long long> smooth_betti(int n, long long d) {
  if (n < 1 || d < 1) throw input_error("smooth_betti requires n >= 1, d >= 1");
  std::vector<long long> b(2 * static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= 2 * n; i += 2) b[static_cast<std::size_t>(i)] = 1;
  Integer middle = pow_ll(d - 1, n + 2);
  middle += (n % 2 == 0 ? to_integer(d - 1) : to_integer(1 - d));
  middle /= to_integer(d);  // exact: the numerator is divisible by d
  if (n % 2 == 0) middle += 1;
  b[static_cast<std::size_t>(n)] = to_ll_checked(middle, "middle Betti number");
  return b;
}

long long euler_characteristic_oracle(int n, long long d) {
  if (n < 1 || d < 1)
    throw input_error("euler_characteristic_oracle requires n >= 1, d >= 1");
  // Binomial coefficients of (1+h)^{n+2}, then divide by (1+dh) term by
  // term, truncating at degree n: q_0 = a_0, q_j = a_j - d q_{j-1}.
  std::vector<Integer> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (std::size_t j = 1; j < a.size(); ++j)
    a[j] = a[j - 1] * to_integer(n + 3 - static_cast<long long>(j)) / to_integer(static_cast<long long>(j));
  Integer q = a[0];
  for (std::size_t j = 1; j < a.size(); ++j) q = a[j] - to_integer(d) * q;
  return to_ll_checked(Integer(to_integer(d) * q), "Euler characteristic");
}

}  // namespace isct
