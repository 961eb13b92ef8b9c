#include <doctest.h>

#include "isct/errors.hpp"
#include "isct/hypersurface.hpp"

using namespace isct;

TEST_SUITE("hypersurface") {

TEST_CASE("smooth Betti vectors") {
  SUBCASE("degree 1 is projective space") {
    CHECK(smooth_betti(3, 1) == std::vector<long long>{1, 0, 1, 0, 1, 0, 1});
  }
  SUBCASE("quartic surface") {
    CHECK(smooth_betti(2, 4) == std::vector<long long>{1, 0, 22, 0, 1});
  }
  SUBCASE("quintic threefold") {
    CHECK(smooth_betti(3, 5)[3] == 204);
  }
  SUBCASE("cubic threefold") {
    CHECK(smooth_betti(3, 3)[3] == 10);
  }
}

TEST_CASE("Euler characteristic oracle") {
  CHECK(euler_characteristic_oracle(2, 1) == 3);     // projective plane
  CHECK(euler_characteristic_oracle(1, 3) == 0);     // elliptic curve
  CHECK(euler_characteristic_oracle(2, 4) == 24);    // quartic surface
  CHECK(euler_characteristic_oracle(3, 5) == -200);  // quintic threefold
  CHECK(euler_characteristic_oracle(3, 3) == -6);    // cubic threefold
}

TEST_CASE("Betti vectors against the Euler oracle, palindromy, off-middle values") {
  for (int n = 1; n <= 6; ++n) {
    for (long long d = 1; d <= 8; ++d) {
      const auto b = smooth_betti(n, d);
      CAPTURE(n);
      CAPTURE(d);
      long long alternating = 0;
      long long sign = 1;
      for (long long bi : b) {
        alternating += sign * bi;
        sign = -sign;
      }
      CHECK(alternating == euler_characteristic_oracle(n, d));
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b[i] == b[b.size() - 1 - i]);
        if (i != static_cast<std::size_t>(n)) CHECK((b[i] == 0 || b[i] == 1));
      }
    }
  }
}

TEST_CASE("family validation") {
  const auto germ = SingularityGerm::brieskorn_pham({2, 2, 2, 2});
  CHECK_THROWS_AS(HypersurfaceFamily::make(3, 0, germ), input_error);
  CHECK_THROWS_AS(HypersurfaceFamily::make(4, 3, germ), input_error);  // n mismatch
  const HypersurfaceFamily f = HypersurfaceFamily::make(3, 5, germ);
  CHECK(f.n == 3);
  CHECK(f.degree == 5);
}

}  // TEST_SUITE
