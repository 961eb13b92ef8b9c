#include "isct/zigzag.hpp"

#include <utility>

#include "isct/errors.hpp"

namespace isct {

namespace {

void shape_check(const ZigZag& z) {
  if (z.loc_rank != 0 && z.loc_rank != 1)
    throw input_error("zig-zag local system rank must be 0 or 1");
  if (z.loc_rank == 0 && (z.dim_v_minus != 0 || z.dim_v_plus != 0))
    throw input_error("rank-0 zig-zags have no boundary cohomology");
  if (z.alpha.rows() != z.dim_a || z.alpha.cols() != z.dim_v_minus)
    throw input_error("alpha has the wrong shape");
  if (z.beta.rows() != z.dim_b || z.beta.cols() != z.dim_a)
    throw input_error("beta has the wrong shape");
  if (z.gamma.rows() != z.dim_v_plus || z.gamma.cols() != z.dim_b)
    throw input_error("gamma has the wrong shape");
}

// subspace(img) contains every column of vecs.
bool contains_columns(const RationalMatrix& basis, const RationalMatrix& vecs) {
  return solve_linear(basis, vecs).has_value();
}

// [w | standard vectors chosen by echelon pivoting], square and invertible.
// Throws if the columns of w are dependent.
RationalMatrix extend_to_basis(const RationalMatrix& w) {
  const RationalMatrix g = hstack(w, RationalMatrix::identity(w.rows()));
  const RankProfile prof = rank_profile(g);
  // [w | I] always has full row rank; the leftmost pivots must pick up every
  // column of w, otherwise w was dependent.
  for (std::size_t j = 0; j < w.cols(); ++j)
    if (j >= prof.pivot_cols.size() || prof.pivot_cols[j] != j)
      throw theorem_violation("basis extension: given columns are dependent");
  return select_columns(g, prof.pivot_cols);
}

// x with x * m = n, for invertible m.
RationalMatrix solve_right(const RationalMatrix& m, const RationalMatrix& n) {
  auto xt = solve_linear(m.transpose(), n.transpose());
  if (!xt) throw internal_error("solve_right: singular system");
  return xt->transpose();
}

}  // namespace

ValidationReport validate(const ZigZag& z) {
  shape_check(z);
  ValidationReport report;

  const bool im_alpha_in_ker_beta = (z.beta * z.alpha).is_zero();
  const bool ker_beta_in_im_alpha =
      contains_columns(z.alpha, rank_profile(z.beta).kernel_basis);
  if (!(im_alpha_in_ker_beta && ker_beta_in_im_alpha)) {
    report.pass = false;
    report.failures.push_back("exactness at A: kernel(beta) != image(alpha)");
  }

  const bool im_beta_in_ker_gamma = (z.gamma * z.beta).is_zero();
  const bool ker_gamma_in_im_beta =
      contains_columns(z.beta, rank_profile(z.gamma).kernel_basis);
  if (!(im_beta_in_ker_gamma && ker_gamma_in_im_beta)) {
    report.pass = false;
    report.failures.push_back("exactness at B: kernel(gamma) != image(beta)");
  }
  return report;
}

bool is_valid_morphism(const ZigZagMorphism& m) {
  const ZigZag& s = m.source;
  const ZigZag& t = m.target;
  if (m.p_a.rows() != t.dim_a || m.p_a.cols() != s.dim_a) return false;
  if (m.p_b.rows() != t.dim_b || m.p_b.cols() != s.dim_b) return false;

  if (!(m.p_b * s.beta == t.beta * m.p_a)) return false;

  if (s.loc_rank == 1 && t.loc_rank == 1) {
    if (s.dim_v_minus != t.dim_v_minus || s.dim_v_plus != t.dim_v_plus)
      return false;
    if (!(m.p_a * s.alpha == m.scalar * t.alpha)) return false;
    if (!(m.scalar * s.gamma == t.gamma * m.p_b)) return false;
  } else {
    // No nonzero map of local systems exists when either side vanishes; the
    // boundary maps are then zero and the outer squares collapse to
    // zero-composite conditions.
    if (sgn(m.scalar) != 0) return false;
    if (!(m.p_a * s.alpha).is_zero()) return false;
    if (!(t.gamma * m.p_b).is_zero()) return false;
  }
  return true;
}

bool is_isomorphism(const ZigZagMorphism& m) {
  if (!is_valid_morphism(m)) return false;
  const ZigZag& s = m.source;
  const ZigZag& t = m.target;
  if (s.loc_rank != t.loc_rank) return false;
  if (s.dim_v_minus != t.dim_v_minus || s.dim_a != t.dim_a ||
      s.dim_b != t.dim_b || s.dim_v_plus != t.dim_v_plus)
    return false;
  if (s.loc_rank == 1 && sgn(m.scalar) == 0) return false;
  return is_invertible(m.p_a) && is_invertible(m.p_b);
}

ZigZagMorphism identity_morphism(const ZigZag& z) {
  return {z, z, z.loc_rank == 1 ? Rational(1) : Rational(0),
          RationalMatrix::identity(z.dim_a), RationalMatrix::identity(z.dim_b)};
}

ZigZagMorphism compose(const ZigZagMorphism& g, const ZigZagMorphism& f) {
  if (!(f.target == g.source))
    throw input_error("compose: morphisms are not composable");
  return {f.source, g.target, g.scalar * f.scalar, g.p_a * f.p_a, g.p_b * f.p_b};
}

bool morphism_equal(const ZigZagMorphism& a, const ZigZagMorphism& b) {
  return a.source == b.source && a.target == b.target && a.scalar == b.scalar &&
         a.p_a == b.p_a && a.p_b == b.p_b;
}

ZigZag nearby_zigzag(const MonodromyData& md) {
  const auto mu = static_cast<std::size_t>(md.mu);
  ZigZag z;
  z.loc_rank = 1;
  z.dim_a = mu;
  z.dim_b = mu;
  z.beta = md.model - RationalMatrix::identity(mu);

  const RankProfile prof = rank_profile(z.beta);
  if (prof.kernel_basis.cols() != static_cast<std::size_t>(md.mult_one))
    throw input_error("monodromy data is not semisimple in the eigenvalue 1: "
                      "kernel of T - 1 disagrees with the eigenvalue count");
  z.dim_v_minus = prof.kernel_basis.cols();
  z.dim_v_plus = z.dim_v_minus;
  z.alpha = prof.kernel_basis;
  z.gamma = quotient_projection(mu, reduced_column_basis(z.beta)).proj;

  const ValidationReport v = validate(z);
  if (!v.pass)
    throw internal_error("nearby zig-zag failed its own exactness check: " +
                         v.failures.front());
  return z;
}

VanishingImage vanishing_image_zigzag(const MonodromyData& md) {
  const ZigZag nearby = nearby_zigzag(md);
  const RationalMatrix img = reduced_column_basis(nearby.beta);
  const std::size_t r = img.cols();

  // Matrix of T - 1 restricted to its own image, written in the image
  // basis: solve img * b = beta * img.
  const auto restricted = solve_linear(img, nearby.beta * img);
  if (!restricted)
    throw internal_error("image of T - 1 is not invariant under T - 1");
  if (!is_invertible(*restricted))
    throw input_error("monodromy is not semisimple in the eigenvalue 1: "
                      "T - 1 is singular on its image");

  ZigZag c;
  c.loc_rank = 0;
  c.dim_a = r;
  c.dim_b = r;
  c.alpha = RationalMatrix(r, 0);
  c.beta = *restricted;
  c.gamma = RationalMatrix(0, r);
  const ValidationReport v = validate(c);
  if (!v.pass)
    throw internal_error("vanishing-image zig-zag failed validation");

  ZigZagMorphism iota{c, nearby, Rational(0), img, img};
  if (!is_valid_morphism(iota))
    throw internal_error("inclusion of the vanishing image is not a morphism");
  return {std::move(c), std::move(iota)};
}

CokernelResult cokernel_zigzag(const ZigZagMorphism& iota) {
  const ZigZag& c = iota.source;
  const ZigZag& n = iota.target;
  shape_check(c);
  shape_check(n);
  if (c.loc_rank != 0)
    throw input_error("cokernel_zigzag expects a source supported at the singular point");
  if (!is_valid_morphism(iota))
    throw input_error("cokernel_zigzag: iota is not a morphism");
  if (rank(iota.p_a) != c.dim_a || rank(iota.p_b) != c.dim_b)
    throw input_error("cokernel_zigzag: iota must be componentwise injective");

  const QuotientProjection qa = quotient_projection(n.dim_a, iota.p_a);
  const QuotientProjection qb = quotient_projection(n.dim_b, iota.p_b);

  ZigZag is;
  is.loc_rank = 1;
  is.dim_v_minus = n.dim_v_minus;
  is.dim_v_plus = n.dim_v_plus;
  is.dim_a = n.dim_a - c.dim_a;
  is.dim_b = n.dim_b - c.dim_b;
  is.alpha = qa.proj * n.alpha;
  is.beta = qb.proj * n.beta * qa.complement_basis;
  is.gamma = n.gamma * qb.complement_basis;

  // The induced maps must actually be induced, i.e. factor through the
  // quotients.
  if (!(is.beta * qa.proj == qb.proj * n.beta))
    throw theorem_violation("middle map does not descend to the quotient");
  if (!(is.gamma * qb.proj == n.gamma))
    throw theorem_violation("gamma does not descend to the quotient");

  // Structure of the intersection-space zig-zag: computed, then checked.
  if (!is.beta.is_zero())
    throw theorem_violation("induced middle map of the cokernel is nonzero");
  if (is.dim_a != n.dim_v_minus || !is_invertible(is.alpha))
    throw theorem_violation("induced alpha is not an isomorphism");
  if (is.dim_b != n.dim_v_plus || !is_invertible(is.gamma))
    throw theorem_violation("induced gamma is not an isomorphism");

  // Column exactness of the quotient diagram, slot by slot.
  if (!(qa.proj * iota.p_a).is_zero() || !(qb.proj * iota.p_b).is_zero())
    throw theorem_violation("quotient projection does not annihilate the sub");
  if (c.dim_a + is.dim_a != n.dim_a || c.dim_b + is.dim_b != n.dim_b)
    throw theorem_violation("quotient dimensions do not add up");
  if (!contains_columns(iota.p_a, rank_profile(qa.proj).kernel_basis) ||
      !contains_columns(iota.p_b, rank_profile(qb.proj).kernel_basis))
    throw theorem_violation("kernel of the projection exceeds the included sub");

  const ValidationReport v = validate(is);
  if (!v.pass)
    throw internal_error("cokernel zig-zag failed validation: " + v.failures.front());

  ZigZagMorphism proj{n, is, Rational(1), qa.proj, qb.proj};
  if (!is_valid_morphism(proj))
    throw internal_error("quotient projection is not a morphism");
  return {std::move(is), std::move(proj)};
}

ZigZag dual_zigzag(const ZigZag& z) {
  shape_check(z);
  ZigZag d;
  d.loc_rank = z.loc_rank;
  d.dim_v_minus = z.dim_v_plus;
  d.dim_a = z.dim_b;
  d.dim_b = z.dim_a;
  d.dim_v_plus = z.dim_v_minus;
  d.alpha = z.gamma.transpose();
  d.beta = z.beta.transpose();
  d.gamma = z.alpha.transpose();
  const ValidationReport v = validate(d);
  if (!v.pass)
    throw internal_error("dual zig-zag failed validation: " + v.failures.front());
  return d;
}

namespace {

struct HomSystem {
  bool with_scalar = false;
  std::size_t n_pa = 0;
  std::size_t n_pb = 0;
  std::size_t unknowns = 0;
  RationalMatrix constraints;  // rows x unknowns, kernel = hom space
};

// Unknown layout: [scalar?][p_a row-major][p_b row-major].
HomSystem hom_system(const ZigZag& z1, const ZigZag& z2) {
  HomSystem sys;
  sys.with_scalar = z1.loc_rank == 1 && z2.loc_rank == 1;
  if (sys.with_scalar &&
      (z1.dim_v_minus != z2.dim_v_minus || z1.dim_v_plus != z2.dim_v_plus))
    throw input_error("hom_space: rank-1 zig-zags with mismatched boundary dimensions");
  sys.n_pa = z2.dim_a * z1.dim_a;
  sys.n_pb = z2.dim_b * z1.dim_b;
  const std::size_t s_vars = sys.with_scalar ? 1 : 0;
  sys.unknowns = s_vars + sys.n_pa + sys.n_pb;
  const std::size_t pa_off = s_vars;
  const std::size_t pb_off = s_vars + sys.n_pa;

  const std::size_t rows_mid = z2.dim_b * z1.dim_a;
  const std::size_t rows_left = z2.dim_a * z1.dim_v_minus;
  const std::size_t rows_right = z2.dim_v_plus * z1.dim_b;
  sys.constraints = RationalMatrix(rows_mid + rows_left + rows_right, sys.unknowns);
  RationalMatrix& cm = sys.constraints;
  std::size_t row = 0;

  // p_b . beta1 - beta2 . p_a = 0
  for (std::size_t i = 0; i < z2.dim_b; ++i)
    for (std::size_t j = 0; j < z1.dim_a; ++j, ++row) {
      for (std::size_t k = 0; k < z1.dim_b; ++k)
        cm.at(row, pb_off + i * z1.dim_b + k) += z1.beta.at(k, j);
      for (std::size_t k = 0; k < z2.dim_a; ++k)
        cm.at(row, pa_off + k * z1.dim_a + j) -= z2.beta.at(i, k);
    }
  // p_a . alpha1 = scalar . alpha2   (right side absent without a scalar)
  for (std::size_t i = 0; i < z2.dim_a; ++i)
    for (std::size_t j = 0; j < z1.dim_v_minus; ++j, ++row) {
      for (std::size_t k = 0; k < z1.dim_a; ++k)
        cm.at(row, pa_off + i * z1.dim_a + k) += z1.alpha.at(k, j);
      if (sys.with_scalar) cm.at(row, 0) -= z2.alpha.at(i, j);
    }
  // scalar . gamma1 = gamma2 . p_b
  for (std::size_t i = 0; i < z2.dim_v_plus; ++i)
    for (std::size_t j = 0; j < z1.dim_b; ++j, ++row) {
      for (std::size_t k = 0; k < z2.dim_b; ++k)
        cm.at(row, pb_off + k * z1.dim_b + j) -= z2.gamma.at(i, k);
      if (sys.with_scalar) cm.at(row, 0) += z1.gamma.at(i, j);
    }
  return sys;
}

ZigZagMorphism unpack_morphism(const ZigZag& z1, const ZigZag& z2,
                               const HomSystem& sys, const RationalMatrix& coords,
                               std::size_t col) {
  ZigZagMorphism m{z1, z2, Rational(0), RationalMatrix(z2.dim_a, z1.dim_a),
                   RationalMatrix(z2.dim_b, z1.dim_b)};
  std::size_t idx = 0;
  if (sys.with_scalar) m.scalar = coords.at(idx++, col);
  for (std::size_t i = 0; i < z2.dim_a; ++i)
    for (std::size_t j = 0; j < z1.dim_a; ++j) m.p_a.at(i, j) = coords.at(idx++, col);
  for (std::size_t i = 0; i < z2.dim_b; ++i)
    for (std::size_t j = 0; j < z1.dim_b; ++j) m.p_b.at(i, j) = coords.at(idx++, col);
  return m;
}

}  // namespace

std::vector<ZigZagMorphism> hom_space(const ZigZag& z1, const ZigZag& z2) {
  shape_check(z1);
  shape_check(z2);
  const HomSystem sys = hom_system(z1, z2);
  const RationalMatrix kernel = rank_profile(sys.constraints).kernel_basis;
  std::vector<ZigZagMorphism> basis;
  basis.reserve(kernel.cols());
  for (std::size_t c = 0; c < kernel.cols(); ++c)
    basis.push_back(unpack_morphism(z1, z2, sys, kernel, c));
  return basis;
}

std::optional<ZigZagMorphism> find_isomorphism(const ZigZag& z1, const ZigZag& z2) {
  shape_check(z1);
  shape_check(z2);
  if (z1.loc_rank != z2.loc_rank) return std::nullopt;
  if (z1.dim_v_minus != z2.dim_v_minus || z1.dim_a != z2.dim_a ||
      z1.dim_b != z2.dim_b || z1.dim_v_plus != z2.dim_v_plus)
    return std::nullopt;
  if (z1 == z2) return identity_morphism(z1);

  const std::vector<ZigZagMorphism> basis = hom_space(z1, z2);
  if (basis.empty()) {
    // Only the zero morphism exists; it is an isomorphism exactly between
    // zero objects.
    ZigZagMorphism zero{z1, z2, Rational(0), RationalMatrix(z2.dim_a, z1.dim_a),
                        RationalMatrix(z2.dim_b, z1.dim_b)};
    if (is_isomorphism(zero)) return zero;
    return std::nullopt;
  }

  for (const ZigZagMorphism& m : basis)
    if (is_isomorphism(m)) return m;

  constexpr long long kSearchGuard = 2000000;
  const std::size_t k = basis.size();
  long long total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= 5;
    if (total > kSearchGuard)
      throw resource_error("isomorphism search space exceeds the enumeration guard");
  }

  std::vector<int> coeff(k, -2);
  while (true) {
    bool all_zero = true;
    for (int c : coeff)
      if (c != 0) all_zero = false;
    if (!all_zero) {
      ZigZagMorphism m{z1, z2, Rational(0), RationalMatrix(z2.dim_a, z1.dim_a),
                       RationalMatrix(z2.dim_b, z1.dim_b)};
      for (std::size_t i = 0; i < k; ++i) {
        if (coeff[i] == 0) continue;
        const Rational c(coeff[i]);
        m.scalar += c * basis[i].scalar;
        m.p_a = m.p_a + c * basis[i].p_a;
        m.p_b = m.p_b + c * basis[i].p_b;
      }
      if (is_isomorphism(m)) return m;
    }
    std::size_t i = k;
    while (i-- > 0) {
      if (coeff[i] < 2) {
        ++coeff[i];
        break;
      }
      coeff[i] = -2;
      if (i == 0) return std::nullopt;  // odometer wrapped: search exhausted
    }
  }
}

ZigZagMorphism construct_splitting(const ZigZagMorphism& iota) {
  const ZigZag& c = iota.source;
  const ZigZag& n = iota.target;
  shape_check(c);
  shape_check(n);
  if (c.loc_rank != 0)
    throw input_error("construct_splitting expects a source supported at the singular point");
  if (!is_valid_morphism(iota))
    throw input_error("construct_splitting: iota is not a morphism");
  if (!is_invertible(c.beta))
    throw input_error("construct_splitting requires an invertible middle map on the source");
  if (rank(iota.p_a) != c.dim_a || rank(iota.p_b) != c.dim_b)
    throw input_error("construct_splitting: iota must be componentwise injective");

  const std::size_t r = c.dim_a;

  // A side. Basis of the big space: a kernel basis of beta, the included
  // image vectors, then standard coordinate vectors completing the set
  // (echelon pivoting keeps the choice canonical). sigma_a sends the three
  // groups to 0, the corresponding source basis vector, and 0.
  const RationalMatrix ker_beta = rank_profile(n.beta).kernel_basis;
  const std::size_t m_dim = ker_beta.cols();
  const RationalMatrix w = hstack(ker_beta, iota.p_a);
  if (rank(w) != m_dim + r)
    throw theorem_violation("kernel of beta meets the included image: "
                            "monodromy is not semisimple in the eigenvalue 1");
  const RationalMatrix w_full = extend_to_basis(w);
  const std::size_t ext_a = n.dim_a - m_dim - r;
  RationalMatrix targets_a(r, n.dim_a);
  for (std::size_t i = 0; i < r; ++i) targets_a.at(i, m_dim + i) = 1;
  const RationalMatrix sigma_a = solve_right(w_full, targets_a);

  // B side. Basis: images of the included vectors under beta', lifts of the
  // A-side extension pushed through beta, then a standard completion.
  // sigma_b sends them to the source basis, 0, and 0.
  const RationalMatrix included_b = iota.p_b * c.beta;
  RationalMatrix lifts(n.dim_a, ext_a);
  for (std::size_t j = 0; j < ext_a; ++j)
    for (std::size_t i = 0; i < n.dim_a; ++i)
      lifts.at(i, j) = w_full.at(i, m_dim + r + j);
  const RationalMatrix u = hstack(included_b, n.beta * lifts);
  if (rank(u) != u.cols())
    throw theorem_violation("image vectors fail to stay independent in the B slot");
  const RationalMatrix u_full = extend_to_basis(u);
  RationalMatrix targets_b(r, n.dim_b);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) targets_b.at(i, j) = c.beta.at(i, j);
  const RationalMatrix sigma_b = solve_right(u_full, targets_b);

  ZigZagMorphism sigma{n, c, Rational(0), sigma_a, sigma_b};
  if (!is_valid_morphism(sigma))
    throw theorem_violation("constructed splitting is not a morphism");
  if (!(sigma_b * n.beta == c.beta * sigma_a))
    throw theorem_violation("constructed splitting does not commute with beta");
  if (!morphism_equal(compose(sigma, iota), identity_morphism(c)))
    throw theorem_violation("constructed splitting is not a retraction of iota");
  return sigma;
}

long long perverse_hom_dimension(const ZigZag& z1, const ZigZag& z2) {
  const auto dim_hom = static_cast<long long>(hom_space(z1, z2).size());
  const auto coker1 =
      static_cast<long long>(z1.dim_b) - static_cast<long long>(rank(z1.beta));
  const auto ker2 =
      static_cast<long long>(z2.dim_a) - static_cast<long long>(rank(z2.beta));
  return dim_hom + coker1 * ker2;
}

ZigZagBundle build_zigzags(const MonodromyData& md) {
  ZigZagBundle bundle;
  bundle.nearby = nearby_zigzag(md);
  VanishingImage vi = vanishing_image_zigzag(md);
  bundle.c = std::move(vi.c);
  bundle.iota = std::move(vi.iota);
  CokernelResult ck = cokernel_zigzag(bundle.iota);
  bundle.is = std::move(ck.is);
  bundle.proj = std::move(ck.proj);
  return bundle;
}

}  // namespace isct
