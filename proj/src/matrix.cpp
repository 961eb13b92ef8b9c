#include "isct/matrix.hpp"

#include <sstream>
#include <utility>

#include "isct/errors.hpp"

namespace isct {

Rational make_rational(long long num, long long den) {
  return make_rational(to_integer(num), to_integer(den));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& q : entries_)
    if (sgn(q) != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw input_error("matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("matrix sum shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("matrix difference shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw input_error("hstack row mismatch");
  RationalMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw input_error("vstack column mismatch");
  RationalMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

RationalMatrix select_columns(const RationalMatrix& m,
                              const std::vector<std::size_t>& cols) {
  RationalMatrix c(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) c.at(i, j) = m.at(i, cols[j]);
  return c;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? " [" : "; ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m.at(i, j).get_str();
    }
  }
  if (m.rows()) os << "]";
  return os.str();
}

namespace {

// Working copy for fraction-free elimination: each row is scaled by the lcm
// of its denominators, which changes neither rank, pivot columns, nor null
// space.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> w(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      w[i][j] = q.get_num() * Integer(l / q.get_den());
    }
  }
  return w;
}

struct Echelon {
  std::vector<std::vector<Integer>> m;
  std::vector<std::size_t> pivot_cols;
};

// One-step Bareiss elimination. Pivot selection is leftmost nonzero column,
// topmost row, so the echelon (and everything derived from it) is
// reproducible bit for bit. Only columns < pivot_limit may host pivots;
// columns beyond are carried along (used for augmented solves).
Echelon bareiss(const RationalMatrix& input, std::size_t pivot_limit) {
  Echelon e{integer_rows(input), {}};
  auto& w = e.m;
  const std::size_t nrows = input.rows();
  const std::size_t ncols = input.cols();
  Integer prev = 1;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < pivot_limit && pr < nrows; ++c) {
    std::size_t sel = pr;
    while (sel < nrows && sgn(w[sel][c]) == 0) ++sel;
    if (sel == nrows) continue;
    if (sel != pr) std::swap(w[pr], w[sel]);
    for (std::size_t i = pr + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer t = w[pr][c] * w[i][j] - w[i][c] * w[pr][j];
        mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][c] = 0;
    }
    prev = w[pr][c];
    e.pivot_cols.push_back(c);
    ++pr;
  }
  return e;
}

struct Rref {
  RationalMatrix m;
  std::vector<std::size_t> pivot_cols;
};

// Exact RREF derived from the Bareiss echelon. Rows past the rank keep
// whatever remains in columns >= pivot_limit (consistency residue of
// augmented systems).
Rref rref(const RationalMatrix& input, std::size_t pivot_limit) {
  Echelon e = bareiss(input, pivot_limit);
  const std::size_t rank = e.pivot_cols.size();
  RationalMatrix r(input.rows(), input.cols());
  for (std::size_t i = 0; i < input.rows(); ++i)
    for (std::size_t j = 0; j < input.cols(); ++j) r.at(i, j) = Rational(e.m[i][j]);
  for (std::size_t ii = rank; ii-- > 0;) {
    const std::size_t c = e.pivot_cols[ii];
    const Rational p = r.at(ii, c);
    for (std::size_t j = c; j < input.cols(); ++j) r.at(ii, j) /= p;
    for (std::size_t k = 0; k < ii; ++k) {
      const Rational f = r.at(k, c);
      if (sgn(f) == 0) continue;
      for (std::size_t j = c; j < input.cols(); ++j)
        r.at(k, j) -= f * r.at(ii, j);
    }
  }
  return {std::move(r), std::move(e.pivot_cols)};
}

}  // namespace

RankProfile rank_profile(const RationalMatrix& m) {
  Rref r = rref(m, m.cols());
  const std::size_t rk = r.pivot_cols.size();
  RankProfile out;
  out.rank = rk;
  out.pivot_cols = r.pivot_cols;

  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = 1;
  out.kernel_basis = RationalMatrix(m.cols(), m.cols() - rk);
  std::size_t kc = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out.kernel_basis.at(f, kc) = 1;
    for (std::size_t i = 0; i < rk; ++i)
      out.kernel_basis.at(r.pivot_cols[i], kc) = -r.m.at(i, f);
    ++kc;
  }
  out.image_basis = select_columns(m, r.pivot_cols);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  return bareiss(m, m.cols()).pivot_cols.size();
}

bool is_invertible(const RationalMatrix& m) {
  return m.is_square() && rank(m) == m.rows();
}

std::optional<RationalMatrix> solve_linear(const RationalMatrix& m,
                                           const RationalMatrix& b) {
  if (m.rows() != b.rows())
    throw input_error("solve_linear: dimension mismatch between matrix and right-hand side");
  const RationalMatrix aug = hstack(m, b);
  Rref r = rref(aug, m.cols());
  const std::size_t rk = r.pivot_cols.size();
  for (std::size_t i = rk; i < aug.rows(); ++i)
    for (std::size_t j = m.cols(); j < aug.cols(); ++j)
      if (sgn(r.m.at(i, j)) != 0) return std::nullopt;
  RationalMatrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t k = 0; k < b.cols(); ++k)
      x.at(r.pivot_cols[i], k) = r.m.at(i, m.cols() + k);
  return x;
}

RationalMatrix reduced_column_basis(const RationalMatrix& m) {
  Rref r = rref(m.transpose(), m.rows());
  const std::size_t rk = r.pivot_cols.size();
  RationalMatrix basis(m.rows(), rk);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis.at(j, i) = r.m.at(i, j);
  return basis;
}

QuotientProjection quotient_projection(std::size_t dim,
                                       const RationalMatrix& subspace_basis) {
  const RationalMatrix& s = subspace_basis;
  if (s.rows() != dim)
    throw input_error("quotient_projection: subspace basis has wrong ambient dimension");
  Rref r = rref(s.transpose(), dim);
  if (r.pivot_cols.size() != s.cols())
    throw input_error("quotient_projection: dependent columns in subspace basis");

  std::vector<char> is_pivot(dim, 0);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = 1;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < dim; ++j)
    if (!is_pivot[j]) complement.push_back(j);

  QuotientProjection out;
  out.proj = RationalMatrix(complement.size(), dim);
  for (std::size_t t = 0; t < complement.size(); ++t) {
    out.proj.at(t, complement[t]) = 1;
    // e_{pivot_i} = (row i of RREF) - sum_t R[i][complement_t] e_{complement_t}
    // and the row lies in span(S), so modulo the subspace it projects to the
    // negated free coefficients.
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      out.proj.at(t, r.pivot_cols[i]) = -r.m.at(i, complement[t]);
  }
  out.complement_basis = RationalMatrix(dim, complement.size());
  for (std::size_t t = 0; t < complement.size(); ++t)
    out.complement_basis.at(complement[t], t) = 1;
  return out;
}

}  // namespace isct
