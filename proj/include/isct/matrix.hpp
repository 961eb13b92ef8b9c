#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isct/rational.hpp"

namespace isct {

// Dense matrix of exact rationals, row-major. Matrices with 0 rows or 0
// columns are legal and represent maps to or from the zero space.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix transpose() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

// [a | b] and [a ; b].
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix select_columns(const RationalMatrix& m,
                              const std::vector<std::size_t>& cols);

std::string to_string(const RationalMatrix& m);

struct RankProfile {
  std::size_t rank = 0;
  // cols(M) x (cols(M) - rank); the canonical kernel basis read off the RREF
  // (free coordinate set to 1, pivot coordinates filled in).
  RationalMatrix kernel_basis;
  // rows(M) x rank; the pivot columns of M itself.
  RationalMatrix image_basis;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free (Bareiss) elimination with leftmost-pivot/topmost-row
// selection, then exact normalization to RREF. Output is deterministic and
// unique for a given input.
RankProfile rank_profile(const RationalMatrix& m);

// Rank only; skips kernel extraction and RREF normalization. Same
// elimination, same pivots.
std::size_t rank(const RationalMatrix& m);

bool is_invertible(const RationalMatrix& m);

// Particular solution of M x = b with zero entries in all non-pivot
// coordinates, or nullopt if the system is inconsistent. b may have several
// columns; they are solved in one elimination and it is all-or-nothing.
std::optional<RationalMatrix> solve_linear(const RationalMatrix& m,
                                           const RationalMatrix& b);

// Canonical basis of the column space: nonzero rows of RREF(M^T),
// transposed back into columns. Spans the same space as
// rank_profile(M).image_basis but in reduced coordinates.
RationalMatrix reduced_column_basis(const RationalMatrix& m);

struct QuotientProjection {
  // (dim - rank S) x dim, kernel exactly span(S); restricted to the
  // complement coordinates it is the identity.
  RationalMatrix proj;
  // dim x (dim - rank S); the standard coordinate vectors not matched by
  // pivots of S.
  RationalMatrix complement_basis;
};

// Projection Q^dim -> Q^dim / span(S) in the deterministic complement
// coordinates. Columns of S must be independent.
QuotientProjection quotient_projection(std::size_t dim,
                                       const RationalMatrix& subspace_basis);

}  // namespace isct
