#pragma once

// Exact dense linear algebra over Field<S>. Every basis returned here is the
// reduced-row-echelon canonical choice, so results are bit-for-bit
// reproducible for a given input.

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "preproj/field.hpp"

namespace preproj {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Matrix<S> zeros(const Field<S>& field, Index rows, Index cols) {
  Matrix<S> m(rows, cols);
  m.setConstant(field.zero());
  return m;
}

template <class S>
Matrix<S> identity(const Field<S>& field, Index n) {
  Matrix<S> m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <class S>
bool same_matrix(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Products with an empty inner dimension come back as untyped zeros; retype
// them so downstream code never sees literals.
template <class S>
Matrix<S> mul(const Field<S>& field, const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw ShapeError("product of incompatible shapes");
  if (a.cols() == 0) return zeros(field, a.rows(), b.cols());
  return a * b;
}

template <class S>
Matrix<S> hstack(const Field<S>& field, Index rows, const std::vector<Matrix<S>>& blocks) {
  Index cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeError("hstack: row count mismatch");
    cols += b.cols();
  }
  Matrix<S> out = zeros(field, rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.block(0, at, rows, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

template <class S>
Matrix<S> vstack(const Field<S>& field, Index cols, const std::vector<Matrix<S>>& blocks) {
  Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack: column count mismatch");
    rows += b.rows();
  }
  Matrix<S> out = zeros(field, rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, 0, b.rows(), cols) = b;
    at += b.rows();
  }
  return out;
}

template <class S>
struct Rref {
  Matrix<S> reduced;
  std::vector<Index> pivots;  // pivot column of row r, r < rank
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Gauss-Jordan elimination with first-nonzero pivoting.
template <class S>
Rref<S> rref(const Field<S>& field, Matrix<S> a) {
  Rref<S> out;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && is_zero(a(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const S inv = field.one() / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const S factor = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) = a(i, j) - factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <class S>
Index rank(const Field<S>& field, const Matrix<S>& a) {
  return rref(field, a).rank();
}

template <class S>
Matrix<S> kernel_from_rref(const Field<S>& field, const Rref<S>& r, Index cols) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix<S> k = zeros(field, cols, cols - r.rank());
  Index col = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, col) = field.one();
    for (Index row = 0; row < r.rank(); ++row) k(r.pivots[row], col) = -r.reduced(row, f);
    ++col;
  }
  return k;
}

// Columns form the canonical basis of {x : a x = 0}.
template <class S>
Matrix<S> kernel(const Field<S>& field, const Matrix<S>& a) {
  return kernel_from_rref(field, rref(field, a), a.cols());
}

// Columns form the canonical (reduced) basis of the column space.
template <class S>
Matrix<S> image(const Field<S>& field, const Matrix<S>& a) {
  Rref<S> r = rref(field, Matrix<S>(a.transpose()));
  return Matrix<S>(r.reduced.topRows(r.rank()).transpose());
}

// (rows - rank) x rows matrix whose kernel is exactly the column space of a.
template <class S>
Matrix<S> cokernel_projection(const Field<S>& field, const Matrix<S>& a) {
  return Matrix<S>(kernel(field, Matrix<S>(a.transpose())).transpose());
}

template <class S>
struct Decomposition {
  Index rank = 0;
  Matrix<S> kernel_basis;
  Matrix<S> image_basis;
  Matrix<S> cokernel_projection;
};

template <class S>
Decomposition<S> decompose(const Field<S>& field, const Matrix<S>& a) {
  Decomposition<S> d;
  Rref<S> r = rref(field, a);
  d.rank = r.rank();
  d.kernel_basis = kernel_from_rref(field, r, a.cols());
  d.image_basis = image(field, a);
  d.cokernel_projection = cokernel_projection(field, a);
  return d;
}

// Canonical particular solution: free variables set to zero.
template <class S>
std::optional<Vector<S>> solve(const Field<S>& field, const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: right-hand side has wrong length");
  Matrix<S> aug = zeros(field, a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Rref<S> r = rref(field, aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector<S> x(a.cols());
  x.setConstant(field.zero());
  for (Index row = 0; row < r.rank(); ++row) x(r.pivots[row]) = r.reduced(row, a.cols());
  return x;
}

// Solves a X = b column by column.
template <class S>
std::optional<Matrix<S>> solve_matrix(const Field<S>& field, const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_matrix: row mismatch");
  Matrix<S> x = zeros(field, a.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto col = solve(field, a, Vector<S>(b.col(j)));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

// Canonical basis of the intersection of two column spans.
template <class S>
Matrix<S> intersect_spans(const Field<S>& field, const Matrix<S>& u, const Matrix<S>& v) {
  if (u.rows() != v.rows()) throw ShapeError("intersect_spans: ambient mismatch");
  Matrix<S> uu = image(field, u), vv = image(field, v);
  Matrix<S> joint = hstack<S>(field, u.rows(), {uu, Matrix<S>(-vv)});
  Matrix<S> k = kernel(field, joint);
  return image(field, mul(field, uu, Matrix<S>(k.topRows(uu.cols()))));
}

// True when every column of `sub` lies in the column span of `span`.
template <class S>
bool contained_in(const Field<S>& field, const Matrix<S>& sub, const Matrix<S>& span) {
  if (sub.cols() == 0) return true;
  return rank(field, hstack<S>(field, span.rows(), {span, sub})) == rank(field, span);
}

}  // namespace preproj
