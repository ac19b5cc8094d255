#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "preproj/linalg.hpp"
#include "preproj/quiver.hpp"

namespace preproj {

// A finite-dimensional module over the preprojective algebra, stored as one
// matrix per arrow of the double quiver. M_a is dims[t(a)] x dims[s(a)], so
// the path "a then b" acts as M_b * M_a.
template <class S>
class Representation {
 public:
  using Scalar = S;

  Representation() = default;
  // Throws ShapeError when a matrix does not match dims.
  Representation(QuiverPtr quiver, Field<S> field, DimVec dims, std::vector<Matrix<S>> mats)
      : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), mats_(std::move(mats)) {
    validate_shapes();
  }

  // All arrow maps zero.
  static Representation with_zero_maps(QuiverPtr quiver, Field<S> field, DimVec dims) {
    if (dims.size() != quiver->vertex_count()) throw ShapeError("dimension vector length does not match the quiver");
    std::vector<Matrix<S>> mats;
    for (const auto& a : quiver->arrows()) mats.push_back(zeros(field, dims(a.dst), dims(a.src)));
    return Representation(std::move(quiver), std::move(field), std::move(dims), std::move(mats));
  }
  static Representation zero(QuiverPtr quiver, Field<S> field) {
    const int n = quiver->vertex_count();
    return with_zero_maps(std::move(quiver), std::move(field), DimVec::Zero(n));
  }
  static Representation simple(QuiverPtr quiver, Field<S> field, int i) {
    if (i < 0 || i >= quiver->vertex_count()) throw RangeError("vertex " + std::to_string(i) + " out of range");
    const int n = quiver->vertex_count();
    return with_zero_maps(std::move(quiver), std::move(field), unit_vector(n, i));
  }

  const QuiverPtr& quiver() const { return quiver_; }
  const DoubleQuiver& dq() const { return *quiver_; }
  const Field<S>& field() const { return field_; }
  const DimVec& dims() const { return dims_; }
  int dim(int v) const { return dims_(v); }
  int total_dim() const { return dims_.sum(); }
  bool is_zero() const { return total_dim() == 0; }
  bool is_thin() const { return dims_.size() == 0 || dims_.maxCoeff() <= 1; }

  const std::vector<Matrix<S>>& mats() const { return mats_; }
  const Matrix<S>& mat(int a) const { return mats_[static_cast<std::size_t>(a)]; }
  const Matrix<S>& mat(const std::string& id) const { return mat(arrow_index(id)); }

  // Builder-style setters, used while assembling a module.
  Representation& set(int a, Matrix<S> m) {
    const auto& arrow = quiver_->arrow(a);
    if (m.rows() != dims_(arrow.dst) || m.cols() != dims_(arrow.src))
      throw ShapeError("matrix for arrow " + arrow.id + " has the wrong shape");
    mats_[static_cast<std::size_t>(a)] = std::move(m);
    return *this;
  }
  Representation& set(const std::string& id, Matrix<S> m) { return set(arrow_index(id), std::move(m)); }
  // Thin shortcut: a 1x1 map.
  Representation& set(const std::string& id, const S& value) {
    Matrix<S> m = zeros(field_, 1, 1);
    m(0, 0) = value;
    return set(id, std::move(m));
  }

 private:
  int arrow_index(const std::string& id) const {
    const int a = quiver_->find_arrow(id);
    if (a < 0) throw RangeError("no arrow named " + id);
    return a;
  }

  void validate_shapes() const {
    if (!quiver_) throw ShapeError("representation without a quiver");
    if (dims_.size() != quiver_->vertex_count()) throw ShapeError("dimension vector length does not match the quiver");
    for (Index v = 0; v < dims_.size(); ++v)
      if (dims_(v) < 0) throw ShapeError("negative dimension at vertex " + std::to_string(v));
    if (static_cast<int>(mats_.size()) != quiver_->arrow_count()) throw ShapeError("one matrix per arrow is required");
    for (int a = 0; a < quiver_->arrow_count(); ++a) {
      const auto& arrow = quiver_->arrow(a);
      const auto& m = mats_[static_cast<std::size_t>(a)];
      if (m.rows() != dims_(arrow.dst) || m.cols() != dims_(arrow.src))
        throw ShapeError("matrix for arrow " + arrow.id + " is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(dims_(arrow.dst)) + "x" +
                         std::to_string(dims_(arrow.src)));
    }
  }

  QuiverPtr quiver_;
  Field<S> field_;
  DimVec dims_;
  std::vector<Matrix<S>> mats_;
};

// Per-vertex subspaces given by canonical basis matrices (columns).
template <class S>
struct VertexSubspaces {
  std::vector<Matrix<S>> basis;
  DimVec dims() const {
    DimVec d(static_cast<Index>(basis.size()));
    for (std::size_t v = 0; v < basis.size(); ++v) d(static_cast<Index>(v)) = static_cast<int>(basis[v].cols());
    return d;
  }
};

// Matrix of the relation at vertex v: sum over a leaving v of eps(a) M_{a*} M_a.
template <class S>
Matrix<S> relation_matrix(const Representation<S>& m, int v);
// Vertices whose relation fails; empty when m is a module.
template <class S>
std::vector<int> check_relations(const Representation<S>& m);

template <class S>
Representation<S> direct_sum(const Representation<S>& m, const Representation<S>& n);

// Exact equality of dims and every matrix.
template <class S>
bool same_representation(const Representation<S>& m, const Representation<S>& n);

// Multiplicity of S_i in the top M / MI, per vertex.
template <class S>
DimVec top(const Representation<S>& m);
// Multiplicity of S_i in the socle, per vertex.
template <class S>
DimVec socle(const Representation<S>& m);

// MI: at each vertex the span of the images of arrows ending there.
template <class S>
VertexSubspaces<S> radical(const Representation<S>& m);
// Dimension vectors of M, MI, MI^2, ... down to the first repeat.
template <class S>
std::vector<DimVec> radical_series(const Representation<S>& m);
template <class S>
bool is_nilpotent(const Representation<S>& m);
// M_0 is one-dimensional and generates M. For nilpotent M this is top(M) = S_0.
template <class S>
bool is_zero_generated(const Representation<S>& m);

template <class S>
bool is_submodule(const Representation<S>& m, const VertexSubspaces<S>& u);
// Smallest submodule containing u.
template <class S>
VertexSubspaces<S> generated_submodule(const Representation<S>& m, const VertexSubspaces<S>& u);
// Module structure on u in its canonical basis; u must be a submodule.
template <class S>
Representation<S> subrepresentation(const Representation<S>& m, const VertexSubspaces<S>& u);
// M / u, with vertex coordinates given by the canonical cokernel projections.
template <class S>
Representation<S> quotient(const Representation<S>& m, const VertexSubspaces<S>& u);

// N_a = g_t M_a g_s^{-1}; every g_v must be invertible.
template <class S>
Representation<S> base_change(const Representation<S>& m, const std::vector<Matrix<S>>& g);
template <class S>
Representation<S> random_base_change(const Representation<S>& m, std::mt19937_64& rng);
template <class S>
Matrix<S> random_invertible(const Field<S>& field, Index n, std::mt19937_64& rng);
template <class S>
Matrix<S> inverse(const Field<S>& field, const Matrix<S>& g);

// Thin module from arrow values; unlisted arrows are zero.
template <class S>
Representation<S> thin_representation(QuiverPtr quiver, Field<S> field, const DimVec& dims,
                                       const std::map<std::string, S>& values);

// Every thin module with the given dimension vector over a finite field: one
// entry per relation-satisfying assignment of arrow values, no identification
// up to isomorphism. Arrows leaving the support are zero.
std::vector<Representation<Gf>> enumerate_thin_modules(QuiverPtr quiver, const Field<Gf>& field, const DimVec& dims);

}  // namespace preproj
