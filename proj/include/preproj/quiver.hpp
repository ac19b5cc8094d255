#pragma once

#include <Eigen/Core>

#include <memory>
#include <string>
#include <vector>

#include "preproj/errors.hpp"

namespace preproj {

// Integer vectors indexed by vertices: dimension vectors, roots, lattice points.
using DimVec = Eigen::VectorXi;

DimVec unit_vector(int size, int i);
std::string format_dimvec(const DimVec& v);  // "(1,0,1)"
bool same_dimvec(const DimVec& a, const DimVec& b);

struct Arrow {
  std::string id;
  int src = 0;
  int dst = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Throws LoopError / ConnectivityError / RangeError.
  void validate() const;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

struct DoubleArrow {
  std::string id;
  int src = 0;
  int dst = 0;
  int star = 0;     // index of the paired arrow
  int epsilon = 1;  // +1 on arrows of the base quiver, -1 on their stars
};

// One summand eps(a) * (a then a*) of the relation at a vertex.
struct RelationTerm {
  int first = 0;   // a, leaving the vertex
  int second = 0;  // a*, returning
  int sign = 1;
};

struct PreprojectiveRelation {
  int vertex = 0;
  std::vector<RelationTerm> terms;
};

class DoubleQuiver {
 public:
  // Base arrows keep their ids; the star of "x" is "xs". Base arrows come
  // first, in input order, followed by their stars in the same order.
  static DoubleQuiver build(const Quiver& q);

  int vertex_count() const { return base_.vertex_count(); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<DoubleArrow>& arrows() const { return arrows_; }
  const DoubleArrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  const Quiver& base() const { return base_; }

  // Arrows of the double quiver leaving / entering a vertex, in index order.
  const std::vector<int>& out_arrows(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in_arrows(int v) const { return in_[static_cast<std::size_t>(v)]; }

  int find_arrow(const std::string& id) const;  // -1 when absent
  // Number of base arrows joining i and j in either direction.
  int edges_between(int i, int j) const;
  // Gram matrix of the symmetric form: (e_i, e_j).
  Eigen::MatrixXi form_matrix() const;

  // Set by the standard constructors, e.g. "A~2"; empty otherwise.
  const std::string& type_name() const { return type_name_; }
  void set_type_name(std::string name) { type_name_ = std::move(name); }

  friend bool operator==(const DoubleQuiver& a, const DoubleQuiver& b);

 private:
  Quiver base_;
  std::vector<DoubleArrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::string type_name_;
};

using QuiverPtr = std::shared_ptr<const DoubleQuiver>;

// (a, b) = sum 2 a_i b_i - sum over double arrows a_{s} b_{t}.
int bilinear_form(const DoubleQuiver& dq, const DimVec& a, const DimVec& b);

std::vector<PreprojectiveRelation> relations(const DoubleQuiver& dq);

enum class DynkinFamily { A, D, E };

struct ExtendedDynkin {
  DynkinFamily family = DynkinFamily::A;
  int n = 0;  // vertices are 0..n, vertex 0 is the extending vertex
  QuiverPtr quiver;
  DimVec d;  // minimal imaginary root
  std::string name;  // "A~2", "D~4", "E~6", ...
};

// Orientation: the A~ cycle runs 0 -> 1 -> ... -> n -> 0; D~ and E~ arrows
// point toward the branch vertex (along the chain toward vertex 2 for D~).
ExtendedDynkin standard_extended_dynkin(DynkinFamily family, int n);
// Accepts "Ã2", "A~2", "At2", "D̃4", "D~4", "E~6", ...
ExtendedDynkin parse_extended_dynkin(const std::string& text);

std::string to_dot(const DoubleQuiver& dq);

}  // namespace preproj
