#pragma once

#include <Eigen/Core>

#include <random>
#include <string>
#include <vector>

#include "preproj/linalg.hpp"
#include "preproj/quiver.hpp"

namespace preproj {

// Stability parameters: rational weights on vertices, theta(alpha) = sum theta_i alpha_i.
using Theta = Vector<Rational>;

Theta make_theta(std::initializer_list<long> values);
// Comma-separated rationals, e.g. "-2,1,1" or "-1/2,1/2,0".
Theta parse_theta(const std::string& text);
std::string format_theta(const Theta& theta);
Rational pair(const Theta& theta, const DimVec& alpha);

// s_i(x) = x - (x, e_i) e_i.
DimVec reflect_dimvec(const DoubleQuiver& dq, int i, const DimVec& alpha);
// s_i(theta) = theta - theta_i sum_j (e_i, e_j) e_j^*.
Theta reflect_theta(const DoubleQuiver& dq, int i, const Theta& theta);

// The letters [l1, ..., lm] stand for the product s_{l1} ... s_{lm}; it acts
// on vectors right to left.
using WeylWord = std::vector<int>;

// "1" for the empty word, otherwise "s1s2s1".
std::string format_word(const WeylWord& w);
// Accepts "1,2,1", "s1s2s1", "s1 s2", and "" / "1" / "e" / "id" as the identity
// when `one_is_identity` is set.
WeylWord parse_word(const std::string& text, bool one_is_identity = false);

DimVec act_on_dimvec(const DoubleQuiver& dq, const WeylWord& w, const DimVec& alpha);
Theta act_on_theta(const DoubleQuiver& dq, const WeylWord& w, const Theta& theta);

// Finite root system on X_* = Z^{Q_0} / Z d, in coordinates along the simple
// roots of vertices 1..n.
class RootSystem {
 public:
  explicit RootSystem(ExtendedDynkin type);

  const ExtendedDynkin& type() const { return type_; }
  const DoubleQuiver& dq() const { return *type_.quiver; }
  int rank() const { return n_; }
  const Eigen::MatrixXi& gram() const { return gram_; }

  // Positive roots first (by height, then lexicographically decreasing),
  // followed by their negatives in the same order.
  const std::vector<DimVec>& roots() const { return roots_; }
  const std::vector<DimVec>& positive_roots() const { return positive_; }
  bool is_root(const DimVec& x) const;
  static bool is_positive(const DimVec& x);
  static bool is_negative(const DimVec& x);

  // alpha -> (alpha_i - alpha_0 d_i)_{i >= 1}.
  DimVec project(const DimVec& alpha) const;
  // x -> (0, x).
  DimVec lift(const DimVec& x) const;
  DimVec simple_root(int i) const;  // i in 1..n

  Eigen::MatrixXi reflection(int i) const;
  Eigen::MatrixXi matrix(const WeylWord& w) const;
  DimVec act(const WeylWord& w, const DimVec& x) const { return matrix(w) * x; }

  int length(const Eigen::MatrixXi& w) const;
  int length(const WeylWord& w) const { return length(matrix(w)); }
  bool is_reduced(const WeylWord& w) const { return static_cast<int>(w.size()) == length(w); }
  WeylWord multiply(const WeylWord& a, const WeylWord& b) const;
  WeylWord inverse(const WeylWord& w) const;
  bool equal(const WeylWord& a, const WeylWord& b) const { return matrix(a) == matrix(b); }
  // Lexicographically first reduced word, built from smallest left descents.
  WeylWord canonical(const Eigen::MatrixXi& w) const;
  WeylWord canonical(const WeylWord& w) const { return canonical(matrix(w)); }
  // Every element once, as canonical words, shortest first. Throws
  // SearchBudgetExceeded past `budget` elements.
  std::vector<WeylWord> all_elements(std::size_t budget = 1000000) const;
  // Canonical word of the product of `steps` uniformly chosen letters.
  WeylWord random_element(std::mt19937_64& rng, int steps) const;

  // theta evaluated on an element of X_* (coordinates), theta in Theta_d.
  Rational evaluate(const Theta& theta, const DimVec& x) const;
  // Throws NotInThetaD when theta(d) != 0.
  void require_theta_d(const Theta& theta) const;
  bool is_generic(const Theta& theta) const;
  // theta(w e_i) > 0 for all i.
  bool in_chamber(const Theta& theta, const WeylWord& w) const;
  // The w with theta in C(w); throws NotGeneric.
  WeylWord chamber_of(const Theta& theta) const;
  // theta_i = 1 for i >= 1 and theta_0 = -sum d_i; lies in C(1).
  Theta base_theta() const;
  // w applied to base_theta(); lies in C(w).
  Theta chamber_sample(const WeylWord& w) const;

 private:
  ExtendedDynkin type_;
  int n_ = 0;
  Eigen::MatrixXi gram_;
  std::vector<DimVec> roots_, positive_;
};

}  // namespace preproj
