#include "preproj/reflection.hpp"

#include <algorithm>

namespace preproj {

namespace {

template <class S>
void require_vertex(const Representation<S>& m, int i) {
  if (i < 0 || i >= m.dq().vertex_count()) throw RangeError("vertex " + std::to_string(i) + " out of range");
}

template <class S>
void require_module(const Representation<S>& n, const char* what) {
  const auto bad = check_relations(n);
  if (!bad.empty())
    throw InternalInvariantError(std::string(what) + " broke the relation at vertex " + std::to_string(bad.front()));
}

template <class S>
Matrix<S> signed_copy(const Field<S>& field, const Matrix<S>& m, int sign) {
  if (sign > 0) return m;
  Matrix<S> out = m;
  for (Index j = 0; j < out.cols(); ++j)
    for (Index r = 0; r < out.rows(); ++r) out(r, j) = -out(r, j);
  (void)field;
  return out;
}

}  // namespace

template <class S>
ReflectResult<S> reflect_plus(int i, const Representation<S>& m) {
  require_vertex(m, i);
  const auto& dq = m.dq();
  const Field<S>& field = m.field();
  const auto& outs = dq.out_arrows(i);
  std::vector<Matrix<S>> blocks;
  std::vector<Index> offset{0};
  for (int a : outs) {
    blocks.push_back(signed_copy(field, m.mat(dq.arrow(a).star), dq.arrow(a).epsilon));
    offset.push_back(offset.back() + m.dim(dq.arrow(a).dst));
  }
  const Matrix<S> f = hstack(field, m.dim(i), blocks);
  const Rref<S> r = rref(field, f);
  const Matrix<S> k = kernel_from_rref(field, r, f.cols());
  DimVec dims = m.dims();
  dims(i) = static_cast<int>(k.cols());
  std::vector<Matrix<S>> mats;
  for (int c = 0; c < dq.arrow_count(); ++c) {
    const auto& arrow = dq.arrow(c);
    if (arrow.dst == i) {
      std::vector<Matrix<S>> parts;
      for (int a : outs) parts.push_back(mul(field, m.mat(a), m.mat(c)));
      const Matrix<S> stacked = vstack(field, m.dim(arrow.src), parts);
      auto x = solve_matrix(field, k, stacked);
      if (!x) throw InternalInvariantError("incoming arrow " + arrow.id + " does not land in ker f_" + std::to_string(i));
      mats.push_back(std::move(*x));
    } else if (arrow.src == i) {
      const auto pos = static_cast<std::size_t>(std::find(outs.begin(), outs.end(), c) - outs.begin());
      mats.push_back(k.middleRows(offset[pos], offset[pos + 1] - offset[pos]));
    } else {
      mats.push_back(m.mat(c));
    }
  }
  ReflectResult<S> out{Representation<S>(m.quiver(), field, dims, std::move(mats)), m.dim(i) - static_cast<int>(r.rank())};
  require_module(out.module, "reflect_plus");
  return out;
}

template <class S>
ReflectResult<S> reflect_minus(int i, const Representation<S>& m) {
  require_vertex(m, i);
  const auto& dq = m.dq();
  const Field<S>& field = m.field();
  const auto& ins = dq.in_arrows(i);
  std::vector<Matrix<S>> blocks;
  std::vector<Index> offset{0};
  for (int b : ins) {
    const int star = dq.arrow(b).star;
    blocks.push_back(signed_copy(field, m.mat(star), dq.arrow(star).epsilon));
    offset.push_back(offset.back() + m.dim(dq.arrow(b).src));
  }
  const Matrix<S> g = vstack(field, m.dim(i), blocks);
  const Index rank_g = rank(field, g);
  const Matrix<S> p = cokernel_projection(field, g);
  auto section = solve_matrix(field, p, identity(field, p.rows()));
  if (!section) throw InternalInvariantError("cokernel projection without a section");
  DimVec dims = m.dims();
  dims(i) = static_cast<int>(p.rows());
  std::vector<Matrix<S>> mats;
  for (int c = 0; c < dq.arrow_count(); ++c) {
    const auto& arrow = dq.arrow(c);
    if (arrow.dst == i) {
      const auto pos = static_cast<std::size_t>(std::find(ins.begin(), ins.end(), c) - ins.begin());
      mats.push_back(p.middleCols(offset[pos], offset[pos + 1] - offset[pos]));
    } else if (arrow.src == i) {
      std::vector<Matrix<S>> parts;
      for (int b : ins) parts.push_back(mul(field, m.mat(c), m.mat(b)));
      const Matrix<S> joined = hstack(field, m.dim(arrow.dst), parts);
      mats.push_back(mul(field, joined, *section));
    } else {
      mats.push_back(m.mat(c));
    }
  }
  ReflectResult<S> out{Representation<S>(m.quiver(), field, dims, std::move(mats)), m.dim(i) - static_cast<int>(rank_g)};
  require_module(out.module, "reflect_minus");
  return out;
}

template <class S>
WordResult<S> apply_word(const WeylWord& word, const Representation<S>& m, const Theta& theta, bool check_semistable,
                         std::uint64_t budget) {
  if (theta.size() != m.dq().vertex_count()) throw ShapeError("theta length does not match the quiver");
  if (check_semistable) {
    const auto v = stability_verdict(m, theta, budget);
    if (!v.semistable())
      throw PreconditionViolated(std::string("apply_word needs a semistable module, verdict: ") + to_string(v.status));
  }
  WordResult<S> cur{m, theta};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    if (i < 0 || i >= m.dq().vertex_count()) throw RangeError("letter " + std::to_string(i) + " out of range");
    const Rational& ti = cur.theta(i);
    if (ti == 0) throw NotGenericStep("theta_" + std::to_string(i) + " = 0 at letter s" + std::to_string(i));
    ReflectResult<S> r = ti > 0 ? reflect_plus(i, cur.module) : reflect_minus(i, cur.module);
    if (r.defect != 0)
      throw PreconditionViolated("defect " + std::to_string(r.defect) + " at letter s" + std::to_string(i));
    cur.module = std::move(r.module);
    cur.theta = reflect_theta(m.dq(), i, cur.theta);
  }
  return cur;
}

template <class S>
ShiftedModule<S> compute_siw(const RootSystem& rs, const Field<S>& field, const WeylWord& w, int i) {
  if (!rs.is_reduced(w)) throw PreconditionViolated("word " + format_word(w) + " is not reduced");
  const QuiverPtr& q = rs.type().quiver;
  ShiftedModule<S> cur{Representation<S>::simple(q, field, i), 0};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int j = *it;
    ReflectResult<S> r = reflect_plus(j, cur.module);
    if (r.defect == 0) {
      cur.module = std::move(r.module);
    } else if (r.module.is_zero()) {
      cur.module = Representation<S>::with_zero_maps(q, field, r.defect * unit_vector(q->vertex_count(), j));
      cur.degree += 1;
      if (cur.degree > 1) throw DichotomyError("degree exceeds 1 at letter s" + std::to_string(j) + " of " + format_word(w));
    } else {
      throw DichotomyError("letter s" + std::to_string(j) + " of " + format_word(w) + " leaves both a kernel and a cokernel");
    }
  }
  return cur;
}

#define PREPROJ_INSTANTIATE(S)                                                                                    \
  template ReflectResult<S> reflect_plus(int, const Representation<S>&);                                          \
  template ReflectResult<S> reflect_minus(int, const Representation<S>&);                                         \
  template WordResult<S> apply_word(const WeylWord&, const Representation<S>&, const Theta&, bool, std::uint64_t); \
  template ShiftedModule<S> compute_siw(const RootSystem&, const Field<S>&, const WeylWord&, int);

PREPROJ_INSTANTIATE(Rational)
PREPROJ_INSTANTIATE(Gf)

}  // namespace preproj
