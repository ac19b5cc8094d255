#include "preproj/representation.hpp"

namespace preproj {

template <class S>
Matrix<S> relation_matrix(const Representation<S>& m, int v) {
  const auto& dq = m.dq();
  Matrix<S> r = zeros(m.field(), m.dim(v), m.dim(v));
  for (int a : dq.out_arrows(v)) {
    Matrix<S> term = mul(m.field(), m.mat(dq.arrow(a).star), m.mat(a));
    if (dq.arrow(a).epsilon > 0) r += term;
    else r -= term;
  }
  return r;
}

template <class S>
std::vector<int> check_relations(const Representation<S>& m) {
  std::vector<int> bad;
  for (int v = 0; v < m.dq().vertex_count(); ++v)
    if (!is_zero_matrix(relation_matrix(m, v))) bad.push_back(v);
  return bad;
}

template <class S>
Representation<S> direct_sum(const Representation<S>& m, const Representation<S>& n) {
  if (!(m.dq() == n.dq())) throw ShapeError("direct sum over different quivers");
  if (!(m.field() == n.field())) throw FieldMismatch("direct sum over different fields");
  const DimVec dims = m.dims() + n.dims();
  std::vector<Matrix<S>> mats;
  for (int a = 0; a < m.dq().arrow_count(); ++a) {
    const auto& arrow = m.dq().arrow(a);
    Matrix<S> block = zeros(m.field(), dims(arrow.dst), dims(arrow.src));
    block.topLeftCorner(m.dim(arrow.dst), m.dim(arrow.src)) = m.mat(a);
    block.bottomRightCorner(n.dim(arrow.dst), n.dim(arrow.src)) = n.mat(a);
    mats.push_back(std::move(block));
  }
  return Representation<S>(m.quiver(), m.field(), dims, std::move(mats));
}

template <class S>
bool same_representation(const Representation<S>& m, const Representation<S>& n) {
  if (!(m.dq() == n.dq()) || !same_dimvec(m.dims(), n.dims())) return false;
  for (int a = 0; a < m.dq().arrow_count(); ++a)
    if (!same_matrix(m.mat(a), n.mat(a))) return false;
  return true;
}

template <class S>
DimVec top(const Representation<S>& m) {
  const auto& dq = m.dq();
  DimVec out(dq.vertex_count());
  for (int v = 0; v < dq.vertex_count(); ++v) {
    std::vector<Matrix<S>> blocks;
    for (int a : dq.in_arrows(v)) blocks.push_back(m.mat(a));
    out(v) = m.dim(v) - static_cast<int>(rank(m.field(), hstack(m.field(), m.dim(v), blocks)));
  }
  return out;
}

template <class S>
DimVec socle(const Representation<S>& m) {
  const auto& dq = m.dq();
  DimVec out(dq.vertex_count());
  for (int v = 0; v < dq.vertex_count(); ++v) {
    std::vector<Matrix<S>> blocks;
    for (int a : dq.out_arrows(v)) blocks.push_back(m.mat(a));
    out(v) = m.dim(v) - static_cast<int>(rank(m.field(), vstack(m.field(), m.dim(v), blocks)));
  }
  return out;
}

namespace {

// Span of the images of u under arrows, per target vertex.
template <class S>
VertexSubspaces<S> push_forward(const Representation<S>& m, const VertexSubspaces<S>& u) {
  const auto& dq = m.dq();
  VertexSubspaces<S> out;
  for (int v = 0; v < dq.vertex_count(); ++v) {
    std::vector<Matrix<S>> blocks;
    for (int a : dq.in_arrows(v))
      blocks.push_back(mul(m.field(), m.mat(a), u.basis[static_cast<std::size_t>(dq.arrow(a).src)]));
    out.basis.push_back(image(m.field(), hstack(m.field(), m.dim(v), blocks)));
  }
  return out;
}

template <class S>
VertexSubspaces<S> whole(const Representation<S>& m) {
  VertexSubspaces<S> u;
  for (int v = 0; v < m.dq().vertex_count(); ++v) u.basis.push_back(identity(m.field(), m.dim(v)));
  return u;
}

}  // namespace

template <class S>
VertexSubspaces<S> radical(const Representation<S>& m) {
  return push_forward(m, whole(m));
}

template <class S>
std::vector<DimVec> radical_series(const Representation<S>& m) {
  std::vector<DimVec> series{m.dims()};
  VertexSubspaces<S> u = whole(m);
  for (int step = 0; step <= m.total_dim(); ++step) {
    u = push_forward(m, u);
    const DimVec d = u.dims();
    if (d == series.back()) break;
    series.push_back(d);
  }
  return series;
}

template <class S>
bool is_nilpotent(const Representation<S>& m) {
  return radical_series(m).back().sum() == 0;
}

template <class S>
bool is_zero_generated(const Representation<S>& m) {
  if (m.dim(0) != 1) return false;
  VertexSubspaces<S> u;
  for (int v = 0; v < m.dq().vertex_count(); ++v)
    u.basis.push_back(v == 0 ? identity(m.field(), 1) : zeros(m.field(), m.dim(v), 0));
  return generated_submodule(m, u).dims() == m.dims();
}

template <class S>
bool is_submodule(const Representation<S>& m, const VertexSubspaces<S>& u) {
  const auto& dq = m.dq();
  if (static_cast<int>(u.basis.size()) != dq.vertex_count()) throw ShapeError("subspace tuple has the wrong length");
  for (int a = 0; a < dq.arrow_count(); ++a) {
    const auto& arrow = dq.arrow(a);
    const Matrix<S> img = mul(m.field(), m.mat(a), u.basis[static_cast<std::size_t>(arrow.src)]);
    if (!contained_in(m.field(), img, u.basis[static_cast<std::size_t>(arrow.dst)])) return false;
  }
  return true;
}

template <class S>
VertexSubspaces<S> generated_submodule(const Representation<S>& m, const VertexSubspaces<S>& u) {
  VertexSubspaces<S> cur;
  for (std::size_t v = 0; v < u.basis.size(); ++v) cur.basis.push_back(image(m.field(), u.basis[v]));
  while (true) {
    VertexSubspaces<S> pushed = push_forward(m, cur);
    VertexSubspaces<S> next;
    bool grew = false;
    for (std::size_t v = 0; v < cur.basis.size(); ++v) {
      next.basis.push_back(image(m.field(), hstack(m.field(), m.dim(static_cast<int>(v)), {cur.basis[v], pushed.basis[v]})));
      grew = grew || next.basis[v].cols() > cur.basis[v].cols();
    }
    cur = std::move(next);
    if (!grew) return cur;
  }
}

template <class S>
Representation<S> subrepresentation(const Representation<S>& m, const VertexSubspaces<S>& u) {
  const auto& dq = m.dq();
  std::vector<Matrix<S>> mats;
  for (int a = 0; a < dq.arrow_count(); ++a) {
    const auto& arrow = dq.arrow(a);
    const auto& us = u.basis[static_cast<std::size_t>(arrow.src)];
    const auto& ut = u.basis[static_cast<std::size_t>(arrow.dst)];
    auto x = solve_matrix(m.field(), ut, mul(m.field(), m.mat(a), us));
    if (!x) throw PreconditionViolated("subspaces are not closed under arrow " + arrow.id);
    mats.push_back(std::move(*x));
  }
  return Representation<S>(m.quiver(), m.field(), u.dims(), std::move(mats));
}

template <class S>
Representation<S> quotient(const Representation<S>& m, const VertexSubspaces<S>& u) {
  if (!is_submodule(m, u)) throw PreconditionViolated("quotient by subspaces that are not a submodule");
  const auto& dq = m.dq();
  const int n = dq.vertex_count();
  std::vector<Matrix<S>> proj, section;
  DimVec dims(n);
  for (int v = 0; v < n; ++v) {
    Matrix<S> p = cokernel_projection(m.field(), u.basis[static_cast<std::size_t>(v)]);
    auto s = solve_matrix(m.field(), p, identity(m.field(), p.rows()));
    if (!s) throw InternalInvariantError("cokernel projection without a section");
    dims(v) = static_cast<int>(p.rows());
    proj.push_back(std::move(p));
    section.push_back(std::move(*s));
  }
  std::vector<Matrix<S>> mats;
  for (int a = 0; a < dq.arrow_count(); ++a) {
    const auto& arrow = dq.arrow(a);
    mats.push_back(mul(m.field(), proj[static_cast<std::size_t>(arrow.dst)],
                       mul(m.field(), m.mat(a), section[static_cast<std::size_t>(arrow.src)])));
  }
  return Representation<S>(m.quiver(), m.field(), dims, std::move(mats));
}

template <class S>
Matrix<S> inverse(const Field<S>& field, const Matrix<S>& g) {
  if (g.rows() != g.cols()) throw ShapeError("inverse of a non-square matrix");
  auto x = solve_matrix(field, g, identity(field, g.rows()));
  if (!x) throw PreconditionViolated("matrix is singular");
  return *x;
}

template <class S>
Representation<S> base_change(const Representation<S>& m, const std::vector<Matrix<S>>& g) {
  const auto& dq = m.dq();
  if (static_cast<int>(g.size()) != dq.vertex_count()) throw ShapeError("one base change per vertex is required");
  std::vector<Matrix<S>> inv;
  for (const auto& x : g) inv.push_back(inverse(m.field(), x));
  std::vector<Matrix<S>> mats;
  for (int a = 0; a < dq.arrow_count(); ++a) {
    const auto& arrow = dq.arrow(a);
    mats.push_back(mul(m.field(), g[static_cast<std::size_t>(arrow.dst)],
                       mul(m.field(), m.mat(a), inv[static_cast<std::size_t>(arrow.src)])));
  }
  return Representation<S>(m.quiver(), m.field(), m.dims(), std::move(mats));
}

template <class S>
Matrix<S> random_invertible(const Field<S>& field, Index n, std::mt19937_64& rng) {
  while (true) {
    Matrix<S> g = zeros(field, n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) g(i, j) = field.random(rng);
    if (rank(field, g) == n) return g;
  }
}

template <class S>
Representation<S> random_base_change(const Representation<S>& m, std::mt19937_64& rng) {
  std::vector<Matrix<S>> g;
  for (int v = 0; v < m.dq().vertex_count(); ++v) g.push_back(random_invertible(m.field(), m.dim(v), rng));
  return base_change(m, g);
}

template <class S>
Representation<S> thin_representation(QuiverPtr quiver, Field<S> field, const DimVec& dims,
                                       const std::map<std::string, S>& values) {
  if (dims.size() != quiver->vertex_count()) throw ShapeError("dimension vector length does not match the quiver");
  if (dims.size() > 0 && (dims.maxCoeff() > 1 || dims.minCoeff() < 0)) throw ShapeError("thin modules have dims in {0,1}");
  auto m = Representation<S>::with_zero_maps(quiver, field, dims);
  for (const auto& [id, value] : values) m.set(id, value);
  return m;
}

std::vector<Representation<Gf>> enumerate_thin_modules(QuiverPtr quiver, const Field<Gf>& field, const DimVec& dims) {
  const auto& dq = *quiver;
  std::vector<int> live;
  for (int a = 0; a < dq.arrow_count(); ++a)
    if (dims(dq.arrow(a).src) == 1 && dims(dq.arrow(a).dst) == 1) live.push_back(a);
  const std::uint64_t q = field.size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < live.size(); ++k) {
    total *= q;
    if (total > 100000000ull) throw SearchBudgetExceeded("too many thin assignments to enumerate");
  }
  const auto base = Representation<Gf>::with_zero_maps(quiver, field, dims);
  std::vector<Representation<Gf>> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Representation<Gf> m = base;
    std::uint64_t c = code;
    for (int a : live) {
      Matrix<Gf> x = zeros(field, 1, 1);
      x(0, 0) = field.element(static_cast<std::uint32_t>(c % q));
      c /= q;
      m.set(a, std::move(x));
    }
    if (check_relations(m).empty()) out.push_back(std::move(m));
  }
  return out;
}

#define PREPROJ_INSTANTIATE(S)                                                                              \
  template Matrix<S> relation_matrix(const Representation<S>&, int);                                        \
  template std::vector<int> check_relations(const Representation<S>&);                                      \
  template Representation<S> direct_sum(const Representation<S>&, const Representation<S>&);                \
  template bool same_representation(const Representation<S>&, const Representation<S>&);                   \
  template DimVec top(const Representation<S>&);                                                            \
  template DimVec socle(const Representation<S>&);                                                          \
  template VertexSubspaces<S> radical(const Representation<S>&);                                            \
  template std::vector<DimVec> radical_series(const Representation<S>&);                                    \
  template bool is_nilpotent(const Representation<S>&);                                                     \
  template bool is_zero_generated(const Representation<S>&);                                                \
  template bool is_submodule(const Representation<S>&, const VertexSubspaces<S>&);                          \
  template VertexSubspaces<S> generated_submodule(const Representation<S>&, const VertexSubspaces<S>&);     \
  template Representation<S> subrepresentation(const Representation<S>&, const VertexSubspaces<S>&);        \
  template Representation<S> quotient(const Representation<S>&, const VertexSubspaces<S>&);                 \
  template Representation<S> base_change(const Representation<S>&, const std::vector<Matrix<S>>&);          \
  template Representation<S> random_base_change(const Representation<S>&, std::mt19937_64&);                \
  template Matrix<S> random_invertible(const Field<S>&, Index, std::mt19937_64&);                           \
  template Matrix<S> inverse(const Field<S>&, const Matrix<S>&);                                            \
  template Representation<S> thin_representation(QuiverPtr, Field<S>, const DimVec&, const std::map<std::string, S>&);

PREPROJ_INSTANTIATE(Rational)
PREPROJ_INSTANTIATE(Gf)

}  // namespace preproj
