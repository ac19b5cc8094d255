#include "preproj/hom.hpp"

#include <random>

namespace preproj {

namespace {

// Offsets of per-vertex blocks Hom(M_v, N_v), vectorized column-major.
template <class S>
std::vector<Index> vertex_offsets(const Representation<S>& m, const Representation<S>& n) {
  std::vector<Index> off{0};
  for (int v = 0; v < m.dq().vertex_count(); ++v) off.push_back(off.back() + Index{n.dim(v)} * m.dim(v));
  return off;
}

// Offsets of per-arrow blocks Hom(M_{s(a)}, N_{t(a)}).
template <class S>
std::vector<Index> arrow_offsets(const Representation<S>& m, const Representation<S>& n) {
  std::vector<Index> off{0};
  for (const auto& a : m.dq().arrows()) off.push_back(off.back() + Index{n.dim(a.dst)} * m.dim(a.src));
  return off;
}

// Adds sign * (L X R) to the equation block starting at row `eq_off` (an
// eq_rows-row matrix, vectorized), where X is the unknown block at
// `var_off` with x_rows rows. Missing L or R means identity.
template <class S>
void add_sandwich(Matrix<S>& a, Index eq_off, Index eq_rows, Index eq_cols, Index var_off, Index x_rows, Index x_cols,
                  const Matrix<S>* l, const Matrix<S>* r, const S& sign) {
  for (Index c = 0; c < eq_cols; ++c)
    for (Index p = 0; p < eq_rows; ++p) {
      const Index row = eq_off + c * eq_rows + p;
      for (Index k = 0; k < x_cols; ++k) {
        if (r && is_zero((*r)(k, c))) continue;
        if (!r && k != c) continue;
        for (Index q = 0; q < x_rows; ++q) {
          if (l && is_zero((*l)(p, q))) continue;
          if (!l && q != p) continue;
          S coeff = sign;
          if (l) coeff = coeff * (*l)(p, q);
          if (r) coeff = coeff * (*r)(k, c);
          a(row, var_off + k * x_rows + q) += coeff;
        }
      }
    }
}

template <class S>
std::vector<Matrix<S>> unpack(const Vector<S>& x, const std::vector<Index>& off, const std::vector<std::pair<int, int>>& shapes) {
  std::vector<Matrix<S>> out;
  for (std::size_t b = 0; b < shapes.size(); ++b) {
    Matrix<S> blk(shapes[b].first, shapes[b].second);
    for (Index c = 0; c < shapes[b].second; ++c)
      for (Index r = 0; r < shapes[b].first; ++r) blk(r, c) = x(off[b] + c * shapes[b].first + r);
    out.push_back(std::move(blk));
  }
  return out;
}

template <class S>
Vector<S> pack(const Field<S>& field, const std::vector<Matrix<S>>& blocks) {
  Index total = 0;
  for (const auto& b : blocks) total += b.size();
  Vector<S> x(total);
  x.setConstant(field.zero());
  Index at = 0;
  for (const auto& b : blocks)
    for (Index c = 0; c < b.cols(); ++c)
      for (Index r = 0; r < b.rows(); ++r) x(at++) = b(r, c);
  return x;
}

template <class S>
void require_compatible(const Representation<S>& m, const Representation<S>& n) {
  if (!(m.dq() == n.dq())) throw ShapeError("modules over different quivers");
  if (!(m.field() == n.field())) throw FieldMismatch("modules over different fields");
}

template <class S>
std::vector<std::pair<int, int>> vertex_shapes(const Representation<S>& m, const Representation<S>& n) {
  std::vector<std::pair<int, int>> s;
  for (int v = 0; v < m.dq().vertex_count(); ++v) s.push_back({n.dim(v), m.dim(v)});
  return s;
}

template <class S>
std::vector<std::pair<int, int>> arrow_shapes(const Representation<S>& m, const Representation<S>& n) {
  std::vector<std::pair<int, int>> s;
  for (const auto& a : m.dq().arrows()) s.push_back({n.dim(a.dst), m.dim(a.src)});
  return s;
}

}  // namespace

template <class S>
Matrix<S> delta1(const Representation<S>& m, const Representation<S>& n) {
  require_compatible(m, n);
  const auto& dq = m.dq();
  const auto voff = vertex_offsets(m, n);
  const auto aoff = arrow_offsets(m, n);
  Matrix<S> d = zeros(m.field(), aoff.back(), voff.back());
  const S plus = m.field().one(), minus = -m.field().one();
  for (int a = 0; a < dq.arrow_count(); ++a) {
    const auto& arrow = dq.arrow(a);
    const Index rows = n.dim(arrow.dst), cols = m.dim(arrow.src);
    // N_a f_s
    add_sandwich(d, aoff[static_cast<std::size_t>(a)], rows, cols, voff[static_cast<std::size_t>(arrow.src)],
                 n.dim(arrow.src), m.dim(arrow.src), &n.mat(a), static_cast<const Matrix<S>*>(nullptr), plus);
    // - f_t M_a
    add_sandwich(d, aoff[static_cast<std::size_t>(a)], rows, cols, voff[static_cast<std::size_t>(arrow.dst)],
                 n.dim(arrow.dst), m.dim(arrow.dst), static_cast<const Matrix<S>*>(nullptr), &m.mat(a), minus);
  }
  return d;
}

template <class S>
Matrix<S> delta2(const Representation<S>& m, const Representation<S>& n) {
  require_compatible(m, n);
  const auto& dq = m.dq();
  const auto voff = vertex_offsets(m, n);
  const auto aoff = arrow_offsets(m, n);
  Matrix<S> d = zeros(m.field(), voff.back(), aoff.back());
  for (int i = 0; i < dq.vertex_count(); ++i) {
    const Index rows = n.dim(i), cols = m.dim(i);
    for (int a : dq.out_arrows(i)) {
      const auto& arrow = dq.arrow(a);
      const int star = arrow.star;
      const S sign = m.field().from_int(arrow.epsilon);
      // eps(a) N_{a*} phi_a
      add_sandwich(d, voff[static_cast<std::size_t>(i)], rows, cols, aoff[static_cast<std::size_t>(a)],
                   n.dim(arrow.dst), m.dim(i), &n.mat(star), static_cast<const Matrix<S>*>(nullptr), sign);
      // eps(a) phi_{a*} M_a
      add_sandwich(d, voff[static_cast<std::size_t>(i)], rows, cols, aoff[static_cast<std::size_t>(star)],
                   n.dim(i), m.dim(arrow.dst), static_cast<const Matrix<S>*>(nullptr), &m.mat(a), sign);
    }
  }
  return d;
}

template <class S>
HomSpace<S> hom_space(const Representation<S>& m, const Representation<S>& n) {
  const Matrix<S> k = kernel(m.field(), delta1(m, n));
  const auto off = vertex_offsets(m, n);
  const auto shapes = vertex_shapes(m, n);
  HomSpace<S> out;
  for (Index c = 0; c < k.cols(); ++c) out.basis.push_back(unpack<S>(k.col(c), off, shapes));
  return out;
}

template <class S>
int hom_dim(const Representation<S>& m, const Representation<S>& n) {
  const Matrix<S> d = delta1(m, n);
  return static_cast<int>(d.cols() - rank(m.field(), d));
}

template <class S>
ComplexDims ext_complex_dims(const Representation<S>& m, const Representation<S>& n) {
  const Matrix<S> d1 = delta1(m, n), d2 = delta2(m, n);
  ComplexDims out;
  out.rank_d1 = static_cast<int>(rank(m.field(), d1));
  out.rank_d2 = static_cast<int>(rank(m.field(), d2));
  out.hom = static_cast<int>(d1.cols()) - out.rank_d1;
  out.cochains = static_cast<int>(d1.rows());
  return out;
}

template <class S>
Ext1Space<S> ext1_space(const Representation<S>& m, const Representation<S>& n) {
  const Field<S>& field = m.field();
  const Matrix<S> d1 = delta1(m, n), d2 = delta2(m, n);
  if (!is_zero_matrix(mul(field, d2, d1))) throw InternalInvariantError("d2 d1 is not zero");
  const Matrix<S> cycles = kernel(field, d2);
  const Matrix<S> bounds = image(field, d1);
  // Extend a basis of the boundaries by cycle columns, greedily in order.
  Matrix<S> span = bounds;
  Index r = bounds.cols();
  Ext1Space<S> out;
  const auto off = arrow_offsets(m, n);
  const auto shapes = arrow_shapes(m, n);
  for (Index c = 0; c < cycles.cols(); ++c) {
    Matrix<S> trial = hstack<S>(field, cycles.rows(), {span, Matrix<S>(cycles.col(c))});
    const Index tr = rank(field, trial);
    if (tr > r) {
      span = std::move(trial);
      r = tr;
      out.cocycle_basis.push_back(unpack<S>(cycles.col(c), off, shapes));
    }
  }
  const int hom_mn = static_cast<int>(d1.cols()) - static_cast<int>(bounds.cols());
  const int hom_nm = hom_dim(n, m);
  const int form = bilinear_form(m.dq(), m.dims(), n.dims());
  if (form != hom_mn - out.dim() + hom_nm)
    throw InternalInvariantError("CB identity fails: form " + std::to_string(form) + ", hom " + std::to_string(hom_mn) +
                                 ", ext " + std::to_string(out.dim()) + ", hom' " + std::to_string(hom_nm));
  return out;
}

template <class S>
bool is_cocycle(const Representation<S>& m, const Representation<S>& n, const ArrowCochain<S>& phi) {
  const auto shapes = arrow_shapes(m, n);
  if (phi.size() != shapes.size()) throw ShapeError("cochain needs one block per arrow");
  for (std::size_t a = 0; a < shapes.size(); ++a)
    if (phi[a].rows() != shapes[a].first || phi[a].cols() != shapes[a].second) throw ShapeError("cochain block has the wrong shape");
  return is_zero_matrix(Matrix<S>(mul(m.field(), delta2(m, n), Matrix<S>(pack(m.field(), phi)))));
}

template <class S>
Representation<S> extension_from_cocycle(const Representation<S>& m, const Representation<S>& n,
                                         const ArrowCochain<S>& phi) {
  require_compatible(m, n);
  const auto& dq = m.dq();
  const auto shapes = arrow_shapes(m, n);
  if (phi.size() != shapes.size()) throw ShapeError("cochain needs one block per arrow");
  const DimVec dims = n.dims() + m.dims();
  std::vector<Matrix<S>> mats;
  for (int a = 0; a < dq.arrow_count(); ++a) {
    const auto& arrow = dq.arrow(a);
    const auto& p = phi[static_cast<std::size_t>(a)];
    if (p.rows() != n.dim(arrow.dst) || p.cols() != m.dim(arrow.src)) throw ShapeError("cochain block has the wrong shape");
    Matrix<S> e = zeros(m.field(), dims(arrow.dst), dims(arrow.src));
    e.topLeftCorner(n.dim(arrow.dst), n.dim(arrow.src)) = n.mat(a);
    e.topRightCorner(n.dim(arrow.dst), m.dim(arrow.src)) = p;
    e.bottomRightCorner(m.dim(arrow.dst), m.dim(arrow.src)) = m.mat(a);
    mats.push_back(std::move(e));
  }
  Representation<S> e(m.quiver(), m.field(), dims, std::move(mats));
  const auto bad = check_relations(e);
  if (!bad.empty()) throw CocycleError("extension violates the relation at vertex " + std::to_string(bad.front()));
  return e;
}

template <class S>
bool extension_splits(const Representation<S>& m, const Representation<S>& n, const Representation<S>& e) {
  require_compatible(m, e);
  const Field<S>& field = m.field();
  // Unknown s: M -> E with E_a s_s = s_t M_a and (last dims-M rows of s_v) = I.
  const Matrix<S> d = delta1(m, e);
  const auto voff = vertex_offsets(m, e);
  Index extra = 0;
  for (int v = 0; v < m.dq().vertex_count(); ++v) extra += Index{m.dim(v)} * m.dim(v);
  Matrix<S> a = zeros(field, d.rows() + extra, d.cols());
  a.topRows(d.rows()) = d;
  Vector<S> b(d.rows() + extra);
  b.setConstant(field.zero());
  Index row = d.rows();
  for (int v = 0; v < m.dq().vertex_count(); ++v) {
    const Index ev = e.dim(v), mv = m.dim(v), nv = n.dim(v);
    if (ev != nv + mv) throw ShapeError("extension has the wrong dimension vector");
    for (Index c = 0; c < mv; ++c)
      for (Index r = 0; r < mv; ++r) {
        a(row, voff[static_cast<std::size_t>(v)] + c * ev + nv + r) = field.one();
        b(row) = r == c ? field.one() : field.zero();
        ++row;
      }
  }
  return solve(field, a, b).has_value();
}

template <class S>
bool is_injective(const HomElement<S>& f, const Field<S>& field) {
  for (const auto& x : f)
    if (rank(field, x) != x.cols()) return false;
  return true;
}

template <class S>
bool is_surjective(const HomElement<S>& f, const Field<S>& field) {
  for (const auto& x : f)
    if (rank(field, x) != x.rows()) return false;
  return true;
}

template <class S>
bool is_invertible(const HomElement<S>& f, const Field<S>& field) {
  for (const auto& x : f)
    if (x.rows() != x.cols() || rank(field, x) != x.rows()) return false;
  return true;
}

template <class S>
TorsionFlags torsion_membership(const Representation<S>& m, int i) {
  if (i < 0 || i >= m.dq().vertex_count()) throw RangeError("vertex out of range");
  TorsionFlags out;
  out.t = top(m)(i) == 0;
  out.y = socle(m)(i) == 0;
  bool add_si = true;
  for (int v = 0; v < m.dq().vertex_count(); ++v)
    if (v != i && m.dim(v) != 0) add_si = false;
  for (const auto& x : m.mats())
    if (!is_zero_matrix(x)) add_si = false;
  out.f = out.x = add_si;
  return out;
}

namespace {

template <class S>
HomElement<S> combine(const Field<S>& field, const std::vector<HomElement<S>>& basis, const std::vector<S>& coeff) {
  HomElement<S> out;
  for (const auto& blk : basis.front()) out.push_back(zeros(field, blk.rows(), blk.cols()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_zero(coeff[k])) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += coeff[k] * basis[k][v];
  }
  return out;
}

template <class S>
bool exhaustive_allowed(const Field<S>& field, std::size_t dim, const SearchConfig& config, std::uint64_t& count) {
  if constexpr (std::is_same_v<S, Gf>) {
    if (static_cast<int>(dim) > config.max_exhaustive_dim) return false;
    count = 1;
    for (std::size_t k = 0; k < dim; ++k) {
      count *= field.size();
      if (count > config.max_exhaustive_count) return false;
    }
    return true;
  } else {
    (void)field;
    (void)dim;
    (void)config;
    (void)count;
    return false;
  }
}

}  // namespace

template <class S>
CombinationResult find_combination(const Field<S>& field, const std::vector<HomElement<S>>& basis,
                                   const std::function<bool(const HomElement<S>&)>& pred, const SearchConfig& config,
                                   HomElement<S>* witness) {
  CombinationResult out;
  if (basis.empty()) {
    out.exhaustive = true;
    return out;
  }
  std::uint64_t count = 0;
  if (exhaustive_allowed(field, basis.size(), config, count)) {
    if constexpr (std::is_same_v<S, Gf>) {
      std::vector<S> coeff(basis.size());
      for (std::uint64_t code = 1; code < count; ++code) {
        std::uint64_t c = code;
        for (auto& x : coeff) {
          x = field.element(static_cast<std::uint32_t>(c % field.size()));
          c /= field.size();
        }
        HomElement<S> f = combine(field, basis, coeff);
        if (pred(f)) {
          out.found = true;
          if (witness) *witness = std::move(f);
          break;
        }
      }
    }
    out.exhaustive = true;
    return out;
  }
  std::mt19937_64 rng(config.seed);
  std::vector<S> coeff(basis.size());
  for (int t = 0; t < config.random_trials; ++t) {
    for (auto& x : coeff) x = field.random(rng);
    HomElement<S> f = combine(field, basis, coeff);
    if (pred(f)) {
      out.found = true;
      if (witness) *witness = std::move(f);
      break;
    }
  }
  return out;
}

template <class S>
bool is_isomorphic(const Representation<S>& m, const Representation<S>& n, const SearchConfig& config) {
  require_compatible(m, n);
  if (!same_dimvec(m.dims(), n.dims())) return false;
  if (m.is_zero()) return true;
  const HomSpace<S> h = hom_space(m, n);
  if (h.dim() == 0) return false;
  const Field<S>& field = m.field();
  const auto res = find_combination<S>(field, h.basis, [&](const HomElement<S>& f) { return is_invertible(f, field); },
                                       config);
  if (res.found) return true;
  if (res.exhaustive) return false;
  const int mm = hom_dim(m, m), nn = hom_dim(n, n);
  if (mm != h.dim() || nn != h.dim()) return false;
  if (top(m) != top(n) || socle(m) != socle(n) || radical_series(m) != radical_series(n)) return false;
  throw Inconclusive("random search found no isomorphism but Hom dimensions agree (" + std::to_string(h.dim()) + ")");
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Inconclusive: return "inconclusive";
  }
  return "?";
}

template <class S>
Tri is_indecomposable(const Representation<S>& m, const SearchConfig& config) {
  if (m.is_zero()) return Tri::No;
  const Field<S>& field = m.field();
  const HomSpace<S> end = hom_space(m, m);
  if (end.dim() == 1) return Tri::Yes;
  auto neither = [&](const HomElement<S>& f) {
    if (is_invertible(f, field)) return false;
    for (const auto& x : f) {
      Matrix<S> p = x;
      for (Index k = 1; k < x.rows(); ++k) p = mul(field, p, x);
      if (!is_zero_matrix(p)) return true;
    }
    return false;
  };
  const auto res = find_combination<S>(field, end.basis, neither, config);
  if (res.found) return Tri::No;
  return res.exhaustive ? Tri::Yes : Tri::Inconclusive;
}

#define PREPROJ_INSTANTIATE(S)                                                                                        \
  template Matrix<S> delta1(const Representation<S>&, const Representation<S>&);                                     \
  template Matrix<S> delta2(const Representation<S>&, const Representation<S>&);                                     \
  template HomSpace<S> hom_space(const Representation<S>&, const Representation<S>&);                                 \
  template int hom_dim(const Representation<S>&, const Representation<S>&);                                           \
  template ComplexDims ext_complex_dims(const Representation<S>&, const Representation<S>&);                          \
  template Ext1Space<S> ext1_space(const Representation<S>&, const Representation<S>&);                               \
  template bool is_cocycle(const Representation<S>&, const Representation<S>&, const ArrowCochain<S>&);               \
  template Representation<S> extension_from_cocycle(const Representation<S>&, const Representation<S>&,               \
                                                    const ArrowCochain<S>&);                                          \
  template bool extension_splits(const Representation<S>&, const Representation<S>&, const Representation<S>&);       \
  template bool is_injective(const HomElement<S>&, const Field<S>&);                                                  \
  template bool is_surjective(const HomElement<S>&, const Field<S>&);                                                 \
  template bool is_invertible(const HomElement<S>&, const Field<S>&);                                                 \
  template TorsionFlags torsion_membership(const Representation<S>&, int);                                            \
  template CombinationResult find_combination(const Field<S>&, const std::vector<HomElement<S>>&,                     \
                                              const std::function<bool(const HomElement<S>&)>&, const SearchConfig&, \
                                              HomElement<S>*);                                                        \
  template bool is_isomorphic(const Representation<S>&, const Representation<S>&, const SearchConfig&);               \
  template Tri is_indecomposable(const Representation<S>&, const SearchConfig&);

PREPROJ_INSTANTIATE(Rational)
PREPROJ_INSTANTIATE(Gf)

}  // namespace preproj
