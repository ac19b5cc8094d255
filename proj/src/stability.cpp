#include "preproj/stability.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace preproj {

namespace {

template <class S>
bool nonzero_arrow(const Representation<S>& m, int a) {
  return !is_zero_matrix(m.mat(a));
}

DimVec mask_dims(std::uint32_t mask, int n) {
  DimVec d = DimVec::Zero(n);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) d(v) = 1;
  return d;
}

bool dimvec_less(const DimVec& a, const DimVec& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

void sort_unique(std::vector<DimVec>& v) {
  std::sort(v.begin(), v.end(), dimvec_less);
  v.erase(std::unique(v.begin(), v.end(), [](const DimVec& a, const DimVec& b) { return a == b; }), v.end());
}

template <class S>
void require_thin(const Representation<S>& m) {
  if (!m.is_thin()) throw UnsupportedShape("operation needs a thin module, got dims " + format_dimvec(m.dims()));
  if (m.dq().vertex_count() > 24) throw UnsupportedShape("thin enumeration is limited to 24 vertices");
}

template <class S>
VertexSubspaces<S> mask_subspaces(const Representation<S>& m, std::uint32_t mask) {
  VertexSubspaces<S> u;
  for (int v = 0; v < m.dq().vertex_count(); ++v)
    u.basis.push_back((mask >> v & 1u) ? identity(m.field(), m.dim(v)) : zeros(m.field(), m.dim(v), 0));
  return u;
}

// Backtracking over per-vertex subspace choices, keeping arrow-closed tuples.
// `visit` returns false to stop.
void for_each_submodule(const Representation<Gf>& m, const std::vector<std::vector<Matrix<Gf>>>& choices,
                        const std::function<bool(const std::vector<const Matrix<Gf>*>&)>& visit) {
  const auto& dq = m.dq();
  const int n = dq.vertex_count();
  std::vector<const Matrix<Gf>*> pick(static_cast<std::size_t>(n), nullptr);
  bool stop = false;
  std::function<void(int)> rec = [&](int v) {
    if (stop) return;
    if (v == n) {
      if (!visit(pick)) stop = true;
      return;
    }
    for (const auto& u : choices[static_cast<std::size_t>(v)]) {
      pick[static_cast<std::size_t>(v)] = &u;
      bool ok = true;
      for (int a = 0; a < dq.arrow_count() && ok; ++a) {
        const auto& arrow = dq.arrow(a);
        const int hi = std::max(arrow.src, arrow.dst);
        if (hi != v) continue;
        const auto& us = *pick[static_cast<std::size_t>(arrow.src)];
        const auto& ut = *pick[static_cast<std::size_t>(arrow.dst)];
        ok = contained_in(m.field(), mul(m.field(), m.mat(a), us), ut);
      }
      if (ok) rec(v + 1);
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<std::vector<Matrix<Gf>>> subspace_choices(const Representation<Gf>& m, std::uint64_t budget,
                                                      const DimVec* only_dims = nullptr) {
  std::vector<std::vector<Matrix<Gf>>> choices;
  double total = 1;
  for (int v = 0; v < m.dq().vertex_count(); ++v) {
    auto all = all_subspaces(m.field(), m.dim(v), budget);
    if (only_dims) {
      std::vector<Matrix<Gf>> keep;
      for (auto& u : all)
        if (u.cols() == (*only_dims)(v)) keep.push_back(std::move(u));
      all = std::move(keep);
    }
    total *= static_cast<double>(all.size());
    if (total > static_cast<double>(budget))
      throw SearchBudgetExceeded("more than " + std::to_string(budget) + " subspace tuples");
    choices.push_back(std::move(all));
  }
  return choices;
}

}  // namespace

std::vector<Matrix<Gf>> all_subspaces(const Field<Gf>& field, int n, std::uint64_t budget) {
  std::vector<Matrix<Gf>> out;
  const std::uint64_t q = field.size();
  for (int k = 0; k <= n; ++k) {
    // Pivot sets as increasing index vectors.
    std::vector<int> piv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
    while (true) {
      // Free positions: row r, columns after its pivot that are not pivots.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({r, c});
      std::uint64_t count = 1;
      for (std::size_t f = 0; f < free.size(); ++f) {
        count *= q;
        if (count > budget) throw SearchBudgetExceeded("too many subspaces of F_q^" + std::to_string(n));
      }
      for (std::uint64_t code = 0; code < count; ++code) {
        Matrix<Gf> b = zeros(field, n, k);
        for (int r = 0; r < k; ++r) b(piv[static_cast<std::size_t>(r)], r) = field.one();
        std::uint64_t c = code;
        for (const auto& [r, col] : free) {
          b(col, r) = field.element(static_cast<std::uint32_t>(c % q));
          c /= q;
        }
        out.push_back(std::move(b));
        if (out.size() > budget) throw SearchBudgetExceeded("too many subspaces of F_q^" + std::to_string(n));
      }
      // Next combination.
      int i = k - 1;
      while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++piv[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

template <class S>
std::vector<std::uint32_t> closed_supports(const Representation<S>& m) {
  require_thin(m);
  const auto& dq = m.dq();
  const int n = dq.vertex_count();
  std::uint32_t support = 0;
  for (int v = 0; v < n; ++v)
    if (m.dim(v) == 1) support |= 1u << v;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (src bit, dst bit) of nonzero arrows
  for (int a = 0; a < dq.arrow_count(); ++a)
    if (m.dim(dq.arrow(a).src) == 1 && m.dim(dq.arrow(a).dst) == 1 && nonzero_arrow(m, a))
      edges.push_back({1u << dq.arrow(a).src, 1u << dq.arrow(a).dst});
  std::vector<std::uint32_t> out;
  // Enumerate submasks of the support in increasing order.
  for (std::uint32_t sub = 0;; sub = (sub - support) & support) {
    bool closed = true;
    for (const auto& [s, t] : edges)
      if ((sub & s) && !(sub & t)) closed = false;
    if (closed) out.push_back(sub);
    if (sub == support) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class S>
std::vector<DimVec> submodule_dimvecs_thin(const Representation<S>& m) {
  std::vector<DimVec> out;
  for (std::uint32_t mask : closed_supports(m)) out.push_back(mask_dims(mask, m.dq().vertex_count()));
  sort_unique(out);
  return out;
}

std::vector<DimVec> submodule_dimvecs_bruteforce(const Representation<Gf>& m, std::uint64_t budget) {
  const auto choices = subspace_choices(m, budget);
  std::set<std::vector<int>> seen;
  for_each_submodule(m, choices, [&](const std::vector<const Matrix<Gf>*>& pick) {
    std::vector<int> d;
    for (const auto* u : pick) d.push_back(static_cast<int>(u->cols()));
    seen.insert(d);
    return true;
  });
  std::vector<DimVec> out;
  for (const auto& d : seen) out.push_back(Eigen::Map<const DimVec>(d.data(), static_cast<Index>(d.size())));
  sort_unique(out);
  return out;
}

template <class S>
std::vector<DimVec> submodule_dimvecs(const Representation<S>& m, std::uint64_t budget) {
  if (m.is_thin()) return submodule_dimvecs_thin(m);
  if constexpr (std::is_same_v<S, Gf>) {
    return submodule_dimvecs_bruteforce(m, budget);
  } else {
    (void)budget;
    throw UnsupportedShape("submodule enumeration over Q needs a thin module");
  }
}

template <class S>
std::optional<VertexSubspaces<S>> find_submodule(const Representation<S>& m, const DimVec& beta, std::uint64_t budget) {
  if (beta.size() != m.dq().vertex_count()) throw ShapeError("dimension vector length does not match the quiver");
  if (m.is_thin()) {
    for (std::uint32_t mask : closed_supports(m))
      if (mask_dims(mask, m.dq().vertex_count()) == beta) return mask_subspaces(m, mask);
    return std::nullopt;
  }
  if constexpr (std::is_same_v<S, Gf>) {
    for (int v = 0; v < beta.size(); ++v)
      if (beta(v) < 0 || beta(v) > m.dim(v)) return std::nullopt;
    const auto choices = subspace_choices(m, budget, &beta);
    std::optional<VertexSubspaces<S>> found;
    for_each_submodule(m, choices, [&](const std::vector<const Matrix<Gf>*>& pick) {
      VertexSubspaces<S> u;
      for (const auto* x : pick) u.basis.push_back(*x);
      found = std::move(u);
      return false;
    });
    return found;
  } else {
    (void)budget;
    throw UnsupportedShape("submodule search over Q needs a thin module");
  }
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Stable: return "stable";
    case Status::StrictlySemistable: return "strictly-semistable";
    case Status::Unstable: return "unstable";
    case Status::NotInThetaKernel: return "not-in-theta-kernel";
  }
  return "?";
}

template <class S>
StabilityVerdict stability_verdict(const Representation<S>& m, const Theta& theta, std::uint64_t budget) {
  StabilityVerdict out;
  if (theta.size() != m.dq().vertex_count()) throw ShapeError("theta length does not match the quiver");
  if (pair(theta, m.dims()) != 0) {
    out.status = Status::NotInThetaKernel;
    return out;
  }
  if (m.is_zero()) {
    out.status = Status::StrictlySemistable;
    out.witness = m.dims();
    return out;
  }
  const auto subs = submodule_dimvecs(m, budget);
  std::optional<DimVec> negative, equal;
  Rational best = 0;
  for (const auto& beta : subs) {
    if (beta.sum() == 0 || beta == m.dims()) continue;
    const Rational v = pair(theta, beta);
    if (v < 0 && (!negative || v < best)) {
      negative = beta;
      best = v;
    } else if (v == 0 && !equal) {
      equal = beta;
    }
  }
  if (negative) {
    out.status = Status::Unstable;
    out.witness = negative;
  } else if (equal) {
    out.status = Status::StrictlySemistable;
    out.witness = equal;
  } else {
    out.status = Status::Stable;
  }
  return out;
}

template <class S>
Representation<S> thin_canonical_form(const Representation<S>& m) {
  require_thin(m);
  const auto& dq = m.dq();
  const Field<S>& field = m.field();
  const int n = dq.vertex_count();
  std::vector<S> g(static_cast<std::size_t>(n), field.one());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  auto value = [&](int a) { return m.mat(a)(0, 0); };
  auto live = [&](int a) { return m.dim(dq.arrow(a).src) == 1 && m.dim(dq.arrow(a).dst) == 1 && nonzero_arrow(m, a); };
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)] || m.dim(root) == 0) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int a = 0; a < dq.arrow_count(); ++a) {
        if (!live(a)) continue;
        const auto& arrow = dq.arrow(a);
        int u = -1;
        if (arrow.src == v) u = arrow.dst;
        else if (arrow.dst == v) u = arrow.src;
        if (u < 0 || seen[static_cast<std::size_t>(u)]) continue;
        // Make g_t m_a / g_s = 1 on the tree arrow.
        if (arrow.src == v) g[static_cast<std::size_t>(u)] = g[static_cast<std::size_t>(v)] / value(a);
        else g[static_cast<std::size_t>(u)] = g[static_cast<std::size_t>(v)] * value(a);
        seen[static_cast<std::size_t>(u)] = true;
        queue.push_back(u);
      }
    }
  }
  Representation<S> out = m;
  for (int a = 0; a < dq.arrow_count(); ++a) {
    const auto& arrow = dq.arrow(a);
    if (m.dim(arrow.src) == 0 || m.dim(arrow.dst) == 0) continue;
    Matrix<S> x = zeros(field, 1, 1);
    x(0, 0) = g[static_cast<std::size_t>(arrow.dst)] * value(a) / g[static_cast<std::size_t>(arrow.src)];
    out.set(a, std::move(x));
  }
  return out;
}

template <class S>
std::string thin_canonical_key(const Representation<S>& m) {
  const Representation<S> c = thin_canonical_form(m);
  std::ostringstream os;
  os << format_dimvec(c.dims()) << '|';
  bool first = true;
  for (int a = 0; a < c.dq().arrow_count(); ++a) {
    const auto& arrow = c.dq().arrow(a);
    if (c.dim(arrow.src) == 0 || c.dim(arrow.dst) == 0) continue;
    os << (first ? "" : ",") << arrow.id << '=' << c.field().format(c.mat(a)(0, 0));
    first = false;
  }
  return os.str();
}

template <class S>
std::vector<std::string> sequiv_class(const Representation<S>& m, const Theta& theta) {
  require_thin(m);
  const auto verdict = stability_verdict(m, theta);
  if (!verdict.semistable()) throw PreconditionViolated("S-equivalence needs a semistable module");
  std::vector<std::string> out;
  Representation<S> cur = m;
  while (!cur.is_zero()) {
    const int n = cur.dq().vertex_count();
    std::uint32_t full = 0;
    for (int v = 0; v < n; ++v)
      if (cur.dim(v) == 1) full |= 1u << v;
    std::optional<std::uint32_t> pick;
    for (std::uint32_t mask : closed_supports(cur)) {
      if (mask == 0 || mask == full) continue;
      if (pair(theta, mask_dims(mask, n)) != 0) continue;
      if (!pick || std::popcount(mask) < std::popcount(*pick)) pick = mask;
    }
    if (!pick) {
      out.push_back(thin_canonical_key(cur));
      break;
    }
    const auto u = mask_subspaces(cur, *pick);
    out.push_back(thin_canonical_key(subrepresentation(cur, u)));
    cur = quotient(cur, u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModuliScan<Gf> moduli_scan(QuiverPtr quiver, const DimVec& d, const Theta& theta, const Field<Gf>& field,
                           std::uint64_t budget, const Flagger& flagger) {
  const auto& dq = *quiver;
  if (d.size() != dq.vertex_count()) throw ShapeError("dimension vector length does not match the quiver");
  if (theta.size() != dq.vertex_count()) throw ShapeError("theta length does not match the quiver");
  ModuliScan<Gf> scan;
  scan.field = field.spec();
  scan.theta = theta;
  scan.d = d;
  const bool thin = d.size() == 0 || d.maxCoeff() <= 1;
  std::map<std::string, ModuliRecord<Gf>> classes;
  if (thin) {
    std::uint64_t total = 1;
    for (const auto& a : dq.arrows())
      if (d(a.src) == 1 && d(a.dst) == 1) {
        total *= field.size();
        if (total > budget) throw SearchBudgetExceeded("more than " + std::to_string(budget) + " arrow assignments");
      }
    for (auto& m : enumerate_thin_modules(quiver, field, d)) {
      ++scan.assignments;
      const auto verdict = stability_verdict(m, theta, budget);
      if (!verdict.semistable()) continue;
      std::string key = thin_canonical_key(m);
      if (classes.count(key)) continue;
      ModuliRecord<Gf> rec{thin_canonical_form(m), key, verdict.status == Status::Stable, {}};
      classes.emplace(std::move(key), std::move(rec));
    }
  } else {
    std::vector<std::pair<int, std::pair<int, int>>> slots;  // (arrow, (row, col))
    for (int a = 0; a < dq.arrow_count(); ++a)
      for (int r = 0; r < d(dq.arrow(a).dst); ++r)
        for (int c = 0; c < d(dq.arrow(a).src); ++c) slots.push_back({a, {r, c}});
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      total *= field.size();
      if (total > budget) throw SearchBudgetExceeded("more than " + std::to_string(budget) + " arrow assignments");
    }
    std::vector<ModuliRecord<Gf>> found;
    const auto base = Representation<Gf>::with_zero_maps(quiver, field, d);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Matrix<Gf>> mats = base.mats();
      std::uint64_t c = code;
      for (const auto& [a, rc] : slots) {
        mats[static_cast<std::size_t>(a)](rc.first, rc.second) = field.element(static_cast<std::uint32_t>(c % field.size()));
        c /= field.size();
      }
      Representation<Gf> m(quiver, field, d, std::move(mats));
      if (!check_relations(m).empty()) continue;
      ++scan.assignments;
      const auto verdict = stability_verdict(m, theta, budget);
      if (!verdict.semistable()) continue;
      bool known = false;
      for (const auto& r : found)
        if (is_isomorphic(r.rep, m)) {
          known = true;
          break;
        }
      if (known) continue;
      std::ostringstream key;
      key << format_dimvec(d) << "|#" << found.size();
      found.push_back({m, key.str(), verdict.status == Status::Stable, {}});
    }
    for (auto& r : found) classes.emplace(r.key, std::move(r));
  }
  for (auto& [key, rec] : classes) {
    if (flagger) rec.flags = flagger(rec.rep);
    scan.classes.push_back(std::move(rec));
  }
  return scan;
}

std::string moduli_csv(const ModuliScan<Gf>& scan) {
  std::ostringstream os;
  std::size_t flags = 0;
  for (const auto& r : scan.classes) flags = std::max(flags, r.flags.size());
  os << "key,stable";
  for (std::size_t i = 0; i < flags; ++i) os << ",E" << (i + 1);
  os << '\n';
  for (const auto& r : scan.classes) {
    os << '"' << r.key << "\"," << (r.stable ? 1 : 0);
    for (std::size_t i = 0; i < flags; ++i) os << ',' << (i < r.flags.size() && r.flags[i] ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

#define PREPROJ_INSTANTIATE(S)                                                                                     \
  template std::vector<DimVec> submodule_dimvecs(const Representation<S>&, std::uint64_t);                         \
  template std::vector<DimVec> submodule_dimvecs_thin(const Representation<S>&);                                   \
  template std::vector<std::uint32_t> closed_supports(const Representation<S>&);                                   \
  template std::optional<VertexSubspaces<S>> find_submodule(const Representation<S>&, const DimVec&, std::uint64_t); \
  template StabilityVerdict stability_verdict(const Representation<S>&, const Theta&, std::uint64_t);              \
  template Representation<S> thin_canonical_form(const Representation<S>&);                                        \
  template std::string thin_canonical_key(const Representation<S>&);                                               \
  template std::vector<std::string> sequiv_class(const Representation<S>&, const Theta&);

PREPROJ_INSTANTIATE(Rational)
PREPROJ_INSTANTIATE(Gf)

}  // namespace preproj
