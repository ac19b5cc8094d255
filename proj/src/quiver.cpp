#include "preproj/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace preproj {

DimVec unit_vector(int size, int i) {
  DimVec v = DimVec::Zero(size);
  v(i) = 1;
  return v;
}

std::string format_dimvec(const DimVec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ')';
  return os.str();
}

bool same_dimvec(const DimVec& a, const DimVec& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {}

void Quiver::validate() const {
  if (vertex_count_ <= 0) throw RangeError("a quiver needs at least one vertex");
  for (const auto& a : arrows_) {
    if (a.src < 0 || a.src >= vertex_count_ || a.dst < 0 || a.dst >= vertex_count_)
      throw RangeError("arrow " + a.id + " has an endpoint outside 0.." + std::to_string(vertex_count_ - 1));
    if (a.src == a.dst) throw LoopError("arrow " + a.id + " is a loop at vertex " + std::to_string(a.src));
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    for (std::size_t j = i + 1; j < arrows_.size(); ++j)
      if (arrows_[i].id == arrows_[j].id) throw RangeError("duplicate arrow id " + arrows_[i].id);

  // Union-find over the underlying graph.
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& a : arrows_) parent[static_cast<std::size_t>(find(a.src))] = find(a.dst);
  for (int v = 1; v < vertex_count_; ++v)
    if (find(v) != find(0)) throw ConnectivityError("vertex " + std::to_string(v) + " is not connected to vertex 0");
}

DoubleQuiver DoubleQuiver::build(const Quiver& q) {
  q.validate();
  DoubleQuiver dq;
  dq.base_ = q;
  const int m = static_cast<int>(q.arrows().size());
  for (int i = 0; i < m; ++i) {
    const Arrow& a = q.arrows()[static_cast<std::size_t>(i)];
    dq.arrows_.push_back({a.id, a.src, a.dst, i + m, +1});
  }
  for (int i = 0; i < m; ++i) {
    const Arrow& a = q.arrows()[static_cast<std::size_t>(i)];
    dq.arrows_.push_back({a.id + "s", a.dst, a.src, i, -1});
  }
  for (const auto& a : dq.arrows_)
    if (std::count_if(dq.arrows_.begin(), dq.arrows_.end(), [&](const DoubleArrow& b) { return b.id == a.id; }) != 1)
      throw RangeError("starred id " + a.id + " collides with an existing arrow");
  dq.out_.assign(static_cast<std::size_t>(q.vertex_count()), {});
  dq.in_.assign(static_cast<std::size_t>(q.vertex_count()), {});
  for (int a = 0; a < dq.arrow_count(); ++a) {
    dq.out_[static_cast<std::size_t>(dq.arrows_[static_cast<std::size_t>(a)].src)].push_back(a);
    dq.in_[static_cast<std::size_t>(dq.arrows_[static_cast<std::size_t>(a)].dst)].push_back(a);
  }
  return dq;
}

int DoubleQuiver::find_arrow(const std::string& id) const {
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[static_cast<std::size_t>(a)].id == id) return a;
  return -1;
}

int DoubleQuiver::edges_between(int i, int j) const {
  int count = 0;
  for (const auto& a : base_.arrows())
    if ((a.src == i && a.dst == j) || (a.src == j && a.dst == i)) ++count;
  return count;
}

Eigen::MatrixXi DoubleQuiver::form_matrix() const {
  const int n = vertex_count();
  Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(n, n);
  for (const auto& a : arrows_) c(a.src, a.dst) -= 1;
  return c;
}

bool operator==(const DoubleQuiver& a, const DoubleQuiver& b) {
  if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count()) return false;
  for (int i = 0; i < a.arrow_count(); ++i) {
    const auto &x = a.arrow(i), &y = b.arrow(i);
    if (x.id != y.id || x.src != y.src || x.dst != y.dst || x.star != y.star || x.epsilon != y.epsilon) return false;
  }
  return true;
}

int bilinear_form(const DoubleQuiver& dq, const DimVec& a, const DimVec& b) {
  if (a.size() != dq.vertex_count() || b.size() != dq.vertex_count())
    throw ShapeError("dimension vector length does not match the quiver");
  int value = 2 * a.dot(b);
  for (const auto& arrow : dq.arrows()) value -= a(arrow.src) * b(arrow.dst);
  return value;
}

std::vector<PreprojectiveRelation> relations(const DoubleQuiver& dq) {
  std::vector<PreprojectiveRelation> out;
  for (int v = 0; v < dq.vertex_count(); ++v) {
    PreprojectiveRelation rel{v, {}};
    for (int a : dq.out_arrows(v)) rel.terms.push_back({a, dq.arrow(a).star, dq.arrow(a).epsilon});
    out.push_back(std::move(rel));
  }
  return out;
}

namespace {

ExtendedDynkin make(DynkinFamily family, int n, std::string name, const std::vector<std::pair<int, int>>& edges,
                    std::vector<int> d) {
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k)
    arrows.push_back({"a" + std::to_string(k + 1), edges[k].first, edges[k].second});
  auto dq = std::make_shared<DoubleQuiver>(DoubleQuiver::build(Quiver(n + 1, std::move(arrows))));
  dq->set_type_name(name);
  ExtendedDynkin out;
  out.family = family;
  out.n = n;
  out.quiver = std::move(dq);
  out.d = Eigen::Map<DimVec>(d.data(), static_cast<Eigen::Index>(d.size()));
  out.name = std::move(name);
  return out;
}

}  // namespace

ExtendedDynkin standard_extended_dynkin(DynkinFamily family, int n) {
  switch (family) {
    case DynkinFamily::A: {
      if (n < 1) throw RangeError("A~n needs n >= 1");
      std::vector<std::pair<int, int>> edges;
      for (int k = 1; k <= n; ++k) edges.push_back({k - 1, k});
      edges.push_back({n, 0});
      return make(family, n, "A~" + std::to_string(n), edges, std::vector<int>(static_cast<std::size_t>(n + 1), 1));
    }
    case DynkinFamily::D: {
      if (n < 4) throw RangeError("D~n needs n >= 4");
      // Leaves 0 and 1 hang off vertex 2, leaves n-1 and n off vertex n-2,
      // and the chain 2..n-2 carries the 2s.
      std::vector<std::pair<int, int>> edges{{0, 2}, {1, 2}};
      for (int k = 3; k <= n - 2; ++k) edges.push_back({k, k - 1});
      edges.push_back({n - 1, n - 2});
      edges.push_back({n, n - 2});
      std::vector<int> d(static_cast<std::size_t>(n + 1), 2);
      d[0] = d[1] = d[static_cast<std::size_t>(n - 1)] = d[static_cast<std::size_t>(n)] = 1;
      return make(family, n, "D~" + std::to_string(n), edges, d);
    }
    case DynkinFamily::E: {
      if (n == 6)
        return make(family, 6, "E~6", {{0, 1}, {1, 2}, {4, 3}, {3, 2}, {6, 5}, {5, 2}}, {1, 2, 3, 2, 1, 2, 1});
      if (n == 7)
        return make(family, 7, "E~7", {{0, 1}, {1, 2}, {2, 3}, {6, 5}, {5, 4}, {4, 3}, {7, 3}},
                    {1, 2, 3, 4, 3, 2, 1, 2});
      if (n == 8)
        return make(family, 8, "E~8", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {7, 6}, {6, 5}, {8, 5}},
                    {1, 2, 3, 4, 5, 6, 4, 2, 3});
      throw RangeError("E~n needs n in {6, 7, 8}");
    }
  }
  throw RangeError("unknown Dynkin family");
}

ExtendedDynkin parse_extended_dynkin(const std::string& text) {
  std::string t = text;
  // Strip the combining tilde (U+0303) and the precomposed Ã (U+00C3).
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = t.find(from, pos)) != std::string::npos; pos += to.size()) t.replace(pos, from.size(), to);
  };
  replace_all("\xC3\x83", "A~");
  replace_all("\xCC\x83", "~");
  replace_all("tilde", "~");
  if (t.size() >= 2 && (t[1] == 't' || t[1] == 'T')) t[1] = '~';
  if (t.size() < 3 || t[1] != '~') throw ParseError("unrecognized quiver type '" + text + "'");
  DynkinFamily family;
  switch (t[0]) {
    case 'A': case 'a': family = DynkinFamily::A; break;
    case 'D': case 'd': family = DynkinFamily::D; break;
    case 'E': case 'e': family = DynkinFamily::E; break;
    default: throw ParseError("unrecognized quiver type '" + text + "'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(t.substr(2), &used);
    if (used != t.size() - 2) throw ParseError("trailing characters");
  } catch (const std::exception&) {
    throw ParseError("unrecognized quiver type '" + text + "'");
  }
  return standard_extended_dynkin(family, n);
}

std::string to_dot(const DoubleQuiver& dq) {
  std::ostringstream os;
  os << "digraph Qbar {\n";
  if (!dq.type_name().empty()) os << "  label=\"" << dq.type_name() << "\";\n";
  for (int v = 0; v < dq.vertex_count(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& a : dq.arrows())
    os << "  v" << a.src << " -> v" << a.dst << " [label=\"" << a.id << " (" << (a.epsilon > 0 ? "+1" : "-1") << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace preproj
