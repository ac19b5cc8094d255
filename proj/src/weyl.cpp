#include "preproj/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace preproj {

Theta make_theta(std::initializer_list<long> values) {
  Theta t(static_cast<Index>(values.size()));
  Index i = 0;
  for (long v : values) t(i++) = Rational(v);
  return t;
}

Theta parse_theta(const std::string& text) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty entry in theta '" + text + "'");
    try {
      parts.emplace_back(t);
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + t + "' in theta");
    }
  }
  if (parts.empty()) throw ParseError("empty theta");
  Theta out(static_cast<Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) out(static_cast<Index>(i)) = parts[i];
  return out;
}

std::string format_theta(const Theta& theta) {
  std::string out;
  for (Index i = 0; i < theta.size(); ++i) out += (i ? "," : "") + theta(i).str();
  return out;
}

Rational pair(const Theta& theta, const DimVec& alpha) {
  if (theta.size() != alpha.size()) throw ShapeError("theta and dimension vector lengths differ");
  Rational s = 0;
  for (Index i = 0; i < alpha.size(); ++i)
    if (alpha(i) != 0) s += theta(i) * alpha(i);
  return s;
}

DimVec reflect_dimvec(const DoubleQuiver& dq, int i, const DimVec& alpha) {
  if (i < 0 || i >= dq.vertex_count()) throw RangeError("reflection at a vertex out of range");
  DimVec out = alpha;
  out(i) -= bilinear_form(dq, alpha, unit_vector(dq.vertex_count(), i));
  return out;
}

Theta reflect_theta(const DoubleQuiver& dq, int i, const Theta& theta) {
  if (i < 0 || i >= dq.vertex_count()) throw RangeError("reflection at a vertex out of range");
  if (theta.size() != dq.vertex_count()) throw ShapeError("theta length does not match the quiver");
  const Eigen::MatrixXi c = dq.form_matrix();
  Theta out = theta;
  const Rational ti = theta(i);
  for (int j = 0; j < dq.vertex_count(); ++j) out(j) -= ti * c(i, j);
  return out;
}

std::string format_word(const WeylWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w) out += "s" + std::to_string(l);
  return out;
}

WeylWord parse_word(const std::string& text, bool one_is_identity) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "e" || t == "id" || (one_is_identity && t == "1")) return {};
  WeylWord w;
  if (t[0] == 's') {
    std::size_t pos = 0;
    while (pos < t.size()) {
      if (t[pos] != 's') throw ParseError("bad word '" + text + "'");
      std::size_t end = pos + 1;
      while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
      if (end == pos + 1) throw ParseError("bad word '" + text + "'");
      w.push_back(std::stoi(t.substr(pos + 1, end - pos - 1)));
      pos = end;
    }
    return w;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad word '" + text + "'");
    w.push_back(std::stoi(item));
  }
  return w;
}

DimVec act_on_dimvec(const DoubleQuiver& dq, const WeylWord& w, const DimVec& alpha) {
  DimVec x = alpha;
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = reflect_dimvec(dq, *it, x);
  return x;
}

Theta act_on_theta(const DoubleQuiver& dq, const WeylWord& w, const Theta& theta) {
  Theta x = theta;
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = reflect_theta(dq, *it, x);
  return x;
}

namespace {

bool root_order(const DimVec& a, const DimVec& b) {
  const int ha = a.sum(), hb = b.sum();
  if (ha != hb) return ha < hb;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) > b(i);
  return false;
}

}  // namespace

RootSystem::RootSystem(ExtendedDynkin type) : type_(std::move(type)) {
  const auto& dq = *type_.quiver;
  n_ = dq.vertex_count() - 1;
  if (n_ < 1) throw RangeError("root system needs at least one finite vertex");
  if (type_.d(0) != 1) throw RangeError("the extending vertex must have d_0 = 1");
  gram_ = dq.form_matrix().bottomRightCorner(n_, n_);
  // Closure of the simple roots under simple reflections.
  auto key = [](const DimVec& v) { return std::vector<int>(v.data(), v.data() + v.size()); };
  std::set<std::vector<int>> seen;
  std::vector<DimVec> frontier;
  for (int i = 1; i <= n_; ++i) {
    frontier.push_back(simple_root(i));
    seen.insert(key(frontier.back()));
  }
  std::vector<DimVec> all = frontier;
  while (!frontier.empty()) {
    std::vector<DimVec> next;
    for (const auto& x : frontier)
      for (int i = 1; i <= n_; ++i) {
        DimVec y = reflection(i) * x;
        if (seen.insert(key(y)).second) {
          next.push_back(y);
          all.push_back(y);
        }
      }
    frontier = std::move(next);
    if (all.size() > 100000) throw InternalInvariantError("root closure does not terminate");
  }
  for (const auto& x : all) {
    if (x.dot(gram_ * x) != 2) throw InternalInvariantError("closure produced a non-root");
    if (is_positive(x)) positive_.push_back(x);
    else if (!is_negative(x)) throw InternalInvariantError("root with mixed signs");
  }
  std::sort(positive_.begin(), positive_.end(), root_order);
  roots_ = positive_;
  for (const auto& x : positive_) roots_.push_back(-x);
  if (roots_.size() != all.size()) throw InternalInvariantError("roots are not split into positive and negative");
}

bool RootSystem::is_root(const DimVec& x) const {
  return std::any_of(roots_.begin(), roots_.end(), [&](const DimVec& r) { return r == x; });
}

bool RootSystem::is_positive(const DimVec& x) { return x.size() > 0 && x.minCoeff() >= 0 && x.maxCoeff() > 0; }
bool RootSystem::is_negative(const DimVec& x) { return x.size() > 0 && x.maxCoeff() <= 0 && x.minCoeff() < 0; }

DimVec RootSystem::project(const DimVec& alpha) const {
  if (alpha.size() != n_ + 1) throw ShapeError("vector length does not match the quiver");
  DimVec x(n_);
  for (int i = 1; i <= n_; ++i) x(i - 1) = alpha(i) - alpha(0) * type_.d(i);
  return x;
}

DimVec RootSystem::lift(const DimVec& x) const {
  DimVec alpha = DimVec::Zero(n_ + 1);
  alpha.tail(n_) = x;
  return alpha;
}

DimVec RootSystem::simple_root(int i) const {
  if (i < 1 || i > n_) throw RangeError("simple root index out of range 1.." + std::to_string(n_));
  return unit_vector(n_, i - 1);
}

Eigen::MatrixXi RootSystem::reflection(int i) const {
  if (i < 1 || i > n_) throw RangeError("finite Weyl letter out of range 1.." + std::to_string(n_));
  // x -> x - (x, e_i) e_i; row i-1 changes.
  Eigen::MatrixXi r = Eigen::MatrixXi::Identity(n_, n_);
  r.row(i - 1) -= gram_.row(i - 1);
  return r;
}

Eigen::MatrixXi RootSystem::matrix(const WeylWord& w) const {
  Eigen::MatrixXi m = Eigen::MatrixXi::Identity(n_, n_);
  for (int l : w) m = m * reflection(l);
  return m;
}

int RootSystem::length(const Eigen::MatrixXi& w) const {
  int count = 0;
  for (const auto& a : positive_)
    if (is_negative(w * a)) ++count;
  return count;
}

WeylWord RootSystem::multiply(const WeylWord& a, const WeylWord& b) const {
  WeylWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  for (int l : out) (void)reflection(l);
  return out;
}

WeylWord RootSystem::inverse(const WeylWord& w) const {
  for (int l : w) (void)reflection(l);
  return WeylWord(w.rbegin(), w.rend());
}

WeylWord RootSystem::canonical(const Eigen::MatrixXi& w) const {
  WeylWord out;
  Eigen::MatrixXi cur = w;
  int len = length(cur);
  while (len > 0) {
    bool step = false;
    for (int i = 1; i <= n_ && !step; ++i) {
      Eigen::MatrixXi next = reflection(i) * cur;
      const int l = length(next);
      if (l < len) {
        out.push_back(i);
        cur = std::move(next);
        len = l;
        step = true;
      }
    }
    if (!step) throw InternalInvariantError("element of positive length without a left descent");
  }
  if (cur != Eigen::MatrixXi::Identity(n_, n_)) throw InternalInvariantError("length zero element is not the identity");
  return out;
}

std::vector<WeylWord> RootSystem::all_elements(std::size_t budget) const {
  auto key = [](const Eigen::MatrixXi& m) { return std::vector<int>(m.data(), m.data() + m.size()); };
  std::map<std::vector<int>, WeylWord> seen;
  std::vector<Eigen::MatrixXi> frontier{Eigen::MatrixXi::Identity(n_, n_)};
  std::vector<WeylWord> out{WeylWord{}};
  seen[key(frontier.front())] = {};
  while (!frontier.empty()) {
    std::vector<Eigen::MatrixXi> next;
    std::vector<WeylWord> level;
    for (const auto& m : frontier)
      for (int i = 1; i <= n_; ++i) {
        Eigen::MatrixXi y = m * reflection(i);
        if (seen.count(key(y))) continue;
        WeylWord c = canonical(y);
        seen[key(y)] = c;
        next.push_back(std::move(y));
        level.push_back(std::move(c));
        if (seen.size() > budget) throw SearchBudgetExceeded("Weyl group larger than " + std::to_string(budget));
      }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
    frontier = std::move(next);
  }
  return out;
}

WeylWord RootSystem::random_element(std::mt19937_64& rng, int steps) const {
  std::uniform_int_distribution<int> letter(1, n_);
  WeylWord w;
  for (int k = 0; k < steps; ++k) w.push_back(letter(rng));
  return canonical(w);
}

Rational RootSystem::evaluate(const Theta& theta, const DimVec& x) const {
  if (theta.size() != n_ + 1 || x.size() != n_) throw ShapeError("theta or root has the wrong length");
  Rational s = 0;
  for (int i = 1; i <= n_; ++i)
    if (x(i - 1) != 0) s += theta(i) * x(i - 1);
  return s;
}

void RootSystem::require_theta_d(const Theta& theta) const {
  if (theta.size() != n_ + 1) throw ShapeError("theta has the wrong length");
  if (pair(theta, type_.d) != 0) throw NotInThetaD("theta(d) = " + pair(theta, type_.d).str() + " for theta = " + format_theta(theta));
}

bool RootSystem::is_generic(const Theta& theta) const {
  require_theta_d(theta);
  for (const auto& a : positive_)
    if (evaluate(theta, a) == 0) return false;
  return true;
}

bool RootSystem::in_chamber(const Theta& theta, const WeylWord& w) const {
  require_theta_d(theta);
  const Eigen::MatrixXi m = matrix(w);
  for (int i = 1; i <= n_; ++i)
    if (evaluate(theta, m * simple_root(i)) <= 0) return false;
  return true;
}

WeylWord RootSystem::chamber_of(const Theta& theta) const {
  require_theta_d(theta);
  Theta cur = theta;
  WeylWord applied;
  const std::size_t limit = roots_.size();
  while (true) {
    int neg = 0;
    for (int i = 1; i <= n_; ++i) {
      if (cur(i) == 0) throw NotGeneric("theta = " + format_theta(theta) + " lies on a wall");
      if (neg == 0 && cur(i) < 0) neg = i;
    }
    if (neg == 0) break;
    if (applied.size() >= limit) throw NotGeneric("descent did not terminate for theta = " + format_theta(theta));
    cur = reflect_theta(dq(), neg, cur);
    applied.push_back(neg);
  }
  // theta = s_{i1} ... s_{ik} cur with cur in C(1).
  WeylWord w = canonical(applied);
  if (!in_chamber(theta, w)) throw InternalInvariantError("chamber descent returned a wrong chamber");
  return w;
}

Theta RootSystem::base_theta() const {
  Theta t(n_ + 1);
  Rational rest = 0;
  for (int i = 1; i <= n_; ++i) {
    t(i) = 1;
    rest += type_.d(i);
  }
  t(0) = -rest;
  return t;
}

Theta RootSystem::chamber_sample(const WeylWord& w) const {
  for (int l : w) (void)reflection(l);
  return act_on_theta(dq(), w, base_theta());
}

}  // namespace preproj
