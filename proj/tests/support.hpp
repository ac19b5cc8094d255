#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "preproj/hom.hpp"
#include "preproj/quiver.hpp"
#include "preproj/representation.hpp"

namespace testing_support {

using namespace preproj;

inline ExtendedDynkin a2() { return standard_extended_dynkin(DynkinFamily::A, 2); }
inline ExtendedDynkin d4() { return standard_extended_dynkin(DynkinFamily::D, 4); }

inline DimVec dv(std::initializer_list<int> xs) {
  DimVec v(static_cast<Index>(xs.size()));
  Index k = 0;
  for (int x : xs) v(k++) = x;
  return v;
}

template <class S>
Matrix<S> mat(const Field<S>& f, std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix<S> m = zeros(f, r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long x : row) m(i, j++) = f.from_int(x);
    ++i;
  }
  return m;
}

// Thin Ã2 module on d = (1,1,1) from named arrows: "01" means the arrow 0 -> 1.
template <class S>
Representation<S> a2_thin(const Field<S>& f, const std::map<std::string, long>& arrows, DimVec dims = dv({1, 1, 1})) {
  static const std::map<std::string, std::string> ids{{"01", "a1"}, {"12", "a2"}, {"20", "a3"},
                                                      {"10", "a1s"}, {"21", "a2s"}, {"02", "a3s"}};
  std::map<std::string, S> values;
  for (const auto& [k, v] : arrows) values[ids.at(k)] = f.from_int(v);
  return thin_representation(a2().quiver, f, dims, values);
}

// Points of the two exceptional lines in the fundamental chamber.
template <class S>
Representation<S> e1_member(const Field<S>& f, long a, long b) {
  return a2_thin(f, {{"01", a}, {"02", 1}, {"21", b}});
}
template <class S>
Representation<S> e2_member(const Field<S>& f, long c, long d) {
  return a2_thin(f, {{"01", 1}, {"02", c}, {"12", d}});
}

}  // namespace testing_support
