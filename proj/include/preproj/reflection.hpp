#pragma once

#include "preproj/representation.hpp"
#include "preproj/stability.hpp"
#include "preproj/weyl.hpp"

namespace preproj {

template <class S>
struct ReflectResult {
  Representation<S> module;
  int defect = 0;  // dim coker f_i (plus) or dim ker g_i (minus)
};

// Kernel construction. f_i : (+)_{a: s(a)=i} M_{t(a)} -> M_i has blocks
// eps(a) M_{a*}; the new space at i is ker f_i.
template <class S>
ReflectResult<S> reflect_plus(int i, const Representation<S>& m);
// Cokernel construction. g_i : M_i -> (+)_{a: t(a)=i} M_{s(a)} has blocks
// eps(a*) M_{a*}; the new space at i is coker g_i.
template <class S>
ReflectResult<S> reflect_minus(int i, const Representation<S>& m);

template <class S>
struct WordResult {
  Representation<S> module;
  Theta theta;
};

// Letters are processed right to left. At letter i the plus functor is used
// when the current theta_i > 0, the minus functor when theta_i < 0, and theta
// is replaced by s_i theta. Throws NotGenericStep on theta_i = 0 and
// PreconditionViolated on a nonzero defect or an unstable input.
template <class S>
WordResult<S> apply_word(const WeylWord& word, const Representation<S>& m, const Theta& theta,
                         bool check_semistable = true, std::uint64_t budget = kDefaultBudget);

template <class S>
struct ShiftedModule {
  Representation<S> module;
  int degree = 0;  // 0 or 1
  // (-1)^degree dims(module).
  DimVec klass() const { return degree % 2 == 0 ? DimVec(module.dims()) : DimVec(-module.dims()); }
};

// The stalk complex attached to a reduced word w and vertex i, computed from
// S_i by the plus functors of the letters of w, right to left. Throws
// DichotomyError when a step has both a kernel and a cokernel part, or when
// the degree would exceed 1.
template <class S>
ShiftedModule<S> compute_siw(const RootSystem& rs, const Field<S>& field, const WeylWord& w, int i);

}  // namespace preproj
