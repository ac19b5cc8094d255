#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "preproj/representation.hpp"

namespace preproj {

// A homomorphism as one matrix per vertex, phi_v : M_v -> N_v.
template <class S>
using HomElement = std::vector<Matrix<S>>;
// A cochain on arrows, phi_a : M_{s(a)} -> N_{t(a)}.
template <class S>
using ArrowCochain = std::vector<Matrix<S>>;

template <class S>
struct HomSpace {
  std::vector<HomElement<S>> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

template <class S>
struct Ext1Space {
  std::vector<ArrowCochain<S>> cocycle_basis;  // representatives of a basis of ker d2 / im d1
  int dim() const { return static_cast<int>(cocycle_basis.size()); }
};

// Ranks read off the complex
//   0 -> Hom(M,N) -> (+)_i Hom(M_i,N_i) -d1-> (+)_a Hom(M_s,N_t) -d2-> (+)_i Hom(M_i,N_i).
struct ComplexDims {
  int hom = 0;        // dim ker d1
  int cochains = 0;   // dim of the arrow term
  int rank_d1 = 0;
  int rank_d2 = 0;
  int ext1() const { return cochains - rank_d2 - rank_d1; }
};

// Linear maps of the complex above, on column-major vectorized blocks.
template <class S>
Matrix<S> delta1(const Representation<S>& m, const Representation<S>& n);
template <class S>
Matrix<S> delta2(const Representation<S>& m, const Representation<S>& n);

template <class S>
HomSpace<S> hom_space(const Representation<S>& m, const Representation<S>& n);
template <class S>
int hom_dim(const Representation<S>& m, const Representation<S>& n);

// Dimensions only; no identity is asserted.
template <class S>
ComplexDims ext_complex_dims(const Representation<S>& m, const Representation<S>& n);
// Throws InternalInvariantError if d2 d1 != 0 or if
// (dims M, dims N) != hom(M,N) - ext(M,N) + hom(N,M).
template <class S>
Ext1Space<S> ext1_space(const Representation<S>& m, const Representation<S>& n);

template <class S>
bool is_cocycle(const Representation<S>& m, const Representation<S>& n, const ArrowCochain<S>& phi);
// Middle term of 0 -> N -> E -> M -> 0 with E_a = [[N_a, phi_a], [0, M_a]].
// Throws CocycleError when E violates the relations.
template <class S>
Representation<S> extension_from_cocycle(const Representation<S>& m, const Representation<S>& n,
                                         const ArrowCochain<S>& phi);
// For E built as above: whether the projection E -> M has a module section.
template <class S>
bool extension_splits(const Representation<S>& m, const Representation<S>& n, const Representation<S>& e);

template <class S>
bool is_injective(const HomElement<S>& f, const Field<S>& field);
template <class S>
bool is_surjective(const HomElement<S>& f, const Field<S>& field);
template <class S>
bool is_invertible(const HomElement<S>& f, const Field<S>& field);

// Membership in the torsion classes attached to the ideal of vertex i.
struct TorsionFlags {
  bool t = false;  // S_i not in the top
  bool f = false;  // M in add S_i
  bool x = false;  // M in add S_i
  bool y = false;  // S_i not in the socle
};
template <class S>
TorsionFlags torsion_membership(const Representation<S>& m, int i);

struct SearchConfig {
  int max_exhaustive_dim = 4;
  std::uint64_t max_exhaustive_count = 1000000;
  int random_trials = 64;
  std::uint64_t seed = 20240601;
};

struct CombinationResult {
  bool found = false;
  bool exhaustive = false;  // every combination was examined
};

// Searches linear combinations of `basis` for one satisfying `pred`. Over a
// finite field with a small enough space every nonzero combination is tried
// in a fixed order; otherwise `random_trials` random combinations are tried.
template <class S>
CombinationResult find_combination(const Field<S>& field, const std::vector<HomElement<S>>& basis,
                                   const std::function<bool(const HomElement<S>&)>& pred,
                                   const SearchConfig& config = {}, HomElement<S>* witness = nullptr);

// Raises Inconclusive when a random search fails but every cheap invariant
// agrees.
template <class S>
bool is_isomorphic(const Representation<S>& m, const Representation<S>& n, const SearchConfig& config = {});

enum class Tri { Yes, No, Inconclusive };
const char* to_string(Tri t);
// End(M) local: every endomorphism is invertible or nilpotent.
template <class S>
Tri is_indecomposable(const Representation<S>& m, const SearchConfig& config = {});

}  // namespace preproj
