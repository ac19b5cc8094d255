#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "preproj/hom.hpp"
#include "preproj/representation.hpp"
#include "preproj/weyl.hpp"

namespace preproj {

inline constexpr std::uint64_t kDefaultBudget = 10000000;

// Every realized submodule dimension vector, including 0 and dims(M), sorted.
// Thin modules use closed vertex supports; otherwise per-vertex subspaces over
// a finite field are enumerated (UnsupportedShape over Q, SearchBudgetExceeded
// past `budget` subspace tuples).
template <class S>
std::vector<DimVec> submodule_dimvecs(const Representation<S>& m, std::uint64_t budget = kDefaultBudget);
template <class S>
std::vector<DimVec> submodule_dimvecs_thin(const Representation<S>& m);
std::vector<DimVec> submodule_dimvecs_bruteforce(const Representation<Gf>& m, std::uint64_t budget = kDefaultBudget);

// Vertex sets closed under every nonzero arrow, as bit masks; thin modules only.
template <class S>
std::vector<std::uint32_t> closed_supports(const Representation<S>& m);

// A submodule with the given dimension vector, if one exists.
template <class S>
std::optional<VertexSubspaces<S>> find_submodule(const Representation<S>& m, const DimVec& beta,
                                                 std::uint64_t budget = kDefaultBudget);

// Every subspace of F_q^n, as canonical basis matrices.
std::vector<Matrix<Gf>> all_subspaces(const Field<Gf>& field, int n, std::uint64_t budget = kDefaultBudget);

enum class Status { Stable, StrictlySemistable, Unstable, NotInThetaKernel };
const char* to_string(Status s);

struct StabilityVerdict {
  Status status = Status::Stable;
  std::optional<DimVec> witness;  // negative (Unstable) or equality (StrictlySemistable) submodule
  bool semistable() const { return status == Status::Stable || status == Status::StrictlySemistable; }
};

// The zero module counts as strictly semistable with witness 0.
template <class S>
StabilityVerdict stability_verdict(const Representation<S>& m, const Theta& theta, std::uint64_t budget = kDefaultBudget);

// Canonical representative of a thin module up to isomorphism: nonzero arrows
// along a breadth-first spanning forest are scaled to 1.
template <class S>
Representation<S> thin_canonical_form(const Representation<S>& m);
// Text key of the canonical form, "dims|a1=..;a2=..".
template <class S>
std::string thin_canonical_key(const Representation<S>& m);

// Keys of the stable factors of a filtration by theta-stable modules,
// sorted. Thin semistable modules only.
template <class S>
std::vector<std::string> sequiv_class(const Representation<S>& m, const Theta& theta);

template <class S>
struct ModuliRecord {
  Representation<S> rep;  // canonical representative
  std::string key;
  bool stable = false;
  std::vector<bool> flags;  // filled by the caller's flagger
};

template <class S>
struct ModuliScan {
  FieldSpec field;
  Theta theta;
  DimVec d;
  std::vector<ModuliRecord<S>> classes;  // sorted by key
  std::uint64_t assignments = 0;         // relation-satisfying assignments examined
  int stable_count() const {
    int c = 0;
    for (const auto& r : classes) c += r.stable ? 1 : 0;
    return c;
  }
};

using Flagger = std::function<std::vector<bool>(const Representation<Gf>&)>;

// Iso classes of theta-semistable modules of dimension vector d over F_q.
// Thin d uses the canonical form; otherwise classes are merged by
// is_isomorphic. Budget bounds the number of arrow assignments.
ModuliScan<Gf> moduli_scan(QuiverPtr quiver, const DimVec& d, const Theta& theta, const Field<Gf>& field,
                           std::uint64_t budget = kDefaultBudget, const Flagger& flagger = {});

std::string moduli_csv(const ModuliScan<Gf>& scan);

}  // namespace preproj
