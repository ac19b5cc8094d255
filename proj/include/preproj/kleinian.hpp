#pragma once

#include <json.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "preproj/hom.hpp"
#include "preproj/reflection.hpp"
#include "preproj/stability.hpp"
#include "preproj/weyl.hpp"

namespace preproj {

struct CaseRecord {
  std::string inputs;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct SuiteReport {
  std::string name;
  std::vector<CaseRecord> cases;

  // pass is expected == got.
  void add(std::string inputs, std::string expected, std::string got);
  void check(std::string inputs, bool ok) { add(std::move(inputs), "true", ok ? "true" : "false"); }
  // Appends the cases of `other`, prefixing their inputs with its name.
  void merge(const SuiteReport& other);
  int passed() const;
  int failed() const { return static_cast<int>(cases.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

nlohmann::json report_to_json(const SuiteReport& r);
// One line per case followed by a summary line; `failures_only` hides passing cases.
std::string report_table(const SuiteReport& r, bool failures_only = false);

// A nilpotent module of the given dimension vector built from simples by
// random extensions, then put in a random basis.
template <class S>
Representation<S> random_nilpotent_module(QuiverPtr quiver, const Field<S>& field, const DimVec& dims,
                                          std::mt19937_64& rng);

// Signs of w e_i in X_*: +1 when positive, -1 when negative.
int simple_image_sign(const RootSystem& rs, const WeylWord& w, int i);

// Whether M lies on the curve E_i^w: an injective map S_i^w -> M when w e_i is
// positive, a surjective map M -> S_i^w[1] otherwise. M must be stable in C(w).
// Throws Inconclusive when the combination search is not exhaustive.
template <class S>
bool exceptional_membership(const RootSystem& rs, const Representation<S>& m, const WeylWord& w, int i,
                            const SearchConfig& config = {});
// Same test with S_i^w precomputed; no stability check.
template <class S>
bool exceptional_membership(const Representation<S>& m, const ShiftedModule<S>& siw, const SearchConfig& config = {});

// Semistability in C(w) against the Hom-vanishing criterion, over every thin
// relation-satisfying module of dimension d (Ã types), or over `samples`
// random nilpotent modules otherwise.
SuiteReport check_stability_characterization(const ExtendedDynkin& type, const WeylWord& w, const Field<Gf>& field,
                                             int samples = 50, std::uint64_t seed = 20240601);

// Ã2 only: simple images, degrees, the two exceptional lines and their
// intersection in every chamber.
SuiteReport figure2_report(const Field<Gf>& field);

// Ã2 only: for N on E_1 or E_2 in C(1), the sub and extension sequences with S_i.
SuiteReport check_L_sequences(const Field<Gf>& field);

struct SuiteOptions {
  std::optional<FieldSpec> field;  // replaces the suite's default fields
  std::uint64_t seed = 20240601;
  std::uint64_t budget = kDefaultBudget;
};

// Names: all, figure2, chs, coxeter, dimlaw, roundtrip, cbform, walls,
// zerogen, Lseq, rootlaw. Throws UsageError on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});
const std::vector<std::string>& suite_names();

}  // namespace preproj
