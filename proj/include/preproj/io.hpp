#pragma once

#include <json.hpp>

#include <variant>

#include "preproj/hom.hpp"
#include "preproj/reflection.hpp"
#include "preproj/representation.hpp"
#include "preproj/stability.hpp"

namespace preproj {

using json = nlohmann::json;

// {"vertices": n+1, "type": "A~2", "arrows": [{"id","src","dst","star_of"?}]}
json quiver_to_json(const DoubleQuiver& dq);
// Standard types are rebuilt from "type"; otherwise from the unstarred arrows.
QuiverPtr quiver_from_json(const json& j);

template <class S>
json matrix_to_json(const Field<S>& field, const Matrix<S>& m);
template <class S>
Matrix<S> matrix_from_json(const Field<S>& field, const json& j, Index rows, Index cols);

// {"quiver": ..., "field": "Q" | "GF(q)", "dims": [...], "mats": {"a1": [["1"]], ...}}
template <class S>
json representation_to_json(const Representation<S>& m);
template <class S>
Representation<S> representation_from_json(const json& j, const Field<S>& field);

using AnyRepresentation = std::variant<Representation<Rational>, Representation<Gf>>;
AnyRepresentation any_representation_from_json(const json& j);

template <class S>
json shifted_to_json(const ShiftedModule<S>& s);
template <class S>
json hom_to_json(const Field<S>& field, const HomSpace<S>& h);
template <class S>
json ext_to_json(const Field<S>& field, const Ext1Space<S>& e);
json verdict_to_json(const StabilityVerdict& v);
json scan_to_json(const ModuliScan<Gf>& scan);

json dimvec_to_json(const DimVec& v);
DimVec dimvec_from_json(const json& j);

}  // namespace preproj
