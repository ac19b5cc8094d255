#include "preproj/io.hpp"

namespace preproj {

json dimvec_to_json(const DimVec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

DimVec dimvec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("dimension vector must be an array");
  DimVec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw ParseError("dimension vector entries must be integers");
    v(static_cast<Index>(i)) = j[i].get<int>();
  }
  return v;
}

json quiver_to_json(const DoubleQuiver& dq) {
  json arrows = json::array();
  for (const auto& a : dq.arrows()) {
    json x = {{"id", a.id}, {"src", a.src}, {"dst", a.dst}};
    if (a.epsilon < 0) x["star_of"] = dq.arrow(a.star).id;
    arrows.push_back(std::move(x));
  }
  json out = {{"vertices", dq.vertex_count()}, {"arrows", std::move(arrows)}};
  if (!dq.type_name().empty()) out["type"] = dq.type_name();
  return out;
}

QuiverPtr quiver_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_extended_dynkin(j.get<std::string>()).quiver;
    if (!j.is_object()) throw ParseError("quiver must be an object or a type name");
    if (j.contains("type")) {
      QuiverPtr q = parse_extended_dynkin(j.at("type").get<std::string>()).quiver;
      if (j.contains("arrows") && !(quiver_to_json(*q).at("arrows") == j.at("arrows")))
        throw ParseError("arrows do not match the standard orientation of " + q->type_name());
      return q;
    }
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (a.contains("star_of")) continue;
      arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<int>(), a.at("dst").get<int>()});
    }
    return std::make_shared<DoubleQuiver>(DoubleQuiver::build(Quiver(j.at("vertices").get<int>(), std::move(arrows))));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed quiver JSON: ") + e.what());
  }
}

template <class S>
json matrix_to_json(const Field<S>& field, const Matrix<S>& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(field.format(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
Matrix<S> matrix_from_json(const Field<S>& field, const json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) throw ShapeError("matrix has the wrong number of rows");
  Matrix<S> m = zeros(field, rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw ShapeError("matrix row has the wrong length");
    for (Index c = 0; c < cols; ++c) {
      const json& x = row[static_cast<std::size_t>(c)];
      if (x.is_string()) m(r, c) = field.parse(x.get<std::string>());
      else if (x.is_number_integer()) m(r, c) = field.from_int(x.get<std::int64_t>());
      else throw ParseError("matrix entries must be strings or integers");
    }
  }
  return m;
}

template <class S>
json representation_to_json(const Representation<S>& m) {
  json mats = json::object();
  for (int a = 0; a < m.dq().arrow_count(); ++a) mats[m.dq().arrow(a).id] = matrix_to_json(m.field(), m.mat(a));
  return {{"quiver", quiver_to_json(m.dq())},
          {"field", m.field().spec().to_string()},
          {"dims", dimvec_to_json(m.dims())},
          {"mats", std::move(mats)}};
}

template <class S>
Representation<S> representation_from_json(const json& j, const Field<S>& field) {
  try {
    QuiverPtr q = quiver_from_json(j.at("quiver"));
    const DimVec dims = dimvec_from_json(j.at("dims"));
    auto m = Representation<S>::with_zero_maps(q, field, dims);
    const json& mats = j.at("mats");
    for (auto it = mats.begin(); it != mats.end(); ++it) {
      const int a = q->find_arrow(it.key());
      if (a < 0) throw ParseError("unknown arrow " + it.key());
      const auto& arrow = q->arrow(a);
      m.set(a, matrix_from_json(field, it.value(), dims(arrow.dst), dims(arrow.src)));
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed representation JSON: ") + e.what());
  }
}

AnyRepresentation any_representation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw ParseError("representation JSON needs a field");
  const FieldSpec spec = FieldSpec::parse(j.at("field").get<std::string>());
  if (!spec.is_finite()) return representation_from_json(j, Field<Rational>());
  return representation_from_json(j, Field<Gf>(spec));
}

template <class S>
json shifted_to_json(const ShiftedModule<S>& s) {
  return {{"degree", s.degree}, {"module", representation_to_json(s.module)}};
}

template <class S>
json hom_to_json(const Field<S>& field, const HomSpace<S>& h) {
  json basis = json::array();
  for (const auto& f : h.basis) {
    json x = json::array();
    for (const auto& blk : f) x.push_back(matrix_to_json(field, blk));
    basis.push_back(std::move(x));
  }
  return {{"dim", h.dim()}, {"basis", std::move(basis)}};
}

template <class S>
json ext_to_json(const Field<S>& field, const Ext1Space<S>& e) {
  json basis = json::array();
  for (const auto& f : e.cocycle_basis) {
    json x = json::array();
    for (const auto& blk : f) x.push_back(matrix_to_json(field, blk));
    basis.push_back(std::move(x));
  }
  return {{"dim", e.dim()}, {"cocycle_basis", std::move(basis)}};
}

json verdict_to_json(const StabilityVerdict& v) {
  json out = {{"status", to_string(v.status)}};
  if (v.witness) out["witness"] = dimvec_to_json(*v.witness);
  return out;
}

json scan_to_json(const ModuliScan<Gf>& scan) {
  json classes = json::array();
  for (const auto& r : scan.classes) {
    json flags = json::array();
    for (bool f : r.flags) flags.push_back(f);
    classes.push_back({{"key", r.key}, {"stable", r.stable}, {"flags", flags}, {"representative", representation_to_json(r.rep)}});
  }
  json theta = json::array();
  for (Index i = 0; i < scan.theta.size(); ++i) theta.push_back(scan.theta(i).str());
  return {{"field", scan.field.to_string()},
          {"theta", theta},
          {"d", dimvec_to_json(scan.d)},
          {"assignments", scan.assignments},
          {"classes", std::move(classes)},
          {"stable_count", scan.stable_count()}};
}

#define PREPROJ_INSTANTIATE(S)                                                             \
  template json matrix_to_json(const Field<S>&, const Matrix<S>&);                         \
  template Matrix<S> matrix_from_json(const Field<S>&, const json&, Index, Index);         \
  template json representation_to_json(const Representation<S>&);                          \
  template Representation<S> representation_from_json(const json&, const Field<S>&);       \
  template json shifted_to_json(const ShiftedModule<S>&);                                  \
  template json hom_to_json(const Field<S>&, const HomSpace<S>&);                          \
  template json ext_to_json(const Field<S>&, const Ext1Space<S>&);

PREPROJ_INSTANTIATE(Rational)
PREPROJ_INSTANTIATE(Gf)

}  // namespace preproj
