#include "preproj/kleinian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace preproj {

void SuiteReport::add(std::string inputs, std::string expected, std::string got) {
  const bool pass = expected == got;
  cases.push_back({std::move(inputs), std::move(expected), std::move(got), pass});
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& c : other.cases) cases.push_back({other.name + ": " + c.inputs, c.expected, c.got, c.pass});
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; }));
}

nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
  return {{"suite", r.name}, {"passed", r.passed()}, {"failed", r.failed()}, {"cases", std::move(cases)}};
}

std::string report_table(const SuiteReport& r, bool failures_only) {
  std::ostringstream out;
  for (const auto& c : r.cases) {
    if (failures_only && c.pass) continue;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.inputs << "  expected=" << c.expected << "  got=" << c.got << '\n';
  }
  out << r.name << ": " << r.passed() << " passed, " << r.failed() << " failed\n";
  return out.str();
}

namespace {

ExtendedDynkin a2() { return standard_extended_dynkin(DynkinFamily::A, 2); }
ExtendedDynkin d4() { return standard_extended_dynkin(DynkinFamily::D, 4); }

// "e1+e2", "-e2", "0".
std::string format_root(const DimVec& x) {
  std::string out;
  for (Index k = 0; k < x.size(); ++k) {
    const int c = x(k);
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

std::string q_label(const Field<Gf>& field) { return field.spec().to_string(); }

template <class S>
std::vector<ShiftedModule<S>> all_siw(const RootSystem& rs, const Field<S>& field, const WeylWord& w) {
  std::vector<ShiftedModule<S>> out;
  for (int i = 1; i <= rs.rank(); ++i) out.push_back(compute_siw(rs, field, w, i));
  return out;
}

template <class S>
bool hom_criterion(const Representation<S>& m, const RootSystem& rs, const WeylWord& w,
                   const std::vector<ShiftedModule<S>>& siws) {
  for (int i = 1; i <= rs.rank(); ++i) {
    const auto& s = siws[static_cast<std::size_t>(i - 1)];
    const int h = simple_image_sign(rs, w, i) > 0 ? hom_dim(m, s.module) : hom_dim(s.module, m);
    if (h != 0) return false;
  }
  return true;
}

// Nonzero arrows of a thin module as "0->1,0->2".
template <class S>
std::string support_string(const Representation<S>& m) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m.dq().arrow_count(); ++a)
    if (!is_zero_matrix(m.mat(a))) edges.emplace_back(m.dq().arrow(a).src, m.dq().arrow(a).dst);
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (const auto& [s, t] : edges) out += (out.empty() ? "" : ",") + std::to_string(s) + "->" + std::to_string(t);
  return out;
}

std::vector<Field<Gf>> fields_or(const SuiteOptions& options, std::initializer_list<std::uint64_t> defaults) {
  std::vector<Field<Gf>> out;
  if (options.field) {
    if (!options.field->is_finite()) throw UsageError("this suite needs a finite field");
    out.emplace_back(*options.field);
  } else {
    for (auto q : defaults) out.emplace_back(FieldSpec::finite(q));
  }
  return out;
}

// Thin dimension vectors other than 0.
std::vector<DimVec> thin_dimvecs(int vertices) {
  std::vector<DimVec> out;
  for (int mask = 1; mask < (1 << vertices); ++mask) {
    DimVec v(vertices);
    for (int k = 0; k < vertices; ++k) v(k) = (mask >> k) & 1;
    out.push_back(v);
  }
  return out;
}

std::vector<Theta> a2_thetas(const RootSystem& rs) {
  std::vector<Theta> out;
  for (const auto& w : rs.all_elements()) out.push_back(rs.chamber_sample(w));
  for (auto t : {make_theta({-1, 0, 1}), make_theta({-1, 1, 0}), make_theta({0, 1, -1}), make_theta({1, -1, 0}),
                 make_theta({0, -1, 1}), make_theta({1, 0, -1})})
    out.push_back(t);
  return out;
}

DimVec random_dims(std::mt19937_64& rng, int vertices, int max_entry) {
  std::uniform_int_distribution<int> dist(0, max_entry);
  DimVec v(vertices);
  do {
    for (int k = 0; k < vertices; ++k) v(k) = dist(rng);
  } while (v.sum() == 0);
  return v;
}

template <class S>
bool iso_or_false(const Representation<S>& a, const Representation<S>& b) {
  try {
    return is_isomorphic(a, b);
  } catch (const Inconclusive&) {
    return false;
  }
}

}  // namespace

template <class S>
Representation<S> random_nilpotent_module(QuiverPtr quiver, const Field<S>& field, const DimVec& dims,
                                          std::mt19937_64& rng) {
  if (dims.size() != quiver->vertex_count()) throw ShapeError("dimension vector length does not match the quiver");
  std::vector<int> order;
  for (int v = 0; v < dims.size(); ++v)
    for (int k = 0; k < dims(v); ++k) order.push_back(v);
  std::shuffle(order.begin(), order.end(), rng);
  auto cur = Representation<S>::zero(quiver, field);
  for (int v : order) {
    const auto simple = Representation<S>::simple(quiver, field, v);
    const auto ext = ext1_space(simple, cur);
    ArrowCochain<S> phi;
    for (const auto& a : quiver->arrows()) phi.push_back(zeros(field, cur.dim(a.dst), simple.dim(a.src)));
    for (const auto& basis : ext.cocycle_basis) {
      const S c = field.random(rng);
      for (std::size_t a = 0; a < phi.size(); ++a)
        for (Index r = 0; r < phi[a].rows(); ++r)
          for (Index col = 0; col < phi[a].cols(); ++col) phi[a](r, col) += c * basis[a](r, col);
    }
    cur = extension_from_cocycle(simple, cur, phi);
  }
  return random_base_change(cur, rng);
}

int simple_image_sign(const RootSystem& rs, const WeylWord& w, int i) {
  const DimVec x = rs.act(w, rs.simple_root(i));
  if (RootSystem::is_positive(x)) return 1;
  if (RootSystem::is_negative(x)) return -1;
  throw InternalInvariantError("w e_i is neither positive nor negative");
}

template <class S>
bool exceptional_membership(const Representation<S>& m, const ShiftedModule<S>& siw, const SearchConfig& config) {
  const Field<S>& field = m.field();
  CombinationResult res;
  if (siw.degree == 0) {
    const auto h = hom_space(siw.module, m);
    res = find_combination<S>(field, h.basis, [&](const HomElement<S>& f) { return is_injective(f, field); }, config);
  } else {
    const auto h = hom_space(m, siw.module);
    res = find_combination<S>(field, h.basis, [&](const HomElement<S>& f) { return is_surjective(f, field); }, config);
  }
  if (!res.found && !res.exhaustive) throw Inconclusive("membership search was not exhaustive");
  return res.found;
}

template <class S>
bool exceptional_membership(const RootSystem& rs, const Representation<S>& m, const WeylWord& w, int i,
                            const SearchConfig& config) {
  const auto v = stability_verdict(m, rs.chamber_sample(w));
  if (v.status != Status::Stable)
    throw PreconditionViolated("module is not stable in C(" + format_word(w) + "): " + to_string(v.status));
  return exceptional_membership(m, compute_siw(rs, m.field(), w, i), config);
}

SuiteReport check_stability_characterization(const ExtendedDynkin& type, const WeylWord& w, const Field<Gf>& field,
                                             int samples, std::uint64_t seed) {
  const RootSystem rs(type);
  SuiteReport report{"chs", {}};
  const Theta theta = rs.chamber_sample(w);
  const auto siws = all_siw(rs, field, w);
  const std::string prefix = type.name + " " + q_label(field) + " w=" + format_word(w) + " theta=" + format_theta(theta);
  std::vector<Representation<Gf>> modules;
  const bool thin = type.d.maxCoeff() <= 1;
  if (thin) {
    modules = enumerate_thin_modules(type.quiver, field, type.d);
  } else {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) modules.push_back(random_nilpotent_module(type.quiver, field, type.d, rng));
  }
  for (std::size_t k = 0; k < modules.size(); ++k) {
    const auto& m = modules[k];
    const bool lhs = stability_verdict(m, theta).semistable();
    const bool rhs = hom_criterion(m, rs, w, siws);
    report.add(prefix + " M=" + (thin ? thin_canonical_key(m) : "#" + std::to_string(k)),
               lhs ? "semistable" : "unstable", rhs ? "semistable" : "unstable");
  }
  return report;
}

namespace {

// Images of the simple roots of vertices 1 and 2 under each chamber word.
const std::map<std::string, std::pair<std::string, std::string>>& a2_simple_images() {
  static const std::map<std::string, std::pair<std::string, std::string>> table{
      {"1", {"e1", "e2"}},         {"s1", {"-e1", "e1+e2"}},  {"s2", {"e1+e2", "-e2"}},
      {"s2s1", {"-e1-e2", "e1"}}, {"s1s2", {"e2", "-e1-e2"}}, {"s1s2s1", {"-e2", "-e1"}}};
  return table;
}

// Nonzero arrows of the unique point on both exceptional lines, per chamber.
const std::map<std::string, std::string>& a2_intersection_support() {
  static const std::map<std::string, std::string> table{
      {"1", "0->1,0->2"}, {"s1", "0->2,1->2"},   {"s2", "0->1,2->1"},
      {"s2s1", "2->0,2->1"}, {"s1s2", "1->0,1->2"}, {"s1s2s1", "1->0,2->0"}};
  return table;
}

struct ChamberScan {
  WeylWord w;
  Theta theta;
  std::vector<ShiftedModule<Gf>> siws;
  ModuliScan<Gf> scan;
  std::map<std::string, std::size_t> by_key;  // index into scan.classes
};

ChamberScan scan_chamber(const RootSystem& rs, const Field<Gf>& field, const WeylWord& w, bool with_flags,
                         std::uint64_t budget = kDefaultBudget) {
  ChamberScan c{w, rs.chamber_sample(w), {}, {}, {}};
  c.siws = all_siw(rs, field, w);
  Flagger flagger;
  if (with_flags) {
    flagger = [&c](const Representation<Gf>& m) {
      std::vector<bool> flags;
      for (const auto& s : c.siws) flags.push_back(exceptional_membership(m, s));
      return flags;
    };
  }
  c.scan = moduli_scan(rs.type().quiver, rs.type().d, c.theta, field, budget, flagger);
  for (std::size_t k = 0; k < c.scan.classes.size(); ++k) c.by_key[c.scan.classes[k].key] = k;
  return c;
}

}  // namespace

SuiteReport figure2_report(const Field<Gf>& field) {
  const RootSystem rs(a2());
  const auto& dq = rs.dq();
  SuiteReport report{"figure2", {}};
  const std::string q = q_label(field);
  const std::uint64_t line = field.size() + 1;
  std::vector<ChamberScan> scans;
  for (const auto& w : rs.all_elements()) scans.push_back(scan_chamber(rs, field, w, true));
  const ChamberScan& base = scans.front();

  for (const auto& c : scans) {
    const std::string name = format_word(c.w);
    const std::string tag = q + " w=" + name;
    const auto& expected = a2_simple_images().at(name);
    const std::string exp_images[2] = {expected.first, expected.second};
    for (int i = 1; i <= 2; ++i) {
      const DimVec img = rs.act(c.w, rs.simple_root(i));
      report.add(tag + " image of e" + std::to_string(i), exp_images[i - 1], format_root(img));
      const int exp_degree = exp_images[i - 1][0] == '-' ? 1 : 0;
      report.add(tag + " degree of S" + std::to_string(i) + "^w", std::to_string(exp_degree),
                 std::to_string(c.siws[static_cast<std::size_t>(i - 1)].degree));
    }
    std::uint64_t e1 = 0, e2 = 0;
    std::vector<const ModuliRecord<Gf>*> both;
    for (const auto& r : c.scan.classes) {
      if (!r.stable) continue;
      e1 += r.flags[0];
      e2 += r.flags[1];
      if (r.flags[0] && r.flags[1]) both.push_back(&r);
    }
    report.add(tag + " classes on E1", std::to_string(line), std::to_string(e1));
    report.add(tag + " classes on E2", std::to_string(line), std::to_string(e2));
    report.add(tag + " classes on E1 and E2", "1", std::to_string(both.size()));
    report.add(tag + " E1 and E2", dq.edges_between(1, 2) > 0 ? "meet" : "disjoint", both.empty() ? "disjoint" : "meet");
    if (both.size() == 1)
      report.add(tag + " arrows of the common point", a2_intersection_support().at(name), support_string(both.front()->rep));

    // Transport from the fundamental chamber keeps the line labels.
    bool transport_ok = true;
    for (const auto& r : base.scan.classes) {
      if (!r.stable) continue;
      try {
        const auto moved = apply_word(c.w, r.rep, base.theta);
        const auto it = c.by_key.find(thin_canonical_key(moved.module));
        if (it == c.by_key.end() || c.scan.classes[it->second].flags != r.flags) transport_ok = false;
      } catch (const Error&) {
        transport_ok = false;
      }
    }
    report.check(tag + " transport from C(1) preserves E1/E2 labels", transport_ok);
  }

  bool defining = true, socle_ok = true;
  for (const auto& r : base.scan.classes) {
    for (int i = 1; i <= 2; ++i) {
      const bool hom = hom_dim(Representation<Gf>::simple(r.rep.quiver(), field, i), r.rep) != 0;
      if (hom != static_cast<bool>(r.flags[static_cast<std::size_t>(i - 1)])) defining = false;
    }
    const DimVec soc = socle(r.rep);
    if (soc.maxCoeff() > 1 || (soc.array() > 0).count() > 2) socle_ok = false;
  }
  report.check(q + " w=1 membership agrees with Hom(S_i, M) != 0", defining);
  report.check(q + " w=1 socles have at most two distinct simple summands", socle_ok);
  return report;
}

SuiteReport check_L_sequences(const Field<Gf>& field) {
  const RootSystem rs(a2());
  SuiteReport report{"Lseq", {}};
  const ChamberScan base = scan_chamber(rs, field, {}, true);
  const DimVec& d = rs.type().d;
  int checked = 0;
  for (const auto& r : base.scan.classes) {
    if (!r.stable) continue;
    for (int i = 1; i <= 2; ++i) {
      if (!r.flags[static_cast<std::size_t>(i - 1)]) continue;
      ++checked;
      const auto& n = r.rep;
      const std::string tag = q_label(field) + " i=" + std::to_string(i) + " N=" + r.key;
      const auto si = Representation<Gf>::simple(n.quiver(), field, i);
      const DimVec ei = unit_vector(static_cast<int>(d.size()), i);
      const auto h = hom_space(si, n);
      const auto e = ext1_space(n, si);
      report.add(tag + " dim Hom(S_i,N)", "1", std::to_string(h.dim()));
      report.add(tag + " dim Ext1(N,S_i)", "1", std::to_string(e.dim()));
      if (h.dim() == 1) {
        VertexSubspaces<Gf> u;
        for (int v = 0; v < n.dq().vertex_count(); ++v) u.basis.push_back(image(field, h.basis[0][static_cast<std::size_t>(v)]));
        const auto lm = quotient(n, u);
        report.add(tag + " dims L-", format_dimvec(d - ei), format_dimvec(lm.dims()));
        report.check(tag + " L- is 0-generated", is_zero_generated(lm));
        report.check(tag + " L- is nilpotent", is_nilpotent(lm));
        // Splits iff some map N -> S_i is nonzero on the image of S_i.
        bool split = false;
        for (const auto& g : hom_space(n, si).basis)
          split = split || !is_zero_matrix(mul(field, g[static_cast<std::size_t>(i)], h.basis[0][static_cast<std::size_t>(i)]));
        report.check(tag + " S_i -> N -> L- does not split", !split);
      }
      if (e.dim() == 1) {
        const auto lp = extension_from_cocycle(n, si, e.cocycle_basis[0]);
        report.add(tag + " dims L+", format_dimvec(d + ei), format_dimvec(lp.dims()));
        report.check(tag + " L+ is 0-generated", is_zero_generated(lp));
        report.check(tag + " L+ is nilpotent", is_nilpotent(lp));
        report.check(tag + " S_i -> L+ -> N does not split", !extension_splits(n, si, lp));
      }
    }
  }
  report.add(q_label(field) + " modules on E1 or E2 examined", std::to_string(2 * (field.size() + 1)),
             std::to_string(checked));
  return report;
}

namespace {

SuiteReport suite_figure2(const SuiteOptions& o) {
  SuiteReport out{"figure2", {}};
  for (const auto& f : fields_or(o, {2, 3})) out.merge(figure2_report(f));
  return out;
}

SuiteReport suite_chs(const SuiteOptions& o) {
  SuiteReport out{"chs", {}};
  const RootSystem rs(a2());
  for (const auto& f : fields_or(o, {2, 3}))
    for (const auto& w : rs.all_elements()) out.merge(check_stability_characterization(rs.type(), w, f, 50, o.seed));
  return out;
}

SuiteReport suite_lseq(const SuiteOptions& o) {
  SuiteReport out{"Lseq", {}};
  for (const auto& f : fields_or(o, {3})) out.merge(check_L_sequences(f));
  return out;
}

SuiteReport suite_zerogen(const SuiteOptions& o) {
  SuiteReport out{"zerogen", {}};
  const RootSystem rs(a2());
  const Theta theta = rs.base_theta();
  for (const auto& f : fields_or(o, {2, 3})) {
    const auto modules = enumerate_thin_modules(rs.type().quiver, f, rs.type().d);
    int stable = 0;
    bool nilpotent_ok = true;
    for (const auto& m : modules) {
      const bool a = stability_verdict(m, theta).status == Status::Stable;
      const bool b = is_zero_generated(m);
      if (is_nilpotent(m)) nilpotent_ok = nilpotent_ok && (b == (top(m) == unit_vector(3, 0)));
      bool c = true;
      for (int i = 1; i <= 2; ++i) c = c && hom_dim(m, Representation<Gf>::simple(m.quiver(), f, i)) == 0;
      stable += a;
      const auto fmt = [](bool x, bool y, bool z) {
        return std::string(x ? "stable" : "not stable") + "/" + (y ? "0-generated" : "not 0-generated") + "/" +
               (z ? "Hom zero" : "Hom nonzero");
      };
      out.add(q_label(f) + " M=" + thin_canonical_key(m), fmt(a, a, a), fmt(a, b, c));
    }
    out.check(q_label(f) + " some module is stable in C(1)", stable > 0);
    out.check(q_label(f) + " nilpotent modules are 0-generated exactly when top = S0", nilpotent_ok);
  }
  return out;
}

SuiteReport suite_rootlaw(const SuiteOptions& o) {
  SuiteReport out{"rootlaw", {}};
  const auto run = [&out](const RootSystem& rs, const std::vector<WeylWord>& words, const auto& field) {
    for (const auto& w : words) {
      for (int i = 1; i <= rs.rank(); ++i) {
        const DimVec img = rs.act(w, rs.simple_root(i));
        const std::string tag = rs.type().name + " w=" + format_word(w) + " i=" + std::to_string(i);
        try {
          const auto s = compute_siw(rs, field, w, i);
          out.add(tag + " degree", RootSystem::is_positive(img) ? "0" : "1", std::to_string(s.degree));
          out.add(tag + " class in X_*", format_root(img), format_root(rs.project(s.klass())));
        } catch (const Error& e) {
          out.add(tag, "computed", e.what());
        }
      }
    }
  };
  const RootSystem a(a2()), d(d4());
  std::mt19937_64 rng(o.seed);
  std::vector<WeylWord> sampled;
  for (int k = 0; k < 20; ++k) sampled.push_back(d.random_element(rng, 12));
  if (o.field && o.field->is_finite()) {
    const Field<Gf> f(*o.field);
    run(a, a.all_elements(), f);
    run(d, sampled, f);
  } else {
    run(a, a.all_elements(), Field<Rational>());
    run(d, sampled, Field<Rational>());
  }
  return out;
}

template <class S>
void dimlaw_for(SuiteReport& out, const ExtendedDynkin& type, const Field<S>& field, int count, int max_entry,
                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int steps = 0, good = 0;
  for (int k = 0; k < count; ++k) {
    const auto m = random_nilpotent_module(type.quiver, field, random_dims(rng, type.n + 1, max_entry), rng);
    for (int i = 0; i <= type.n; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto r = dir == 0 ? reflect_plus(i, m) : reflect_minus(i, m);
        if (r.defect != 0) continue;
        ++steps;
        if (r.module.dims() == reflect_dimvec(m.dq(), i, m.dims())) ++good;
      }
    }
  }
  const std::string tag = type.name + " " + field.spec().to_string() + " " + std::to_string(count) + " modules";
  out.add(tag + " defect-zero reflections with dims = s_i dims", std::to_string(steps), std::to_string(good));
  out.check(tag + " defect-zero reflections occur", steps > 0);
}

SuiteReport suite_dimlaw(const SuiteOptions& o) {
  SuiteReport out{"dimlaw", {}};
  if (o.field && o.field->is_finite()) {
    const Field<Gf> f(*o.field);
    dimlaw_for(out, a2(), f, 200, 2, o.seed);
    dimlaw_for(out, d4(), f, 200, 2, o.seed + 1);
  } else {
    dimlaw_for(out, a2(), Field<Rational>(), 200, 2, o.seed);
    dimlaw_for(out, d4(), Field<Gf>(FieldSpec::prime(5)), 200, 2, o.seed + 1);
  }
  return out;
}

template <class S>
void cbform_for(SuiteReport& out, const ExtendedDynkin& type, const Field<S>& field, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Representation<S>> sample;
  for (int k = 0; k < count; ++k)
    sample.push_back(random_nilpotent_module(type.quiver, field, random_dims(rng, type.n + 1, 2), rng));
  int pairs = 0, good = 0;
  const std::string tag = type.name + " " + field.spec().to_string();
  for (std::size_t a = 0; a < sample.size(); ++a) {
    for (std::size_t b = 0; b < sample.size(); ++b) {
      const auto mn = ext_complex_dims(sample[a], sample[b]);
      const auto nm = ext_complex_dims(sample[b], sample[a]);
      const int lhs = bilinear_form(sample[a].dq(), sample[a].dims(), sample[b].dims());
      const int rhs = mn.hom - mn.ext1() + nm.hom;
      ++pairs;
      if (lhs == rhs) ++good;
      else out.add(tag + " pair " + std::to_string(a) + "," + std::to_string(b), std::to_string(lhs), std::to_string(rhs));
    }
  }
  out.add(tag + " pairs with (M,N) = hom - ext1 + hom(N,M)", std::to_string(pairs), std::to_string(good));
}

SuiteReport suite_cbform(const SuiteOptions& o) {
  SuiteReport out{"cbform", {}};
  if (o.field && o.field->is_finite()) {
    const Field<Gf> f(*o.field);
    cbform_for(out, a2(), f, 30, o.seed);
    cbform_for(out, d4(), f, 30, o.seed + 1);
  } else {
    cbform_for(out, a2(), Field<Rational>(), 30, o.seed);
    cbform_for(out, d4(), Field<Gf>(FieldSpec::prime(5)), 30, o.seed + 1);
  }
  return out;
}

SuiteReport suite_roundtrip(const SuiteOptions& o) {
  SuiteReport out{"roundtrip", {}};
  const RootSystem rs(a2());
  const auto& dq = rs.dq();
  for (const auto& f : fields_or(o, {2, 3})) {
    for (const auto& theta : a2_thetas(rs)) {
      for (int i = 0; i < 3; ++i) {
        if (theta(i) == 0) continue;
        int total = 0, iso = 0, status = 0;
        for (const auto& alpha : thin_dimvecs(3)) {
          if (pair(theta, alpha) != 0) continue;
          for (const auto& m : enumerate_thin_modules(rs.type().quiver, f, alpha)) {
            const auto v = stability_verdict(m, theta, o.budget);
            if (!v.semistable()) continue;
            ++total;
            try {
              const auto r1 = theta(i) > 0 ? reflect_plus(i, m) : reflect_minus(i, m);
              const Theta t1 = reflect_theta(dq, i, theta);
              const auto r2 = theta(i) > 0 ? reflect_minus(i, r1.module) : reflect_plus(i, r1.module);
              if (r1.defect == 0 && r2.defect == 0 && iso_or_false(r2.module, m)) ++iso;
              if (stability_verdict(r1.module, t1, o.budget).status == v.status) ++status;
            } catch (const Error&) {
            }
          }
        }
        const std::string tag = q_label(f) + " theta=" + format_theta(theta) + " i=" + std::to_string(i);
        out.add(tag + " semistable modules returned up to isomorphism", std::to_string(total), std::to_string(iso));
        out.add(tag + " semistable modules keeping their verdict", std::to_string(total), std::to_string(status));
      }
    }
  }
  return out;
}

SuiteReport suite_coxeter(const SuiteOptions& o) {
  SuiteReport out{"coxeter", {}};
  const RootSystem rs(a2());
  int samples = 0;
  for (const auto& f : fields_or(o, {3})) {
    for (const auto& w : rs.all_elements()) {
      const Theta theta = rs.chamber_sample(w);
      const auto scan = moduli_scan(rs.type().quiver, rs.type().d, theta, f, o.budget);
      std::vector<Representation<Gf>> modules;
      for (const auto& r : scan.classes)
        if (r.stable) modules.push_back(r.rep);
      const std::size_t singles = modules.size();
      for (std::size_t k = 0; k + 1 < singles && k < 4; ++k) {
        modules.push_back(direct_sum(modules[k], modules[k + 1]));
        modules.push_back(direct_sum(modules[k], modules[k]));
      }
      samples += static_cast<int>(modules.size());
      const std::string tag = q_label(f) + " theta=" + format_theta(theta);
      for (int i = 0; i < 3; ++i) {
        int good = 0;
        for (const auto& m : modules) {
          try {
            if (iso_or_false(apply_word({i, i}, m, theta, false).module, m)) ++good;
          } catch (const Error&) {
          }
        }
        out.add(tag + " s" + std::to_string(i) + "s" + std::to_string(i) + " = id", std::to_string(modules.size()),
                std::to_string(good));
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          int good = 0;
          for (const auto& m : modules) {
            try {
              const auto x = apply_word({i, j, i}, m, theta, false);
              const auto y = apply_word({j, i, j}, m, theta, false);
              if (x.theta == y.theta && iso_or_false(x.module, y.module)) ++good;
            } catch (const Error&) {
            }
          }
          const std::string ij = std::to_string(i), ji = std::to_string(j);
          out.add(tag + " s" + ij + "s" + ji + "s" + ij + " = s" + ji + "s" + ij + "s" + ji,
                  std::to_string(modules.size()), std::to_string(good));
        }
      }
    }
  }
  out.check("at least 50 sampled modules (" + std::to_string(samples) + ")", samples >= 50);
  return out;
}

SuiteReport suite_walls(const SuiteOptions& o) {
  SuiteReport out{"walls", {}};
  const RootSystem rs(a2());
  for (const auto& f : fields_or(o, {2, 3, 4})) {
    std::map<WeylWord, ChamberScan> scans;
    for (const auto& w : rs.all_elements()) scans.emplace(w, scan_chamber(rs, f, w, false, o.budget));
    const ChamberScan& base = scans.at({});
    const auto stable_keys = [](const ChamberScan& c) {
      std::set<std::string> keys;
      for (const auto& r : c.scan.classes)
        if (r.stable) keys.insert(r.key);
      return keys;
    };
    // Image keys of the stable classes of `from` under `word`, in the chamber of the final theta.
    const auto transport = [&](const ChamberScan& from, const WeylWord& word, WeylWord& target) {
      std::multiset<std::string> image;
      target = rs.chamber_of(act_on_theta(rs.dq(), word, from.theta));
      for (const auto& r : from.scan.classes) {
        if (!r.stable) continue;
        try {
          image.insert(thin_canonical_key(apply_word(word, r.rep, from.theta).module));
        } catch (const Error& e) {
          image.insert(std::string("error: ") + e.what());
        }
      }
      return image;
    };
    const std::string q = q_label(f);
    for (const auto& [w, c] : scans) {
      const std::string tag = q + " w=" + format_word(w);
      out.add(tag + " stable classes", std::to_string(base.scan.stable_count()), std::to_string(c.scan.stable_count()));
      WeylWord target;
      const auto image = transport(base, w, target);
      const auto keys = stable_keys(scans.at(target));
      out.add(tag + " C(1) -> C(w) is a bijection onto stable classes", "true",
              std::set<std::string>(image.begin(), image.end()) == keys && image.size() == keys.size() ? "true"
                                                                                                      : "false");
      for (int j = 0; j < 3; ++j) {
        WeylWord next;
        const auto img = transport(c, {j}, next);
        const auto next_keys = stable_keys(scans.at(next));
        out.add(tag + " crossing by s" + std::to_string(j) + " into C(" + format_word(next) + ") is a bijection", "true",
                std::set<std::string>(img.begin(), img.end()) == next_keys && img.size() == next_keys.size() ? "true"
                                                                                                            : "false");
      }
    }
  }
  return out;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"figure2", suite_figure2}, {"chs", suite_chs},         {"coxeter", suite_coxeter}, {"dimlaw", suite_dimlaw},
      {"roundtrip", suite_roundtrip}, {"cbform", suite_cbform}, {"walls", suite_walls},     {"zerogen", suite_zerogen},
      {"Lseq", suite_lseq},       {"rootlaw", suite_rootlaw}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    SuiteReport out{"all", {}};
    for (const auto& [n, fn] : registry()) out.merge(fn(options));
    return out;
  }
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(options);
  throw UsageError("unknown suite " + name);
}

#define PREPROJ_INSTANTIATE(S)                                                                                     \
  template Representation<S> random_nilpotent_module(QuiverPtr, const Field<S>&, const DimVec&, std::mt19937_64&); \
  template bool exceptional_membership(const RootSystem&, const Representation<S>&, const WeylWord&, int,          \
                                       const SearchConfig&);                                                       \
  template bool exceptional_membership(const Representation<S>&, const ShiftedModule<S>&, const SearchConfig&);

PREPROJ_INSTANTIATE(Rational)
PREPROJ_INSTANTIATE(Gf)

}  // namespace preproj
