#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "preproj/io.hpp"
#include "preproj/kleinian.hpp"

using namespace preproj;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string type = "A~2";
  std::string theta;
  std::string theta_tail;
  std::string field = "Q";
  std::string word;
  std::string file;
  std::string emit = "dot";
  std::string format = "table";
  std::string dir = "plus";
  std::string suite = "all";
  int vertex = 0;
  int simple = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 20240601;
  bool field_given = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// theta from --theta, or from --theta-tail with theta_0 fixed by theta(d) = 0.
Theta read_theta(const Options& o, const DimVec& d) {
  if (!o.theta.empty() && !o.theta_tail.empty()) throw UsageError("give either --theta or --theta-tail");
  if (!o.theta.empty()) {
    Theta t = parse_theta(o.theta);
    if (t.size() != d.size()) throw UsageError("theta needs " + std::to_string(d.size()) + " entries");
    return t;
  }
  if (o.theta_tail.empty()) throw UsageError("--theta or --theta-tail is required");
  const Theta tail = parse_theta(o.theta_tail);
  if (tail.size() + 1 != d.size()) throw UsageError("--theta-tail needs " + std::to_string(d.size() - 1) + " entries");
  Theta t(d.size());
  Rational s = 0;
  for (Index i = 1; i < d.size(); ++i) {
    t(i) = tail(i - 1);
    s += Rational(d(i)) * t(i);
  }
  t(0) = -s / Rational(d(0));
  return t;
}

// d for the file's quiver when it is a standard type, otherwise all ones.
DimVec theta_dims(const DoubleQuiver& dq) {
  if (!dq.type_name().empty()) return parse_extended_dynkin(dq.type_name()).d;
  return DimVec::Ones(dq.vertex_count());
}

int cmd_quiver(const Options& o) {
  const auto type = parse_extended_dynkin(o.type);
  if (o.emit == "dot") std::cout << to_dot(*type.quiver);
  else if (o.emit == "json") print_json(quiver_to_json(*type.quiver));
  else throw UsageError("--emit must be dot or json");
  return kOk;
}

int cmd_rep_check(const Options& o) {
  return std::visit(
      [&](const auto& m) {
        const auto bad = check_relations(m);
        if (o.format == "json") {
          json out = {{"ok", bad.empty()}, {"dims", dimvec_to_json(m.dims())}, {"violated_vertices", bad}};
          print_json(out);
        } else {
          std::cout << "dims " << format_dimvec(m.dims()) << '\n';
          if (bad.empty()) std::cout << "relations hold\n";
          for (int v : bad) std::cout << "relation fails at vertex " << v << '\n';
        }
        return bad.empty() ? kOk : kFailed;
      },
      any_representation_from_json(read_json_file(o.file)));
}

int cmd_reflect(const Options& o) {
  if (o.dir != "plus" && o.dir != "minus") throw UsageError("--dir must be plus or minus");
  return std::visit(
      [&](const auto& m) {
        const auto r = o.dir == "plus" ? reflect_plus(o.vertex, m) : reflect_minus(o.vertex, m);
        print_json({{"defect", r.defect}, {"module", representation_to_json(r.module)}});
        return kOk;
      },
      any_representation_from_json(read_json_file(o.file)));
}

json theta_to_json(const Theta& t) {
  json out = json::array();
  for (Index i = 0; i < t.size(); ++i) out.push_back(t(i).str());
  return out;
}

int cmd_apply(const Options& o) {
  const WeylWord w = parse_word(o.word);
  return std::visit(
      [&](const auto& m) {
        const Theta theta = read_theta(o, theta_dims(m.dq()));
        const auto r = apply_word(w, m, theta, true, o.budget);
        print_json({{"theta", theta_to_json(r.theta)}, {"module", representation_to_json(r.module)}});
        return kOk;
      },
      any_representation_from_json(read_json_file(o.file)));
}

int cmd_chamber(const Options& o) {
  const RootSystem rs(parse_extended_dynkin(o.type));
  const Theta theta = read_theta(o, rs.type().d);
  const WeylWord w = rs.chamber_of(theta);
  if (o.format == "json") print_json({{"chamber", format_word(w)}, {"word", w}});
  else std::cout << "C(" << format_word(w) << ")\n";
  return kOk;
}

template <class S>
int siw_over(const Options& o, const RootSystem& rs, const Field<S>& field) {
  const WeylWord w = parse_word(o.word);
  const auto s = compute_siw(rs, field, w, o.simple);
  if (o.format == "json") {
    json out = shifted_to_json(s);
    out["class"] = dimvec_to_json(rs.project(s.klass()));
    print_json(out);
  } else {
    std::cout << "degree " << s.degree << '\n' << "dims " << format_dimvec(s.module.dims()) << '\n';
  }
  return kOk;
}

int cmd_siw(const Options& o) {
  const RootSystem rs(parse_extended_dynkin(o.type));
  const FieldSpec spec = FieldSpec::parse(o.field);
  if (spec.is_finite()) return siw_over(o, rs, Field<Gf>(spec));
  return siw_over(o, rs, Field<Rational>());
}

int cmd_stability(const Options& o) {
  return std::visit(
      [&](const auto& m) {
        const Theta theta = read_theta(o, theta_dims(m.dq()));
        const auto v = stability_verdict(m, theta, o.budget);
        if (o.format == "json") {
          print_json(verdict_to_json(v));
        } else {
          std::cout << to_string(v.status);
          if (v.witness) std::cout << " witness " << format_dimvec(*v.witness);
          std::cout << '\n';
        }
        return kOk;
      },
      any_representation_from_json(read_json_file(o.file)));
}

int cmd_scan(const Options& o) {
  const RootSystem rs(parse_extended_dynkin(o.type));
  const FieldSpec spec = FieldSpec::parse(o.field);
  if (!spec.is_finite()) throw UsageError("scan needs a finite field");
  const Field<Gf> field(spec);
  const Theta theta = read_theta(o, rs.type().d);
  Flagger flagger;
  std::vector<ShiftedModule<Gf>> siws;
  if (rs.is_generic(theta)) {
    const WeylWord w = rs.chamber_of(theta);
    for (int i = 1; i <= rs.rank(); ++i) siws.push_back(compute_siw(rs, field, w, i));
    flagger = [&siws](const Representation<Gf>& m) {
      std::vector<bool> flags;
      for (const auto& s : siws) flags.push_back(exceptional_membership(m, s));
      return flags;
    };
  }
  const auto scan = moduli_scan(rs.type().quiver, rs.type().d, theta, field, o.budget, flagger);
  if (o.format == "json") {
    print_json(scan_to_json(scan));
  } else if (o.format == "csv") {
    std::cout << moduli_csv(scan);
  } else {
    std::cout << "classes " << scan.classes.size() << "  stable " << scan.stable_count() << "  assignments "
              << scan.assignments << '\n';
    for (const auto& r : scan.classes) {
      std::cout << (r.stable ? "stable      " : "semistable  ") << r.key;
      for (std::size_t i = 0; i < r.flags.size(); ++i)
        if (r.flags[i]) std::cout << "  E" << i + 1;
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteOptions so;
  if (o.field_given) so.field = FieldSpec::parse(o.field);
  so.seed = o.seed;
  so.budget = o.budget;
  const auto report = run_suite(o.suite, so);
  if (o.format == "json") print_json(report_to_json(report));
  else std::cout << report_table(report, o.format != "full");
  return report.all_pass() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflection functors, stability and exceptional curves for preprojective algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "Enumeration budget");
  app.add_option("--seed", o.seed, "Seed for randomized searches");

  auto* quiver = app.add_subcommand("quiver", "Print an extended Dynkin double quiver");
  quiver->add_option("--type", o.type, "Type, e.g. A~2 or D~4")->required();
  quiver->add_option("--emit", o.emit, "dot or json");

  auto* rep_check = app.add_subcommand("rep-check", "Check the preprojective relations of a module");
  rep_check->add_option("file", o.file, "Module JSON")->required();
  rep_check->add_option("--format", o.format, "table or json");

  auto* reflect = app.add_subcommand("reflect", "Apply a reflection functor at one vertex");
  reflect->add_option("--vertex", o.vertex, "Vertex")->required();
  reflect->add_option("--dir", o.dir, "plus or minus");
  reflect->add_option("file", o.file, "Module JSON")->required();

  auto* apply = app.add_subcommand("apply", "Transport a semistable module along a word");
  apply->add_option("--word", o.word, "Word, e.g. 1,2,1")->required();
  apply->add_option("--theta", o.theta, "Stability parameter");
  apply->add_option("--theta-tail", o.theta_tail, "theta_1..theta_n");
  apply->add_option("file", o.file, "Module JSON")->required();

  auto* chamber = app.add_subcommand("chamber", "Locate the chamber of a generic parameter");
  chamber->add_option("--type", o.type, "Type")->required();
  chamber->add_option("--theta", o.theta, "Stability parameter");
  chamber->add_option("--theta-tail", o.theta_tail, "theta_1..theta_n");
  chamber->add_option("--format", o.format, "table or json");

  auto* siw = app.add_subcommand("siw", "Compute the stalk complex of a word and a simple");
  siw->add_option("--type", o.type, "Type")->required();
  siw->add_option("--word", o.word, "Reduced word")->required();
  siw->add_option("--simple", o.simple, "Vertex i >= 1")->required();
  siw->add_option("--field", o.field, "Q or a prime power");
  siw->add_option("--format", o.format, "table or json");

  auto* stability = app.add_subcommand("stability", "Stability verdict of a module");
  stability->add_option("--theta", o.theta, "Stability parameter");
  stability->add_option("--theta-tail", o.theta_tail, "theta_1..theta_n");
  stability->add_option("file", o.file, "Module JSON")->required();
  stability->add_option("--format", o.format, "table or json");

  auto* scan = app.add_subcommand("scan", "Enumerate semistable classes over a finite field");
  scan->add_option("--type", o.type, "Type")->required();
  scan->add_option("--field", o.field, "Prime power")->required();
  scan->add_option("--theta", o.theta, "Stability parameter");
  scan->add_option("--theta-tail", o.theta_tail, "theta_1..theta_n");
  scan->add_option("--format", o.format, "table, csv or json");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  auto* verify_field = verify->add_option("--field", o.field, "Field replacing the suite defaults");
  verify->add_option("--format", o.format, "table, full or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  o.field_given = verify_field->count() > 0;

  try {
    if (*quiver) return cmd_quiver(o);
    if (*rep_check) return cmd_rep_check(o);
    if (*reflect) return cmd_reflect(o);
    if (*apply) return cmd_apply(o);
    if (*chamber) return cmd_chamber(o);
    if (*siw) return cmd_siw(o);
    if (*stability) return cmd_stability(o);
    if (*scan) return cmd_scan(o);
    if (*verify) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
