#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zinbiel/deformation.hpp"
#include "zinbiel/problem_file.hpp"

namespace zinb::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string file;
  std::optional<std::string> field;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> order;
  std::optional<std::size_t> target_order;
  std::uint64_t seed = 1;
  std::size_t probes = 20;
  std::string output = "report";
  std::optional<std::string> algebra;
  std::optional<std::string> morphism;
  std::optional<std::string> deformation;

  bool machine() const { return output != "report"; }
};

// Text lines for humans and a JSON document for machines, built side by side.
class Report {
 public:
  explicit Report(const std::string& command) { json_["command"] = command; }

  void line(std::string text) { lines_.push_back(std::move(text)); }
  json& data() { return json_; }

  int finish(int code, const Options& opt, std::ostream& out) {
    json_["exit_code"] = code;
    json_["status"] = code == kOk ? "ok" : "failed";
    if (opt.machine()) {
      out << json_.dump(2) << '\n';
    } else {
      for (const auto& l : lines_) out << l << '\n';
    }
    return code;
  }

 private:
  std::vector<std::string> lines_;
  json json_ = json::object();
};

std::string superscript(std::size_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (n == 0) return digits[0];
  std::string s;
  for (; n > 0; n /= 10) s = digits[n % 10] + s;
  return s;
}

std::string vector_string(std::span<const Scalar> v) {
  std::string s;
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b].is_zero()) continue;
    std::string c = v[b].to_string();
    const bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (s.empty()) {
      s = negative ? "-" : "";
    } else {
      s += negative ? " - " : " + ";
    }
    if (c != "1") s += c + "*";
    s += "e" + std::to_string(b);
  }
  return s.empty() ? "0" : s;
}

std::string args_string(std::span<const std::size_t> idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ",e" : "e") + std::to_string(idx[i]);
  return s + ")";
}

json vector_json(std::span<const Scalar> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json cochain_json(const Cochain& c) {
  json entries = json::array();
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    if (is_zero(c.value(t))) continue;
    entries.push_back({{"args", c.tuple(t)}, {"value", vector_json(c.value(t))}});
  }
  return {{"arity", c.arity()},
          {"domain_dim", c.domain_dim()},
          {"codomain_dim", c.codomain_dim()},
          {"entries", entries}};
}

json triple_json(const TripleCochain& t) {
  return {{"degree", t.degree}, {"R", cochain_json(t.xi)}, {"S", cochain_json(t.pi)}, {"f", cochain_json(t.phi)}};
}

void cochain_lines(Report& r, const std::string& name, const Cochain& c, const std::string& indent = "  ") {
  bool any = false;
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    if (is_zero(c.value(t))) continue;
    any = true;
    r.line(indent + name + args_string(c.tuple(t)) + " = " + vector_string(c.value(t)));
  }
  if (!any) r.line(indent + name + " = 0");
}

void triple_lines(Report& r, const std::string& name, const TripleCochain& t) {
  cochain_lines(r, name + "_R", t.xi);
  cochain_lines(r, name + "_S", t.pi);
  if (t.phi.arity() > 0) cochain_lines(r, name + "_f", t.phi);
}

template <class T>
const T& select(const std::vector<T>& items, const std::optional<std::string>& name, const std::string& kind) {
  if (name) {
    auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.name == *name; });
    if (it == items.end()) throw std::invalid_argument("no " + kind + " named '" + *name + "' in the problem file");
    return *it;
  }
  if (items.size() == 1) return items.front();
  if (items.empty()) throw std::invalid_argument("the problem file defines no " + kind);
  throw std::invalid_argument("the problem file defines several " + kind + "s; choose one with --" + kind);
}

// Entries of the problem file turned into validated objects. Failures are
// written to the report and come back as nullopt.
class Model {
 public:
  Model(ProblemFile problem, Report& report) : problem_(std::move(problem)), report_(report) {}

  const ProblemFile& problem() const { return problem_; }

  std::optional<ZinbielAlgebra> algebra(const AlgebraEntry& e) {
    auto v = validate_zinbiel(e.constants);
    if (v.ok()) return std::move(*v.value);
    report_.line("algebra " + e.name + ": Eq. (1) fails on " + std::to_string(v.violations.size()) + " of " +
                 std::to_string(v.checked) + " triples");
    json bad = json::array();
    for (const auto& x : v.violations) {
      report_.line("  " + args_string(x.indices) + ": (xy)z - x(yz) - x(zy) = " + vector_string(x.residual));
      bad.push_back({{"args", x.indices}, {"residual", vector_json(x.residual)}});
    }
    report_.data()["violations"][e.name] = {{"identity", "Eq. (1)"}, {"entries", bad}};
    return std::nullopt;
  }

  std::optional<ZinbielAlgebra> algebra(const std::string& name) { return algebra(*problem_.find_algebra(name)); }

  std::optional<AlgebraMorphism> morphism(const MorphismEntry& e) {
    auto r = algebra(e.source);
    auto s = e.source == e.target ? r : algebra(e.target);
    if (!r || !s) {
      report_.line("morphism " + e.name + ": skipped, its algebras are not Zinbiel");
      return std::nullopt;
    }
    auto v = validate_morphism(*r, *s, e.matrix);
    if (v.ok()) return std::move(*v.value);
    report_.line("morphism " + e.name + ": f(xy) = f(x)f(y) fails on " + std::to_string(v.violations.size()) + " of " +
                 std::to_string(v.checked) + " pairs");
    json bad = json::array();
    for (const auto& x : v.violations) {
      report_.line("  " + args_string(x.indices) + ": f(xy) - f(x)f(y) = " + vector_string(x.residual));
      bad.push_back({{"args", x.indices}, {"residual", vector_json(x.residual)}});
    }
    report_.data()["violations"][e.name] = {{"identity", "morphism"}, {"entries", bad}};
    return std::nullopt;
  }

  std::optional<AlgebraMorphism> morphism(const std::string& name) { return morphism(*problem_.find_morphism(name)); }

  // `order` truncates the stored series.
  std::optional<TruncatedDeformation> deformation(const DeformationEntry& e, std::optional<std::size_t> order) {
    const std::size_t n = order.value_or(e.order());
    if (n > e.order()) {
      throw std::invalid_argument("--order " + std::to_string(n) + " exceeds the order " + std::to_string(e.order()) +
                                  " of deformation " + e.name);
    }
    auto f = morphism(e.morphism);
    if (!f) return std::nullopt;
    MorphismComplex complex(std::move(*f));
    std::vector<TripleCochain> terms{base_term(complex.morphism())};
    terms.insert(terms.end(), e.terms.begin(), e.terms.begin() + static_cast<std::ptrdiff_t>(n));
    auto checked = check_deformation(complex, std::move(terms));
    if (checked.ok()) return std::move(*checked.deformation);
    const auto& fail = *checked.failure;
    report_.line("deformation " + e.name + ": " + fail.label() + " fails");
    cochain_lines(report_, "residual", fail.residual);
    report_.data()["violations"][e.name] = {
        {"identity", fail.label()}, {"order", fail.order}, {"residual", cochain_json(fail.residual)}};
    return std::nullopt;
  }

 private:
  ProblemFile problem_;
  Report& report_;
};

std::string deformation_label(std::size_t order) {
  return "(4_n) for R and S and (5_n) hold for 0 <= n <= " + std::to_string(order);
}

// A self-contained problem file holding the morphism of `e` and its algebras.
ProblemFile excerpt(const ProblemFile& p, const std::string& morphism) {
  ProblemFile out;
  out.field = p.field;
  const auto& m = *p.find_morphism(morphism);
  out.algebras.push_back(*p.find_algebra(m.source));
  if (m.target != m.source) out.algebras.push_back(*p.find_algebra(m.target));
  out.morphisms.push_back(m);
  return out;
}

DeformationEntry deformation_entry(const std::string& name, const std::string& morphism,
                                   const TruncatedDeformation& theta) {
  return {name, morphism, std::vector<TripleCochain>(theta.terms().begin() + 1, theta.terms().end())};
}

IsomorphismEntry isomorphism_entry(const std::string& name, const std::string& morphism,
                                   const FormalIsomorphism& phi) {
  return {name, morphism, std::vector<std::pair<Cochain, Cochain>>(phi.terms().begin() + 1, phi.terms().end())};
}

void emit_file(Report& r, const ProblemFile& file) {
  const std::string text = serialize_problem(file);
  r.data()["result_file"] = text;
  r.line("");
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) r.line(l);
}

int cmd_validate(const Options& opt, Model& model, Report& r) {
  const auto& p = model.problem();
  const bool restricted = opt.algebra || opt.morphism || opt.deformation;
  bool ok = true;
  json checked = json::array();

  std::vector<const AlgebraEntry*> algebras;
  if (opt.algebra) {
    algebras.push_back(&select(p.algebras, opt.algebra, "algebra"));
  } else if (!restricted) {
    for (const auto& a : p.algebras) algebras.push_back(&a);
  }
  for (const auto* a : algebras) {
    if (model.algebra(*a)) {
      const std::size_t n = a->constants.dim * a->constants.dim * a->constants.dim;
      r.line("algebra " + a->name + ": Zinbiel identity verified on " + std::to_string(n) + " triples");
      checked.push_back({{"kind", "algebra"}, {"name", a->name}, {"ok", true}, {"checked", n}});
    } else {
      ok = false;
      checked.push_back({{"kind", "algebra"}, {"name", a->name}, {"ok", false}});
    }
  }

  std::vector<const MorphismEntry*> morphisms;
  if (opt.morphism) {
    morphisms.push_back(&select(p.morphisms, opt.morphism, "morphism"));
  } else if (!restricted) {
    for (const auto& m : p.morphisms) morphisms.push_back(&m);
  }
  for (const auto* m : morphisms) {
    if (model.morphism(*m)) {
      const std::size_t n = m->matrix.cols() * m->matrix.cols();
      r.line("morphism " + m->name + ": f(xy) = f(x)f(y) verified on " + std::to_string(n) + " pairs");
      checked.push_back({{"kind", "morphism"}, {"name", m->name}, {"ok", true}, {"checked", n}});
    } else {
      ok = false;
      checked.push_back({{"kind", "morphism"}, {"name", m->name}, {"ok", false}});
    }
  }

  std::vector<const DeformationEntry*> deformations;
  if (opt.deformation) {
    deformations.push_back(&select(p.deformations, opt.deformation, "deformation"));
  } else if (!restricted) {
    for (const auto& d : p.deformations) deformations.push_back(&d);
  }
  for (const auto* d : deformations) {
    if (auto theta = model.deformation(*d, std::nullopt)) {
      r.line("deformation " + d->name + ": " + deformation_label(theta->order()));
      checked.push_back({{"kind", "deformation"}, {"name", d->name}, {"ok", true}, {"order", theta->order()}});
    } else {
      ok = false;
      checked.push_back({{"kind", "deformation"}, {"name", d->name}, {"ok", false}});
    }
  }
  if (checked.empty()) r.line("nothing to validate");
  r.data()["checked"] = checked;
  return ok ? kOk : kMathFailure;
}

int cmd_cohomology(const Options& opt, Model& model, Report& r) {
  const auto& p = model.problem();
  std::vector<std::size_t> degrees{2, 3};
  if (opt.degree) {
    if (*opt.degree != 2 && *opt.degree != 3) throw std::invalid_argument("--degree must be 2 or 3");
    degrees = {*opt.degree};
  }
  json dims = json::array();
  const bool use_algebra = opt.algebra || (!opt.morphism && p.morphisms.empty());
  if (use_algebra) {
    const auto& e = select(p.algebras, opt.algebra, "algebra");
    auto a = model.algebra(e);
    if (!a) return kMathFailure;
    const auto module = Bimodule::regular(*a);
    r.data()["object"] = {{"kind", "algebra"}, {"name", e.name}};
    for (auto n : degrees) {
      const auto h = cohomology_dim(module, n);
      r.line("dim H" + superscript(n) + "(" + e.name + "," + e.name + ") = " + std::to_string(h));
      dims.push_back({{"degree", n}, {"dim", h}});
    }
  } else {
    const auto& e = select(p.morphisms, opt.morphism, "morphism");
    auto f = model.morphism(e);
    if (!f) return kMathFailure;
    const MorphismComplex complex(std::move(*f));
    r.data()["object"] = {{"kind", "morphism"}, {"name", e.name}};
    for (auto n : degrees) {
      const auto h = cohomology_dim(complex, n);
      r.line("dim H" + superscript(n) + "(f,f) = " + std::to_string(h) + "  [f = " + e.name + "]");
      dims.push_back({{"degree", n}, {"dim", h}});
    }
  }
  r.data()["cohomology"] = dims;
  return kOk;
}

int cmd_check_deformation(const Options& opt, Model& model, Report& r) {
  const auto& e = select(model.problem().deformations, opt.deformation, "deformation");
  r.data()["deformation"] = e.name;
  auto theta = model.deformation(e, opt.order);
  if (!theta) return kMathFailure;
  r.line("deformation " + e.name + " of order " + std::to_string(theta->order()) + ": " +
         deformation_label(theta->order()));
  r.data()["order"] = theta->order();
  const auto inf = infinitesimal(*theta);
  if (inf.order) {
    r.line("infinitesimal theta_" + std::to_string(*inf.order) + " is " +
           (inf.is_cocycle() ? "a 2-cocycle" : "NOT a 2-cocycle"));
    r.data()["infinitesimal"] = {{"order", *inf.order}, {"cocycle", inf.is_cocycle()}};
  } else {
    r.line("all terms theta_1..theta_N vanish");
    r.data()["infinitesimal"] = nullptr;
  }
  return kOk;
}

void obstruction_lines(Report& r, const ObstructionClass& ob) {
  r.line("obstruction Ob (Eq. (7)) of the order-" + std::to_string(ob.order) + " series:");
  triple_lines(r, "Ob", ob.value);
  r.data()["obstruction"] = {{"order", ob.order}, {"value", triple_json(ob.value)}};
}

int cmd_obstruction(const Options& opt, Model& model, Report& r) {
  const auto& e = select(model.problem().deformations, opt.deformation, "deformation");
  r.data()["deformation"] = e.name;
  auto theta = model.deformation(e, opt.order);
  if (!theta) return kMathFailure;
  if (theta->order() == 0) throw std::invalid_argument("the obstruction needs a deformation of order >= 1");
  const auto ob = obstruction(*theta);
  obstruction_lines(r, ob);
  const auto cocycle = is_cocycle(theta->complex(), ob.value);
  r.line(std::string("d") + superscript(3) + "_f Ob " + (cocycle.ok ? "= 0" : "!= 0"));
  const auto preimage = coboundary_preimage(theta->complex(), ob.value);
  r.data()["cocycle"] = cocycle.ok;
  r.data()["coboundary"] = preimage.has_value();
  if (preimage) {
    r.line("Ob is a coboundary: extends to order " + std::to_string(ob.order + 1));
    return kOk;
  }
  r.line("Ob is not a coboundary: no extension to order " + std::to_string(ob.order + 1));
  return kMathFailure;
}

int cmd_extend(const Options& opt, Model& model, Report& r) {
  if (!opt.target_order) throw std::invalid_argument("extend needs --target-order");
  const auto& e = select(model.problem().deformations, opt.deformation, "deformation");
  r.data()["deformation"] = e.name;
  auto theta = model.deformation(e, opt.order);
  if (!theta) return kMathFailure;
  if (theta->order() == 0) throw std::invalid_argument("extend needs a deformation of order >= 1");
  const auto trace = extend_to_order(*theta, *opt.target_order);
  r.data()["reached_order"] = trace.deformation.order();
  if (!trace.complete()) {
    r.line("deformation " + e.name + ": obstructed at order " + std::to_string(trace.obstruction->order + 1) +
           ", Ob is not a coboundary");
    obstruction_lines(r, *trace.obstruction);
    return kMathFailure;
  }
  if (trace.deformation.order() == theta->order() && *opt.target_order <= theta->order()) {
    r.line("deformation " + e.name + " already has order " + std::to_string(theta->order()));
  } else {
    r.line("deformation " + e.name + " extended to order " + std::to_string(trace.deformation.order()));
  }
  r.data()["extended"] = json::array();
  for (std::size_t i = 1; i <= trace.deformation.order(); ++i) {
    r.data()["extended"].push_back(triple_json(trace.deformation.term(i)));
  }
  auto file = excerpt(model.problem(), e.morphism);
  file.deformations.push_back(deformation_entry(e.name + "_ext", e.morphism, trace.deformation));
  emit_file(r, file);
  return kOk;
}

int cmd_normalize(const Options& opt, Model& model, Report& r) {
  const auto& e = select(model.problem().deformations, opt.deformation, "deformation");
  r.data()["deformation"] = e.name;
  auto theta = model.deformation(e, opt.order);
  if (!theta) return kMathFailure;
  const auto t = trivialize(*theta);
  for (auto l : t.steps) r.line("killed theta_" + std::to_string(l) + " by conjugation with Id + phi t^" + std::to_string(l));
  r.data()["steps"] = t.steps;
  auto file = excerpt(model.problem(), e.morphism);
  file.deformations.push_back(deformation_entry(e.name + "_normal", e.morphism, t.result));
  file.isomorphisms.push_back(isomorphism_entry(e.name + "_phi", e.morphism, t.phi));
  if (t.stuck_order) {
    r.line("theta_" + std::to_string(*t.stuck_order) + " is not a coboundary; normalization stops at order " +
           std::to_string(*t.stuck_order));
    r.data()["stuck_order"] = *t.stuck_order;
    emit_file(r, file);
    return kMathFailure;
  }
  r.line(t.steps.empty() ? "deformation " + e.name + " is already trivial"
                         : "deformation " + e.name + " is equivalent to the trivial deformation");
  r.data()["stuck_order"] = nullptr;
  emit_file(r, file);
  return kOk;
}

int cmd_rigidity(const Options& opt, Model& model, Report& r) {
  const auto& e = select(model.problem().morphisms, opt.morphism, "morphism");
  auto f = model.morphism(e);
  if (!f) return kMathFailure;
  const MorphismComplex complex(std::move(*f));
  const std::size_t order = opt.order.value_or(4);
  const auto rep = rigidity_check(complex, order, opt.probes, opt.seed);
  r.data()["morphism"] = e.name;
  r.data()["h2_dim"] = rep.h2_dim;
  if (!rep.certified_rigid) {
    r.line("dim H²(f,f) = " + std::to_string(rep.h2_dim) + ", inconclusive");
    r.data()["verdict"] = "inconclusive";
    return kOk;
  }
  r.line("dim H²(f,f) = 0, rigid");
  r.data()["verdict"] = "rigid";
  r.data()["probes"] = {
      {"order", rep.probe_order}, {"count", rep.probes}, {"trivialized", rep.trivialized}, {"seed", rep.seed}};
  if (rep.probes > 0) {
    r.line("trivialized " + std::to_string(rep.trivialized) + " of " + std::to_string(rep.probes) +
           " random deformations of order " + std::to_string(rep.probe_order) + " (seed " + std::to_string(rep.seed) +
           ")");
  }
  return rep.trivialized == rep.probes ? kOk : kMathFailure;
}

int cmd_verify_identities(const Options& opt, Model& model, Report& r) {
  const auto& p = model.problem();
  bool ok = true;
  json results = json::array();

  std::vector<const MorphismEntry*> morphisms;
  if (opt.morphism) {
    morphisms.push_back(&select(p.morphisms, opt.morphism, "morphism"));
  } else if (!opt.deformation) {
    for (const auto& m : p.morphisms) morphisms.push_back(&m);
  }
  for (const auto* m : morphisms) {
    auto f = model.morphism(*m);
    if (!f) {
      ok = false;
      continue;
    }
    const MorphismComplex complex(std::move(*f));
    const bool d21 = (complex.differential_matrix(2) * complex.differential_matrix(1)).is_zero();
    const bool d32 = (complex.differential_matrix(3) * complex.differential_matrix(2)).is_zero();
    r.line("morphism " + m->name + ": d²_f d¹_f " + (d21 ? "= 0" : "!= 0") + ", d³_f d²_f " + (d32 ? "= 0" : "!= 0"));
    results.push_back({{"kind", "morphism"}, {"name", m->name}, {"d2d1", d21}, {"d3d2", d32}});
    ok = ok && d21 && d32;
  }

  std::vector<const DeformationEntry*> deformations;
  if (opt.deformation) {
    deformations.push_back(&select(p.deformations, opt.deformation, "deformation"));
  } else if (!opt.morphism) {
    for (const auto& d : p.deformations) deformations.push_back(&d);
  }
  for (const auto* d : deformations) {
    auto theta = model.deformation(*d, opt.order);
    if (!theta) {
      ok = false;
      continue;
    }
    if (theta->order() == 0) {
      r.line("deformation " + d->name + ": order 0, no obstruction to check");
      continue;
    }
    const auto ob = obstruction(*theta);
    const bool closed = is_cocycle(theta->complex(), ob.value).ok;
    const auto eq8 = verify_obstruction_identity(*theta);
    r.line("deformation " + d->name + ": d³_f Ob " + (closed ? "= 0" : "!= 0") + ", Eq. (8) f Ob_R - Ob_S f = d²Ob_f " +
           (eq8.holds ? "holds" : "FAILS"));
    if (!eq8.holds) {
      cochain_lines(r, "lhs", eq8.lhs);
      cochain_lines(r, "rhs", eq8.rhs);
    }
    results.push_back({{"kind", "deformation"}, {"name", d->name}, {"ob_cocycle", closed}, {"eq8", eq8.holds}});
    ok = ok && closed && eq8.holds;
  }
  if (results.empty() && ok) r.line("nothing to verify");
  r.data()["results"] = results;
  return ok ? kOk : kMathFailure;
}

const std::map<std::string, std::function<int(const Options&, Model&, Report&)>>& commands() {
  static const std::map<std::string, std::function<int(const Options&, Model&, Report&)>> table{
      {"validate", cmd_validate},
      {"cohomology", cmd_cohomology},
      {"check-deformation", cmd_check_deformation},
      {"obstruction", cmd_obstruction},
      {"extend", cmd_extend},
      {"normalize", cmd_normalize},
      {"rigidity", cmd_rigidity},
      {"verify-identities", cmd_verify_identities},
  };
  return table;
}

const std::map<std::string, std::string>& summaries() {
  static const std::map<std::string, std::string> table{
      {"validate", "check the Zinbiel identity, morphisms and deformations"},
      {"cohomology", "dimensions of H^2 and H^3"},
      {"check-deformation", "verify a truncated deformation order by order"},
      {"obstruction", "obstruction class of a deformation"},
      {"extend", "extend a deformation to --target-order"},
      {"normalize", "conjugate a deformation towards the trivial one"},
      {"rigidity", "H^2(f,f) and random trivialization probes"},
      {"verify-identities", "d_f d_f = 0, d_f Ob = 0 and f Ob_R - Ob_S f = d Ob_f"},
  };
  return table;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Deformation cohomology of Zinbiel algebra morphisms over Q and F_p", "zinbiel"};
  app.require_subcommand(1);
  for (const auto& [name, fn] : commands()) {
    auto* sub = app.add_subcommand(name, summaries().at(name));
    sub->add_option("file", opt.file, "problem file")->required();
    sub->add_option("--field", opt.field, "override the field: Q or Fp:<prime>");
    sub->add_option("--degree", opt.degree, "cohomology degree (2 or 3)");
    sub->add_option("--order", opt.order, "truncation order of the input deformation; probe order for rigidity");
    sub->add_option("--target-order", opt.target_order, "order to extend to");
    sub->add_option("--seed", opt.seed, "seed for random probes");
    sub->add_option("--probes", opt.probes, "number of random probes for rigidity");
    sub->add_option("--output", opt.output, "report or machine")
        ->check(CLI::IsMember({"report", "machine", "machine-readable"}));
    sub->add_option("--algebra", opt.algebra, "algebra name");
    sub->add_option("--morphism", opt.morphism, "morphism name");
    sub->add_option("--deformation", opt.deformation, "deformation name");
    sub->callback([&opt, name = name] { opt.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    std::optional<Field> field;
    if (opt.field) field = Field::parse(*opt.field);
    Report report(opt.command);
    Model model(parse_problem(read_file(opt.file), field), report);
    report.data()["field"] = model.problem().field.to_string();
    const int code = commands().at(opt.command)(opt, model, report);
    return report.finish(code, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << opt.file << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kMathFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace zinb::cli
