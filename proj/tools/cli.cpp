#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qci/serialize.hpp"

namespace qci::cli {
namespace {

struct Options {
  std::string spec_path;
  std::string field;
  std::string a_list;
  std::string q_literal;
  std::vector<std::string> coproducts;
  std::string g_source = "auto";
  std::string format = "text";
  std::optional<std::uint64_t> bound;
  std::uint64_t characteristic = 0;
};

struct Built {
  CoproductTable table;
  std::optional<GAssignment> g;
  Functional phi;
  AlgElem t;
};

const std::map<std::string, std::string>& check_labels() {
  static const std::map<std::string, std::string> labels = {
      {"coassociativity", "coassociativity"},
      {"counit", "counit identities"},
      {"counit-is-algebra-map", "counit is an algebra map"},
      {"unit-grouplike", "unit is group-like"},
      {"frobenius-algebra", "(A, phi) Frobenius algebra"},
      {"frobenius-coalgebra", "(A, t) Frobenius coalgebra"},
      {"S-anti-algebra", "S anti-algebra morphism"},
      {"S-anti-coalgebra", "S anti-coalgebra morphism"},
      {"S4-identity", "S^4 = Id"},
      {"t-right-integral", "t right integral"},
      {"phi-right-cointegral", "phi right cointegral"},
  };
  return labels;
}

std::string label_of(const std::string& name) {
  const auto it = check_labels().find(name);
  return it == check_labels().end() ? name : it->second;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string render_at(const std::vector<ExponentVec>& at) {
  if (at.empty()) return "";
  std::string s = at.size() == 1 ? " at v=" : " at (u,v)=";
  for (std::size_t k = 0; k < at.size(); ++k) s += (k ? "," : "") + at[k].to_string();
  return s;
}

void print_check(std::ostream& out, const CheckResult& c) {
  out << "  " << pad(label_of(c.name), 30) << (c.passed ? "PASS" : "FAIL");
  if (!c.passed && !c.witnesses.empty()) {
    const Witness& w = c.witnesses.front();
    out << render_at(w.at) << ": " << w.lhs << ", expected " << w.rhs;
    if (c.witnesses.size() > 1) out << " (+" << c.witnesses.size() - 1 << " more)";
  }
  out << "\n";
}

std::string describe_spec(const AlgebraSpec& spec) {
  std::ostringstream s;
  s << "A(q; a=(";
  for (std::size_t i = 0; i < spec.n(); ++i) s << (i ? "," : "") << spec.a()[i];
  s << ")) over " << spec.field().to_string() << ", q = [";
  for (std::size_t i = 0; i < spec.n(); ++i) {
    s << (i ? ",[" : "[");
    for (std::size_t j = 0; j < spec.n(); ++j) s << (j ? "," : "") << spec.q(i, j).to_string();
    s << "]";
  }
  s << "]";
  return s.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorKind::parse, "cannot read integer list \"" + text + "\"");
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorKind::parse, "empty integer list");
  return out;
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

bool is_file_selector(const std::string& sel) { return sel.rfind("file:", 0) == 0; }

SpecPtr resolve_spec(const Options& opt, const std::string& selector) {
  if (!opt.spec_path.empty()) return load_spec_file(opt.spec_path);
  if (is_file_selector(selector)) {
    const Json doc = read_json_file(selector.substr(5));
    if (doc.is_object() && doc.contains("field") && doc.contains("a") && doc.contains("q")) {
      return spec_from_json(doc);
    }
  }
  if (opt.a_list.empty()) throw Error(ErrorKind::parse, "no algebra given: use --spec or --a");
  const FieldDescriptor field = FieldDescriptor::parse(opt.field.empty() ? "Q" : opt.field);
  const Scalar q = Scalar::parse(field, opt.q_literal.empty() ? "-1" : opt.q_literal);
  return AlgebraSpec::uniform(field, parse_int_list(opt.a_list), q);
}

Built build(const SpecPtr& spec, const std::string& selector, const std::string& g_source) {
  std::optional<GAssignment> g;
  std::optional<CoproductTable> table;
  if (selector == kGCoproductKind) {
    if (g_source == "auto") {
      g = solve_g(spec);
    } else if (is_file_selector(g_source)) {
      g = g_from_json(read_json_file(g_source.substr(5)), spec);
    } else {
      throw Error(ErrorKind::parse, "--g must be auto or file:<path>");
    }
    table = build_g_coproduct(*g);
  } else if (selector == kPathCoproductKind) {
    table = build_path_coproduct(spec);
  } else if (selector == kSignedCoproductKind) {
    table = build_signed_coproduct(spec);
  } else if (is_file_selector(selector)) {
    const std::string path = selector.substr(5);
    const Json doc = read_json_file(path);
    table = coproduct_from_json(doc, spec);
    if (doc.is_object() && doc.contains("g")) g = g_from_json(doc, spec);
    for (const CheckResult& c : {check_coassociativity(*table), check_counit(*table)}) {
      if (!c.passed) {
        const Witness& w = c.witnesses.front();
        throw Error(ErrorKind::precondition, "coproduct table in " + path + " fails " + c.name +
                                                 render_at(w.at) + ": " + w.lhs + " vs " + w.rhs);
      }
    }
  } else {
    throw Error(ErrorKind::parse, "unknown coproduct selector \"" + selector + "\"");
  }
  const std::size_t top = spec->top_index();
  Functional phi = table->kind() == kSignedCoproductKind ? Functional::sum_of_duals(spec)
                                                         : Functional::dual_basis(spec, top);
  return {std::move(*table), std::move(g), std::move(phi), AlgElem::basis(spec, top)};
}

Json g_with_h(const GAssignment& g) {
  Json out = Json::object();
  out["values"] = g_to_json(g);
  if (!g.h().empty()) {
    Json h = Json::array();
    for (const Scalar& x : g.h()) h.push_back(x.to_string());
    out["h"] = std::move(h);
  }
  return out;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

std::uint64_t resolve_bound(const Options& opt) {
  if (opt.bound) return *opt.bound;
  if (const char* env = std::getenv("QCI_SEARCH_BOUND")) {
    const std::string text(env);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw Error(ErrorKind::parse, "QCI_SEARCH_BOUND is not a non-negative integer");
    }
    return value;
  }
  return kDefaultSearchBound;
}

std::string selector_or(const Options& opt, std::size_t k, const char* fallback) {
  return opt.coproducts.size() > k ? opt.coproducts[k] : std::string(fallback);
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const std::string selector = selector_or(opt, 0, kGCoproductKind);
  const SpecPtr spec = resolve_spec(opt, selector);
  Built b = build(spec, selector, opt.g_source);
  const BiFrobeniusCandidate candidate(b.table, b.phi, b.t);
  const VerificationReport report = verify_bifrobenius(candidate);
  const bool pass = report.overall();

  if (opt.format == "json") {
    Json doc = Json::object();
    doc["command"] = "verify";
    doc["spec"] = spec_to_json(*spec);
    doc["coproduct"] = b.table.kind();
    if (b.g) doc["g"] = g_with_h(*b.g);
    doc["phi"] = b.phi.to_string();
    doc["t"] = b.t.to_string();
    Json images = Json::array();
    for (std::size_t v = 0; v < spec->dim(); ++v) {
      images.push_back(Json{{"v", exponent_to_json(spec->basis_vector(v))},
                            {"image", candidate.s().image_of_basis(v).to_string()}});
    }
    doc["antipode"] = Json{{"is_identity", candidate.s().matrix().is_identity()},
                           {"images", std::move(images)}};
    doc["report"] = report_to_json(report);
    doc["verdict"] = pass ? "pass" : "fail";
    emit(out, doc);
  } else {
    out << "algebra: " << describe_spec(*spec) << "\n";
    out << "coproduct: " << b.table.kind() << "\n";
    if (b.g) {
      out << "g:";
      for (std::size_t v = 0; v < spec->dim(); ++v) {
        out << " " << spec->basis_vector(v).to_string() << "=" << b.g->at(v).to_string();
      }
      out << "\n";
    }
    out << "phi = " << b.phi.to_string() << ", t = " << b.t.to_string() << "\n";
    out << "checks:\n";
    for (const CheckResult& c : report.checks) print_check(out, c);
    out << "informational:\n";
    for (const CheckResult& c : report.informational) print_check(out, c);
    for (const std::string& note : report.notes) out << "note: " << note << "\n";
    out << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kAxiomFailure;
}

int cmd_primitives(const Options& opt, std::ostream& out) {
  const std::string selector = selector_or(opt, 0, kGCoproductKind);
  const SpecPtr spec = resolve_spec(opt, selector);
  const Built b = build(spec, selector, opt.g_source);
  const PrimitiveSpace p = primitive_space(b.table);
  std::vector<std::string> basis;
  for (const AlgElem& x : p.basis) basis.push_back(x.to_string());
  if (opt.format == "json") {
    emit(out, Json{{"command", "primitives"},
                   {"spec", spec_to_json(*spec)},
                   {"coproduct", b.table.kind()},
                   {"dim", p.dim},
                   {"basis", basis}});
  } else {
    out << "algebra: " << describe_spec(*spec) << "\n";
    out << "coproduct: " << b.table.kind() << "\n";
    out << "primitive space dimension: " << p.dim << "\n";
    for (const std::string& x : basis) out << "  " << x << "\n";
  }
  return kPass;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  if (opt.coproducts.size() == 1 || opt.coproducts.size() > 2) {
    throw Error(ErrorKind::parse, "compare takes --coproduct exactly twice (or not at all)");
  }
  const std::string first = selector_or(opt, 0, kGCoproductKind);
  const std::string second = selector_or(opt, 1, kPathCoproductKind);
  const SpecPtr spec = resolve_spec(opt, first);
  const Built b1 = build(spec, first, opt.g_source);
  const Built b2 = build(spec, second, opt.g_source);
  const InvariantComparison c = coalgebra_invariant_compare(b1.table, b2.table);
  if (opt.format == "json") {
    emit(out, Json{{"command", "compare"},
                   {"spec", spec_to_json(*spec)},
                   {"first", b1.table.kind()},
                   {"second", b2.table.kind()},
                   {"primitive_dims", {c.primitive_dim_first, c.primitive_dim_second}},
                   {"cocommutative", {c.cocommutative_first, c.cocommutative_second}},
                   {"distinguished", c.distinguished},
                   {"certificate", c.certificate}});
  } else {
    out << "algebra: " << describe_spec(*spec) << "\n";
    out << b1.table.kind() << " vs " << b2.table.kind() << "\n";
    out << "primitive dimensions: " << c.primitive_dim_first << ", " << c.primitive_dim_second << "\n";
    out << "cocommutative: " << (c.cocommutative_first ? "yes" : "no") << ", "
        << (c.cocommutative_second ? "yes" : "no") << "\n";
    out << (c.distinguished ? "not isomorphic: " : "") << c.certificate << "\n";
  }
  return kPass;
}

int cmd_obstruction(const Options& opt, std::ostream& out) {
  if (opt.a_list.empty()) throw Error(ErrorKind::parse, "obstruction needs --a");
  const std::vector<int> a = parse_int_list(opt.a_list);
  const ObstructionVerdict v = bialgebra_obstruction(a, opt.characteristic);
  if (opt.format == "json") {
    Json doc = Json::object();
    doc["command"] = "obstruction";
    const Json body = obstruction_to_json(v, a, opt.characteristic);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    emit(out, doc);
  } else {
    out << "verdict: " << to_string(v.verdict) << "\n";
    if (v.witness) {
      out << "witness: a" << v.witness->index + 1 << " = " << a[v.witness->index] << ", m = "
          << v.witness->m << "; " << v.witness->reason << "\n";
    }
  }
  return kPass;
}

int cmd_search_g(const Options& opt, std::ostream& out) {
  const SpecPtr spec = resolve_spec(opt, "");
  const std::uint64_t bound = resolve_bound(opt);
  const GSearchResult r = exhaustive_g_search(spec, bound);
  Json coords = Json::array();
  for (const ExponentVec& v : spec->basis()) coords.push_back(exponent_to_json(v));
  Json solutions = Json::array();
  for (const GAssignment& g : r.passing) {
    Json tuple = Json::array();
    for (const Scalar& x : g.values()) tuple.push_back(x.to_string());
    solutions.push_back(std::move(tuple));
  }
  if (opt.format == "json") {
    emit(out, Json{{"command", "search-g"},
                   {"spec", spec_to_json(*spec)},
                   {"bound", bound},
                   {"examined", r.examined},
                   {"passing", r.passing.size()},
                   {"coordinates", std::move(coords)},
                   {"solutions", std::move(solutions)}});
  } else {
    out << "algebra: " << describe_spec(*spec) << "\n";
    out << "examined " << r.examined << " assignments, " << r.passing.size() << " passing\n";
    for (const Json& s : solutions) out << "  " << s.dump() << "\n";
  }
  return kPass;
}

int cmd_search_cij(const Options& opt, std::ostream& out) {
  if (opt.field.empty() || opt.q_literal.empty()) {
    throw Error(ErrorKind::parse, "search-cij needs --field and --q");
  }
  const FieldDescriptor field = FieldDescriptor::parse(opt.field);
  const Scalar q = Scalar::parse(field, opt.q_literal);
  const CijSolutions r = aq_cij_solutions(q);
  Json solutions = Json::array();
  for (const CijTuple& c : r.solutions) {
    Json tuple = Json::array();
    for (const Scalar& x : c) tuple.push_back(x.to_string());
    solutions.push_back(std::move(tuple));
  }
  if (opt.format == "json") {
    emit(out, Json{{"command", "search-cij"},
                   {"field", field.to_string()},
                   {"q", q.to_string()},
                   {"scope", r.scope},
                   {"order", {"c11", "c12", "c21", "c22"}},
                   {"examined", r.examined},
                   {"solutions", std::move(solutions)}});
  } else {
    out << "q = " << q.to_string() << " over " << field.to_string() << "\n";
    out << "scope: " << r.scope << "\n";
    out << "examined " << r.examined << " tuples (c11,c12,c21,c22), " << r.solutions.size()
        << " solutions\n";
    for (const Json& s : solutions) out << "  " << s.dump() << "\n";
  }
  return kPass;
}

int cmd_export(const Options& opt, std::ostream& out) {
  const std::string selector = selector_or(opt, 0, kGCoproductKind);
  const SpecPtr spec = resolve_spec(opt, selector);
  const Built b = build(spec, selector, opt.g_source);
  emit(out, coproduct_to_json(b.table, b.g));
  return kPass;
}

int report_error(const std::string& command, const Options& opt, const Error& e, std::ostream& out,
                 std::ostream& err) {
  const bool usage = e.kind() == ErrorKind::parse || e.kind() == ErrorKind::invalid_spec;
  err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  if (opt.format == "json") {
    emit(out, Json{{"command", command},
                   {"error", Json{{"kind", to_string(e.kind())}, {"message", e.what()}}}});
  }
  return usage ? kUsage : kPrecondition;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of bi-Frobenius structures on quantum complete intersections",
               "qci"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec_path, "algebra spec file (TOML or JSON)");
    sub->add_option("--field", opt.field, "Q | Q(i) | Fp:<prime>, when no spec file is given");
    sub->add_option("--a", opt.a_list, "exponents, e.g. 2,3");
    sub->add_option("--q", opt.q_literal, "off-diagonal q above the diagonal (default -1)");
  };
  auto add_coproduct = [&](CLI::App* sub) {
    sub->add_option("--coproduct", opt.coproducts, "paper31 | path61 | signed62 | file:<path>");
    sub->add_option("--g", opt.g_source, "auto | file:<path>");
  };

  std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> handlers;
  auto sub = [&](const char* name, const char* help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    add_format(s);
    handlers[s] = handler;
    return s;
  };

  CLI::App* verify = sub("verify", "run the bi-Frobenius axiom suite", cmd_verify);
  add_spec(verify);
  add_coproduct(verify);
  CLI::App* primitives = sub("primitives", "primitive space of a coproduct", cmd_primitives);
  add_spec(primitives);
  add_coproduct(primitives);
  CLI::App* compare = sub("compare", "compare coalgebra invariants of two coproducts", cmd_compare);
  add_spec(compare);
  add_coproduct(compare);
  CLI::App* obstruction = sub("obstruction", "bialgebra obstruction verdict", cmd_obstruction);
  obstruction->add_option("--a", opt.a_list, "exponents, e.g. 6,2")->required();
  obstruction->add_option("--char", opt.characteristic, "0 or a prime");
  CLI::App* search_g = sub("search-g", "exhaustive search over g-coefficients", cmd_search_g);
  add_spec(search_g);
  search_g->add_option("--bound", opt.bound, "largest search space to attempt");
  CLI::App* search_cij = sub("search-cij", "solve the coefficient system for A(q,2,2)", cmd_search_cij);
  search_cij->add_option("--field", opt.field, "Fp:<prime>")->required();
  search_cij->add_option("--q", opt.q_literal, "the parameter q")->required();
  CLI::App* exporter = sub("export-coproduct", "write a coproduct table as JSON", cmd_export);
  add_spec(exporter);
  add_coproduct(exporter);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  for (const auto& [s, handler] : handlers) {
    if (!s->parsed()) continue;
    try {
      return handler(opt, out);
    } catch (const Error& e) {
      return report_error(s->get_name(), opt, e, out, err);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kPrecondition;
    }
  }
  return kUsage;
}

}  // namespace qci::cli
