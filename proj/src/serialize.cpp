#include "qci/serialize.hpp"

#include <fstream>
#include <sstream>

namespace qci {
namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::parse, msg); }

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

Scalar scalar_from_json(const FieldDescriptor& field, const Json& value) {
  if (value.is_string()) return Scalar::parse(field, value.get<std::string>());
  if (value.is_number_integer()) return Scalar::from_int(field, value.get<long long>());
  parse_error("scalar must be a string literal or an integer, got " + value.dump());
}

std::size_t basis_index(const SpecPtr& spec, const Json& v) {
  const ExponentVec e = exponent_from_json(v);
  if (e.size() != spec->n() || !spec->contains(e)) {
    parse_error("exponent " + v.dump() + " is not a basis vector");
  }
  return spec->index_of(e);
}

Json witness_to_json(const Witness& w) {
  Json at = Json::array();
  for (const ExponentVec& v : w.at) at.push_back(exponent_to_json(v));
  return Json{{"at", at}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

// Removes a trailing comment, leaving '#' inside strings alone.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (in_string && ch == '\\') {
      ++k;
    } else if (ch == '"') {
      in_string = !in_string;
    } else if (ch == '#' && !in_string) {
      return line.substr(0, k);
    }
  }
  return line;
}

int bracket_balance(const std::string& text) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (in_string && ch == '\\') {
      ++k;
    } else if (ch == '"') {
      in_string = !in_string;
    } else if (!in_string && ch == '[') {
      ++depth;
    } else if (!in_string && ch == ']') {
      --depth;
    }
  }
  return depth;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json exponent_to_json(const ExponentVec& v) { return Json(v.components()); }

ExponentVec exponent_from_json(const Json& doc) {
  if (!doc.is_array()) parse_error("exponent vector must be an array, got " + doc.dump());
  std::vector<int> out;
  for (const Json& c : doc) {
    if (!c.is_number_integer()) parse_error("exponent entries must be integers, got " + doc.dump());
    out.push_back(c.get<int>());
  }
  return ExponentVec(std::move(out));
}

SpecPtr spec_from_json(const Json& doc) {
  const Json& field_doc = member(doc, "field");
  if (!field_doc.is_string()) parse_error("\"field\" must be a string");
  const FieldDescriptor field = FieldDescriptor::parse(field_doc.get<std::string>());

  const Json& a_doc = member(doc, "a");
  if (!a_doc.is_array()) parse_error("\"a\" must be an array of integers");
  std::vector<int> a;
  for (const Json& x : a_doc) {
    if (!x.is_number_integer()) parse_error("\"a\" must be an array of integers");
    a.push_back(x.get<int>());
  }

  const Json& q_doc = member(doc, "q");
  if (!q_doc.is_array()) parse_error("\"q\" must be an array of rows");
  std::vector<std::vector<Scalar>> q;
  for (const Json& row : q_doc) {
    if (!row.is_array()) parse_error("\"q\" must be an array of rows");
    std::vector<Scalar> values;
    for (const Json& x : row) values.push_back(scalar_from_json(field, x));
    q.push_back(std::move(values));
  }
  return AlgebraSpec::create(field, std::move(a), std::move(q));
}

Json spec_to_json(const AlgebraSpec& spec) {
  Json q = Json::array();
  for (const auto& row : spec.q_matrix()) {
    Json r = Json::array();
    for (const Scalar& x : row) r.push_back(x.to_string());
    q.push_back(std::move(r));
  }
  return Json{{"field", spec.field().to_string()}, {"a", spec.a()}, {"q", std::move(q)}};
}

Json parse_toml_subset(const std::string& text) {
  Json doc = Json::object();
  std::istringstream in(text);
  std::string line;
  std::string pending_key;
  std::string pending_value;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(strip_comment(line));
    if (!pending_key.empty()) {
      pending_value += " " + body;
    } else {
      if (body.empty()) continue;
      if (body.front() == '[') parse_error("line " + std::to_string(line_no) + ": tables are not supported");
      const auto eq = body.find('=');
      if (eq == std::string::npos) parse_error("line " + std::to_string(line_no) + ": expected key = value");
      pending_key = trim(body.substr(0, eq));
      pending_value = trim(body.substr(eq + 1));
      if (pending_key.size() >= 2 && pending_key.front() == '"' && pending_key.back() == '"') {
        pending_key = pending_key.substr(1, pending_key.size() - 2);
      }
      if (pending_key.empty()) parse_error("line " + std::to_string(line_no) + ": empty key");
    }
    if (bracket_balance(pending_value) > 0) continue;
    try {
      doc[pending_key] = Json::parse(pending_value);
    } catch (const Json::parse_error&) {
      parse_error("line " + std::to_string(line_no) + ": cannot parse value for " + pending_key);
    }
    pending_key.clear();
    pending_value.clear();
  }
  if (!pending_key.empty()) parse_error("unterminated array for " + pending_key);
  return doc;
}

SpecPtr load_spec_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      parse_error(path + ": " + e.what());
    }
    return spec_from_json(doc);
  }
  return spec_from_json(parse_toml_subset(text));
}

Json coproduct_to_json(const CoproductTable& d, const std::optional<GAssignment>& g) {
  const AlgebraSpec& spec = *d.spec();
  Json doc = spec_to_json(spec);
  Json out = Json::object();
  out["kind"] = d.kind();
  for (auto& [key, value] : doc.items()) out[key] = value;
  Json rows = Json::array();
  for (std::size_t v = 0; v < spec.dim(); ++v) {
    Json image = Json::array();
    for (const auto& [key, c] : d.image(v).terms()) {
      image.push_back(Json{{"v1", exponent_to_json(spec.basis_vector(key.first))},
                           {"v2", exponent_to_json(spec.basis_vector(key.second))},
                           {"coeff", c.to_string()}});
    }
    rows.push_back(Json{{"v", exponent_to_json(spec.basis_vector(v))}, {"image", std::move(image)}});
  }
  out["coproduct"] = std::move(rows);
  Json counit = Json::array();
  for (std::size_t v = 0; v < spec.dim(); ++v) counit.push_back(d.counit_at(v).to_string());
  out["counit"] = std::move(counit);
  if (!d.notes().empty()) out["notes"] = d.notes();
  if (g) {
    out["g"] = g_to_json(*g);
    if (!g->h().empty()) {
      Json h = Json::array();
      for (const Scalar& x : g->h()) h.push_back(x.to_string());
      out["h"] = std::move(h);
    }
  }
  return out;
}

CoproductTable coproduct_from_json(const Json& doc, const SpecPtr& spec) {
  const Json& rows = doc.is_array() ? doc : member(doc, "coproduct");
  if (!rows.is_array()) parse_error("\"coproduct\" must be an array");
  const FieldDescriptor& field = spec->field();
  std::vector<std::optional<TensorElem>> images(spec->dim());
  for (const Json& row : rows) {
    const std::size_t v = basis_index(spec, member(row, "v"));
    if (images[v]) parse_error("basis vector " + spec->basis_vector(v).to_string() + " listed twice");
    const Json& terms = member(row, "image");
    if (!terms.is_array()) parse_error("\"image\" must be an array");
    TensorElem image(spec);
    for (const Json& term : terms) {
      image.add_term(basis_index(spec, member(term, "v1")), basis_index(spec, member(term, "v2")),
                     scalar_from_json(field, member(term, "coeff")));
    }
    images[v] = std::move(image);
  }
  std::vector<TensorElem> complete;
  for (std::size_t v = 0; v < spec->dim(); ++v) {
    if (!images[v]) parse_error("no image for basis vector " + spec->basis_vector(v).to_string());
    complete.push_back(std::move(*images[v]));
  }
  std::string kind = "file";
  if (doc.is_object() && doc.contains("kind") && doc.at("kind").is_string()) {
    kind = doc.at("kind").get<std::string>();
  }
  CoproductTable table(spec, std::move(complete), kind);
  if (doc.is_object() && doc.contains("notes") && doc.at("notes").is_array()) {
    for (const Json& note : doc.at("notes")) {
      if (note.is_string()) table = table.with_note(note.get<std::string>());
    }
  }
  if (doc.is_object() && doc.contains("counit")) {
    const Json& counit = doc.at("counit");
    if (!counit.is_array() || counit.size() != spec->dim()) {
      parse_error("\"counit\" must list one value per basis vector");
    }
    for (std::size_t v = 0; v < spec->dim(); ++v) {
      table = table.with_counit(v, scalar_from_json(field, counit[v]));
    }
  }
  return table;
}

Json g_to_json(const GAssignment& g) {
  const AlgebraSpec& spec = *g.spec();
  Json out = Json::array();
  for (std::size_t v = 0; v < spec.dim(); ++v) {
    out.push_back(Json{{"v", exponent_to_json(spec.basis_vector(v))}, {"value", g.at(v).to_string()}});
  }
  return out;
}

GAssignment g_from_json(const Json& doc, const SpecPtr& spec) {
  const Json& rows = doc.is_array() ? doc : member(doc, "g");
  if (!rows.is_array()) parse_error("\"g\" must be an array");
  std::vector<std::optional<Scalar>> values(spec->dim());
  for (const Json& row : rows) {
    const std::size_t v = basis_index(spec, member(row, "v"));
    if (values[v]) parse_error("g listed twice at " + spec->basis_vector(v).to_string());
    values[v] = scalar_from_json(spec->field(), member(row, "value"));
  }
  std::vector<Scalar> complete;
  for (std::size_t v = 0; v < spec->dim(); ++v) {
    if (!values[v]) {
      throw Error(ErrorKind::precondition, "g missing at " + spec->basis_vector(v).to_string());
    }
    complete.push_back(*values[v]);
  }
  GAssignment g = GAssignment::create(spec, std::move(complete));
  if (doc.is_object() && doc.contains("h")) {
    const Json& h_doc = doc.at("h");
    if (!h_doc.is_array() || h_doc.size() != spec->n()) parse_error("\"h\" must list one sign per generator");
    std::vector<Scalar> h;
    for (const Json& x : h_doc) h.push_back(scalar_from_json(spec->field(), x));
    g = g.with_h(std::move(h));
  }
  return g;
}

Json check_to_json(const CheckResult& check) {
  Json out{{"name", check.name}, {"passed", check.passed}};
  if (!check.note.empty()) out["note"] = check.note;
  if (!check.witnesses.empty()) {
    Json ws = Json::array();
    for (const Witness& w : check.witnesses) ws.push_back(witness_to_json(w));
    out["witnesses"] = std::move(ws);
  }
  return out;
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) checks.push_back(check_to_json(c));
  Json info = Json::array();
  for (const CheckResult& c : report.informational) info.push_back(check_to_json(c));
  return Json{{"overall", report.overall()},
              {"checks", std::move(checks)},
              {"informational", std::move(info)},
              {"notes", report.notes}};
}

Json obstruction_to_json(const ObstructionVerdict& verdict, const std::vector<int>& a,
                         std::uint64_t characteristic) {
  Json out{{"a", a}, {"char", characteristic}, {"verdict", to_string(verdict.verdict)}};
  if (verdict.witness) {
    const ObstructionWitness& w = *verdict.witness;
    out["witness"] = Json{{"index", w.index + 1},
                          {"ai", a[w.index]},
                          {"m", w.m},
                          {"binomial", w.binomial.get_str()},
                          {"reason", w.reason}};
  }
  return out;
}

}  // namespace qci
