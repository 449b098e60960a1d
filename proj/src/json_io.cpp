#include "ybx/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "ybx/error.hpp"

namespace ybx {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "expected an object");
  auto it = j.find(name);
  if (it == j.end())
    fail(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer())
    fail(ErrorCode::ParseError, std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const Json& v, const char* name) {
  if (!v.is_array())
    fail(ErrorCode::ParseError, std::string("field \"") + name + "\" must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    if (!e.is_number_integer())
      fail(ErrorCode::ParseError,
           std::string("field \"") + name + "\" must contain integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::pair<int, int>> pair_array(const Json& v, const char* name) {
  if (!v.is_array())
    fail(ErrorCode::ParseError, std::string("field \"") + name + "\" must be an array");
  std::vector<std::pair<int, int>> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail(ErrorCode::ParseError, std::string("field \"") + name +
                                      "\" must contain [a, b] integer pairs");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

Rat rat_entry(const Json& v, const char* name) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  fail(ErrorCode::ParseError, std::string("field \"") + name +
                                  "\" must contain integers or \"p/q\" strings");
}

std::vector<Rat> rat_array(const Json& j, const char* name, size_t expected) {
  const Json& v = field(j, name);
  if (!v.is_array())
    fail(ErrorCode::ParseError, std::string("field \"") + name + "\" must be an array");
  if (v.size() != expected)
    fail(ErrorCode::ParseError, std::string("field \"") + name + "\" has " +
                                    std::to_string(v.size()) + " entries, expected " +
                                    std::to_string(expected));
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const Json& e : v) out.push_back(rat_entry(e, name));
  return out;
}

Json rat_json(const std::vector<Rat>& values) {
  Json arr = Json::array();
  for (const Rat& v : values) arr.push_back(rat_string(v));
  return arr;
}

void require_kind(const Json& j, const char* expected) {
  const std::string kind = json_kind(j);
  if (kind != expected)
    fail(ErrorCode::ParseError,
         std::string("expected kind \"") + expected + "\", found \"" + kind + "\"");
}

Json letter_to_json(const Letter& l) {
  Json obj;
  obj["gen"] = fam_name(l.fam);
  obj["i"] = l.i;
  if (l.fam != Fam::sigma && l.fam != Fam::rho && l.fam != Fam::p) obj["j"] = l.j;
  obj["e"] = l.e;
  return obj;
}

Letter letter_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "a letter must be an object");
  const Json& gen = field(j, "gen");
  if (!gen.is_string()) fail(ErrorCode::ParseError, "letter field \"gen\" must be a string");
  const Fam fam = fam_from_name(gen.get<std::string>());
  const int i = int_field(j, "i");
  int jj = 0;
  if (j.contains("j")) jj = int_field(j, "j");
  int e = 1;
  if (j.contains("e")) e = int_field(j, "e");
  return make_letter(fam, i, jj, e);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::FileNotFound, "cannot open for writing: " + path);
  out << j.dump(2) << '\n';
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON");
  return j;
}

std::string canonical_json(const Json& j) { return j.dump(); }

std::string json_kind(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail(ErrorCode::ParseError, "field \"kind\" must be a string");
  return kind.get<std::string>();
}

FiniteYBMap yb_map_from_json(const Json& j) {
  require_kind(j, "set_yb");
  const int size = int_field(j, "size");
  return make_yb_map(size, pair_array(field(j, "table"), "table"));
}

Json yb_map_to_json(const FiniteYBMap& m) {
  Json j;
  j["kind"] = "set_yb";
  j["size"] = m.size;
  Json table = Json::array();
  for (const auto& [x, y] : m.table) table.push_back(Json::array({x, y}));
  j["table"] = std::move(table);
  return j;
}

BinaryOpTable binop_from_json(const Json& j) {
  require_kind(j, "binop");
  const int size = int_field(j, "size");
  return make_binop(size, int_array(field(j, "table"), "table"));
}

Json binop_to_json(const BinaryOpTable& op) {
  Json j;
  j["kind"] = "binop";
  j["size"] = op.size;
  j["table"] = op.table;
  return j;
}

GroupTable group_from_json(const Json& j) {
  require_kind(j, "group");
  const int size = int_field(j, "size");
  return make_group(size, int_array(field(j, "mult"), "mult"));
}

Json group_to_json(const GroupTable& g) {
  Json j;
  j["kind"] = "group";
  j["size"] = g.size;
  j["mult"] = g.mult;
  return j;
}

SetMapping mapping_from_json(const Json& j) {
  require_kind(j, "mapping");
  const int domain = int_field(j, "domain");
  const int codomain = int_field(j, "codomain");
  return make_mapping(domain, codomain, int_array(field(j, "table"), "table"));
}

Json mapping_to_json(const SetMapping& f) {
  Json j;
  j["kind"] = "mapping";
  j["domain"] = f.domain_size;
  j["codomain"] = f.codomain_size;
  j["table"] = f.table;
  return j;
}

CrossMap cross_from_json(const Json& j) {
  require_kind(j, "cross");
  const int size_c = int_field(j, "size_c");
  const int size_b = int_field(j, "size_b");
  return make_cross_map(size_c, size_b, pair_array(field(j, "table"), "table"));
}

Json cross_to_json(const CrossMap& r) {
  Json j;
  j["kind"] = "cross";
  j["size_c"] = r.size_c;
  j["size_b"] = r.size_b;
  Json table = Json::array();
  for (const auto& [c, b] : r.table) table.push_back(Json::array({c, b}));
  j["table"] = std::move(table);
  return j;
}

Mat matrix_from_json(const Json& j) {
  require_kind(j, "matrix");
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) fail(ErrorCode::ParseError, "matrix shape must be nonnegative");
  Mat m(rows, cols);
  m.a = rat_array(j, "entries", static_cast<size_t>(rows) * cols);
  return m;
}

Json matrix_to_json(const Mat& m) {
  Json j;
  j["kind"] = "matrix";
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["entries"] = rat_json(m.a);
  return j;
}

Mat elem2_from_json(const Json& j) {
  require_kind(j, "elem2");
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) fail(ErrorCode::ParseError, "elem2 shape must be nonnegative");
  Mat m(rows, cols);
  m.a = rat_array(j, "coeffs", static_cast<size_t>(rows) * cols);
  return m;
}

Json elem2_to_json(const Mat& m) {
  Json j;
  j["kind"] = "elem2";
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["coeffs"] = rat_json(m.a);
  return j;
}

HopfData hopf_from_json(const Json& j) {
  require_kind(j, "hopf");
  const int dim = int_field(j, "dim");
  if (dim <= 0) fail(ErrorCode::ParseError, "hopf dim must be positive");
  HopfData h;
  h.dim = dim;
  const size_t d = static_cast<size_t>(dim);
  h.mult = rat_array(j, "mult", d * d * d);
  h.unit = rat_array(j, "unit", d);
  h.comult = rat_array(j, "comult", d * d * d);
  h.counit = rat_array(j, "counit", d);
  h.antipode = Mat(dim, dim);
  h.antipode.a = rat_array(j, "antipode", d * d);
  validate_hopf_shape(h);
  return h;
}

Json hopf_to_json(const HopfData& h) {
  Json j;
  j["kind"] = "hopf";
  j["dim"] = h.dim;
  j["mult"] = rat_json(h.mult);
  j["unit"] = rat_json(h.unit);
  j["comult"] = rat_json(h.comult);
  j["counit"] = rat_json(h.counit);
  j["antipode"] = rat_json(h.antipode.a);
  return j;
}

Word word_from_json(const Json& j) {
  const Json* letters = &j;
  if (j.is_object()) {
    require_kind(j, "word");
    letters = &field(j, "letters");
  }
  if (!letters->is_array()) fail(ErrorCode::ParseError, "a word must be an array of letters");
  Word w;
  w.reserve(letters->size());
  for (const Json& l : *letters) w.push_back(letter_from_json(l));
  return w;
}

Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (const Letter& l : w) arr.push_back(letter_to_json(l));
  return arr;
}

Json presentation_to_json(const Presentation& p) {
  Json j;
  j["kind"] = "presentation";
  j["name"] = p.name;
  j["n"] = p.n;
  Json gens = Json::array();
  for (const Letter& g : p.generators) gens.push_back(letter_to_json(g));
  j["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const Word& r : p.relators) rels.push_back(word_to_json(r));
  j["relators"] = std::move(rels);
  return j;
}

Json extension_to_json(const FiniteYBMap& ext, int size_b, int size_c) {
  Json j = yb_map_to_json(ext);
  j["pair_layout"] = Json{{"b", size_b}, {"c", size_c}};
  return j;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["relations_checked"] = r.relations_checked;
  Json failures = Json::array();
  for (const Failure& f : r.failures) {
    Json entry;
    entry["relation"] = f.relation;
    entry["witness"] = f.witness;
    entry["note"] = f.note;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  Json info = Json::array();
  for (const auto& [name, value] : r.info)
    info.push_back(Json{{"name", name}, {"value", value}});
  j["info"] = std::move(info);
  return j;
}

}  // namespace ybx
