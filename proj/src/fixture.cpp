#include "qbraid/fixture.hpp"

#include "qbraid/builtins.hpp"
#include "qbraid/parse.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace qbraid {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw FixtureError(where + ": " + what); }

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

int require_int(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

Scalar parse_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
  if (!v.is_string()) fail(where, "expected a scalar string");
  try {
    return scalar_parse(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  } catch (const MathError& e) {
    fail(where, e.what());
  }
}

SymMatrix parse_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  SymMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != cols) fail(row_where, "expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_entry(v[i][j], row_where + "[" + std::to_string(j) + "]");
  }
  return m;
}

std::vector<std::string> string_list(const json& obj, const std::string& key, const std::string& where) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  if (!it->is_array()) fail(where + "." + key, "expected a list of strings");
  for (const auto& s : *it) {
    if (!s.is_string()) fail(where + "." + key, "expected a list of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::string optional_string(const json& obj, const std::string& key, const std::string& fallback) {
  auto it = obj.find(key);
  return it != obj.end() && it->is_string() ? it->get<std::string>() : fallback;
}

RMatrixFixture parse_rmatrix_body(const json& obj, std::size_t dim, const std::string& where) {
  RMatrixFixture f;
  f.form = optional_string(obj, "form", "braiding");
  if (f.form != "braiding" && f.form != "rtt") fail(where + ".form", "expected \"braiding\" or \"rtt\"");
  f.matrix = parse_matrix(require(obj, "entries", where), dim * dim, dim * dim, where + ".entries");
  return f;
}

RMatrixFixture parse_rmatrix(const json& doc, const std::string& where) {
  const int dim = require_int(doc, "dim", where);
  if (dim < 1) fail(where + ".dim", "must be positive");
  RMatrixFixture f = parse_rmatrix_body(doc, static_cast<std::size_t>(dim), where);
  f.name = optional_string(doc, "name", "");
  return f;
}

RepresentationFixture parse_representation(const json& doc, const std::string& where) {
  const json& cartan = require(doc, "cartan", where);
  CartanData data;
  try {
    data.a = require(cartan, "matrix", where + ".cartan").get<std::vector<std::vector<int>>>();
    data.d = require(cartan, "d", where + ".cartan").get<std::vector<int>>();
  } catch (const json::exception&) {
    fail(where + ".cartan", "matrix and d must be integer arrays");
  }
  data.rank = static_cast<int>(data.a.size());
  UqPresentation pres;
  try {
    pres = UqPresentation(data);
  } catch (const std::invalid_argument& e) {
    fail(where + ".cartan", e.what());
  }
  const int dim = require_int(doc, "dim", where);
  if (dim < 1) fail(where + ".dim", "must be positive");
  const auto n = static_cast<std::size_t>(dim);
  const json& gens = require(doc, "generators", where);
  if (!gens.is_object()) fail(where + ".generators", "expected an object");
  for (auto it = gens.begin(); it != gens.end(); ++it)
    if (!pres.find_letter(it.key())) fail(where + ".generators", "unknown generator '" + it.key() + "'");
  std::vector<SymMatrix> e, f, k, kinv;
  bool has_kinv = true;
  for (int i = 0; i < pres.rank(); ++i) {
    auto get = [&](GenKind kind) { return generator_name({kind, i}); };
    const std::string gw = where + ".generators.";
    e.push_back(parse_matrix(require(gens, get(GenKind::E), where + ".generators"), n, n, gw + get(GenKind::E)));
    f.push_back(parse_matrix(require(gens, get(GenKind::F), where + ".generators"), n, n, gw + get(GenKind::F)));
    k.push_back(parse_matrix(require(gens, get(GenKind::K), where + ".generators"), n, n, gw + get(GenKind::K)));
    if (gens.contains(get(GenKind::Kinv)))
      kinv.push_back(parse_matrix(gens.at(get(GenKind::Kinv)), n, n, gw + get(GenKind::Kinv)));
    else
      has_kinv = false;
  }
  std::optional<std::vector<SymMatrix>> kinv_opt;
  if (has_kinv) kinv_opt = std::move(kinv);
  RepresentationFixture out;
  try {
    out.rep = Representation(std::move(pres), std::move(e), std::move(f), std::move(k), std::move(kinv_opt));
  } catch (const std::invalid_argument& ex) {
    fail(where + ".generators", ex.what());
  }
  out.name = optional_string(doc, "name", "");
  out.reference_relations = string_list(doc, "reference_relations", where);
  if (auto it = doc.find("braiding"); it != doc.end()) {
    if (it->is_string()) {
      try {
        Builtin b = builtin_by_name(it->get<std::string>());
        if (b.space.dim() != n) fail(where + ".braiding", "builtin dimension does not match dim");
        out.space = b.space;
      } catch (const std::invalid_argument& ex) {
        fail(where + ".braiding", ex.what());
      }
    } else {
      out.space = parse_rmatrix_body(*it, n, where + ".braiding").space();
    }
  }
  return out;
}

RelationsFixture parse_relations(const json& doc, const std::string& where) {
  const int alphabet = require_int(doc, "alphabet", where);
  if (alphabet < 1) fail(where + ".alphabet", "must be positive");
  const SymbolResolver resolve = x_resolver(alphabet);
  MonomialOrder order;
  const std::vector<std::string> precedence = string_list(doc, "precedence", where);
  if (!precedence.empty()) {
    std::vector<Letter> letters;
    for (const auto& s : precedence) {
      auto l = resolve(s);
      if (!l) fail(where + ".precedence", "unknown symbol '" + s + "'");
      letters.push_back(*l);
    }
    if (static_cast<int>(letters.size()) != alphabet) fail(where + ".precedence", "must list every symbol once");
    try {
      order = MonomialOrder(letters);
    } catch (const std::invalid_argument& e) {
      fail(where + ".precedence", e.what());
    }
  }
  const std::vector<std::string> texts = string_list(doc, "relations", where);
  if (!doc.contains("relations")) fail(where, "missing field 'relations'");
  std::vector<NCPoly> rels;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      rels.push_back(parse_relation(texts[i], resolve, order));
    } catch (const ParseError& e) {
      fail(where + ".relations[" + std::to_string(i) + "]", e.what());
    }
  }
  RelationsFixture out;
  try {
    out.relations = RelationSet(alphabet, rels, order);
  } catch (const std::invalid_argument& e) {
    fail(where + ".relations", e.what());
  }
  out.name = optional_string(doc, "name", "");
  out.reference_relations = string_list(doc, "reference_relations", where);
  return out;
}

}  // namespace

BraidedSpace RMatrixFixture::space() const {
  return form == "rtt" ? BraidedSpace::unchecked_from_rtt(matrix, name) : BraidedSpace::unchecked_from_braiding(matrix, name);
}

Fixture parse_fixture(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FixtureError(origin + ": malformed JSON: " + e.what());
  }
  const json& kind = require(doc, "kind", origin);
  if (!kind.is_string()) fail(origin + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "rmatrix") return parse_rmatrix(doc, origin);
  if (k == "representation") return parse_representation(doc, origin);
  if (k == "relations") return parse_relations(doc, origin);
  fail(origin + ".kind", "unknown kind '" + k + "' (expected rmatrix, representation or relations)");
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str(), path);
}

std::string matrix_to_json(const SymMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

}  // namespace qbraid
