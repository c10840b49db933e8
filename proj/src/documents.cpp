#include "bwcoh/documents.hpp"

#include <json.hpp>
#include <sstream>

namespace bwcoh {

using Json = nlohmann::ordered_json;

namespace {

Json load(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) throw DocumentError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

VertexId vertex_named(const Quiver& q, const Json& v) {
  auto name = as_string(v, "vertex");
  auto id = q.find_vertex(name);
  if (!id) throw DocumentError("unknown vertex '" + name + "'");
  return *id;
}

ArrowId arrow_named(const Quiver& q, const Json& v) {
  auto name = as_string(v, "arrow");
  auto id = q.find_arrow(name);
  if (!id) throw DocumentError("unknown arrow '" + name + "'");
  return *id;
}

Scalar parse_entry(const Field& field, const Json& v) {
  if (!field.is_rational()) {
    // Residues are taken verbatim so that rep_validate can report entries >= p.
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw DocumentError("scalar out of range: prime-field entries must be integers in [0, p)");
    auto value = v.get<std::uint64_t>();
    if (value >= (1ULL << 32)) throw DocumentError("scalar out of range");
    return Scalar(Residue{static_cast<std::uint32_t>(value), field.prime()});
  }
  try {
    if (v.is_number_integer()) return field.from_int(v.get<std::int64_t>());
    if (v.is_string()) return field.parse_scalar(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
  throw DocumentError("matrix entries must be integers or strings like \"-3/4\"");
}

Json entry_json(const Scalar& s) {
  if (auto r = s.as_residue()) return r->value;
  const Rational& q = *s.as_rational();
  if (boost::multiprecision::denominator(q) == 1 && boost::multiprecision::abs(q) < Rational(1LL << 53))
    return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
  return q.str();
}

Json element_json(const Quiver& q, const PathAlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [path, coeff] : e.terms()) {
    Json term;
    term["coeff"] = coeff;
    if (path.is_identity()) {
      term["identity"] = q.vertex_name(path.source());
    } else {
      Json arrows = Json::array();
      for (auto a : path.arrows()) arrows.push_back(q.arrow(a).name);
      term["path"] = std::move(arrows);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

PathAlgebraElement element_from_json(const Quiver& q, const Json& terms) {
  if (!terms.is_array()) throw DocumentError("matrix entry must be an array of terms");
  PathAlgebraElement e;
  for (const auto& term : terms) {
    const Json& coeff = member(term, "coeff");
    if (!coeff.is_number_integer()) throw DocumentError("term coefficient must be an integer");
    if (term.contains("identity")) {
      e.add_term(Path::identity(vertex_named(q, term.at("identity"))), coeff.get<std::int64_t>());
      continue;
    }
    const Json& path = member(term, "path");
    if (!path.is_array() || path.empty()) throw DocumentError("term path must be a nonempty array of arrow names");
    std::vector<ArrowId> arrows;
    for (const auto& name : path) arrows.push_back(arrow_named(q, name));
    try {
      e.add_term(Path::from_arrows(q, std::move(arrows)), coeff.get<std::int64_t>());
    } catch (const std::invalid_argument& err) {
      throw DocumentError(err.what());
    }
  }
  return e;
}

std::string join(const std::vector<std::string>& items, const char* sep, const char* empty) {
  if (items.empty()) return empty;
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

std::vector<std::string> vertex_names(const Quiver& q, const std::vector<VertexId>& ids) {
  std::vector<std::string> out;
  for (auto v : ids) out.push_back(q.vertex_name(v));
  return out;
}

std::vector<std::string> arrow_names(const Quiver& q, const std::vector<ArrowId>& ids) {
  std::vector<std::string> out;
  for (auto a : ids) out.push_back(q.arrow(a).name);
  return out;
}

Json name_array(const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& n : names) out.push_back(n);
  return out;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  const Json doc = load(text);
  const Json& vertices = member(doc, "vertices");
  const Json& arrows = member(doc, "arrows");
  if (!vertices.is_array() || !arrows.is_array()) throw DocumentError("'vertices' and 'arrows' must be arrays");
  std::vector<std::string> names;
  for (const auto& v : vertices) names.push_back(as_string(v, "vertex"));
  std::vector<ArrowSpec> specs;
  for (const auto& a : arrows)
    specs.push_back(ArrowSpec{as_string(member(a, "name"), "arrow name"), as_string(member(a, "source"), "source"),
                              as_string(member(a, "target"), "target")});
  try {
    return Quiver(std::move(names), specs);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

std::string serialize_quiver(const Quiver& q) {
  Json doc;
  doc["vertices"] = name_array(q.vertices());
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    Json arrow;
    arrow["name"] = a.name;
    arrow["source"] = q.vertex_name(a.source);
    arrow["target"] = q.vertex_name(a.target);
    arrows.push_back(std::move(arrow));
  }
  doc["arrows"] = std::move(arrows);
  return doc.dump(2) + "\n";
}

QuiverRep parse_rep(std::string_view text, const Quiver& q) {
  const Json doc = load(text);
  Field field;
  try {
    field = Field::parse(as_string(member(doc, "field"), "field"));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }

  if (doc.contains("module")) {
    if (doc.at("module") != "regular") throw DocumentError("'module' must be \"regular\"");
    try {
      return regular_rep(q, field);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
  }

  const Json& dims_doc = member(doc, "dims");
  const Json& mats_doc = member(doc, "matrices");
  if (!dims_doc.is_object() || !mats_doc.is_object()) throw DocumentError("'dims' and 'matrices' must be objects");

  std::vector<std::size_t> dims(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const std::string& name = q.vertex_name(v);
    if (!dims_doc.contains(name)) throw DocumentError("missing dimension for vertex '" + name + "'");
    const Json& d = dims_doc.at(name);
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
      throw DocumentError("dimension of '" + name + "' must be a nonnegative integer");
    dims[v] = d.get<std::size_t>();
  }
  for (const auto& item : dims_doc.items())
    if (!q.find_vertex(item.key())) throw DocumentError("dims mention unknown vertex '" + item.key() + "'");
  for (const auto& item : mats_doc.items())
    if (!q.find_arrow(item.key())) throw DocumentError("matrices mention unknown arrow '" + item.key() + "'");

  std::vector<DenseMatrix> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const std::string& name = q.arrow(a).name;
    if (!mats_doc.contains(name)) throw DocumentError("missing matrix for arrow '" + name + "'");
    const Json& rows = mats_doc.at(name);
    if (!rows.is_array()) throw DocumentError("matrix of '" + name + "' must be an array of rows");
    const std::size_t cols = rows.empty() ? dims[q.arrow(a).source] : rows.front().size();
    DenseMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != cols) throw DocumentError("ragged matrix for arrow '" + name + "'");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_entry(field, rows[i][j]);
    }
    mats.push_back(std::move(m));
  }

  QuiverRep rep(q, field, std::move(dims), std::move(mats));
  if (auto report = rep_validate(rep); !report.valid()) throw DocumentError(report.summary());
  return rep;
}

std::string serialize_rep(const QuiverRep& r) {
  const Quiver& q = r.quiver();
  Json doc;
  doc["field"] = r.field().describe();
  Json dims = Json::object();
  for (VertexId v = 0; v < q.vertex_count(); ++v) dims[q.vertex_name(v)] = r.dim(v);
  doc["dims"] = std::move(dims);
  Json mats = Json::object();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const DenseMatrix& m = r.mat(a);
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m(i, j)));
      rows.push_back(std::move(row));
    }
    mats[q.arrow(a).name] = std::move(rows);
  }
  doc["matrices"] = std::move(mats);
  return doc.dump(2) + "\n";
}

Partition parse_partition(std::string_view text, const Quiver& q) {
  const Json doc = load(text);
  Partition p;
  auto vertices = [&](const char* key) {
    std::vector<VertexId> out;
    const Json& list = member(doc, key);
    if (!list.is_array()) throw DocumentError(std::string("'") + key + "' must be an array");
    for (const auto& v : list) out.push_back(vertex_named(q, v));
    return out;
  };
  auto arrows = [&](const char* key) {
    std::vector<ArrowId> out;
    const Json& list = member(doc, key);
    if (!list.is_array()) throw DocumentError(std::string("'") + key + "' must be an array");
    for (const auto& a : list) out.push_back(arrow_named(q, a));
    return out;
  };
  p.a = vertices("a");
  p.b = vertices("b");
  p.f = arrows("f");
  p.g = arrows("g");
  p.h = arrows("h");
  return p;
}

std::string serialize_partition(const Quiver& q, const Partition& p) {
  Json doc;
  doc["a"] = name_array(vertex_names(q, p.a));
  doc["b"] = name_array(vertex_names(q, p.b));
  doc["f"] = name_array(arrow_names(q, p.f));
  doc["g"] = name_array(arrow_names(q, p.g));
  doc["h"] = name_array(arrow_names(q, p.h));
  return doc.dump(2) + "\n";
}

std::string render_partition(const Quiver& q, const Partition& p) {
  const char* none = "—";
  return "a: " + join(vertex_names(q, p.a), ",", none) + " | b: " + join(vertex_names(q, p.b), ",", none) +
         " | f: " + join(arrow_names(q, p.f), ",", none) + " | g: " + join(arrow_names(q, p.g), ",", none) +
         " | h: " + join(arrow_names(q, p.h), ",", none);
}

std::string serialize_matrix_pair(const Quiver& q, const MatrixPair& vw) {
  Json doc;
  doc["rows"] = name_array(arrow_names(q, vw.row_arrows));
  doc["v_columns"] = name_array(vertex_names(q, vw.col_vertices_v));
  doc["w_columns"] = name_array(vertex_names(q, vw.col_vertices_w));
  auto matrix = [&](const std::vector<std::vector<PathAlgebraElement>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json cells = Json::array();
      for (const auto& e : row) cells.push_back(element_json(q, e));
      rows.push_back(std::move(cells));
    }
    return rows;
  };
  doc["V"] = matrix(vw.v);
  doc["W"] = matrix(vw.w);
  return doc.dump(2) + "\n";
}

MatrixPair parse_matrix_pair(std::string_view text, const Quiver& q) {
  const Json doc = load(text);
  MatrixPair vw;
  for (const auto& a : member(doc, "rows")) vw.row_arrows.push_back(arrow_named(q, a));
  for (const auto& v : member(doc, "v_columns")) vw.col_vertices_v.push_back(vertex_named(q, v));
  for (const auto& v : member(doc, "w_columns")) vw.col_vertices_w.push_back(vertex_named(q, v));
  auto matrix = [&](const char* key, std::size_t cols) {
    std::vector<std::vector<PathAlgebraElement>> out;
    const Json& rows = member(doc, key);
    if (!rows.is_array() || rows.size() != vw.rows()) throw DocumentError(std::string(key) + ": wrong row count");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != cols) throw DocumentError(std::string(key) + ": wrong column count");
      std::vector<PathAlgebraElement> cells;
      for (const auto& cell : row) cells.push_back(element_from_json(q, cell));
      out.push_back(std::move(cells));
    }
    return out;
  };
  vw.v = matrix("V", vw.col_vertices_v.size());
  vw.w = matrix("W", vw.col_vertices_w.size());
  return vw;
}

std::string render_matrix_pair(const Quiver& q, const MatrixPair& vw) {
  std::ostringstream out;
  const std::string rows = join(arrow_names(q, vw.row_arrows), " ", "—");
  auto block = [&](const char* name, const char* column_prefix, const std::vector<std::vector<PathAlgebraElement>>& m,
                   const std::vector<VertexId>& columns) {
    out << name << " (" << vw.rows() << " x " << columns.size() << "), rows: " << rows << "\n";
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out << "  " << char(std::tolower(name[0])) << j + 1 << " [" << column_prefix << j + 1 << " = "
          << q.vertex_name(columns[j]) << "]: (";
      for (std::size_t i = 0; i < vw.rows(); ++i) out << (i ? ", " : "") << render(q, m[i][j]);
      out << ")\n";
    }
  };
  block("V", "a", vw.v, vw.col_vertices_v);
  block("W", "b", vw.w, vw.col_vertices_w);
  return out.str();
}

std::string render_h1(const QuiverRep& r, const H1Result& result) {
  std::ostringstream out;
  out << "dim H^1 = " << result.dim << "\n";
  out << "ambient dim = " << result.ambient.total_dim << ", inner derivation rank = " << result.ider_rank << "\n";
  std::vector<std::string> labels;
  for (const auto& label : result.basis_labels) labels.push_back(label_to_string(r, label));
  out << "basis: " << join(labels, ", ", "—") << "\n";
  return out.str();
}

}  // namespace bwcoh
