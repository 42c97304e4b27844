#include "ncalc/io.hpp"

#include <fstream>
#include <set>

namespace ncalc {

namespace {

Scalar scalar_from_json(const Json& j, const Field& f, const std::string& context) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>(), f);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  } catch (const math_error& e) {
    // e.g. a denominator that is not invertible mod p: bad input, not bad math
    throw input_error(context + ": " + e.what());
  }
  throw input_error(context + ": scalars must be integers or \"p/q\" strings");
}

Vec vec_from_json(const Json& j, std::size_t len, const Field& f, const std::string& context) {
  if (!j.is_array() || j.size() != len)
    throw input_error(context + ": expected an array of " + std::to_string(len) + " scalars");
  Vec v = zero_vec(len, f);
  for (std::size_t i = 0; i < len; ++i)
    v[i] = scalar_from_json(j[i], f, context + "[" + std::to_string(i) + "]");
  return v;
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& context) {
  if (!j.is_number_integer())
    throw input_error(context + ": expected a basis index");
  const long v = j.get<long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw input_error(context + ": index " + std::to_string(v) + " out of range [0, " +
                      std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

Field resolve_field(const Json& doc, std::optional<Field> field_override) {
  if (field_override) return *field_override;
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) throw input_error("field: expected \"Q\" or \"Fp:<prime>\"");
    return Field::parse(doc["field"].get<std::string>());
  }
  return Field::rationals();
}

AlgebraPtr builtin_from_json(const Json& doc, const Field& f) {
  const std::string kind = doc["builtin"].get<std::string>();
  auto int_param = [&](const char* name) {
    if (!doc.contains(name) || !doc[name].is_number_integer() || doc[name].get<long>() < 0)
      throw input_error(std::string("builtin ") + kind + ": missing or bad parameter '" + name +
                        "'");
    return static_cast<std::size_t>(doc[name].get<long>());
  };
  if (kind == "truncated_polynomial")
    return std::make_shared<Algebra>(truncated_polynomial_algebra(int_param("m"), f));
  if (kind == "matrix_algebra")
    return std::make_shared<Algebra>(matrix_algebra(int_param("k"), f));
  if (kind == "cyclic_group_algebra")
    return std::make_shared<Algebra>(cyclic_group_algebra(int_param("m"), f));
  if (kind == "quantum_plane") {
    if (!doc.contains("q")) throw input_error("builtin quantum_plane: missing parameter 'q'");
    const Scalar q = scalar_from_json(doc["q"], f, "quantum_plane.q");
    return std::make_shared<Algebra>(quantum_plane_algebra(q, int_param("N"), f));
  }
  throw input_error("unknown builtin algebra '" + kind + "'");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
}

AlgebraPtr algebra_from_json(const Json& doc, std::optional<Field> field_override) {
  if (!doc.is_object()) throw input_error("algebra document must be a JSON object");
  const Field f = resolve_field(doc, field_override);
  if (doc.contains("builtin")) return builtin_from_json(doc, f);

  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1)
    throw input_error("algebra: \"dim\" must be a positive integer");
  const std::size_t n = doc["dim"].get<std::size_t>();

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array() || doc["basis"].size() != n)
      throw input_error("basis: expected " + std::to_string(n) + " labels");
    for (const auto& l : doc["basis"]) labels.push_back(l.get<std::string>());
  }
  if (!doc.contains("unit")) throw input_error("algebra: missing \"unit\"");
  Vec unit = vec_from_json(doc["unit"], n, f, "unit");

  std::vector<Scalar> c(n * n * n, Scalar::zero(f));
  if (!doc.contains("mul") || !doc["mul"].is_array())
    throw input_error("algebra: missing \"mul\" triple list");
  std::set<std::array<std::size_t, 3>> seen;
  std::size_t idx = 0;
  for (const auto& entry : doc["mul"]) {
    const std::string ctx = "mul[" + std::to_string(idx++) + "]";
    if (!entry.is_array() || entry.size() != 4)
      throw input_error(ctx + ": expected [i, j, k, coeff]");
    const std::size_t i = index_from_json(entry[0], n, ctx + ".i");
    const std::size_t j = index_from_json(entry[1], n, ctx + ".j");
    const std::size_t k = index_from_json(entry[2], n, ctx + ".k");
    if (!seen.insert({i, j, k}).second)
      throw input_error(ctx + ": duplicate structure triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
    c[(i * n + j) * n + k] = scalar_from_json(entry[3], f, ctx + ".coeff");
  }
  return std::make_shared<Algebra>(Algebra(f, n, std::move(labels), std::move(unit), std::move(c)));
}

std::vector<Vec> generators_from_json(const Json& doc, const Algebra& a) {
  if (!doc.is_object() || !doc.contains("gens"))
    throw input_error("generator set: missing \"gens\"");
  if (doc.contains("ambient") && doc["ambient"].get<std::string>() != "ker_mu")
    throw input_error("generator set: unsupported ambient '" +
                      doc["ambient"].get<std::string>() + "' (only \"ker_mu\")");
  const std::size_t slots = a.dim() * a.dim();
  std::vector<Vec> gens;
  std::size_t idx = 0;
  for (const auto& g : doc["gens"]) {
    gens.push_back(vec_from_json(g, slots, a.field(), "gens[" + std::to_string(idx++) + "]"));
  }
  return gens;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const Field& f,
                        const std::string& context) {
  if (!j.is_array() || j.size() != rows)
    throw input_error(context + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    m.set_row(r, vec_from_json(j[r], cols, f, context + "[" + std::to_string(r) + "]"));
  return m;
}

Bimodule bimodule_from_json(const Json& doc, AlgebraPtr a) {
  if (!doc.is_object() || !doc.contains("dim")) throw input_error("bimodule: missing \"dim\"");
  const std::size_t m = doc["dim"].get<std::size_t>();
  const std::size_t n = a->dim();
  auto actions = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != n)
      throw input_error(std::string("bimodule: \"") + key + "\" must list " + std::to_string(n) +
                        " matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(matrix_from_json(doc[key][i], m, m, a->field(),
                                     std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
  };
  return Bimodule(a, m, actions("left"), actions("right"));
}

Fodc fodc_from_json(const Json& doc, std::optional<Field> field_override) {
  if (!doc.contains("algebra")) throw input_error("fodc: missing \"algebra\"");
  AlgebraPtr a = algebra_from_json(doc["algebra"], field_override);
  if (!doc.contains("bimodule")) throw input_error("fodc: missing \"bimodule\"");
  Bimodule omega = bimodule_from_json(doc["bimodule"], a);
  if (!doc.contains("d")) throw input_error("fodc: missing \"d\"");
  Matrix d = matrix_from_json(doc["d"], omega.dim(), a->dim(), a->field(), "d");
  return Fodc{std::move(omega), LinearMap(std::move(d))};
}

BraidingDocument braiding_from_json(const Json& doc, std::optional<Field> field_override) {
  if (!doc.contains("algebra")) throw input_error("braiding: missing \"algebra\"");
  AlgebraPtr a = algebra_from_json(doc["algebra"], field_override);
  if (!doc.contains("gen_dim") || !doc.contains("direction") || !doc.contains("matrix"))
    throw input_error("braiding: needs \"direction\", \"gen_dim\" and \"matrix\"");
  const std::size_t k = doc["gen_dim"].get<std::size_t>();
  const std::size_t n = a->dim();
  const std::string dir = doc["direction"].get<std::string>();
  FreeModuleBraiding b;
  b.gen_dim = k;
  if (dir == "r_v_to_v_r") {
    b.direction = FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r;
    b.map = LinearMap(matrix_from_json(doc["matrix"], k * n, n * k, a->field(), "matrix"));
  } else if (dir == "v_r_to_r_v") {
    b.direction = FreeModuleBraiding::Direction::v_tensor_r_to_r_tensor_v;
    b.map = LinearMap(matrix_from_json(doc["matrix"], n * k, k * n, a->field(), "matrix"));
  } else {
    throw input_error("braiding: direction must be \"r_v_to_v_r\" or \"v_r_to_r_v\"");
  }
  return BraidingDocument{std::move(a), std::move(b)};
}

CartanPair cartan_from_json(const Json& doc, std::optional<Field> field_override) {
  if (!doc.contains("algebra")) throw input_error("cartan: missing \"algebra\"");
  AlgebraPtr a = algebra_from_json(doc["algebra"], field_override);
  if (!doc.contains("bimodule")) throw input_error("cartan: missing \"bimodule\"");
  Bimodule x = bimodule_from_json(doc["bimodule"], a);
  Side side = Side::right;
  if (doc.contains("side")) {
    const std::string s = doc["side"].get<std::string>();
    if (s == "left") side = Side::left;
    else if (s != "right") throw input_error("cartan: side must be \"right\" or \"left\"");
  }
  if (!doc.contains("action")) throw input_error("cartan: missing \"action\"");
  const std::size_t n = a->dim();
  Matrix action = matrix_from_json(doc["action"], n * n, x.dim(), a->field(), "action");
  return CartanPair{side, std::move(x), LinearMap(std::move(action))};
}

Json algebra_to_json(const Algebra& a) {
  Json doc;
  doc["field"] = a.field().name();
  doc["dim"] = a.dim();
  doc["basis"] = a.labels();
  Json unit = Json::array();
  for (const auto& u : a.unit()) unit.push_back(u.str());
  doc["unit"] = std::move(unit);
  Json mul = Json::array();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a.c(i, j, k).is_zero()) continue;
        mul.push_back(Json::array({i, j, k, a.c(i, j, k).str()}));
      }
  doc["mul"] = std::move(mul);
  return doc;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ncalc
