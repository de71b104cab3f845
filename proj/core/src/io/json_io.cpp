#include "hallcx/io/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace hallcx {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Matrix matrix_of(const PrimeField& F, const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError(where + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) throw ParseError(where + ": entries must be integers");
      m(r, c) = F.reduce(j[r][c].get<std::int64_t>());
    }
  }
  return m;
}

json json_of(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_unsigned())
    throw ParseError("quiver needs a non-negative integer \"vertices\"");
  const auto n = j["vertices"].get<std::size_t>();
  if (n == 0) throw ParseError("quiver needs at least one vertex");
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("\"arrows\" must be a list");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() || !a[1].is_number_unsigned())
        throw ParseError("each arrow is a pair [s, t] of vertex labels");
      const auto s = a[0].get<std::size_t>(), t = a[1].get<std::size_t>();
      if (s < 1 || s > n || t < 1 || t > n) throw ParseError("arrow endpoint out of range 1.." + std::to_string(n));
      arrows.push_back({s - 1, t - 1});
    }
  }
  try {
    return Quiver::acyclic(n, std::move(arrows));
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  }
}

Quiver load_quiver(const std::string& path) { return parse_quiver(read_file(path)); }

std::string quiver_to_json(const Quiver& Q) {
  json arrows = json::array();
  for (const auto& a : Q.arrows()) arrows.push_back({a.source + 1, a.target + 1});
  return json{{"vertices", Q.vertex_count()}, {"arrows", arrows}}.dump();
}

Cx parse_complex(CxContext& ctx, const std::string& text) {
  const json j = parse_json(text);
  const auto& A = ctx.base();
  const auto& F = A.field();
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError("complex needs a \"kind\"");
  const std::string kind = j["kind"];
  if (!j.contains("components") || !j["components"].is_array()) throw ParseError("complex needs \"components\"");
  const std::size_t len = j["components"].size();
  const std::size_t m = j.value("m", std::size_t{0});
  CxShape s;
  if (kind == "cyclic") {
    if (m == 0 || len != m) throw ParseError("cyclic complex needs m >= 1 components");
    s = cyclic_shape(m);
  } else if (kind == "window") {
    if (m == 0 || len != m) throw ParseError("window complex needs m >= 1 components");
    s = window_shape(m);
  } else if (kind == "bounded") {
    s = bounded_shape(j.value("lo", std::int64_t{0}), len);
  } else {
    throw ParseError("unknown complex kind " + kind);
  }
  Cx X = zero_cx(ctx, s);
  const auto& arrows = A.quiver().arrows();
  for (std::size_t k = 0; k < len; ++k) {
    const json& c = j["components"][k];
    const std::string where = "component " + std::to_string(k);
    if (!c.contains("dims") || !c["dims"].is_array() || c["dims"].size() != A.n())
      throw ParseError(where + ": dims must have one entry per vertex");
    Rep M;
    M.dims = c["dims"].get<DimVec>();
    const json maps = c.value("maps", json::array());
    if (maps.size() != arrows.size()) throw ParseError(where + ": one matrix per arrow expected");
    for (std::size_t a = 0; a < arrows.size(); ++a)
      M.maps.push_back(
          matrix_of(F, maps[a], M.dims[arrows[a].target], M.dims[arrows[a].source], where + " arrow " + std::to_string(a)));
    X.comps[k] = std::move(M);
  }
  const json diffs = j.value("differentials", json::array());
  if (diffs.size() != s.diff_count())
    throw ParseError("expected " + std::to_string(s.diff_count()) + " differentials");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const Rep& from = X.comps[k];
    const Rep& to = X.comps[(k + 1) % len];
    if (!diffs[k].is_array() || diffs[k].size() != A.n())
      throw ParseError("differential " + std::to_string(k) + ": one matrix per vertex expected");
    RepMap d;
    for (std::size_t v = 0; v < A.n(); ++v)
      d.at.push_back(matrix_of(F, diffs[k][v], to.dims[v], from.dims[v],
                               "differential " + std::to_string(k) + " vertex " + std::to_string(v)));
    X.diffs[k] = std::move(d);
  }
  try {
    validate(ctx, X);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  }
  return X;
}

Cx load_complex(CxContext& ctx, const std::string& path) { return parse_complex(ctx, read_file(path)); }

std::string complex_to_json(const Cx& X) {
  json comps = json::array();
  for (const auto& M : X.comps) {
    json maps = json::array();
    for (const auto& m : M.maps) maps.push_back(json_of(m));
    comps.push_back({{"dims", M.dims}, {"maps", maps}});
  }
  json diffs = json::array();
  for (const auto& d : X.diffs) {
    json per = json::array();
    for (const auto& m : d.at) per.push_back(json_of(m));
    diffs.push_back(std::move(per));
  }
  json out{{"kind", to_string(X.shape.kind)}, {"components", comps}, {"differentials", diffs}};
  if (X.shape.kind == CxKind::bounded)
    out["lo"] = X.shape.lo;
  else
    out["m"] = X.shape.m;
  return out.dump();
}

namespace {

const std::string kClass = R"(\((\d+(?:,\d+)*)\)#(\d+))";

RepClassId class_from(const std::string& dims, const std::string& index) {
  RepClassId id;
  std::stringstream ss(dims);
  std::string part;
  while (std::getline(ss, part, ',')) id.dims.push_back(std::stoul(part));
  id.index = std::stoul(index);
  return id;
}

}  // namespace

RepClassId parse_class_id(const std::string& text) {
  static const std::regex re("^" + kClass + "$");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("not a class id: " + text);
  return class_from(m[1], m[2]);
}

CxKey parse_cx_key(const std::string& text) {
  static const std::regex head(R"(^(cyclic|window|bounded)(?:\((\d+)\))?:(.*)$)");
  static const std::regex label("^([CKSTJ])" + kClass + R"((?:\[(-?\d+)\])?$)");
  std::smatch m;
  if (!std::regex_match(text, m, head)) throw ParseError("not a complex key: " + text);
  CxKey k;
  const std::string kind = m[1];
  k.kind = kind == "cyclic" ? CxKind::cyclic : kind == "window" ? CxKind::window : CxKind::bounded;
  if (k.kind != CxKind::bounded) {
    if (!m[2].matched) throw ParseError("cyclic and window keys need (m): " + text);
    k.m = std::stoul(m[2]);
  }
  const std::string body = m[3];
  if (body == "0") return k;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::smatch lm;
    if (!std::regex_match(part, lm, label)) throw ParseError("not a label: " + part);
    const char c = std::string(lm[1])[0];
    const LabelKind lk = c == 'C'   ? LabelKind::C
                         : c == 'K' ? LabelKind::K
                         : c == 'S' ? LabelKind::S
                         : c == 'T' ? LabelKind::T
                                    : LabelKind::J;
    const std::int64_t r = lm[4].matched ? std::stoll(lm[4]) : 0;
    if ((lk == LabelKind::S) == lm[4].matched) throw ParseError("S labels carry no shift, others need one: " + part);
    Label l{lk, r, class_from(lm[2], lm[3])};
    if (!label_in_range(k, l)) throw ParseError("label " + part + " does not belong to " + to_string(k.kind));
    k.labels.push_back(std::move(l));
  }
  std::sort(k.labels.begin(), k.labels.end());
  return k;
}

}  // namespace hallcx
