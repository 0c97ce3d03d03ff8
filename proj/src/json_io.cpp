#include "hinv/json_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hinv {

namespace {

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError(path + "." + key, "unknown field");
  }
}

const Json& require_field(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_text(std::string_view s, const std::string& path) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw SchemaError(path, "expected a basis index");
  return v;
}

std::size_t index_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw SchemaError(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::pair<std::size_t, std::size_t> pair_key(const std::string& key, std::size_t dim, const std::string& path) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw SchemaError(path, "expected a key of the form \"i,j\"");
  std::size_t i = index_from_text(trim(std::string_view(key).substr(0, comma)), path);
  std::size_t j = index_from_text(trim(std::string_view(key).substr(comma + 1)), path);
  if (i >= dim || j >= dim)
    throw SchemaError(path, "index out of range for dimension " + std::to_string(dim));
  return {i, j};
}

std::string pair_text(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

std::string with_coeff(const Rational& c, const std::string& body, bool first) {
  std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  Rational a = abs(c);
  if (body.empty()) return sign + to_string(a);
  return sign + (a == 1 ? "" : to_string(a) + " ") + body;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.where(), e.message());
  }
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& q) { return to_string(q); }

LieAlgebra lie_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"name", "dim", "basis", "brackets", "unipotent_ideal"});
  const std::size_t dim = index_from_json(require_field(j, path, "dim"), path + ".dim");

  std::vector<std::string> names;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array()) throw SchemaError(path + ".basis", "expected an array of names");
    if (it->size() != dim) throw SchemaError(path + ".basis", "length differs from dim");
    std::set<std::string> seen;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const Json& name = (*it)[k];
      if (!name.is_string()) throw SchemaError(path + ".basis." + std::to_string(k), "expected a string");
      if (!seen.insert(name.get<std::string>()).second)
        throw SchemaError(path + ".basis." + std::to_string(k), "duplicate basis name");
      names.push_back(name.get<std::string>());
    }
  }

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, SparseVector>> brackets;
  if (auto it = j.find("brackets"); it != j.end()) {
    const std::string bpath = path + ".brackets";
    if (!it->is_object()) throw SchemaError(bpath, "expected an object");
    for (const auto& [key, value] : it->items()) {
      const std::string kpath = bpath + "." + key;
      auto ij = pair_key(key, dim, kpath);
      if (!value.is_object()) throw SchemaError(kpath, "expected an object of coefficients");
      SparseVector v;
      for (const auto& [k, c] : value.items()) {
        const std::string cpath = kpath + "." + k;
        std::size_t idx = index_from_text(k, cpath);
        if (idx >= dim) throw SchemaError(cpath, "index out of range for dimension " + std::to_string(dim));
        Rational q = rational_from_json(c, cpath);
        if (q != 0) v.push_back({idx, q});
      }
      if (ij.first == ij.second && !v.empty()) throw SchemaError(kpath, "[x_i, x_i] must be zero");
      brackets.emplace_back(ij, std::move(v));
    }
  }
  LieAlgebra g = LieAlgebra::from_brackets(dim, names, brackets);

  if (auto it = j.find("unipotent_ideal"); it != j.end()) {
    const std::string upath = path + ".unipotent_ideal";
    if (!it->is_array()) throw SchemaError(upath, "expected an array of basis indices");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < it->size(); ++k) {
      std::size_t v = index_from_json((*it)[k], upath + "." + std::to_string(k));
      if (v >= dim) throw SchemaError(upath + "." + std::to_string(k), "index out of range");
      idx.push_back(v);
    }
    g = g.with_unipotent_ideal(idx);
  }
  return g;
}

Json lie_to_json(const LieAlgebra& g) {
  Json out;
  out["dim"] = g.dim();
  out["basis"] = g.names();
  Json brackets = Json::object();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const SparseVector& v = g.structure(i, j);
      if (v.empty()) continue;
      Json coeffs = Json::object();
      for (const auto& t : v) coeffs[std::to_string(t.index)] = rational_to_json(t.coeff);
      brackets[pair_text(i, j)] = coeffs;
    }
  out["brackets"] = brackets;
  if (g.unipotent_indices()) out["unipotent_ideal"] = *g.unipotent_indices();
  return out;
}

WedgeElement wedge_from_json(const Json& j, std::size_t dim, const std::string& path) {
  // "text" is the human-readable form written next to every reported wedge
  require_object(j, path, {"terms", "text"});
  if (j.contains("text") && !j.at("text").is_string()) throw SchemaError(path + ".text", "expected a string");
  const Json& terms = require_field(j, path, "terms");
  if (!terms.is_object()) throw SchemaError(path + ".terms", "expected an object");
  WedgeElement r(dim);
  for (const auto& [key, value] : terms.items()) {
    const std::string kpath = path + ".terms." + key;
    auto [a, b] = pair_key(key, dim, kpath);
    if (a == b) throw SchemaError(kpath, "x_i ^ x_i is zero; use distinct indices");
    r += WedgeElement::single(dim, a, b) * rational_from_json(value, kpath);
  }
  return r;
}

Json wedge_to_json(const WedgeElement& r) {
  Json terms = Json::object();
  for (const auto& [ij, c] : r.pairs()) terms[pair_text(ij.first, ij.second)] = rational_to_json(c);
  Json out;
  out["terms"] = terms;
  return out;
}

WedgeElement parse_wedge_argument(const std::string& text, std::size_t dim) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return wedge_from_json(parse_json_text(t), dim, "$");
  auto [i, j] = pair_key(t, dim, "wedge argument \"" + t + "\"");
  if (i == j) throw SchemaError("wedge argument \"" + t + "\"", "x_i ^ x_i is zero; use distinct indices");
  return WedgeElement::single(dim, i, j);
}

FgAbelianGroup lattice_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"free_rank", "invariant_factors"});
  std::size_t free = index_from_json(require_field(j, path, "free_rank"), path + ".free_rank");
  std::vector<Integer> orders(free, Integer(0));
  if (auto it = j.find("invariant_factors"); it != j.end()) {
    if (!it->is_array()) throw SchemaError(path + ".invariant_factors", "expected an array of integers");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string p = path + ".invariant_factors." + std::to_string(k);
      std::size_t d = index_from_json((*it)[k], p);
      if (d < 1) throw SchemaError(p, "cyclic orders must be positive");
      orders.emplace_back(static_cast<unsigned long>(d));
    }
  }
  return FgAbelianGroup::from_orders(orders);
}

Json lattice_to_json(const FgAbelianGroup& a) {
  Json out;
  out["free_rank"] = a.free_rank;
  Json factors = Json::array();
  for (const auto& d : a.invariant_factors) factors.push_back(d.get_ui());
  out["invariant_factors"] = factors;
  return out;
}

GroupInput group_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"name", "lie", "z_r_lattice", "connected"});
  GroupInput g{lie_from_json(require_field(j, path, "lie"), path + ".lie"),
               lattice_from_json(require_field(j, path, "z_r_lattice"), path + ".z_r_lattice"), true};
  const Json& connected = require_field(j, path, "connected");
  if (!connected.is_boolean()) throw SchemaError(path + ".connected", "expected true or false");
  g.connected = connected.get<bool>();
  return g;
}

Json group_to_json(const GroupInput& g) {
  Json out;
  out["lie"] = lie_to_json(g.lie);
  out["z_r_lattice"] = lattice_to_json(g.z_r_lattice);
  out["connected"] = g.connected;
  return out;
}

LieAlgebra load_lie(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  try {
    if (j.is_object() && j.contains("lie")) return group_from_json(j).lie;
    return lie_from_json(j);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.where(), e.message());
  }
}

GroupInput load_group(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  try {
    return group_from_json(j);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.where(), e.message());
  }
}

std::string format_wedge(const WedgeElement& r, const LieAlgebra& g) {
  std::string out;
  for (const auto& [ij, c] : r.pairs()) out += with_coeff(c, g.name(ij.first) + "^" + g.name(ij.second), out.empty());
  return out.empty() ? "0" : out;
}

std::string format_monomial(const pbw::Monomial& m, const LieAlgebra& g) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += g.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string format_tensor(const pbw::Tensor& t) {
  const LieAlgebra& g = t.engine()->algebra();
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    std::string body;
    bool all_one = true;
    for (std::size_t f = 0; f < t.arity(); ++f) {
      std::string m = format_monomial(t.factor(k, f), g);
      all_one = all_one && m.empty();
      body += (f ? " (x) " : "") + (m.empty() ? std::string("1") : m);
    }
    out += with_coeff(c, all_one ? std::string() : body, out.empty());
  }
  return out.empty() ? "0" : out;
}

std::string format_tensor3(const Tensor3& t, const LieAlgebra& g) {
  std::string out;
  for (const auto& [idx, c] : t)
    out += with_coeff(c, g.name(idx[0]) + " (x) " + g.name(idx[1]) + " (x) " + g.name(idx[2]), out.empty());
  return out.empty() ? "0" : out;
}

Json tensor_to_json(const pbw::Tensor& t) {
  const LieAlgebra& g = t.engine()->algebra();
  Json out = Json::array();
  for (const auto& [k, c] : t.terms()) {
    Json factors = Json::array();
    for (std::size_t f = 0; f < t.arity(); ++f) {
      std::string m = format_monomial(t.factor(k, f), g);
      factors.push_back(m.empty() ? "1" : m);
    }
    out.push_back({{"factors", factors}, {"coeff", rational_to_json(c)}});
  }
  return out;
}

Json tensor3_to_json(const Tensor3& t) {
  Json out = Json::array();
  for (const auto& [idx, c] : t) out.push_back({{"index", idx}, {"coeff", rational_to_json(c)}});
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_to_json(x));
    out.push_back(row);
  }
  return out;
}

Json report_to_json(const ClassificationReport& r, const LieAlgebra& g) {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["kx_rank"] = r.kx_rank;
  Json factors = Json::array();
  for (const auto& d : r.finite_factors) factors.push_back(d.get_ui());
  out["finite_factors"] = factors;
  out["additive_dim"] = r.additive_dim;
  out["z_r_dim"] = r.z_r_dim;
  out["z_u_dim"] = r.z_u_dim;
  auto basis = [&](const std::vector<WedgeElement>& b) {
    Json arr = Json::array();
    for (const auto& w : b) {
      Json e = wedge_to_json(w);
      e["text"] = format_wedge(w, g);
      arr.push_back(e);
    }
    return arr;
  };
  out["mixed_basis"] = basis(r.mixed_basis);
  out["invariant_basis"] = basis(r.invariant_basis);
  Json summary = Json::array();
  for (const auto& e : r.bset_summary) summary.push_back({{"support_dim", e.support_dim}, {"minimal", e.minimal}});
  out["bset_summary"] = summary;
  out["trivial"] = r.is_trivial();
  out["isomorphism_type"] = r.isomorphism_type();
  return out;
}

Json check_report_to_json(const AlgebraCheckReport& r, bool timings) {
  Json checks = Json::object();
  for (const auto& t : r.checks) {
    Json tj = {{"passed", t.passed}, {"total", t.total}};
    if (!t.ok()) tj["first_failure"] = t.first_failure;
    checks[t.name] = tj;
  }
  Json f = {{"file", r.file}, {"passed", r.passed()}, {"dim", r.dim}, {"invariant_dim", r.invariant_dim}};
  if (!r.error.empty()) f["error"] = r.error;
  f["checks"] = checks;
  if (timings) f["seconds"] = r.seconds;
  return f;
}

}  // namespace hinv
