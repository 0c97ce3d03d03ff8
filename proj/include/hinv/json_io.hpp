#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hinv/classify.hpp"
#include "hinv/corpus.hpp"
#include "hinv/invariants.hpp"
#include "hinv/pbw.hpp"

namespace hinv {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Input that does not match a schema. `where` is a JSON path ("$.brackets.0,1")
/// or "line L, column C" for syntax errors.
class SchemaError : public Error {
 public:
  SchemaError(std::string where, const std::string& message)
      : Error(where + ": " + message), where_(std::move(where)), message_(message) {}
  const std::string& where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  std::string where_;
  std::string message_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

Json parse_json_text(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

/// Accepts integers and "p", "-p", "p/q" strings.
Rational rational_from_json(const Json& j, const std::string& path);
/// Always a string.
Json rational_to_json(const Rational& q);

/// {"dim", "basis"?, "brackets": {"i,j": {"k": coeff}}, "unipotent_ideal"?}
LieAlgebra lie_from_json(const Json& j, const std::string& path = "$");
Json lie_to_json(const LieAlgebra& g);

/// {"terms": {"i,j": coeff}, "text"?}; i == j and out-of-range indices are rejected.
/// "text" is ignored on input.
WedgeElement wedge_from_json(const Json& j, std::size_t dim, const std::string& path = "$");
Json wedge_to_json(const WedgeElement& r);
/// "i,j" shorthand for x_i ^ x_j, or an inline wedge JSON document.
WedgeElement parse_wedge_argument(const std::string& text, std::size_t dim);

/// {"free_rank": n, "invariant_factors": [d, ...]}; orders are canonicalized.
FgAbelianGroup lattice_from_json(const Json& j, const std::string& path = "$");
Json lattice_to_json(const FgAbelianGroup& a);

/// {"lie": {...}, "z_r_lattice": {...}, "connected": bool}
GroupInput group_from_json(const Json& j, const std::string& path = "$");
Json group_to_json(const GroupInput& g);

/// Lie algebra from either a Lie document or a group document.
LieAlgebra load_lie(const std::filesystem::path& path);
GroupInput load_group(const std::filesystem::path& path);

/// Human-readable forms using the algebra's basis names.
std::string format_wedge(const WedgeElement& r, const LieAlgebra& g);
std::string format_monomial(const pbw::Monomial& m, const LieAlgebra& g);
std::string format_tensor(const pbw::Tensor& t);
std::string format_tensor3(const Tensor3& t, const LieAlgebra& g);

/// [{"factors": ["c", "c^2"], "coeff": "1"}, ...]
Json tensor_to_json(const pbw::Tensor& t);
Json tensor3_to_json(const Tensor3& t);
Json matrix_to_json(const Matrix& m);
Json vectors_to_json(const std::vector<Vector>& vs);

Json report_to_json(const ClassificationReport& r, const LieAlgebra& g);
/// Per-file corpus entry; "seconds" only when `timings` is set, keeping reports reproducible.
Json check_report_to_json(const AlgebraCheckReport& r, bool timings = false);

}  // namespace hinv
