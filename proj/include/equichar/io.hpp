#pragma once

#include <string>

#include "json.hpp"

#include "equichar/burnside.hpp"
#include "equichar/cellspace.hpp"
#include "equichar/motivic.hpp"
#include "equichar/powerstruct.hpp"

namespace equichar {

using Json = nlohmann::ordered_json;

/// Malformed input document. The message starts with the JSON path of the offending value.
class InputError : public UsageError {
public:
  InputError(const std::string& path, const std::string& msg) : UsageError(path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// Reads and parses a JSON file; syntax errors report the file name and byte offset.
Json load_json_file(const std::string& file);

GroupSpec parse_group_spec(const Json& j, const std::string& path = "$");
GroupPtr parse_group(const Json& j, const std::string& path = "$");

/// {"size", "gO", "gB", "actO", "actB"}; missing groups are trivial and a missing
/// action list means every generator acts trivially. Actions are validated.
BiSet parse_biset(const Json& j, const std::string& path = "$");
/// {"cells":[{"dim","biset"}]}; a bare BiSet is read as a single 0-cell.
CellSpace parse_cellspace(const Json& j, const std::string& path = "$");

/// Integer n (n times the unit), a coefficient array, or {"coeffs":[...]}.
BurnsideElement parse_burnside(const Json& j, const BurnsidePtr& ring, const std::string& path = "$");
/// A Burnside encoding (exponent 0) or a list of {"exp":"1/2","coeffs":[...]}.
LExtElement parse_lext(const Json& j, const BurnsidePtr& ring, const std::string& path = "$");
/// Required object member; a missing key reports its path.
const Json& json_field(const Json& j, const std::string& key, const std::string& path = "$");
/// Integer or decimal string.
Int parse_int_json(const Json& j, const std::string& path = "$");
/// Number or "a/b" string.
Rational parse_rational_json(const Json& j, const std::string& path = "$");

/// {"gO", "gB", "k", "weights", "strata":[{"tuple","class","shift"}]}.
OrbifoldDatum parse_datum(const Json& j, const LExtLambda& ring, const std::string& path = "$");

Json int_json(const Int& x);
Json rational_json(const Rational& q);
Json basis_json(const BurnsideRing& ring);
/// Coefficient vector in canonical basis order.
Json coeffs_json(const BurnsideElement& x);
/// {"basis":[...], "coeffs":[...]}
Json to_json(const BurnsideElement& x);
/// [{"exp":"1/2","coeffs":[...]}]
Json to_json(const LExtElement& x);

Json to_json(const IntSeries& a);
/// {"basis":[...], "coeffs":[[...], ...]}
Json to_json(const BurnsideSeries& a);
/// {"basis":[...], "coeffs":[[{"exp","coeffs"}], ...]}
Json to_json(const LExtSeries& a);

/// Writes `text` to `file` through a temporary file and a rename.
void write_file_atomic(const std::string& file, const std::string& text);

}  // namespace equichar
