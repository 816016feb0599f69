#ifndef BCHKIT_IO_JSON_HPP
#define BCHKIT_IO_JSON_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bchkit/closed_form.hpp"
#include "bchkit/matrix_rep.hpp"

namespace bchkit {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ParseError.
Json load_json_file(const std::filesystem::path& path);

/// {"dim": 3, "basis_names": [...], "f": [{"a":0,"b":1,"c":2,"v":"1"}]}.
/// Throws ParseError for malformed documents and ValidationError subclasses
/// for tensors that are not Lie algebras.
StructureConstants algebra_from_json(const Json& doc);
Json to_json(const StructureConstants& alg);

/// {"coords": ["1", "-2/3", "0"]}; a bare array is accepted too.
RationalVector element_from_json(const Json& doc, int dim);
Json element_to_json(const RationalVector& x);

/// {"dim_rep": 3, "basis_images": [[[row], ...], ...]}.
MatrixRep rep_from_json(const Json& doc, const StructureConstants& alg);
Json to_json(const MatrixRep& rep);

Json to_json(const Subspace& s);
Json to_json(const CaseClassification& cls);
Json to_json(const BchResult<double>& r);

/// Doubles printed with 17 significant digits.
Json real_vector_json(const Eigen::VectorXd& v);

/// Stable detail object for a validation failure.
Json to_json(const ValidationError& e);

} // namespace bchkit

#endif
