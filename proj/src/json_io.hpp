#ifndef PRELIE_JSON_IO_HPP
#define PRELIE_JSON_IO_HPP

#include <json.hpp>

#include "prelie/constructions.hpp"
#include "prelie/ideals.hpp"
#include "prelie/trees.hpp"

namespace prelie::json_io {

using json = nlohmann::json;

json toJson(const FieldSpec& f);
FieldSpec fieldFromJson(const json& j);

json toJson(const Scalar& s);
/// Accepts scalar strings and JSON integers.
Scalar scalarFromJson(const FieldSpec& f, const json& j);

json toJson(const Vector& v);
Vector vectorFromJson(const FieldSpec& f, const json& j, std::size_t expected);

/// Rows of scalar strings.
json toJson(const Matrix& m);
Matrix matrixFromJson(const FieldSpec& f, const json& j, std::size_t rows, std::size_t cols);

json toJson(const Algebra& a);
/// The "field" key may be omitted, in which case fallback applies.
Algebra algebraFromJson(const json& j, const FieldSpec& fallback);

/// {basis name: scalar} with zero coordinates omitted.
json elementToJson(const Algebra& a, const Vector& v);
Vector elementFromJson(const Algebra& a, const json& j);

/// {"ambientDim", "basis", "dim", "elements"}
json subspaceToJson(const Algebra& a, const Subspace& s);
/// Span of the "generators" of an ideal document. A mismatching "algebra"
/// name throws AlgebraMismatch.
Subspace spanFromJson(const Algebra& a, const json& j);

/// Witness indices are translated to names by the supplied callback.
json verdictToJson(const Verdict& v, const std::vector<std::string>& names);
json actionVerdictToJson(const ActionVerdict& v, const Algebra& actor, const Algebra& acted);

LinearMap mapFromJson(const json& j, const AlgebraPtr& domain, const AlgebraPtr& codomain);
json toJson(const LinearMap& f);

ActionPair actionFromJson(const json& j, const AlgebraPtr& actor, const AlgebraPtr& acted);
json toJson(const ActionPair& p);

ModuleStructure moduleFromJson(const json& j, const AlgebraPtr& a);

json toJson(const TreeSum& t);
/// A TreeSum document, or a bare tree string (coefficient 1).
TreeSum treeSumFromJson(const json& j, const FieldSpec& fallback);

json toJson(const SeriesReport& r);
json toJson(const ClassificationReport& r);

} // namespace prelie::json_io

#endif
