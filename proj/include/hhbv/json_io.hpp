#pragma once

#include "hhbv/bv_table.hpp"
#include "hhbv/bv_verify.hpp"
#include "hhbv/graded_algebra.hpp"
#include "hhbv/hochschild.hpp"
#include "hhbv/iso.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

namespace hhbv {

using Json = nlohmann::ordered_json;

// All coefficients, orders and functional values are decimal strings so that
// integers of any size survive a round trip. Indices and degrees are JSON
// numbers. Any shape error raises SchemaError.

/// {ring, basis:[{name,degree}], unit, products:[[i,j,[coeffs]]], dualizing:[coeffs]}.
/// Omitted products are zero; graded commutativity is read off the table.
Json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const Json& j);

/// {ring, window:{lo,hi}|null, unit, monomials:[{name,degree,order}],
///  products:[[i,j,[[k,coeff],...]]], delta:[[i,[[k,coeff],...]]]}.
/// An absent product or Δ entry is truncated; a known zero is an empty list.
Json table_to_json(const BVTable& t);
BVTable table_from_json(const Json& j);

Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

Json report_to_json(const BVTable& t, const AxiomReport& r);
Json reduction_to_json(const ReductionReport& r);
/// Witness or refutations with monomial names of both tables.
Json decision_to_json(const BVTable& source, const BVTable& target, const IsoDecision& d, const std::string& mode);
/// Groups, Δ matrices and cokernels of Δ on the dual complex, optionally
/// limited to the dual degrees in an inclusive range.
Json dual_to_json(const DualHochschild& h, std::optional<std::pair<int, int>> degrees = std::nullopt);

/// Parses a file; I/O failures and malformed JSON raise SchemaError.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace hhbv
