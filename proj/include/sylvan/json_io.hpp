#pragma once

#include <string>

#include <json.hpp>

#include "sylvan/algebra_norms.hpp"
#include "sylvan/cmatrix.hpp"

namespace sylvan {

using Json = nlohmann::json;

/// {"nrows":..,"ncols":..,"row_offset":..,"col_offset":..,"entries":[[re,im],...]}
/// with row-major entries.
Json matrix_to_json(const CMatrix& a);
CMatrix matrix_from_json(const Json& j);

/// {"kind":"gs|bgs|beurling|op","p":number|"inf","alpha":number}
Json spec_to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const Json& j);

std::string algebra_kind_name(AlgebraKind kind);
AlgebraKind algebra_kind_from_name(const std::string& name);

CMatrix load_matrix(const std::string& path);
void save_matrix(const CMatrix& a, const std::string& path);

Json load_json(const std::string& path);
void save_json(const Json& j, const std::string& path);

}  // namespace sylvan
