#include "sylvan/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sylvan {

Json matrix_to_json(const CMatrix& a) {
  Json entries = Json::array();
  for (Index r = 0; r < a.nrows(); ++r)
    for (Index c = 0; c < a.ncols(); ++c) {
      const Complex v = a(r, c);
      entries.push_back(Json::array({v.real(), v.imag()}));
    }
  return Json{{"nrows", a.nrows()},
              {"ncols", a.ncols()},
              {"row_offset", a.row_offset()},
              {"col_offset", a.col_offset()},
              {"entries", entries}};
}

CMatrix matrix_from_json(const Json& j) {
  try {
    if (!j.is_object()) raise(ErrorCode::ParseError, "matrix JSON must be an object");
    const Index nrows = j.at("nrows").get<Index>();
    const Index ncols = j.at("ncols").get<Index>();
    const Index row_offset = j.value("row_offset", Index{0});
    const Index col_offset = j.value("col_offset", Index{0});
    const Json& entries = j.at("entries");
    if (!entries.is_array()) raise(ErrorCode::ParseError, "entries must be an array");
    if (nrows < 1 || ncols < 1) raise(ErrorCode::ParseError, "nrows and ncols must be >= 1");
    if (static_cast<Index>(entries.size()) != nrows * ncols)
      raise(ErrorCode::ParseError, "entries length does not match nrows*ncols");
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (const Json& e : entries) {
      if (!e.is_array() || e.size() != 2)
        raise(ErrorCode::ParseError, "each entry must be a [re, im] pair");
      values.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return CMatrix::from_entries(nrows, ncols, values, row_offset, col_offset);
  } catch (const Json::exception& e) {
    raise(ErrorCode::ParseError, std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string algebra_kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::GrochenigSchur: return "gs";
    case AlgebraKind::BaskakovGohbergSjostrand: return "bgs";
    case AlgebraKind::Beurling: return "beurling";
    case AlgebraKind::OperatorL2: return "op";
  }
  return "op";
}

AlgebraKind algebra_kind_from_name(const std::string& name) {
  if (name == "gs") return AlgebraKind::GrochenigSchur;
  if (name == "bgs") return AlgebraKind::BaskakovGohbergSjostrand;
  if (name == "beurling") return AlgebraKind::Beurling;
  if (name == "op") return AlgebraKind::OperatorL2;
  raise(ErrorCode::ParseError, "unknown algebra kind '" + name + "' (expected gs|bgs|beurling|op)");
}

Json spec_to_json(const AlgebraSpec& spec) {
  Json j{{"kind", algebra_kind_name(spec.kind)}, {"alpha", spec.alpha}};
  if (std::isinf(spec.p))
    j["p"] = "inf";
  else
    j["p"] = spec.p;
  return j;
}

AlgebraSpec spec_from_json(const Json& j) {
  try {
    const AlgebraKind kind = algebra_kind_from_name(j.at("kind").get<std::string>());
    double p = kInfinity;
    if (j.contains("p")) {
      if (j["p"].is_string()) {
        if (j["p"].get<std::string>() != "inf")
          raise(ErrorCode::ParseError, "p must be a number or \"inf\"");
      } else {
        p = j["p"].get<double>();
      }
    }
    const double alpha = j.value("alpha", 0.0);
    return AlgebraSpec::make(kind, p, alpha);
  } catch (const Json::exception& e) {
    raise(ErrorCode::ParseError, std::string("malformed algebra spec JSON: ") + e.what());
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoError, "cannot open for reading: " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const Json::exception& e) {
    raise(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::IoError, "cannot open for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) raise(ErrorCode::IoError, "write failed: " + path);
}

CMatrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

void save_matrix(const CMatrix& a, const std::string& path) { save_json(matrix_to_json(a), path); }

}  // namespace sylvan
