// Copyright 2026 The qscocycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsc/error.hpp"

namespace qsc::io {
namespace {

using nlohmann::json;
using Index = Eigen::Index;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

void check_format(const json& doc) {
  const json& fmt = field(doc, "format");
  if (!fmt.is_number_integer() || fmt.get<int>() != kFormatVersion) {
    throw ParseError("field \"format\": unsupported version (expected 1)");
  }
}

std::size_t get_count(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + name + "\": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

double get_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ParseError("field \"" + name + "\": expected a number");
  return v.get<double>();
}

Complex get_complex(const json& v, const std::string& name) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError("field \"" + name + "\": complex entries must be [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const CVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

CVector parse_vector(const json& v, const std::string& name) {
  if (!v.is_array()) throw ParseError("field \"" + name + "\": expected an array of [re, im]");
  CVector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = get_complex(v[i], name);
  return out;
}

CMatrix parse_matrix(const json& doc, const char* name, std::size_t rows, std::size_t cols) {
  const json& m = field(doc, name);
  if (!m.is_array()) throw ParseError(std::string("field \"") + name + "\": expected an array of rows");
  if (m.size() != rows) {
    throw DimensionError(std::string("block ") + name + ": has " + std::to_string(m.size()) +
                         " rows, expected " + std::to_string(rows));
  }
  CMatrix out(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!m[i].is_array()) throw ParseError(std::string("field \"") + name + "\": rows must be arrays");
    if (m[i].size() != cols) {
      throw DimensionError(std::string("block ") + name + ": row " + std::to_string(i) + " has " +
                           std::to_string(m[i].size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out(static_cast<Index>(i), static_cast<Index>(j)) = get_complex(m[i][j], name);
    }
  }
  return out;
}

std::vector<double> parse_reals(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_array()) throw ParseError(std::string("field \"") + name + "\": expected an array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(get_number(x, name));
  return out;
}

Model whole_space(BlockGenerator f) {
  Model out{std::move(f), {}};
  for (std::size_t i = 0; i < out.generator.dim_h(); ++i) out.interior.push_back(i);
  return out;
}

}  // namespace

std::string generator_to_json(const BlockGenerator& f) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["dim_h"] = f.dim_h();
  doc["dim_k"] = f.dim_k();
  doc["K"] = matrix_json(f.K());
  doc["L"] = matrix_json(f.L());
  doc["M"] = matrix_json(f.M());
  doc["C"] = matrix_json(f.C());
  return doc.dump(1) + "\n";
}

BlockGenerator generator_from_json(std::string_view text) {
  const json doc = parse(text);
  check_format(doc);
  const std::size_t h = get_count(doc, "dim_h");
  const std::size_t k = get_count(doc, "dim_k");
  // parsed in block order so the first missing block is the one reported
  CMatrix kk = parse_matrix(doc, "K", h, h);
  CMatrix l = parse_matrix(doc, "L", h * k, h);
  CMatrix m = parse_matrix(doc, "M", h, h * k);
  CMatrix c = parse_matrix(doc, "C", h * k, h * k);
  return BlockGenerator::assemble(std::move(kk), std::move(l), std::move(m), std::move(c), h, k);
}

std::string step_function_to_json(const StepFunction& f) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["breakpoints"] = f.breakpoints();
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(vector_json(v));
  doc["values"] = std::move(values);
  doc["support_end"] = f.support_end();
  return doc.dump(1) + "\n";
}

StepFunction step_function_from_json(std::string_view text) {
  const json doc = parse(text);
  check_format(doc);
  std::vector<double> points = parse_reals(doc, "breakpoints");
  const json& values = field(doc, "values");
  if (!values.is_array()) throw ParseError("field \"values\": expected an array of k-vectors");
  std::vector<CVector> vals;
  for (const auto& v : values) vals.push_back(parse_vector(v, "values"));
  const double end = get_number(field(doc, "support_end"), "support_end");
  return StepFunction(std::move(points), std::move(vals), end);
}

Model model_from_json(std::string_view text) {
  const json doc = parse(text);
  check_format(doc);
  const json& kind_field = field(doc, "model");
  if (!kind_field.is_string()) throw ParseError("field \"model\": expected a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind == "zero") {
    const std::size_t h = get_count(doc, "dim_h");
    return whole_space(BlockGenerator::zero(h, get_count(doc, "dim_k")));
  }
  if (kind == "hp") {
    const std::size_t h = get_count(doc, "dim_h");
    const std::size_t k = get_count(doc, "dim_k");
    const CMatrix ham = parse_matrix(doc, "H", h, h);
    const CMatrix l = parse_matrix(doc, "L", h * k, h);
    const CMatrix c = parse_matrix(doc, "C", h * k, h * k);
    return whole_space(from_hlc(ham, l, c));
  }
  if (kind == "oscillator") {
    OscillatorSpec spec;
    spec.dim = get_count(doc, "dim");
    const json& lambda = field(doc, "lambda");
    if (!lambda.is_array()) throw ParseError("field \"lambda\": expected an array of [re, im]");
    for (const auto& z : lambda) spec.lambda.push_back(get_complex(z, "lambda"));
    spec.mu = parse_reals(doc, "mu");
    return inverse_oscillator(spec);
  }
  if (kind == "birth_death") {
    const std::size_t dim = get_count(doc, "dim");
    const std::vector<double> birth = parse_reals(doc, "birth");
    return birth_death(dim, birth, parse_reals(doc, "death"));
  }
  if (kind == "random") {
    const json& mode = field(doc, "mode");
    if (!mode.is_string()) throw ParseError("field \"mode\": expected a string");
    RandomMode m;
    if (mode == "unitary_C") {
      m = RandomMode::kUnitaryC;
    } else if (mode == "strict_C") {
      m = RandomMode::kStrictC;
    } else {
      throw ParseError("field \"mode\": expected \"unitary_C\" or \"strict_C\"");
    }
    const std::size_t h = get_count(doc, "dim_h");
    const std::size_t k = get_count(doc, "dim_k");
    return whole_space(random_contractive(h, k, get_count(doc, "seed"), m));
  }
  throw ParseError("field \"model\": unknown model \"" + kind + "\"");
}

CVector vector_from_json(std::string_view text) { return parse_vector(parse(text), "vector"); }

std::string coordinates_to_json(const CoordinateMatrix& coords) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["dim_k"] = coords.dim_k();
  doc["dim_h"] = coords(0, 0).rows();
  json entries = json::array();
  for (std::size_t a = 0; a <= coords.dim_k(); ++a) {
    for (std::size_t b = 0; b <= coords.dim_k(); ++b) {
      entries.push_back(json::array({a, b, matrix_json(coords(a, b))}));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write \"" + path + "\"");
  out << contents;
  if (!out) throw ParseError("write to \"" + path + "\" failed");
}

}  // namespace qsc::io
