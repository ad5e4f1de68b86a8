#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "vest/error.hpp"
#include "vest/eval.hpp"
#include "vest/instance.hpp"
#include "vest/linalg.hpp"
#include "vest/scalar.hpp"

namespace vest {

inline constexpr const char* kInstanceFormat = "vest-instance";
inline constexpr int kInstanceVersion = 1;

struct InstanceDocument {
  VestInstance instance;
  nlohmann::json metadata = nlohmann::json::object();
};

namespace detail {

inline nlohmann::json encode_scalar(Semiring s, const Rational& x) {
  if (s == Semiring::gf2) return x == 0 ? 0 : 1;
  return to_string(x);
}

inline std::string encode_row(Semiring s, const std::vector<Rational>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += encode_scalar(s, row[i]).dump();
  }
  return out + "]";
}

inline std::string encode_matrix(Semiring s, const Matrix& m, const std::string& indent) {
  std::string out = "[\n";
  auto dense = m.to_dense();
  for (std::size_t r = 0; r < dense.size(); ++r) {
    out += indent + "  " + encode_row(s, dense[r]);
    out += (r + 1 < dense.size()) ? ",\n" : "\n";
  }
  return out + indent + "]";
}

[[noreturn]] inline void schema(const std::string& what) { throw Error(ErrorCode::schema_error, what); }

inline Rational decode_scalar(Semiring s, const nlohmann::json& j, const std::string& where) {
  if (s == Semiring::gf2) {
    if (!j.is_number_integer() || (j.get<long long>() != 0 && j.get<long long>() != 1))
      throw Error(ErrorCode::non_binary_entry, where + ": GF(2) entries must be the integers 0 or 1");
    return Rational(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      schema(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return parse_rational(j.dump());
  schema(where + ": rational entries must be \"p/q\" strings");
}

inline std::size_t decode_size(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned()) schema(std::string("missing or invalid '") + key + "'");
  return doc[key].get<std::size_t>();
}

inline Matrix decode_matrix(Semiring s, const nlohmann::json& j, std::size_t rows, std::size_t cols,
                            const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw Error(ErrorCode::dimension_mismatch, where + ": expected " + std::to_string(rows) + " rows");
  std::vector<Matrix::Row> data(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw Error(ErrorCode::dimension_mismatch, where + " row " + std::to_string(r) + ": expected " +
                                                     std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      Rational x = decode_scalar(s, row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      if (x != 0) data[r].push_back({c, std::move(x)});
    }
  }
  return Matrix(rows, cols, std::move(data));
}

}  // namespace detail

/// Self-describing text form: one matrix row per line, rationals as "p/q"
/// strings, GF(2) entries as 0/1 integers.
inline std::string serialize(const InstanceDocument& doc) {
  const auto& inst = doc.instance;
  const Semiring s = inst.semiring();
  std::string out = "{\n";
  out += "  \"format\": \"" + std::string(kInstanceFormat) + "\",\n";
  out += "  \"version\": " + std::to_string(kInstanceVersion) + ",\n";
  out += "  \"semiring\": \"" + std::string(to_string(s)) + "\",\n";
  out += "  \"d\": " + std::to_string(inst.dimension()) + ",\n";
  out += "  \"h\": " + std::to_string(inst.selector_rows()) + ",\n";
  out += "  \"m\": " + std::to_string(inst.transformation_count()) + ",\n";
  out += "  \"v\": " + detail::encode_row(s, inst.initial().entries()) + ",\n";
  out += "  \"transformations\": [\n";
  for (std::size_t i = 0; i < inst.transformation_count(); ++i) {
    out += "    " + detail::encode_matrix(s, inst.transformation(i), "    ");
    out += (i + 1 < inst.transformation_count()) ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"selector\": " + detail::encode_matrix(s, inst.selector(), "  ");
  if (!doc.metadata.empty()) out += ",\n  \"metadata\": " + doc.metadata.dump();
  out += "\n}\n";
  return out;
}

inline InstanceDocument parse_instance_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::schema_error, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) detail::schema("document must be a JSON object");
  if (doc.value("format", std::string()) != kInstanceFormat)
    detail::schema(std::string("'format' must be \"") + kInstanceFormat + "\"");
  if (doc.contains("version") && doc["version"] != kInstanceVersion)
    detail::schema("unsupported version " + doc["version"].dump());
  if (!doc.contains("semiring") || !doc["semiring"].is_string()) detail::schema("missing 'semiring'");
  const std::string sr = doc["semiring"].get<std::string>();
  Semiring s;
  if (sr == "q") s = Semiring::rational;
  else if (sr == "gf2") s = Semiring::gf2;
  else detail::schema("unknown semiring '" + sr + "'");

  const std::size_t d = detail::decode_size(doc, "d");
  const std::size_t h = detail::decode_size(doc, "h");
  const std::size_t m = detail::decode_size(doc, "m");

  if (!doc.contains("v") || !doc["v"].is_array()) detail::schema("missing 'v'");
  if (doc["v"].size() != d)
    throw Error(ErrorCode::dimension_mismatch, "'v' has " + std::to_string(doc["v"].size()) + " entries, d = " +
                                                   std::to_string(d));
  std::vector<Rational> v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(detail::decode_scalar(s, doc["v"][i], "v[" + std::to_string(i) + "]"));

  if (!doc.contains("transformations") || !doc["transformations"].is_array()) detail::schema("missing 'transformations'");
  if (doc["transformations"].size() != m)
    throw Error(ErrorCode::dimension_mismatch, "'transformations' has " +
                                                   std::to_string(doc["transformations"].size()) + " matrices, m = " +
                                                   std::to_string(m));
  std::vector<Matrix> ts;
  for (std::size_t i = 0; i < m; ++i)
    ts.push_back(detail::decode_matrix(s, doc["transformations"][i], d, d, "transformations[" + std::to_string(i) + "]"));

  if (!doc.contains("selector")) detail::schema("missing 'selector'");
  Matrix selector = detail::decode_matrix(s, doc["selector"], h, d, "selector");

  InstanceDocument out{VestInstance(s, Vector(std::move(v)), std::move(ts), std::move(selector))};
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) detail::schema("'metadata' must be an object");
    out.metadata = doc["metadata"];
  }
  return out;
}

inline InstanceDocument read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_document(buf.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

inline nlohmann::json to_json(const MSequenceResult& result) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [k, mk] : result.values) values.push_back({{"k", k}, {"M", mk.str()}});
  return {{"instance", result.instance_id}, {"method", to_string(result.method)}, {"values", values}};
}

}  // namespace vest
