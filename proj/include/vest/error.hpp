#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace vest {

enum class ErrorCode {
  dimension_mismatch,
  empty_transformation_list,
  non_binary_entry,
  non_square,
  index_out_of_range,
  resource_bound,
  vertex_out_of_range,
  syntax_error,
  inconsistent_header,
  empty_graph,
  schema_error,
  io_error,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::empty_transformation_list: return "EmptyTransformationList";
    case ErrorCode::non_binary_entry: return "NonBinaryEntry";
    case ErrorCode::non_square: return "NonSquare";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::resource_bound: return "ResourceBound";
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::inconsistent_header: return "InconsistentHeader";
    case ErrorCode::empty_graph: return "EmptyGraph";
    case ErrorCode::schema_error: return "SchemaError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `line()` is set for parser errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& message,
                            std::optional<std::size_t> line) {
    std::string out = to_string(code);
    if (line) out += " (line " + std::to_string(*line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace vest
