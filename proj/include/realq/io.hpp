#pragma once

// JSON matrix files.
//
//   complex:   {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}
//   realified: {"rows": 2r, "cols": 2c, "data": [[x, ...], ...],
//               "kind": "operator" | "state" | "ket"}

#include <stdexcept>
#include <string>
#include <string_view>

#include "realq/types.hpp"

namespace realq::io {

/// Malformed file content or an unusable path.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RealifiedKind { operator_, state, ket };

RealifiedKind parse_kind(std::string_view name);
std::string kind_name(RealifiedKind kind);

struct RealifiedFile {
  RealifiedKind kind = RealifiedKind::operator_;
  RealMatrix data;
};

ComplexMatrix parse_complex_matrix(const std::string& text);
std::string format_complex_matrix(const ComplexMatrix& m);

/// Validates the block invariant for operators and states; throws
/// BlockStructureViolation when it does not hold.
RealifiedFile parse_realified(const std::string& text, double tol = kBlockTol);
std::string format_realified(const RealifiedFile& file);

std::string read_file(const std::string& path);
/// Writes to a sibling temporary file, then renames it over path.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace realq::io
