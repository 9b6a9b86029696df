#include "realq/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "realq/realify.hpp"

namespace realq::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Eigen::Index read_dim(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("missing or non-integer '") + key + "'");
  }
  const auto value = j.at(key).get<long long>();
  if (value < 1 || value > 4096) throw FormatError(std::string("'") + key + "' out of range");
  return static_cast<Eigen::Index>(value);
}

const json& read_rows(const json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.contains("data") || !j.at("data").is_array()) throw FormatError("missing 'data' array");
  const json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) throw FormatError("'data' row count differs from 'rows'");
  for (const auto& row : data) {
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError("'data' row length differs from 'cols'");
    }
  }
  return data;
}

double read_number(const json& v) {
  if (!v.is_number()) throw FormatError("matrix entries must be numbers");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw FormatError("matrix entries must be finite");
  return x;
}

}  // namespace

RealifiedKind parse_kind(std::string_view name) {
  if (name == "operator") return RealifiedKind::operator_;
  if (name == "state") return RealifiedKind::state;
  if (name == "ket") return RealifiedKind::ket;
  throw FormatError("unknown kind '" + std::string(name) + "'");
}

std::string kind_name(RealifiedKind kind) {
  switch (kind) {
    case RealifiedKind::operator_: return "operator";
    case RealifiedKind::state: return "state";
    case RealifiedKind::ket: return "ket";
  }
  return "operator";
}

ComplexMatrix parse_complex_matrix(const std::string& text) {
  const json j = parse_json(text);
  const Eigen::Index rows = read_dim(j, "rows");
  const Eigen::Index cols = read_dim(j, "cols");
  const json& data = read_rows(j, rows, cols);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j2 = 0; j2 < cols; ++j2) {
      const json& entry = data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)];
      if (!entry.is_array() || entry.size() != 2) throw FormatError("complex entries must be [re, im] pairs");
      m(i, j2) = Complex(read_number(entry[0]), read_number(entry[1]));
    }
  }
  return m;
}

std::string format_complex_matrix(const ComplexMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    data.push_back(std::move(row));
  }
  json out = {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
  return out.dump() + "\n";
}

RealifiedFile parse_realified(const std::string& text, double tol) {
  const json j = parse_json(text);
  const Eigen::Index rows = read_dim(j, "rows");
  const Eigen::Index cols = read_dim(j, "cols");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw FormatError("missing 'kind'");
  RealifiedFile file;
  file.kind = parse_kind(j.at("kind").get<std::string>());
  if (rows % 2 != 0) throw FormatError("realified 'rows' must be even");
  if (file.kind == RealifiedKind::ket) {
    if (cols != 1) throw FormatError("realified ket must have one column");
  } else if (cols % 2 != 0) {
    throw FormatError("realified 'cols' must be even");
  }
  if (file.kind == RealifiedKind::state && rows != cols) throw FormatError("realified state must be square");

  const json& data = read_rows(j, rows, cols);
  file.data.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      file.data(i, c) = read_number(data[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    }
  }
  if (file.kind != RealifiedKind::ket) {
    const double asym = block_asymmetry(file.data);
    if (asym > tol) throw BlockStructureViolation(asym);
  }
  return file;
}

std::string format_realified(const RealifiedFile& file) {
  json data = json::array();
  for (Eigen::Index i = 0; i < file.data.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < file.data.cols(); ++j) row.push_back(file.data(i, j));
    data.push_back(std::move(row));
  }
  json out = {{"rows", file.data.rows()},
              {"cols", file.data.cols()},
              {"data", std::move(data)},
              {"kind", kind_name(file.kind)}};
  return out.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw FormatError("cannot write '" + path + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw FormatError("cannot write '" + path + "': " + ec.message());
  }
}

}  // namespace realq::io
