#include "toeplitz/matrix_file.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace toeplitz {

namespace {

using nlohmann::json;

std::size_t read_dimension(const json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw FormatError(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

CVector read_complex_array(const json& doc, const char* key, std::size_t expected) {
  if (!doc.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  const json& arr = doc.at(key);
  if (!arr.is_array() || arr.size() != expected) {
    throw FormatError(std::string("\"") + key + "\" must be an array of " +
                      std::to_string(expected) + " [re, im] pairs");
  }
  CVector out;
  out.reserve(expected);
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw FormatError(std::string("\"") + key + "\" entries must be [re, im] number pairs");
    }
    const Complex z{pair[0].get<double>(), pair[1].get<double>()};
    if (!is_finite(z)) throw FormatError(std::string("\"") + key + "\" has a non-finite entry");
    out.push_back(z);
  }
  return out;
}

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : doc.items()) {
    if (!allowed.contains(key)) throw FormatError("unknown key \"" + key + "\"");
  }
}

void append_array(std::string& out, std::span<const Complex> values) {
  out += '[';
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += '[' + format_number(values[k].real()) + ", " + format_number(values[k].imag()) + ']';
  }
  out += ']';
}

}  // namespace

std::string_view kind_of(const MatrixValue& v) {
  switch (v.index()) {
    case 0: return "toeplitz";
    case 1: return "hankel";
    default: return "dense";
  }
}

DenseMatrix dense_of(const MatrixValue& v) {
  struct Visitor {
    DenseMatrix operator()(const AsymToeplitz& a) const { return to_dense(a); }
    DenseMatrix operator()(const AsymHankel& h) const { return hankel_to_dense(h); }
    DenseMatrix operator()(const DenseMatrix& d) const { return d; }
  };
  return std::visit(Visitor{}, v);
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

MatrixValue parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("matrix file must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw FormatError("missing string key \"kind\"");
  }
  const std::string kind = doc.at("kind").get<std::string>();
  const std::size_t rows = read_dimension(doc, "rows");
  const std::size_t cols = read_dimension(doc, "cols");

  try {
    if (kind == "toeplitz") {
      reject_unknown_keys(doc, {"kind", "rows", "cols", "first_row", "first_col"});
      const CVector row = read_complex_array(doc, "first_row", cols);
      const CVector col = read_complex_array(doc, "first_col", rows);
      if (row[0] != col[0]) throw FormatError("first_row[0] must equal first_col[0]");
      return AsymToeplitz::from_first_row_col(row, col);
    }
    if (kind == "hankel") {
      reject_unknown_keys(doc, {"kind", "rows", "cols", "first_row", "last_col"});
      const CVector row = read_complex_array(doc, "first_row", cols);
      const CVector col = read_complex_array(doc, "last_col", rows);
      if (row[cols - 1] != col[0]) throw FormatError("first_row[cols-1] must equal last_col[0]");
      return AsymHankel::from_first_row_last_col(row, col);
    }
    if (kind == "dense") {
      reject_unknown_keys(doc, {"kind", "rows", "cols", "data"});
      if (rows > (std::size_t{1} << 20) / cols) throw FormatError("dense matrix too large");
      return DenseMatrix(rows, cols, read_complex_array(doc, "data", rows * cols));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown kind \"" + kind + "\"");
}

MatrixValue read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const MatrixValue& v) {
  std::string out = "{\n";
  const DenseMatrix* dense = std::get_if<DenseMatrix>(&v);
  const std::size_t rows = dense ? dense->rows()
                                 : std::visit([](const auto& x) { return x.rows(); }, v);
  const std::size_t cols = dense ? dense->cols()
                                 : std::visit([](const auto& x) { return x.cols(); }, v);
  auto key = [&](const char* k) { out += std::string("  \"") + k + "\": "; };

  key("cols");
  out += std::to_string(cols) + ",\n";
  if (const auto* a = std::get_if<AsymToeplitz>(&v)) {
    key("first_col");
    append_array(out, a->first_col());
    out += ",\n";
    key("first_row");
    append_array(out, a->first_row());
    out += ",\n";
  } else if (const auto* h = std::get_if<AsymHankel>(&v)) {
    key("first_row");
    append_array(out, h->first_row());
    out += ",\n";
  } else {
    key("data");
    append_array(out, dense->data());
    out += ",\n";
  }
  key("kind");
  out += "\"" + std::string(kind_of(v)) + "\",\n";
  if (const auto* h = std::get_if<AsymHankel>(&v)) {
    key("last_col");
    append_array(out, h->last_col());
    out += ",\n";
  }
  key("rows");
  out += std::to_string(rows) + "\n}\n";
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const MatrixValue& v) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << format_matrix(v);
  if (!out) throw FormatError("write failed for " + path.string());
}

}  // namespace toeplitz
