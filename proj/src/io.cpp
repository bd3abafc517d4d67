#include "covchan/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace covchan {

namespace {

Json complex_to_json(const Complex& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("refusing to serialize a non-finite matrix entry");
  }
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::runtime_error(where + ": complex entries must be [re, im] number pairs");
  }
  double re = j[0].get<double>();
  double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::runtime_error(where + ": non-finite matrix entry");
  }
  return {re, im};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw std::runtime_error(where + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw std::runtime_error(where + ": expected " + std::to_string(cols) + " columns per row");
    }
    for (int c = 0; c < cols; ++c) {
      m(i, c) = complex_from_json(row[c], where);
    }
  }
  return m;
}

}  // namespace

std::string format_sig(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Json channel_to_json(const Channel& ch, const Json& meta) {
  Json j;
  j["dim"] = ch.d;
  j["label"] = ch.label;
  Json kraus = Json::array();
  for (const Matrix& k : ch.kraus) kraus.push_back(matrix_to_json(k));
  j["kraus"] = kraus;
  Json m = meta.is_object() ? meta : Json::object();
  if (!ch.unit_weights()) {
    Json w = Json::array();
    for (double v : ch.weights) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("refusing to serialize a non-finite Kraus weight");
      }
      w.push_back(v);
    }
    m["weights"] = w;
  }
  j["meta"] = m;
  return j;
}

Channel channel_from_json(const Json& j, Json* meta_out) {
  if (!j.is_object()) throw std::runtime_error("channel file: top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::runtime_error("channel file: missing integer field 'dim'");
  }
  int d = j["dim"].get<int>();
  if (d < 2) throw std::runtime_error("channel file: 'dim' must be at least 2");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw std::runtime_error("channel file: 'kraus' must be a non-empty array of matrices");
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw std::runtime_error("channel file: 'label' must be a string");
    label = j["label"].get<std::string>();
  }
  std::vector<Matrix> kraus;
  for (size_t a = 0; a < j["kraus"].size(); ++a) {
    kraus.push_back(matrix_from_json(j["kraus"][a], d, d, "kraus[" + std::to_string(a) + "]"));
  }
  Json meta = j.contains("meta") && j["meta"].is_object() ? j["meta"] : Json::object();
  std::vector<double> weights;
  if (meta.contains("weights")) {
    const Json& w = meta["weights"];
    if (!w.is_array() || w.size() != kraus.size()) {
      throw std::runtime_error("channel file: meta.weights must list one weight per Kraus entry");
    }
    for (const Json& v : w) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        throw std::runtime_error("channel file: meta.weights entries must be finite numbers");
      }
      weights.push_back(v.get<double>());
    }
  }
  if (meta_out) *meta_out = meta;
  if (weights.empty()) return make_channel(d, kraus, label);
  return make_channel(d, kraus, label, weights);
}

void write_channel_file(const std::string& path, const Channel& ch, const Json& meta) {
  Json j = channel_to_json(ch, meta);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Channel read_channel_file(const std::string& path, Json* meta_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
  try {
    return channel_from_json(j, meta_out);
  } catch (const std::exception& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
}

Matrix read_choi_file(const std::string& path, int* dim_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::runtime_error("'" + path + "': choi file needs an integer field 'dim'");
  }
  int d = j["dim"].get<int>();
  if (d < 2) throw std::runtime_error("'" + path + "': 'dim' must be at least 2");
  if (!j.contains("choi")) throw std::runtime_error("'" + path + "': missing field 'choi'");
  Matrix m;
  try {
    m = matrix_from_json(j["choi"], d * d, d * d, "choi");
  } catch (const std::exception& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
  if (dim_out) *dim_out = d;
  return m;
}

}  // namespace covchan
