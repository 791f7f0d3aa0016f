#include "guardian/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace guardian::io {

using json = nlohmann::ordered_json;

namespace {

json log_or_null(const GuardianValue& v) {
  if (v.is_zero()) return nullptr;
  return v.log_magnitude;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("data") || !j.at("data").is_array()) {
      throw InputError("matrix JSON must be an object with a \"data\" array");
    }
    const auto& data = j.at("data");
    const std::size_t rows = j.contains("rows") ? j.at("rows").get<std::size_t>() : data.size();
    if (data.size() != rows || rows == 0) throw InputError("matrix JSON: row count does not match data");
    const std::size_t cols = j.contains("cols") ? j.at("cols").get<std::size_t>() : data.at(0).size();
    std::vector<double> flat;
    flat.reserve(rows * cols);
    for (const auto& r : data) {
      if (!r.is_array() || r.size() != cols) throw InputError("matrix JSON: ragged or malformed row");
      for (const auto& v : r) {
        if (!v.is_number()) throw InputError("matrix JSON: non-numeric entry");
        flat.push_back(v.get<double>());
      }
    }
    return Matrix(rows, cols, std::move(flat));
  } catch (const json::exception& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  } catch (const DimensionError& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  }
}

Matrix matrix_from_csv(std::istream& in) {
  std::vector<double> flat;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw InputError("CSV: cannot parse '" + cell + "' on row " + std::to_string(rows + 1));
      }
      if (cell.find_first_not_of(" \t", used) != std::string::npos) {
        throw InputError("CSV: trailing characters in '" + cell + "'");
      }
      flat.push_back(v);
      ++count;
    }
    if (rows == 0) cols = count;
    if (count != cols || count == 0) throw InputError("CSV: ragged row " + std::to_string(rows + 1));
    ++rows;
  }
  if (rows == 0) throw InputError("CSV: no data");
  try {
    return Matrix(rows, cols, std::move(flat));
  } catch (const DimensionError& e) {
    throw InputError(std::string("CSV: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Matrix read_matrix(const std::string& path) {
  if (ends_with(path, ".csv")) {
    std::istringstream in(slurp(path));
    return matrix_from_csv(in);
  }
  return matrix_from_json(read_json_file(path));
}

json to_json(const ParamFamily& family) {
  return json{{"n", family.n()},
              {"base", to_json(family.base())},
              {"dir1", to_json(family.dir1())},
              {"dir2", family.dir2() ? to_json(*family.dir2()) : json(nullptr)}};
}

ParamFamily family_from_json(const json& j) try {
  if (!j.is_object() || !j.contains("base") || !j.contains("dir1")) {
    throw InputError("family JSON must contain \"base\" and \"dir1\"");
  }
  std::optional<Matrix> dir2;
  if (j.contains("dir2") && !j.at("dir2").is_null()) dir2 = matrix_from_json(j.at("dir2"));
  ParamFamily family(matrix_from_json(j.at("base")), matrix_from_json(j.at("dir1")), std::move(dir2));
  if (j.contains("n") && j.at("n").get<std::size_t>() != family.n()) {
    throw DimensionError("family JSON: \"n\" does not match the matrices");
  }
  return family;
} catch (const json::exception& e) {
  throw InputError(std::string("family JSON: ") + e.what());
}

ParamFamily read_family(const std::string& path) { return family_from_json(read_json_file(path)); }

json to_json(const GuardianReport& r) {
  return json{{"kind", to_string(r.kind)},      {"g_sign", r.g_value.sign},
              {"g_logmag", log_or_null(r.g_value)}, {"det_a_sign", r.det_a.sign},
              {"f_sign", r.f_value.sign},       {"verdict", to_string(r.verdict)},
              {"oracle", to_string(r.oracle)}};
}

json to_json(const Crossing& c) {
  return json{{"type", to_string(c.type)},
              {"theta", c.theta},
              {"lo", c.lo},
              {"hi", c.hi},
              {"width", c.width()},
              {"refined", c.refined},
              {"oracle_max_re", c.oracle_max_real},
              {"oracle_max_re_lo", c.oracle_max_real_lo},
              {"oracle_max_re_hi", c.oracle_max_real_hi},
              {"oracle_confirms", c.oracle_confirms}};
}

json to_json(const SweepResult& result) {
  json samples = json::array();
  for (const auto& s : result.samples) {
    samples.push_back(json{{"theta", s.theta},
                           {"f_sign", s.report.f_value.sign},
                           {"f_logmag", log_or_null(s.report.f_value)},
                           {"oracle_max_re", s.report.oracle_max_real},
                           {"verdict", to_string(s.report.verdict)}});
  }
  json crossings = json::array();
  for (const auto& c : result.crossings) crossings.push_back(to_json(c));
  return json{{"kind", to_string(result.kind)},
              {"samples", std::move(samples)},
              {"crossings", std::move(crossings)},
              {"unconfirmed_touches", result.unconfirmed_touches}};
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace guardian::io
