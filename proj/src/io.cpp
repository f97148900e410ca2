#include "cusphere/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cusphere {

namespace {

double parse_plain_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number: '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument("bad number: '" + text + "'");
  return value;
}

std::string strip_spaces(const std::string& text) {
  std::string out;
  std::copy_if(text.begin(), text.end(), std::back_inserter(out),
               [](unsigned char c) { return !std::isspace(c); });
  return out;
}

}  // namespace

double parse_angle_expr(const std::string& raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw std::invalid_argument("empty angle expression");

  const std::size_t pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) return parse_plain_number(text);

  std::string prefix = text.substr(0, pi_pos);
  const std::string suffix = text.substr(pi_pos + 2);

  double coefficient = 1.0;
  if (prefix == "-") {
    coefficient = -1.0;
  } else if (!prefix.empty() && prefix != "+") {
    coefficient = parse_plain_number(prefix);
  }

  double denominator = 1.0;
  if (!suffix.empty()) {
    if (suffix.front() != '/')
      throw std::invalid_argument("bad angle expression: '" + raw + "'");
    denominator = parse_plain_number(suffix.substr(1));
    if (denominator == 0.0)
      throw std::invalid_argument("zero denominator in '" + raw + "'");
  }
  return coefficient * std::numbers::pi / denominator;
}

std::string format_full(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string out =
      "step,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im,c4_re,c4_im,c5_re,c5_im,c6_re,c6_im\n";
  for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
    out += std::to_string(k);
    for (int j = 0; j < 6; ++j) {
      out += ',';
      out += format_full(trajectory.states[k][j].real());
      out += ',';
      out += format_full(trajectory.states[k][j].imag());
    }
    out += '\n';
  }
  return out;
}

std::vector<SixVector<Complex>> parse_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("step,", 0) != 0)
    throw std::invalid_argument("trajectory csv: missing header");

  std::vector<SixVector<Complex>> states;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    std::vector<double> values;
    while (std::getline(row, field, ',')) values.push_back(parse_plain_number(field));
    if (values.size() != 13)
      throw std::invalid_argument("trajectory csv: bad row '" + line + "'");
    SixVector<Complex> v;
    for (int j = 0; j < 6; ++j) v[j] = Complex(values[1 + 2 * j], values[2 + 2 * j]);
    states.push_back(v);
  }
  return states;
}

namespace {

std::string complex_entry_text(const Complex& v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g%+.12gi", v.real(), v.imag());
  return buffer;
}

template <typename Mat>
std::string real_matrix_text(const Mat& m) {
  std::string out;
  char buffer[48];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buffer, sizeof(buffer), "%s%18.12g", j == 0 ? "" : " ", m(i, j));
      out += buffer;
    }
    out += '\n';
  }
  return out;
}

template <typename Mat>
std::string complex_matrix_text(const Mat& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += "  ";
      out += complex_entry_text(m(i, j));
    }
    out += '\n';
  }
  return out;
}

template <typename Mat>
std::string generic_matrix_csv(const Mat& m, bool complex_entries) {
  std::string out;
  bool first = true;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex v = to_complex(m(i, j));
      if (!first) out += ',';
      first = false;
      out += format_full(v.real());
      if (complex_entries) {
        out += ',';
        out += format_full(v.imag());
      }
    }
  out += '\n';
  return out;
}

template <typename Mat>
nlohmann::json generic_matrix_json(const Mat& m, bool complex_entries,
                                   nlohmann::json meta) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex v = to_complex(m(i, j));
      row.push_back({v.real(), v.imag()});
    }
    rows.push_back(row);
  }
  nlohmann::json out{{"rows", rows}, {"complex", complex_entries}};
  if (!meta.is_null() && !meta.empty()) out["meta"] = std::move(meta);
  return out;
}

}  // namespace

std::string matrix_text(const RealMat6& m) { return real_matrix_text(m); }
std::string matrix_text(const ComplexMat6& m) { return complex_matrix_text(m); }
std::string matrix_text(const ComplexMat3& m) { return complex_matrix_text(m); }

std::string matrix_csv(const RealMat6& m) { return generic_matrix_csv(m, false); }
std::string matrix_csv(const ComplexMat6& m) { return generic_matrix_csv(m, true); }
std::string matrix_csv(const ComplexMat3& m) { return generic_matrix_csv(m, true); }

nlohmann::json matrix_json(const RealMat6& m, nlohmann::json meta) {
  return generic_matrix_json(m, false, std::move(meta));
}
nlohmann::json matrix_json(const ComplexMat6& m, nlohmann::json meta) {
  return generic_matrix_json(m, true, std::move(meta));
}
nlohmann::json matrix_json(const ComplexMat3& m, nlohmann::json meta) {
  return generic_matrix_json(m, true, std::move(meta));
}

nlohmann::json angles_meta(const Angles& angles, const ScaleParams& scales) {
  return nlohmann::json{
      {"angles",
       {{"x", {angles.x.real(), angles.x.imag()}},
        {"y", {angles.y.real(), angles.y.imag()}},
        {"z", {angles.z.real(), angles.z.imag()}}}},
      {"scales", {{"c", scales.c}, {"e", scales.e}}}};
}

std::string cayley_text(const CayleyTable& table) {
  std::string out = "     ";
  for (ElementLabel label : kAllLabels) {
    out += "   ";
    out += to_char(label);
  }
  out += '\n';
  for (int r = 0; r < 6; ++r) {
    out += "  ";
    out += to_char(kAllLabels[r]);
    out += "  ";
    for (int s = 0; s < 6; ++s) {
      const std::string token = to_token(table[r][s]);
      out += std::string(4 - token.size(), ' ');
      out += token;
    }
    out += '\n';
  }
  return out;
}

nlohmann::json cayley_json(const CayleyTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table) {
    nlohmann::json cells = nlohmann::json::array();
    for (const SignedElement& cell : row) cells.push_back(to_token(cell));
    rows.push_back(cells);
  }
  return nlohmann::json{{"rows", rows}};
}

std::string audit_text(const std::vector<RelationCheck>& report) {
  std::string out;
  for (const RelationCheck& check : report) {
    out += check.relation;
    out += check.confirmed ? ": confirmed"
                           : ": CONTRADICTED (actual " + check.actual + ")";
    out += '\n';
  }
  return out;
}

std::string quarter_turn_text(const QuarterTurnTable& table) {
  std::string out = std::string("angle ") + axis_name(table.axis) + " progression\n";
  for (int start = 0; start < 3; ++start) {
    out += "  ";
    out += slot_name(2 * start);
    for (const SlotStep& step : table.rows[start]) {
      out += " -> ";
      if (step.sign < 0) out += '-';
      out += slot_name(step.slot);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string axis_map_cell(const AxisMap& map, int pair) {
  // Axis-level reading: the X/Y/Z slot pair lands on a destination pair with
  // one common sign.
  const SlotStep& step = map[2 * pair];
  std::string cell = step.sign < 0 ? "-" : " ";
  cell += "XYZ"[pair];
  cell += '_';
  cell += "xyz"[step.slot / 2];
  return cell;
}

}  // namespace

std::string orbit_text(OrientedPlane plane, const std::array<AxisMap, 6>& orbit) {
  const char* name = plane == OrientedPlane::minus_c ? "-c" : "-e";
  std::string out = std::string(name) + " oriented plane rotation progression\n";
  for (int pair = 0; pair < 3; ++pair) {
    out += "  ";
    out += "XYZ"[pair];
    out += " ->";
    for (const AxisMap& map : orbit) {
      out += "  ";
      out += axis_map_cell(map, pair);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json orbit_json(OrientedPlane plane, const std::array<AxisMap, 6>& orbit) {
  nlohmann::json steps = nlohmann::json::array();
  for (const AxisMap& map : orbit) {
    nlohmann::json slots = nlohmann::json::array();
    for (const SlotStep& step : map)
      slots.push_back({{"slot", step.slot}, {"sign", step.sign}});
    steps.push_back(slots);
  }
  return nlohmann::json{
      {"plane", plane == OrientedPlane::minus_c ? "-c" : "-e"}, {"steps", steps}};
}

}  // namespace cusphere
