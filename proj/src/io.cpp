#include "leibniz/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace leibniz {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "." + key + ": missing");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) throw InputError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string write_algebra(const ScalarTable& table) {
  json brackets = json::array();
  for (std::size_t i = 0; i < table.dim(); ++i)
    for (std::size_t j = 0; j < table.dim(); ++j) {
      const auto& p = table.product(i, j);
      if (p.empty()) continue;
      json value = json::array();
      for (const auto& e : p) value.push_back({{"coef", e.coef.to_string()}, {"basis", table.label(e.index)}});
      brackets.push_back({{"left", table.label(i)}, {"right", table.label(j)}, {"value", value}});
    }
  json doc = {{"dim", table.dim()}, {"labels", table.labels()}, {"brackets", brackets}};
  return doc.dump(2) + "\n";
}

ScalarTable read_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
  }
  const json& dim = field(doc, "dim", "algebra");
  if (!dim.is_number_unsigned()) throw InputError("algebra.dim: expected a non-negative integer");
  const json& labels_json = field(doc, "labels", "algebra");
  if (!labels_json.is_array()) throw InputError("algebra.labels: expected an array");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < labels_json.size(); ++k) {
    const std::string path = "algebra.labels[" + std::to_string(k) + "]";
    if (!labels_json[k].is_string()) throw InputError(path + ": expected a string");
    std::string label = labels_json[k].get<std::string>();
    if (!seen.insert(label).second) throw InputError(path + ": duplicate label " + label);
    labels.push_back(std::move(label));
  }
  if (labels.size() != dim.get<std::size_t>())
    throw InputError("algebra.labels: " + std::to_string(labels.size()) + " labels for dim " +
                     std::to_string(dim.get<std::size_t>()));
  ScalarTable table(labels);
  auto index = [&](const std::string& label, const std::string& path) {
    auto k = table.index_of(label);
    if (!k) throw InputError(path + ": unknown label " + label);
    return *k;
  };

  const json& brackets = field(doc, "brackets", "algebra");
  if (!brackets.is_array()) throw InputError("algebra.brackets: expected an array");
  std::set<std::pair<std::size_t, std::size_t>> filled;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = "algebra.brackets[" + std::to_string(b) + "]";
    const std::size_t i = index(string_field(brackets[b], "left", path), path + ".left");
    const std::size_t j = index(string_field(brackets[b], "right", path), path + ".right");
    if (!filled.insert({i, j}).second)
      throw InputError(path + ": duplicate bracket [" + labels[i] + "," + labels[j] + "]");
    const json& value = field(brackets[b], "value", path);
    if (!value.is_array()) throw InputError(path + ".value: expected an array");
    for (std::size_t v = 0; v < value.size(); ++v) {
      const std::string vpath = path + ".value[" + std::to_string(v) + "]";
      const std::size_t k = index(string_field(value[v], "basis", vpath), vpath + ".basis");
      Scalar coef;
      try {
        coef = Scalar::parse(string_field(value[v], "coef", vpath));
      } catch (const InputError& e) {
        throw InputError(vpath + ".coef: " + e.what());
      }
      table.add(i, j, k, coef);
    }
  }
  return table;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("cannot write " + path);
}

ScalarTable load_algebra(const std::string& path) {
  try {
    return read_algebra(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_algebra(const std::string& path, const ScalarTable& table) { write_file(path, write_algebra(table)); }

std::map<std::string, Scalar> read_params(std::string_view text) {
  std::map<std::string, Scalar> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    const std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string::npos) throw InputError(where + ": expected 'name = value'");
    const std::string name = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (name.empty()) throw InputError(where + ": missing parameter name");
    if (out.count(name) != 0) throw InputError(where + ": duplicate parameter " + name);
    try {
      out[name] = Scalar::parse(value);
    } catch (const InputError& e) {
      throw InputError(where + ": " + name + ": " + e.what());
    }
  }
  return out;
}

std::map<std::string, Scalar> load_params(const std::string& path) {
  try {
    return read_params(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string write_params(const std::map<std::string, Scalar>& params) {
  std::string out;
  for (const auto& [name, value] : params) out += name + " = " + value.to_string() + "\n";
  return out;
}

std::string write_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += m(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace leibniz
