#include "rootinv/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rootinv/errors.hpp"

namespace rootinv {

namespace {

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

double parse_real(const std::string& tok) {
  errno = 0;
  char* end = nullptr;
  double x = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size() || errno == ERANGE || !std::isfinite(x))
    throw ParseError("not a finite number: '" + tok + "'");
  return x;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;)
    out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Basis3 basis_from_values(const std::vector<double>& v) {
  if (v.size() == 9)
    return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}};
  try {
    return basis_from_cell({v[0], v[1], v[2], v[3], v[4], v[5]});
  } catch (const RealizabilityError& e) {
    throw ParseError(std::string("invalid cell parameters: ") + e.what());
  }
}

} // namespace

Basis3 parse_lattice(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto toks = split_ws(strip_comment(line));
    if (!toks.empty())
      rows.push_back(std::move(toks));
  }
  std::vector<double> values;
  if (rows.size() == 3 && rows[0].size() == 3 && rows[1].size() == 3 && rows[2].size() == 3) {
    for (const auto& r : rows)
      for (const auto& t : r)
        values.push_back(parse_real(t));
  } else if (rows.size() == 1 && rows[0].size() == 6) {
    for (const auto& t : rows[0])
      values.push_back(parse_real(t));
  } else {
    throw ParseError("expected three rows of three numbers or one line of six cell parameters");
  }
  return basis_from_values(values);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Basis3 read_lattice_file(const std::string& path) { return parse_lattice(read_text_file(path)); }

std::vector<Basis3> parse_csv_batch(std::string_view text) {
  std::vector<Basis3> out;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  bool first = true;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty())
      continue;
    std::vector<std::string> fields;
    std::istringstream fs(body);
    for (std::string f; std::getline(fs, f, ',');)
      fields.push_back(trim(f));
    std::vector<double> values;
    try {
      for (const auto& f : fields)
        values.push_back(parse_real(f));
    } catch (const ParseError&) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw ParseError("line " + std::to_string(lineno) + ": non-numeric field");
    }
    first = false;
    if (values.size() != 9 && values.size() != 6)
      throw ParseError("line " + std::to_string(lineno) + ": expected 9 or 6 values");
    out.push_back(basis_from_values(values));
  }
  return out;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);
  return buf;
}

double round12(double x) { return std::strtod(format_number(x).c_str(), nullptr) + 0.0; }

nlohmann::json to_json(const Vec3& v) { return {round12(v.x), round12(v.y), round12(v.z)}; }

nlohmann::json to_json(const CoForm& cf) {
  auto j = nlohmann::json::array();
  for (double p : cf.p)
    j.push_back(round12(p));
  return j;
}

nlohmann::json to_json(const VoForm& vf) {
  auto j = nlohmann::json::array();
  for (double v : vf.values())
    j.push_back(round12(v));
  return j;
}

nlohmann::json to_json(const RootInvariant& ri, double tol) {
  auto values = nlohmann::json::array();
  for (double v : ri.values)
    values.push_back(round12(v));
  return {{"vtype", to_string(ri.type)}, {"values", values}, {"tol", tol}};
}

ParsedInvariant parse_invariant_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vtype") || !j["vtype"].is_string() ||
      !j.contains("values") || !j["values"].is_array())
    throw ParseError("invariant JSON needs a string \"vtype\" and an array \"values\"");
  ParsedInvariant out;
  out.invariant.type = parse_voronoi_type(j["vtype"].get<std::string>());
  for (const auto& v : j["values"]) {
    if (!v.is_number())
      throw ParseError("invariant values must be numbers");
    out.invariant.values.push_back(v.get<double>());
  }
  if (int(out.invariant.values.size()) != invariant_size(out.invariant.type))
    throw ParseError("wrong number of values for " + to_string(out.invariant.type));
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0))
      throw ParseError("\"tol\" must be a positive number");
    out.tol = j["tol"].get<double>();
  }
  return out;
}

} // namespace rootinv
