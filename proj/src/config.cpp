#include "config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace swe {

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  fail(ErrorCode::parse, "invalid value '" + value + "' for key '" + key +
                             "' (expected " + expected + ")");
}

double parse_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') bad_value(key, value, "a number");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') bad_value(key, value, "an integer");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

Scheme parse_scheme(const std::string& key, const std::string& value) {
  if (value == "fvc") return Scheme::fvc;
  if (value == "roe") return Scheme::roe;
  bad_value(key, value, "fvc or roe");
}

BoundaryKind parse_bc(const std::string& key, const std::string& value) {
  if (value == "wall") return BoundaryKind::wall;
  if (value == "transmissive") return BoundaryKind::transmissive;
  bad_value(key, value, "wall or transmissive");
}

}  // namespace

void ConfigBuilder::set(const std::string& key, const std::string& value) {
  RunConfig& c = cfg_;
  if (key == "case") {
    if (value == "accuracy_dam") c.scenario = Case::accuracy_dam;
    else if (value == "circular_dam") c.scenario = Case::circular_dam;
    else if (value == "partial_dam") c.scenario = Case::partial_dam;
    else if (value == "from_file") c.scenario = Case::from_file;
    else bad_value(key, value,
                   "accuracy_dam, circular_dam, partial_dam or from_file");
    case_set_ = true;
  } else if (key == "scheme") {
    c.scheme = parse_scheme(key, value);
  } else if (key == "schemes") {
    c.convergence_schemes.clear();
    for (const std::string& item : split(value, ','))
      c.convergence_schemes.push_back(parse_scheme(key, trim(item)));
    if (c.convergence_schemes.empty()) bad_value(key, value, "a scheme list");
  } else if (key == "cfl") {
    c.cfl = parse_double(key, value);
  } else if (key == "alpha") {
    c.alpha = parse_double(key, value);
  } else if (key == "g") {
    c.g = parse_double(key, value);
  } else if (key == "fc") {
    c.f_c = parse_double(key, value);
  } else if (key == "t_end") {
    c.t_end = parse_double(key, value);
  } else if (key == "mesh_file") {
    c.mesh_file = value;
  } else if (key == "nx") {
    c.nx = parse_int(key, value);
  } else if (key == "ny") {
    c.ny = parse_int(key, value);
  } else if (key == "split") {
    if (value == "fixed") c.split = DiagonalPattern::fixed;
    else if (value == "alternating") c.split = DiagonalPattern::alternating;
    else bad_value(key, value, "fixed or alternating");
  } else if (key == "bc") {
    c.bc_default = parse_bc(key, value);
    c.bc_default_set = true;
  } else if (key == "bc_tags") {
    // e.g. "1:wall,2:transmissive"
    for (const std::string& item : split(value, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) bad_value(key, value, "tag:kind pairs");
      const int tag = parse_int(key, trim(item.substr(0, colon)));
      c.bc_by_tag[tag] = parse_bc(key, trim(item.substr(colon + 1)));
    }
  } else if (key == "x0") {
    c.x0 = parse_double(key, value);
  } else if (key == "h_left") {
    c.h_left = parse_double(key, value);
  } else if (key == "h_right") {
    c.h_right = parse_double(key, value);
  } else if (key == "dam_x_min") {
    c.dam.dam_x_min = parse_double(key, value);
  } else if (key == "dam_x_max") {
    c.dam.dam_x_max = parse_double(key, value);
  } else if (key == "breach_y_min") {
    c.dam.breach_y_min = parse_double(key, value);
  } else if (key == "breach_y_max") {
    c.dam.breach_y_max = parse_double(key, value);
  } else if (key == "interpolation") {
    if (value == "centroid-line") c.interpolation = InterpolationMode::centroid_line;
    else if (value == "barycentric") c.interpolation = InterpolationMode::barycentric;
    else if (value == "nearest") c.interpolation = InterpolationMode::nearest_cell;
    else bad_value(key, value, "centroid-line, barycentric or nearest");
  } else if (key == "entropy_fix_delta") {
    if (value == "auto") c.entropy_fix_delta = -1.0;
    else c.entropy_fix_delta = parse_double(key, value);
  } else if (key == "out_dir") {
    c.out_dir = value;
  } else if (key == "output_interval") {
    c.output_interval = parse_double(key, value);
  } else if (key == "output_times") {
    c.output_times.clear();
    for (const std::string& item : split(value, ','))
      c.output_times.push_back(parse_double(key, trim(item)));
  } else if (key == "convergence_nx") {
    c.convergence_nx.clear();
    for (const std::string& item : split(value, ','))
      c.convergence_nx.push_back(parse_int(key, trim(item)));
  } else {
    fail(ErrorCode::parse, "unknown config key '" + key + "'");
  }
}

void ConfigBuilder::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open config file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << path << ":" << line_no << ": expected 'key = value'";
      fail(ErrorCode::parse, os.str());
    }
    try {
      set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      std::ostringstream os;
      os << path << ":" << line_no << ": " << e.what();
      fail(e.code(), os.str());
    }
  }
}

RunConfig ConfigBuilder::finish() const {
  if (!case_set_)
    fail(ErrorCode::parse, "missing required key 'case'");
  return cfg_;
}

RunConfig parse_config(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  ConfigBuilder builder;
  if (!path.empty()) builder.load_file(path);
  for (const auto& [key, value] : overrides) builder.set(key, value);
  return builder.finish();
}

}  // namespace swe
