#include "lattice/config.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace tl {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw ConfigError(line, "trailing characters in number '" + v + "'");
    return d;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    throw ConfigError(line, "expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    int i = std::stoi(v, &pos);
    if (pos != v.size()) throw ConfigError(line, "trailing characters in integer '" + v + "'");
    return i;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    throw ConfigError(line, "expected an integer, got '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    unsigned long long u = std::stoull(v, &pos);
    if (pos != v.size()) throw ConfigError(line, "trailing characters in integer '" + v + "'");
    return u;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    throw ConfigError(line, "expected an unsigned integer, got '" + v + "'");
  }
}

std::vector<double> parse_list(const std::string& v, int line) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(line, "empty element in list '" + v + "'");
    out.push_back(parse_double(item, line));
  }
  if (out.empty()) throw ConfigError(line, "empty list");
  return out;
}

const std::set<std::string> kCommands = {"nearfield", "mixed",      "scattering", "bands",
                                         "friedrichs", "floquet",   "all"};

// Dispatch on "section.key". Throws on unknown keys.
void set_value(RunConfig& c, const std::string& section, const std::string& key,
               const std::string& value, int line) {
  const std::string full = section + "." + key;
  if (full == "run.command") {
    if (!kCommands.count(value)) throw ConfigError(line, "unknown command '" + value + "'");
    c.command = value;
  } else if (full == "run.output") {
    if (value.empty()) throw ConfigError(line, "output must be non-empty");
    c.output = value;
  } else if (full == "run.seed") {
    c.seed = parse_u64(value, line);
  } else if (full == "geometry.R") {
    c.R = parse_double(value, line);
  } else if (full == "geometry.h_list") {
    c.h_list = parse_list(value, line);
  } else if (full == "geometry.scattering_h") {
    c.scattering_h = parse_double(value, line);
  } else if (full == "solver.eig_tol") {
    c.eig_tol = parse_double(value, line);
  } else if (full == "solver.solve_tol") {
    c.solve_tol = parse_double(value, line);
  } else if (full == "nearfield.window_lo") {
    c.window_lo = parse_double(value, line);
  } else if (full == "nearfield.window_hi") {
    c.window_hi = parse_double(value, line);
  } else if (full == "bands.eta_per_axis") {
    c.eta_per_axis = parse_int(value, line);
  } else if (full == "bands.r_m") {
    c.r_m = parse_double(value, line);
    c.m_override = true;
  } else if (full == "bands.t_m") {
    c.t_m = parse_double(value, line);
    c.m_override = true;
  } else if (full == "bands.tperp_m") {
    c.tperp_m = parse_double(value, line);
    c.m_override = true;
  } else if (full == "friedrichs.a") {
    c.a = parse_double(value, line);
  } else if (full == "friedrichs.R") {
    c.friedrichs_R = parse_double(value, line);
  } else if (full == "friedrichs.samples") {
    c.samples = parse_int(value, line);
  } else if (full == "floquet.eps_list") {
    c.eps_list = parse_list(value, line);
  } else if (full == "floquet.h_ratio") {
    c.h_ratio = parse_double(value, line);
  } else if (full == "floquet.bands_k") {
    c.bands_k = parse_int(value, line);
  } else {
    throw ConfigError(line, "unknown key '" + full + "'");
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::string section;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      static const std::set<std::string> kSections = {
          "run", "geometry", "solver", "nearfield", "bands", "friedrichs", "floquet"};
      if (!kSections.count(section)) throw ConfigError(line, "unknown section '" + section + "'");
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    if (section.empty()) throw ConfigError(line, "key before any [section] header");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "empty key");
    std::string full = section + "." + key;
    if (!seen.insert(full).second) throw ConfigError(line, "duplicate key '" + full + "'");
    set_value(c, section, key, value, line);
  }
  if (c.command.empty())
    throw ConfigError(0, "missing required field: run.command "
                         "(nearfield|mixed|scattering|bands|friedrichs|floquet|all)");
  return c;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[run]\n";
  os << "command = " << c.command << "\n";
  os << "output = " << c.output << "\n";
  os << "seed = " << c.seed << "\n";
  os << "[geometry]\n";
  os << "R = " << fmt(c.R) << "\n";
  os << "h_list = ";
  for (std::size_t i = 0; i < c.h_list.size(); ++i) os << (i ? ", " : "") << fmt(c.h_list[i]);
  os << "\n";
  os << "scattering_h = " << fmt(c.scattering_h) << "\n";
  os << "[solver]\n";
  os << "eig_tol = " << fmt(c.eig_tol) << "\n";
  os << "solve_tol = " << fmt(c.solve_tol) << "\n";
  os << "[nearfield]\n";
  os << "window_lo = " << fmt(c.window_lo) << "\n";
  os << "window_hi = " << fmt(c.window_hi) << "\n";
  os << "[bands]\n";
  os << "eta_per_axis = " << c.eta_per_axis << "\n";
  if (c.m_override) {
    os << "r_m = " << fmt(c.r_m) << "\n";
    os << "t_m = " << fmt(c.t_m) << "\n";
    os << "tperp_m = " << fmt(c.tperp_m) << "\n";
  }
  os << "[friedrichs]\n";
  os << "a = " << fmt(c.a) << "\n";
  os << "R = " << fmt(c.friedrichs_R) << "\n";
  os << "samples = " << c.samples << "\n";
  os << "[floquet]\n";
  os << "eps_list = ";
  for (std::size_t i = 0; i < c.eps_list.size(); ++i) os << (i ? ", " : "") << fmt(c.eps_list[i]);
  os << "\n";
  os << "h_ratio = " << fmt(c.h_ratio) << "\n";
  os << "bands_k = " << c.bands_k << "\n";
  return os.str();
}

void apply_override(RunConfig& c, const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos) throw ConfigError(0, "override must be section.key=value");
  std::string full = trim(spec.substr(0, eq));
  std::string value = trim(spec.substr(eq + 1));
  auto dot = full.find('.');
  if (dot == std::string::npos) throw ConfigError(0, "override key must be section.key");
  set_value(c, full.substr(0, dot), full.substr(dot + 1), value, 0);
}

}  // namespace tl
