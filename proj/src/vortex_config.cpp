#include "vortexmod/vortex_config.hpp"

#include "vortexmod/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace vortexmod {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
std::vector<T> read_values(const std::string& key, const std::string& value, std::size_t min_count,
                           std::size_t max_count, int line) {
  std::istringstream in(value);
  std::vector<T> out;
  T x;
  while (in >> x) out.push_back(x);
  if (!in.eof() || out.size() < min_count || out.size() > max_count) {
    throw ParseError("config line " + std::to_string(line) + ": bad value for '" + key + "'");
  }
  return out;
}

}  // namespace

taubes::VortexProblem parse_vortex_config(std::string_view text) {
  taubes::VortexProblem prob;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (key != "zero" && !seen.insert(key).second) {
      throw ParseError("config line " + std::to_string(line) + ": duplicate key '" + key + "'");
    }
    if (key == "periods") {
      const auto v = read_values<double>(key, value, 2, 2, line);
      prob.torus.L1 = v[0];
      prob.torus.L2 = v[1];
    } else if (key == "grid") {
      const auto v = read_values<int>(key, value, 2, 2, line);
      prob.torus.N1 = v[0];
      prob.torus.N2 = v[1];
    } else if (key == "zero") {
      const auto v = read_values<double>(key, value, 2, 3, line);
      const double m = v.size() == 3 ? v[2] : 1.0;
      if (m != static_cast<int>(m)) throw ParseError("config line " + std::to_string(line) + ": multiplicity must be an integer");
      prob.zeros.push_back({v[0], v[1], static_cast<int>(m)});
    } else if (key == "e2") {
      prob.e2 = read_values<double>(key, value, 1, 1, line)[0];
    } else if (key == "tau") {
      prob.tau = read_values<double>(key, value, 1, 1, line)[0];
    } else if (key == "tol") {
      prob.tol = read_values<double>(key, value, 1, 1, line)[0];
    } else if (key == "reg_width") {
      prob.reg_width = read_values<double>(key, value, 1, 1, line)[0];
    } else if (key == "max_iter") {
      prob.max_iter = read_values<int>(key, value, 1, 1, line)[0];
    } else {
      throw ParseError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (!seen.count("periods")) throw ParseError("config: 'periods' is required");
  if (!seen.count("grid")) throw ParseError("config: 'grid' is required");
  return prob;
}

std::filesystem::path resolve_config_path(const std::filesystem::path& path) {
  if (path.is_absolute() || std::filesystem::exists(path)) return path;
  if (const char* dir = std::getenv("VORTEXMOD_CONFIG_DIR"); dir && *dir) {
    const auto candidate = std::filesystem::path(dir) / path;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  return path;
}

taubes::VortexProblem load_vortex_config(const std::filesystem::path& path) {
  const auto resolved = resolve_config_path(path);
  std::ifstream in(resolved);
  if (!in) throw ParameterError("cannot open config file '" + resolved.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_vortex_config(buffer.str());
}

}  // namespace vortexmod
