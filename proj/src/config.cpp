#include "qge/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qge/errors.hpp"
#include "qge/manufactured.hpp"

namespace qge {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + real(v[i]);
  return s + "]";
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

// Strips a trailing comment outside of quotes.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string as_string(const std::string& v, const std::string& key) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') {
    throw InvalidArgument("'" + key + "' expects a quoted string");
  }
  return v.substr(1, v.size() - 2);
}

double as_real(const std::string& v, const std::string& key) {
  try {
    return parse_size(v);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("'" + key + "' expects a number");
  }
}

double as_number(const std::string& v, const std::string& key) {
  std::size_t used = 0;
  try {
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::logic_error&) {
  }
  throw InvalidArgument("'" + key + "' expects a number");
}

int as_int(const std::string& v, const std::string& key) {
  const double d = as_number(v, key);
  if (d != std::floor(d) || std::abs(d) > 1e9) throw InvalidArgument("'" + key + "' expects an integer");
  return static_cast<int>(d);
}

bool as_bool(const std::string& v, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw InvalidArgument("'" + key + "' expects true or false");
}

std::vector<double> as_list(const std::string& v, const std::string& key) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
    throw InvalidArgument("'" + key + "' expects a list");
  }
  const std::string inner = trim(v.substr(1, v.size() - 2));
  if (inner.empty()) return {};
  std::vector<double> out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(as_real(trim(item), key));
  return out;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

}  // namespace

NewtonSettings ExperimentConfig::newton() const {
  NewtonSettings s;
  s.abs_tol = abs_tol;
  s.rel_tol = rel_tol;
  s.max_iters = max_iters;
  return s;
}

void ExperimentConfig::validate() const {
  const auto problems = registered_problems();
  if (std::find(problems.begin(), problems.end(), problem) == problems.end()) {
    throw InvalidArgument("unknown problem '" + problem + "'");
  }
  if (method != "one-level" && method != "two-level") {
    throw InvalidArgument("method must be one-level or two-level");
  }
  flow().validate();
  newton().validate();
  for (const auto* sizes : {&h_list, &coarse_list}) {
    for (double s : *sizes) {
      if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("mesh sizes must be positive");
    }
    if (!strictly_decreasing(*sizes)) throw InvalidArgument("mesh sizes must be decreasing");
  }
  if (!(ratio >= 1.0)) throw InvalidArgument("ratio must be at least 1");
  if (quad_degree < 1 || quad_degree > kMaxQuadratureDegree) {
    throw InvalidArgument("quadrature degree outside [1, 20]");
  }
  if (workers < 0) throw InvalidArgument("workers must be nonnegative");
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  std::string section;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' && line.find('=') == std::string::npos) {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string full = section + "." + key;
    if (full == "problem.id") c.problem = as_string(value, full);
    else if (full == "problem.reynolds") c.reynolds = as_number(value, full);
    else if (full == "problem.rossby") c.rossby = as_number(value, full);
    else if (full == "mesh.h_list") c.h_list = as_list(value, full);
    else if (full == "mesh.coarse_list") c.coarse_list = as_list(value, full);
    else if (full == "mesh.ratio") c.ratio = as_number(value, full);
    else if (full == "solver.method") c.method = as_string(value, full);
    else if (full == "solver.quad_degree") c.quad_degree = as_int(value, full);
    else if (full == "solver.abs_tol") c.abs_tol = as_number(value, full);
    else if (full == "solver.rel_tol") c.rel_tol = as_number(value, full);
    else if (full == "solver.max_iters") c.max_iters = as_int(value, full);
    else if (full == "solver.workers") c.workers = as_int(value, full);
    else if (full == "output.out") c.out = as_string(value, full);
    else if (full == "output.gnuplot") c.gnuplot = as_bool(value, full);
    else if (full == "output.check") c.check = as_bool(value, full);
    else throw InvalidArgument("line " + std::to_string(lineno) + ": unknown key '" + full + "'");
  }
  return c;
}

std::string emit_config(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "[problem]\n"
     << "id = " << quoted(c.problem) << '\n'
     << "reynolds = " << real(c.reynolds) << '\n'
     << "rossby = " << real(c.rossby) << "\n\n"
     << "[mesh]\n"
     << "h_list = " << list(c.h_list) << '\n'
     << "coarse_list = " << list(c.coarse_list) << '\n'
     << "ratio = " << real(c.ratio) << "\n\n"
     << "[solver]\n"
     << "method = " << quoted(c.method) << '\n'
     << "quad_degree = " << c.quad_degree << '\n'
     << "abs_tol = " << real(c.abs_tol) << '\n'
     << "rel_tol = " << real(c.rel_tol) << '\n'
     << "max_iters = " << c.max_iters << '\n'
     << "workers = " << c.workers << "\n\n"
     << "[output]\n"
     << "out = " << quoted(c.out) << '\n'
     << "gnuplot = " << (c.gnuplot ? "true" : "false") << '\n'
     << "check = " << (c.check ? "true" : "false") << '\n';
  return os.str();
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

double parse_size(const std::string& token) {
  const std::string t = trim(token);
  const auto slash = t.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(t, &used);
      if (used == t.size() && v > 0.0 && std::isfinite(v)) return v;
    } else {
      const std::string num = trim(t.substr(0, slash)), den = trim(t.substr(slash + 1));
      std::size_t un = 0, ud = 0;
      const double a = std::stod(num, &un), b = std::stod(den, &ud);
      if (un == num.size() && ud == den.size() && a > 0.0 && b > 0.0 && std::isfinite(a / b)) {
        return a / b;
      }
    }
  } catch (const std::logic_error&) {
  }
  throw InvalidArgument("cannot parse size '" + token + "'");
}

std::vector<double> parse_size_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!trim(item).empty()) out.push_back(parse_size(item));
  }
  return out;
}

}  // namespace qge
